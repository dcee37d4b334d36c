# Copyright 2026 quivex project team.
# All rights reserved.
#
#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

""" Linear algebra over a prime field F_p on numpy integer arrays """

import itertools

import numpy as np

from quivex.common import exception as excep


def is_prime(p):
    if isinstance(p, bool) or int(p) != p or p < 2:
        return False
    p = int(p)
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    factor = 3
    while factor * factor <= p:
        if p % factor == 0:
            return False
        factor += 2
    return True


def check_prime(p):
    if not is_prime(p):
        raise excep.NotPrime(p=p)
    return int(p)


def gaussian_binomial(n, k, p):
    """number of k-dimensional subspaces of F_p^n"""
    if k < 0 or k > n:
        return 0
    num = 1
    denom = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        denom *= p ** (i + 1) - 1
    return num // denom


def rref(matrix, p):
    """
    Reduced row echelon form over F_p.
    :return: (reduced matrix without zero rows, pivot columns)
    """
    work = np.array(matrix, dtype=np.int64) % p
    if work.ndim != 2:
        raise excep.MalformedInput(reason='expected a matrix, got shape %s' % (work.shape,))
    rows, cols = work.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nonzero = np.nonzero(work[r:, c])[0]
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            work[[r, pivot], :] = work[[pivot, r], :]
        work[r] = work[r] * pow(int(work[r, c]), -1, p) % p
        for other in range(rows):
            if other != r and work[other, c]:
                work[other] = (work[other] - work[other, c] * work[r]) % p
        pivots.append(c)
        r += 1
    return work[:r], pivots


def rank(matrix, p):
    if np.size(matrix) == 0:
        return 0
    return len(rref(matrix, p)[1])


def _rows(rows, n):
    rows = np.asarray(rows, dtype=np.int64)
    if rows.size == 0:
        return np.zeros((0, n), dtype=np.int64)
    return rows.reshape(-1, n)


def span(rows, n, p):
    """echelon basis (k x n) of the span of some row vectors"""
    rows = _rows(rows, n)
    if rows.shape[0] == 0:
        return rows
    return rref(rows, p)[0]


def contains(basis, vectors, p):
    """whether the row span of basis contains every row of vectors"""
    vectors = np.asarray(vectors, dtype=np.int64)
    if vectors.size == 0:
        return True
    n = vectors.shape[-1]
    basis = _rows(basis, n)
    if basis.shape[0] == 0:
        return not np.any(vectors % p)
    return rank(np.vstack([basis, vectors.reshape(-1, n)]), p) == rank(basis, p)


def echelon_subspaces(n, k, p, columns=None):
    """
    Every k-dimensional subspace of F_p^n exactly once, as its reduced row
    echelon basis (k x n array). With columns given, only the coordinates in
    columns are used (subspaces of the coordinate subspace they span).
    """
    columns = list(range(n)) if columns is None else list(columns)
    if k < 0 or k > len(columns):
        return
    for pivots in itertools.combinations(range(len(columns)), k):
        free = [(r, c) for r, pc in enumerate(pivots)
                for c in range(pc + 1, len(columns)) if c not in pivots]
        for values in itertools.product(range(p), repeat=len(free)):
            basis = np.zeros((k, n), dtype=np.int64)
            for r, pc in enumerate(pivots):
                basis[r, columns[pc]] = 1
            for (r, c), value in zip(free, values):
                basis[r, columns[c]] = value
            yield basis


def complement_columns(basis, n, p):
    """coordinates of the standard vectors spanning a complement of the row span"""
    basis = _rows(basis, n)
    pivots = rref(basis, p)[1] if basis.shape[0] else []
    return [c for c in range(n) if c not in pivots]


def supersets(basis, n, k, p):
    """every k-dimensional subspace containing the row span of basis"""
    basis = span(basis, n, p)
    w = basis.shape[0]
    for extra in echelon_subspaces(n, k - w, p, complement_columns(basis, n, p)):
        yield np.vstack([basis, extra])


def count_supersets(w, n, k, p):
    return gaussian_binomial(n - w, k - w, p)


def image(matrix, basis, p):
    """rows spanning V_alpha(U) for U the row span of basis; matrix is target x source"""
    matrix = np.asarray(matrix, dtype=np.int64)
    basis = np.asarray(basis, dtype=np.int64)
    if basis.shape[0] == 0:
        return np.zeros((0, matrix.shape[0]), dtype=np.int64)
    return basis.dot(matrix.T) % p
