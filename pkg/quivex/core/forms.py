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

""" Euler form, its symmetrization and antisymmetrization, and the exact
Dynkin / extended Dynkin / wild classification """

import collections
import logging
from fractions import Fraction

from quivex.common import constants as cons
from quivex.core import quiver as quiver_mod

LOG = logging.getLogger(__name__)

Classification = collections.namedtuple('Classification', ['vertices', 'kind', 'nullity'])


def bilinear(matrix, d, e):
    """
    exact value of d^T M e; entries of d and e may be ints, Fractions or floats
    """
    n = len(matrix)
    total = 0
    for i in range(n):
        if not d[i]:
            continue
        row = matrix[i]
        for j in range(n):
            if row[j] and e[j]:
                total += d[i] * int(row[j]) * e[j]
    return total


def euler_form(quiver, d, e):
    """
    <d, e> = sum_i d_i e_i - sum_{a: i -> j} d_i e_j
    :param quiver: Quiver
    :param d: integer vector in canonical order, negative entries allowed
    :param e: integer vector in canonical order
    """
    quiver.check_index(d)
    quiver.check_index(e)
    return bilinear(quiver.euler, d, e)


def sym_form(quiver, d, e):
    """(d, e) = <d, e> + <e, d>, without a factor 1/2"""
    quiver.check_index(d)
    quiver.check_index(e)
    return bilinear(quiver.cartan, d, e)


def antisym_form(quiver, d, e):
    """{d, e} = <d, e> - <e, d>"""
    return euler_form(quiver, d, e) - euler_form(quiver, e, d)


def sym_with_units(quiver, d):
    """the vector ((d, i))_i, exact"""
    quiver.check_index(d)
    return tuple(bilinear(quiver.cartan, d, quiver.unit(v)) for v in quiver.vertices)


def definiteness(matrix):
    """
    Exact definiteness of a symmetric integer matrix via a diagonally
    pivoted LDL^T decomposition over the rationals.

    :return: ('definite' | 'semidefinite' | 'indefinite', nullity); nullity is
        only meaningful for the first two
    """
    work = [[Fraction(int(x)) for x in row] for row in matrix]
    nullity = 0
    while work:
        size = len(work)
        diagonal = [work[i][i] for i in range(size)]
        if any(x < 0 for x in diagonal):
            return 'indefinite', None
        pivot = max(range(size), key=lambda i: diagonal[i])
        if diagonal[pivot] == 0:
            # zero diagonal: any nonzero off-diagonal entry gives a 2x2 minor -b^2 < 0
            if any(work[i][j] for i in range(size) for j in range(size)):
                return 'indefinite', None
            nullity += size
            break
        p = work[pivot][pivot]
        rest = [i for i in range(size) if i != pivot]
        column = [work[i][pivot] for i in rest]
        work = [[work[i][j] - column[a] * column[b] / p for b, j in enumerate(rest)]
                for a, i in enumerate(rest)]
    if nullity:
        return 'semidefinite', nullity
    return 'definite', 0


def classify_connected(quiver):
    """type of a connected quiver by the definiteness of its Cartan matrix"""
    kind, nullity = definiteness(quiver.cartan.tolist())
    if kind == 'definite':
        return cons.DYNKIN, 0
    if kind == 'semidefinite':
        return cons.EXTENDED_DYNKIN, nullity
    return cons.WILD, None


def classify(quiver):
    """
    Classify every connected component of a quiver.
    :return: list of Classification(vertices, kind, nullity) in canonical order
    """
    result = []
    for part in quiver_mod.components(quiver):
        kind, nullity = classify_connected(part)
        LOG.debug('component %s is %s', ' '.join(part.vertices), kind)
        result.append(Classification(part.vertices, kind, nullity))
    return result


def quiver_type(quiver):
    """type of a connected quiver; the most wild component type otherwise"""
    kinds = [c.kind for c in classify(quiver)]
    for kind in (cons.WILD, cons.EXTENDED_DYNKIN, cons.DYNKIN):
        if kind in kinds:
            return kind
    return cons.DYNKIN
