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

""" Coxeter transformation on dimension vectors.

Phi^-1 is the composition of the simple reflections s_i(d) = d - (d, i) i,
applied along the canonical order from sources to sinks; Phi applies them in
the reverse order. On dimension vectors of preprojectives Phi^-1 acts as the
inverse Auslander-Reiten translate, so "tau orbits" here are Phi orbits of
dimension vectors only.
"""

import collections
import logging
import math
from fractions import Fraction

import numpy as np

from quivex.common import constants as cons
from quivex.common import exception as excep
from quivex.core import forms
from quivex.core import quiver as quiver_mod
from quivex.core.quiver import DimVector
from quivex.spectral.certificate import perron_normalize
from quivex.stability import slope as slope_mod

LOG = logging.getLogger(__name__)

LimitDirection = collections.namedtuple('LimitDirection', ['scale', 'direction', 'normalized'])


def _path_counts(quiver, start, forward=True):
    """number of paths start ~> j (or j ~> start), by dynamic programming"""
    order = quiver.vertices if forward else tuple(reversed(quiver.vertices))
    counts = dict((v, 0) for v in quiver.vertices)
    counts[start] = 1
    for vertex in order:
        if not counts[vertex]:
            continue
        neighbours = quiver.graph.successors(vertex) if forward else quiver.graph.predecessors(vertex)
        for other in set(neighbours):
            if forward:
                mult = quiver.multiplicity(vertex, other)
            else:
                mult = quiver.multiplicity(other, vertex)
            counts[other] += mult * counts[vertex]
    return DimVector(counts[v] for v in quiver.vertices)


def proj_dims(quiver):
    """dim P_i for every vertex i in canonical order: paths starting in i"""
    return [_path_counts(quiver, v, forward=True) for v in quiver.vertices]


def inj_dims(quiver):
    """dim I_i for every vertex i in canonical order: paths ending in i"""
    return [_path_counts(quiver, v, forward=False) for v in quiver.vertices]


def reflection(quiver, vertex):
    """integer matrix of s_i(d) = d - (d, i) i"""
    n = quiver.n
    i = quiver.index[str(vertex)]
    matrix = [[int(r == c) for c in range(n)] for r in range(n)]
    for c in range(n):
        matrix[i][c] -= int(quiver.cartan[i, c])
    return matrix


def _matmul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return [[sum(a[r][k] * b[k][c] for k in range(m)) for c in range(p)] for r in range(n)]


def apply(matrix, d):
    """exact matrix-vector product with Python integers"""
    return tuple(sum(int(x) * int(y) for x, y in zip(row, d)) for row in matrix)


def _identity(n):
    return [[int(r == c) for c in range(n)] for r in range(n)]


class CoxeterData(object):
    """
    Phi, Phi^-1 (exact integer matrices), the spectral radius rho and the
    positive limit directions y_minus (growth of Phi^-n) and y_plus.
    """

    def __init__(self, quiver, phi, phi_inv, rho, y_minus, y_plus, kind):
        self.quiver = quiver
        self.phi = phi
        self.phi_inv = phi_inv
        self.rho = rho
        self.y_minus = y_minus
        self.y_plus = y_plus
        self.kind = kind

    def to_dict(self):
        return {
            'kind': self.kind,
            'phi': self.phi,
            'phi_inv': self.phi_inv,
            'rho': self.rho,
            'y_minus': [float(x) for x in self.y_minus],
            'y_plus': [float(x) for x in self.y_plus],
        }


def null_root(quiver):
    """
    Minimal positive integer vector spanning the kernel of the Cartan matrix
    of a connected extended Dynkin quiver, by exact elimination.
    """
    n = quiver.n
    rows = [[Fraction(int(x)) for x in row] for row in quiver.cartan.tolist()]
    pivots = []
    r = 0
    for c in range(n):
        pivot = next((k for k in range(r, n) if rows[k][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        rows[r] = [x / rows[r][c] for x in rows[r]]
        for k in range(n):
            if k != r and rows[k][c] != 0:
                factor = rows[k][c]
                rows[k] = [x - factor * y for x, y in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise excep.NotApplicable(what='null root', reason='kernel has dimension %d' % len(free))
    vector = [Fraction(0)] * n
    vector[free[0]] = Fraction(1)
    for k, c in enumerate(pivots):
        vector[c] = -rows[k][free[0]]
    denominator = math.lcm(*(x.denominator for x in vector))
    ints = [int(x * denominator) for x in vector]
    if sum(ints) < 0:
        ints = [-x for x in ints]
    divisor = math.gcd(*ints)
    return DimVector(x // divisor for x in ints)


def coxeter(quiver, tolerance=cons.TOLERANCE):
    """
    :param quiver: connected, non-Dynkin Quiver
    :return: CoxeterData
    """
    if not quiver_mod.is_connected(quiver):
        raise excep.Disconnected(components=len(quiver_mod.components(quiver)))
    kind = forms.quiver_type(quiver)
    if kind == cons.DYNKIN:
        raise excep.DynkinInput()
    n = quiver.n
    phi_inv = _identity(n)
    phi = _identity(n)
    for vertex in quiver.vertices:
        s = reflection(quiver, vertex)
        phi_inv = _matmul(s, phi_inv)
        phi = _matmul(phi, s)

    values, vectors = np.linalg.eig(np.array(phi, dtype=float))
    rho = float(np.max(np.abs(values)))
    if kind == cons.EXTENDED_DYNKIN:
        # eigenvalues are roots of unity; eig is inexact on the Jordan block at 1
        rho = 1.0
        root = np.array(null_root(quiver), dtype=float)
        y_minus = y_plus = root / root.min()
    else:
        y_minus = perron_normalize(np.real(vectors[:, int(np.argmin(np.abs(values - 1.0 / rho)))]))
        y_plus = perron_normalize(np.real(vectors[:, int(np.argmin(np.abs(values - rho)))]))
    if rho < 1 - tolerance:
        LOG.warning('spectral radius %r below 1', rho)
    LOG.debug('Coxeter data for %r: rho=%r', quiver, rho)
    return CoxeterData(quiver, phi, phi_inv, rho, y_minus, y_plus, kind)


def _orbit(matrix, start, n_max):
    result = [DimVector(start)]
    current = tuple(start)
    for _ in range(n_max):
        current = apply(matrix, current)
        if any(x < 0 for x in current) or not any(current):
            LOG.debug('orbit left the positive cone at %s', current)
            break
        result.append(DimVector(current))
    return result


def tau_orbit(quiver, vertex, n_max, data=None):
    """dim P_i, Phi^-1 dim P_i, ..., Phi^-n_max dim P_i (positive part)"""
    data = data or coxeter(quiver)
    start = proj_dims(quiver)[quiver.index[str(vertex)]]
    return _orbit(data.phi_inv, start, n_max)


def inj_orbit(quiver, vertex, n_max, data=None):
    """dim I_i, Phi dim I_i, ..., Phi^n_max dim I_i (positive part)"""
    data = data or coxeter(quiver)
    start = inj_dims(quiver)[quiver.index[str(vertex)]]
    return _orbit(data.phi, start, n_max)


def limit_direction(quiver, vertex, n_max, which='projective', data=None):
    """
    Normalized orbit vector (divided by rho^n, or by n for extended Dynkin
    quivers) and the fitted scale lambda with normalized ~ lambda y.
    :return: LimitDirection(scale, direction y, normalized orbit vector)
    """
    data = data or coxeter(quiver)
    if which == 'projective':
        orbit = tau_orbit(quiver, vertex, n_max, data)
        direction = data.y_minus if data.kind == cons.WILD else data.y_plus
    else:
        orbit = inj_orbit(quiver, vertex, n_max, data)
        direction = data.y_plus if data.kind == cons.WILD else data.y_minus
    k = len(orbit) - 1
    if data.kind == cons.WILD:
        normalized = np.array(orbit[-1], dtype=float) / data.rho ** k
    else:
        normalized = np.array(orbit[-1], dtype=float) / max(k, 1)
    direction = np.asarray(direction, dtype=float)
    scale = float(normalized.dot(direction) / direction.dot(direction))
    return LimitDirection(scale, direction, normalized)


def embedding_witness(quiver, d, n, data=None):
    """
    Sinks s with (Phi^n d)_s != 0, i.e. tau^-n P_s embeds into a
    preprojective of dimension vector d.
    """
    data = data or coxeter(quiver)
    current = tuple(d)
    for _ in range(n):
        current = apply(data.phi, current)
    return [s for s in quiver.sinks() if current[quiver.index[s]] != 0]


class SlopeConvergenceReport(object):
    """
    Slopes along the preprojective orbit of P_i and their distance to the
    slope of the limit direction y_minus.
    """

    def __init__(self, vertex, orbit, slopes, target, target_proxy, gaps, embedded_sinks=()):
        self.vertex = vertex
        self.orbit = orbit
        self.slopes = slopes
        self.target = target
        self.target_proxy = target_proxy
        self.gaps = gaps
        # sinks s with tau^-n P_s inside the last orbit member
        self.embedded_sinks = list(embedded_sinks)

    @property
    def ratios(self):
        return [b / a if a else None for a, b in zip(self.gaps, self.gaps[1:])]

    def strictly_decreasing(self, start=1):
        tail = self.gaps[start:]
        return all(b < a for a, b in zip(tail, tail[1:]))

    def rows(self):
        return [(k, v, float(s), float(g))
                for k, (v, s, g) in enumerate(zip(self.orbit, self.slopes, self.gaps))]

    def to_dict(self):
        return {
            'vertex': self.vertex,
            'target': self.target,
            'target_proxy': float(self.target_proxy),
            'embedded_sinks': self.embedded_sinks,
            'rows': [[k, list(v), s, g] for k, v, s, g in self.rows()],
        }


def slope_convergence_report(quiver, mu, vertex, n_max, data=None):
    """
    mu(Phi^-k dim P_i) for k = 0..n_max against mu(y_minus).

    The gaps are computed against mu of a far orbit member (exact rational),
    which agrees with mu(y_minus) far beyond double precision for wild
    quivers; for extended Dynkin quivers the exact null root is used.
    """
    data = data or coxeter(quiver)
    target = float(slope_mod.slope(mu, [Fraction(x) for x in data.y_minus])) \
        if data.kind == cons.WILD else None
    if data.kind == cons.WILD:
        far = tau_orbit(quiver, vertex, 3 * n_max + 30, data)
        target_proxy = slope_mod.slope(mu, far[-1])
    else:
        target_proxy = slope_mod.slope(mu, null_root(quiver))
        target = float(target_proxy)
    orbit = tau_orbit(quiver, vertex, n_max, data)
    slopes = [slope_mod.slope(mu, v) for v in orbit]
    gaps = [abs(s - target_proxy) for s in slopes]
    LOG.info('slope convergence for P_%s: final gap %s after %d steps', vertex,
             float(gaps[-1]), len(orbit) - 1)
    sinks = embedding_witness(quiver, orbit[-1], len(orbit) - 1, data)
    return SlopeConvergenceReport(str(vertex), orbit, slopes, target, target_proxy, gaps, sinks)
