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

""" Random representations over F_p and exhaustive subrepresentation search.

Everything in this module is empirical: a subrepresentation found over F_p
is a real one, but a generic representation over the algebraic closure may
have subrepresentations without F_p-rational points and vice versa.
"""

import collections
import logging
from fractions import Fraction

import numpy as np

from quivex.common import constants as cons
from quivex.common import exception as excep
from quivex.core import lattice
from quivex.core.quiver import DimVector
from quivex.oracle import subrep
from quivex.sampler import fields
from quivex.stability import slope as slope_mod

LOG = logging.getLogger(__name__)

SubrepSearch = collections.namedtuple('SubrepSearch', ['found', 'witness'])
EmpiricalVerdict = collections.namedtuple('EmpiricalVerdict', ['passed', 'witness', 'label'])


class FiniteFieldRep(object):
    """
    A representation of a quiver over F_p: the space F_p^{d_i} at every
    vertex and a (d_target x d_source) matrix for every arrow, arrows in the
    canonical order of quiver.arrows.
    """

    def __init__(self, quiver, p, spaces, maps):
        self.quiver = quiver
        self.p = fields.check_prime(p)
        quiver.check_index(spaces)
        self.spaces = DimVector(spaces)
        if len(maps) != len(quiver.arrows):
            raise excep.MalformedInput(reason='%d maps for %d arrows' % (len(maps), len(quiver.arrows)))
        self.maps = []
        for (source, target), matrix in zip(quiver.arrows, maps):
            matrix = np.asarray(matrix, dtype=np.int64)
            shape = (self.dim(target), self.dim(source))
            if matrix.shape != shape:
                raise excep.MalformedInput(
                    reason='map %s->%s has shape %s, expected %s' % (source, target, matrix.shape, shape))
            if np.any(matrix < 0) or np.any(matrix >= self.p):
                raise excep.MalformedInput(reason='map %s->%s is not reduced modulo %d' % (source, target, self.p))
            self.maps.append(matrix)

    def dim(self, vertex):
        return self.spaces[self.quiver.index[vertex]]

    def incoming(self, vertex):
        """(source, matrix) for every arrow ending in vertex"""
        return [(source, matrix) for (source, target), matrix in zip(self.quiver.arrows, self.maps)
                if target == vertex]

    def to_dict(self):
        return {
            'p': self.p,
            'dim_vector': list(self.spaces),
            'maps': [[s, t, m.tolist()] for (s, t), m in zip(self.quiver.arrows, self.maps)],
        }


def sample_rep(quiver, d, p, seed):
    """
    Uniformly random maps from a seeded generator; identical seeds give
    identical representations.
    """
    p = fields.check_prime(p)
    quiver.check_index(d)
    d = DimVector(d)
    rng = np.random.default_rng(seed)
    maps = []
    for source, target in quiver.arrows:
        shape = (d[quiver.index[target]], d[quiver.index[source]])
        maps.append(rng.integers(0, p, size=shape, dtype=np.int64))
    return FiniteFieldRep(quiver, p, d, maps)


def search_size(rep, e):
    """
    Number of subspace tuples the search may visit: Gaussian binomials over
    the non-sink vertices. At a sink the choice is settled by a rank test.
    """
    sinks = set(rep.quiver.sinks())
    size = 1
    for vertex, d_i, e_i in zip(rep.quiver.vertices, rep.spaces, e):
        if vertex not in sinks:
            size *= fields.gaussian_binomial(d_i, e_i, rep.p)
    return size


def is_subrepresentation(rep, witness):
    """direct check V_alpha(U_i) within U_j for every arrow i -> j"""
    quiver = rep.quiver
    for (source, target), matrix in zip(quiver.arrows, rep.maps):
        images = fields.image(matrix, witness[quiver.index[source]], rep.p)
        if not fields.contains(witness[quiver.index[target]], images, rep.p):
            return False
    return True


def has_subrep(rep, e, budget=cons.SUBSPACE_BUDGET):
    """
    Exhaustive search for subspaces U_i of dimension e_i with V_alpha(U_i)
    inside U_j for every arrow, over reduced echelon representatives.
    :return: SubrepSearch(found, witness); witness is a tuple of echelon bases
        in canonical vertex order
    """
    quiver = rep.quiver
    quiver.check_index(e)
    e = DimVector(e)
    if not e.le(rep.spaces):
        raise excep.NotBelow(e=e, d=rep.spaces)
    size = search_size(rep, e)
    if budget is not None and size > budget:
        raise excep.BudgetExceeded(what='subspace tuples of dimension %s in %s' % (e, rep.spaces),
                                   size=size, budget=budget)
    sinks = set(quiver.sinks())
    p = rep.p
    chosen = {}

    def search(position):
        if position == quiver.n:
            return True
        vertex = quiver.vertices[position]
        n, k = rep.dim(vertex), e[position]
        images = [fields.image(matrix, chosen[source], p) for source, matrix in rep.incoming(vertex)]
        required = fields.span(np.vstack(images) if images else np.zeros((0, n), dtype=np.int64), n, p)
        if required.shape[0] > k:
            return False
        candidates = fields.supersets(required, n, k, p)
        if vertex in sinks:
            candidates = [next(candidates)]
        for basis in candidates:
            chosen[vertex] = basis
            if search(position + 1):
                return True
        chosen.pop(vertex, None)
        return False

    if not search(0):
        return SubrepSearch(False, None)
    witness = tuple(chosen[v] for v in quiver.vertices)
    if not is_subrepresentation(rep, witness):
        LOG.error('search returned a non-invariant subspace tuple for %s', e)
        return SubrepSearch(False, None)
    return SubrepSearch(True, witness)


def all_subrep_dims(rep, budget=cons.SUBSPACE_BUDGET):
    """every e <= dim V realized by some subrepresentation"""
    return set(e for e in lattice.box(rep.spaces) if has_subrep(rep, e, budget).found)


def empirical_expander_check(rep, mu, delta, eps, budget=cons.SUBSPACE_BUDGET):
    """
    Whether V is a (delta, eps)-expander as far as its F_p-rational
    subrepresentations show: fail iff some subrepresentation of dimension
    e != 0 with kappa(e) <= delta kappa(d) has mu(e) > mu(d) - eps.
    :return: EmpiricalVerdict(passed, first violating e, 'empirical')
    """
    d = rep.spaces
    if d.is_zero():
        raise excep.ZeroVector(what='expander check')
    delta, eps = Fraction(delta), Fraction(eps)
    if not 0 < delta < 1:
        raise excep.OutOfRange(name='delta', value=delta, allowed='(0, 1)')
    if eps <= 0:
        raise excep.OutOfRange(name='eps', value=eps, allowed='(0, inf)')
    bound = slope_mod.slope(mu, d) - eps
    cap = delta * mu.kappa_of(d)
    for e in lattice.box(d):
        if e.is_zero() or mu.kappa_of(e) > cap:
            continue
        if slope_mod.slope(mu, e) > bound and has_subrep(rep, e, budget).found:
            return EmpiricalVerdict(False, e, cons.LABEL_EMPIRICAL)
    return EmpiricalVerdict(True, None, cons.LABEL_EMPIRICAL)


class GenericityReport(object):
    """
    For every e <= d: whether e -> d holds exactly and in how many seeded
    samples over F_p a subrepresentation of dimension e was found.
    """
    label = cons.LABEL_EMPIRICAL

    def __init__(self, d, p, seeds, rows):
        self.d = d
        self.p = p
        self.seeds = list(seeds)
        self.rows = rows

    def hits(self, e):
        for row in self.rows:
            if row[0] == e:
                return row[2]
        raise KeyError(e)

    def to_dict(self):
        return {
            'label': self.label,
            'dim_vector': list(self.d),
            'p': self.p,
            'seeds': self.seeds,
            'rows': [{'e': list(e), 'general': general, 'hits': hits, 'samples': total}
                     for e, general, hits, total in self.rows],
        }


def genericity_report(quiver, d, p=cons.DEFAULT_PRIME, seeds=range(cons.DEFAULT_SAMPLES),
                      budget=cons.SUBSPACE_BUDGET, cache=None):
    d = quiver.dim_vector(d)
    cache = subrep.cache_for(quiver, cache, cons.LATTICE_BUDGET)
    seeds = list(seeds)
    reps = [sample_rep(quiver, d, p, seed) for seed in seeds]
    rows = []
    for e in lattice.box(d):
        hits = sum(1 for rep in reps if has_subrep(rep, e, budget).found)
        rows.append((e, cache.embeds(e, d), hits, len(reps)))
        LOG.debug('genericity %s in %s: %d/%d', e, d, hits, len(reps))
    return GenericityReport(d, fields.check_prime(p), seeds, rows)
