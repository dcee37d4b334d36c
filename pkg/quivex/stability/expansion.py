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

""" Expansion coefficients and the numerical expander criterion.

For 0 < delta < 1 the coefficients are

    eps_opt(delta) = min{ mu(d) - mu(e) : 0 != e -> d,           kappa(e) <= delta kappa(d) }
    eps_eff(delta) = min{ mu(d) - mu(e) : 0 != e <= d, <e,d-e> >= 0, kappa(e) <= delta kappa(d) }

A (delta, eps)-expander of dimension vector d exists iff mu(e) <= mu(d) - eps
for every feasible e of eps_opt, i.e. iff eps <= eps_opt(delta).
"""

import bisect
import collections
import logging
from fractions import Fraction

from quivex.common import constants as cons
from quivex.common import exception as excep
from quivex.core import forms
from quivex.core import lattice
from quivex.core.quiver import DimVector
from quivex.oracle import subrep
from quivex.stability import slope as slope_mod

LOG = logging.getLogger(__name__)

ExpanderVerdict = collections.namedtuple('ExpanderVerdict', ['exists', 'witness'])
ScanResult = collections.namedtuple('ScanResult', ['ks', 'values', 'running_min'])


class EpsilonResult(object):
    """
    Value of a constrained minimum, or Unconstrained when the feasible set is
    empty. Unconstrained compares as +infinity.
    """

    def __init__(self, value=None, witness=None):
        if (value is None) != (witness is None):
            raise ValueError('value and witness are given together')
        self.value = None if value is None else Fraction(value)
        self.witness = witness

    @classmethod
    def unconstrained(cls):
        return cls()

    @property
    def constrained(self):
        return self.value is not None

    def sort_key(self):
        if self.value is None:
            return (1, Fraction(0))
        return (0, self.value)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other):
        return self.sort_key() > other.sort_key()

    def __ge__(self, other):
        return self.sort_key() >= other.sort_key()

    def __eq__(self, other):
        if not isinstance(other, EpsilonResult):
            return NotImplemented
        return self.value == other.value and self.witness == other.witness

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.value, self.witness))

    def __str__(self):
        if self.value is None:
            return cons.UNCONSTRAINED
        return '%s witness %s' % (self.value, self.witness)

    def __repr__(self):
        return 'EpsilonResult(%s)' % self


def _check_delta(delta):
    delta = Fraction(delta)
    if not 0 < delta < 1:
        raise excep.OutOfRange(name='delta', value=delta, allowed='(0, 1)')
    return delta


def _check_d(quiver, mu, d):
    quiver.check_index(d)
    if len(mu) != quiver.n:
        raise excep.IndexMismatch(got=len(mu), expected=quiver.n)
    d = DimVector(d)
    if d.is_zero():
        raise excep.ZeroVector(what='expansion coefficient')
    return d


def _candidates(quiver, mu, d, delta, budget):
    """nonzero e <= d with kappa(e) <= delta kappa(d), lexicographic"""
    cap = delta * mu.kappa_of(d)
    for e in lattice.box(d, budget):
        if e.is_zero():
            continue
        if mu.kappa_of(e) <= cap:
            yield e


def _minimize(mu, d, feasible):
    target = slope_mod.slope(mu, d)
    best = None
    witness = None
    for e in feasible:
        gap = target - slope_mod.slope(mu, e)
        # strict comparison keeps the lexicographically smallest minimizer
        if best is None or gap < best:
            best, witness = gap, e
    if best is None:
        return EpsilonResult.unconstrained()
    return EpsilonResult(best, witness)


def epsilon_eff(quiver, mu, d, delta, budget=cons.LATTICE_BUDGET):
    """
    eps_eff(delta) by exhaustive enumeration of the box [0, d]
    :param quiver: Quiver
    :param mu: SlopeFunction
    :param d: nonzero DimVector
    :param delta: rational in (0, 1)
    :return: EpsilonResult
    """
    d = _check_d(quiver, mu, d)
    delta = _check_delta(delta)
    euler = quiver.euler

    def feasible():
        for e in _candidates(quiver, mu, d, delta, budget):
            if forms.bilinear(euler, e, d.minus(e)) >= 0:
                yield e

    result = _minimize(mu, d, feasible())
    LOG.debug('eps_eff(%s, %s) = %s', d, delta, result)
    return result


def epsilon_opt(quiver, mu, d, delta, cache=None, budget=cons.LATTICE_BUDGET):
    """
    eps_opt(delta), the feasibility test being e -> d
    :param cache: EmbedCache for the quiver
    :return: EpsilonResult
    """
    d = _check_d(quiver, mu, d)
    delta = _check_delta(delta)
    cache = subrep.cache_for(quiver, cache, budget)
    result = _minimize(mu, d, (e for e in _candidates(quiver, mu, d, delta, budget) if cache.embeds(e, d)))
    LOG.debug('eps_opt(%s, %s) = %s', d, delta, result)
    return result


def epsilon(quiver, mu, d, delta, which=cons.EPS_EFF, cache=None, budget=cons.LATTICE_BUDGET):
    if which == cons.EPS_EFF:
        return epsilon_eff(quiver, mu, d, delta, budget=budget)
    if which == cons.EPS_OPT:
        return epsilon_opt(quiver, mu, d, delta, cache=cache, budget=budget)
    raise excep.OutOfRange(name='which', value=which, allowed='/'.join(cons.EPS_KINDS))


def epsilon_profile(quiver, mu, d, deltas, which=cons.EPS_EFF, cache=None, budget=cons.LATTICE_BUDGET):
    """
    eps over a grid of deltas, in grid order. The box [0, d] is walked once
    for the whole grid; every entry equals the single-delta value.
    """
    d = _check_d(quiver, mu, d)
    deltas = [_check_delta(delta) for delta in deltas]
    if which == cons.EPS_OPT:
        cache = subrep.cache_for(quiver, cache, budget)

        def feasible(e):
            return cache.embeds(e, d)
    elif which == cons.EPS_EFF:
        euler = quiver.euler

        def feasible(e):
            return forms.bilinear(euler, e, [a - b for a, b in zip(d, e)]) >= 0
    else:
        raise excep.OutOfRange(name='which', value=which, allowed='/'.join(cons.EPS_KINDS))
    if not deltas:
        return []

    order = sorted(range(len(deltas)), key=lambda i: deltas[i])
    grid = [deltas[i] for i in order]
    kappa_d = mu.kappa_of(d)
    target = slope_mod.slope(mu, d)
    best = [None] * len(grid)
    witness = [None] * len(grid)
    for e in lattice.box(d, budget):
        if e.is_zero():
            continue
        # e is a candidate for every delta >= kappa(e) / kappa(d)
        kappa_e = mu.kappa_of(e)
        start = bisect.bisect_left(grid, kappa_e / kappa_d)
        if start == len(grid) or not feasible(e):
            continue
        gap = target - mu.theta_of(e) / kappa_e
        for i in range(start, len(grid)):
            if best[i] is None or gap < best[i]:
                best[i], witness[i] = gap, e
    result = [None] * len(grid)
    for i, position in enumerate(order):
        result[position] = (EpsilonResult.unconstrained() if best[i] is None
                            else EpsilonResult(best[i], witness[i]))
    LOG.debug('%s profile of %s over %d deltas', which, d, len(grid))
    return result


def expander_exists(quiver, mu, d, delta, eps, cache=None, budget=cons.LATTICE_BUDGET):
    """
    Whether a (delta, eps)-expander of dimension vector d exists: every
    0 != e -> d with kappa(e) <= delta kappa(d) has mu(e) <= mu(d) - eps.
    :return: ExpanderVerdict(exists, witness); witness is the first violating e
    """
    d = _check_d(quiver, mu, d)
    delta = _check_delta(delta)
    eps = Fraction(eps)
    if eps <= 0:
        raise excep.OutOfRange(name='eps', value=eps, allowed='(0, inf)')
    cache = subrep.cache_for(quiver, cache, budget)
    bound = slope_mod.slope(mu, d) - eps
    for e in _candidates(quiver, mu, d, delta, budget):
        if slope_mod.slope(mu, e) > bound and cache.embeds(e, d):
            LOG.debug('no (%s, %s)-expander in %s: violated by %s', delta, eps, d, e)
            return ExpanderVerdict(False, e)
    return ExpanderVerdict(True, None)


def uniform_scan(quiver, mu, d, delta, k_max, which=cons.EPS_EFF, cache=None, budget=cons.LATTICE_BUDGET):
    """
    eps_{k d}(delta) for k = 1..k_max and its running minimum, a finite
    stand-in for the liminf over k.
    :return: ScanResult(ks, values, running_min)
    """
    d = _check_d(quiver, mu, d)
    _check_delta(delta)
    if k_max < 0:
        raise excep.OutOfRange(name='k_max', value=k_max, allowed='[0, inf)')
    if which == cons.EPS_OPT:
        cache = subrep.cache_for(quiver, cache, budget)
    ks, values, running = [], [], []
    current = EpsilonResult.unconstrained()
    for k in range(1, k_max + 1):
        value = epsilon(quiver, mu, d.scale(k), delta, which, cache, budget)
        current = min(current, value)
        ks.append(k)
        values.append(value)
        running.append(current)
        LOG.info('scan k=%d delta=%s: %s (running min %s)', k, delta, value,
                 current.value if current.constrained else cons.UNCONSTRAINED)
    return ScanResult(ks, values, running)


def stability_check(quiver, mu, d, cache=None, budget=cons.LATTICE_BUDGET):
    """
    Whether a general representation of dimension vector d is mu-stable:
    mu(e) < mu(d) for every 0 != e -> d, e != d.
    :return: ExpanderVerdict(stable, first violating e)
    """
    d = _check_d(quiver, mu, d)
    cache = subrep.cache_for(quiver, cache, budget)
    target = slope_mod.slope(mu, d)
    for e in lattice.box(d, budget):
        if e.is_zero() or e == d:
            continue
        if slope_mod.slope(mu, e) >= target and cache.embeds(e, d):
            return ExpanderVerdict(False, e)
    return ExpanderVerdict(True, None)
