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

""" General subrepresentations: decide e -> d ("every representation of
dimension vector d has a subrepresentation of dimension vector e") with the
recursive numerical criterion

    e -> d  iff  <e', d - e> >= 0 for all e' -> e

The recursion on e never looks at d, so the sets Sub(e) = {e' <= e : e' -> e}
are memoized per quiver and shared by all queries.
"""

import logging

from quivex.common import constants as cons
from quivex.common import exception as excep
from quivex.core import lattice
from quivex.core.quiver import DimVector

LOG = logging.getLogger(__name__)


class EmbedCache(object):
    """
    Memo table e -> frozenset Sub(e) for one quiver.

    Entries are only stored once complete and are never mutated, so
    concurrent readers see either no entry or the final one. Two threads may
    compute the same entry; both results are identical.
    """

    def __init__(self, quiver, budget=cons.LATTICE_BUDGET):
        self.quiver = quiver
        self.budget = budget
        self.table = {}
        self._euler = quiver.euler.tolist()

    def __len__(self):
        return len(self.table)

    def __contains__(self, e):
        return tuple(e) in self.table

    def _weights(self, x):
        """w with <e', x> = sum_i e'_i w_i"""
        n = len(x)
        return [sum(self._euler[i][j] * x[j] for j in range(n)) for i in range(n)]

    def _passes(self, sub_of_e, e, d):
        """min over e' in Sub(e) of <e', d - e> >= 0, with early exit"""
        weights = self._weights([a - b for a, b in zip(d, e)])
        for e_prime in sub_of_e:
            if sum(a * w for a, w in zip(e_prime, weights)) < 0:
                return False
        return True

    def sub(self, e):
        """
        Sub(e) as a frozenset of DimVector; always holds 0 and e.
        :param e: DimVector
        """
        e = DimVector(e)
        cached = self.table.get(e)
        if cached is not None:
            return cached
        lattice.check_budget(e, self.budget)
        members = []
        for e_prime in lattice.box(e, self.budget):
            if e_prime.is_zero() or e_prime == e:
                members.append(e_prime)
            elif self._passes(self.sub(e_prime), e_prime, e):
                members.append(e_prime)
        result = frozenset(members)
        self.table[e] = result
        LOG.debug('Sub%s has %d members (cache size %d)', e, len(result), len(self.table))
        return result

    def embeds(self, e, d):
        e = DimVector(e)
        d = DimVector(d)
        if not e.le(d):
            raise excep.NotBelow(e=e, d=d)
        if e.is_zero() or e == d:
            return True
        # sorted scan keeps the early exit order reproducible
        return self._passes(sorted(self.sub(e)), e, d)


def cache_for(quiver, cache, budget):
    if cache is None:
        return EmbedCache(quiver, budget=budget)
    if cache.quiver != quiver:
        raise excep.MalformedInput(reason='embed cache belongs to another quiver')
    return cache


def embeds(quiver, e, d, cache=None, budget=cons.LATTICE_BUDGET):
    """
    Decide e -> d.
    :param quiver: Quiver
    :param e: DimVector with e <= d
    :param d: DimVector
    :param cache: EmbedCache of this quiver, a fresh one when None
    :param budget: lattice points allowed per box when no cache is given
    """
    quiver.check_index(e)
    quiver.check_index(d)
    return cache_for(quiver, cache, budget).embeds(e, d)


def general_subreps(quiver, d, cache=None, budget=cons.LATTICE_BUDGET):
    """
    {e : 0 <= e <= d, e -> d}, as a sorted list of DimVector
    """
    quiver.check_index(d)
    d = DimVector(d)
    cache = cache_for(quiver, cache, budget)
    lattice.check_budget(d, cache.budget)
    return [e for e in lattice.box(d, cache.budget) if cache.embeds(e, d)]
