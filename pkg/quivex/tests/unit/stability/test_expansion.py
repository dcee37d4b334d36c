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

""" Test expansion coefficients """

import random
import unittest
from fractions import Fraction

from quivex.common import constants as cons
from quivex.common import exception as excep
from quivex.core import lattice
from quivex.core import quiver as quiver_mod
from quivex.oracle import subrep
from quivex.stability import expansion
from quivex.stability import slope
from quivex.tests.unit.quivers import random_quiver

DELTAS = [Fraction(k, 10) for k in range(1, 10)]


def random_slope(rng, n):
    return slope.SlopeFunction([rng.randint(-5, 5) for _ in range(n)], [rng.randint(1, 4) for _ in range(n)])


class TestEpsilon(unittest.TestCase):

    def setUp(self):
        self.k3 = quiver_mod.kronecker_quiver(3)
        self.mu = slope.slope_from_d(self.k3, (1, 1))

    def test_eff(self):
        result = expansion.epsilon_eff(self.k3, self.mu, (1, 1), Fraction(1, 2))
        self.assertEqual(Fraction(3), result.value)
        self.assertEqual((0, 1), result.witness)
        self.assertEqual('3 witness (0,1)', str(result))

    def test_unconstrained(self):
        result = expansion.epsilon_eff(self.k3, self.mu, (1, 1), Fraction(1, 4))
        self.assertFalse(result.constrained)
        self.assertEqual(cons.UNCONSTRAINED, str(result))
        self.assertTrue(result > expansion.EpsilonResult(100, (0, 1)))

    def test_eff_smallest_witness(self):
        result = expansion.epsilon_eff(self.k3, self.mu, (2, 2), Fraction(1, 2))
        self.assertEqual(Fraction(3), result.value)
        self.assertEqual((0, 1), result.witness)

    def test_opt(self):
        result = expansion.epsilon_opt(self.k3, self.mu, (1, 1), Fraction(1, 2))
        self.assertEqual(Fraction(3), result.value)
        self.assertRaises(excep.ZeroVector, expansion.epsilon_opt, self.k3, self.mu, (0, 0), Fraction(1, 2))

    def test_delta_range(self):
        for delta in (0, 1, Fraction(3, 2)):
            self.assertRaises(excep.OutOfRange, expansion.epsilon_eff, self.k3, self.mu, (1, 1), delta)
        self.assertRaises(excep.OutOfRange, expansion.epsilon, self.k3, self.mu, (1, 1), Fraction(1, 2), 'best')

    def test_profile(self):
        values = expansion.epsilon_profile(self.k3, self.mu, (1, 1), [Fraction(1, 4), Fraction(1, 2)],
                                           cons.EPS_OPT)
        self.assertEqual([None, Fraction(3)], [v.value for v in values])

    def test_slope_shift_invariance(self):
        shifted = slope.normalize_slope(self.mu, 2, 5)
        for delta in DELTAS:
            self.assertEqual(expansion.epsilon_eff(self.k3, self.mu, (2, 2), delta),
                             expansion.epsilon_eff(self.k3, shifted, (2, 2), delta))

    def test_eff_below_opt_on_random_quivers(self):
        rng = random.Random(7)
        for _ in range(200):
            quiver = random_quiver(rng)
            cache = subrep.EmbedCache(quiver)
            mu = random_slope(rng, quiver.n)
            for d in lattice.box((3,) * quiver.n):
                if d.is_zero():
                    continue
                effs = expansion.epsilon_profile(quiver, mu, d, DELTAS, cons.EPS_EFF)
                opts = expansion.epsilon_profile(quiver, mu, d, DELTAS, cons.EPS_OPT, cache)
                for delta, eff, opt in zip(DELTAS, effs, opts):
                    self.assertLessEqual(eff, opt, '%r d=%s delta=%s' % (quiver, d, delta))

    def test_profile_matches_single_delta(self):
        rng = random.Random(12)
        deltas = [Fraction(3, 4), Fraction(1, 10), Fraction(1, 2), Fraction(3, 4), Fraction(1, 3)]
        for _ in range(25):
            quiver = random_quiver(rng)
            cache = subrep.EmbedCache(quiver)
            mu = random_slope(rng, quiver.n)
            d = quiver.dim_vector([rng.randint(1, 3) for _ in range(quiver.n)])
            for which in cons.EPS_KINDS:
                profile = expansion.epsilon_profile(quiver, mu, d, deltas, which, cache)
                self.assertEqual([expansion.epsilon(quiver, mu, d, delta, which, cache) for delta in deltas], profile)

    def test_monotone_in_delta(self):
        rng = random.Random(3)
        for _ in range(40):
            quiver = random_quiver(rng)
            cache = subrep.EmbedCache(quiver)
            mu = random_slope(rng, quiver.n)
            d = quiver.dim_vector([rng.randint(0, 3) for _ in range(quiver.n - 1)] + [rng.randint(1, 3)])
            for which in cons.EPS_KINDS:
                values = expansion.epsilon_profile(quiver, mu, d, DELTAS, which, cache)
                for larger, smaller in zip(values, values[1:]):
                    self.assertGreaterEqual(larger, smaller)


class TestExpander(unittest.TestCase):

    def setUp(self):
        self.k3 = quiver_mod.kronecker_quiver(3)
        self.mu = slope.slope_from_d(self.k3, (1, 1))

    def test_exists(self):
        verdict = expansion.expander_exists(self.k3, self.mu, (1, 1), Fraction(1, 2), 3)
        self.assertEqual(expansion.ExpanderVerdict(True, None), verdict)
        verdict = expansion.expander_exists(self.k3, self.mu, (1, 1), Fraction(1, 2), Fraction(7, 2))
        self.assertEqual(expansion.ExpanderVerdict(False, (0, 1)), verdict)

    def test_exists_when_unconstrained(self):
        verdict = expansion.expander_exists(self.k3, self.mu, (1, 1), Fraction(1, 4), 1000)
        self.assertTrue(verdict.exists)

    def test_eps_positive(self):
        self.assertRaises(excep.OutOfRange, expansion.expander_exists, self.k3, self.mu, (1, 1),
                          Fraction(1, 2), 0)

    def test_exists_exactly_below_opt(self):
        rng = random.Random(8)
        grid = [Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3), Fraction(5)]
        for _ in range(30):
            quiver = random_quiver(rng, max_vertices=3)
            cache = subrep.EmbedCache(quiver)
            mu = random_slope(rng, quiver.n)
            d = quiver.dim_vector([rng.randint(1, 3) for _ in range(quiver.n)])
            for delta in (Fraction(1, 3), Fraction(1, 2), Fraction(4, 5)):
                opt = expansion.epsilon_opt(quiver, mu, d, delta, cache)
                verdicts = [expansion.expander_exists(quiver, mu, d, delta, eps, cache) for eps in grid]
                for eps, verdict in zip(grid, verdicts):
                    self.assertEqual(not opt.constrained or eps <= opt.value, verdict.exists)
                    self.assertEqual(verdict.exists, verdict.witness is None)
                exists = [v.exists for v in verdicts]
                self.assertEqual(sorted(exists, reverse=True), exists)
                if opt.constrained and opt.value > 0:
                    self.assertTrue(expansion.expander_exists(quiver, mu, d, delta, opt.value, cache).exists)

    def test_scan(self):
        scan = expansion.uniform_scan(self.k3, self.mu, (1, 1), Fraction(1, 2), 3)
        self.assertEqual([1, 2, 3], scan.ks)
        self.assertEqual([3, 3, 1], [v.value for v in scan.values])
        self.assertEqual((1, 2), scan.values[2].witness)
        self.assertEqual([3, 3, 1], [v.value for v in scan.running_min])

    def test_empty_scan(self):
        scan = expansion.uniform_scan(self.k3, self.mu, (1, 1), Fraction(1, 2), 0)
        self.assertEqual(([], [], []), tuple(scan))

    def test_stability(self):
        self.assertTrue(expansion.stability_check(self.k3, self.mu, (1, 1)).exists)
        mu = slope.SlopeFunction((-3, 3), (1, 1))
        verdict = expansion.stability_check(self.k3, mu, (1, 1))
        self.assertEqual(expansion.ExpanderVerdict(False, (0, 1)), verdict)

    def test_stability_agrees_with_eps_opt(self):
        stable = expansion.stability_check(self.k3, self.mu, (2, 3)).exists
        positive = all(not r.constrained or r.value > 0
                       for r in expansion.epsilon_profile(self.k3, self.mu, (2, 3), DELTAS, cons.EPS_OPT))
        self.assertEqual(stable, positive)


if __name__ == '__main__':
    unittest.main()
