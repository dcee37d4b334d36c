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

""" Test slope functions """

import random
import unittest
from fractions import Fraction

from quivex.common import exception as excep
from quivex.core import quiver as quiver_mod
from quivex.core.quiver import Quiver
from quivex.stability import slope


class TestSlope(unittest.TestCase):

    def setUp(self):
        self.k3 = quiver_mod.kronecker_quiver(3)
        self.mu = slope.SlopeFunction((3, -3), (1, 1))

    def test_values(self):
        self.assertEqual(0, slope.slope(self.mu, (1, 1)))
        self.assertEqual(-3, slope.slope(self.mu, (0, 1)))
        self.assertEqual(Fraction(-1), self.mu((1, 2)))

    def test_zero_and_length(self):
        self.assertRaises(excep.ZeroVector, slope.slope, self.mu, (0, 0))
        self.assertRaises(excep.IndexMismatch, slope.slope, self.mu, (1, 1, 1))

    def test_scale_invariance(self):
        rng = random.Random(4)
        for _ in range(200):
            n = rng.randint(1, 5)
            mu = slope.SlopeFunction([Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)],
                                     [Fraction(rng.randint(1, 9), rng.randint(1, 4)) for _ in range(n)])
            d = [rng.randint(0, 6) for _ in range(n - 1)] + [rng.randint(1, 6)]
            for k in (2, 3, 7):
                self.assertEqual(slope.slope(mu, d), slope.slope(mu, [k * a for a in d]))

    def test_kappa_positive(self):
        self.assertRaises(excep.KappaNotPositive, slope.SlopeFunction, (1, 1), (1, 0))
        self.assertRaises(excep.IndexMismatch, slope.SlopeFunction, (1, 1), (1,))

    def test_slope_from_d(self):
        self.assertEqual(self.mu, slope.slope_from_d(self.k3, (1, 1)))
        self.assertEqual(0, slope.slope_from_d(self.k3, (3, 4))((3, 4)))

    def test_slope_from_d_needs_negative_pairings(self):
        a2 = Quiver(['1', '2'], [('1', '2')])
        self.assertRaises(excep.KappaNotPositive, slope.slope_from_d, a2, (1, 1))

    def test_normalize(self):
        shifted = slope.normalize_slope(self.mu, 2, 5)
        self.assertEqual((Fraction(11), Fraction(-1)), shifted.theta)
        self.assertEqual((Fraction(2), Fraction(2)), shifted.kappa)
        for d in ((1, 1), (0, 1), (2, 5)):
            self.assertEqual(self.mu(d) + Fraction(5, 2), shifted(d))
        self.assertRaises(excep.OutOfRange, slope.normalize_slope, self.mu, 0, 1)


if __name__ == '__main__':
    unittest.main()
