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

""" Test linear algebra over prime fields """

import unittest

import numpy as np

from quivex.common import exception as excep
from quivex.sampler import fields


class TestFields(unittest.TestCase):

    def test_primes(self):
        self.assertEqual([2, 3, 5, 7, 11, 13], [p for p in range(15) if fields.is_prime(p)])
        self.assertTrue(fields.is_prime(101))
        self.assertFalse(fields.is_prime(True))
        self.assertEqual(101, fields.check_prime(101))
        self.assertRaises(excep.NotPrime, fields.check_prime, 4)
        self.assertRaises(excep.NotPrime, fields.check_prime, 1)

    def test_gaussian_binomial(self):
        self.assertEqual(102, fields.gaussian_binomial(2, 1, 101))
        self.assertEqual(10303, fields.gaussian_binomial(3, 2, 101))
        self.assertEqual(35, fields.gaussian_binomial(4, 2, 2))
        self.assertEqual(1, fields.gaussian_binomial(4, 0, 2))
        self.assertEqual(1, fields.gaussian_binomial(4, 4, 2))
        self.assertEqual(0, fields.gaussian_binomial(2, 3, 2))

    def test_rref(self):
        rows, pivots = fields.rref([[2, 4], [1, 2]], 5)
        self.assertEqual([0], pivots)
        self.assertEqual([[1, 2]], rows.tolist())
        rows, pivots = fields.rref([[0, 1, 1], [1, 0, 1]], 2)
        self.assertEqual([0, 1], pivots)
        self.assertEqual([[1, 0, 1], [0, 1, 1]], rows.tolist())
        self.assertEqual(1, fields.rank([[1, 1], [1, 1]], 2))
        self.assertEqual(2, fields.rank([[1, 1], [1, 2]], 3))
        self.assertEqual(0, fields.rank(np.zeros((0, 3)), 3))

    def test_span_and_contains(self):
        basis = fields.span([[1, 1, 0], [2, 2, 0]], 3, 3)
        self.assertEqual((1, 3), basis.shape)
        self.assertTrue(fields.contains(basis, [[2, 2, 0]], 3))
        self.assertFalse(fields.contains(basis, [[1, 0, 0]], 3))
        self.assertTrue(fields.contains(np.zeros((0, 3)), [[0, 0, 0]], 3))
        self.assertFalse(fields.contains(np.zeros((0, 3)), [[0, 1, 0]], 3))
        self.assertEqual((0, 3), fields.span([], 3, 3).shape)

    def test_echelon_subspaces_are_distinct(self):
        spaces = list(fields.echelon_subspaces(4, 2, 2))
        self.assertEqual(35, len(spaces))
        keys = set(tuple(basis.flatten().tolist()) for basis in spaces)
        self.assertEqual(35, len(keys))
        for basis in spaces:
            self.assertEqual(2, fields.rank(basis, 2))
        self.assertEqual(13, len(list(fields.echelon_subspaces(3, 1, 3))))
        self.assertEqual(1, len(list(fields.echelon_subspaces(3, 0, 3))))

    def test_supersets(self):
        basis = np.array([[1, 0, 0]])
        found = list(fields.supersets(basis, 3, 2, 3))
        self.assertEqual(4, len(found))
        self.assertEqual(fields.count_supersets(1, 3, 2, 3), len(found))
        for superset in found:
            self.assertTrue(fields.contains(superset, basis, 3))
            self.assertEqual(2, fields.rank(superset, 3))
        found = list(fields.supersets(np.array([[1, 1, 0, 1]]), 4, 2, 2))
        self.assertEqual(7, len(found))
        self.assertEqual(7, len(set(tuple(fields.span(s, 4, 2).flatten().tolist()) for s in found)))

    def test_image(self):
        matrix = np.array([[1, 2], [0, 1], [1, 1]])
        self.assertEqual([[1, 0, 1]], fields.image(matrix, [[1, 0]], 5).tolist())
        self.assertEqual([[2, 1, 1]], fields.image(matrix, [[0, 1]], 5).tolist())
        self.assertEqual((0, 3), fields.image(matrix, np.zeros((0, 2), dtype=np.int64), 5).shape)


if __name__ == '__main__':
    unittest.main()
