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

""" Test lattice boxes """

import unittest

from quivex.common import exception as excep
from quivex.core import lattice


class TestLattice(unittest.TestCase):

    def test_box_is_lexicographic(self):
        points = list(lattice.box((1, 2)))
        self.assertEqual([(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)], points)

    def test_zero_box(self):
        self.assertEqual([(0, 0)], list(lattice.box((0, 0))))

    def test_budget(self):
        self.assertEqual(6, lattice.check_budget((1, 2), budget=6))
        try:
            list(lattice.box((1, 2), budget=5))
        except excep.BudgetExceeded as e:
            self.assertEqual(2, e.exit_code)
            self.assertEqual(6, e.size)
            self.assertEqual(5, e.budget)
        else:
            self.fail('BudgetExceeded not raised')

    def test_no_budget(self):
        self.assertEqual(6, len(list(lattice.box((1, 2), budget=None))))


if __name__ == '__main__':
    unittest.main()
