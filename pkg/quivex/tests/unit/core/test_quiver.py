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

""" Test quiver parsing and validation """

import os
import tempfile
import unittest

from quivex.common import exception as excep
from quivex.core import quiver as quiver_mod
from quivex.core.quiver import DimVector, Quiver


class TestQuiver(unittest.TestCase):

    def setUp(self):
        self.k3 = quiver_mod.kronecker_quiver(3)
        self.maxDiff = None

    def test_validate_kronecker(self):
        quiver = quiver_mod.validate(['1', '2'], [('1', '2', 3)])
        self.assertEqual(('1', '2'), quiver.vertices)
        self.assertEqual(3, quiver.multiplicity('1', '2'))
        self.assertEqual((('1', '2'),) * 3, quiver.arrows)
        self.assertEqual(self.k3, quiver)

    def test_loop_is_cyclic(self):
        self.assertRaises(excep.CyclicQuiver, quiver_mod.validate, ['1'], [('1', '1')])

    def test_three_cycle(self):
        self.assertRaises(excep.CyclicQuiver, quiver_mod.validate,
                          ['1', '2', '3'], [('1', '2'), ('2', '3'), ('3', '1')])

    def test_dangling_and_duplicate(self):
        self.assertRaises(excep.MalformedInput, Quiver, ['1'], [('1', '2')])
        self.assertRaises(excep.MalformedInput, Quiver, ['1', '1'], [])
        self.assertRaises(excep.MalformedInput, Quiver, ['1', '2'], [('1', '2', 0)])

    def test_canonical_order(self):
        quiver = Quiver(['1', '2', '3'], [('3', '1')])
        self.assertEqual(('2', '3', '1'), quiver.vertices)
        self.assertEqual(('1', '2'), Quiver(['2', '1'], [('1', '2')]).vertices)

    def test_matrices(self):
        self.assertEqual([[1, -3], [0, 1]], self.k3.euler.tolist())
        self.assertEqual([[2, -3], [-3, 2]], self.k3.cartan.tolist())

    def test_parse(self):
        text = '# 3-Kronecker\nvertices: 1 2\n\narrow: 1 2 x3  # three arrows\n'
        self.assertEqual(self.k3, Quiver.parse(text))

    def test_parse_errors(self):
        self.assertRaises(excep.MalformedInput, Quiver.parse, 'arrow: 1 2\n')
        self.assertRaises(excep.MalformedInput, Quiver.parse, 'vertices: 1 2\narrow: 1\n')
        self.assertRaises(excep.MalformedInput, Quiver.parse, 'vertices: 1 2\nedge: 1 2\n')
        self.assertRaises(excep.MalformedInput, Quiver.parse, 'vertices 1 2\n')

    def test_construct(self):
        self.assertEqual('vertices: 1 2\narrow: 1 2 x3\n', self.k3.construct())
        a3 = Quiver(['1', '2', '3'], [('1', '2'), ('2', '3')])
        self.assertEqual(a3, Quiver.parse(a3.construct()))

    def test_json(self):
        value = {'vertices': ['1', '2'], 'arrows': [['1', '2', 3]]}
        self.assertEqual(self.k3, Quiver.parse_json(value))
        self.assertEqual(value, self.k3.construct_json())
        self.assertRaises(excep.MalformedInput, Quiver.parse_json, '{"arrows": []}')
        self.assertRaises(excep.MalformedInput, Quiver.parse_json, 'not json')

    def test_load(self):
        fd, path = tempfile.mkstemp(suffix='.quiver')
        try:
            with os.fdopen(fd, 'w') as f:
                f.write('vertices: 1 2\narrow: 1 2 x3\n')
            self.assertEqual(self.k3, quiver_mod.load(path))
            with open(path, 'w') as f:
                f.write('{"vertices": ["1", "2"], "arrows": [["1", "2", 3]]}')
            self.assertEqual(self.k3, quiver_mod.load(path))
        finally:
            os.remove(path)

    def test_opposite(self):
        opposite = quiver_mod.opposite(self.k3)
        self.assertEqual(('2', '1'), opposite.vertices)
        self.assertEqual(3, opposite.multiplicity('2', '1'))
        self.assertEqual(self.k3, quiver_mod.opposite(opposite))

    def test_components(self):
        quiver = Quiver(['1', '2', '3'], [('1', '2')])
        parts = quiver_mod.components(quiver)
        self.assertEqual([('1', '2'), ('3',)], [p.vertices for p in parts])
        self.assertFalse(quiver_mod.is_connected(quiver))
        self.assertTrue(quiver_mod.is_connected(self.k3))

    def test_support_connected(self):
        a3 = Quiver(['1', '2', '3'], [('1', '2'), ('2', '3')])
        self.assertTrue(quiver_mod.support_connected(a3, (1, 1, 0)))
        self.assertFalse(quiver_mod.support_connected(a3, (1, 0, 1)))
        self.assertFalse(quiver_mod.support_connected(a3, (0, 0, 0)))

    def test_sinks_and_sources(self):
        self.assertEqual(['2'], self.k3.sinks())
        self.assertEqual(['1'], self.k3.sources())

    def test_dim_vector(self):
        self.assertEqual((1, 2), self.k3.dim_vector([1, 2]))
        self.assertEqual((0, 2), self.k3.dim_vector({'2': 2}))
        self.assertRaises(excep.MalformedInput, self.k3.dim_vector, [1, -1])
        self.assertRaises(excep.IndexMismatch, self.k3.dim_vector, [1, 1, 1])
        self.assertRaises(excep.MalformedInput, self.k3.dim_vector, {'3': 1})


class TestDimVector(unittest.TestCase):

    def test_order_and_arithmetic(self):
        d = DimVector((2, 3))
        self.assertTrue(DimVector((1, 3)).le(d))
        self.assertFalse(DimVector((3, 0)).le(d))
        self.assertEqual((1, 1), d.minus((1, 2)))
        self.assertEqual((4, 6), d.scale(2))
        self.assertEqual(12, d.box_size())
        self.assertEqual('(2,3)', str(d))

    def test_minus_not_below(self):
        self.assertRaises(excep.NotBelow, DimVector((1, 1)).minus, (2, 0))

    def test_rejects_non_integers(self):
        self.assertRaises(excep.MalformedInput, DimVector, (1.5, 1))
        self.assertRaises(excep.MalformedInput, DimVector, (True, 1))


if __name__ == '__main__':
    unittest.main()
