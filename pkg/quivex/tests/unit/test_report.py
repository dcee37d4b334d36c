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

""" Test report files """

import json
import os
import shutil
import tempfile
import unittest
from fractions import Fraction

import numpy as np

from quivex import report
from quivex.core.quiver import DimVector


class TestFormat(unittest.TestCase):

    def test_fmt(self):
        self.assertEqual('true', report.fmt(True))
        self.assertEqual('7', report.fmt(np.int64(7)))
        self.assertEqual('3/4', report.fmt(Fraction(3, 4)))
        self.assertEqual('0.333333333333', report.fmt(1.0 / 3))
        self.assertEqual('0.333', report.fmt(1.0 / 3, digits=3))
        self.assertEqual('(0,1)', report.fmt((0, 1)))
        self.assertEqual('', report.fmt(None))

    def test_jsonable(self):
        data = {'e': DimVector((1, 2)), 'x': Fraction(1, 3), 'v': np.array([0.5, 2.0]), 1: float('inf')}
        self.assertEqual({'e': [1, 2], 'x': '1/3', 'v': [0.5, 2.0], '1': 'inf'}, report.jsonable(data))


class TestReport(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self.report = report.Report('scan', {'d': DimVector((1, 1))}, ('k', 'epsilon'),
                                    [(1, Fraction(3)), (2, None)], input_digest='abc', seed=None,
                                    budgets={'lattice_budget': 10})

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_json(self):
        body = json.loads(self.report.to_json())
        self.assertEqual('scan', body['command'])
        self.assertEqual([1, 1], body['result']['d'])
        self.assertEqual([[1, '3'], [2, None]], body['rows'])
        self.assertEqual('certified', body['label'])
        self.assertNotIn('time', ''.join(body))

    def test_csv(self):
        lines = self.report.to_csv().splitlines()
        self.assertTrue(all(line.startswith('# ') for line in lines[:5]))
        self.assertEqual(['k,epsilon', '1,3', '2,'], lines[5:])

    def test_write_is_deterministic(self):
        first = self.report.write('a.json', output_dir=self.tmp)
        second = self.report.write(os.path.join(self.tmp, 'sub', 'b.json'))
        with open(first) as f, open(second) as g:
            self.assertEqual(f.read(), g.read())
        path = self.report.write('c.csv', 'csv', output_dir=self.tmp)
        with open(path) as f:
            self.assertIn('# command: "scan"', f.read())

    def test_digest(self):
        path = os.path.join(self.tmp, 'q.txt')
        with open(path, 'w') as f:
            f.write('vertices: 1 2\n')
        self.assertEqual(report.digest(path), report.digest(path))
        self.assertEqual(64, len(report.digest(path)))
        self.assertIsNone(report.digest(None))


if __name__ == '__main__':
    unittest.main()
