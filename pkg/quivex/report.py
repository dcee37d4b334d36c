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

""" CSV and JSON report files.

Reports carry no timestamps; identical inputs and seeds give identical
bytes. Floats are written with a fixed number of significant digits,
rationals as p/q strings.
"""

import csv
import hashlib
import io
import json
import logging
import os
from fractions import Fraction

import numpy as np

from quivex.common import constants as cons

LOG = logging.getLogger(__name__)


def fmt_float(value, digits=cons.FLOAT_DIGITS):
    if value is None:
        return ''
    return '%.*g' % (digits, float(value))


def fmt(value, digits=cons.FLOAT_DIGITS):
    """text form of a report cell"""
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (float, np.floating)):
        return fmt_float(value, digits)
    if isinstance(value, tuple) and all(isinstance(x, (int, np.integer)) for x in value):
        return '(%s)' % ','.join(str(int(x)) for x in value)
    return str(value)


def jsonable(value, digits=cons.FLOAT_DIGITS):
    """convert nested report data to plain JSON types"""
    if isinstance(value, dict):
        return dict((str(k), jsonable(v, digits)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [jsonable(v, digits) for v in value]
    if isinstance(value, np.ndarray):
        return [jsonable(v, digits) for v in value.tolist()]
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if value != value or value in (float('inf'), float('-inf')):
            return str(value)
        return float(fmt_float(value, digits))
    return str(value)


def digest(path):
    """sha256 of an input file"""
    if path is None:
        return None
    sha = hashlib.sha256()
    with open(path, 'rb') as f:
        for chunk in iter(lambda: f.read(65536), b''):
            sha.update(chunk)
    return sha.hexdigest()


class Report(object):
    """
    A command result: JSON data plus an optional table for CSV output.
    """

    def __init__(self, command, data, columns=None, rows=None, input_digest=None, seed=None, budgets=None,
                 label=cons.LABEL_CERTIFIED):
        self.command = command
        self.data = data
        self.columns = columns
        self.rows = rows or []
        self.input_digest = input_digest
        self.seed = seed
        self.budgets = budgets or {}
        self.label = label

    def header(self):
        return {
            'command': self.command,
            'input_digest': self.input_digest,
            'seed': self.seed,
            'budgets': self.budgets,
            'label': self.label,
        }

    def to_json(self, digits=cons.FLOAT_DIGITS):
        body = self.header()
        body['result'] = self.data
        if self.columns:
            body['columns'] = list(self.columns)
            body['rows'] = self.rows
        return json.dumps(jsonable(body, digits), indent=2, sort_keys=True) + '\n'

    def to_csv(self, digits=cons.FLOAT_DIGITS):
        """metadata as '#' comment lines, then the table"""
        out = io.StringIO()
        for key, value in sorted(self.header().items()):
            out.write('# %s: %s\n' % (key, json.dumps(jsonable(value, digits), sort_keys=True)))
        writer = csv.writer(out, lineterminator='\n')
        if self.columns:
            writer.writerow(self.columns)
            for row in self.rows:
                writer.writerow([fmt(cell, digits) for cell in row])
        return out.getvalue()

    def render(self, file_format=cons.FORMAT_JSON, digits=cons.FLOAT_DIGITS):
        if file_format == cons.FORMAT_CSV:
            return self.to_csv(digits)
        return self.to_json(digits)

    def write(self, path, file_format=cons.FORMAT_JSON, digits=cons.FLOAT_DIGITS, output_dir=None):
        if output_dir and not os.path.isabs(path):
            path = os.path.join(output_dir, path)
        directory = os.path.dirname(path)
        if directory and not os.path.exists(directory):
            os.makedirs(directory)
            LOG.info('Create dir %s', directory)
        with open(path, 'w') as f:
            f.write(self.render(file_format, digits))
        LOG.info('%s report written to %s', file_format, path)
        return path
