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

""" basic config """

import os

from oslo_config import cfg

from quivex.common import constants as cons

CONF = cfg.CONF

oracle_opts = [
    cfg.IntOpt('lattice-budget',
               default=cons.LATTICE_BUDGET,
               min=1,
               help='The max number of lattice points in a box [0, e] before giving up'),
]

CONF.register_cli_opts(oracle_opts, group='oracle')

sampler_opts = [
    cfg.IntOpt('subspace-budget',
               default=cons.SUBSPACE_BUDGET,
               min=1,
               help='The max number of subspace tuples searched for one subrepresentation, '
                    'counted as the product of Gaussian binomials over the non-sink vertices; '
                    'the subspace at a sink is fixed by a rank test and is not counted'),
    cfg.IntOpt('prime',
               default=cons.DEFAULT_PRIME,
               min=2,
               help='The prime p of the base field F_p for sampled representations'),
    cfg.IntOpt('samples',
               default=cons.DEFAULT_SAMPLES,
               min=1,
               help='How many seeded representations to sample'),
]

CONF.register_cli_opts(sampler_opts, group='sampler')

spectral_opts = [
    cfg.FloatOpt('tolerance',
                 default=cons.TOLERANCE,
                 help='Tolerance of eigenvalue computations'),
    cfg.FloatOpt('margin',
                 default=cons.MARGIN,
                 help='Safety margin kept below the gamma threshold'),
    cfg.IntOpt('schedule-cap',
               default=cons.SCHEDULE_CAP,
               min=1,
               help='Largest multiplier t tried when searching a certified dimension vector'),
    cfg.FloatOpt('bound-tolerance',
                 default=cons.BOUND_TOLERANCE,
                 help='Slack allowed when checking the bilinear bound chain'),
]

CONF.register_cli_opts(spectral_opts, group='spectral')

output_opts = [
    cfg.StrOpt('dir',
               default=os.environ.get('QUIVEX_OUTPUT_DIR', '.'),
               help='Directory for report files, QUIVEX_OUTPUT_DIR overrides the default'),
    cfg.StrOpt('format',
               default=cons.FORMAT_JSON,
               choices=[cons.FORMAT_CSV, cons.FORMAT_JSON],
               help='Report file format'),
    cfg.IntOpt('float-digits',
               default=cons.FLOAT_DIGITS,
               min=1,
               max=17,
               help='Significant digits of floats in reports'),
]

CONF.register_cli_opts(output_opts, group='output')


def budgets():
    """the budget settings recorded in every report"""
    return {
        'lattice_budget': CONF.oracle.lattice_budget,
        'subspace_budget': CONF.sampler.subspace_budget,
        'schedule_cap': CONF.spectral.schedule_cap,
    }
