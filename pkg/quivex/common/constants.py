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

""" All quivex constant values """

# budgets
LATTICE_BUDGET = 10 ** 7  # lattice points in a box [0, e]
SUBSPACE_BUDGET = 10 ** 6  # subspace tuples in a product of Grassmannians

# numerics
TOLERANCE = 1e-9  # eigen-decomposition and comparison tolerance
MARGIN = 1e-9  # safety margin below the gamma threshold
BOUND_TOLERANCE = 1e-6  # slack allowed in the bilinear bound chain
SCHEDULE_CAP = 64  # largest t tried when searching a certified d

# finite fields
DEFAULT_PRIME = 101
DEFAULT_SAMPLES = 20

# quiver types
DYNKIN = 'Dynkin'
EXTENDED_DYNKIN = 'ExtendedDynkin'
WILD = 'Wild'

# which expansion coefficient
EPS_EFF = 'eff'
EPS_OPT = 'opt'
EPS_KINDS = (EPS_EFF, EPS_OPT)

UNCONSTRAINED = 'Unconstrained'

# verdict labels in reports
LABEL_CERTIFIED = 'certified'
LABEL_EMPIRICAL = 'empirical'

# output
FLOAT_DIGITS = 12
FORMAT_CSV = 'csv'
FORMAT_JSON = 'json'

# CSV column orders
CSV_SCAN_COLUMNS = ('k', 'delta', 'epsilon', 'witness')
CSV_KRONECKER_COLUMNS = ('delta', 'zeta', 'epsilon_bound')
CSV_ORBIT_COLUMNS = ('k', 'dim_vector', 'slope', 'gap')
CSV_BOUND_COLUMNS = ('delta', 'bound')

# quiver text format keywords
KW_VERTICES = 'vertices'
KW_ARROW = 'arrow'
