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

""" Lattice boxes [0, e] with an explicit size budget """

import itertools
import logging

from quivex.common import constants as cons
from quivex.common import exception as excep
from quivex.core.quiver import DimVector

LOG = logging.getLogger(__name__)


def check_budget(e, budget=cons.LATTICE_BUDGET, what='lattice box'):
    size = DimVector(e).box_size()
    if budget is not None and size > budget:
        raise excep.BudgetExceeded(what='%s [0,%s]' % (what, DimVector(e)), size=size, budget=budget)
    return size


def box(e, budget=cons.LATTICE_BUDGET):
    """
    all e' with 0 <= e' <= e, lexicographic in canonical vertex order
    :param e: upper corner
    :param budget: maximal number of lattice points, None for no limit
    """
    check_budget(e, budget)
    for coords in itertools.product(*[range(a + 1) for a in e]):
        yield DimVector.trusted(coords)
