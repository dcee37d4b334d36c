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

""" Quivers shared by the unit tests """

from quivex.core.quiver import Quiver


def random_quiver(rng, max_vertices=4, max_multiplicity=3):
    """acyclic by construction: arrows only go from lower to higher label"""
    n = rng.randint(2, max_vertices)
    vertices = [str(i) for i in range(n)]
    arrows = []
    for i in range(n):
        for j in range(i + 1, n):
            mult = rng.randint(0, max_multiplicity)
            if mult:
                arrows.append((vertices[i], vertices[j], mult))
    return Quiver(vertices, arrows)


def reorder(vector, source, target):
    """rewrite a vector of quiver source in the canonical order of target"""
    return tuple(vector[source.index[v]] for v in target.vertices)
