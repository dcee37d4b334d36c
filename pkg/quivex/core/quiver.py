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

""" Quiver, dimension vectors and the quiver text/JSON formats """

import collections
import json
import logging

import networkx as nx
import numpy as np

from quivex.common import constants as cons
from quivex.common import exception as excep

LOG = logging.getLogger(__name__)

FormMatrices = collections.namedtuple('FormMatrices', ['euler', 'cartan'])


class DimVector(tuple):
    """
    Nonnegative integer vector indexed by the vertices of a quiver in
    canonical order. Ordering and hashing are those of tuples, so the
    lexicographic order in canonical vertex order comes for free.
    """

    def __new__(cls, coords):
        coords = tuple(coords)
        for value in coords:
            if isinstance(value, bool) or int(value) != value:
                raise excep.MalformedInput(reason='dimension entry %r is not an integer' % (value,))
            if value < 0:
                raise excep.MalformedInput(reason='dimension entry %s is negative' % value)
        return super(DimVector, cls).__new__(cls, (int(v) for v in coords))

    @classmethod
    def trusted(cls, coords):
        """build without validation, for internally generated lattice points"""
        return tuple.__new__(cls, coords)

    @classmethod
    def zero(cls, n):
        return cls((0,) * n)

    @classmethod
    def unit(cls, n, i):
        return cls(1 if j == i else 0 for j in range(n))

    def is_zero(self):
        return not any(self)

    def le(self, other):
        """componentwise partial order"""
        if len(self) != len(other):
            raise excep.IndexMismatch(got=len(other), expected=len(self))
        return all(a <= b for a, b in zip(self, other))

    def plus(self, other):
        return DimVector.trusted(a + b for a, b in zip(self, other))

    def minus(self, other):
        """d - e, defined for e <= d"""
        if not DimVector(other).le(self):
            raise excep.NotBelow(e=tuple(other), d=tuple(self))
        return DimVector(a - b for a, b in zip(self, other))

    def scale(self, k):
        return DimVector(k * a for a in self)

    def box_size(self):
        """number of lattice points in the box [0, self]"""
        size = 1
        for a in self:
            size *= a + 1
        return size

    def __repr__(self):
        return '(%s)' % ','.join(str(a) for a in self)

    __str__ = __repr__


class Quiver(object):
    """
    A finite acyclic quiver. Vertices are strings; arrows are kept with
    multiplicity. The canonical vertex order is the topological order with
    sources first and ties broken lexicographically; every vector in quivex
    is written in this order.
    """

    def __init__(self, vertices, arrows):
        """
        :param vertices: iterable of vertex identifiers
        :param arrows: iterable of (source, target) or (source, target, multiplicity)
        """
        vertices = [str(v) for v in vertices]
        seen = set()
        for vertex in vertices:
            if vertex in seen:
                raise excep.MalformedInput(reason='duplicate vertex id %s' % vertex)
            seen.add(vertex)

        graph = nx.MultiDiGraph()
        graph.add_nodes_from(vertices)
        for arrow in arrows:
            if len(arrow) == 2:
                source, target, mult = arrow[0], arrow[1], 1
            elif len(arrow) == 3:
                source, target, mult = arrow
            else:
                raise excep.MalformedInput(reason='arrow %r must be (source, target[, multiplicity])' % (arrow,))
            source, target = str(source), str(target)
            for endpoint in (source, target):
                if endpoint not in seen:
                    raise excep.MalformedInput(reason='arrow endpoint %s is not a declared vertex' % endpoint)
            if int(mult) != mult or mult < 1:
                raise excep.MalformedInput(reason='arrow multiplicity %r is not a positive integer' % (mult,))
            for _ in range(int(mult)):
                graph.add_edge(source, target)

        try:
            cycle = nx.find_cycle(graph, orientation='original')
        except nx.NetworkXNoCycle:
            cycle = None
        if cycle:
            raise excep.CyclicQuiver(vertices=' -> '.join([edge[0] for edge in cycle] + [cycle[0][0]]))

        self.graph = graph
        self.vertices = tuple(nx.lexicographical_topological_sort(graph))
        self.index = dict((v, i) for i, v in enumerate(self.vertices))
        n = len(self.vertices)
        self.arrow_matrix = np.zeros((n, n), dtype=np.int64)
        for source, target in graph.edges():
            self.arrow_matrix[self.index[source], self.index[target]] += 1
        self.arrows = tuple(
            (self.vertices[i], self.vertices[j])
            for i in range(n) for j in range(n)
            for _ in range(int(self.arrow_matrix[i, j])))
        euler = np.identity(n, dtype=np.int64) - self.arrow_matrix
        self.forms = FormMatrices(euler=euler, cartan=euler + euler.T)

    @property
    def n(self):
        return len(self.vertices)

    @property
    def euler(self):
        return self.forms.euler

    @property
    def cartan(self):
        return self.forms.cartan

    def multiplicity(self, source, target):
        return int(self.arrow_matrix[self.index[str(source)], self.index[str(target)]])

    def sinks(self):
        return [v for v in self.vertices if self.graph.out_degree(v) == 0]

    def sources(self):
        return [v for v in self.vertices if self.graph.in_degree(v) == 0]

    def dim_vector(self, values):
        """
        Build a DimVector from a sequence in canonical order or a mapping
        from vertex to dimension.
        """
        if isinstance(values, dict):
            unknown = set(str(k) for k in values) - set(self.vertices)
            if unknown:
                raise excep.MalformedInput(reason='unknown vertices %s' % ', '.join(sorted(unknown)))
            values = dict((str(k), v) for k, v in values.items())
            return DimVector(values.get(v, 0) for v in self.vertices)
        values = tuple(values)
        if len(values) != self.n:
            raise excep.IndexMismatch(got=len(values), expected=self.n)
        return DimVector(values)

    def unit(self, vertex):
        """the coordinate vector of a vertex"""
        return DimVector.unit(self.n, self.index[str(vertex)])

    def check_index(self, vector):
        if len(vector) != self.n:
            raise excep.IndexMismatch(got=len(vector), expected=self.n)

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return self.vertices == other.vertices and self.arrows == other.arrows

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        return 'Quiver(vertices=%s, arrows=%d)' % (list(self.vertices), len(self.arrows))

    @classmethod
    def parse(cls, value):
        """
        parse the quiver text format.

            vertices: 1 2 3
            arrow: 1 2 x3
            arrow: 2 3

        Blank lines and lines starting with '#' are ignored.
        :param value: text content
        """
        vertices = None
        arrows = []
        for lineno, raw in enumerate(value.splitlines(), 1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            key, sep, rest = line.partition(':')
            key = key.strip().lower()
            if not sep:
                raise excep.MalformedInput(reason='line %d has no keyword: %r' % (lineno, raw))
            tokens = rest.split()
            if key == cons.KW_VERTICES:
                if vertices is not None:
                    raise excep.MalformedInput(reason='line %d repeats the vertices line' % lineno)
                vertices = tokens
            elif key == cons.KW_ARROW:
                if len(tokens) == 2:
                    arrows.append((tokens[0], tokens[1], 1))
                elif len(tokens) == 3 and tokens[2].lower().startswith('x') and tokens[2][1:].isdigit():
                    arrows.append((tokens[0], tokens[1], int(tokens[2][1:])))
                else:
                    raise excep.MalformedInput(reason='line %d: arrow needs "source target [xK]"' % lineno)
            else:
                raise excep.MalformedInput(reason='line %d: unknown keyword %s' % (lineno, key))
        if vertices is None:
            raise excep.MalformedInput(reason='missing vertices line')
        return cls(vertices, arrows)

    @classmethod
    def parse_json(cls, value):
        """
        parse the JSON quiver object {"vertices": [...], "arrows": [[s, t, m], ...]}
        :param value: decoded JSON object or its text
        """
        if not isinstance(value, dict):
            try:
                value = json.loads(value)
            except ValueError as e:
                raise excep.MalformedInput(reason='invalid JSON: %s' % e)
        if not isinstance(value, dict) or 'vertices' not in value:
            raise excep.MalformedInput(reason='JSON quiver needs a "vertices" list')
        return cls(value['vertices'], [tuple(a) for a in value.get('arrows', [])])

    def construct(self):
        """render the canonical text form"""
        lines = ['%s: %s' % (cons.KW_VERTICES, ' '.join(self.vertices))]
        n = self.n
        for i in range(n):
            for j in range(n):
                mult = int(self.arrow_matrix[i, j])
                if mult == 1:
                    lines.append('%s: %s %s' % (cons.KW_ARROW, self.vertices[i], self.vertices[j]))
                elif mult > 1:
                    lines.append('%s: %s %s x%d' % (cons.KW_ARROW, self.vertices[i], self.vertices[j], mult))
        return '\n'.join(lines) + '\n'

    def construct_json(self):
        n = self.n
        return {
            'vertices': list(self.vertices),
            'arrows': [[self.vertices[i], self.vertices[j], int(self.arrow_matrix[i, j])]
                       for i in range(n) for j in range(n) if self.arrow_matrix[i, j]]
        }


def validate(vertices, arrows):
    """
    Validate a raw quiver description and return the Quiver.
    :param vertices: vertex identifiers
    :param arrows: (source, target[, multiplicity]) tuples
    """
    quiver = Quiver(vertices, arrows)
    LOG.debug('validated %r, canonical order %s', quiver, ' '.join(quiver.vertices))
    return quiver


def load(path):
    """load a quiver file, JSON when its content starts with '{'"""
    with open(path) as f:
        content = f.read()
    if content.lstrip().startswith('{'):
        return Quiver.parse_json(content)
    return Quiver.parse(content)


def opposite(quiver):
    """the quiver with all arrows reversed"""
    return Quiver(quiver.vertices, [(t, s) for s, t in quiver.arrows])


def components(quiver):
    """connected components of the underlying graph, in canonical order"""
    result = []
    for part in nx.weakly_connected_components(quiver.graph):
        vertices = [v for v in quiver.vertices if v in part]
        arrows = [(s, t) for s, t in quiver.arrows if s in part]
        result.append(Quiver(vertices, arrows))
    result.sort(key=lambda q: quiver.index[q.vertices[0]])
    return result


def is_connected(quiver):
    return quiver.n > 0 and nx.is_weakly_connected(quiver.graph)


def support_connected(quiver, d):
    """whether the support of d spans a connected full subquiver"""
    quiver.check_index(d)
    support = [v for v, a in zip(quiver.vertices, d) if a]
    if not support:
        return False
    return nx.is_weakly_connected(quiver.graph.subgraph(support))


def kronecker_quiver(m):
    """the m-Kronecker quiver with m arrows from 1 to 2"""
    return Quiver(['1', '2'], [('1', '2', m)] if m else [])
