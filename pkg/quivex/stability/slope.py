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

""" Slope functions mu = Theta / kappa """

import logging
from fractions import Fraction

from quivex.common import exception as excep
from quivex.core import forms

LOG = logging.getLogger(__name__)


class SlopeFunction(object):
    """
    A pair of linear functionals (Theta, kappa) with exact rational values on
    the coordinate vectors, kappa positive on every vertex.
    """

    def __init__(self, theta, kappa):
        """
        :param theta: values Theta(i) in canonical vertex order
        :param kappa: values kappa(i) in canonical vertex order, all > 0
        """
        self.theta = tuple(Fraction(x) for x in theta)
        self.kappa = tuple(Fraction(x) for x in kappa)
        if len(self.theta) != len(self.kappa):
            raise excep.IndexMismatch(got=len(self.kappa), expected=len(self.theta))
        for i, value in enumerate(self.kappa):
            if value <= 0:
                raise excep.KappaNotPositive(vertex=i, value=value)

    def __len__(self):
        return len(self.theta)

    def theta_of(self, d):
        return sum((t * a for t, a in zip(self.theta, d)), Fraction(0))

    def kappa_of(self, d):
        return sum((k * a for k, a in zip(self.kappa, d)), Fraction(0))

    def __call__(self, d):
        return slope(self, d)

    def __eq__(self, other):
        if not isinstance(other, SlopeFunction):
            return NotImplemented
        return self.theta == other.theta and self.kappa == other.kappa

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.theta, self.kappa))

    def __repr__(self):
        return 'SlopeFunction(theta=(%s), kappa=(%s))' % (
            ','.join(str(x) for x in self.theta), ','.join(str(x) for x in self.kappa))


def slope(mu, d):
    """
    mu(d) = Theta(d) / kappa(d), exact
    :param mu: SlopeFunction
    :param d: nonzero nonnegative vector
    """
    if len(d) != len(mu):
        raise excep.IndexMismatch(got=len(d), expected=len(mu))
    if not any(d):
        raise excep.ZeroVector(what='slope')
    return mu.theta_of(d) / mu.kappa_of(d)


def slope_from_d(quiver, d):
    """
    The slope function attached to d: Theta = {d, _}, kappa = -(d, _).
    Needs (d, i) < 0 for every vertex i; mu(d) = 0 for the result.
    """
    quiver.check_index(d)
    pairings = forms.sym_with_units(quiver, d)
    for vertex, value in zip(quiver.vertices, pairings):
        if value >= 0:
            raise excep.KappaNotPositive(vertex=vertex, value=-value)
    theta = [forms.antisym_form(quiver, d, quiver.unit(v)) for v in quiver.vertices]
    mu = SlopeFunction(theta, [-value for value in pairings])
    LOG.debug('slope function from %s: %r', tuple(d), mu)
    return mu


def normalize_slope(mu, a, b):
    """(a Theta + b kappa, a kappa) for a > 0; same stability notion"""
    a, b = Fraction(a), Fraction(b)
    if a <= 0:
        raise excep.OutOfRange(name='a', value=a, allowed='(0, inf)')
    return SlopeFunction([a * t + b * k for t, k in zip(mu.theta, mu.kappa)],
                         [a * k for k in mu.kappa])
