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

""" Closed forms for the generalized Kronecker quiver with m >= 3 arrows 1 -> 2.

Here e -> d iff <e, d - e> >= 0 iff e_2 >= c_d(e_1) with

    c_d(x) = (m x + d_2 - sqrt((m x - d_2)^2 + 4 x (d_1 - x))) / 2,

and c_d(x) = (1 + zeta_alpha(x / d_1)) alpha x for alpha = d_2 / d_1.
Lattice decisions use the integer form only; the radical is used for
real-valued curves and bounds.
"""

import logging
import math
from fractions import Fraction

from quivex.common import exception as excep
from quivex.core.quiver import DimVector
from quivex.stability.slope import SlopeFunction

LOG = logging.getLogger(__name__)


def _check_m(m):
    if int(m) != m or m < 3:
        raise excep.OutOfRange(name='m', value=m, allowed='integers >= 3')
    return int(m)


def kronecker_euler(m, a, b):
    """<a, b> = a_1 b_1 + a_2 b_2 - m a_1 b_2"""
    return a[0] * b[0] + a[1] * b[1] - m * a[0] * b[1]


class KroneckerInstance(object):
    """
    m arrows, dimension vector d = (d1, d2) with <d, d> < 0, and a positive
    functional kappa = (kappa1, kappa2).
    """

    def __init__(self, m, d1, d2, kappa1=1, kappa2=1):
        self.m = _check_m(m)
        if d1 <= 0 or d2 <= 0:
            raise excep.OutOfRange(name='d', value=(d1, d2), allowed='positive integers')
        self.d1, self.d2 = int(d1), int(d2)
        self.kappa1, self.kappa2 = Fraction(kappa1), Fraction(kappa2)
        if self.kappa1 <= 0 or self.kappa2 <= 0:
            raise excep.KappaNotPositive(vertex='1' if self.kappa1 <= 0 else '2',
                                         value=min(self.kappa1, self.kappa2))
        if self.euler_dd >= 0:
            raise excep.OutOfRange(name='<d,d>', value=self.euler_dd, allowed='(-inf, 0)')

    @property
    def euler_dd(self):
        return self.d1 * self.d1 - self.m * self.d1 * self.d2 + self.d2 * self.d2

    @property
    def alpha(self):
        return Fraction(self.d2, self.d1)

    @property
    def kappa_d(self):
        return self.kappa1 * self.d1 + self.kappa2 * self.d2

    def slope_function(self):
        """mu with mu(d) = 0: Theta = (d2, -d1) and the instance's kappa"""
        return SlopeFunction(normalized_theta(self.d1, self.d2), (self.kappa1, self.kappa2))

    def __repr__(self):
        return 'KroneckerInstance(m=%d, d=(%d,%d), kappa=(%s,%s))' % (
            self.m, self.d1, self.d2, self.kappa1, self.kappa2)


def c_d(m, d1, d2, x):
    """
    :param x: real in [0, d1]
    """
    m = _check_m(m)
    if not 0 <= x <= d1:
        raise excep.OutOfRange(name='x', value=x, allowed='[0, %s]' % d1)
    x = float(x)
    return 0.5 * (m * x + d2 - math.sqrt((m * x - d2) ** 2 + 4 * x * (d1 - x)))


def embeds_closed_form(m, e, d):
    """e -> d iff <e, d - e> >= 0, exact integers"""
    m = _check_m(m)
    e, d = DimVector(e), DimVector(d)
    if len(e) != 2 or len(d) != 2:
        raise excep.IndexMismatch(got=len(e) if len(e) != 2 else len(d), expected=2)
    if not e.le(d):
        raise excep.NotBelow(e=e, d=d)
    return kronecker_euler(m, e, d.minus(e)) >= 0


def zeta(m, alpha, t):
    """
    zeta_alpha(t) = c(t) / (alpha t) - 1, c being c_d for d = (1, alpha).
    :param t: real in the open interval (0, 1)
    """
    m = _check_m(m)
    if not 0 < t < 1:
        raise excep.OutOfRange(name='t', value=t, allowed='(0, 1)')
    alpha, t = float(alpha), float(t)
    c = 0.5 * (m * t + alpha - math.sqrt((m * t - alpha) ** 2 + 4 * t * (1 - t)))
    return c / (alpha * t) - 1.0


def epsilon_bound(instance, delta):
    """
    eps_d(delta) = d1 d2 zeta_alpha(delta) / (kappa(d) + kappa2 d2 zeta_alpha(delta))
    """
    if not 0 < delta < 1:
        raise excep.OutOfRange(name='delta', value=delta, allowed='(0, 1)')
    z = zeta(instance.m, instance.alpha, delta)
    return instance.d1 * instance.d2 * z / (float(instance.kappa_d) + float(instance.kappa2) * instance.d2 * z)


def translate_delta_eps(instance, delta, eps):
    """
    (delta, eps) of the linear algebra notion to (delta', eps') of the slope
    notion for the normalized slope function; exact for rational input.
    """
    delta, eps = Fraction(delta), Fraction(eps)
    if not 0 < delta < 1:
        raise excep.OutOfRange(name='delta', value=delta, allowed='(0, 1)')
    if eps <= 0:
        raise excep.OutOfRange(name='eps', value=eps, allowed='(0, inf)')
    k1d1 = instance.kappa1 * instance.d1
    k2d2 = instance.kappa2 * instance.d2
    delta_prime = (delta * k1d1 + k2d2) / (k1d1 + k2d2)
    eps_prime = instance.d1 * instance.d2 * eps / (instance.kappa_d + k2d2 * eps)
    return delta_prime, eps_prime


def normalized_theta(d1, d2):
    """Theta = (d2, -d1), so that Theta(d) = 0"""
    if d1 <= 0 or d2 <= 0:
        raise excep.OutOfRange(name='d', value=(d1, d2), allowed='positive integers')
    return (Fraction(d2), Fraction(-d1))


def curve(instance, deltas):
    """rows (delta, zeta_alpha(delta), eps_d(delta)) for plotting"""
    rows = []
    for delta in deltas:
        rows.append((Fraction(delta), zeta(instance.m, instance.alpha, delta), epsilon_bound(instance, delta)))
    LOG.debug('curve for %r over %d points', instance, len(rows))
    return rows
