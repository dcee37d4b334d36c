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

""" Uniform expansion certificate for a wild quiver from the spectrum of its
Cartan matrix.

For d in the interior of the fundamental domain write
(d, d) = (lambda_1 + gamma) d.d. When gamma stays below the threshold fixed by
lambda_1 and lambda_2, every e <= d with <e, d - e> >= 0 satisfies

    {d, e} <= C eta (1 - eta) (d, d),    kappa(e) = eta kappa(d),

with C = 1 when the form restricted to H = Ker(d, _) has minimal eigenvalue
lambda_H >= 0, and C = 1 - lambda_H / (lambda_1 + gamma) otherwise. Hence
eps_eff(k d, delta) >= C (1 - delta) for all k.
"""

import collections
import logging
from fractions import Fraction

import numpy as np

from quivex.common import constants as cons
from quivex.common import exception as excep
from quivex.core import forms
from quivex.core import lattice
from quivex.core import quiver as quiver_mod
from quivex.core.quiver import DimVector
from quivex.stability import expansion
from quivex.stability import slope as slope_mod

LOG = logging.getLogger(__name__)

# restricted_min_eigenvalue on a one-dimensional space: H = {0}
NOT_APPLICABLE = None

Spectrum = collections.namedtuple('Spectrum', ['eigenvalues', 'eigenvectors', 'v1'])
BoundChainReport = collections.namedtuple(
    'BoundChainReport', ['checked', 'worst_slack', 'violation'])
CorollaryReport = collections.namedtuple(
    'CorollaryReport', ['checked', 'worst_slack', 'violation'])


def perron_normalize(vector):
    """sign so that the entries are positive, scale so the minimal entry is 1"""
    vector = np.asarray(vector, dtype=float)
    if vector.sum() < 0:
        vector = -vector
    return vector / vector.min()


def cartan_spectrum(quiver, tolerance=cons.TOLERANCE):
    """
    Sorted eigenvalues and orthonormal eigenvectors (columns) of the Cartan
    matrix of a connected quiver; v1 is the eigenvector for lambda_1 scaled
    to minimal entry 1.
    """
    if not quiver_mod.is_connected(quiver):
        raise excep.Disconnected(components=len(quiver_mod.components(quiver)))
    values, vectors = np.linalg.eigh(quiver.cartan.astype(float))
    # exact integer eigenvalues print as such
    values = np.where(np.abs(values - np.rint(values)) < tolerance, np.rint(values), values)
    v1 = perron_normalize(vectors[:, 0])
    if (v1 <= 0).any():
        LOG.warning('eigenvector for lambda_1 is not positive: %s', v1)
    return Spectrum(values, vectors, v1)


def in_fundamental_domain(quiver, d, strict=False):
    """
    Whether (d, i) <= 0 for every vertex i (< 0 when strict). The interior
    also needs every d_i > 0. Exact integer arithmetic.
    """
    quiver.check_index(d)
    if strict and not all(a > 0 for a in d):
        return False
    if not any(d):
        return False
    pairings = forms.sym_with_units(quiver, d)
    if strict:
        return all(value < 0 for value in pairings)
    return all(value <= 0 for value in pairings)


def gamma_threshold(lambda1, lambda2):
    """
    -lambda_1 if lambda_2 >= 0, else lambda_1 (lambda_2 - lambda_1) / (lambda_1 + lambda_2)
    """
    if not (lambda1 < lambda2 and lambda1 < 0):
        raise excep.OutOfRange(name='(lambda1, lambda2)', value=(lambda1, lambda2),
                               allowed='lambda1 < lambda2, lambda1 < 0')
    if lambda2 >= 0:
        return -lambda1
    return lambda1 * (lambda2 - lambda1) / (lambda1 + lambda2)


def restricted_min_eigenvalue(matrix, v):
    """
    Minimal eigenvalue of the symmetric form M restricted to H = Ker(v, _),
    i.e. the Euclidean orthogonal complement of M v.

    :return: float, or NOT_APPLICABLE when H = {0}
    """
    matrix = np.asarray(matrix, dtype=float)
    v = np.asarray(v, dtype=float)
    if not v.any():
        raise excep.ZeroVector(what='restricted_min_eigenvalue')
    n = matrix.shape[0]
    normal = matrix.dot(v)
    norm = np.linalg.norm(normal)
    if norm == 0:
        # v is in the radical, H is everything
        return float(np.linalg.eigvalsh(matrix)[0])
    if n == 1:
        return NOT_APPLICABLE
    _, _, vt = np.linalg.svd((normal / norm).reshape(1, n))
    basis = vt[1:].T
    return float(np.linalg.eigvalsh(basis.T.dot(matrix).dot(basis))[0])


class SpectralCertificate(object):
    """
    Uniform expansion certificate for the family (k d)_k.

    Holds lambda_1, lambda_2, v1, gamma, its threshold, lambda_H and the
    constant C, plus the flags that make it valid.
    """

    def __init__(self, quiver, d, spectrum, gamma, threshold, lambda_h, flags, margin=cons.MARGIN,
                 support_connected=True):
        self.quiver = quiver
        self.d = DimVector(d)
        self.eigenvalues = spectrum.eigenvalues
        self.lambda1 = float(spectrum.eigenvalues[0])
        self.lambda2 = float(spectrum.eigenvalues[1]) if len(spectrum.eigenvalues) > 1 else None
        self.v1 = spectrum.v1
        self.gamma = gamma
        self.gamma_threshold = threshold
        self.lambda_h = lambda_h
        self.margin = margin
        self.support_connected = support_connected
        if lambda_h is NOT_APPLICABLE or lambda_h >= 0:
            self.c_exact = Fraction(1)
            self.c_constant = 1.0
        else:
            self.c_exact = None
            self.c_constant = 1.0 - lambda_h / (self.lambda1 + gamma)
        flags = dict(flags)
        flags['c_positive'] = self.c_constant > 0
        self.flags = flags
        self.valid = all(flags.values())

    def bound(self, delta):
        """C (1 - delta); exact Fraction when C = 1"""
        delta = Fraction(delta)
        if self.c_exact is not None:
            return self.c_exact * (1 - delta)
        return self.c_constant * float(1 - delta)

    def to_dict(self, deltas=()):
        return {
            'quiver': self.quiver.construct_json(),
            'd': list(self.d),
            'eigenvalues': [float(x) for x in self.eigenvalues],
            'lambda1': self.lambda1,
            'lambda2': self.lambda2,
            'v1': [float(x) for x in self.v1],
            'gamma': self.gamma,
            'gamma_threshold': self.gamma_threshold,
            'lambda_H': self.lambda_h,
            'c_constant': self.c_constant,
            'flags': dict(self.flags),
            'valid': self.valid,
            'support_connected': self.support_connected,
            'label': cons.LABEL_CERTIFIED,
            'bound_table': [[str(Fraction(delta)), self.bound(delta)] for delta in deltas],
        }

    def __repr__(self):
        return 'SpectralCertificate(d=%s, gamma=%r, C=%r, valid=%s)' % (
            self.d, self.gamma, self.c_constant, self.valid)


def certificate(quiver, d, tolerance=cons.TOLERANCE, margin=cons.MARGIN):
    """
    Build the certificate for (quiver, d).
    :param quiver: connected wild Quiver
    :param d: DimVector strictly inside the fundamental domain
    """
    quiver.check_index(d)
    d = DimVector(d)
    kind = forms.quiver_type(quiver)
    flags = {
        'connected': quiver_mod.is_connected(quiver),
        'wild': kind == cons.WILD,
        'interior': in_fundamental_domain(quiver, d, strict=True),
    }
    if not flags['connected']:
        raise excep.Disconnected(components=len(quiver_mod.components(quiver)))
    if not flags['wild']:
        raise excep.NotWild(kind=kind)
    if not flags['interior']:
        raise excep.NotInterior(d=d, values=forms.sym_with_units(quiver, d))

    spectrum = cartan_spectrum(quiver, tolerance)
    lambda1, lambda2 = float(spectrum.eigenvalues[0]), float(spectrum.eigenvalues[1])
    dd = forms.sym_form(quiver, d, d)
    dot = sum(a * a for a in d)
    gamma = float(Fraction(dd, dot)) - lambda1
    threshold = gamma_threshold(lambda1, lambda2)
    flags['gamma_below_threshold'] = gamma < threshold - margin
    if not flags['gamma_below_threshold']:
        raise excep.GammaTooLarge(gamma=gamma, threshold=threshold)
    if threshold - gamma < 100 * margin:
        LOG.warning('gamma %r is within %r of its threshold', gamma, threshold - gamma)

    lambda_h = restricted_min_eigenvalue(quiver.cartan, d)
    cert = SpectralCertificate(quiver, d, spectrum, gamma, threshold, lambda_h, flags, margin,
                               support_connected=quiver_mod.support_connected(quiver, d))
    LOG.info('certificate for %s: gamma=%r threshold=%r lambda_H=%r C=%r',
             d, gamma, threshold, lambda_h, cert.c_constant)
    return cert


def find_expander_dimvector(quiver, cap=cons.SCHEDULE_CAP, tolerance=cons.TOLERANCE, margin=cons.MARGIN):
    """
    First t = 1, 2, ... such that d = round(t v1 / min v1) carries a valid
    certificate; the rounding schedule is a heuristic for "close enough to
    the ray through v1".
    :return: (DimVector, SpectralCertificate)
    """
    kind = forms.quiver_type(quiver)
    spectrum = cartan_spectrum(quiver, tolerance)
    if kind != cons.WILD:
        raise excep.NotWild(kind=kind)
    for t in range(1, cap + 1):
        d = DimVector(max(1, int(x)) for x in np.rint(t * spectrum.v1))
        try:
            cert = certificate(quiver, d, tolerance, margin)
        except (excep.NotInterior, excep.GammaTooLarge) as e:
            LOG.debug('t=%d, d=%s rejected: %s', t, d, e)
            continue
        if cert.valid:
            return d, cert
        LOG.debug('t=%d, d=%s rejected: flags %s', t, d, cert.flags)
    raise excep.SearchExhausted(cap=cap)


def decomposition_identity(quiver, d, e):
    """
    e = eta d + x with (d, x) = 0, exact.
    :return: (eta, x) with eta a Fraction and x a tuple of Fractions
    """
    dd = forms.sym_form(quiver, d, d)
    if dd == 0:
        raise excep.NotApplicable(what='decomposition', reason='(d, d) = 0')
    eta = Fraction(forms.sym_form(quiver, d, e), dd)
    x = tuple(Fraction(b) - eta * a for a, b in zip(d, e))
    return eta, x


def bound_chain(quiver, d, cert, tolerance=cons.BOUND_TOLERANCE, budget=cons.LATTICE_BUDGET):
    """
    Check {d, e} <= C eta (1 - eta) (d, d) for every e <= d with
    <e, d - e> >= 0 (d need not be the certified vector; multiples k d give
    the same slope function).
    :return: BoundChainReport(checked, worst_slack, violation)
    """
    d = DimVector(d)
    dd = forms.sym_form(quiver, d, d)
    checked = 0
    worst = None
    violation = None
    for e in lattice.box(d, budget):
        if forms.euler_form(quiver, e, d.minus(e)) < 0:
            continue
        lhs = forms.antisym_form(quiver, d, e)
        eta = Fraction(forms.sym_form(quiver, d, e), dd)
        if cert.c_exact is not None:
            rhs = cert.c_exact * eta * (1 - eta) * dd
        else:
            rhs = cert.c_constant * float(eta * (1 - eta) * dd)
        slack = float(rhs - lhs)
        checked += 1
        if worst is None or slack < worst:
            worst = slack
        if slack < -tolerance and violation is None:
            violation = e
    return BoundChainReport(checked, worst, violation)


def corollary_check(quiver, d, cert, deltas, k_max, budget=cons.LATTICE_BUDGET):
    """
    eps_eff(k d, delta) >= C (1 - delta) for k = 1..k_max and the given
    deltas; Unconstrained values pass.
    :return: CorollaryReport(checked, worst_slack, violation as (k, delta))
    """
    mu = slope_mod.slope_from_d(quiver, d)
    d = DimVector(d)
    checked = 0
    worst = None
    violation = None
    for delta in deltas:
        bound = cert.bound(delta)
        scan = expansion.uniform_scan(quiver, mu, d, delta, k_max, cons.EPS_EFF, budget=budget)
        for k, value in zip(scan.ks, scan.values):
            checked += 1
            if not value.constrained:
                continue
            slack = value.value - bound
            if worst is None or slack < worst:
                worst = slack
            if slack < 0 and violation is None:
                violation = (k, Fraction(delta))
    return CorollaryReport(checked, worst, violation)
