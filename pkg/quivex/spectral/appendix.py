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

""" Numerical verifier for the hyperplane eigenvalue estimate:

Let (_, _) be symmetric on R^n with eigenvalues l_1 < l_2 <= ... <= l_n and
let v be a unit vector with (v, v) = l_1 + gamma, 0 <= gamma < threshold(l_1, l_2).
Then the minimal eigenvalue of (_, _) on H = Ker(v, _) is strictly bigger
than l_1 + gamma.
"""

import collections
import logging

import numpy as np

from quivex.common import constants as cons
from quivex.common import exception as excep
from quivex.spectral import certificate as cert_mod

LOG = logging.getLogger(__name__)

Instance = collections.namedtuple('Instance', ['eigenvalues', 'rotation', 'matrix', 'v', 'gamma', 'threshold'])
TrialResult = collections.namedtuple('TrialResult', ['trial', 'n', 'gamma', 'threshold', 'lambda_h',
                                                     'target', 'margin', 'passed', 'resolvent_monotone'])


class AppendixReport(object):
    """Outcome of a batch of random instances"""

    def __init__(self, seed, tolerance):
        self.seed = seed
        self.tolerance = tolerance
        self.trials = []

    @property
    def passed(self):
        return sum(1 for t in self.trials if t.passed)

    @property
    def worst_margin(self):
        if not self.trials:
            return None
        return min(t.margin for t in self.trials)

    @property
    def failures(self):
        return [t for t in self.trials if not t.passed]

    def summary(self):
        return '%d/%d pass; worst margin %s' % (self.passed, len(self.trials), self.worst_margin)

    def to_dict(self):
        return {
            'seed': self.seed,
            'tolerance': self.tolerance,
            'trials': len(self.trials),
            'passed': self.passed,
            'worst_margin': self.worst_margin,
            'label': cons.LABEL_CERTIFIED,
            'per_trial': [t._asdict() for t in self.trials],
        }


def random_rotation(rng, n):
    """orthogonal matrix from the QR factorization of a Gaussian matrix"""
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))


def sample_eigenvalues(rng, n, gap=0.05, scale=5.0):
    """lambda_1 < 0 and lambda_1 + gap <= lambda_2 <= ... <= lambda_n"""
    lambda1 = -rng.uniform(gap, scale)
    rest = np.sort(rng.uniform(lambda1 + gap, scale, size=n - 1))
    return np.concatenate(([lambda1], rest))


def vector_with_rayleigh(eigenvalues, target, direction):
    """
    Unit vector, in eigen coordinates, whose Rayleigh quotient is target.
    :param direction: vector in the span of the coordinates 2..n
    """
    direction = np.asarray(direction, dtype=float)
    direction = direction / np.linalg.norm(direction)
    tail = float(np.dot(eigenvalues[1:], direction ** 2))
    lambda1 = eigenvalues[0]
    # tail >= lambda_2 > target, so the weight is in [0, 1)
    weight = (target - lambda1) / (tail - lambda1)
    return np.concatenate(([np.sqrt(1.0 - weight)], np.sqrt(weight) * direction))


def sample_instance(rng, n):
    """a random instance fulfilling the hypotheses by construction"""
    if n < 2:
        raise excep.OutOfRange(name='n', value=n, allowed='[2, inf)')
    eigenvalues = sample_eigenvalues(rng, n)
    threshold = cert_mod.gamma_threshold(eigenvalues[0], eigenvalues[1])
    gamma = rng.uniform(0.0, threshold)
    v_eig = vector_with_rayleigh(eigenvalues, eigenvalues[0] + gamma, rng.standard_normal(n - 1))
    rotation = random_rotation(rng, n)
    matrix = rotation.dot(np.diag(eigenvalues)).dot(rotation.T)
    return Instance(eigenvalues, rotation, matrix, rotation.dot(v_eig), gamma, threshold)


def resolvent_monotone(eigenvalues, v_eig, points=50):
    """
    R(x) = sum_i l_i^2 v_i^2 / (l_i - x) is strictly increasing on a grid of
    the open interval (l_1, l_2); True when l_1 = l_2 leaves no interval.
    """
    lambda1, lambda2 = eigenvalues[0], eigenvalues[1]
    if not lambda1 < lambda2:
        return True
    grid = np.linspace(lambda1, lambda2, points + 2)[1:-1]
    weights = (np.asarray(eigenvalues) * np.asarray(v_eig)) ** 2
    values = [float(np.sum(weights / (eigenvalues - x))) for x in grid]
    return all(b > a for a, b in zip(values, values[1:]))


def verify_appendix_lemma(n, trials, seed, tolerance=cons.TOLERANCE):
    """
    Run seeded random instances and check lambda_H > lambda_1 + gamma - tolerance.
    :param n: dimension, or a sequence of dimensions used in turn
    :param trials: number of instances
    :param seed: generator seed
    :return: AppendixReport
    """
    dims = list(n) if isinstance(n, (list, tuple, range)) else [n]
    for dim in dims:
        if dim < 2:
            raise excep.OutOfRange(name='n', value=dim, allowed='[2, inf)')
    rng = np.random.default_rng(seed)
    report = AppendixReport(seed, tolerance)
    for trial in range(trials):
        dim = dims[trial % len(dims)]
        inst = sample_instance(rng, dim)
        lambda_h = cert_mod.restricted_min_eigenvalue(inst.matrix, inst.v)
        target = float(inst.eigenvalues[0] + inst.gamma)
        margin = lambda_h - target
        monotone = resolvent_monotone(inst.eigenvalues, inst.rotation.T.dot(inst.v))
        result = TrialResult(trial, dim, float(inst.gamma), float(inst.threshold), lambda_h,
                             target, margin, margin > -tolerance, monotone)
        if not result.passed:
            LOG.warning('trial %d (n=%d) fails: lambda_H=%r, lambda_1+gamma=%r', trial, dim, lambda_h, target)
        report.trials.append(result)
    LOG.info('appendix verifier: %s', report.summary())
    return report


def tightness_probe(eigenvalues=(-1.0, 5.0), fractions=(0.9, 0.95, 0.99, 0.995, 0.999)):
    """
    In dimension 2, push gamma towards its threshold and return the margins
    lambda_H - (lambda_1 + gamma), which go to 0.
    :return: list of (fraction, gamma, margin)
    """
    eigenvalues = np.asarray(eigenvalues, dtype=float)
    if len(eigenvalues) != 2:
        raise excep.OutOfRange(name='n', value=len(eigenvalues), allowed='{2}')
    threshold = cert_mod.gamma_threshold(eigenvalues[0], eigenvalues[1])
    matrix = np.diag(eigenvalues)
    result = []
    for fraction in fractions:
        gamma = fraction * threshold
        v = vector_with_rayleigh(eigenvalues, eigenvalues[0] + gamma, [1.0])
        lambda_h = cert_mod.restricted_min_eigenvalue(matrix, v)
        result.append((fraction, gamma, lambda_h - (eigenvalues[0] + gamma)))
    return result
