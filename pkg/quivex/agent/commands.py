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

""" Sub-commands of the quivex command line.

Every handler reads its arguments from CONF.command, prints a short summary
on stdout and returns a Report; the caller writes the report file when
--output is given.
"""

import logging
from fractions import Fraction

from oslo_config import cfg

from quivex import config
from quivex import report as report_mod
from quivex.common import constants as cons
from quivex.common import exception as excep
from quivex.core import forms
from quivex.core import quiver as quiver_mod
from quivex.coxeter import transform
from quivex.kronecker import bounds
from quivex.oracle import subrep
from quivex.sampler import witness
from quivex.spectral import appendix
from quivex.spectral import certificate as cert_mod
from quivex.stability import expansion
from quivex.stability import slope as slope_mod

CONF = cfg.CONF

LOG = logging.getLogger(__name__)

DELTA_GRID = tuple(Fraction(k, 10) for k in range(1, 10))

CSV_HELP = 'CSV columns: scan %s; kronecker %s; coxeter %s; certify %s' % (
    ','.join(cons.CSV_SCAN_COLUMNS), ','.join(cons.CSV_KRONECKER_COLUMNS),
    ','.join(cons.CSV_ORBIT_COLUMNS), ','.join(cons.CSV_BOUND_COLUMNS))


def rational(text):
    """argparse type for p/q rationals"""
    return Fraction(text)


def _emit(lines):
    for line in lines:
        print(line)


def _fmt(value):
    return report_mod.fmt(value, CONF.output.float_digits)


def _load():
    return quiver_mod.load(CONF.command.quiver)


def _report(data, columns=None, rows=None, seed=None, label=cons.LABEL_CERTIFIED):
    path = getattr(CONF.command, 'quiver', None)
    return report_mod.Report(CONF.command.name, data, columns, rows,
                             input_digest=report_mod.digest(path), seed=seed,
                             budgets=config.budgets(), label=label)


def _slope_function(quiver, d):
    """mu from --from-d, or from --theta and --kappa"""
    if CONF.command.from_d:
        return slope_mod.slope_from_d(quiver, d)
    if CONF.command.theta is None or CONF.command.kappa is None:
        raise excep.MalformedInput(reason='give --from-d or both --theta and --kappa')
    quiver.check_index(CONF.command.theta)
    quiver.check_index(CONF.command.kappa)
    return slope_mod.SlopeFunction(CONF.command.theta, CONF.command.kappa)


def do_classify():
    quiver = _load()
    lines = []
    rows = []
    for part, component in zip(forms.classify(quiver), quiver_mod.components(quiver)):
        spectrum = cert_mod.cartan_spectrum(component)
        values = [float(x) for x in spectrum.eigenvalues]
        shown = ', '.join('λ%d=%s' % (i + 1, _fmt(x)) for i, x in enumerate(values[:2]))
        lines.append('%s; %s' % (part.kind, shown))
        rows.append({'vertices': list(part.vertices), 'kind': part.kind, 'nullity': part.nullity,
                     'eigenvalues': values})
    _emit(lines)
    return _report({'components': rows})


def do_form():
    quiver = _load()
    # differences d - e are allowed, so entries may be negative
    d, e = tuple(CONF.command.d), tuple(CONF.command.e)
    quiver.check_index(d)
    quiver.check_index(e)
    values = {
        'euler': forms.euler_form(quiver, d, e),
        'sym': forms.sym_form(quiver, d, e),
        'antisym': forms.antisym_form(quiver, d, e),
    }
    _emit(['<d,e>=%s (d,e)=%s {d,e}=%s' % (values['euler'], values['sym'], values['antisym'])])
    return _report(values)


def do_embeds():
    quiver = _load()
    e, d = quiver.dim_vector(CONF.command.e), quiver.dim_vector(CONF.command.d)
    result = subrep.embeds(quiver, e, d, budget=CONF.oracle.lattice_budget)
    _emit([_fmt(result)])
    return _report({'e': e, 'd': d, 'embeds': result})


def do_subreps():
    quiver = _load()
    d = quiver.dim_vector(CONF.command.d)
    result = subrep.general_subreps(quiver, d, budget=CONF.oracle.lattice_budget)
    _emit([_fmt(e) for e in result])
    return _report({'d': d, 'general_subreps': result})


def do_epsilon():
    quiver = _load()
    d = quiver.dim_vector(CONF.command.d)
    mu = _slope_function(quiver, d)
    deltas = CONF.command.delta or DELTA_GRID
    values = expansion.epsilon_profile(quiver, mu, d, deltas, CONF.command.which,
                                       budget=CONF.oracle.lattice_budget)
    if len(deltas) == 1:
        _emit([str(values[0])])
    else:
        _emit(['delta=%s: %s' % (delta, value) for delta, value in zip(deltas, values)])
    rows = [(Fraction(delta), value.value, value.witness) for delta, value in zip(deltas, values)]
    return _report({'d': d, 'which': CONF.command.which, 'mu': repr(mu),
                    'values': [[str(Fraction(r[0])), r[1], r[2]] for r in rows]},
                   ('delta', 'epsilon', 'witness'), rows)


def do_exists():
    quiver = _load()
    d = quiver.dim_vector(CONF.command.d)
    mu = _slope_function(quiver, d)
    verdict = expansion.expander_exists(quiver, mu, d, CONF.command.delta, CONF.command.eps,
                                        budget=CONF.oracle.lattice_budget)
    if verdict.exists:
        _emit(['true'])
    else:
        _emit(['false witness %s' % (verdict.witness,)])
    return _report({'d': d, 'delta': CONF.command.delta, 'eps': CONF.command.eps,
                    'exists': verdict.exists, 'witness': verdict.witness})


def do_scan():
    quiver = _load()
    d = quiver.dim_vector(CONF.command.d)
    mu = _slope_function(quiver, d)
    rows = []
    lines = []
    for delta in CONF.command.delta or DELTA_GRID:
        scan = expansion.uniform_scan(quiver, mu, d, delta, CONF.command.kmax, CONF.command.which,
                                      budget=CONF.oracle.lattice_budget)
        for k, value, running in zip(scan.ks, scan.values, scan.running_min):
            rows.append((k, Fraction(delta), value.value, value.witness))
            lines.append('k=%d delta=%s: %s; running min %s' % (
                k, delta, value, running.value if running.constrained else cons.UNCONSTRAINED))
    _emit(lines)
    return _report({'d': d, 'which': CONF.command.which, 'kmax': CONF.command.kmax},
                   cons.CSV_SCAN_COLUMNS, rows)


def do_certify():
    quiver = _load()
    spectral = CONF.spectral
    if CONF.command.d:
        d = quiver.dim_vector(CONF.command.d)
        cert = cert_mod.certificate(quiver, d, spectral.tolerance, spectral.margin)
    else:
        d, cert = cert_mod.find_expander_dimvector(quiver, spectral.schedule_cap, spectral.tolerance,
                                                   spectral.margin)
    deltas = CONF.command.delta or DELTA_GRID
    rows = [(Fraction(delta), cert.bound(delta)) for delta in deltas]
    lines = ['certificate for %s: valid=%s gamma=%s threshold=%s C=%s' % (
        d, _fmt(cert.valid), _fmt(cert.gamma), _fmt(cert.gamma_threshold), _fmt(cert.c_constant))]
    lines.extend('delta=%s: eps >= %s' % (delta, _fmt(bound)) for delta, bound in rows)
    data = cert.to_dict(deltas)
    if CONF.command.chain:
        chain = cert_mod.bound_chain(quiver, d.scale(CONF.command.chain), cert, spectral.bound_tolerance,
                                     CONF.oracle.lattice_budget)
        lines.append('bound chain at %d d: %d checked, worst slack %s, violation %s' % (
            CONF.command.chain, chain.checked, _fmt(chain.worst_slack), chain.violation))
        data['bound_chain'] = chain._asdict()
    _emit(lines)
    return _report(data, cons.CSV_BOUND_COLUMNS, rows)


def do_kronecker():
    args = CONF.command
    instance = bounds.KroneckerInstance(args.m, args.d1, args.d2, *(args.kappa or (1, 1)))
    if args.translate:
        if args.delta is None or args.eps is None:
            raise excep.MalformedInput(reason='--translate needs --delta and --eps')
        delta_prime, eps_prime = bounds.translate_delta_eps(instance, args.delta, args.eps)
        _emit(["delta'=%s eps'=%s" % (delta_prime, eps_prime)])
        return _report({'instance': repr(instance), 'delta': args.delta, 'eps': args.eps,
                        'delta_prime': delta_prime, 'eps_prime': eps_prime})
    deltas = [Fraction(k, args.points + 1) for k in range(1, args.points + 1)]
    rows = bounds.curve(instance, deltas)
    _emit(['delta=%s zeta=%s eps=%s' % (delta, _fmt(z), _fmt(eps)) for delta, z, eps in rows])
    return _report({'instance': repr(instance)}, cons.CSV_KRONECKER_COLUMNS, rows)


def do_coxeter():
    quiver = _load()
    args = CONF.command
    data = transform.coxeter(quiver)
    lines = ['%s; rho=%s' % (data.kind, _fmt(data.rho))]
    body = data.to_dict()
    rows = []
    if args.slopes:
        if args.d is None:
            raise excep.MalformedInput(reason='--slopes needs --d')
        d = quiver.dim_vector(args.d)
        mu = _slope_function(quiver, d)
        result = transform.slope_convergence_report(quiver, mu, args.vertex, args.nmax, data)
        rows = [(k, v, s, g) for k, v, s, g in result.rows()]
        lines.append('target mu(y-)=%s' % _fmt(result.target))
        lines.extend('k=%d %s slope=%s gap=%s' % (k, v, _fmt(s), _fmt(g)) for k, v, s, g in rows)
        body['slopes'] = result.to_dict()
    else:
        if args.injective:
            orbit = transform.inj_orbit(quiver, args.vertex, args.nmax, data)
        else:
            orbit = transform.tau_orbit(quiver, args.vertex, args.nmax, data)
        lines.extend('k=%d %s' % (k, v) for k, v in enumerate(orbit))
        rows = [(k, v, None, None) for k, v in enumerate(orbit)]
        body['orbit'] = orbit
    _emit(lines)
    return _report(body, cons.CSV_ORBIT_COLUMNS, rows)


def do_sample():
    quiver = _load()
    args = CONF.command
    d = quiver.dim_vector(args.d)
    p, budget = CONF.sampler.prime, CONF.sampler.subspace_budget
    seeds = list(range(args.seed, args.seed + CONF.sampler.samples))
    LOG.warning('sampler verdicts over F_%d are empirical', p)
    if args.genericity:
        result = witness.genericity_report(quiver, d, p, seeds, budget)
        _emit(['%s general=%s hits=%d/%d' % (e, _fmt(general), hits, total)
               for e, general, hits, total in result.rows])
        return _report(result.to_dict(), seed=args.seed, label=cons.LABEL_EMPIRICAL)
    samples = []
    lines = []
    if args.check:
        if args.delta is None or args.eps is None:
            raise excep.MalformedInput(reason='--check needs --delta and --eps')
        mu = _slope_function(quiver, d)
        passed = 0
        for seed in seeds:
            rep = witness.sample_rep(quiver, d, p, seed)
            verdict = witness.empirical_expander_check(rep, mu, args.delta, args.eps, budget)
            passed += verdict.passed
            entry = {'seed': seed, 'passed': verdict.passed, 'witness': verdict.witness}
            if verdict.witness is not None:
                entry['subspaces'] = witness.has_subrep(rep, verdict.witness, budget).witness
            samples.append(entry)
        lines.append('%d/%d samples pass (%s)' % (passed, len(seeds), cons.LABEL_EMPIRICAL))
    else:
        for seed in seeds:
            rep = witness.sample_rep(quiver, d, p, seed)
            dims = sorted(witness.all_subrep_dims(rep, budget))
            samples.append({'seed': seed, 'subrep_dims': dims})
            lines.append('seed=%d: %s' % (seed, ' '.join(str(e) for e in dims)))
    _emit(lines)
    return _report({'d': d, 'p': p, 'samples': samples}, seed=args.seed, label=cons.LABEL_EMPIRICAL)


def do_verify_appendix():
    args = CONF.command
    result = appendix.verify_appendix_lemma(args.n, args.trials, args.seed, CONF.spectral.tolerance)
    lines = ['%d/%d pass; worst margin %s' % (result.passed, len(result.trials), _fmt(result.worst_margin))]
    data = result.to_dict()
    if args.tightness:
        probe = appendix.tightness_probe()
        lines.extend('gamma=%s of threshold: margin %s' % (_fmt(f), _fmt(m)) for f, _, m in probe)
        data['tightness'] = probe
    _emit(lines)
    return _report(data, seed=args.seed)


def _quiver_parser(subparsers, name, func, help_text):
    parser = subparsers.add_parser(name, help=help_text, epilog=CSV_HELP)
    parser.add_argument('quiver', help='quiver file, text or JSON')
    parser.add_argument('--output', dest='report_file', help='report file, relative to the output directory')
    parser.set_defaults(func=func)
    return parser


def _slope_args(parser):
    parser.add_argument('--from-d', dest='from_d', action='store_true',
                        help='use the slope function attached to d')
    parser.add_argument('--theta', nargs='+', type=rational, help='Theta on the vertices')
    parser.add_argument('--kappa', nargs='+', type=rational, help='kappa on the vertices, all > 0')


def add_command_parsers(subparsers):
    _quiver_parser(subparsers, 'classify', do_classify, 'type and Cartan spectrum per component')

    parser = _quiver_parser(subparsers, 'form', do_form, 'Euler, symmetric and antisymmetric form values')
    parser.add_argument('--d', nargs='+', type=int, required=True)
    parser.add_argument('--e', nargs='+', type=int, required=True)

    parser = _quiver_parser(subparsers, 'embeds', do_embeds, 'decide e -> d')
    parser.add_argument('--e', nargs='+', type=int, required=True)
    parser.add_argument('--d', nargs='+', type=int, required=True)

    parser = _quiver_parser(subparsers, 'subreps', do_subreps, 'all general subrepresentations of d')
    parser.add_argument('--d', nargs='+', type=int, required=True)

    parser = _quiver_parser(subparsers, 'epsilon', do_epsilon, 'expansion coefficient')
    parser.add_argument('--d', nargs='+', type=int, required=True)
    parser.add_argument('--which', choices=cons.EPS_KINDS, default=cons.EPS_EFF)
    parser.add_argument('--delta', action='append', type=rational, help='repeat for several values')
    _slope_args(parser)

    parser = _quiver_parser(subparsers, 'exists', do_exists, 'whether a (delta, eps)-expander exists')
    parser.add_argument('--d', nargs='+', type=int, required=True)
    parser.add_argument('--delta', type=rational, required=True)
    parser.add_argument('--eps', type=rational, required=True)
    _slope_args(parser)

    parser = _quiver_parser(subparsers, 'scan', do_scan, 'expansion coefficients along k d')
    parser.add_argument('--d', nargs='+', type=int, required=True)
    parser.add_argument('--kmax', type=int, required=True)
    parser.add_argument('--which', choices=cons.EPS_KINDS, default=cons.EPS_EFF)
    parser.add_argument('--delta', action='append', type=rational, help='repeat for several values')
    _slope_args(parser)

    parser = _quiver_parser(subparsers, 'certify', do_certify, 'spectral uniform expansion certificate')
    parser.add_argument('--d', nargs='+', type=int, help='searched along the ray of v1 when omitted')
    parser.add_argument('--delta', action='append', type=rational, help='repeat for several values')
    parser.add_argument('--chain', type=int, default=0, help='check the bound chain at this multiple of d')

    parser = subparsers.add_parser('kronecker', help='closed-form Kronecker bounds', epilog=CSV_HELP)
    parser.add_argument('--m', type=int, required=True)
    parser.add_argument('--d1', type=int, required=True)
    parser.add_argument('--d2', type=int, required=True)
    parser.add_argument('--kappa', nargs=2, type=rational)
    group = parser.add_mutually_exclusive_group()
    group.add_argument('--curve', action='store_true', help='zeta and eps bound over a delta grid (default)')
    group.add_argument('--translate', action='store_true', help='translate (delta, eps) to the slope notion')
    parser.add_argument('--points', type=int, default=99)
    parser.add_argument('--delta', type=rational)
    parser.add_argument('--eps', type=rational)
    parser.add_argument('--output', dest='report_file', help='report file, relative to the output directory')
    parser.set_defaults(func=do_kronecker)

    parser = _quiver_parser(subparsers, 'coxeter', do_coxeter, 'Coxeter data, orbits and slope convergence')
    parser.add_argument('--vertex', required=True)
    parser.add_argument('--nmax', type=int, default=12)
    group = parser.add_mutually_exclusive_group()
    group.add_argument('--orbit', action='store_true', help='preprojective orbit of P_i (default)')
    group.add_argument('--slopes', action='store_true', help='slope convergence along the orbit')
    parser.add_argument('--injective', action='store_true', help='preinjective orbit of I_i')
    parser.add_argument('--d', nargs='+', type=int)
    _slope_args(parser)

    parser = _quiver_parser(subparsers, 'sample', do_sample, 'empirical checks over a prime field')
    parser.add_argument('--d', nargs='+', type=int, required=True)
    parser.add_argument('--seed', type=int, default=0)
    group = parser.add_mutually_exclusive_group()
    group.add_argument('--check', action='store_true', help='empirical (delta, eps)-expander check')
    group.add_argument('--genericity', action='store_true', help='compare with general subrepresentations')
    parser.add_argument('--delta', type=rational)
    parser.add_argument('--eps', type=rational)
    _slope_args(parser)

    parser = subparsers.add_parser('verify-appendix', help='random instances of the restricted eigenvalue lemma')
    parser.add_argument('--n', nargs='+', type=int, default=[2, 3, 4, 5, 6, 7, 8])
    parser.add_argument('--trials', type=int, default=1000)
    parser.add_argument('--seed', type=int, default=0)
    parser.add_argument('--tightness', action='store_true')
    parser.add_argument('--output', dest='report_file', help='report file, relative to the output directory')
    parser.set_defaults(func=do_verify_appendix)


command_opt = cfg.SubCommandOpt('command',
                                title='Commands',
                                help='Available commands',
                                handler=add_command_parsers)

CONF.register_cli_opt(command_opt)
