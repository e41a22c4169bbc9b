"""The `eo` command line."""

import argparse
import csv
import io
import itertools
import json
import logging
import sys

from eo_curves import catalan, schur, wkb
from eo_curves.algebra import encode_rational
from eo_curves.cache import CacheStore, count_decoder
from eo_curves.config import RunConfig, OUTPUT_FORMATS
from eo_curves.errors import EOError, ConfigError
from eo_curves.hurwitz import numbers, free_energy, scoeff
from eo_curves.verify import run_suites, run_checks, SUITES
from eo_curves.verify.suites import schur_suite

HURWITZ_CHECKS = ('recursion', 'heat', 'zhou', 'commutator', 'lambert')


def _profile(text: str):
    try:
        return tuple(int(v) for v in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError('expected comma separated integers, got %r' % text)


def _order(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        value = -1
    if value < 0:
        raise argparse.ArgumentTypeError('expected a non-negative integer, got %r' % text)
    return value


def _common():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--output', choices=OUTPUT_FORMATS, default='json')
    parser.add_argument('--jobs', type=int, default=1)
    parser.add_argument('--tolerance', type=float, default=1e-8)
    parser.add_argument('--cache-dir', dest='cache_dir')
    parser.add_argument('--verbose', action='store_true')
    return parser


def _profile_args(parser):
    parser.add_argument('--g', type=int, required=True)
    parser.add_argument('--n', type=int, required=True)
    parser.add_argument('--mu', type=_profile, required=True)


def _parse_args(argv=None) -> argparse.Namespace:
    common = _common()
    parser = argparse.ArgumentParser(prog='eo', description='Exact computations and identity checks for the Catalan and Hurwitz B-models.')
    commands = parser.add_subparsers(dest='command', required=True)

    cat = commands.add_parser('catalan').add_subparsers(dest='subcommand', required=True)
    _profile_args(cat.add_parser('count', parents=[common]))
    p = cat.add_parser('free-energy', parents=[common])
    p.add_argument('--g', type=int, required=True)
    p.add_argument('--n', type=int, required=True)
    p = cat.add_parser('s-coeff', parents=[common])
    p.add_argument('--m', type=_order, required=True)
    p.add_argument('--source', choices=('assembled', 'recursive'), default='assembled')
    p = cat.add_parser('verify-schrodinger', parents=[common])
    p.add_argument('--max-order', dest='max_order', type=_order, default=4)

    hur = commands.add_parser('hurwitz').add_subparsers(dest='subcommand', required=True)
    _profile_args(hur.add_parser('number', parents=[common]))
    p = hur.add_parser('free-energy', parents=[common])
    p.add_argument('--g', type=int, required=True)
    p.add_argument('--n', type=int, required=True)
    p = hur.add_parser('s-coeff', parents=[common])
    p.add_argument('--m', type=_order, required=True)
    p = hur.add_parser('verify', parents=[common])
    p.add_argument('--check', choices=HURWITZ_CHECKS)
    p.add_argument('--max-order', dest='max_order', type=_order, default=4)

    w = commands.add_parser('wkb').add_subparsers(dest='subcommand', required=True)
    p = w.add_parser('corrections', parents=[common])
    p.add_argument('--model', choices=sorted(wkb.CURVES), required=True)
    p.add_argument('--order', type=_order, default=4)
    p = w.add_parser('s-prime', parents=[common])
    p.add_argument('--model', choices=sorted(wkb.CURVES), required=True)
    p.add_argument('--n', type=int, required=True)

    s = commands.add_parser('schur').add_subparsers(dest='subcommand', required=True)
    p = s.add_parser('verify', parents=[common])
    p.add_argument('--max-weight', dest='max_weight', type=_order, default=6)
    p.add_argument('--s-order', dest='s_order', type=_order, default=6)
    p = s.add_parser('character', parents=[common])
    p.add_argument('--mu', type=_profile, required=True)
    p.add_argument('--lambda', dest='lam', type=_profile)

    p = commands.add_parser('verify', parents=[common])
    p.add_argument('--suite', choices=SUITES + ('all',), default='all')
    p.add_argument('--max-order', dest='max_order', type=_order, default=4)

    c = commands.add_parser('cache').add_subparsers(dest='subcommand', required=True)
    p = c.add_parser('export', parents=[common])
    p.add_argument('--warm', type=_order, default=0, help='precompute counts with |mu| <= WARM before exporting')
    c.add_parser('import', parents=[common])

    return parser.parse_args(argv)


def _config(args) -> RunConfig:
    skip = {'command', 'subcommand', 'output', 'jobs', 'tolerance', 'cache_dir', 'verbose'}
    params = {k: list(v) if isinstance(v, tuple) else v for k, v in vars(args).items() if k not in skip}
    return RunConfig(args.command, getattr(args, 'subcommand', None), params, args.output, args.cache_dir,
                     args.jobs, args.tolerance, args.verbose)


TABLES = [(catalan.counts, count_decoder), (numbers.numbers, None)]


def _load_caches(store: CacheStore):
    accepted = {}
    for table, decoder in TABLES:
        accepted[table.name] = store.load(table, decoder) if decoder else store.load(table)
    return accepted


def _warm(size: int):
    for n in range(1, 4):
        for mu in itertools.combinations_with_replacement(range(size, 0, -1), n):
            if sum(mu) > size:
                continue
            for g in range(size // 2 + 1):
                if sum(mu) % 2 == 0:
                    catalan.catalan_count(g, n, mu)
                if numbers.branch_points(g, mu) <= size + 2:
                    numbers.hurwitz_number(g, n, mu)


def _emit(payload, output: str):
    if output == 'json':
        print(json.dumps(payload, sort_keys=True, indent=1))
    elif output == 'csv':
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        rows = payload.items() if isinstance(payload, dict) else enumerate(payload)
        for k, v in rows:
            writer.writerow([k, v if isinstance(v, str) else json.dumps(v, sort_keys=True)])
        sys.stdout.write(buffer.getvalue())
    else:
        items = payload.items() if isinstance(payload, dict) else enumerate(payload)
        for k, v in items:
            print('%s: %s' % (k, v))


def _scalar(value, output: str, **key):
    if output == 'csv':
        _emit(dict(key, value=encode_rational(value)), output)
    else:
        print(encode_rational(value))


def _s_payload(s_m):
    payload = {'m': s_m.m, 'x_derivative': s_m.x_derivative().to_json()}
    if s_m.value is not None:
        payload['value'] = s_m.in_z().to_json()
    return payload


def _dispatch(args, config: RunConfig) -> int:
    key = (args.command, getattr(args, 'subcommand', None))
    output = config.output
    meta = config.to_dict()

    if key == ('catalan', 'count'):
        _scalar(catalan.catalan_count(args.g, args.n, args.mu), output, g=args.g, n=args.n, mu=list(args.mu))
    elif key == ('catalan', 'free-energy'):
        _emit(catalan.free_energy_C(args.g, args.n).to_json(), output)
    elif key == ('catalan', 's-coeff'):
        _emit(_s_payload(catalan.s_coeff_C(args.m, args.source)), output)
    elif key == ('catalan', 'verify-schrodinger'):
        return _report(run_suites('catalan', args.max_order, config.tolerance, config.jobs, meta, only='catalan.schrodinger'), output)
    elif key == ('hurwitz', 'number'):
        _scalar(numbers.hurwitz_number(args.g, args.n, args.mu), output, g=args.g, n=args.n, mu=list(args.mu))
    elif key == ('hurwitz', 'free-energy'):
        _emit(free_energy.free_energy_H(args.g, args.n).to_json(), output)
    elif key == ('hurwitz', 's-coeff'):
        _emit(_s_payload(scoeff.s_coeff_H(args.m)), output)
    elif key == ('hurwitz', 'verify'):
        only = 'hurwitz.%s' % args.check if args.check else None
        return _report(run_suites('hurwitz', args.max_order, config.tolerance, config.jobs, meta, only=only), output)
    elif key == ('wkb', 'corrections'):
        corrections = wkb.recover_corrections(args.model, args.order)
        _emit({'model': args.model, 'status': 'fail' if any(corrections) else 'pass',
               'corrections': [a.to_json() for a in corrections]}, output)
        return 1 if any(corrections) else 0
    elif key == ('wkb', 's-prime'):
        _emit({'model': args.model, 'n': args.n, 's_prime': wkb.s_prime_from_hierarchy(args.model, args.n).to_json()}, output)
    elif key == ('schur', 'verify'):
        checks = schur_suite(max_weight=args.max_weight, s_order=args.s_order)
        return _report(run_checks('schur', checks, config.jobs, meta), output)
    elif key == ('schur', 'character'):
        dim, chi = schur.dim_and_character(args.mu, args.lam)
        _emit({'mu': list(args.mu), 'dimension': dim, 'character': chi}, output)
    elif args.command == 'verify':
        return _report(run_suites(args.suite, args.max_order, config.tolerance, config.jobs, meta), output)
    elif key == ('cache', 'export'):
        store = CacheStore(config.cache_dir)
        _load_caches(store)
        if args.warm:
            _warm(args.warm)
        for table, _ in TABLES:
            store.store(table)
        _emit({table.name: len(table) for table, _ in TABLES}, output)
    elif key == ('cache', 'import'):
        _emit(_load_caches(CacheStore(config.cache_dir)), output)

    return 0


def _report(report, output: str) -> int:
    print(report.render(output))
    return report.exit_code()


def main(argv=None) -> int:
    args = _parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)

    try:
        config = _config(args)
        if args.command != 'cache':
            _load_caches(CacheStore(config.cache_dir))
        return _dispatch(args, config)
    except ConfigError as e:
        print('eo: %s' % e, file=sys.stderr)
        return 2
    except EOError as e:
        print('eo: %s: %s' % (type(e).__name__, e), file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as e:
        print('eo: invalid argument: %s: %s' % (type(e).__name__, e), file=sys.stderr)
        return 2


if __name__ == '__main__':
    raise SystemExit(main())
