import contextlib
import io
import json
import os
import shutil
import tempfile
import threading
import unittest
from unittest import mock

from pyevents.events import Listeners

from eo_curves import catalan
from eo_curves.cache import *
from eo_curves.cli import main
from eo_curves.config import RunConfig
from eo_curves.errors import ConfigError, InsufficientData, PathMismatch
from eo_curves.hurwitz import numbers
from eo_curves.verify import *


def _run(*argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = main(list(argv))
    return code, out.getvalue()


class TestCacheStore(unittest.TestCase):
    """
    JSON snapshots of the memo tables
    """

    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.store = CacheStore(self.directory)

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_keys(self):
        self.assertEqual(encode_key((1, (3, 1))), '1,2,3,1')
        self.assertEqual(decode_key('1,2,1,3'), (1, (3, 1)))
        self.assertRaises(ValueError, decode_key, '1,3,1,3')

    def test_round_trip(self):
        catalan.catalan_count(1, 2, (4, 2))
        before = dict(catalan.counts.items())

        events = []
        self.store.listeners += events.append
        self.store.store(catalan.counts)
        self.assertEqual(events[0]['type'], 'store_table')

        catalan.counts.clear()
        self.assertEqual(self.store.load(catalan.counts, count_decoder), len(before))
        self.assertEqual(dict(catalan.counts.items()), before)

    def test_hurwitz_round_trip(self):
        numbers.hurwitz_number(1, 2, (2, 1))
        before = dict(numbers.numbers.items())
        self.store.store(numbers.numbers)
        numbers.numbers.clear()
        self.store.load(numbers.numbers)
        self.assertEqual(dict(numbers.numbers.items()), before)

    def test_tampered_entry(self):
        with open(self.store.path(catalan.counts.name), 'w') as f:
            json.dump({'0,1,2': '1/3'}, f)

        catalan.counts.clear()
        with self.assertLogs('eo_curves.memo', level='WARNING'):
            self.assertEqual(self.store.load(catalan.counts, count_decoder), 0)
        self.assertEqual(catalan.catalan_count(0, 1, (2,)), 1)

    def test_malformed_entry(self):
        with open(self.store.path('broken'), 'w') as f:
            json.dump({'0,1,2': 'x', '0,1,4': '2'}, f)

        with self.assertLogs('eo_curves.cache.store', level='WARNING'):
            values = CacheStore.restore(self.store.path('broken'), count_decoder)
        self.assertEqual(values, {(0, (4,)): 2})

    def test_corrupt_file(self):
        with open(self.store.path('broken'), 'w') as f:
            f.write('{not json')

        with self.assertLogs('eo_curves.cache.store', level='WARNING'):
            self.assertEqual(CacheStore.restore(self.store.path('broken')), {})

    def test_missing_file(self):
        self.assertEqual(CacheStore.restore(os.path.join(self.directory, 'none.json')), {})


class TestRunConfig(unittest.TestCase):
    """
    Run configuration
    """

    def test_defaults(self):
        with mock.patch.dict(os.environ, {}, clear=True):
            config = RunConfig('verify')
        self.assertEqual(config.output, 'json')
        self.assertEqual(config.jobs, 1)
        self.assertEqual(config.tolerance, 1e-8)
        self.assertEqual(config.cache_dir, '~/.cache/eo_curves')

    def test_environment(self):
        with mock.patch.dict(os.environ, {'EO_CACHE_DIR': '/tmp/eo'}):
            self.assertEqual(RunConfig('verify').cache_dir, '/tmp/eo')
            self.assertEqual(RunConfig('verify', cache_dir='/x').cache_dir, '/x')

    def test_invalid(self):
        self.assertRaises(ConfigError, RunConfig, 'verify', output='xml')
        self.assertRaises(ConfigError, RunConfig, 'verify', jobs=0)

    def test_to_dict(self):
        config = RunConfig('catalan', 'count', {'g': 1, 'mu': [6]})
        self.assertEqual(config.to_dict()['params'], {'g': 1, 'mu': [6]})


class TestVerificationPhase(unittest.TestCase):
    """
    Phase events, statuses and the report
    """

    def setUp(self):
        def skipped():
            raise InsufficientData('not rational')

        def broken():
            raise PathMismatch('paths differ')

        self.checks = [
            Check('a', 'passes', lambda: (True, {})),
            Check('b', 'fails', lambda: (False, {'failing': [1]})),
            Check('c', 'skipped', skipped),
            Check('d', 'raises', broken),
        ]

    def test_events(self):
        events = []
        lock = threading.Lock()

        def listener(event):
            with lock:
                events.append(event)

        listeners = Listeners()
        report = Report('test', listeners=listeners)
        listeners += listener
        phase = VerificationPhase('test', listeners)
        records = phase.run(self.checks)

        self.assertEqual([r['status'] for r in records], ['pass', 'fail', 'skipped', 'fail'])
        self.assertEqual([e['type'] for e in events[:2]], ['before_check', 'after_check'])
        self.assertEqual([e['iteration'] for e in events if e['type'] == 'after_check'], [1, 2, 3, 4])
        self.assertEqual(report.status, 'fail')
        self.assertEqual(report.exit_code(), 1)

    def test_parallel_matches_serial(self):
        serial = run_checks('test', self.checks, jobs=1).to_dict(timings=False)
        parallel = run_checks('test', self.checks, jobs=3).to_dict(timings=False)
        self.assertEqual(serial, parallel)

    def test_skipped_is_not_failure(self):
        report = run_checks('test', [self.checks[0], self.checks[2]])
        self.assertEqual(report.status, 'pass')
        self.assertEqual(report.exit_code(), 0)

    def test_render(self):
        report = run_checks('test', self.checks[:2])
        self.assertEqual(json.loads(report.render('json'))['status'], 'fail')
        self.assertTrue(report.render('csv').startswith('id,reference,status'))
        self.assertTrue(report.render('pretty').startswith('test: FAIL'))


class TestCli(unittest.TestCase):
    """
    The eo command line
    """

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_catalan_count(self):
        self.assertEqual(_run('catalan', 'count', '--g', '1', '--n', '1', '--mu', '6', '--cache-dir', self.directory), (0, '10\n'))

    def test_hurwitz_number(self):
        self.assertEqual(_run('hurwitz', 'number', '--g', '0', '--n', '2', '--mu', '1,1', '--cache-dir', self.directory), (0, '1/2\n'))

    def test_csv(self):
        code, out = _run('catalan', 'count', '--g', '0', '--n', '1', '--mu', '4', '--output', 'csv', '--cache-dir', self.directory)
        self.assertEqual(code, 0)
        self.assertIn('value,2', out)

    def test_character(self):
        code, out = _run('schur', 'character', '--mu', '1,1', '--lambda', '2', '--cache-dir', self.directory)
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out), {'mu': [1, 1], 'dimension': 1, 'character': -1})

    def test_free_energy(self):
        code, out = _run('hurwitz', 'free-energy', '--g', '1', '--n', '1', '--cache-dir', self.directory)
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['g'], 1)

    def test_wkb_corrections(self):
        code, out = _run('wkb', 'corrections', '--model', 'catalan', '--order', '2', '--cache-dir', self.directory)
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['status'], 'pass')

    def test_verify_schur(self):
        code, out = _run('verify', '--suite', 'schur', '--max-order', '2', '--cache-dir', self.directory)
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertEqual(report['status'], 'pass')
        self.assertEqual([r['id'] for r in report['records']][0], 'schur.characters')

    def test_invalid_profile(self):
        err = io.StringIO()
        with contextlib.redirect_stderr(err):
            code, _ = _run('catalan', 'count', '--g', '0', '--n', '2', '--mu', '4', '--cache-dir', self.directory)
        self.assertEqual(code, 2)
        self.assertIn('InvalidProfile', err.getvalue())

    def test_usage_error(self):
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as cm:
                main(['catalan', 'count', '--g', '1'])
        self.assertEqual(cm.exception.code, 2)

    def test_negative_order(self):
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as cm:
                main(['wkb', 'corrections', '--model', 'catalan', '--order', '-1', '--cache-dir', self.directory])
        self.assertEqual(cm.exception.code, 2)

    def test_arithmetic_error(self):
        err = io.StringIO()
        with mock.patch.object(catalan, 'catalan_count', side_effect=ZeroDivisionError('division by zero')):
            with contextlib.redirect_stderr(err):
                code, _ = _run('catalan', 'count', '--g', '0', '--n', '1', '--mu', '4', '--cache-dir', self.directory)
        self.assertEqual(code, 2)
        self.assertIn('ZeroDivisionError', err.getvalue())

    def test_cache_export_import(self):
        code, out = _run('cache', 'export', '--warm', '4', '--cache-dir', self.directory)
        self.assertEqual(code, 0)
        self.assertTrue(os.path.exists(os.path.join(self.directory, 'catalan.json')))
        self.assertGreater(json.loads(out)['hurwitz'], 0)

        code, out = _run('cache', 'import', '--cache-dir', self.directory)
        self.assertEqual(code, 0)
        self.assertGreater(json.loads(out)['catalan'], 0)


if __name__ == '__main__':
    unittest.main()
