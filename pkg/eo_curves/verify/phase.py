import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor

from pyevents.events import Listeners

from eo_curves.errors import EOError, InsufficientData


class Check(object):
    """One named identity; fn returns (passed, residual summary)"""

    def __init__(self, check_id: str, reference: str, fn):
        self.check_id = check_id
        self.reference = reference
        self.fn = fn


class VerificationPhase(object):
    """Runs the checks of one suite and fires before_check/after_check events to the listeners"""

    def __init__(self, suite: str, listeners=None, jobs: int = 1):
        self._suite = suite
        self._iteration = 0
        self._jobs = jobs

        self.listeners = listeners if listeners is not None else Listeners()

        self._lock = threading.RLock()

    def process(self, check: Check):
        with self._lock:
            self._iteration += 1
            iteration = self._iteration

        self.listeners({'type': 'before_check', 'suite': self._suite, 'iteration': iteration, 'check': check.check_id})

        logging.getLogger(__name__).debug("Suite " + self._suite + " check " + str(iteration) + " " + check.check_id)

        start = time.perf_counter()
        try:
            passed, residual = check.fn()
            status = 'pass' if passed else 'fail'
        except InsufficientData as e:
            status, residual = 'skipped', str(e)
        except EOError as e:
            status, residual = 'fail', '%s: %s' % (type(e).__name__, e)

        record = {'id': check.check_id, 'reference': check.reference, 'status': status, 'residual': residual,
                  'seconds': round(time.perf_counter() - start, 3)}

        self.listeners({'type': 'after_check', 'suite': self._suite, 'iteration': iteration, 'check': check.check_id, 'record': record})

        return record

    def run(self, checks):
        """Records in the order of checks, whatever the number of workers"""
        if self._jobs == 1:
            return [self.process(c) for c in checks]

        with ThreadPoolExecutor(max_workers=self._jobs) as pool:
            return list(pool.map(self.process, checks))
