import logging

from pyevents.events import Listeners

from eo_curves.verify.phase import VerificationPhase
from eo_curves.verify.report import Report
from eo_curves.verify.suites import SUITES, suite


def run_checks(name: str, checks, jobs: int = 1, config: dict = None, listeners=None) -> Report:
    listeners = listeners if listeners is not None else Listeners()
    report = Report(name, config, listeners)
    phase = VerificationPhase(name, listeners, jobs)
    phase.run(checks)
    report.sort([c.check_id for c in checks])

    return report


def run_suites(name: str, max_order: int = 4, tolerance: float = 1e-8, jobs: int = 1, config: dict = None,
               listeners=None, only: str = None) -> Report:
    """
    Runs one suite, or all of them in their static order
    :param name: suite name or 'all'
    :param listeners: Listeners receiving the phase events, besides the report
    :param only: keep the checks whose id starts with this prefix
    :return: the collected report
    """

    names = SUITES if name == 'all' else (name,)
    checks = [c for n in names for c in suite(n, max_order, tolerance) if only is None or c.check_id.startswith(only)]
    report = run_checks(name, checks, jobs, config, listeners)

    logging.getLogger(__name__).debug("Suite %s finished: %s" % (name, report.status))

    return report
