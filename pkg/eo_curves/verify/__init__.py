from eo_curves.verify.phase import Check, VerificationPhase
from eo_curves.verify.report import Report
from eo_curves.verify.suites import SUITES, suite
from eo_curves.verify.runner import run_suites, run_checks
