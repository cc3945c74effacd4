from .suites import SUITE_CHECKS, SUITE_COUNTS, run_suite, suite_names

__all__ = ["SUITE_CHECKS", "SUITE_COUNTS", "run_suite", "suite_names"]
