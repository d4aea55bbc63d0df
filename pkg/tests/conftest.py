import os
from functools import lru_cache

from hypothesis import HealthCheck, settings

from tracefields.fields import field_from_poly

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@lru_cache(maxsize=None)
def _field(coeffs):
    return field_from_poly(list(coeffs))


def field(coeffs):
    """Memoized field construction shared across test modules."""
    return _field(tuple(coeffs))


def pytest_terminal_summary(terminalreporter):
    import sys

    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance.result_lines():
        terminalreporter.write_line(line)
