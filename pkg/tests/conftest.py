import math

import numpy as np
import pytest
from hypothesis import settings

# examples run whole iterations; wall-clock deadlines would only add flakiness
settings.register_profile("wdk", deadline=None)
settings.load_profile("wdk")

P_VALUES = (1.0, 2.0, math.inf)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def close(a, b, rel=1e-12, abs_=1e-12):
    return abs(a - b) <= max(abs_, rel * max(abs(a), abs(b)))


def pytest_terminal_summary(terminalreporter):
    from _checks import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
