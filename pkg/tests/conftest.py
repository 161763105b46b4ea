import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from superdiscord import bloch_from_density, example2, example3, random_xstate

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

seeds = st.integers(min_value=0, max_value=2**32 - 1)
xstates = seeds.map(lambda s: random_xstate(np.random.default_rng(s)))
strengths = st.floats(min_value=0.05, max_value=6.0, allow_nan=False)


@pytest.fixture
def ex2():
    return example2()


@pytest.fixture
def ex3():
    return example3()


@pytest.fixture
def ex3_bloch():
    return bloch_from_density(example3())


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# -- acceptance summary ---------------------------------------------------

def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def criterion(request):
    """Record one pass/fail line per acceptance criterion.

    The lines are printed in the terminal summary so they survive output
    capturing.
    """
    lines = request.config._acceptance_lines

    def record(label, ok, detail=""):
        line = f"{label}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip()
        lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
