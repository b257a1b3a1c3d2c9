import sys

import numpy as np
import pytest
from hypothesis import strategies as st

from wpkit.params import from_moduli


@pytest.fixture
def rng():
    return np.random.default_rng(20121)


@st.composite
def valid_params(draw, max_mod=4.0, centered=False):
    mod_a = draw(st.floats(max(0.3, 1.0 / max_mod), max_mod))
    mod_b = draw(st.floats(max(0.3, 1.0 / mod_a), max_mod))
    phase = draw(st.floats(-np.pi, np.pi))
    sign = draw(st.sampled_from([-1, 1]))
    hbar = draw(st.sampled_from([0.01, 0.1, 1.0]))
    if centered:
        a = eta = 0.0
    else:
        a = draw(st.floats(-3, 3))
        eta = draw(st.floats(-3, 3))
    return from_moduli(mod_a, mod_b, phase, sign, hbar, a, eta)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
