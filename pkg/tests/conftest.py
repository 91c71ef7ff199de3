import sys
import numpy as np
import pytest
from fractions import Fraction
from hypothesis import strategies as st

from qgain.quaternion import Q8, Quaternion, rational_unit_from_vector

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
quaternions = st.builds(Quaternion, small_rationals, small_rationals, small_rationals,
                        small_rationals)
nonzero_quaternions = quaternions.filter(bool)
q8_units = st.sampled_from(Q8)
rational_units = st.builds(rational_unit_from_vector, small_rationals, small_rationals,
                           small_rationals)
units = st.one_of(q8_units, rational_units)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_rational(rng, span=6, max_den=5):
    return Fraction(int(rng.integers(-span, span + 1)), int(rng.integers(1, max_den + 1)))


def random_quaternion(rng):
    return Quaternion(*(random_rational(rng) for _ in range(4)))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
