import numpy as np
import pytest
from hypothesis import settings, strategies as st

from qprob.linalg import random_hermitian, random_unit_vector

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SQ = 1 / np.sqrt(2)

seeds = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def hermitian_matrices(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    rng = np.random.default_rng(draw(seeds))
    scale = draw(st.sampled_from([1e-3, 1.0, 1e3]))
    return random_hermitian(n, rng, scale)


@st.composite
def hermitian_and_state(draw, max_n=8):
    a = draw(hermitian_matrices(max_n))
    rng = np.random.default_rng(draw(seeds))
    return a, random_unit_vector(a.shape[0], rng)


@st.composite
def unit_vectors(draw, n):
    rng = np.random.default_rng(draw(seeds))
    return random_unit_vector(n, rng)


@pytest.fixture
def rng():
    return np.random.default_rng(20090126)


ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
