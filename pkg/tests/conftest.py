import random

import pytest
from hypothesis import settings

from helpers import W, reduced_strings
from quasipos.recognizer import test_qp

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def words_upto_10():
    return [W(s) for s in reduced_strings(10)]


@pytest.fixture(scope="session")
def naive_table(words_upto_10):
    """Naive verdict (with witness) for every reduced rank-2 word of length <= 10."""
    return {w: test_qp(w, "naive", record_witness=True) for w in words_upto_10}


@pytest.fixture(scope="session")
def qp_words_upto_10(naive_table):
    return [w for w, v in naive_table.items() if v.is_qp]


@pytest.fixture
def rng():
    return random.Random(20190129)
