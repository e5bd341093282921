import random

import pytest

from rslist import FieldCtx, RSCode

REF_V = [6, 2, 4, 4, 4, 2]
REF_Q_ROWS = [
    [6, 1, 2, 4, 3, 3, 4, 4],
    [2, 6, 6, 4, 6, 3],
    [5, 4, 0, 6],
    [1],
]

# (criterion, passed, detail) lines collected by test_acceptance.py
ACCEPTANCE_RESULTS = []


@pytest.fixture
def gf7():
    return FieldCtx(7)


@pytest.fixture
def ref_code(gf7):
    return RSCode(gf7, 6, 3, [1, 2, 3, 4, 5, 6])


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_instance(rng, q_choices=(5, 7, 11, 13), n_max=10, m_choices=(1, 2, 3)):
    q = rng.choice(q_choices)
    F = FieldCtx(q)
    n = rng.randint(4, min(q, n_max))
    k = rng.randint(2, n - 2)
    alphas = rng.sample(range(q), n)
    code = RSCode(F, n, k, alphas)
    v = [rng.randrange(q) for _ in range(n)]
    return code, v, rng.choice(m_choices)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
