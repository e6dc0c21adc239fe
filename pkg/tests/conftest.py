from fractions import Fraction

import pytest
from hypothesis import strategies as st

from chanspace.channel import Channel, Ranking

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "acceptance" in report.keywords:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


def rankings(min_n=1, max_n=7):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(lambda p: Ranking(tuple(p)))
    )


def ranking_pairs(min_n=1, max_n=7):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.tuples(
            st.permutations(range(1, n + 1)).map(lambda p: Ranking(tuple(p))),
            st.permutations(range(1, n + 1)).map(lambda p: Ranking(tuple(p))),
        )
    )


def channel_from_weights(weights):
    rows = []
    for w in weights:
        total = sum(w)
        rows.append(tuple(Fraction(v, total) for v in w))
    return Channel(tuple(rows))


@pytest.fixture
def P():
    from chanspace import fixtures

    return fixtures.P
