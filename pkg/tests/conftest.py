import itertools

import pytest
from hypothesis import settings, strategies as st

from ordopoly.poset import antichain, chain, fence, from_covers, grid
from ordopoly.verify import corpus

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@st.composite
def natural_posets(draw, max_p=6):
    p = draw(st.integers(min_value=0, max_value=max_p))
    pairs = list(itertools.combinations(range(1, p + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return from_covers(p, chosen)


SMALL_NAMED = [
    ("chain:1", chain(1)),
    ("chain:3", chain(3)),
    ("antichain:3", antichain(3)),
    ("grid:2,2", grid(2, 2)),
    ("grid:2,3", grid(2, 3)),
    ("fence:5", fence(5)),
    ("V", from_covers(3, [(1, 3), (2, 3)])),
    ("N", from_covers(4, [(1, 3), (2, 3), (2, 4)])),
]


@pytest.fixture(scope="session")
def small_corpus():
    """Corpus posets with at most 6 elements."""
    return [(name, P) for name, P in corpus(seed=0) if P.p <= 6]


@pytest.fixture(scope="session")
def tiny_corpus():
    """Every corpus poset with at most 5 elements."""
    return [(name, P) for name, P in corpus(seed=0) if P.p <= 5]


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in test_acceptance.RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  [{detail}]")
