
import pytest
from hypothesis import given, settings, strategies as st

from dominion.generate import (
    GenerationError,
    random_claw_free,
    random_connected,
    random_cubic,
    random_graph,
    random_regular,
)
from dominion.graph import check_invariants
from dominion.recognition import is_claw_free


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 16), st.integers(0, 10**6), st.floats(0.1, 1.0))
def test_claw_free_generator(n, seed, density):
    g = random_claw_free(n, seed, density)
    check_invariants(g)
    assert g.n == n and is_claw_free(g)


def test_same_seed_same_graph():
    assert random_graph(12, 0.3, 5) == random_graph(12, 0.3, 5)
    assert random_claw_free(12, 5) == random_claw_free(12, 5)


@pytest.mark.parametrize("n, k", [(4, 3), (8, 3), (6, 4), (9, 4), (10, 5)])
def test_regular(n, k):
    assert random_regular(n, k, 0).regular_degree() == k


def test_regular_rejects_impossible():
    with pytest.raises(GenerationError):
        random_regular(5, 3)
    with pytest.raises(GenerationError):
        random_regular(4, 4)


def test_cubic_and_connected():
    assert random_cubic(10, 2).regular_degree() == 3
    assert random_connected(10, 0.3, 1).is_connected()
    with pytest.raises(GenerationError):
        random_connected(6, 0.0, 1, tries=3)
