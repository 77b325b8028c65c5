import itertools

import pytest
from hypothesis import given, settings

from ordopoly import oracle
from ordopoly.errors import GuardExceeded
from ordopoly.extensions import count_extensions
from ordopoly.orderpoly import omega
from ordopoly.poset import antichain, chain, from_covers, grid

from .conftest import natural_posets


def test_chain_maps():
    assert oracle.count_strict_maps(chain(3), 5) == 10


def test_antichain_maps():
    assert oracle.count_strict_maps(antichain(3), 2) == 8


def test_two_by_two_maps_exhaustive():
    P = grid(2, 2)
    brute = sum(
        1 for phi in itertools.product(range(1, 4), repeat=4)
        if phi[0] < phi[1] and phi[0] < phi[2] and phi[1] < phi[3] and phi[2] < phi[3]
    )
    assert brute == 1
    assert oracle.count_strict_maps(P, 3) == oracle.count_strict_maps_naive(P, 3) == 1


@settings(max_examples=50)
@given(natural_posets(max_p=5))
def test_dp_matches_naive(P):
    for n in range(5):
        assert oracle.count_strict_maps(P, n) == oracle.count_strict_maps_naive(P, n)


@given(natural_posets())
def test_map_count_properties(P):
    counts = [oracle.count_strict_maps(P, n) for n in range(6)]
    assert counts == sorted(counts)
    for n in range(min(P.longest_chain(), 6)):
        assert counts[n] == 0


@pytest.mark.parametrize("p", range(5))
def test_antichain_power(p):
    for n in range(5):
        assert oracle.count_strict_maps(antichain(p), n) == n**p


def test_maps_match_omega(small_corpus):
    for name, P in small_corpus:
        om = omega(P)
        for n in range(7):
            assert om(n) == oracle.count_strict_maps(P, n), name


def test_hook_lengths():
    assert oracle.hook_length_count(2, 2) == 2
    assert oracle.hook_length_count(3, 3) == 42 == 1 + 9 + 1 + 1 + 17 + 2 + 2 + 7 + 1 + 1
    assert oracle.hook_length_count(4, 4) == 24024
    assert oracle.hook_length_count(4, 5) == 1662804
    with pytest.raises(GuardExceeded):
        oracle.hook_length_count(5, 7)


def test_hook_lengths_match_enumeration():
    for l in range(1, 5):
        for m in range(1, 5):
            if l * m <= 16:
                assert oracle.hook_length_count(l, m) == count_extensions(grid(l, m))


def test_guards():
    with pytest.raises(GuardExceeded):
        oracle.extended_oracle_eval(antichain(13), 2)
    with pytest.raises(GuardExceeded):
        oracle.count_strict_maps(antichain(17), 11)
    with pytest.raises(GuardExceeded):
        oracle.linear_extensions(antichain(9))


def test_antichains():
    assert oracle.antichain_polynomial(grid(2, 2)) == [1, 4, 1, 0, 0]
    assert oracle.antichains(from_covers(3, [(1, 2)])) == [(), (1,), (2,), (3,), (1, 3), (2, 3)]


def test_subposet_union_sizes():
    assert len(oracle.all_subposet_extensions(grid(2, 2))) == 20
    assert len(oracle.all_subposet_extensions(antichain(3))) == 16
