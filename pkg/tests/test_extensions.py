import itertools
import json

import pytest
from hypothesis import given, settings

from ordopoly import oracle
from ordopoly.errors import (
    BudgetExceeded,
    GuardExceeded,
    NotAnExtensionError,
    NotDeletableError,
)
from ordopoly.extensions import (
    LinearExtension,
    class_partition,
    count_extensions,
    deletable_set,
    delete,
    des,
    descent_set,
    enumerate_extensions,
    extension,
    insertion_buckets,
    iter_words,
    parse_word,
    prefix_partition,
    restore,
    stats,
    stats_histogram,
    subsequence,
    _trusted,
)
from ordopoly.poset import antichain, chain, from_covers, grid

from .conftest import SMALL_NAMED, natural_posets


def literal_deletable(P, word):
    """Deletability checked clause by clause, with 1-based positions."""
    w = (None,) + tuple(word)
    q = len(word)
    descents = {i for i in range(1, q) if w[i] > w[i + 1]}
    out = set()
    for i in range(1, q + 1):
        if (i - 1) in descents or i in descents:
            continue
        cond_a = all(w[j] < w[i] for j in range(1, i))
        cond_b = any(
            P.less(w[k], w[i]) and all(w[j] < w[i] for j in range(k + 1, i))
            for k in range(1, q + 1)
        )
        if cond_a or cond_b:
            out.add(w[i])
    return out


def words(P):
    return [w.word for w in enumerate_extensions(P)]


def test_two_by_two():
    assert words(grid(2, 2)) == [(1, 2, 3, 4), (1, 3, 2, 4)]


def test_antichain_three_is_all_permutations():
    assert words(antichain(3)) == list(itertools.permutations([1, 2, 3]))


@pytest.mark.parametrize("p", range(0, 7))
def test_chain(p):
    assert words(chain(p)) == [tuple(range(1, p + 1))]


@given(natural_posets())
def test_enumeration_matches_permutation_filter(P):
    ws = words(P)
    assert ws == sorted(ws)
    assert len(set(ws)) == len(ws)
    assert set(ws) == oracle.linear_extensions(P)


@given(natural_posets())
def test_prefix_partition_covers_everything(P):
    for depth in (0, 1, 2):
        parts = prefix_partition(P, depth)
        streamed = [w for pre in parts for w in iter_words(P, pre)]
        assert streamed == list(iter_words(P))


def test_streams_restart():
    P = grid(2, 3)
    assert list(iter_words(P)) == list(iter_words(P))


def test_descent_sets():
    assert descent_set(extension(grid(2, 2), "1324")) == {2}
    assert descent_set(extension(grid(2, 2), "1234")) == frozenset()
    w = extension(grid(3, 3), "124753689")
    # 7 > 5 at position 4 and 5 > 3 at position 5
    assert descent_set(w) == {4, 5}
    assert des(w) == 2


def test_deletable_two_by_two():
    P = grid(2, 2)
    assert deletable_set(extension(P, "1234")) == {1, 2, 3, 4}
    assert deletable_set(extension(P, "1324")) == {1, 4}


def test_deletable_three_by_three_uses_predecessor_clause():
    P = grid(3, 3)
    w = extension(P, "124753689")
    assert deletable_set(w) == {1, 2, 4, 6, 8, 9}
    # 6 is preceded by the larger 7, so only the predecessor clause admits it:
    # 5 < 6 in the poset and only 3 sits between them
    assert any(w.word[j] > 6 for j in range(w.word.index(6)))
    assert P.less(5, 6)


def test_deletable_antichain_312():
    assert deletable_set(extension(antichain(3), "312")) == frozenset()


@pytest.mark.parametrize("name,P", SMALL_NAMED)
def test_deletable_matches_literal_definition(name, P):
    for w in enumerate_extensions(P):
        assert deletable_set(w) == literal_deletable(P, w.word), (name, w.word)


@settings(max_examples=60)
@given(natural_posets())
def test_deletable_matches_literal_definition_random(P):
    for w in enumerate_extensions(P):
        assert deletable_set(w) == literal_deletable(P, w.word)


@settings(max_examples=60)
@given(natural_posets())
def test_subposet_words_use_host_order(P):
    # the definition applied to w in L(Q) only ever looks at pairs inside Q
    for D in ({1}, {1, 2}) if P.p >= 2 else ():
        Q = P.induced(D)
        for w in enumerate_extensions(Q):
            assert deletable_set(w) == deletable_set(LinearExtension(w.word, P))


def test_histogram_matches_per_extension_stats(small_corpus):
    for name, P in small_corpus:
        expected = {}
        for w in enumerate_extensions(P):
            st = stats(w)
            key = (st.des, st.nfixed)
            expected[key] = expected.get(key, 0) + 1
        hist, count = stats_histogram(P)
        assert hist == expected, name
        assert count == sum(expected.values())


def test_histogram_on_grid_three_by_three_per_extension():
    P = grid(3, 3)
    expected = {}
    for w in enumerate_extensions(P):
        assert deletable_set(w) == literal_deletable(P, w.word)
        key = (des(w), P.p - len(deletable_set(w)))
        expected[key] = expected.get(key, 0) + 1
    assert stats_histogram(P)[0] == expected


def test_histogram_prefixes_add_up():
    P = grid(3, 3)
    whole, n = stats_histogram(P)
    merged = {}
    total = 0
    for pre in prefix_partition(P, 3):
        h, c = stats_histogram(P, pre)
        total += c
        for k, v in h.items():
            merged[k] = merged.get(k, 0) + v
    assert merged == whole and total == n == 42


def test_histogram_budget():
    P = grid(3, 3)
    assert stats_histogram(P, budget=42)[1] == 42
    with pytest.raises(BudgetExceeded) as info:
        stats_histogram(P, budget=10)
    assert info.value.count == 11
    assert sum(info.value.partial.values()) == 11


@given(natural_posets())
def test_stats_invariants(P):
    for w in enumerate_extensions(P):
        st = stats(w)
        for i in st.descents:
            assert w.word[i - 1] not in st.deletable
            assert w.word[i] not in st.deletable
        if st.des == 0:
            assert st.ndel == P.p
        # deletable labels between consecutive fixed labels increase
        run = []
        for a in w.word:
            if a in st.deletable:
                run.append(a)
            else:
                assert run == sorted(run)
                run = []
        assert run == sorted(run)


def test_raw_subsequence():
    assert subsequence((1, 3, 2, 4, 5), {1, 4}) == (3, 2, 5)
    assert subsequence((3, 2, 1, 5, 4), {1, 4}) == (3, 2, 5)


def test_checked_delete():
    P = grid(3, 3)
    v = delete(extension(P, "124753689"), {2, 4, 8, 9})
    assert v.word == (1, 7, 5, 3, 6)
    with pytest.raises(NotDeletableError) as info:
        delete(extension(grid(2, 2), "1324"), {3})
    assert info.value.labels == [3]


def test_restore_worked_example():
    P = grid(3, 3)
    v = LinearExtension((1, 7, 5, 3, 6), P)
    assert insertion_buckets(v, {2, 4, 8, 9}) == {1: [2, 4], 5: [8, 9]}
    assert restore(v, {2, 4, 8, 9}).word == (1, 2, 4, 7, 5, 3, 6, 8, 9)


def test_restore_from_empty():
    assert restore(LinearExtension((), chain(3)), {1, 2, 3}).word == (1, 2, 3)


def test_restore_two_by_two():
    P = grid(2, 2)
    # enumerate all w with 2 deletable and w \ {2} = 134
    candidates = [w.word for w in enumerate_extensions(P)
                  if 2 in deletable_set(w) and subsequence(w, {2}) == (1, 3, 4)]
    assert candidates == [(1, 2, 3, 4)]
    assert restore(LinearExtension((1, 3, 4), P), {2}).word == (1, 2, 3, 4)


def test_restore_rejects_bad_input():
    P = grid(2, 2)
    with pytest.raises(NotAnExtensionError):
        LinearExtension((4, 1), P)
    with pytest.raises(NotAnExtensionError):
        restore(_trusted((4, 1), P), {2, 3})
    with pytest.raises(ValueError):
        restore(LinearExtension((1, 3), P), {1, 2, 4})


def test_round_trips_exhaustive(tiny_corpus):
    for name, P in tiny_corpus:
        for w in enumerate_extensions(P):
            dels = sorted(deletable_set(w))
            for r in range(len(dels) + 1):
                for D in itertools.combinations(dels, r):
                    v = delete(w, D)
                    assert des(v) == des(w), (name, w.word, D)
                    assert restore(v, D).word == w.word, (name, w.word, D)
        for D_size in range(P.p + 1):
            for D in itertools.combinations(P.labels, D_size):
                for v in enumerate_extensions(P.induced(D)):
                    u = LinearExtension(v.word, P)
                    w = restore(u, D)
                    assert set(D) <= deletable_set(w)
                    assert delete(w, D).word == v.word


@settings(max_examples=40)
@given(natural_posets())
def test_deletion_is_injective(P):
    labels = P.labels
    for r in range(len(labels) + 1):
        for D in itertools.combinations(labels, r):
            images = [subsequence(w, D) for w in enumerate_extensions(P) if set(D) <= deletable_set(w)]
            assert len(images) == len(set(images))
            assert set(images) == oracle.linear_extensions(P.induced(D))


def test_class_partition_two_by_two():
    cp = class_partition(grid(2, 2))
    assert [len(c.members) for c in cp.classes] == [16, 4]
    expected = {(), (1,), (2,), (3,), (4,), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (3, 2),
                (1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (3, 2, 4), (1, 3, 2), (1, 2, 3, 4), (1, 3, 2, 4)}
    assert cp.union() == expected
    assert cp.is_disjoint()


def test_class_partition_antichain_three():
    cp = class_partition(antichain(3))
    assert len(cp.classes) == 6
    assert len(cp.union()) == 16 and cp.is_disjoint()
    assert sorted((c.descents, c.ndel) for c in cp.classes) == [(0, 3), (1, 0), (1, 1), (1, 1), (1, 1), (2, 0)]


def test_class_partition_chain_two():
    cp = class_partition(chain(2))
    assert len(cp.classes) == 1
    assert set(cp.classes[0].members) == oracle.all_subposet_extensions(chain(2)) == {(), (1,), (2,), (1, 2)}


def test_class_partition_guard_and_json():
    with pytest.raises(GuardExceeded):
        class_partition(antichain(13))
    data = json.loads(class_partition(grid(2, 2)).to_json())
    assert data["classes"][1]["root"] == "1 3 2 4"
    assert data["classes"][1]["des"] == 1 and data["classes"][1]["del"] == 2
    assert len(data["classes"][1]["members"]) == 4


def test_class_partition_invariants(small_corpus):
    for name, P in small_corpus:
        cp = class_partition(P)
        assert cp.is_disjoint(), name
        assert cp.union() == oracle.all_subposet_extensions(P), name


def test_word_parsing_and_validation():
    assert parse_word("124753689") == (1, 2, 4, 7, 5, 3, 6, 8, 9)
    assert parse_word("10 2, 3") == (10, 2, 3)
    assert parse_word("") == ()
    with pytest.raises(NotAnExtensionError):
        extension(grid(2, 2), "2134")
    with pytest.raises(NotAnExtensionError):
        extension(grid(2, 2), "1124")


def test_count_matches_hook_length():
    for l, m in [(1, 4), (2, 2), (2, 4), (3, 3), (3, 4), (4, 4)]:
        assert count_extensions(grid(l, m)) == oracle.hook_length_count(l, m)


def test_n_poset_example():
    P = from_covers(4, [(1, 3), (2, 3), (2, 4)])
    assert words(P) == sorted(oracle.linear_extensions(P))
