"""Brute-force reference computations used only to check the fast path.

Nothing in here calls the extension engine or the polynomial code.  The
order relation is rebuilt from the cover pairs with a plain graph search and
kept as Python sets, so a bug in the bitmask closure used elsewhere cannot
hide in both places at once.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial
from typing import Iterable

from .errors import GuardExceeded


def _greater_sets(labels: Iterable[int], covers: Iterable[tuple[int, int]]) -> dict[int, set[int]]:
    """Map each label to the set of labels strictly above it."""
    labels = list(labels)
    succ: dict[int, list[int]] = {a: [] for a in labels}
    for a, b in covers:
        succ[a].append(b)
    out = {}
    for a in labels:
        seen: set[int] = set()
        stack = list(succ[a])
        while stack:
            b = stack.pop()
            if b not in seen:
                seen.add(b)
                stack.extend(succ[b])
        out[a] = seen
    return out


def _relation(P) -> tuple[list[int], dict[int, set[int]]]:
    labels = list(P.labels)
    return labels, _greater_sets(labels, P.covers)


def _restrict(greater: dict[int, set[int]], keep: Iterable[int]) -> dict[int, set[int]]:
    keep = set(keep)
    return {a: greater[a] & keep for a in keep}


def _count_maps(greater: dict[int, set[int]], n: int) -> int:
    """Strict order-preserving maps into ``1..n`` by levels of equal value.

    The elements receiving value ``v`` form an antichain of minimal elements
    of what is left after values ``1..v-1`` are used.
    """
    elems = sorted(greater)
    index = {a: i for i, a in enumerate(elems)}
    below = [0] * len(elems)
    for a, ups in greater.items():
        for b in ups:
            below[index[b]] |= 1 << index[a]
    full = (1 << len(elems)) - 1

    @lru_cache(maxsize=None)
    def ways(done: int, values_left: int) -> int:
        if done == full:
            return 1
        if values_left == 0:
            return 0
        free = [i for i in range(len(elems))
                if not (done >> i & 1) and (below[i] & ~done) == 0]
        total = 0
        for r in range(len(free) + 1):
            for pick in itertools.combinations(free, r):
                m = done
                for i in pick:
                    m |= 1 << i
                total += ways(m, values_left - 1)
        return total

    return ways(0, n)


def count_strict_maps(Q, n: int) -> int:
    """Number of maps ``phi: Q -> [n]`` with ``s < t  =>  phi(s) < phi(t)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if len(Q.labels) > 16 and n > 10:
        raise GuardExceeded("count_strict_maps needs #Q <= 16 or n <= 10")
    _, greater = _relation(Q)
    return _count_maps(greater, n)


def count_strict_maps_naive(Q, n: int) -> int:
    """Exhaust all ``n**#Q`` assignments; only for very small inputs."""
    labels, greater = _relation(Q)
    if len(labels) > 8 or n ** len(labels) > 2_000_000:
        raise GuardExceeded("naive map count is limited to tiny inputs")
    pairs = [(a, b) for a in labels for b in greater[a]]
    total = 0
    for values in itertools.product(range(1, n + 1), repeat=len(labels)):
        phi = dict(zip(labels, values))
        if all(phi[a] < phi[b] for a, b in pairs):
            total += 1
    return total


def extended_oracle_eval(P, n: int, max_p: int = 12) -> list[int]:
    """Coefficients of ``z^0..z^p`` of the subposet sum at a fixed ``n``.

    Every one of the ``2^p`` induced subposets is visited and its strict maps
    into ``[n]`` are counted directly.
    """
    labels, greater = _relation(P)
    p = len(labels)
    if p > max_p:
        raise GuardExceeded(f"subposet sum limited to p <= {max_p} (got {p})")
    coeffs = [0] * (p + 1)
    for r in range(p + 1):
        for keep in itertools.combinations(labels, r):
            coeffs[r] += _count_maps(_restrict(greater, keep), n)
    return coeffs


def antichains(P) -> list[tuple[int, ...]]:
    labels, greater = _relation(P)
    out = []
    for r in range(len(labels) + 1):
        for combo in itertools.combinations(labels, r):
            if all(b not in greater[a] and a not in greater[b]
                   for a, b in itertools.combinations(combo, 2)):
                out.append(combo)
    return out


def antichain_polynomial(P, max_p: int = 20) -> list[int]:
    """Number of antichains of each size ``0..p``."""
    if len(P.labels) > max_p:
        raise GuardExceeded(f"antichain enumeration limited to p <= {max_p}")
    counts = [0] * (len(P.labels) + 1)
    for a in antichains(P):
        counts[len(a)] += 1
    return counts


def linear_extensions(P) -> set[tuple[int, ...]]:
    """All order-respecting permutations, by filtering every permutation."""
    labels, greater = _relation(P)
    if len(labels) > 8:
        raise GuardExceeded("permutation filter limited to p <= 8")
    return {
        perm for perm in itertools.permutations(labels)
        if _respects(perm, greater)
    }


def _respects(word, greater) -> bool:
    seen: set[int] = set()
    for a in word:
        if greater[a] & seen:
            return False
        seen.add(a)
    return True


def all_subposet_extensions(P, max_p: int = 8) -> set[tuple[int, ...]]:
    """The union over every induced subposet ``Q`` of ``L(Q)``, with inherited labels."""
    labels, greater = _relation(P)
    if len(labels) > max_p:
        raise GuardExceeded(f"subposet extension union limited to p <= {max_p}")
    out = set()
    for r in range(len(labels) + 1):
        for keep in itertools.combinations(labels, r):
            sub = _restrict(greater, keep)
            for perm in itertools.permutations(keep):
                if _respects(perm, sub):
                    out.add(perm)
    return out


def hook_length_count(l: int, m: int) -> int:
    """Standard Young tableaux of the ``l x m`` rectangle via the hook length formula."""
    if l < 1 or m < 1:
        raise ValueError("l and m must be positive")
    if l * m > 30:
        raise GuardExceeded("hook_length_count limited to l*m <= 30")
    hooks = 1
    for i in range(l):
        for j in range(m):
            hooks *= (m - j - 1) + (l - i - 1) + 1
    return factorial(l * m) // hooks


def descents(word) -> int:
    return sum(1 for a, b in zip(word, word[1:]) if a > b)
