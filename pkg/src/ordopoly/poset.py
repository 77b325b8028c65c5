"""Finite strict posets with a natural labeling.

Elements are identified with their labels.  A poset built by
:func:`from_covers` has labels ``1..p``; an induced subposet keeps the labels
of its host, so its label set can have gaps.  The strict order is stored
transitively closed as one bitmask per element (bit ``a`` of ``down[b]`` is
set iff ``a < b``), which makes order queries O(1) and lets the enumeration
code work with plain integer operations.
"""

from __future__ import annotations

import heapq
import json
import re
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import CycleError, LabelOutOfRange, NotNaturalError, ParseError

Pair = tuple[int, int]


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(labels: Iterable[int]) -> int:
    m = 0
    for a in labels:
        m |= 1 << a
    return m


class Poset:
    """Immutable naturally labeled strict poset.

    Use :func:`from_covers`, :func:`canonicalize` or the builders
    (:func:`chain`, :func:`antichain`, :func:`grid`, :func:`fence`) instead of
    calling the constructor directly.
    """

    __slots__ = ("labels", "mask", "down", "up", "lower_covers", "upper_covers", "covers")

    def __init__(self, labels: Sequence[int], down: Mapping[int, int]):
        labels = tuple(sorted(labels))
        self.labels = labels
        self.mask = mask_of(labels)
        self.down = {a: down[a] & self.mask for a in labels}
        up = {a: 0 for a in labels}
        for b in labels:
            for a in _bits(self.down[b]):
                up[a] |= 1 << b
        self.up = up
        lower, upper = {a: [] for a in labels}, {a: [] for a in labels}
        covers = []
        for b in labels:
            db = self.down[b]
            for a in _bits(db):
                if not (up[a] & db):
                    lower[b].append(a)
                    upper[a].append(b)
                    covers.append((a, b))
        self.lower_covers = {a: tuple(v) for a, v in lower.items()}
        self.upper_covers = {a: tuple(v) for a, v in upper.items()}
        self.covers = tuple(sorted(covers))

    def __setattr__(self, name, value):
        if hasattr(self, name):
            raise AttributeError("Poset is immutable")
        object.__setattr__(self, name, value)

    @property
    def p(self) -> int:
        """Number of elements."""
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label) -> bool:
        return label in self.down

    def less(self, a: int, b: int) -> bool:
        """True iff ``a < b`` in the poset."""
        return b in self.down and bool(self.down[b] >> a & 1)

    def comparable(self, a: int, b: int) -> bool:
        return self.less(a, b) or self.less(b, a)

    def relations(self) -> list[Pair]:
        """All pairs of the (transitively closed) strict order."""
        return [(a, b) for b in self.labels for a in _bits(self.down[b])]

    def minimal(self) -> list[int]:
        return [a for a in self.labels if not self.down[a]]

    def maximal(self) -> list[int]:
        return [a for a in self.labels if not self.up[a]]

    def longest_chain(self) -> int:
        """Number of elements in a longest chain (0 for the empty poset)."""
        height: dict[int, int] = {}
        for b in self.labels:
            height[b] = 1 + max((height[a] for a in self.lower_covers[b]), default=0)
        return max(height.values(), default=0)

    def induced(self, deleted: Iterable[int]) -> "Poset":
        """The induced subposet on the labels not in ``deleted``.

        Labels are retained, not renumbered.
        """
        deleted = set(deleted)
        bad = deleted - set(self.labels)
        if bad:
            raise LabelOutOfRange(f"labels not in poset: {sorted(bad)}")
        keep = [a for a in self.labels if a not in deleted]
        return Poset(keep, self.down)

    def is_full(self) -> bool:
        """True iff the label set is exactly ``1..p``."""
        return self.labels == tuple(range(1, len(self.labels) + 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and self.down == other.down

    def __hash__(self) -> int:
        return hash((self.labels, tuple(self.down[a] for a in self.labels)))

    def __repr__(self) -> str:
        rel = ", ".join(f"{a}<{b}" for a, b in self.covers)
        return f"Poset(labels={list(self.labels)}, covers=[{rel}])"

    def to_text(self) -> str:
        lines = [f"p={self.p}"]
        lines += [f"{a}<{b}" for a, b in self.covers]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({"p": self.p, "covers": [list(c) for c in self.covers]})


def _check_pairs(p: int, covers: Iterable[Pair]) -> list[Pair]:
    if p < 0:
        raise ValueError("p must be non-negative")
    pairs = []
    for a, b in covers:
        a, b = int(a), int(b)
        if not (1 <= a <= p and 1 <= b <= p):
            raise LabelOutOfRange(f"relation {a}<{b} has a label outside 1..{p}")
        pairs.append((a, b))
    return pairs


def _topological_order(p: int, pairs: Sequence[Pair]) -> list[int]:
    """Kahn's algorithm, always releasing the smallest available label first."""
    succ: dict[int, list[int]] = {a: [] for a in range(1, p + 1)}
    indeg = dict.fromkeys(range(1, p + 1), 0)
    for a, b in set(pairs):
        succ[a].append(b)
        indeg[b] += 1
    heap = [a for a in range(1, p + 1) if indeg[a] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        a = heapq.heappop(heap)
        order.append(a)
        for b in succ[a]:
            indeg[b] -= 1
            if indeg[b] == 0:
                heapq.heappush(heap, b)
    if len(order) != p:
        stuck = sorted(a for a in indeg if indeg[a] > 0)
        raise CycleError(f"relation has a cycle through labels {stuck}")
    return order


def from_covers(p: int, covers: Iterable[Pair]) -> Poset:
    """Build the poset on ``1..p`` generated by ``covers``.

    ``covers`` may be any generating set of relations; the stored cover
    relation is the transitive reduction of its closure.

    Raises :class:`CycleError` for cyclic input and :class:`NotNaturalError`
    when some pair ``(a, b)`` has ``a > b``.
    """
    pairs = _check_pairs(p, covers)
    if any(a == b for a, b in pairs):
        raise CycleError("relation contains a self-loop")
    bad = [(a, b) for a, b in pairs if a > b]
    if bad:
        _topological_order(p, pairs)
        raise NotNaturalError(bad)
    preds: dict[int, list[int]] = {b: [] for b in range(1, p + 1)}
    for a, b in pairs:
        preds[b].append(a)
    down: dict[int, int] = {}
    for b in range(1, p + 1):
        m = 0
        for a in preds[b]:
            m |= down[a] | (1 << a)
        down[b] = m
    return Poset(range(1, p + 1), down)


def canonicalize(p: int, covers: Iterable[Pair]) -> tuple[Poset, dict[int, int]]:
    """Relabel an arbitrary acyclic relation so that the labeling is natural.

    Elements are numbered in the topological order that always picks the
    available element with the smallest original label.  Returns the poset
    and the map ``original label -> new label``.
    """
    pairs = _check_pairs(p, covers)
    if any(a == b for a, b in pairs):
        raise CycleError("relation contains a self-loop")
    order = _topological_order(p, pairs)
    relabel = {old: new for new, old in enumerate(order, start=1)}
    return from_covers(p, [(relabel[a], relabel[b]) for a, b in pairs]), relabel


def chain(p: int) -> Poset:
    return from_covers(p, [(i, i + 1) for i in range(1, p)])


def antichain(p: int) -> Poset:
    return from_covers(p, [])


def grid(l: int, m: int) -> Poset:
    """Product of chains ``l x m`` ordered componentwise.

    Element ``(i, j)`` gets the row-major label ``(i-1)*m + j``.
    """
    covers = []
    for i in range(1, l + 1):
        for j in range(1, m + 1):
            a = (i - 1) * m + j
            if j < m:
                covers.append((a, a + 1))
            if i < l:
                covers.append((a, a + m))
    return from_covers(l * m, covers)


def fence(m: int) -> Poset:
    """Zigzag poset a1 < a2 > a3 < a4 > ... on ``m`` elements.

    The alternation starts at a minimal element; labels come from
    :func:`canonicalize`.
    """
    covers = []
    for i in range(1, m):
        covers.append((i, i + 1) if i % 2 else (i + 1, i))
    return canonicalize(m, covers)[0]


_BUILTINS = {"chain": chain, "antichain": antichain, "grid": grid, "fence": fence}


def builtin(spec: str) -> Poset:
    """Parse builtin specs such as ``chain:3``, ``grid:3,3`` or ``fence:5``."""
    name, _, args = spec.partition(":")
    name = name.strip().lower()
    if name not in _BUILTINS:
        raise ParseError(f"unknown builtin poset {name!r}; expected one of {sorted(_BUILTINS)}")
    try:
        nums = [int(x) for x in args.split(",") if x.strip()]
    except ValueError:
        raise ParseError(f"bad arguments in builtin spec {spec!r}") from None
    expected = 2 if name == "grid" else 1
    if len(nums) != expected or any(x < 0 for x in nums):
        raise ParseError(f"{name} takes {expected} non-negative integer argument(s)")
    return _BUILTINS[name](*nums)


_REL = re.compile(r"^\d+(?:<\d+)+$")


def parse_text(text: str, relabel: bool = False) -> Poset:
    """Parse the line format: ``p=<int>`` then one ``a<b`` per line.

    Whitespace is ignored and ``#`` starts a comment.  Chained relations like
    ``1<2<3`` are accepted.  With ``relabel=True`` a non-natural labeling is
    repaired via :func:`canonicalize` instead of raising.
    """
    p = None
    pairs: list[Pair] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = "".join(raw.split("#", 1)[0].split())
        if not line:
            continue
        if line.lower().startswith("p="):
            if p is not None:
                raise ParseError(f"line {lineno}: duplicate size declaration")
            try:
                p = int(line[2:])
            except ValueError:
                raise ParseError(f"line {lineno}: bad size {line!r}") from None
            continue
        if not _REL.match(line):
            raise ParseError(f"line {lineno}: cannot parse {raw.strip()!r}")
        nums = [int(x) for x in line.split("<")]
        pairs.extend(zip(nums, nums[1:]))
    if p is None:
        raise ParseError("missing 'p=<int>' line")
    if relabel:
        return canonicalize(p, pairs)[0]
    return from_covers(p, pairs)


def parse_json(text: str, relabel: bool = False) -> Poset:
    try:
        data = json.loads(text)
        p = int(data["p"])
        pairs = [(int(a), int(b)) for a, b in data.get("covers", [])]
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad poset JSON: {exc}") from None
    if relabel:
        return canonicalize(p, pairs)[0]
    return from_covers(p, pairs)


def parse(text: str, relabel: bool = False) -> Poset:
    """Parse either supported format, sniffing JSON by its leading brace."""
    if text.lstrip().startswith("{"):
        return parse_json(text, relabel)
    return parse_text(text, relabel)


def load(path: str, relabel: bool = False) -> Poset:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), relabel)
