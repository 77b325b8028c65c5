"""Linear extensions, descents and deletable labels.

A linear extension is stored as its label word.  Words of induced subposets
keep the labels of the host poset, so the same :class:`LinearExtension` type
covers both ``L(P)`` and ``L(P \\ D)``: the host supplies the order and the
word may use any subset of its labels.

Two routes compute the per-extension statistics.  :func:`deletable_set`
applies the definition label by label and is the reference;
:func:`stats_histogram` folds descents and fixed labels into a histogram
while backtracking, without materialising words, and is what the order
polynomial code uses.  The test suite checks they agree.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    BudgetExceeded,
    GuardExceeded,
    LabelOutOfRange,
    NotAnExtensionError,
    NotDeletableError,
    OrdopolyError,
)
from .poset import Poset


@dataclass(frozen=True)
class LinearExtension:
    """A word ``w1...wq`` of distinct labels respecting ``host``'s order."""

    word: tuple[int, ...]
    host: Poset = field(repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(a) for a in self.word))
        check_word(self.host, self.word)

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __str__(self):
        return format_word(self.word)

    @property
    def labels(self) -> frozenset[int]:
        return frozenset(self.word)

    def is_full(self) -> bool:
        return len(self.word) == self.host.p


def format_word(word: Sequence[int]) -> str:
    return " ".join(map(str, word))


def parse_word(text: str) -> tuple[int, ...]:
    """Read a word written as space/comma separated labels.

    A single run of digits such as ``124753689`` is read one digit per label,
    which matches how small examples are usually written.
    """
    text = text.strip()
    if not text:
        return ()
    if text.isdigit() and len(text) > 1:
        return tuple(int(c) for c in text)
    return tuple(int(t) for t in text.replace(",", " ").split())


def check_word(P: Poset, word: Sequence[int]) -> None:
    """Raise unless ``word`` is a linear extension of the subposet it spans."""
    seen = 0
    for a in word:
        if a not in P:
            raise LabelOutOfRange(f"label {a} is not in the poset")
        if seen >> a & 1:
            raise NotAnExtensionError(f"label {a} repeated in word")
        seen |= 1 << a
    for a in word:
        seen ^= 1 << a
        if P.down[a] & seen:
            raise NotAnExtensionError(
                f"word {format_word(word)} violates the order at label {a}"
            )


def extension(P: Poset, word: Iterable[int] | str) -> LinearExtension:
    if isinstance(word, str):
        word = parse_word(word)
    return LinearExtension(tuple(word), P)


def _available_after(P: Poset, placed: int, avail: int, x: int) -> int:
    avail &= ~(1 << x)
    for u in P.upper_covers[x]:
        if not (P.down[u] & ~placed):
            avail |= 1 << u
    return avail


def _replay_prefix(P: Poset, prefix: Sequence[int]) -> tuple[int, int]:
    placed = 0
    avail = sum(1 << a for a in P.minimal())
    for x in prefix:
        if not (avail >> x & 1):
            raise NotAnExtensionError(f"prefix {format_word(prefix)} is not extendable")
        placed |= 1 << x
        avail = _available_after(P, placed, avail, x)
    return placed, avail


def iter_words(P: Poset, prefix: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
    """Yield the words of ``L(P)`` starting with ``prefix`` in lexicographic order."""
    prefix = tuple(prefix)
    placed, avail = _replay_prefix(P, prefix)
    word = list(prefix)
    n = P.p

    def rec(placed, avail):
        if len(word) == n:
            yield tuple(word)
            return
        m = avail
        while m:
            b = m & -m
            m ^= b
            x = b.bit_length() - 1
            word.append(x)
            yield from rec(placed | b, _available_after(P, placed | b, avail, x))
            word.pop()

    yield from rec(placed, avail)


def enumerate_extensions(P: Poset, prefix: Sequence[int] = ()) -> Iterator[LinearExtension]:
    """Stream ``L(P)`` in lexicographic order (restricted to ``prefix`` if given).

    Calling it again restarts the stream; distinct prefixes from
    :func:`prefix_partition` give disjoint streams whose union is ``L(P)``.
    """
    for w in iter_words(P, prefix):
        yield _trusted(w, P)


def _trusted(word: tuple[int, ...], host: Poset) -> LinearExtension:
    """Build a LinearExtension already known to be valid, skipping the check."""
    w = object.__new__(LinearExtension)
    object.__setattr__(w, "word", word)
    object.__setattr__(w, "host", host)
    return w


def prefix_partition(P: Poset, depth: int) -> list[tuple[int, ...]]:
    """All extendable prefixes of length ``min(depth, p)``, lexicographically.

    Every word of ``L(P)`` starts with exactly one of them.
    """
    depth = max(0, min(depth, P.p))
    out: list[tuple[int, ...]] = []

    def rec(prefix, placed, avail):
        if len(prefix) == depth:
            out.append(tuple(prefix))
            return
        m = avail
        while m:
            b = m & -m
            m ^= b
            x = b.bit_length() - 1
            rec(prefix + [x], placed | b, _available_after(P, placed | b, avail, x))

    placed, avail = _replay_prefix(P, ())
    rec([], placed, avail)
    return out


def count_extensions(P: Poset) -> int:
    return sum(1 for _ in iter_words(P))


def descent_set(w: LinearExtension | Sequence[int]) -> frozenset[int]:
    """Positions ``i`` (1-based) with ``w_i > w_{i+1}``."""
    word = w.word if isinstance(w, LinearExtension) else tuple(w)
    return frozenset(i for i in range(1, len(word)) if word[i - 1] > word[i])


def des(w: LinearExtension | Sequence[int]) -> int:
    return len(descent_set(w))


def deletable_set(w: LinearExtension, poset: Poset | None = None) -> frozenset[int]:
    """Labels of ``w`` that are deletable.

    A label at position ``i`` is deletable when neither ``i-1`` nor ``i`` is a
    descent, and scanning left from ``i`` we meet an element below it in the
    poset before meeting any larger label (or we meet neither).  The scan is
    the O(p) form of the two alternatives "every earlier label is smaller" and
    "some predecessor ``w_k`` has only smaller labels between it and ``w_i``".
    """
    P = poset if poset is not None else w.host
    word = w.word
    q = len(word)
    out = set()
    for i, x in enumerate(word):
        if i > 0 and word[i - 1] > x:
            continue
        if i + 1 < q and x > word[i + 1]:
            continue
        below = P.down[x]
        for j in range(i - 1, -1, -1):
            y = word[j]
            if below >> y & 1:
                break
            if y > x:
                break
        else:
            out.add(x)
            continue
        if below >> y & 1:
            out.add(x)
    return frozenset(out)


@dataclass(frozen=True)
class ExtensionStats:
    descents: frozenset[int]
    deletable: frozenset[int]
    size: int

    @property
    def des(self) -> int:
        return len(self.descents)

    @property
    def ndel(self) -> int:
        return len(self.deletable)

    @property
    def nfixed(self) -> int:
        return self.size - len(self.deletable)


def stats(w: LinearExtension) -> ExtensionStats:
    return ExtensionStats(descent_set(w), deletable_set(w), len(w.word))


def fixed_set(w: LinearExtension) -> frozenset[int]:
    return frozenset(w.word) - deletable_set(w)


def subsequence(w: LinearExtension | Sequence[int], D: Iterable[int]) -> tuple[int, ...]:
    """Raw ``w \\ D``: drop the labels in ``D`` with no validity checks."""
    word = w.word if isinstance(w, LinearExtension) else tuple(w)
    D = set(D)
    return tuple(a for a in word if a not in D)


def delete(w: LinearExtension, D: Iterable[int]) -> LinearExtension:
    """Delete a set of deletable labels from ``w``.

    Raises :class:`NotDeletableError` naming every label of ``D`` that is not
    in ``deletable_set(w)``.  The result is a linear extension of the induced
    subposet with the same number of descents.
    """
    D = set(D)
    bad = D - deletable_set(w)
    if bad:
        raise NotDeletableError(bad)
    return _trusted(subsequence(w, D), w.host)


def insertion_buckets(v: LinearExtension, D: Iterable[int]) -> dict[int, list[int]]:
    """Assign each ``d`` in ``D`` to the gap of ``v`` it must be reinserted into.

    Gap ``i`` sits after ``v_i`` (gap 0 is before ``v_1``).  For each ``d`` the
    gap is the first ``i >= j_d`` with ``v_i < d < v_{i+1}``, where ``j_d`` is
    the last position of ``v`` holding an element below ``d`` (0 if none) and
    ``v_0 = 0``, ``v_{q+1} = +inf`` act as sentinels.  Buckets come back
    sorted increasingly; empty gaps are omitted.
    """
    P = v.host
    word = v.word
    q = len(word)
    padded = (0,) + word + (max(P.labels, default=0) + 1,)
    buckets: dict[int, list[int]] = {}
    for d in sorted(set(D)):
        below = P.down[d]
        jd = 0
        for j in range(q, 0, -1):
            if below >> word[j - 1] & 1:
                jd = j
                break
        for i in range(jd, q + 1):
            if padded[i] < d < padded[i + 1]:
                buckets.setdefault(i, []).append(d)
                break
        else:
            raise NotAnExtensionError(f"no admissible gap for label {d}")
    return buckets


def restore(v: LinearExtension, D: Iterable[int] | None = None, check: bool = True) -> LinearExtension:
    """The unique ``w`` in ``L(host)`` with ``w \\ D == v`` and ``D`` deletable in ``w``.

    ``D`` defaults to the host labels missing from ``v``.  With ``check`` the
    result is re-validated (extension of the host, ``D`` deletable).
    """
    P = v.host
    present = set(v.word)
    D = set(P.labels) - present if D is None else set(D)
    if D & present:
        raise ValueError(f"labels {sorted(D & present)} are both in v and in D")
    if D | present != set(P.labels):
        missing = set(P.labels) - D - present
        extra = (D | present) - set(P.labels)
        raise LabelOutOfRange(f"D and v must partition the labels (missing {sorted(missing)}, extra {sorted(extra)})")
    check_word(P, v.word)
    buckets = insertion_buckets(v, D)
    word = list(buckets.get(0, []))
    for i, a in enumerate(v.word, start=1):
        word.append(a)
        word.extend(buckets.get(i, []))
    w = LinearExtension(tuple(word), P) if check else _trusted(tuple(word), P)
    if check and not D <= deletable_set(w):
        raise OrdopolyError(f"restore produced {w} where {sorted(D - deletable_set(w))} are not deletable")
    return w


@dataclass(frozen=True)
class ExtensionClass:
    root: LinearExtension
    descents: int
    deletable: frozenset[int]
    members: tuple[tuple[int, ...], ...]

    @property
    def ndel(self) -> int:
        return len(self.deletable)


@dataclass(frozen=True)
class ClassPartition:
    """``L(P)``-rooted classes ``[w] = {w \\ D : D subset of Del(w)}``."""

    poset: Poset = field(repr=False)
    classes: tuple[ExtensionClass, ...]

    def union(self) -> set[tuple[int, ...]]:
        return {m for c in self.classes for m in c.members}

    def total(self) -> int:
        return sum(len(c.members) for c in self.classes)

    def is_disjoint(self) -> bool:
        return self.total() == len(self.union())

    def to_json(self) -> str:
        data = {
            "classes": [
                {
                    "root": format_word(c.root.word),
                    "des": c.descents,
                    "del": c.ndel,
                    "members": [format_word(m) for m in c.members],
                }
                for c in self.classes
            ]
        }
        return json.dumps(data, indent=1)


def class_partition(P: Poset, max_p_guard: int = 12) -> ClassPartition:
    if P.p > max_p_guard:
        raise GuardExceeded(f"class partition limited to p <= {max_p_guard} (got {P.p})")
    classes = []
    for w in enumerate_extensions(P):
        dels = sorted(deletable_set(w))
        members = [
            subsequence(w, D)
            for r in range(len(dels) + 1)
            for D in itertools.combinations(dels, r)
        ]
        members.sort(key=lambda m: (len(m), m))
        classes.append(ExtensionClass(w, des(w), frozenset(dels), tuple(members)))
    return ClassPartition(P, tuple(classes))


def stats_histogram(
    P: Poset,
    prefix: Sequence[int] = (),
    budget: int | None = None,
) -> tuple[dict[tuple[int, int], int], int]:
    """Histogram of ``(des(w), #fixed labels of w)`` over ``L(P)``.

    Restricted to words starting with ``prefix`` if one is given.  Returns the
    histogram and the number of extensions visited.  Raises
    :class:`BudgetExceeded` once more than ``budget`` extensions are seen.

    Deletability is decided incrementally.  When ``x`` is appended at
    position ``i``, the left-scan condition only depends on the prefix: it
    holds iff no label larger than ``x`` sits after the last placed lower
    cover of ``x``.  The neighbour condition is settled when the next label
    arrives, so each step carries the still-pending status of the last label.
    """
    n = P.p
    down = P.down
    lower = P.lower_covers
    upper = P.upper_covers
    size = max(P.labels, default=0) + 1
    pos = [0] * size
    pm = [0] * (n + 1)
    hist = [[0] * (n + 2) for _ in range(n + 1)]
    limit = budget + 1 if budget is not None else -1
    count = 0

    def step(i, placed, last, des_, fixed, cand, x):
        b = 1 << x
        t = 0
        for c in lower[x]:
            if pos[c] > t:
                t = pos[c]
        if last > x:
            des_ += 1
            fixed += 1
            xc = False
        else:
            if not cand:
                fixed += 1
            xc = not ((placed ^ pm[t]) >> x)
        pos[x] = i + 1
        pm[i + 1] = placed | b
        return des_, fixed, xc

    def rec(i, placed, avail, last, des_, fixed, cand):
        nonlocal count
        if i == n:
            hist[des_][fixed if cand else fixed + 1] += 1
            count += 1
            if count == limit:
                raise _Stop
            return
        m = avail
        while m:
            b = m & -m
            m ^= b
            x = b.bit_length() - 1
            # inlined step() for speed
            t = 0
            for c in lower[x]:
                if pos[c] > t:
                    t = pos[c]
            if last > x:
                nd, nf, xc = des_ + 1, fixed + 1, False
            else:
                nd, nf = des_, (fixed if cand else fixed + 1)
                xc = not ((placed ^ pm[t]) >> x)
            pos[x] = i + 1
            np_ = placed | b
            pm[i + 1] = np_
            na = avail ^ b
            for u in upper[x]:
                if not (down[u] & ~np_):
                    na |= 1 << u
            rec(i + 1, np_, na, x, nd, nf, xc)

    placed = 0
    avail = sum(1 << a for a in P.minimal())
    state = (0, 0, True)
    last = 0
    for i, x in enumerate(prefix):
        if not (avail >> x & 1):
            raise NotAnExtensionError(f"prefix {format_word(prefix)} is not extendable")
        state = step(i, placed, last, *state, x)
        placed |= 1 << x
        avail = _available_after(P, placed, avail, x)
        last = x

    try:
        rec(len(prefix), placed, avail, last, *state)
    except _Stop:
        table = _collect(hist)
        raise BudgetExceeded(budget, count, table) from None
    return _collect(hist), count


class _Stop(Exception):
    pass


def _collect(hist) -> dict[tuple[int, int], int]:
    return {
        (l, f): c
        for l, row in enumerate(hist)
        for f, c in enumerate(row)
        if c
    }
