"""Cross-checks between the fast path, the brute-force oracles and closed forms."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import oracle
from .orderpoly import extended
from .polynomial import antichain_closed_form, chain_closed_form, two_by_m_determinant
from .poset import Poset, antichain, chain, fence, from_covers, grid


def random_poset(rng: random.Random, p: int, density: float = 0.3) -> Poset:
    """Naturally labeled poset on ``1..p`` from independent pairs ``a < b``."""
    pairs = [(a, b) for a in range(1, p + 1) for b in range(a + 1, p + 1) if rng.random() < density]
    return from_covers(p, pairs)


def corpus(seed: int = 0, n_random: int = 200, max_random_p: int = 6) -> Iterator[tuple[str, Poset]]:
    """The standard verification corpus.

    Chains and antichains up to 7 elements, grids up to ``3 x 3``, fences up
    to 6 elements, then ``n_random`` seeded random posets with at most
    ``max_random_p`` elements.
    """
    for p in range(0, 8):
        yield f"chain:{p}", chain(p)
    for p in range(1, 8):
        yield f"antichain:{p}", antichain(p)
    for l in range(1, 4):
        for m in range(1, 4):
            yield f"grid:{l},{m}", grid(l, m)
    for m in range(1, 7):
        yield f"fence:{m}", fence(m)
    rng = random.Random(seed)
    for i in range(n_random):
        p = rng.randint(1, max_random_p)
        density = rng.choice((0.15, 0.3, 0.5))
        yield f"random#{i}(p={p})", random_poset(rng, p, density)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    poset_name: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail))


def _closed_form(name: str):
    kind, _, args = name.partition(":")
    nums = [int(x) for x in args.split(",") if x.strip()] if args else []
    if kind == "chain":
        return "2F1[-p,-n;1;z]", chain_closed_form(nums[0])
    if kind == "antichain":
        return "(1+nz)^p", antichain_closed_form(nums[0])
    if kind == "grid" and nums and nums[0] == 2 and nums[1] >= 1:
        return "2x2 determinant", two_by_m_determinant(nums[1])
    if kind == "grid" and nums and nums[1] == 2 and nums[0] >= 1:
        # m x 2 is isomorphic to 2 x m; the polynomial does not depend on labeling
        return "2x2 determinant", two_by_m_determinant(nums[0])
    return None


def verify_poset(
    P: Poset,
    name: str = "",
    ns: Sequence[int] = range(5),
    budget: int | None = None,
    threads: int = 1,
) -> Report:
    """Run every applicable cross-check on ``P``."""
    report = Report(name or repr(P))
    E = extended(P, budget, threads)
    p = P.p

    if p <= 8:
        brute = len(oracle.linear_extensions(P))
        report.add("extension count vs permutation filter", brute == E.n_extensions,
                   f"{E.n_extensions} vs {brute}")
    kind, _, args = name.partition(":")
    if kind == "grid":
        l, m = (int(x) for x in args.split(","))
        if l * m <= 30:
            hook = oracle.hook_length_count(l, m)
            report.add("extension count vs hook length", hook == E.n_extensions,
                       f"{E.n_extensions} vs {hook}")

    report.add("integer coefficients at integer n",
               all(c.denominator == 1 for c in E.poly.substitute_n(7).terms.values()))
    report.add("constant term is 1", E.poly.coefficient(0, 0) == 1)
    report.add("descent-free row is {(0,0): 1}",
               {f: e for (l, f), e in E.table.entries.items() if l == 0} == {0: 1})

    if p <= 12:
        for n in ns:
            fast = E.at_n(n)
            slow = oracle.extended_oracle_eval(P, n)
            report.add(f"subposet sum at n={n}", fast == slow, f"fast path {fast} vs brute force {slow}")
    if p <= 16:
        for n in ns:
            top = E.omega()(n)
            maps = oracle.count_strict_maps(P, n)
            report.add(f"strict maps at n={n}", top == maps, f"{top} vs {maps}")
    if p <= 20:
        direct = oracle.antichain_polynomial(P)
        at_one = E.at_n(1)
        report.add("E(1,z) vs antichains", direct == at_one, f"{at_one} vs {direct}")

    closed = _closed_form(name) if name else None
    if closed is not None:
        label, poly = closed
        report.add(f"closed form {label}", poly == E.poly)
    return report
