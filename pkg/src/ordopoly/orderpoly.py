"""Strict order polynomials and their extension over all induced subposets.

``omega(P)`` counts strict order-preserving maps ``P -> [n]``.
``extended(P)`` is the generating polynomial ``sum_Q omega(Q)(n) z^#Q`` over
induced subposets ``Q``.  Both are computed from a single pass over ``L(P)``
that records, per extension, its number of descents and of fixed
(non-deletable) labels; the polynomial is then assembled from that small
table instead of from every extension.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import oracle
from .errors import BudgetExceeded, VerificationError
from .extensions import prefix_partition, stats_histogram
from .polynomial import BivariatePolynomial, StructuredTable, binom_poly
from .poset import Poset

DEFAULT_BUDGET = 10**7


def default_budget() -> int:
    """Enumeration budget, overridable through ``ORDOPOLY_BUDGET``."""
    raw = os.environ.get("ORDOPOLY_BUDGET")
    if raw:
        return int(raw)
    return DEFAULT_BUDGET


def _histogram_job(args):
    P, prefix, budget = args
    return stats_histogram(P, prefix, budget)


def histogram(
    P: Poset,
    budget: int | None = None,
    threads: int = 1,
) -> tuple[dict[tuple[int, int], int], int]:
    """``(des, fixed)`` histogram of ``L(P)`` and the number of extensions.

    With ``threads > 1`` the extensions are split by prefix and folded in
    worker processes; integer addition commutes, so the result is identical.
    ``budget=None`` means :func:`default_budget`; pass ``0`` or a negative
    value to disable the limit.
    """
    if budget is None:
        budget = default_budget()
    limit = budget if budget > 0 else None
    if threads <= 1 or P.p < 4:
        return stats_histogram(P, (), limit)

    depth = 1
    prefixes = prefix_partition(P, depth)
    while len(prefixes) < 4 * threads and depth < min(P.p, 6):
        depth += 1
        prefixes = prefix_partition(P, depth)
    merged: dict[tuple[int, int], int] = {}
    count = 0
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for part, (hist, c) in zip(prefixes, pool.map(_histogram_job, [(P, pre, limit) for pre in prefixes])):
            count += c
            for key, v in hist.items():
                merged[key] = merged.get(key, 0) + v
    if limit is not None and count > limit:
        raise BudgetExceeded(limit, count, merged)
    return merged, count


@dataclass(frozen=True)
class OmegaPolynomial:
    poly: BivariatePolynomial
    p: int

    def __call__(self, n) -> Fraction:
        return self.poly.evaluate(n)

    def __str__(self):
        return str(self.poly)


@dataclass(frozen=True)
class ExtendedOrderPolynomial:
    poly: BivariatePolynomial
    table: StructuredTable
    p: int

    @property
    def n_extensions(self) -> int:
        return self.table.total()

    def omega(self) -> OmegaPolynomial:
        """The ``z^p`` coefficient, which is the strict order polynomial of ``P``."""
        return OmegaPolynomial(self.poly.z_coefficient(self.p), self.p)

    def at_n(self, n: int) -> list[int]:
        """Integer coefficients of ``z^0..z^p`` at a fixed ``n``."""
        fixed = self.poly.substitute_n(n)
        out = []
        for k in range(self.p + 1):
            c = fixed.coefficient(0, k)
            if c.denominator != 1:
                raise VerificationError(f"non-integer coefficient {c} of z^{k} at n={n}")
            out.append(int(c))
        return out

    def __call__(self, n, z):
        return evaluate(self, n, z)

    def pretty(self) -> str:
        return self.table.pretty()

    def to_dict(self) -> dict:
        data = self.poly.to_dict()
        data["p"] = self.p
        data["table"] = self.table.to_list()
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> "ExtendedOrderPolynomial":
        p = int(data["p"])
        return cls(
            BivariatePolynomial.from_dict(data),
            StructuredTable.from_list(p, data["table"]),
            p,
        )

    @classmethod
    def from_json(cls, text: str) -> "ExtendedOrderPolynomial":
        return cls.from_dict(json.loads(text))


def structured_table(P: Poset, budget: int | None = None, threads: int = 1) -> StructuredTable:
    hist, _ = histogram(P, budget, threads)
    return StructuredTable(P.p, hist)


def omega(P: Poset, budget: int | None = None, threads: int = 1) -> OmegaPolynomial:
    """Strict order polynomial: sum over ``L(P)`` of ``C(n + des(w), p)``."""
    hist, _ = histogram(P, budget, threads)
    by_des: dict[int, int] = {}
    for (l, _f), c in hist.items():
        by_des[l] = by_des.get(l, 0) + c
    poly = BivariatePolynomial()
    for l, c in sorted(by_des.items()):
        poly = poly + binom_poly(l, P.p) * c
    return OmegaPolynomial(poly, P.p)


def extended(P: Poset, budget: int | None = None, threads: int = 1) -> ExtendedOrderPolynomial:
    """Extended strict order polynomial of ``P``.

    Every extension ``w`` with ``l`` descents and ``f`` fixed labels stands for
    ``C(p-f, k-f)`` words of length ``k`` over subposets, each contributing
    ``C(n+l, k)`` maps, so the result is
    ``sum_(l,f) e[l,f] sum_k C(p-f, k-f) C(n+l, k) z^k``.

    Raises :class:`BudgetExceeded` (carrying the partial table) when ``L(P)``
    has more elements than the budget.
    """
    table = structured_table(P, budget, threads)
    return ExtendedOrderPolynomial(table.to_poly(), table, P.p)


def evaluate(E: ExtendedOrderPolynomial, n, z) -> Fraction | int:
    """Exact value of ``E`` at ``(n, z)``; an ``int`` whenever the value is integral."""
    v = E.poly.evaluate(n, z)
    return int(v) if v.denominator == 1 else v


def extended_oracle_eval(P: Poset, n: int, max_p: int = 12) -> list[int]:
    """Subposet-sum coefficients at fixed ``n`` computed by brute force."""
    return oracle.extended_oracle_eval(P, n, max_p)


def antichain_generating_check(P: Poset, max_p: int = 20) -> list[int]:
    """Check ``E(1, z)`` against the directly enumerated antichain polynomial.

    A strict map into ``[1]`` exists exactly for antichains, so both sides
    must agree coefficientwise.  Returns the antichain counts by size, or
    raises :class:`VerificationError`.
    """
    direct = oracle.antichain_polynomial(P, max_p)
    via_table = extended(P).at_n(1)
    if via_table != direct:
        raise VerificationError(
            f"E(1,z) = {via_table} but antichain counts are {direct}",
            counterexample=P,
        )
    return direct
