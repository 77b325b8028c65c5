"""Exact bivariate polynomials in ``n`` and ``z``.

Coefficients are :class:`fractions.Fraction`; nothing here ever touches a
float.  A polynomial is a mapping ``(deg_n, deg_z) -> coefficient`` with
zero entries dropped, so two polynomials are equal iff their term dicts are.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import comb, factorial
from numbers import Rational
from typing import Iterable, Mapping

from .errors import NonTerminating

Monomial = tuple[int, int]


class BivariatePolynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Rational | int] | None = None):
        clean: dict[Monomial, Fraction] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            c = Fraction(c)
            if c:
                clean[(int(i), int(j))] = clean.get((int(i), int(j)), 0) + c
        self._terms = {k: v for k, v in clean.items() if v}
        self._hash = None

    # constructors

    @classmethod
    def const(cls, c) -> "BivariatePolynomial":
        return cls({(0, 0): c})

    @classmethod
    def n(cls) -> "BivariatePolynomial":
        return cls({(1, 0): 1})

    @classmethod
    def z(cls) -> "BivariatePolynomial":
        return cls({(0, 1): 1})

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "BivariatePolynomial":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # inspection

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def degree_n(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    def degree_z(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    def z_coefficient(self, j: int) -> "BivariatePolynomial":
        """The coefficient of ``z**j`` as a polynomial in ``n``."""
        return BivariatePolynomial._raw({(i, 0): c for (i, jj), c in self._terms.items() if jj == j})

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    # arithmetic

    @staticmethod
    def _coerce(other) -> "BivariatePolynomial":
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return BivariatePolynomial.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return BivariatePolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for (a, b), c in self._terms.items():
            for (d, e), f in other._terms.items():
                k = (a + d, b + e)
                out[k] = out.get(k, 0) + c * f
        return BivariatePolynomial._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = BivariatePolynomial.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __call__(self, n, z=0) -> Fraction:
        return self.evaluate(n, z)

    def evaluate(self, n, z=0) -> Fraction:
        """Exact value at rational ``n`` and ``z``."""
        n, z = Fraction(n), Fraction(z)
        return sum((c * n**i * z**j for (i, j), c in self._terms.items()), Fraction(0))

    def substitute_n(self, n) -> "BivariatePolynomial":
        """Fix ``n`` and keep ``z`` symbolic."""
        n = Fraction(n)
        out: dict[Monomial, Fraction] = {}
        for (i, j), c in self._terms.items():
            out[(0, j)] = out.get((0, j), 0) + c * n**i
        return BivariatePolynomial(out)

    # output

    def __repr__(self):
        return f"BivariatePolynomial({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("n" if i == 1 else f"n^{i}"),
                    "" if j == 0 else ("z" if j == 1 else f"z^{j}"),
                ) if s
            )
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_dict(self) -> dict:
        return {
            "terms": [
                {"n": i, "z": j, "num": str(c.numerator), "den": str(c.denominator)}
                for (i, j), c in sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))
            ]
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "BivariatePolynomial":
        return cls({
            (int(t["n"]), int(t["z"])): Fraction(int(t["num"]), int(t["den"]))
            for t in data["terms"]
        })

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "BivariatePolynomial":
        return cls.from_dict(json.loads(text))


Poly = BivariatePolynomial
ONE = Poly.const(1)
N = Poly.n()
Z = Poly.z()


def _falling_coeffs(shift: int, k: int) -> list[int]:
    """Integer coefficients (lowest degree first) of ``(n+shift)(n+shift-1)...(n+shift-k+1)``."""
    coeffs = [1]
    for i in range(k):
        root = shift - i
        nxt = [0] * (len(coeffs) + 1)
        for d, c in enumerate(coeffs):
            nxt[d] += c * root
            nxt[d + 1] += c
        coeffs = nxt
    return coeffs


def binom_poly(shift: int, k: int) -> Poly:
    """``C(n + shift, k)`` as a polynomial in ``n`` of degree ``k``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    kf = factorial(k)
    return Poly._raw({
        (d, 0): Fraction(c, kf) for d, c in enumerate(_falling_coeffs(shift, k)) if c
    })


def pochhammer(x, k: int) -> Poly:
    """Rising factorial ``x (x+1) ... (x+k-1)`` for ``x`` an integer or a polynomial."""
    x = Poly._coerce(x)
    out = ONE
    for i in range(k):
        out = out * (x + i)
    return out


def hyp2f1_terminating(a: int, b, c) -> Poly:
    """``2F1[a, b; c; z]`` for a non-positive integer ``a``, as an exact polynomial in ``z``.

    ``b`` may be an integer, a rational or a polynomial in ``n`` (e.g.
    ``-N`` or ``1 - N``); ``c`` must be rational and not a non-positive
    integer greater than ``a``, since the series would hit a zero denominator.
    """
    if not isinstance(a, int) or a > 0:
        raise NonTerminating(f"numerator parameter {a!r} is not a non-positive integer")
    c = Fraction(c)
    b = Poly._coerce(b)
    if b is NotImplemented:
        raise TypeError("b must be a number or a BivariatePolynomial")
    terms = ONE
    num = ONE
    den = Fraction(1)
    for k in range(1, -a + 1):
        num = num * (b + (k - 1)) * (a + k - 1)
        den *= (c + k - 1) * k
        if den == 0:
            raise ZeroDivisionError(f"lower parameter {c} is a non-positive integer")
        terms = terms + num * (Z ** k) * (1 / den)
    return terms


def chain_closed_form(p: int) -> Poly:
    """``2F1[-p, -n; 1; z] = sum_k C(p,k) C(n,k) z^k``."""
    return hyp2f1_terminating(-p, -N, 1)


def antichain_closed_form(p: int) -> Poly:
    """``(1 + n z)^p`` expanded."""
    if p < 0:
        raise ValueError("p must be non-negative")
    return (ONE + N * Z) ** p


def two_by_m_determinant(m: int) -> Poly:
    """Determinant form of the extended polynomial of the ``2 x m`` grid.

    ``F0^2 - z^2 C(m+1, 2) C(n+1, 2) F1^2`` with ``F0 = 2F1[-m, -n; 1; z]``
    and ``F1 = 2F1[1-m, 1-n; 3; z]``.
    """
    if m < 1:
        raise ValueError("m must be positive")
    f0 = hyp2f1_terminating(-m, -N, 1)
    f1 = hyp2f1_terminating(1 - m, 1 - N, 3)
    off_a = Z * comb(m + 1, 2) * f1
    off_b = Z * binom_poly(1, 2) * f1
    return f0 * f0 - off_a * off_b


def binomial_basis_poly(p: int, des: int, fixed: int) -> Poly:
    """``sum_k C(p - fixed, k - fixed) C(n + des, k) z^k``."""
    out = Poly()
    for k in range(fixed, p + 1):
        c = comb(p - fixed, k - fixed)
        if c:
            out = out + binom_poly(des, k) * (Z ** k) * c
    return out


class StructuredTable:
    """Counts ``e[(des, fixed)]`` of linear extensions, the binomial-basis form.

    The polynomial it stands for is
    ``sum_(l,f) e[l,f] * sum_k C(p-f, k-f) C(n+l, k) z^k``.
    """

    __slots__ = ("p", "entries")

    def __init__(self, p: int, entries: Mapping[tuple[int, int], int] | Iterable = ()):
        self.p = p
        items = entries.items() if isinstance(entries, Mapping) else entries
        self.entries = {(int(l), int(f)): int(e) for (l, f), e in items if e}

    def __eq__(self, other):
        if not isinstance(other, StructuredTable):
            return NotImplemented
        return self.p == other.p and self.entries == other.entries

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def __repr__(self):
        return f"StructuredTable(p={self.p}, entries={dict(sorted(self.entries.items()))})"

    def total(self) -> int:
        return sum(self.entries.values())

    def max_entry(self) -> int:
        return max(self.entries.values(), default=0)

    def rows(self) -> dict[int, dict[int, int]]:
        out: dict[int, dict[int, int]] = {}
        for (l, f), e in sorted(self.entries.items()):
            out.setdefault(l, {})[f] = e
        return out

    def to_poly(self) -> Poly:
        # collect integer weights per (des, k) first; one division by k! per z^k
        p = self.p
        weight: dict[tuple[int, int], int] = {}
        for (l, f), e in self.entries.items():
            for k in range(f, p + 1):
                weight[(l, k)] = weight.get((l, k), 0) + e * comb(p - f, k - f)
        terms: dict[Monomial, Fraction] = {}
        for k in range(p + 1):
            acc: list[int] = [0] * (k + 1)
            for (l, kk), w in weight.items():
                if kk == k and w:
                    for d, c in enumerate(_falling_coeffs(l, k)):
                        acc[d] += w * c
            kf = factorial(k)
            for d, c in enumerate(acc):
                if c:
                    terms[(d, k)] = Fraction(c, kf)
        return Poly._raw(terms)

    def to_list(self) -> list[dict]:
        return [
            {"des": l, "fixed": f, "count": str(e)}
            for (l, f), e in sorted(self.entries.items())
        ]

    @classmethod
    def from_list(cls, p: int, rows: Iterable[Mapping]) -> "StructuredTable":
        return cls(p, {(int(r["des"]), int(r["fixed"])): int(r["count"]) for r in rows})

    def pretty(self) -> str:
        """Render as a sum over ``k`` grouped by descent count.

        For ``2 x 2`` this reads
        ``sum_{k=0}^{4} ( C(4,k) C(n,k) + C(4-2,k-2) C(n+1,k) ) z^k``.
        """
        p = self.p
        groups = []
        for l, row in self.rows().items():
            pieces = []
            for f, e in sorted(row.items()):
                b = f"C({p},k)" if f == 0 else f"C({p}-{f},k-{f})"
                pieces.append(b if e == 1 else f"{e} {b}")
            inner = " + ".join(pieces)
            nb = "C(n,k)" if l == 0 else f"C(n+{l},k)"
            if len(pieces) > 1:
                inner = f"({inner})"
            groups.append(f"{inner} {nb}")
        return f"sum_{{k=0}}^{{{p}}} ( " + " + ".join(groups) + " ) z^k"
