"""Exact Laurent polynomials in q with integer coefficients.

Every generating function in the package (configuration sums, fermionic
formulas, Bethe counts) is a :class:`QLaurent`.  Values are immutable and
stored sparsely with zero coefficients stripped, so ``==`` is semantic
equality.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping


class QLaurent:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> QLaurent:
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> QLaurent:
        return cls({e: c})

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> QLaurent:
        """Sum of ``q**e`` over ``exponents`` (repeats accumulate)."""
        acc: dict[int, int] = {}
        for e in exponents:
            acc[e] = acc.get(e, 0) + 1
        return cls(acc)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def coefficient(self, e: int) -> int:
        return dict(self._terms).get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int | None:
        return self._terms[-1][0] if self._terms else None

    def low_degree(self) -> int | None:
        return self._terms[0][0] if self._terms else None

    def at_one(self) -> int:
        return sum(c for _, c in self._terms)

    def shift(self, k: int) -> QLaurent:
        """Multiply by ``q**k``."""
        return QLaurent((e + k, c) for e, c in self._terms)

    def invert(self) -> QLaurent:
        """Substitute ``q -> 1/q``."""
        return QLaurent((-e, c) for e, c in self._terms)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return QLaurent(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self):
        return QLaurent((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return QLaurent(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"QLaurent({self})"

    def __str__(self):
        return format_poly(self)

    def to_json(self) -> dict:
        return {"poly": [{"exp": e, "coef": str(c)} for e, c in self._terms]}

    @classmethod
    def from_json(cls, data: dict) -> QLaurent:
        return cls((t["exp"], int(t["coef"])) for t in data["poly"])


def _coerce(x):
    if isinstance(x, QLaurent):
        return x
    if isinstance(x, int):
        return QLaurent.constant(x)
    return NotImplemented


ZERO = QLaurent()
ONE = QLaurent.constant(1)
q = QLaurent.monomial(1)


def _monomial_text(e: int, c: int) -> str:
    if e == 0:
        return str(c)
    power = "q" if e == 1 else f"q^{e}"
    return power if c == 1 else f"{c}*{power}"


def format_poly(p: QLaurent) -> str:
    """Render in ascending exponent order, e.g. ``2 + 4*q + q^2``."""
    if p.is_zero():
        return "0"
    out = []
    for k, (e, c) in enumerate(p.items()):
        text = _monomial_text(e, abs(c))
        if k == 0:
            out.append(text if c > 0 else "-" + text)
        else:
            out.append((" + " if c > 0 else " - ") + text)
    return "".join(out)


@lru_cache(maxsize=None)
def qbinomial(p: int, m: int) -> QLaurent:
    """Gaussian binomial ``[p+m choose m]_q``; zero unless ``p, m >= 0``.

    Coefficients count partitions in a ``m x p`` box by size, built with the
    Pascal recurrence ``[p,m] = [p-1,m] + q^p [p,m-1]``.
    """
    if p < 0 or m < 0:
        return ZERO
    if p == 0 or m == 0:
        return ONE
    return qbinomial(p - 1, m) + qbinomial(p, m - 1).shift(p)


def quasipartition_gf(M: int, p: int, m: int) -> QLaurent:
    """Generating function by part sum of weakly decreasing ``m``-tuples in ``[M, p]``."""
    if m < 0:
        raise ValueError(f"number of parts must be nonnegative, got {m}")
    if m == 0:  # the empty tuple fits any interval, even an empty one
        return ONE
    return qbinomial(p - M, m).shift(m * M)


def q_pochhammer(m: int) -> QLaurent:
    """``(q)_m = (1-q)(1-q^2)...(1-q^m)``."""
    out = ONE
    for k in range(1, m + 1):
        out = out * (ONE - q.shift(k - 1))
    return out
