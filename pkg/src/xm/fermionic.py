"""Fermionic formulas: ``M-bar``, the unrestricted ``M``, the level-restricted ``M^l`` and the Bethe count.

The inclusion-exclusion sums over subsets of bound tableaux only depend on
the max (or min) of the bound vectors, so the subsets are aggregated into a
signed dictionary keyed by that vector before the configuration sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Sequence

from .energy import norm_constant
from .qlaurent import ONE, ZERO, QLaurent, qbinomial
from .rigged import (
    admissible_configurations,
    config_cocharge,
    configurations,
    lower_bound,
    vacancy_from_parts,
    vacancy_shift,
    _check_level,
)
from .shapes import MultiplicityArray, ShapeError, configuration_sizes, enumerate_level_cst, enumerate_lower_bound_tableaux, is_partition, pad, partitions

Vector = tuple[int, ...]


@dataclass
class FermionicConfig:
    """Subset sums enumerate raw subsets up to ``raw_threshold`` tableaux and aggregate above it."""

    raw_threshold: int = 12


DEFAULT = FermionicConfig()


def _check_sizes(L: MultiplicityArray, lam: Sequence[int]):
    configuration_sizes(L, lam)  # raises ShapeError on a size mismatch


def signed_extrema(vectors: Sequence[Vector], join: Callable[[int, int], int]) -> dict[Vector, int]:
    """``sum over nonempty S of (-1)^{|S|+1} [join(S) = v]`` as a dictionary ``v -> coefficient``."""
    acc: dict[Vector, int] = {}
    for v in vectors:
        new = dict(acc)
        for w, c in acc.items():
            key = tuple(join(x, y) for x, y in zip(v, w))
            new[key] = new.get(key, 0) - c
        new[v] = new.get(v, 0) + 1
        acc = {k: c for k, c in new.items() if c}
    return acc


def _raw_subsets(vectors: Sequence[Vector], join) -> dict[Vector, int]:
    out: dict[Vector, int] = {}
    k = len(vectors)
    for mask in range(1, 1 << k):
        picked = [vectors[j] for j in range(k) if mask >> j & 1]
        key = tuple(picked[0])
        for v in picked[1:]:
            key = tuple(join(x, y) for x, y in zip(key, v))
        sign = 1 if len(picked) % 2 else -1
        out[key] = out.get(key, 0) + sign
    return {k: c for k, c in out.items() if c}


def subset_sum(vectors: Sequence[Vector], join, config: FermionicConfig = DEFAULT) -> dict[Vector, int]:
    if len(vectors) <= config.raw_threshold:
        return _raw_subsets(vectors, join)
    return signed_extrema(vectors, join)


def _mult(part: Sequence[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for x in part:
        out[x] = out.get(x, 0) + 1
    return out


def m_bar(L: MultiplicityArray, lam: Sequence[int]) -> QLaurent:
    """Classically restricted fermionic sum over admissible configurations."""
    lam = pad(lam, L.n)
    if not is_partition(lam):
        raise ShapeError(f"lambda={lam} is not a partition")
    _check_sizes(L, lam)
    total = ZERO
    for nu in admissible_configurations(L, lam):
        term = QLaurent.monomial(config_cocharge(nu))
        for a, part in enumerate(nu, 1):
            for i, m in _mult(part).items():
                term = term * qbinomial(vacancy_from_parts(L, nu, a, i), m)
        total = total + term
    return total


def _bound_length(L: MultiplicityArray, lam) -> int:
    sizes = configuration_sizes(L, lam)
    return max(list(sizes) + [1])


def lower_bound_vectors(lam: Sequence[int], n: int, length: int) -> list[Vector]:
    """``M_i^{(a)}(t)`` flattened over ``a = 1..n-1``, ``i = 1..length`` for each ``t`` in ``A(lambda')``."""
    out = []
    for t in enumerate_lower_bound_tableaux(lam):
        out.append(tuple(lower_bound(t, a, i) for a in range(1, n) for i in range(1, length + 1)))
    return out


def m_unrestricted(L: MultiplicityArray, lam: Sequence[int], config: FermionicConfig = DEFAULT) -> QLaurent:
    """Unrestricted fermionic formula with lower bounds by inclusion-exclusion over ``A(lambda')``."""
    n = L.n
    lam = pad(lam, n)
    if any(x < 0 for x in lam):
        raise ShapeError(f"weight {lam} has a negative entry")
    _check_sizes(L, lam)
    length = _bound_length(L, lam)
    bounds = subset_sum(lower_bound_vectors(lam, n, length), max, config)
    nus = list(configurations(L, lam))
    total = ZERO
    for vec, sign in bounds.items():
        for nu in nus:
            exp = config_cocharge(nu)
            term = ONE
            for a, part in enumerate(nu, 1):
                for i, m in _mult(part).items():
                    M = vec[(a - 1) * length + i - 1]
                    exp += m * M
                    term = term * qbinomial(vacancy_from_parts(L, nu, a, i) - M, m)
                    if term.is_zero():
                        break
                if term.is_zero():
                    break
            if not term.is_zero():
                total = total + term.shift(exp) * sign
    return total


def level_shift_vectors(lam: Sequence[int], n: int, level: int) -> list[Vector]:
    """``p_i^{(k)}(t) - p_i^{(k)}`` over ``k = 1..n-1``, ``i = 1..level`` for each ``t`` in ``CST(lambda')``."""
    out = []
    for t in enumerate_level_cst(lam, level):
        out.append(tuple(vacancy_shift(lam, level, t, k, i) for k in range(1, n) for i in range(1, level + 1)))
    return out


def m_level(L: MultiplicityArray, lam: Sequence[int], level: int, normalization: str = "cocharge", config: FermionicConfig = DEFAULT) -> QLaurent:
    """Level-restricted fermionic formula with vacancy numbers lowered by inclusion-exclusion over ``CST(lambda')``.

    ``normalization="charge"`` grades each rigged configuration by
    ``n(B) - cc`` of its label complement instead of by ``cc``.
    """
    n = L.n
    lam = pad(lam, n)
    _check_level(L, lam, level)
    _check_sizes(L, lam)
    shifts = subset_sum(level_shift_vectors(lam, n, level), min, config)
    nus = list(admissible_configurations(L, lam, max_part=level))
    nb = norm_constant(L.factors())
    total = ZERO
    for vec, sign in shifts.items():
        for nu in nus:
            term = ONE
            full = 0
            for k, part in enumerate(nu, 1):
                mult = _mult(part)
                for i in range(1, level + 1):
                    m = mult.get(i, 0)
                    p = vacancy_from_parts(L, nu, k, i)
                    full += m * p
                    if i < level:
                        term = term * qbinomial(p + vec[(k - 1) * level + i - 1], m)
                if term.is_zero():
                    break
            if term.is_zero():
                continue
            if normalization == "cocharge":
                total = total + term.shift(config_cocharge(nu)) * sign
            elif normalization == "charge":
                total = total + term.shift(nb - config_cocharge(nu) - full) * sign
            else:
                raise ValueError(f"unknown normalization {normalization!r}")
    return total


def charge_normalized(poly: QLaurent, L: MultiplicityArray) -> QLaurent:
    """``q^{n(B)} P(1/q)``."""
    return poly.invert().shift(norm_constant(L.factors()))


def bethe_count(sites: int, down: int) -> int:
    """Number of Bethe vectors for ``sites`` spins with ``down`` spins flipped."""
    if sites < 0 or down < 0:
        raise ValueError("sites and down-spin count must be nonnegative")
    total = 0
    for nu in partitions(down):
        mult = _mult(nu)
        prod = 1
        for length, m in mult.items():
            p = sites - 2 * sum(min(length, other) * c for other, c in mult.items())
            if p < 0:
                prod = 0
                break
            prod *= comb(p + m, m)
        total += prod
    return total
