"""Schensted products, the combinatorial R-matrix, local and tail energies, configuration sums."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Sequence

from .crystal import Path, Tableau, enumerate_paths, evacuation, kr_tableaux, tableau_row_word, tableau_shape
from .qlaurent import QLaurent
from .shapes import ShapeError, TensorShape


class RMatrixError(RuntimeError):
    """The product-preserving search found zero or several preimages."""


def row_insert(rows: list[list[int]], x: int) -> None:
    """Schensted row insertion of ``x`` into ``rows`` (mutated in place)."""
    for rw in rows:
        for k, y in enumerate(rw):
            if y > x:
                rw[k], x = x, y
                break
        else:
            rw.append(x)
            return
    rows.append([x])


@lru_cache(maxsize=None)
def schensted_product(b: Tableau, b2: Tableau) -> tuple[tuple[int, ...], ...]:
    """``b . b2``: insert the row word of ``b2`` into ``b``."""
    rows = [list(rw) for rw in b]
    for x in tableau_row_word(b2):
        row_insert(rows, x)
    return tuple(tuple(rw) for rw in rows)


@lru_cache(maxsize=None)
def _product_table(shape_left: tuple[int, int], shape_right: tuple[int, int], n: int) -> dict:
    """Map Schensted product -> (left, right) over ``B^{shape_left} x B^{shape_right}``."""
    table: dict = {}
    for x in kr_tableaux(*shape_left, n):
        for y in kr_tableaux(*shape_right, n):
            p = schensted_product(x, y)
            if p in table:
                raise RMatrixError(f"product {p} is not unique on B^{shape_left} (x) B^{shape_right}")
            table[p] = (x, y)
    return table


@lru_cache(maxsize=None)
def r_matrix(b: Tableau, b2: Tableau, n: int) -> tuple[Tableau, Tableau]:
    """``R(b (x) b2) = (b2~, b~)`` with ``b . b2 == b2~ . b~``."""
    if tableau_shape(b) == tableau_shape(b2):
        return b, b2
    p = schensted_product(b, b2)
    hit = _product_table(tableau_shape(b2), tableau_shape(b), n).get(p)
    if hit is None:
        raise RMatrixError(f"no R-matrix image for {b} (x) {b2}")
    return hit


def r_matrix_search(b: Tableau, b2: Tableau, n: int) -> tuple[Tableau, Tableau]:
    """Brute-force R-matrix: scan ``B^{r',s'} x B^{r,s}`` for equal product and equal content."""
    p = schensted_product(b, b2)
    content = Counter(tableau_row_word(b) + tableau_row_word(b2))
    hits = []
    for x in kr_tableaux(*tableau_shape(b2), n):
        for y in kr_tableaux(*tableau_shape(b), n):
            if Counter(tableau_row_word(x) + tableau_row_word(y)) == content and schensted_product(x, y) == p:
                hits.append((x, y))
    if len(hits) != 1:
        raise RMatrixError(f"{len(hits)} R-matrix candidates for {b} (x) {b2}")
    return hits[0]


@lru_cache(maxsize=None)
def local_energy(b: Tableau, b2: Tableau) -> int:
    """Boxes of ``shape(b . b2)`` outside the row-wise concatenation of the two rectangles."""
    r, s = tableau_shape(b)
    r2, s2 = tableau_shape(b2)
    prod = schensted_product(b, b2)
    total = 0
    for i, rw in enumerate(prod):
        concat = s * (i < r) + s2 * (i < r2)
        total += max(0, len(rw) - concat)
    return total


def apply_r(b: Path, i: int) -> Path:
    """``R_i``: swap the factors at positions ``i+1, i`` counted from the right (1-based)."""
    k = len(b.factors)
    left, right = k - i - 1, k - i
    x, y = r_matrix(b.factors[left], b.factors[right], b.n)
    factors = list(b.factors)
    factors[left], factors[right] = x, y
    return Path(b.n, tuple(factors))


def tail_energy(b: Path) -> int:
    """``D = sum_{i<j} H_{j-1} R_{j-2} ... R_i`` with factors numbered from the right."""
    right_to_left = b.factors[::-1]
    k = len(right_to_left)
    total = 0
    for i in range(k - 1):
        cur = right_to_left[i]
        for j in range(i + 1, k):
            bj = right_to_left[j]
            total += local_energy(bj, cur)
            if j + 1 < k:
                cur = r_matrix(bj, cur, b.n)[0]
    return total


def norm_constant(shape: TensorShape | Sequence[tuple[int, int]]) -> int:
    factors = shape.factors if isinstance(shape, TensorShape) else tuple(shape)
    total = 0
    for x in range(len(factors)):
        for y in range(x + 1, len(factors)):
            (r1, s1), (r2, s2) = factors[x], factors[y]
            total += min(s1, s2) * min(r1, r2)
    return total


def config_sum(
    shape: TensorShape, lam: Sequence[int], kind: str = "classical", level: int | None = None, normalization: str = "cocharge"
) -> QLaurent:
    """``X``, ``X-bar`` or ``X^level``: paths graded by tail energy.

    ``normalization="charge"`` grades by ``n(B) - D(ev(b))`` instead, the
    convention in which level-restricted sums are often tabulated.  On
    classically restricted paths this equals ``q^{n(B)} X(1/q)``.
    """
    if kind == "level" and level is not None and any(s > level for _, s in shape.factors):
        raise ShapeError(f"tensor shape {shape} has a factor wider than level {level}")
    paths = enumerate_paths(shape, lam, kind, level)
    if normalization == "cocharge":
        return QLaurent.from_exponents(tail_energy(b) for b in paths)
    if normalization == "charge":
        nb = norm_constant(shape)
        if kind == "unrestricted":  # evacuation leaves the weight space; flip the grading instead
            return QLaurent.from_exponents(nb - tail_energy(b) for b in paths)
        return QLaurent.from_exponents(nb - tail_energy(evacuation(b)) for b in paths)
    raise ValueError(f"unknown normalization {normalization!r}")
