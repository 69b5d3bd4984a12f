"""The statistic-preserving bijection between paths and rigged configurations.

``phi_bar`` follows the recursion on the leftmost tensor factor: a single box
is consumed by the inverse of ``delta``, a wide rectangle is split into its
first column and the rest (the rigged configuration is unchanged), and a tall
column is split into its bottom box and the remaining column (a singular
length-one string is removed at each index below the column height).
``phi_bar_inverse`` runs the same moves in the ``delta`` direction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .crystal import Path, Tableau, classical_f, columns_of, from_columns, is_classically_highest, raise_to_highest, tableau_shape
from .rigged import (
    RiggedConfiguration,
    RiggedError,
    String,
    _parts_of,
    empty_rc,
    rc_f,
    rc_raise_to_highest,
    vacancy_from_parts,
    vacancy_table,
)
from .shapes import MultiplicityArray, ShapeError, TensorShape, multiplicity_of


class BijectionError(RuntimeError):
    """Raised when a step of the bijection has no valid outcome (invalid input or an inconsistent rank)."""


def _lh(L: MultiplicityArray) -> MultiplicityArray:
    return L.add(1, 1, -1)


def _ls(L: MultiplicityArray, r: int, s: int) -> MultiplicityArray:
    return L.add(r, s, -1).add(r, 1).add(r, s - 1)


def _lb(L: MultiplicityArray, r: int) -> MultiplicityArray:
    return L.add(r, 1, -1).add(1, 1).add(r - 1, 1)


def _reshape(strings, L: MultiplicityArray, marked: dict[int, int]) -> RiggedConfiguration:
    """Give the marked string (index -> length) at each index the new vacancy number; others keep labels."""
    out = [list(s) for s in strings]
    parts = _parts_of(out)
    for a, length in marked.items():
        parts[a - 1].append(length)
    for a, length in marked.items():
        out[a - 1].append((length, vacancy_from_parts(L, parts, a, length)))
    return RiggedConfiguration(L, tuple(tuple(s) for s in out))


# ---------------------------------------------------------------------------
# delta and its inverse


def delta_selection(rc: RiggedConfiguration) -> tuple[dict[int, int], int]:
    """Lengths ``l^{(a)}`` of the selected singular strings and the rank where the search stops."""
    table = vacancy_table(rc.L, rc.strings)
    chosen: dict[int, int] = {}
    prev = 1
    for a in range(1, rc.n):
        lengths = sorted(i for i, x in set(rc.strings[a - 1]) if i >= prev and x == table[a - 1][i])
        if not lengths:
            return chosen, a
        chosen[a] = prev = lengths[0]
    return chosen, rc.n


def delta(rc: RiggedConfiguration) -> tuple[RiggedConfiguration, int]:
    """Remove one box from each selected singular string; returns the new configuration over ``lh(L)`` and the rank."""
    if rc.L.get(1, 1) < 1:
        raise BijectionError("delta needs a single-box factor in L")
    chosen, rank = delta_selection(rc)
    table = vacancy_table(rc.L, rc.strings)
    strings = [list(s) for s in rc.strings]
    marked = {}
    for a, i in chosen.items():
        strings[a - 1].remove((i, table[a - 1][i]))
        if i > 1:
            marked[a] = i - 1
    return _reshape(strings, _lh(rc.L), marked), rank


def delta_inverse(rc: RiggedConfiguration, rank: int) -> RiggedConfiguration:
    """The unique configuration over ``L + B^{1,1}`` whose ``delta`` is ``(rc, rank)``.

    From index ``rank - 1`` down to 1 pick the longest singular string no longer
    than the one picked just above (an empty string of length 0 is always
    available), lengthen each by one and make it singular again.
    """
    n = rc.n
    if not 1 <= rank <= n:
        raise BijectionError(f"rank {rank} out of range for n={n}")
    table = vacancy_table(rc.L, rc.strings)
    bound = math.inf
    strings = [list(s) for s in rc.strings]
    marked = {}
    for a in range(rank - 1, 0, -1):
        singular = [i for i, x in set(strings[a - 1]) if i <= bound and x == table[a - 1][i]]
        length = max(singular, default=0)
        if length:
            strings[a - 1].remove((length, table[a - 1][length]))
        marked[a] = length + 1
        bound = length
    out = _reshape(strings, rc.L.add(1, 1), marked)
    if delta_selection(out) != (marked, rank):
        raise BijectionError(f"no preimage of rank {rank}")
    return out


# ---------------------------------------------------------------------------
# splitting maps on rigged configurations


def rc_left_split(rc: RiggedConfiguration, r: int, s: int) -> RiggedConfiguration:
    """Map ``i``: same strings over ``ls(L)`` for a leading ``B^{r,s}``, ``s >= 2``."""
    if s < 2 or rc.L.get(r, s) < 1:
        raise BijectionError(f"left-split needs a factor B^{r},{s} with s >= 2")
    return rc.with_L(_ls(rc.L, r, s))


def rc_left_split_inverse(rc: RiggedConfiguration, r: int, s: int) -> RiggedConfiguration:
    return rc.with_L(rc.L.add(r, 1, -1).add(r, s - 1, -1).add(r, s))


def rc_box_split(rc: RiggedConfiguration, r: int) -> RiggedConfiguration:
    """Map ``j``: add a singular length-one string at each index ``1..r-1``."""
    if r < 2 or rc.L.get(r, 1) < 1:
        raise BijectionError(f"box-split needs a factor B^{r},1 with r >= 2")
    L = _lb(rc.L, r)
    parts = _parts_of(rc.strings)
    for a in range(1, r):
        parts[a - 1].append(1)
    strings = [list(s) for s in rc.strings]
    for a in range(1, r):
        strings[a - 1].append((1, vacancy_from_parts(L, parts, a, 1)))
    return RiggedConfiguration(L, tuple(tuple(s) for s in strings))


def rc_box_split_inverse(rc: RiggedConfiguration, r: int) -> RiggedConfiguration:
    """Remove one singular length-one string at each index ``1..r-1`` and merge the factors back."""
    table = vacancy_table(rc.L, rc.strings)
    strings = [list(s) for s in rc.strings]
    for a in range(1, r):
        p = table[a - 1].get(1)
        if p is None or (1, p) not in strings[a - 1]:
            raise BijectionError(f"no singular string of length 1 at index {a}")
        strings[a - 1].remove((1, p))
    L = rc.L.add(1, 1, -1).add(r - 1, 1, -1).add(r, 1)
    return RiggedConfiguration(L, tuple(tuple(s) for s in strings))


# ---------------------------------------------------------------------------
# splitting maps on paths


def path_left_hat(b: Path) -> tuple[int, Path]:
    return b.factors[0][0][0], Path(b.n, b.factors[1:])


def path_left_split(b: Path) -> Path:
    cols = columns_of(b.factors[0])
    first = tuple((x,) for x in cols[0])
    return Path(b.n, (first, from_columns(cols[1:])) + b.factors[1:])


def path_box_split(b: Path) -> Path:
    col = [rw[0] for rw in b.factors[0]]
    return Path(b.n, (((col[-1],),), tuple((x,) for x in col[:-1])) + b.factors[1:])


# ---------------------------------------------------------------------------
# the bijection


@dataclass(frozen=True)
class TraceStep:
    """One state of the recursion: the move that produced it (``start``, ``delta``, ``split``, ``box``)."""

    move: str
    rc: RiggedConfiguration
    path: Path


def phi_bar_trace(b: Path) -> list[TraceStep]:
    """States from ``(phi_bar(b), b)`` down to the empty path, one per move."""
    if not is_classically_highest(b):
        raise BijectionError(f"{b} is not classically highest")
    paths = [b]
    moves = ["start"]
    cur = b
    while cur.factors:
        r, s = tableau_shape(cur.factors[0])
        if (r, s) == (1, 1):
            cur = path_left_hat(cur)[1]
            moves.append("delta")
        elif s >= 2:
            cur = path_left_split(cur)
            moves.append("split")
        else:
            cur = path_box_split(cur)
            moves.append("box")
        paths.append(cur)
    rc = empty_rc(MultiplicityArray(b.n))
    rcs = [rc]
    for k in range(len(paths) - 2, -1, -1):
        move = moves[k + 1]
        p = paths[k]
        r, s = tableau_shape(p.factors[0])
        L = multiplicity_of(p.shape)
        if move == "delta":
            rc = delta_inverse(rc, p.factors[0][0][0])
        elif move == "split":
            rc = rc.with_L(L)
        else:
            rc = rc_box_split_inverse(rc, r)
        if rc.L != L:
            raise BijectionError(f"multiplicity mismatch {rc.L} != {L}")
        rcs.append(rc)
    rcs.reverse()
    return [TraceStep(m, c, p) for m, c, p in zip(moves, rcs, paths)]


def phi_bar(b: Path) -> RiggedConfiguration:
    """Bijection from classically highest paths to admissible rigged configurations."""
    return phi_bar_trace(b)[0].rc


def phi_bar_inverse(rc: RiggedConfiguration, shape: TensorShape | Sequence[tuple[int, int]] | None = None) -> Path:
    """Inverse of :func:`phi_bar`; ``shape`` fixes the tensor order (default: the canonical order of ``L``)."""
    n = rc.n
    if shape is None:
        factors = list(rc.L.factors())
    else:
        factors = list(shape.factors if isinstance(shape, TensorShape) else shape)
    if multiplicity_of(TensorShape(n, tuple(factors))) != rc.L:
        raise ShapeError(f"tensor shape {factors} does not match {rc.L}")
    # queue of pending factors; each item records how to reassemble tableaux
    out: list[Tableau] = []
    stack: list = []
    cur = rc
    pending = [(r, s) for r, s in factors]
    while pending:
        r, s = pending.pop(0)
        if (r, s) == (1, 1):
            cur, letter = delta(cur)
            out.append(((letter,),))
        elif s >= 2:
            cur = rc_left_split(cur, r, s)
            pending[:0] = [(r, 1), (r, s - 1)]
            stack.append(("split", len(out)))
        else:
            cur = rc_box_split(cur, r)
            pending[:0] = [(1, 1), (r - 1, 1)]
            stack.append(("box", len(out)))
    if not cur.is_empty():
        raise BijectionError(f"configuration not exhausted: {cur}")
    # merge in reverse order of splitting
    for kind, pos in reversed(stack):
        first, second = out[pos], out[pos + 1]
        if kind == "split":
            merged = from_columns(columns_of(first) + columns_of(second))
        else:
            letter = first[0][0]
            col = [rw[0] for rw in second]
            if col and letter <= col[-1]:
                raise BijectionError("box-split letters do not form a column")
            merged = tuple((x,) for x in col + [letter])
        out[pos : pos + 2] = [merged]
    return Path(n, tuple(out))


def phi(b: Path) -> RiggedConfiguration:
    """Extension to all paths: raise to highest weight, map, then lower along the same word."""
    top, word = raise_to_highest(b)
    rc = phi_bar(top)
    for a in reversed(word):
        nxt = rc_f(rc, a)
        if nxt is None:
            raise BijectionError(f"f_{a} undefined while transporting {b}")
        rc = nxt
    return rc


def phi_inverse(rc: RiggedConfiguration, shape: TensorShape | Sequence[tuple[int, int]] | None = None) -> Path:
    top, word = rc_raise_to_highest(rc)
    b = phi_bar_inverse(top, shape)
    for a in reversed(word):
        nxt = classical_f(b, a)
        if nxt is None:
            raise BijectionError(f"f_{a} undefined while transporting {rc}")
        b = nxt
    return b
