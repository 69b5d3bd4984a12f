"""Kirillov-Reshetikhin crystals ``B^{r,s}`` of type ``A_{n-1}^(1)`` and their tensor products.

A tableau is a tuple of rows (tuples of ints).  A :class:`Path` holds the
factors left to right, ``b_k (x) ... (x) b_1``.  Crystal operators act on the
concatenated row word (each factor read bottom row to top row); positions in
the word map back to cells, so no per-factor signature merging is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .shapes import ShapeError, TensorShape, Weight, is_level_restricted_weight, is_partition, pad

Tableau = tuple[tuple[int, ...], ...]


def column(*entries: int) -> Tableau:
    return tuple((x,) for x in entries)


def row(*entries: int) -> Tableau:
    return (tuple(entries),)


def tableau_shape(t: Tableau) -> tuple[int, int]:
    return len(t), len(t[0]) if t else 0


def columns_of(t: Tableau) -> list[tuple[int, ...]]:
    r, s = tableau_shape(t)
    return [tuple(t[i][j] for i in range(r)) for j in range(s)]


def from_columns(cols: Sequence[Sequence[int]]) -> Tableau:
    if not cols:
        return ()
    return tuple(tuple(c[i] for c in cols) for i in range(len(cols[0])))


def is_column_strict(t: Tableau) -> bool:
    r, s = tableau_shape(t)
    rows_ok = all(t[i][j] <= t[i][j + 1] for i in range(r) for j in range(s - 1))
    cols_ok = all(t[i][j] < t[i + 1][j] for i in range(r - 1) for j in range(s))
    return rows_ok and cols_ok


def tableau_row_word(t: Tableau) -> tuple[int, ...]:
    return tuple(x for rw in reversed(t) for x in rw)


@lru_cache(maxsize=None)
def kr_tableaux(r: int, s: int, n: int) -> tuple[Tableau, ...]:
    """All column-strict ``r x s`` rectangles over ``{1..n}``, in lexicographic column order."""
    cols = list(combinations(range(1, n + 1), r))
    out: list[Tableau] = []

    def extend(prefix: list):
        if len(prefix) == s:
            out.append(from_columns(prefix))
            return
        for c in cols:
            if not prefix or all(prefix[-1][i] <= c[i] for i in range(r)):
                prefix.append(c)
                extend(prefix)
                prefix.pop()

    extend([])
    return tuple(out)


@dataclass(frozen=True)
class Path:
    n: int
    factors: tuple[Tableau, ...]

    @property
    def shape(self) -> TensorShape:
        return TensorShape(self.n, tuple(tableau_shape(t) for t in self.factors))

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        return " (x) ".join("/".join("".join(map(str, rw)) for rw in t) for t in self.factors) or "()"


def make_path(n: int, *factors: Sequence[Sequence[int]]) -> Path:
    return Path(n, tuple(tuple(tuple(rw) for rw in f) for f in factors))


def row_word(b: Path) -> tuple[int, ...]:
    return tuple(x for t in b.factors for x in tableau_row_word(t))


def _cell_map(b: Path) -> list[tuple[int, int, int]]:
    """``(factor, row, col)`` for each position of the row word."""
    out = []
    for f, t in enumerate(b.factors):
        for i in range(len(t) - 1, -1, -1):
            for j in range(len(t[i])):
                out.append((f, i, j))
    return out


def _replace(b: Path, pos: int, letter: int) -> Path:
    f, i, j = _cell_map(b)[pos]
    t = [list(rw) for rw in b.factors[f]]
    t[i][j] = letter
    factors = list(b.factors)
    factors[f] = tuple(tuple(rw) for rw in t)
    return Path(b.n, tuple(factors))


def _unbracketed(word: Sequence[int], i: int) -> tuple[list[int], list[int]]:
    """Positions of the unbracketed ``i`` and ``i+1`` letters after pairing ``i+1 ... i``."""
    open_plus: list[int] = []
    free_i: list[int] = []
    for pos, x in enumerate(word):
        if x == i + 1:
            open_plus.append(pos)
        elif x == i:
            if open_plus:
                open_plus.pop()
            else:
                free_i.append(pos)
    return free_i, open_plus


def classical_e(b: Path, i: int) -> Path | None:
    if not 1 <= i < b.n:
        raise ValueError(f"classical index {i} outside 1..{b.n - 1}")
    _, plus = _unbracketed(row_word(b), i)
    if not plus:
        return None
    return _replace(b, plus[0], i)


def classical_f(b: Path, i: int) -> Path | None:
    if not 1 <= i < b.n:
        raise ValueError(f"classical index {i} outside 1..{b.n - 1}")
    free_i, _ = _unbracketed(row_word(b), i)
    if not free_i:
        return None
    return _replace(b, free_i[-1], i + 1)


def epsilon(b: Path, i: int) -> int:
    return len(_unbracketed(row_word(b), i)[1])


def phi_i(b: Path, i: int) -> int:
    return len(_unbracketed(row_word(b), i)[0])


def weight(b: Path) -> Weight:
    w = [0] * b.n
    for x in row_word(b):
        w[x - 1] += 1
    return tuple(w)


def is_lattice_reversed(word: Sequence[int], n: int) -> bool:
    counts = [0] * (n + 2)
    for x in reversed(word):
        counts[x] += 1
        if x > 1 and counts[x] > counts[x - 1]:
            return False
    return True


def is_classically_highest(b: Path) -> bool:
    # e_i(b) = 0 for all i exactly when the row word read backwards is a lattice word
    return is_lattice_reversed(row_word(b), b.n)


def raise_to_highest(b: Path) -> tuple[Path, list[int]]:
    """Apply ``e_1, ..., e_{n-1}`` sweeps until none applies; returns the raising word in order applied."""
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(1, b.n):
            nb = classical_e(b, i)
            while nb is not None:
                b = nb
                word.append(i)
                changed = True
                nb = classical_e(b, i)
    return b, word


def enumerate_crystal(shape: TensorShape) -> Iterator[Path]:
    """Odometer over the factors with the rightmost factor fastest."""
    pools = [kr_tableaux(r, s, shape.n) for r, s in shape.factors]
    if not pools:
        yield Path(shape.n, ())
        return
    idx = [0] * len(pools)
    while True:
        yield Path(shape.n, tuple(p[k] for p, k in zip(pools, idx)))
        pos = len(pools) - 1
        while pos >= 0:
            idx[pos] += 1
            if idx[pos] < len(pools[pos]):
                break
            idx[pos] = 0
            pos -= 1
        if pos < 0:
            return


def _pruned_paths(shape: TensorShape, lam: Weight, highest: bool) -> list[Path]:
    """Depth-first fill from the rightmost factor with weight (and lattice) pruning.

    The output order matches :func:`enumerate_crystal` filtered.
    """
    n = shape.n
    pools = [kr_tableaux(r, s, n) for r, s in shape.factors]
    k = len(pools)
    found: list[tuple[tuple[int, ...], Path]] = []
    chosen: list[int] = [0] * k

    def rec(pos: int, counts: list[int]):
        if pos < 0:
            if list(counts[1 : n + 1]) == list(lam):
                found.append((tuple(chosen), Path(n, tuple(pools[f][chosen[f]] for f in range(k)))))
            return
        for idx, t in enumerate(pools[pos]):
            new = counts[:]
            ok = True
            for x in reversed(tableau_row_word(t)):
                new[x] += 1
                if new[x] > lam[x - 1] or (highest and x > 1 and new[x] > new[x - 1]):
                    ok = False
                    break
            if ok:
                chosen[pos] = idx
                rec(pos - 1, new)

    if sum(lam) == shape.boxes:
        rec(k - 1, [0] * (n + 2))
    found.sort(key=lambda kv: kv[0])
    return [p for _, p in found]


def enumerate_paths(shape: TensorShape, lam: Sequence[int], kind: str = "classical", level: int | None = None) -> list[Path]:
    """Paths of weight ``lam``: ``unrestricted``, ``classical`` (highest weight) or ``level`` restricted."""
    lam = pad(lam, shape.n)
    if kind == "unrestricted":
        return _pruned_paths(shape, lam, highest=False)
    if kind == "classical":
        if not is_partition(lam):
            raise ShapeError(f"classically restricted paths need a partition weight, got {lam}")
        return _pruned_paths(shape, lam, highest=True)
    if kind == "level":
        if level is None or not is_level_restricted_weight(lam, level):
            raise ShapeError(f"lambda={lam} is not a level-{level} restricted partition")
        return [b for b in _pruned_paths(shape, lam, highest=True) if is_level_path(b, level)]
    raise ValueError(f"unknown path kind {kind!r}")


def highest_weight_paths(shape: TensorShape) -> Iterator[Path]:
    """All classically highest elements of ``B``, grouped by weight (dominant weights in reverse lex)."""
    from .shapes import dominant_weights

    for lam in dominant_weights(shape.boxes, shape.n):
        yield from _pruned_paths(shape, lam, highest=True)


# ---------------------------------------------------------------------------
# promotion and affine operators


def promotion(t: Tableau, n: int) -> Tableau:
    """Remove the letters ``n``, slide the holes to the top-left by jeu de taquin, add one, fill with 1s."""
    r, s = tableau_shape(t)
    if r == 0:
        return t
    g: list[list[int | None]] = [list(rw) for rw in t]
    holes = [j for j in range(s) if g[r - 1][j] == n]  # every n sits in the bottom row
    for j in holes:
        g[r - 1][j] = None
    for j0 in holes:
        i, j = r - 1, j0
        while True:
            up = g[i - 1][j] if i > 0 else None
            left = g[i][j - 1] if j > 0 else None
            if up is None and left is None:
                break
            if left is not None and (up is None or left > up):
                g[i][j], g[i][j - 1] = left, None
                j -= 1
            else:
                g[i][j], g[i - 1][j] = up, None
                i -= 1
    return tuple(tuple(1 if x is None else x + 1 for x in rw) for rw in g)


def inverse_promotion(t: Tableau, n: int) -> Tableau:
    """Exact inverse of :func:`promotion`: remove 1s, slide holes to the bottom-right, subtract one, fill with ``n``."""
    r, s = tableau_shape(t)
    if r == 0:
        return t
    g: list[list[int | None]] = [list(rw) for rw in t]
    holes = [j for j in range(s) if g[0][j] == 1]  # every 1 sits in the top row
    for j in holes:
        g[0][j] = None
    for j0 in reversed(holes):
        i, j = 0, j0
        while True:
            down = g[i + 1][j] if i + 1 < r else None
            right = g[i][j + 1] if j + 1 < s else None
            if down is None and right is None:
                break
            if right is not None and (down is None or right < down):
                g[i][j], g[i][j + 1] = right, None
                j += 1
            else:
                g[i][j], g[i + 1][j] = down, None
                i += 1
    return tuple(tuple(n if x is None else x - 1 for x in rw) for rw in g)


def promote_path(b: Path) -> Path:
    return Path(b.n, tuple(promotion(t, b.n) for t in b.factors))


def inverse_promote_path(b: Path) -> Path:
    return Path(b.n, tuple(inverse_promotion(t, b.n) for t in b.factors))


def affine_e0(b: Path) -> Path | None:
    x = classical_e(promote_path(b), 1)
    return None if x is None else inverse_promote_path(x)


def affine_f0(b: Path) -> Path | None:
    x = classical_f(promote_path(b), 1)
    return None if x is None else inverse_promote_path(x)


def crystal_e(b: Path, i: int) -> Path | None:
    """``e_i`` for ``0 <= i < n``."""
    return affine_e0(b) if i == 0 else classical_e(b, i)


def crystal_f(b: Path, i: int) -> Path | None:
    return affine_f0(b) if i == 0 else classical_f(b, i)


def is_level_path(b: Path, level: int) -> bool:
    """True when ``e_0^{level+1}(b)`` is undefined."""
    x: Path | None = b
    for _ in range(level + 1):
        x = affine_e0(x)
        if x is None:
            return True
    return False


# ---------------------------------------------------------------------------
# dualities


def star_dual(b: Path) -> Path:
    n = b.n
    return Path(n, tuple(
        tuple(tuple(n + 1 - x for x in reversed(rw)) for rw in reversed(t)) for t in reversed(b.factors)
    ))


def evacuation(b: Path) -> Path:
    return raise_to_highest(star_dual(b))[0]


def contragredient_tableau(t: Tableau, n: int) -> Tableau:
    cols = []
    for c in columns_of(t):
        comp = [d for d in range(1, n + 1) if d not in c]
        cols.append(tuple(n + 1 - d for d in reversed(comp)))
    return from_columns(cols)


def contragredient(b: Path) -> Path:
    return Path(b.n, tuple(contragredient_tableau(t, b.n) for t in b.factors))


def transpose_path(b: Path, n: int | None = None) -> Path:
    """Transpose each factor across its anti-diagonal and relabel by occurrence counts.

    The occurrence of letter ``a`` in a cell becomes ``k`` when it is the
    ``k``-th letter ``a`` of the row word counted from the right.
    """
    word = row_word(b)
    cmap = _cell_map(b)
    seen: dict[int, int] = {}
    relabel: dict[tuple[int, int, int], int] = {}
    for pos in range(len(word) - 1, -1, -1):
        a = word[pos]
        seen[a] = seen.get(a, 0) + 1
        relabel[cmap[pos]] = seen[a]
    shape_t = b.shape.transpose(n)
    need = max([x for x in relabel.values()] + [1])
    if need > shape_t.n:
        raise ShapeError(f"transposed path needs rank n >= {need}, got {shape_t.n}")
    factors = []
    for f, t in enumerate(b.factors):
        r, s = tableau_shape(t)
        factors.append(tuple(
            tuple(relabel[(f, r - 1 - j, s - 1 - i)] for j in range(r)) for i in range(s)
        ))
    return Path(shape_t.n, tuple(factors))
