"""Partitions, weights, tensor shapes, multiplicity arrays and bound tableaux."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Weight = tuple[int, ...]


class ShapeError(ValueError):
    """Raised when an instance violates a precondition (weight sums, ranks, levels)."""


def transpose(p: Sequence[int]) -> Partition:
    parts = [x for x in p if x > 0]
    if not parts:
        return ()
    return tuple(sum(1 for x in parts if x > j) for j in range(parts[0]))


def is_partition(w: Sequence[int]) -> bool:
    return all(w[k] >= w[k + 1] for k in range(len(w) - 1)) and all(x >= 0 for x in w)


def partitions(total: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of ``total`` in reverse lexicographic order."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        rest_len = None if max_len is None else max_len - 1
        for rest in partitions(total - first, first, rest_len):
            yield (first,) + rest


def weights_of_size(total: int, n: int) -> Iterator[Weight]:
    """All compositions of ``total`` into ``n`` nonnegative parts."""
    if n == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in weights_of_size(total - first, n - 1):
            yield (first,) + rest


def dominant_weights(total: int, n: int) -> Iterator[Weight]:
    """Partitions of ``total`` padded to length ``n``."""
    for p in partitions(total, max_len=n):
        yield p + (0,) * (n - len(p))


def pad(w: Sequence[int], n: int) -> Weight:
    if len(w) > n:
        if any(w[n:]):
            raise ShapeError(f"weight {tuple(w)} has more than n={n} nonzero entries")
        return tuple(w[:n])
    return tuple(w) + (0,) * (n - len(w))


@dataclass(frozen=True)
class TensorShape:
    """``B^{r_k,s_k} (x) ... (x) B^{r_1,s_1}`` stored left to right."""

    n: int
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((int(r), int(s)) for r, s in self.factors))
        for r, s in self.factors:
            if not (1 <= r <= self.n - 1) or s < 1:
                raise ShapeError(f"B^{{{r},{s}}} is not a KR crystal of type A_{self.n - 1}^(1)")

    @property
    def boxes(self) -> int:
        return sum(r * s for r, s in self.factors)

    def __len__(self):
        return len(self.factors)

    def transpose(self, n: int | None = None) -> TensorShape:
        factors = tuple((s, r) for r, s in self.factors)
        if n is None:
            n = max([s + 1 for s, _ in factors] + [2])
        return TensorShape(n, factors)

    def contragredient(self) -> TensorShape:
        return TensorShape(self.n, tuple((self.n - r, s) for r, s in self.factors))

    def reversed(self) -> TensorShape:
        return TensorShape(self.n, self.factors[::-1])

    def __str__(self):
        return ",".join(f"{r}x{s}" for r, s in self.factors)


def parse_tensor(text: str, n: int) -> TensorShape:
    """Parse the CLI grammar ``"2x2,2x1"`` meaning ``B^{2,2} (x) B^{2,1}``."""
    text = text.strip()
    if not text:
        return TensorShape(n, ())
    factors = []
    for token in text.split(","):
        r, _, s = token.strip().partition("x")
        if not r or not s:
            raise ValueError(f"bad tensor factor {token!r}; expected RxS")
        factors.append((int(r), int(s)))
    return TensorShape(n, tuple(factors))


def parse_weight(text: str, n: int) -> Weight:
    text = text.strip()
    w = tuple(int(x) for x in text.split(",")) if text else ()
    if any(x < 0 for x in w):
        raise ShapeError(f"weight entries must be nonnegative, got {w}")
    return pad(w, n)


@dataclass(frozen=True)
class MultiplicityArray:
    """Counts ``L_i^{(a)}`` of factors ``B^{a,i}``; ``counts`` is a sorted tuple of ``((a, i), L)``."""

    n: int
    counts: tuple[tuple[tuple[int, int], int], ...] = ()

    def __post_init__(self):
        merged: dict[tuple[int, int], int] = {}
        for (a, i), c in self.counts:
            merged[(a, i)] = merged.get((a, i), 0) + c
        for (a, i), c in merged.items():
            if c < 0 or not (1 <= a <= self.n - 1) or i < 1:
                raise ShapeError(f"invalid multiplicity L_{i}^({a}) = {c} for n={self.n}")
        object.__setattr__(self, "counts", tuple(sorted((k, c) for k, c in merged.items() if c)))

    @classmethod
    def from_dict(cls, n: int, d: dict) -> MultiplicityArray:
        return cls(n, tuple(d.items()))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.counts)

    def get(self, a: int, i: int) -> int:
        return self.as_dict().get((a, i), 0)

    def is_empty(self) -> bool:
        return not self.counts

    def total_boxes(self) -> int:
        return sum(a * i * c for (a, i), c in self.counts)

    def max_length(self) -> int:
        return max((i for (a, i), _ in self.counts), default=0)

    def add(self, a: int, i: int, c: int = 1) -> MultiplicityArray:
        return MultiplicityArray(self.n, self.counts + (((a, i), c),))

    def factors(self) -> tuple[tuple[int, int], ...]:
        """One canonical tensor ordering, largest rectangles first."""
        out = []
        for (a, i), c in sorted(self.counts, key=lambda kc: (-kc[0][0] * kc[0][1], -kc[0][0])):
            out.extend([(a, i)] * c)
        return tuple(out)

    def to_shape(self) -> TensorShape:
        return TensorShape(self.n, self.factors())

    def reversed(self) -> MultiplicityArray:
        """``a -> n - a``, the multiplicity array of the contragredient."""
        return MultiplicityArray(self.n, tuple(((self.n - a, i), c) for (a, i), c in self.counts))


def multiplicity_of(shape: TensorShape) -> MultiplicityArray:
    d: dict[tuple[int, int], int] = {}
    for r, s in shape.factors:
        d[(r, s)] = d.get((r, s), 0) + 1
    return MultiplicityArray.from_dict(shape.n, d)


def configuration_sizes(L: MultiplicityArray, lam: Sequence[int]) -> tuple[int, ...]:
    """Required ``|nu^{(k)}|`` for ``k = 1..n-1``; a negative entry means no configuration exists."""
    n = L.n
    lam = pad(lam, n)
    if sum(lam) != L.total_boxes():
        raise ShapeError(f"|lambda| = {sum(lam)} but the tensor product has {L.total_boxes()} boxes")
    sizes = []
    for k in range(1, n):
        tail = sum(lam[k:])
        sizes.append(tail - sum(c * i * max(a - k, 0) for (a, i), c in L.counts))
    return tuple(sizes)


@dataclass(frozen=True)
class BoundTableau:
    """Filling of ``lambda'`` stored by columns; ``columns[k-1][j-1]`` is ``t_{j,k}``."""

    kind: str  # "lower" for A(lambda'), "level" for CST(lambda')
    columns: tuple[tuple[int, ...], ...]

    def entry(self, j: int, k: int) -> int:
        return self.columns[k - 1][j - 1]

    def column(self, k: int) -> tuple[int, ...]:
        """Column ``k`` (1-based); empty beyond the last column."""
        return self.columns[k - 1] if 1 <= k <= len(self.columns) else ()

    def rows(self) -> tuple[tuple[int, ...], ...]:
        height = max((len(c) for c in self.columns), default=0)
        return tuple(
            tuple(c[j] for c in self.columns if len(c) > j) for j in range(height)
        )


def column_heights_lower(lam: Sequence[int]) -> tuple[int, ...]:
    """``c_k = lambda_{k+1} + ... + lambda_n`` for ``k = 1..n-1``."""
    n = len(lam)
    return tuple(sum(lam[k:]) for k in range(1, n))


@lru_cache(maxsize=None)
def _lower_bound_tableaux(lam: Weight) -> tuple[BoundTableau, ...]:
    c = column_heights_lower(lam)
    if not c or c[0] == 0:
        return (BoundTableau("lower", ()),)
    cols = [k for k in range(len(c)) if c[k] > 0]
    choices = []
    for k in cols:
        alphabet = c[k - 1] if k > 0 else c[0]
        choices.append([tuple(sorted(comb, reverse=True)) for comb in combinations(range(1, alphabet + 1), c[k])])
    return tuple(BoundTableau("lower", tuple(pick)) for pick in product(*choices))


def enumerate_lower_bound_tableaux(lam: Sequence[int]) -> tuple[BoundTableau, ...]:
    """All of ``A(lambda')``: columns strictly decreasing, column ``k`` drawn from ``{1..c_{k-1}}``."""
    return _lower_bound_tableaux(tuple(lam))


def is_level_restricted_weight(lam: Sequence[int], level: int) -> bool:
    return is_partition(lam) and (lam[0] - lam[-1] <= level if lam else True)


def _column_strict(shape_cols: Sequence[int], alphabet: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Column-strict tableaux of the given column heights, filled column by column."""
    k_max = len(shape_cols)

    def fill(k: int, prev: tuple[int, ...], acc: list):
        if k == k_max:
            yield tuple(acc)
            return
        h = shape_cols[k]
        for comb in combinations(range(1, alphabet + 1), h):
            # rows weakly increase left to right
            if all(comb[j] >= prev[j] for j in range(h)) if k else True:
                acc.append(comb)
                yield from fill(k + 1, comb, acc)
                acc.pop()

    yield from fill(0, (), [])


@lru_cache(maxsize=None)
def _level_cst(lam: Weight) -> tuple[BoundTableau, ...]:
    alphabet = lam[0] - lam[-1]
    heights = tuple(x - lam[-1] for x in lam[:-1])
    heights = tuple(h for h in heights if h > 0)
    return tuple(BoundTableau("level", cols) for cols in _column_strict(heights, alphabet))


def enumerate_level_cst(lam: Sequence[int], level: int) -> tuple[BoundTableau, ...]:
    """All of ``CST(lambda')`` with ``lambda' = (lambda_1-lambda_n, ..., lambda_{n-1}-lambda_n)^t``."""
    lam = tuple(lam)
    if not is_level_restricted_weight(lam, level):
        raise ShapeError(f"lambda={lam} is not a level-{level} restricted partition")
    return _level_cst(lam)


def shapes_up_to(n: int, max_boxes: int, min_boxes: int = 0) -> Iterator[TensorShape]:
    """Every ordered tensor shape of type ``A_{n-1}^(1)`` with box count in range."""
    rects = [(r, s) for r in range(1, n) for s in range(1, max_boxes + 1) if r * s <= max_boxes]

    def grow(prefix: tuple, boxes: int):
        if boxes >= min_boxes:
            yield TensorShape(n, prefix)
        for r, s in rects:
            if boxes + r * s <= max_boxes:
                yield from grow(prefix + ((r, s),), boxes + r * s)

    yield from grow((), 0)


def multiplicity_arrays_up_to(n: int, max_boxes: int) -> Iterator[MultiplicityArray]:
    """Each multiset of rectangles once (tensor order ignored)."""
    rects = [(r, s) for r in range(1, n) for s in range(1, max_boxes + 1) if r * s <= max_boxes]

    def grow(start: int, acc: tuple, boxes: int):
        yield MultiplicityArray(n, tuple((rs, 1) for rs in acc))
        for k in range(start, len(rects)):
            r, s = rects[k]
            if boxes + r * s <= max_boxes:
                yield from grow(k, acc + ((r, s),), boxes + r * s)

    yield from grow(0, (), 0)


def cells(p: Iterable[int]) -> set[tuple[int, int]]:
    """Ferrers diagram cells ``(row, col)``, 1-based."""
    return {(i + 1, j + 1) for i, x in enumerate(p) for j in range(x)}
