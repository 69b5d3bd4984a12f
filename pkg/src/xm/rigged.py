"""Rigged configurations of type ``A_{n-1}``.

A rigged configuration stores, for each index ``a = 1..n-1``, a tuple of
strings ``(length, label)`` kept in canonical order (longest first, larger
label first among equal lengths).  Vacancy numbers are always recomputed
from the strings and the multiplicity array ``L``; they are never stored,
because the splitting maps change ``L`` and with it every vacancy number.

Internally most algorithms work on a plain list of string lists, which may
carry an extra index ``n`` (promotion needs it).  ``L`` contributes nothing
there.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .qlaurent import QLaurent
from .shapes import (
    BoundTableau,
    MultiplicityArray,
    ShapeError,
    Weight,
    configuration_sizes,
    enumerate_level_cst,
    enumerate_lower_bound_tableaux,
    is_level_restricted_weight,
    pad,
    partitions,
    transpose,
)

String = tuple[int, int]
Strings = list[list[String]]


class RiggedError(ValueError):
    """A required string is missing or the input is not a valid rigged configuration."""


def canonical(strings: Sequence[String]) -> tuple[String, ...]:
    return tuple(sorted((tuple(s) for s in strings), key=lambda s: (-s[0], -s[1])))


@dataclass(frozen=True)
class RiggedConfiguration:
    L: MultiplicityArray
    strings: tuple[tuple[String, ...], ...]

    def __post_init__(self):
        n = self.L.n
        parts = tuple(canonical(s) for s in self.strings)
        if len(parts) > max(n - 1, 0):
            raise RiggedError(f"{len(parts)} rigged partitions for n={n}")
        parts = parts + ((),) * (max(n - 1, 0) - len(parts))
        for a, s in enumerate(parts, 1):
            if any(length < 1 for length, _ in s):
                raise RiggedError(f"nonpositive string length at index {a}")
        object.__setattr__(self, "strings", parts)

    @property
    def n(self) -> int:
        return self.L.n

    def partition(self, a: int) -> tuple[int, ...]:
        return tuple(length for length, _ in self.strings[a - 1])

    def labels(self, a: int, i: int) -> list[int]:
        """The multiset ``J^{(a,i)}`` in decreasing order."""
        return [x for length, x in self.strings[a - 1] if length == i]

    def multiplicity(self, a: int, i: int) -> int:
        return sum(1 for length, _ in self.strings[a - 1] if length == i)

    def lengths(self, a: int) -> list[int]:
        return sorted({length for length, _ in self.strings[a - 1]})

    def boxes(self) -> tuple[int, ...]:
        return tuple(sum(p) for p in (self.partition(a) for a in range(1, self.n)))

    def is_empty(self) -> bool:
        return not any(self.strings)

    def with_L(self, L: MultiplicityArray) -> RiggedConfiguration:
        return RiggedConfiguration(L, self.strings)

    def __str__(self):
        blocks = []
        for s in self.strings:
            blocks.append(" ".join(f"{i}[{x}]" for i, x in s) if s else "-")
        return " | ".join(blocks) if blocks else "()"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "L": [{"a": a, "i": i, "count": c} for (a, i), c in self.L.counts],
            "nu": [[{"len": i, "rig": x} for i, x in s] for s in self.strings],
        }

    @classmethod
    def from_json(cls, data: dict) -> RiggedConfiguration:
        n = int(data["n"])
        L = MultiplicityArray(n, tuple(((int(e["a"]), int(e["i"])), int(e["count"])) for e in data.get("L", [])))
        nu = tuple(tuple((int(s["len"]), int(s["rig"])) for s in part) for part in data.get("nu", []))
        return cls(L, nu)


def make_rc(L: MultiplicityArray, *parts: Sequence[String]) -> RiggedConfiguration:
    return RiggedConfiguration(L, tuple(tuple(tuple(s) for s in p) for p in parts))


def empty_rc(L: MultiplicityArray) -> RiggedConfiguration:
    return RiggedConfiguration(L, ())


# ---------------------------------------------------------------------------
# vacancy numbers and statistics


def _q(parts: Sequence[int], i: int) -> int:
    return sum(min(i, x) for x in parts)


def _l_term(L: MultiplicityArray, a: int, i: int) -> int:
    return sum(min(i, j) * c for (b, j), c in L.counts if b == a)


def vacancy_from_parts(L: MultiplicityArray, parts: Sequence[Sequence[int]], a: int, i: int) -> int:
    """``p_i^{(a)}`` for a configuration given as a list of partitions (index ``a`` is 1-based)."""
    k = len(parts)
    own = _q(parts[a - 1], i)
    left = _q(parts[a - 2], i) if a >= 2 else 0
    right = _q(parts[a], i) if a < k else 0
    return _l_term(L, a, i) - 2 * own + left + right


def _parts_of(strings: Sequence[Sequence[String]]) -> list[list[int]]:
    return [[length for length, _ in s] for s in strings]


def vacancy(rc: RiggedConfiguration, a: int, i: int) -> int:
    if not 1 <= a <= rc.n - 1 or i < 1:
        raise RiggedError(f"vacancy index out of range: a={a}, i={i}")
    return vacancy_from_parts(rc.L, _parts_of(rc.strings), a, i)


def vacancy_table(L: MultiplicityArray, strings: Sequence[Sequence[String]]) -> list[dict[int, int]]:
    """Vacancy numbers at every string length that occurs, per index."""
    parts = _parts_of(strings)
    return [{i: vacancy_from_parts(L, parts, a, i) for i in set(parts[a - 1])} for a in range(1, len(parts) + 1)]


def config_cocharge(parts: Sequence[Sequence[int]]) -> int:
    """``cc(nu)``: the Cartan quadratic form on ``min`` pairings."""
    total = 0
    for a in range(len(parts)):
        total += sum(min(x, y) for x in parts[a] for y in parts[a])
        if a + 1 < len(parts):
            total -= sum(min(x, y) for x in parts[a] for y in parts[a + 1])
    return total


def cocharge(rc: RiggedConfiguration) -> int:
    return config_cocharge(_parts_of(rc.strings)) + sum(x for s in rc.strings for _, x in s)


def rc_weight(rc: RiggedConfiguration) -> Weight:
    """``sum_i i (L_i^{(a)} Lambda_a - m_i^{(a)} alpha_a)`` in epsilon coordinates."""
    n = rc.n
    w = [0] * n
    for (a, i), c in rc.L.counts:
        for k in range(a):
            w[k] += i * c
    for a, size in enumerate(rc.boxes(), 1):
        w[a - 1] -= size
        w[a] += size
    return tuple(w)


def is_valid(rc: RiggedConfiguration) -> bool:
    """Every label is at most the vacancy number of its length."""
    table = vacancy_table(rc.L, rc.strings)
    return all(x <= table[a][i] for a, s in enumerate(rc.strings) for i, x in s)


def is_admissible(rc: RiggedConfiguration) -> bool:
    """Highest-weight condition: ``0 <= label <= p`` (hence ``p >= 0``) for every string."""
    table = vacancy_table(rc.L, rc.strings)
    return all(0 <= x <= table[a][i] for a, s in enumerate(rc.strings) for i, x in s)


def is_singular(rc: RiggedConfiguration, a: int, string: String) -> bool:
    return string[1] == vacancy(rc, a, string[0])


# ---------------------------------------------------------------------------
# configurations and enumeration


def configurations(L: MultiplicityArray, lam: Sequence[int], max_part: int | None = None) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every ``nu`` in ``C(L, lambda)``: sequences of partitions with the prescribed sizes."""
    try:
        sizes = configuration_sizes(L, lam)
    except ShapeError:
        return
    if any(s < 0 for s in sizes):
        return
    pools = [list(partitions(s, max_part)) for s in sizes]
    for nu in product(*pools):
        yield tuple(nu)


def is_admissible_config(L: MultiplicityArray, nu: Sequence[Sequence[int]]) -> bool:
    return all(vacancy_from_parts(L, nu, a, i) >= 0 for a in range(1, len(nu) + 1) for i in set(nu[a - 1]))


def admissible_configurations(L: MultiplicityArray, lam: Sequence[int], max_part: int | None = None):
    for nu in configurations(L, lam, max_part):
        if is_admissible_config(L, nu):
            yield nu


def _box_fillings(m: int, lo: int, hi: int) -> list[tuple[int, ...]]:
    """Weakly decreasing ``m``-tuples with entries in ``[lo, hi]``."""
    if m == 0:
        return [()]
    if hi < lo:
        return []
    out = []

    def rec(prefix: list[int], top: int):
        if len(prefix) == m:
            out.append(tuple(prefix))
            return
        for x in range(top, lo - 1, -1):
            prefix.append(x)
            rec(prefix, x)
            prefix.pop()

    rec([], hi)
    return out


def _riggings(L: MultiplicityArray, nu, lower) -> Iterator[RiggedConfiguration]:
    """All riggings of ``nu`` with labels in ``[lower(a, i), p_i^{(a)}]``."""
    slots = []
    for a, part in enumerate(nu, 1):
        for i in sorted(set(part), reverse=True):
            m = part.count(i)
            p = vacancy_from_parts(L, nu, a, i)
            slots.append((a, i, _box_fillings(m, lower(a, i), p)))
    for choice in product(*(s[2] for s in slots)):
        strings: list[list[String]] = [[] for _ in nu]
        for (a, i, _), labels in zip(slots, choice):
            strings[a - 1].extend((i, x) for x in labels)
        yield RiggedConfiguration(L, tuple(tuple(s) for s in strings))


def enumerate_admissible(L: MultiplicityArray, lam: Sequence[int]) -> Iterator[RiggedConfiguration]:
    """``RC-bar(L, lambda)``: admissible configurations with riggings in ``[0, p]``."""
    for nu in admissible_configurations(L, lam):
        yield from _riggings(L, nu, lambda a, i: 0)


# ---------------------------------------------------------------------------
# lower bounds for unrestricted riggings


def lower_bound(t: BoundTableau, a: int, i: int) -> int:
    """``M_i^{(a)}(t)``: minus the entries ``<= i`` in column ``a``, plus those in column ``a+1``."""
    return -sum(1 for x in t.column(a) if i >= x) + sum(1 for x in t.column(a + 1) if i >= x)


def is_unrestricted_member(rc: RiggedConfiguration, lam: Sequence[int]) -> bool:
    """Labels sit between the vacancy number and the lower bounds of some ``t`` in ``A(lambda')``."""
    lam = pad(lam, rc.n)
    if rc_weight(rc) != lam or not is_valid(rc):
        return False
    mins = {}
    for a in range(1, rc.n):
        for i, x in rc.strings[a - 1]:
            mins[(a, i)] = min(x, mins.get((a, i), x))
    for t in enumerate_lower_bound_tableaux(lam):
        if all(x >= lower_bound(t, a, i) for (a, i), x in mins.items()):
            return True
    return False


def enumerate_unrestricted(L: MultiplicityArray, lam: Sequence[int]) -> Iterator[RiggedConfiguration]:
    """``RC(L, lambda)`` through the lower-bound characterization (each element once)."""
    lam = pad(lam, L.n)
    tabs = enumerate_lower_bound_tableaux(lam)
    for nu in configurations(L, lam):
        seen = set()
        for t in tabs:
            for rc in _riggings(L, nu, lambda a, i, t=t: lower_bound(t, a, i)):
                if rc not in seen:
                    seen.add(rc)
                    yield rc


# ---------------------------------------------------------------------------
# level restriction


def _check_level(L: MultiplicityArray, lam: Weight, level: int):
    if not is_level_restricted_weight(lam, level):
        raise ShapeError(f"lambda={lam} is not a level-{level} restricted partition")
    if L.max_length() > level:
        raise ShapeError(f"multiplicity array has a factor of width {L.max_length()} > level {level}")


def vacancy_shift(lam: Weight, level: int, t: BoundTableau, k: int, i: int) -> int:
    """``p_i^{(k)}(t) - p_i^{(k)}``; independent of the configuration."""
    shifted = level - (lam[0] - lam[-1])
    return -sum(1 for x in t.column(k) if i >= shifted + x) + sum(1 for x in t.column(k + 1) if i >= shifted + x)


def modified_vacancy(rc: RiggedConfiguration, lam: Sequence[int], level: int, t: BoundTableau, k: int, i: int) -> int:
    lam = pad(lam, rc.n)
    _check_level(rc.L, lam, level)
    return vacancy(rc, k, i) + vacancy_shift(lam, level, t, k, i)


def is_level_restricted(rc: RiggedConfiguration, lam: Sequence[int], level: int) -> bool:
    lam = pad(lam, rc.n)
    _check_level(rc.L, lam, level)
    if rc_weight(rc) != lam or not is_admissible(rc):
        return False
    if any(length > level for s in rc.strings for length, _ in s):
        return False
    largest = {}
    for a in range(1, rc.n):
        for i, x in rc.strings[a - 1]:
            largest[(a, i)] = max(x, largest.get((a, i), x))
    parts = _parts_of(rc.strings)
    for t in enumerate_level_cst(lam, level):
        if all(
            largest.get((k, i), 0) <= vacancy_from_parts(rc.L, parts, k, i) + vacancy_shift(lam, level, t, k, i)
            for k in range(1, rc.n)
            for i in range(1, level + 1)
        ):
            return True
    return False


def enumerate_level_restricted(L: MultiplicityArray, lam: Sequence[int], level: int) -> Iterator[RiggedConfiguration]:
    lam = pad(lam, L.n)
    _check_level(L, lam, level)
    for nu in admissible_configurations(L, lam, max_part=level):
        for rc in _riggings(L, nu, lambda a, i: 0):
            if is_level_restricted(rc, lam, level):
                yield rc


# ---------------------------------------------------------------------------
# crystal operators


def _table(L: MultiplicityArray, strings: Strings) -> list[dict[int, int]]:
    return vacancy_table(L, strings)


def _keep_colabels(L: MultiplicityArray, before: Strings, after: Strings, a: int, new: String | None, skip: String | None) -> Strings:
    """Shift labels of untouched strings by the vacancy change, then insert ``new`` at index ``a``."""
    old_p = _table(L, before)
    parts = _parts_of(after) if new is None else None
    probe = [list(s) for s in after]
    if new is not None:
        probe[a - 1].append(new)
    new_parts = _parts_of(probe)
    out: Strings = []
    for b, s in enumerate(after, 1):
        row = []
        for i, x in s:
            row.append((i, x - old_p[b - 1][i] + vacancy_from_parts(L, new_parts, b, i)))
        out.append(row)
    if new is not None:
        out[a - 1].append(new)
    del parts, skip
    return out


def _e_strings(L: MultiplicityArray, strings: Strings, a: int) -> Strings | None:
    s = strings[a - 1]
    neg = [st for st in s if st[1] < 0]
    if not neg:
        return None
    low = min(x for _, x in neg)
    k = min(i for i, x in neg if x == low)
    rest = [list(t) for t in strings]
    rest[a - 1].remove((k, low))
    new = (k - 1, low + 1) if k > 1 else None
    return _keep_colabels(L, strings, rest, a, new, None)


def _f_strings(L: MultiplicityArray, strings: Strings, a: int) -> Strings | None:
    s = strings[a - 1]
    nonpos = [st for st in s if st[1] <= 0]
    rest = [list(t) for t in strings]
    if nonpos:
        low = min(x for _, x in nonpos)
        k = max(i for i, x in nonpos if x == low)
        rest[a - 1].remove((k, low))
        new = (k + 1, low - 1)
    else:
        new = (1, -1)
    out = _keep_colabels(L, strings, rest, a, new, None)
    table = _table(L, out)
    if any(x > table[b][i] for b, row in enumerate(out) for i, x in row):
        return None
    return out


def _pack(L: MultiplicityArray, strings: Strings) -> RiggedConfiguration:
    return RiggedConfiguration(L, tuple(tuple(s) for s in strings))


def _unpack(rc: RiggedConfiguration) -> Strings:
    return [list(s) for s in rc.strings]


def rc_e(rc: RiggedConfiguration, a: int) -> RiggedConfiguration | None:
    """Remove a box from the string with the smallest negative label (shortest on ties)."""
    if not 1 <= a <= rc.n - 1:
        raise RiggedError(f"index {a} out of range for n={rc.n}")
    out = _e_strings(rc.L, _unpack(rc), a)
    return None if out is None else _pack(rc.L, out)


def rc_f(rc: RiggedConfiguration, a: int) -> RiggedConfiguration | None:
    """Add a box to the string with the smallest nonpositive label (longest on ties), or a new ``(1, -1)``."""
    if not 1 <= a <= rc.n - 1:
        raise RiggedError(f"index {a} out of range for n={rc.n}")
    out = _f_strings(rc.L, _unpack(rc), a)
    return None if out is None else _pack(rc.L, out)


def rc_epsilon(rc: RiggedConfiguration, a: int) -> int:
    return max(0, -min((x for _, x in rc.strings[a - 1]), default=0))


def rc_raise_to_highest(rc: RiggedConfiguration) -> tuple[RiggedConfiguration, list[int]]:
    word = []
    changed = True
    while changed:
        changed = False
        for a in range(1, rc.n):
            nxt = rc_e(rc, a)
            while nxt is not None:
                rc = nxt
                word.append(a)
                changed = True
                nxt = rc_e(rc, a)
    return rc, word


# ---------------------------------------------------------------------------
# promotion


def rc_promotion(rc: RiggedConfiguration) -> RiggedConfiguration:
    """Promotion: lower with ``f_n^{lam_n}``, ..., ``f_1^{lam_1}`` on an extended configuration, then ``rho`` ``lam_n`` times."""
    n = rc.n
    lam = rc_weight(rc)
    L = rc.L
    strings = _unpack(rc) + [[]]  # temporary index n
    for a in range(n, 0, -1):
        for _ in range(lam[a - 1]):
            nxt = _f_strings(L, strings, a)
            if nxt is None:
                raise RiggedError(f"f_{a} undefined during promotion of {rc}")
            strings = nxt
    for _ in range(lam[n - 1]):
        strings = _rho(L, strings, n)
    if strings[n - 1]:
        raise RiggedError("index n not emptied by promotion")
    return _pack(L, strings[: n - 1])


def promotion_first_step(rc: RiggedConfiguration) -> list[list[String]]:
    """The extended configuration after the lowering step (exposed for inspection)."""
    lam = rc_weight(rc)
    strings = _unpack(rc) + [[]]
    for a in range(rc.n, 0, -1):
        for _ in range(lam[a - 1]):
            strings = _f_strings(rc.L, strings, a)
            if strings is None:
                raise RiggedError(f"f_{a} undefined during promotion of {rc}")
    return [list(canonical(s)) for s in strings]


def _rho(L: MultiplicityArray, strings: Strings, n: int) -> Strings:
    table = _table(L, strings)
    chosen: dict[int, String] = {}
    bound = 1
    for k in range(n, 0, -1):
        cands = [st for st in strings[k - 1] if st[0] >= bound and st[1] == table[k - 1][st[0]]]
        if not cands:
            raise RiggedError(f"no singular string of length >= {bound} at index {k}")
        pick = min(cands, key=lambda st: st[0])
        chosen[k] = pick
        bound = pick[0]
    out = [list(s) for s in strings]
    marks = {}
    for k, st in chosen.items():
        out[k - 1].remove(st)
        if st[0] > 1:
            marks[k] = st[0] - 1
    parts = _parts_of(out)
    for k, length in marks.items():
        parts[k - 1].append(length)
    for k, length in marks.items():
        out[k - 1].append((length, vacancy_from_parts(L, parts, k, length)))
    return out


# ---------------------------------------------------------------------------
# dualities


def theta(rc: RiggedConfiguration) -> RiggedConfiguration:
    """Complement every label in its vacancy number."""
    table = vacancy_table(rc.L, rc.strings)
    return RiggedConfiguration(
        rc.L, tuple(tuple((i, table[a][i] - x) for i, x in s) for a, s in enumerate(rc.strings))
    )


def reverse_rc(rc: RiggedConfiguration) -> RiggedConfiguration:
    """Read the rigged partitions in reverse order; ``L`` follows ``a -> n - a``."""
    return RiggedConfiguration(rc.L.reversed(), tuple(reversed(rc.strings)))


def _column_lengths(part: Sequence[int]) -> list[int]:
    return list(transpose(sorted(part, reverse=True)))


def transpose_matrix(rc: RiggedConfiguration) -> dict[tuple[int, int], int]:
    """``m_{ai}``: column ``i`` length of ``nu^{(a-1)}`` minus that of ``nu^{(a)}`` (nonzero entries)."""
    cols = [[]] + [_column_lengths(rc.partition(a)) for a in range(1, rc.n)] + [[]]
    out = {}
    for a in range(1, len(cols)):
        for i in range(1, max(len(cols[a - 1]), len(cols[a])) + 1):
            prev = cols[a - 1][i - 1] if i <= len(cols[a - 1]) else 0
            cur = cols[a][i - 1] if i <= len(cols[a]) else 0
            if prev - cur:
                out[(a, i)] = prev - cur
    return out


def transpose_rc(rc: RiggedConfiguration, lam: Sequence[int], n_t: int | None = None) -> RiggedConfiguration:
    """Transpose duality: configuration from the matrix transform, riggings from complemented transposes."""
    n = rc.n
    lam = tuple(x for x in pad(lam, n) if x > 0)
    lam_t = transpose(lam)
    factors = [(r, s) for (r, s), c in rc.L.counts for _ in range(c)]
    need = max([len(lam_t)] + [s + 1 for _, s in factors])
    if n_t is None:
        n_t = need
    if n_t < need:
        raise ShapeError(f"rank n={n_t} too small for the transposed tensor product (need {need})")
    m = transpose_matrix(rc)
    lam_cells = {(i + 1, a + 1) for i, x in enumerate(lam) for a in range(x)}
    width = max([len(lam)] + [r for r, _ in factors] + [n]) + 1
    height = max([n_t] + [s for _, s in factors] + [lam[0] if lam else 0]) + 1

    def mt(a: int, i: int) -> int:
        val = -m.get((i, a), 0) + ((i, a) in lam_cells)
        val -= sum(1 for r, s in factors if i <= r and a <= s)
        return val

    new_parts = []
    for a in range(1, n_t):
        cols = []
        for i in range(1, width + 1):
            cols.append(-sum(mt(b, i) for b in range(1, a + 1)))
        while cols and cols[-1] == 0:
            cols.pop()
        if any(cols[k] < 0 or (k and cols[k] > cols[k - 1]) for k in range(len(cols))):
            raise RiggedError(f"transpose produced invalid column lengths {cols} at index {a}")
        new_parts.append(transpose(cols))
    for a in range(n_t, height + 1):
        if any(-sum(mt(b, i) for b in range(1, a + 1)) for i in range(1, width + 1)):
            raise RiggedError("transpose configuration does not terminate at the requested rank")
    L_t = MultiplicityArray(n_t, tuple(((s, r), c) for (r, s), c in rc.L.counts))
    table = vacancy_table(rc.L, rc.strings)
    strings = []
    for i, part in enumerate(new_parts, 1):
        row = []
        for a in sorted(set(part), reverse=True):
            count = part.count(a)
            if a <= n - 1:
                labels = rc.labels(a, i)
                mult = len(labels)
                p = table[a - 1].get(i) if mult else vacancy(rc, a, i)
                comp = sorted((p - x for x in labels), reverse=True)
                new_labels = list(transpose(comp))
            else:
                new_labels = []
            if len(new_labels) > count:
                raise RiggedError(f"transposed rigging too long at index {i}, length {a}")
            new_labels += [0] * (count - len(new_labels))
            row.extend((a, x) for x in new_labels)
        strings.append(tuple(row))
    return RiggedConfiguration(L_t, tuple(strings))
