"""Exhaustive verification suites behind ``xm verify``.

Every suite walks a family of small instances and returns the number of
checks, the number of failures and the first counterexample.  Instances are
independent, so ``jobs > 1`` fans them out over worker processes; results are
collected in instance order, so reports stay deterministic.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .bijection import BijectionError, delta, delta_inverse, phi, phi_bar, phi_bar_inverse
from .crystal import (
    Path,
    classical_f,
    contragredient,
    enumerate_crystal,
    enumerate_paths,
    evacuation,
    inverse_promote_path,
    promote_path,
    transpose_path,
)
from .energy import apply_r, config_sum, tail_energy
from .fermionic import m_bar, m_level, m_unrestricted
from .qlaurent import QLaurent
from .rigged import (
    RiggedConfiguration,
    cocharge,
    enumerate_admissible,
    enumerate_level_restricted,
    enumerate_unrestricted,
    rc_f,
    rc_promotion,
    reverse_rc,
    theta,
    transpose_rc,
)
from .shapes import (
    MultiplicityArray,
    ShapeError,
    TensorShape,
    dominant_weights,
    is_level_restricted_weight,
    multiplicity_of,
    shapes_up_to,
    transpose,
)

SUITES = ("x-equals-m", "bijection-roundtrip", "statistic", "dualities", "rc-crystal-iso", "promotion", "oracles")


@dataclass
class VerifyConfig:
    max_n: int = 4
    max_boxes: int = 5
    min_n: int = 2
    suites: tuple[str, ...] = SUITES
    shapes: tuple[TensorShape, ...] | None = None  # explicit instances override the grid
    jobs: int = 1
    inject_fault: bool = False  # negative control: corrupt one rigging before the statistic check


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: int = 0
    first: str | None = None
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def merge(self, other: "Outcome"):
        self.checked += other.checked
        self.failures += other.failures
        if self.first is None and other.first is not None:
            self.first = other.first

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.name}: {self.checked} checks, {self.failures} failures"
        if self.first:
            text += f"; first counterexample: {self.first}"
        return text

    def to_json(self) -> dict:
        return {"suite": self.name, "ok": self.ok, "checked": self.checked, "failures": self.failures, "first": self.first}


@dataclass
class Outcome:
    checked: int = 0
    failures: int = 0
    first: str | None = None

    def check(self, cond: bool, witness: Callable[[], str]):
        self.checked += 1
        if not cond:
            self.failures += 1
            if self.first is None:
                self.first = witness()


def instances(config: VerifyConfig) -> list[TensorShape]:
    if config.shapes is not None:
        return list(config.shapes)
    out = []
    for n in range(config.min_n, config.max_n + 1):
        out.extend(shapes_up_to(n, config.max_boxes, 1))
    return out


def _highest_paths(shape: TensorShape) -> Iterator[tuple[tuple[int, ...], Path]]:
    for lam in dominant_weights(shape.boxes, shape.n):
        for b in enumerate_paths(shape, lam, "classical"):
            yield lam, b


def _is_canonical_order(shape: TensorShape) -> bool:
    return tuple(shape.factors) == multiplicity_of(shape).factors()


# ---------------------------------------------------------------------------
# suites; each takes one tensor shape


def suite_x_equals_m(shape: TensorShape, config: VerifyConfig) -> Outcome:
    out = Outcome()
    L = multiplicity_of(shape)
    for lam in dominant_weights(shape.boxes, shape.n):
        x = config_sum(shape, lam, "classical")
        m = m_bar(L, lam)
        out.check(x == m, lambda: f"B={shape} n={shape.n} lambda={lam}: X={x} M={m}")
    return out


def suite_roundtrip(shape: TensorShape, config: VerifyConfig) -> Outcome:
    out = Outcome()
    L = multiplicity_of(shape)
    for lam, b in _highest_paths(shape):
        rc = phi_bar(b)
        back = phi_bar_inverse(rc, shape)
        out.check(back == b, lambda: f"phi_bar_inverse(phi_bar({b})) = {back}")
        if _is_canonical_order(shape):
            # RC-side identities once per multiplicity array
            out.check(theta(theta(rc)) == rc, lambda: f"theta^2 moves {rc}")
            out.check(reverse_rc(reverse_rc(rc)) == rc, lambda: f"rev^2 moves {rc}")
            if L.get(1, 1):
                small, rank = delta(rc)
                again = delta_inverse(small, rank)
                out.check(again == rc, lambda: f"delta_inverse(delta({rc})) = {again}")
                out.check(delta(again) == (small, rank), lambda: f"delta(delta_inverse({small}, {rank})) differs")
    if _is_canonical_order(shape):
        for lam in dominant_weights(shape.boxes, shape.n):
            for rc in enumerate_admissible(L, lam):
                try:
                    b = phi_bar_inverse(rc, shape)
                    got = phi_bar(b)
                except (BijectionError, ShapeError) as exc:
                    got = exc
                out.check(got == rc, lambda: f"phi_bar(phi_bar_inverse({rc})) = {got}")
    for b in enumerate_crystal(shape):
        pb = promote_path(b)
        out.check(inverse_promote_path(pb) == b, lambda: f"pr^-1(pr({b})) != {b}")
    return out


def _corrupt(rc: RiggedConfiguration) -> RiggedConfiguration:
    for a, s in enumerate(rc.strings):
        if s:
            strings = list(rc.strings)
            strings[a] = ((s[0][0], s[0][1] - 1),) + s[1:]
            return RiggedConfiguration(rc.L, tuple(strings))
    return rc


def suite_statistic(shape: TensorShape, config: VerifyConfig) -> Outcome:
    out = Outcome()
    for lam, b in _highest_paths(shape):
        rc = phi_bar(b)
        if config.inject_fault:
            rc = _corrupt(rc)
        d, cc = tail_energy(b), cocharge(rc)
        out.check(d == cc, lambda: f"path {b} (D={d}) <-> RC {rc} (cc={cc})")
    return out


def suite_dualities(shape: TensorShape, config: VerifyConfig) -> Outcome:
    out = Outcome()
    widest = max(s for _, s in shape.factors)
    for lam, b in _highest_paths(shape):
        rc = phi_bar(b)
        ev = phi_bar(evacuation(b))
        out.check(theta(rc) == ev, lambda: f"evacuation square fails at {b}")
        for i in range(1, len(shape.factors)):
            moved = phi_bar(apply_r(b, i))
            out.check(moved == rc, lambda: f"R_{i} changes phi_bar at {b}")
        dual = phi_bar(contragredient(b))
        out.check(dual == reverse_rc(rc), lambda: f"contragredient square fails at {b}")
        n_t = max(len(transpose(lam)), widest + 1)
        tr = phi_bar(transpose_path(b, n_t))
        out.check(tr == transpose_rc(rc, lam, n_t), lambda: f"transpose square fails at {b}")
    return out


def component(seed, lower: Callable, n: int) -> tuple[list, list[tuple]]:
    """Breadth-first closure under ``lower(x, i)`` for ``i = 1..n-1``; nodes in discovery order."""
    nodes = [seed]
    seen = {seed}
    edges = []
    k = 0
    while k < len(nodes):
        x = nodes[k]
        k += 1
        for i in range(1, n):
            y = lower(x, i)
            if y is None:
                continue
            edges.append((x, y, i))
            if y not in seen:
                seen.add(y)
                nodes.append(y)
    return nodes, edges


def suite_rc_crystal(shape: TensorShape, config: VerifyConfig) -> Outcome:
    """Lock-step walk of the path and RC components from each highest weight."""
    out = Outcome()
    if not _is_canonical_order(shape):
        return out
    n = shape.n
    L = multiplicity_of(shape)
    for lam in dominant_weights(shape.boxes, n):
        for top in enumerate_admissible(L, lam):
            b0 = phi_bar_inverse(top, shape)
            match = {top: b0}
            queue = [top]
            cc0 = cocharge(top)
            k = 0
            while k < len(queue):
                x = queue[k]
                k += 1
                bx = match[x]
                for i in range(1, n):
                    y, by = rc_f(x, i), classical_f(bx, i)
                    out.check((y is None) == (by is None), lambda: f"f_{i} defined on only one side at {x} / {bx}")
                    if y is None or by is None:
                        continue
                    if y in match:
                        out.check(match[y] == by, lambda: f"f_{i} edge mismatch at {x}")
                        continue
                    match[y] = by
                    queue.append(y)
                    out.check(cocharge(y) == cc0, lambda: f"cc not constant: {y} has {cocharge(y)}, top has {cc0}")
            out.check(len(set(match.values())) == len(match), lambda: f"component of {top} not injective")
    return out


def suite_promotion(shape: TensorShape, config: VerifyConfig) -> Outcome:
    """Promotion commutes with the bijection; asserted on single factors only."""
    out = Outcome()
    if len(shape.factors) != 1:
        return out
    for b in enumerate_crystal(shape):
        lhs = rc_promotion(phi(b))
        rhs = phi(promote_path(b))
        out.check(lhs == rhs, lambda: f"pr mismatch at {b}: {lhs} vs {rhs}")
    return out


def unrestricted_oracle(L: MultiplicityArray, lam) -> QLaurent:
    return QLaurent.from_exponents(cocharge(rc) for rc in enumerate_unrestricted(L, lam))


def level_oracle(L: MultiplicityArray, lam, level: int) -> QLaurent:
    return QLaurent.from_exponents(cocharge(rc) for rc in enumerate_level_restricted(L, lam, level))


def suite_oracles(shape: TensorShape, config: VerifyConfig) -> Outcome:
    """Fermionic formulas against direct enumeration, once per multiplicity array."""
    out = Outcome()
    if not _is_canonical_order(shape):
        return out
    L = multiplicity_of(shape)
    lo = max(s for _, s in shape.factors)
    for lam in dominant_weights(shape.boxes, shape.n):
        got, want = m_unrestricted(L, lam), unrestricted_oracle(L, lam)
        out.check(got == want, lambda: f"unrestricted L={L} lambda={lam}: {got} vs {want}")
        for level in range(lo, lo + 2):
            if not is_level_restricted_weight(lam, level):
                continue
            got, want = m_level(L, lam, level), level_oracle(L, lam, level)
            out.check(got == want, lambda: f"level {level} L={L} lambda={lam}: {got} vs {want}")
    return out


SUITE_FUNCS: dict[str, Callable[[TensorShape, VerifyConfig], Outcome]] = {
    "x-equals-m": suite_x_equals_m,
    "bijection-roundtrip": suite_roundtrip,
    "statistic": suite_statistic,
    "dualities": suite_dualities,
    "rc-crystal-iso": suite_rc_crystal,
    "promotion": suite_promotion,
    "oracles": suite_oracles,
}


def _run_one(args) -> Outcome:
    name, shape, config = args
    try:
        return SUITE_FUNCS[name](shape, config)
    except Exception as exc:  # a crash is a failed check, reported with its instance
        return Outcome(1, 1, f"B={shape} n={shape.n}: {type(exc).__name__}: {exc}")


def run_suite(name: str, config: VerifyConfig) -> SuiteResult:
    if name not in SUITE_FUNCS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    start = time.perf_counter()
    result = SuiteResult(name)
    work = [(name, shape, config) for shape in instances(config)]
    if config.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(config.jobs) as pool:
            outcomes = list(pool.map(_run_one, work, chunksize=4))
    else:
        outcomes = [_run_one(w) for w in work]
    for o in outcomes:
        result.merge(o)
    result.seconds = time.perf_counter() - start
    return result


def run(config: VerifyConfig = VerifyConfig()) -> list[SuiteResult]:
    return [run_suite(name, config) for name in config.suites]
