"""JSON and DOT encodings for tableaux, paths, rigged configurations and polynomials."""

from __future__ import annotations

import json
from typing import Any, Callable, Hashable, Iterable, Sequence

from .crystal import Path, Tableau, is_column_strict
from .qlaurent import QLaurent
from .rigged import RiggedConfiguration


def tableau_to_json(t: Tableau) -> dict:
    return {"rows": [list(rw) for rw in t]}


def tableau_from_json(data: dict, n: int | None = None) -> Tableau:
    rows = data["rows"]
    if not rows or not all(isinstance(rw, list) and rw for rw in rows):
        raise ValueError("tableau rows must be nonempty lists")
    width = len(rows[0])
    if any(len(rw) != width for rw in rows):
        raise ValueError(f"tableau is not rectangular: {rows}")
    t = tuple(tuple(int(x) for x in rw) for rw in rows)
    if not is_column_strict(t):
        raise ValueError(f"tableau {rows} is not column strict")
    if n is not None and any(not 1 <= x <= n for rw in t for x in rw):
        raise ValueError(f"tableau {rows} has letters outside 1..{n}")
    if n is not None and len(t) > n - 1:
        raise ValueError(f"tableau {rows} has more than {n - 1} rows")
    return t


def path_to_json(b: Path) -> dict:
    return {"n": b.n, "factors": [tableau_to_json(t) for t in b.factors]}


def path_from_json(data: dict) -> Path:
    n = int(data["n"])
    return Path(n, tuple(tableau_from_json(t, n) for t in data.get("factors", [])))


def rc_to_json(rc: RiggedConfiguration) -> dict:
    return rc.to_json()


def rc_from_json(data: dict) -> RiggedConfiguration:
    return RiggedConfiguration.from_json(data)


def poly_to_json(p: QLaurent) -> dict:
    return p.to_json()


def poly_from_json(data: dict) -> QLaurent:
    return QLaurent.from_json(data)


def dumps(obj: Any) -> str:
    """Compact, key-sorted JSON so equal objects serialize to equal bytes."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def to_dot(
    name: str,
    nodes: Sequence[Hashable],
    edges: Iterable[tuple[Hashable, Hashable, int]],
    label: Callable[[Hashable], str],
) -> str:
    """DOT digraph; nodes are numbered in the given order and labeled by ``label``."""
    index = {v: k for k, v in enumerate(nodes)}
    lines = [f"digraph {name} {{"]
    for v in nodes:
        text = label(v).replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  n{index[v]} [label="{text}"];')
    for u, v, i in edges:
        lines.append(f'  n{index[u]} -> n{index[v]} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
