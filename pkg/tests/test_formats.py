import json

import pytest

from xm.formats import (
    dumps,
    path_from_json,
    path_to_json,
    poly_from_json,
    poly_to_json,
    rc_from_json,
    rc_to_json,
    tableau_from_json,
    tableau_to_json,
    to_dot,
)
from xm.qlaurent import QLaurent

import golden as G


def test_roundtrips():
    assert path_from_json(json.loads(dumps(path_to_json(G.MAIN_PATH)))) == G.MAIN_PATH
    assert rc_from_json(json.loads(dumps(rc_to_json(G.MAIN_RC)))) == G.MAIN_RC
    p = QLaurent({-2: 3, 0: 1, 5: -4})
    assert poly_from_json(json.loads(dumps(poly_to_json(p)))) == p
    t = ((1, 1, 3), (2, 3, 4))
    assert tableau_from_json(tableau_to_json(t), 4) == t


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'


@pytest.mark.parametrize("rows,n", [
    ([], None),
    ([[1, 2], [3]], None),
    ([[2], [1]], None),
    ([[1], [5]], 4),
    ([[1], [2], [3], [4]], 4),
])
def test_bad_tableaux(rows, n):
    with pytest.raises(ValueError):
        tableau_from_json({"rows": rows}, n)


def test_dot_escapes_and_numbers():
    text = to_dot("g", ["a", 'b"c'], [("a", 'b"c', 1)], str)
    assert 'n1 [label="b\\"c"];' in text
    assert "n0 -> n1 [label=\"1\"];" in text
    assert text.startswith("digraph g {") and text.endswith("}\n")
