import itertools

from hypothesis import given, settings, strategies as st

from xm.crystal import (
    Path,
    affine_e0,
    affine_f0,
    classical_e,
    classical_f,
    contragredient_tableau,
    enumerate_crystal,
    enumerate_paths,
    epsilon,
    inverse_promote_path,
    is_classically_highest,
    is_level_path,
    kr_tableaux,
    make_path,
    phi_i,
    promote_path,
    promotion,
    raise_to_highest,
    row_word,
    star_dual,
    weight,
)
from xm.shapes import TensorShape, shapes_up_to

from golden import MAIN_PATH, STAR_PATH

small_shapes = [s for n in (2, 3, 4) for s in shapes_up_to(n, 4, 1)]


def test_row_word_reads_bottom_row_first():
    b = make_path(4, [[1, 2], [3, 4]], [[1], [3]])
    assert row_word(b) == (3, 4, 1, 2, 3, 1)
    assert row_word(MAIN_PATH) == (3, 2, 1, 1, 3, 4, 3, 1, 2, 2, 2, 1, 1, 1)


def test_kr_tableaux_counts():
    # B^{1,s} over n letters has C(n+s-1, s) elements; B^{2,2} for n=4 has 20
    assert len(kr_tableaux(1, 3, 3)) == 10
    assert len(kr_tableaux(2, 2, 4)) == 20
    assert len(kr_tableaux(3, 1, 4)) == 4


def test_signature_rule_example():
    b = make_path(3, [[1]], [[2]], [[1]])
    assert classical_f(b, 1) == make_path(3, [[2]], [[2]], [[1]])
    assert classical_f(b, 2) == make_path(3, [[1]], [[3]], [[1]])
    assert classical_e(b, 1) is None and is_classically_highest(b)


def test_weight_and_highest():
    assert weight(MAIN_PATH) == (6, 4, 3, 1)
    assert is_classically_highest(MAIN_PATH)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(small_shapes), st.data())
def test_e_f_inverse_and_string_lengths(shape, data):
    elems = list(enumerate_crystal(shape))
    b = data.draw(st.sampled_from(elems))
    for i in range(1, shape.n):
        f = classical_f(b, i)
        if f is not None:
            assert classical_e(f, i) == b
            assert weight(f)[i - 1] == weight(b)[i - 1] - 1
        e = classical_e(b, i)
        if e is not None:
            assert classical_f(e, i) == b
        w = weight(b)
        assert phi_i(b, i) - epsilon(b, i) == w[i - 1] - w[i]


def test_raising_is_order_independent():
    shape = TensorShape(3, ((1, 2), (2, 1), (1, 1)))
    for b in enumerate_crystal(shape):
        top, word = raise_to_highest(b)
        assert is_classically_highest(top)
        # alternative sweep: descending index order
        cur = b
        changed = True
        while changed:
            changed = False
            for i in range(shape.n - 1, 0, -1):
                while (nxt := classical_e(cur, i)) is not None:
                    cur, changed = nxt, True
        assert cur == top


def test_enumerate_paths_kinds():
    shape = TensorShape(4, ((2, 2), (2, 1)))
    assert len(enumerate_paths(shape, (2, 2, 1, 1), "unrestricted")) == 7
    hw = enumerate_paths(shape, (2, 2, 1, 1), "classical")
    assert len(hw) == 1 and all(is_classically_highest(b) for b in hw)


def test_enumerate_paths_matches_filter():
    shape = TensorShape(3, ((1, 2), (1, 1), (2, 1)))
    elems = list(enumerate_crystal(shape))
    for lam in itertools.product(range(5), repeat=3):
        if sum(lam) != shape.boxes:
            continue
        assert enumerate_paths(shape, lam, "unrestricted") == [b for b in elems if weight(b) == lam]


def test_promotion_example():
    assert promotion(((1, 3), (4, 4)), 4) == ((1, 1), (2, 4))


def test_promotion_rotates_weight_and_is_invertible():
    for shape in small_shapes:
        for b in enumerate_crystal(shape):
            pb = promote_path(b)
            w = weight(b)
            assert weight(pb) == (w[-1],) + w[:-1]
            assert inverse_promote_path(pb) == b


def test_promotion_order():
    """pr has order n on a single rectangle."""
    for n, r, s in [(3, 1, 2), (4, 2, 2), (4, 3, 1)]:
        for t in kr_tableaux(r, s, n):
            x = t
            for _ in range(n):
                x = promotion(x, n)
            assert x == t


def test_affine_operators():
    shape = TensorShape(3, ((1, 1), (1, 2)))
    for b in enumerate_crystal(shape):
        f = affine_f0(b)
        if f is not None:
            assert affine_e0(f) == b
            w, wf = weight(b), weight(f)
            assert wf[0] == w[0] + 1 and wf[-1] == w[-1] - 1


def test_level_paths():
    shape = TensorShape(3, ((1, 1),) * 4 + ((1, 2),))
    lvl = enumerate_paths(shape, (3, 2, 1), "level", 2)
    assert len(lvl) == 3
    assert all(is_level_path(b, 2) for b in lvl)


def test_star_dual_and_contragredient():
    assert star_dual(MAIN_PATH) == STAR_PATH
    assert contragredient_tableau(((1, 2), (2, 3)), 4) == ((1, 1), (2, 4))
    assert star_dual(star_dual(MAIN_PATH)) == MAIN_PATH
