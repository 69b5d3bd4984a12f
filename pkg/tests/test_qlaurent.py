import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from xm.qlaurent import ONE, ZERO, QLaurent, format_poly, q, q_pochhammer, qbinomial, quasipartition_gf


def poly(*coeffs, low=0):
    return QLaurent({low + k: c for k, c in enumerate(coeffs)})


def box_partitions(p, m):
    """Oracle: count partitions in an m x p box by size."""
    out = {}
    for parts in itertools.combinations_with_replacement(range(p + 1), m):
        out[sum(parts)] = out.get(sum(parts), 0) + 1
    return QLaurent(out)


class TestQbinomial:
    def test_small_values(self):
        assert qbinomial(1, 1) == poly(1, 1)
        assert qbinomial(2, 2) == poly(1, 1, 2, 1, 1)
        assert qbinomial(5, 0) == ONE
        assert qbinomial(0, 0) == ONE

    def test_negative_arguments_vanish(self):
        assert qbinomial(-1, 2) == ZERO
        assert qbinomial(3, -1) == ZERO

    def test_pochhammer_quotient(self):
        for p, m in [(3, 2), (4, 4), (1, 5)]:
            assert qbinomial(p, m) * q_pochhammer(p) * q_pochhammer(m) == q_pochhammer(p + m)

    @given(st.integers(0, 7), st.integers(0, 7))
    def test_symmetric(self, p, m):
        assert qbinomial(p, m) == qbinomial(m, p)

    @given(st.integers(0, 8), st.integers(0, 8))
    def test_at_one_is_binomial(self, p, m):
        assert qbinomial(p, m).at_one() == comb(p + m, m)

    @given(st.integers(1, 8), st.integers(1, 8))
    def test_pascal(self, p, m):
        assert qbinomial(p, m) == qbinomial(p - 1, m) + qbinomial(p, m - 1).shift(p)

    @given(st.integers(0, 5), st.integers(0, 4))
    def test_box_partition_oracle(self, p, m):
        b = qbinomial(p, m)
        assert b == box_partitions(p, m)
        assert b.degree() == p * m
        assert all(c > 0 for _, c in b.items())


class TestQuasipartitions:
    def test_examples(self):
        assert quasipartition_gf(0, 3, 2) == qbinomial(3, 2)
        assert quasipartition_gf(-1, 0, 1) == QLaurent({-1: 1, 0: 1})
        assert quasipartition_gf(2, 2, 3) == QLaurent.monomial(6)

    def test_rejects_negative_part_count(self):
        with pytest.raises(ValueError):
            quasipartition_gf(0, 1, -1)

    @given(st.integers(-3, 2), st.integers(-3, 3), st.integers(0, 3))
    def test_brute_force(self, M, p, m):
        tuples = [t for t in itertools.product(range(M, p + 1), repeat=m) if list(t) == sorted(t, reverse=True)]
        assert quasipartition_gf(M, p, m) == QLaurent.from_exponents(sum(t) for t in tuples)


class TestArithmetic:
    def test_ring_identities(self):
        a = poly(1, 1)
        assert a + (-a) == ZERO
        assert a * ONE == a
        assert a.shift(2) == poly(0, 0, 1, 1)
        assert (a - a).is_zero()
        assert a ** 2 == poly(1, 2, 1)
        assert 3 * a == poly(3, 3)

    def test_zero_storage_is_normalized(self):
        p = QLaurent({0: 1, 1: 0, 2: 3}) + QLaurent({2: -3})
        assert p == ONE
        assert dict(p.items()) == {0: 1}
        assert hash(p) == hash(ONE)

    def test_invert_and_degrees(self):
        p = poly(1, 0, 2, low=-1)
        assert p.low_degree() == -1 and p.degree() == 1
        assert p.invert() == QLaurent({1: 1, -1: 2})

    def test_format(self):
        assert format_poly(poly(2, 4, 1)) == "2 + 4*q + q^2"
        assert format_poly(ONE) == "1"
        assert format_poly(ZERO) == "0"
        assert format_poly(QLaurent({-1: 1, 0: -2})) == "q^-1 - 2"

    def test_json_roundtrip(self):
        p = QLaurent({-2: 10**30, 3: -1})
        data = p.to_json()
        assert all(isinstance(t["coef"], str) for t in data["poly"])
        assert QLaurent.from_json(data) == p

    @given(st.dictionaries(st.integers(-5, 5), st.integers(-9, 9)), st.dictionaries(st.integers(-5, 5), st.integers(-9, 9)))
    def test_multiplication_matches_convolution(self, x, y):
        a, b = QLaurent(x), QLaurent(y)
        want = {}
        for e1, c1 in x.items():
            for e2, c2 in y.items():
                want[e1 + e2] = want.get(e1 + e2, 0) + c1 * c2
        assert a * b == QLaurent(want)
        assert a * b == b * a
