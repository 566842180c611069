import pytest
from hypothesis import given, settings, strategies as st

from cavity_moments.algebra import (BranchError, NonInvertibleError,
                                    ParityViolationError, Poly, Rational,
                                    Series, SeriesMismatchError,
                                    format_rational, inv_sqrt_pow,
                                    parse_rational)

rationals = st.builds(Rational,
                      st.integers(min_value=-50, max_value=50),
                      st.integers(min_value=1, max_value=8))
polys = st.lists(rationals, max_size=5).map(Poly)


def series_st(K=6, nonzero_const=False):
    base = st.lists(polys, min_size=K + 1, max_size=K + 1)
    if nonzero_const:
        def fix(cs):
            c0 = cs[0]
            if not (c0.is_constant() and not c0.is_zero()):
                c0 = Poly.const(1)
            return [c0] + cs[1:]
        base = base.map(fix)
    return base.map(lambda cs: Series("s", K, cs))


class TestPoly:
    def test_constructors(self):
        assert Poly.zeta1() + Poly.zeta2() == Poly.const(1)
        assert Poly.xi() == Poly.zeta1() * Poly.zeta2()

    def test_trailing_zeros_stripped(self):
        assert Poly([1, 2, 0, 0]) == Poly([1, 2])
        assert Poly([0]).is_zero()

    @given(polys, polys, polys)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)

    @given(polys)
    def test_swap_leads_involution(self, p):
        assert p.swap_leads().swap_leads() == p

    def test_swap_leads_explicit(self):
        # zeta1**2 -> (1 - zeta1)**2
        assert Poly([0, 0, 1]).swap_leads() == Poly([1, -2, 1])
        assert Poly.xi().swap_leads() == Poly.xi()

    @given(polys)
    def test_evaluation_is_homomorphic(self, p):
        q = p * Poly.zeta1() + Poly.const(3)
        x = Rational(2, 7)
        assert q(x) == p(x) * x + 3

    def test_xi_basis_roundtrip(self):
        xi = Poly.xi()
        p = (xi * xi * xi).scale(5) - xi + Poly.const(2)
        coeffs = p.to_xi_basis()
        back = Poly([0])
        for c in reversed(coeffs):
            back = back * Poly.xi() + Poly.const(c)
        assert back == p

    def test_xi_basis_rejects_asymmetric(self):
        from cavity_moments.algebra import BasisError
        with pytest.raises(BasisError):
            Poly.zeta1().to_xi_basis()


class TestSeries:
    @given(series_st(), series_st(), series_st())
    @settings(max_examples=40, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)

    @given(series_st(nonzero_const=True))
    @settings(max_examples=40, deadline=None)
    def test_inverse_roundtrip(self, a):
        assert a * a.inverse() == Series.const(1, "s", a.K)

    @given(series_st())
    @settings(max_examples=40, deadline=None)
    def test_sqrt_roundtrip(self, a):
        b = Series.const(1, "s", a.K) + Series.variable("s", a.K) * a
        r = b.sqrt()
        assert r * r == b

    def test_inverse_needs_rational_constant(self):
        with pytest.raises(NonInvertibleError):
            Series.variable("s", 4).inverse()
        with pytest.raises(NonInvertibleError):
            Series.const(Poly.zeta1(), "s", 4).inverse()

    def test_sqrt_needs_unit_constant(self):
        with pytest.raises(BranchError):
            Series.const(4, "s", 4).sqrt()

    @given(series_st(), series_st())
    @settings(max_examples=40, deadline=None)
    def test_derivation_leibniz(self, a, b):
        assert (a * b).s_d_ds() == a.s_d_ds() * b + a * b.s_d_ds()

    def test_pow_matches_repeated_product(self):
        a = Series.const(1, "s", 6) + Series.variable("s", 6).scale(Poly.xi())
        assert a ** 5 == a * a * a * a * a
        assert a ** -2 == (a * a).inverse()

    def test_reindex_even_powers(self):
        r = Series.variable("r", 8)
        s = (r * r).scale(3) + (r ** 6).scale(Poly.zeta1())
        out = s.reindex_r_to_s()
        assert out.K == 4
        assert out.coefficient(1) == Poly.const(3)
        assert out.coefficient(3) == Poly.zeta1()

    def test_reindex_rejects_odd_powers(self):
        with pytest.raises(ParityViolationError):
            Series.variable("r", 4).reindex_r_to_s()

    def test_mismatched_operands(self):
        with pytest.raises(SeriesMismatchError):
            Series.zero("s", 4) + Series.zero("r", 4)
        with pytest.raises(SeriesMismatchError):
            Series.zero("s", 4) + Series.zero("s", 5)

    def test_truncate(self):
        a = (Series.const(1, "s", 8) + Series.variable("s", 8)) ** 8
        t = a.truncate(3)
        assert t.K == 3
        assert t.coefficient(2) == Poly.const(28)

    @given(series_st())
    @settings(max_examples=40, deadline=None)
    def test_swap_leads_ring_morphism(self, a):
        b = a * a + a.scale(Poly.zeta2())
        assert b.swap_leads() == \
            a.swap_leads() * a.swap_leads() + a.swap_leads().scale(Poly.zeta1())

    def test_inv_sqrt_pow(self):
        base = Series.const(1, "s", 8) - Series.variable("s", 8).scale(4)
        assert inv_sqrt_pow(base, 2) * base == Series.const(1, "s", 8)
        assert inv_sqrt_pow(base, -2) == base


class TestFormatting:
    def test_rational_roundtrip(self):
        assert format_rational(Rational(-3, 7)) == "-3/7"
        assert parse_rational("-3/7") == Rational(-3, 7)
        assert parse_rational("5") == Rational(5)

    def test_json_obj(self):
        s = Series.variable("s", 3).scale(Poly.zeta1())
        assert s.to_json_obj() == [[1, ["0/1", "1/1"]]]
