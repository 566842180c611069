import pytest
from hypothesis import given, strategies as st

from cavity_moments.perm import CarrierMismatchError, Perm, bar_involution


def random_perm(n, barred=True):
    size = 2 * n if barred else n
    return st.permutations(range(size)).map(
        lambda imgs: Perm(imgs, n, barred))


class TestBasics:
    def test_parse_roundtrip(self):
        p = Perm.parse("(1 -3)(2 4)", 4)
        assert p(1) == -3 and p(-3) == 1 and p(2) == 4
        assert Perm.parse(p.to_cycle_string(), 4) == p

    def test_identity(self):
        p = Perm.identity(3)
        assert all(p(z) == z for z in (1, 2, 3, -1, -2, -3))

    def test_from_cycles_rejects_repeats(self):
        with pytest.raises(ValueError):
            Perm.from_cycles([(1, 2), (2, 3)], 3)

    def test_reduced_carrier_rejects_bars(self):
        with pytest.raises(ValueError):
            Perm.from_cycles([(1, -2)], 3, barred=False)

    def test_carrier_mismatch(self):
        with pytest.raises(CarrierMismatchError):
            Perm.identity(3).compose(Perm.identity(4))

    def test_cycle_type(self):
        p = Perm.parse("(1 2 3)(-3 -2 -1)", 4)
        assert p.cycle_type() == (3, 3, 1, 1)


class TestGroupLaws:
    @given(random_perm(3), random_perm(3))
    def test_compose_then_invert(self, p, q):
        pq = p.compose(q)
        assert pq.compose(q.inverse()) == p

    @given(random_perm(3))
    def test_inverse_involution(self, p):
        assert p.inverse().inverse() == p

    @given(random_perm(3), random_perm(3))
    def test_compose_is_application(self, p, q):
        for z in (1, 3, -2):
            assert p.compose(q)(z) == p(q(z))


class TestReversal:
    @given(random_perm(4))
    def test_involution(self, p):
        assert p.reversal().reversal() == p

    @given(random_perm(4), random_perm(4))
    def test_antihomomorphism(self, p, q):
        # reversal conjugates by the bar map and inverts, so it reverses
        # products like transposition does
        assert p.compose(q).reversal() == q.reversal().compose(p.reversal())

    def test_explicit(self):
        p = Perm.parse("(1 2 -3)", 3)
        assert p.reversal() == Perm.parse("(3 -2 -1)", 3)


class TestPalindromic:
    def test_bar_involution(self):
        t = bar_involution(3)
        assert t(1) == -1 and t(-2) == 2
        assert t.compose(t) == Perm.identity(3)

    def test_palindromic_examples(self):
        assert Perm.parse("(1 2 3)(-3 -2 -1)", 3).is_palindromic()
        assert not Perm.parse("(1 2 3)(-1 -2 -3)", 3).is_palindromic()
