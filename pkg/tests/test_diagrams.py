from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cavity_moments.diagrams import (DiagramCount, TargetPerm, UntieKeyError,
                                     principal_contribution, untie)
from cavity_moments.perm import Perm
from cavity_moments.trees import REFLECTION, TRANSMISSION


def palindromic_targets(n=4):
    """Random palindromic targets: a permutation of the plain labels
    extended by the mirror image of each of its cycles."""
    def build(imgs):
        sigma = Perm(imgs, n, barred=False)
        cycles = [tuple(z + 1 for z in cyc) for cyc in sigma.cycles_indices()]
        mirrored = [tuple(-(z + 1) for z in reversed(cyc))
                    for cyc in sigma.cycles_indices()]
        return TargetPerm(n, Perm.from_cycles(cycles + mirrored, n))
    return st.permutations(range(n)).map(build)


def plain_keys(n=4):
    return st.lists(st.integers(1, n), min_size=2, max_size=n,
                    unique=True).map(tuple)


class TestUntieFixtures:
    def test_orthogonal_worked_example(self):
        tau = TargetPerm(3, Perm.parse("(1 2 3)(-3 -2 -1)", 3))
        out = untie(tau, (-3, 1, 3), "orthogonal")
        assert out.perm == Perm.parse("(1 2)(-2 -1)", 3)

    def test_unitary_input_key(self):
        tau = TargetPerm(4, Perm.parse("(1 2 3)", 4, barred=False))
        out = untie(tau, (1, 4), "unitary_i")
        assert out.perm == Perm.parse("(1 2 3 4)", 4, barred=False)

    def test_unitary_output_key(self):
        tau = TargetPerm(4, Perm.parse("(1 2 3)", 4, barred=False))
        out = untie(tau, (-2, -4, -3), "unitary_o")
        assert out.perm == Perm.parse("(1 2 4)", 4, barred=False)


class TestUntieProperties:
    @given(palindromic_targets(), plain_keys())
    def test_orthogonal_preserves_palindromicity(self, tau, key):
        out = untie(tau, key, "orthogonal")
        assert out.perm.is_palindromic()

    @given(palindromic_targets(), plain_keys())
    def test_unitary_is_orthogonal_with_bars_erased(self, tau, key):
        """With a plain key, the plain-label cycles of the orthogonal
        result coincide with the reduced input-side result."""
        full = untie(tau, key, "orthogonal").perm
        reduced_tau = TargetPerm(
            tau.n, Perm([tau.perm.images[i] for i in range(tau.n)],
                        tau.n, barred=False))
        red = untie(reduced_tau, key, "unitary_i").perm
        for z in range(1, tau.n + 1):
            assert full(z) == red(z)

    def test_malformed_keys(self):
        tau = TargetPerm(3, Perm.parse("(1 2 3)(-3 -2 -1)", 3))
        with pytest.raises(UntieKeyError):
            untie(tau, (1, 1, 2), "orthogonal")
        red = TargetPerm(3, Perm.parse("(1 2 3)", 3, barred=False))
        with pytest.raises(UntieKeyError):
            untie(red, (-1, 2), "unitary_i")
        with pytest.raises(UntieKeyError):
            untie(red, (1, 2), "unitary_o")

    def test_non_palindromic_target_rejected(self):
        with pytest.raises(ValueError):
            TargetPerm(3, Perm.parse("(1 2 3)(-1 -2 -3)", 3))


class TestPrincipalContribution:
    N1, N2 = 7, 11

    def test_single_untieable_input_vertex(self):
        counts = DiagramCount(8, 1, ((4, "input"),))
        got = principal_contribution(counts, 3, self.N1, self.N2,
                                     TRANSMISSION)
        N = self.N1 + self.N2
        base = Fraction(-self.N1 ** 3 * self.N2 ** 3, N ** 7)
        assert got == base * (1 - Fraction(N, self.N1))

    def test_mixed_vertex_both_quantities(self):
        counts = DiagramCount(8, 2, ((4, "output"), (6, "mixed")))
        N = self.N1 + self.N2
        trans = principal_contribution(counts, 3, self.N1, self.N2,
                                       TRANSMISSION)
        assert trans == Fraction(self.N1 ** 3 * self.N2 ** 3, N ** 6) \
            * (1 - Fraction(N, self.N2))
        refl = principal_contribution(counts, 3, self.N1, self.N2,
                                      REFLECTION)
        assert refl == Fraction(self.N1 ** 6, N ** 6) \
            * (1 - Fraction(N, self.N1)) \
            * (1 - Fraction(N ** 2, self.N1 ** 2))

    def test_doubly_untieable_family(self):
        counts = DiagramCount(6, 1, ((4, "input"), (4, "output")))
        N = self.N1 + self.N2
        got = principal_contribution(counts, 2, self.N1, self.N2,
                                     TRANSMISSION)
        expected = (-Fraction(self.N1 ** 2 * self.N2 ** 2, N ** 5)
                    + Fraction(self.N1 * self.N2 ** 2, N ** 4)
                    + Fraction(self.N1 ** 2 * self.N2, N ** 4)
                    - Fraction(self.N1 * self.N2, N ** 3))
        assert got == expected

    def test_invalid_counts(self):
        with pytest.raises(ValueError):
            DiagramCount(2, 2)
        with pytest.raises(ValueError):
            DiagramCount(5, 1, ((3, "input"),))
        with pytest.raises(ValueError):
            DiagramCount(5, 1, ((4, "sideways"),))
