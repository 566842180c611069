"""Untying an encounter into a lead, one diagram at a time.

A diagram's channel structure is encoded by its target permutation tau.
When all alternate edges around an encounter vertex end in leaves, the
encounter can slide into a lead; on tau this acts by composition with the
key rho read around the vertex.  The script shows the worked orthogonal
example and the exact channel-sum contribution of a small diagram family.
"""

from fractions import Fraction

from cavity_moments.diagrams import (DiagramCount, TargetPerm,
                                     principal_contribution, untie)
from cavity_moments.perm import Perm

tau = TargetPerm(3, Perm.parse("(1 2 3)(-3 -2 -1)", 3))
print(f"target: {tau.perm.to_cycle_string()}")
key = (-3, 1, 3)
out = untie(tau, key, "orthogonal")
print(f"untie with key {key} (orthogonal): {out.perm.to_cycle_string()}")

# a principal diagram with E = 6, V = 1 whose single vertex unties on
# both the input and the output side: four terms, one per choice of
# which encounters stay inside the cavity
counts = DiagramCount(6, 1, ((4, "input"), (4, "output")))
N1, N2 = 7, 11
val = principal_contribution(counts, 2, N1, N2, "transmission")
print(f"\ndoubly untieable family at N1={N1}, N2={N2}: {val}")
N = N1 + N2
terms = (-Fraction(N1**2 * N2**2, N**5), Fraction(N1 * N2**2, N**4),
         Fraction(N1**2 * N2, N**4), -Fraction(N1 * N2, N**3))
print(f"term by term: {' + '.join(str(t) for t in terms)} = {sum(terms)}")
