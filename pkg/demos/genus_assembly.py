"""Walk through one genus assembly, from skeletons to the rational form.

Enumerates the base structures at 2g = 2 for the orthogonal class, sums
their tree-dressed contributions, and shows the resulting transmission
generating function together with its extracted rational form.
"""

from cavity_moments import basegen, summation

GENUS2 = 2
K = 8

print(f"base structures at 2g = {GENUS2} (orthogonal):")
for m in basegen.genus_m_range(GENUS2):
    structs = list(basegen.enumerate_structures(m, "orthogonal", GENUS2))
    kinds = ", ".join(s.half_pair_string() for s in structs)
    print(f"  m = {m}: {len(structs)} structures  [{kinds}]")

result = summation.assemble(GENUS2, "orthogonal", "transmission", K)
print(f"\ntransmission correction at order N**{1 - GENUS2}, "
      f"basis = {result.basis}:")
for n in range(1, K + 1):
    c = result.series.coefficient(n)
    if not c.is_zero():
        print(f"  [s^{n}] = {c}")

rec = result.conjecture
print(f"\nrational form ({rec.status}): prefactor exponent beta = {rec.beta}")
print("  numerator polynomial entries (xi power, s power, coefficient):")
for i, j, c in rec.entries:
    print(f"    ({i}, {j}): {c}")
