"""The conductance across the 1/N tower.

The coefficient of s**1 in the transmission generating function is the
average conductance in units of N.  In the unitary class every computed
correction vanishes, so the conductance is exactly N1*N2/N.  In the
orthogonal class the corrections alternate in sign: they reproduce the
geometric expansion of N1*N2/(N+1), the classic weak-localization result.
"""

from cavity_moments.summation import closed_form_series

print("unitary tower, coefficient of s**1:")
for genus2, fid in ((0, "T0"), (2, "T2U"), (4, "T4U")):
    c = closed_form_series(fid, 4).coefficient(1)
    print(f"  order N**{1 - genus2}: {c}")

print("\northogonal tower, coefficient of s**1:")
for genus2, fid in ((0, "T0"), (1, "T1O"), (2, "T2O"),
                    (3, "T3O"), (4, "T4O")):
    c = closed_form_series(fid, 4).coefficient(1)
    print(f"  order N**{1 - genus2}: {c}")

print("\nxi = N1*N2/N**2, so the orthogonal column sums to "
      "N1*N2/N * (1 - 1/N + 1/N**2 - ...) = N1*N2/(N+1).")
