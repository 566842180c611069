"""Cross-check against exact circular-unitary-ensemble averages.

For broken time-reversal symmetry the transport moments have an exact
finite-N expression through Weingarten functions.  Expanding it in 1/N at
fixed channel fractions must reproduce the unitary genus series order by
order — an independent check of the whole enumeration pipeline.
"""

import sympy

from cavity_moments.rmt_oracle import cue_moment
from cavity_moments.summation import closed_form_series

N = sympy.Symbol("N", positive=True)
z1 = sympy.Symbol("z1", positive=True)

n = 2
moment = cue_moment(n, z1 * N, (1 - z1) * N, "transmission")
print(f"exact M_{n} at N1 = z1*N, N2 = (1-z1)*N:")
print(f"  {sympy.simplify(moment)}")

expansion = sympy.series(moment, N, sympy.oo, 4).removeO()
print("\n1/N expansion vs assembled genus series:")
for genus2, fid in ((0, "T0"), (2, "T2U"), (4, "T4U")):
    got = sympy.expand(expansion.coeff(N, 1 - genus2))
    series = closed_form_series(fid, n)
    want = sum(sympy.Rational(int(c.numerator), int(c.denominator)) * z1**i
               for i, c in enumerate(series.coefficient(n).coeffs))
    tag = "ok" if sympy.simplify(got - want) == 0 else "MISMATCH"
    print(f"  order N**{1 - genus2}: {got}   [{tag}]")
