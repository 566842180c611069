"""Independent small-n moment oracle for the unitary circular ensemble.

The class coefficients (Weingarten function) are obtained by exact
inversion of the Gram matrix G(sigma, pi) = N^{#cycles(sigma^-1 pi)} on the
symmetric group, with no appeal to character theory; moments then follow by
a brute-force double sum over permutations with channel-coincidence
weights.  Everything is exact: integer channel counts give rationals,
symbolic ones give sympy expressions.  sympy is used only in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import sympy

from .perm import Perm
from .trees import REFLECTION, TRANSMISSION


class GramRankError(ValueError):
    """Gram matrix singular: N too small for this order."""


def _symmetric_group(n: int) -> list[Perm]:
    return [Perm([*imgs], n, barred=False)
            for imgs in permutations(range(n))]


def _cycle_count(p: Perm) -> int:
    return len(p.cycles_indices())


@dataclass(frozen=True)
class WeingartenTable:
    n: int
    N: object                     # int or sympy expression
    values: dict                  # cycle type -> exact value

    def __call__(self, p: Perm):
        return self.values[p.cycle_type()]


def weingarten(n: int, N) -> WeingartenTable:
    """Class coefficients of order n by exact Gram-matrix inversion.

    Requires n <= 4 (the solve is factorial-sized) and, for integer N,
    N >= n so that the Gram matrix is invertible.
    """
    if not 1 <= n <= 4:
        raise ValueError("order must be between 1 and 4")
    group = _symmetric_group(n)
    Nsym = sympy.Integer(N) if isinstance(N, int) else sympy.sympify(N)
    G = sympy.Matrix(
        [[Nsym ** _cycle_count(s.inverse().compose(p)) for p in group]
         for s in group])
    try:
        inv = G.inv()
    except (ValueError, sympy.matrices.exceptions.NonInvertibleMatrixError):
        raise GramRankError(f"Gram matrix of order {n} singular at N={N}")
    identity_row = group.index(Perm.identity(n, barred=False))
    values = {}
    for j, p in enumerate(group):
        v = sympy.cancel(inv[identity_row, j])
        values.setdefault(p.cycle_type(), v)
    return WeingartenTable(n, Nsym, values)


def cue_moment(n: int, N1, N2, quantity: str):
    """Exact transport moment of order n for an N1+N2 channel cavity.

    Brute-force average: sum over sigma, pi in S_n of
    V(sigma pi^-1) * N_i^{#cycles(alpha sigma)} * N_o^{#cycles(pi)} with
    alpha the full cycle (1 2 .. n); the coincidence deltas of the channel
    indices produce the cycle-count exponents.
    """
    if not 1 <= n <= 3:
        raise ValueError("order must be between 1 and 3")
    if quantity == TRANSMISSION:
        Ni, No = N1, N2
    elif quantity == REFLECTION:
        Ni = No = N1
    else:
        raise ValueError(f"unknown quantity {quantity!r}")
    N = sympy.sympify(N1) + sympy.sympify(N2)
    table = weingarten(n, N)
    group = _symmetric_group(n)
    alpha = Perm.from_cycles([tuple(range(1, n + 1))], n, barred=False)
    total = sympy.Integer(0)
    for sigma in group:
        a = _cycle_count(alpha.compose(sigma))
        for pi in group:
            total += (table(sigma.compose(pi.inverse()))
                      * sympy.sympify(Ni) ** a
                      * sympy.sympify(No) ** _cycle_count(pi))
    return sympy.cancel(total)
