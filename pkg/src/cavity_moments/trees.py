"""Generating functions of the grafted trees.

For transmission the o-tree and i-tree functions f, fhat satisfy coupled
recursions whose product h = f*fhat also solves a quadratic in s = r**2; for
reflection the two coincide and f solves r*zeta2*f**2 - f + r*zeta1 = 0.
All functions are computed as truncated series in the leaf variable r with
polynomial coefficients in zeta1.

The module also provides the leading-order closed forms of the moment
generating functions, used as an independent check on the diagram sums.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Poly, Rational, Series

TRANSMISSION = "transmission"
REFLECTION = "reflection"


@dataclass(frozen=True)
class TreeFunctions:
    quantity: str
    K: int          # truncation in r
    f: Series       # o-tree generating function, in r
    fhat: Series    # i-tree generating function, in r
    h: Series       # f * fhat
    u: Series       # f with its leading channel factor removed: f = zeta2*u
                    # (transmission) or f = zeta1*u (reflection)
    uhat: Series    # likewise fhat = zeta1*uhat (transmission; u for refl.)


def _transmission_step(f: Series, fh: Series, r: Series,
                       z1: Poly, z2: Poly) -> tuple[Series, Series]:
    one = Series.const(1, "r", r.K)
    h = f * fh
    inv_h = (one - h).inverse()
    new_f = r.scale(z2) - f * f * fh * inv_h \
        + (r * r * fh).scale(z2) * (one - r * fh).inverse()
    new_fh = r.scale(z1) - fh * fh * f * inv_h \
        + (r * r * f).scale(z1) * (one - r * f).inverse()
    return new_f, new_fh


def solve_tree_functions(quantity: str, K: int) -> TreeFunctions:
    """Series solutions of the tree recursions, zero-constant-term branch."""
    if K < 2:
        raise ValueError("truncation must be at least 2")
    r = Series.variable("r", K)
    one = Series.const(1, "r", K)
    z1, z2 = Poly.zeta1(), Poly.zeta2()

    if quantity == TRANSMISSION:
        f = fh = Series.zero("r", K)
        # each sweep of the recursion gains at least one order in r
        for _ in range(K + 1):
            nf, nfh = _transmission_step(f, fh, r, z1, z2)
            if nf == f and nfh == fh:
                break
            f, fh = nf, nfh
        h = f * fh
        inv_h = (one - h).inverse()
        u = r * (one - h) * (one - r * fh).inverse()
        uhat = r * (one - h) * (one - r * f).inverse()
    elif quantity == REFLECTION:
        f = Series.zero("r", K)
        for _ in range(K + 1):
            nf = r.scale(z1) + (r * f * f).scale(z2)
            if nf == f:
                break
            f = nf
        fh = f
        h = f * f
        u = uhat = r * (one - h) * (one - r * f).inverse()
    else:
        raise ValueError(f"unknown quantity {quantity!r}")
    return TreeFunctions(quantity, K, f, fh, h, u, uhat)


def h_quadratic_newton(K: int) -> Series:
    """Transmission h(s) by Newton iteration on its quadratic equation.

    Solves s*xi*h**2 + (s - 2*s*xi - 1)*h + s*xi = 0 on the branch h(0) = 0;
    an independent route to the same function as solve_tree_functions.
    """
    s = Series.variable("s", K)
    xi_s = s.scale(Poly.xi())
    lin = s - xi_s.scale(2) - Series.const(1, "s", K)
    h = Series.zero("s", K)
    for _ in range(max(K.bit_length(), 1) + 2):
        residual = xi_s * h * h + lin * h + xi_s
        if residual.is_zero():
            break
        h = h - residual * (xi_s * h.scale(2) + lin).inverse()
    return h


def h_quadratic_residual(h_s: Series) -> Series:
    """Left-hand side of the transmission h quadratic at a candidate h(s)."""
    K = h_s.K
    s = Series.variable("s", K)
    xi_s = s.scale(Poly.xi())
    lin = s - xi_s.scale(2) - Series.const(1, "s", K)
    return xi_s * h_s * h_s + lin * h_s + xi_s


def leading_order_closed_form(quantity: str, symmetry: str, K: int) -> Series:
    """T0 or R0 as a series in s; identical for both symmetry classes."""
    if symmetry not in ("unitary", "orthogonal"):
        raise ValueError(f"unknown symmetry {symmetry!r}")
    s = Series.variable("s", K)
    one = Series.const(1, "s", K)
    half = Rational(1, 2)
    if quantity == TRANSMISSION:
        inner = one + s.scale(Poly.xi()).scale(4) * (one - s).inverse()
        return (inner.sqrt() - one).scale(half)
    if quantity == REFLECTION:
        root = (one - s.scale(Poly.xi()).scale(4)).sqrt()
        num = s.scale(Poly.zeta1()).scale(2) - one + root
        return num.scale(half) * (one - s).inverse()
    raise ValueError(f"unknown quantity {quantity!r}")
