"""Hand-specified principal diagrams: untying calculus and exact values.

This module is a validation layer, independent of the structure sweep: it
evaluates individual diagrams given by their counts (edges, vertices,
untieable vertices) and transforms target permutations under the untying of
a vertex with a given key.  It provides an oracle path for the contribution
rules without enumerating diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .perm import Perm
from .trees import REFLECTION, TRANSMISSION

ORTHOGONAL_MODE = "orthogonal"
UNITARY_I = "unitary_i"
UNITARY_O = "unitary_o"

INPUT, OUTPUT, MIXED = "input", "output", "mixed"


class UntieKeyError(ValueError):
    """Malformed untying key."""


@dataclass(frozen=True)
class TargetPerm:
    """A target permutation on n leaves.

    The permutation acts on the barred alphabet {1..n, -n..-1} in the
    orthogonal case and on the reduced alphabet {1..n} in the unitary case.
    Orthogonal targets must be palindromic.
    """
    n: int
    perm: Perm

    def __post_init__(self):
        if self.perm.n != self.n:
            raise ValueError("permutation carrier does not match n")
        if self.perm.barred and not self.perm.is_palindromic():
            raise ValueError("orthogonal target must be palindromic")


def _key_perm(key, n: int, barred: bool) -> Perm:
    labels = tuple(key)
    if len(labels) != len(set(labels)) or not labels:
        raise UntieKeyError(f"key {labels} is not a cycle of distinct labels")
    try:
        return Perm.from_cycles([labels], n, barred)
    except (ValueError, IndexError) as exc:
        raise UntieKeyError(str(exc)) from exc


def untie(target: TargetPerm, key, mode: str) -> TargetPerm:
    """Target permutation after untying a vertex whose key cycle is ``key``.

    Orthogonal: rho^-1 * tau * reversal(rho)^-1 with rho the key on the
    barred alphabet.  Unitary with an unbarred (input-side) key: rho^-1 *
    tau.  Unitary with a barred (output-side) key: tau * reversal(rho)^-1,
    where the reversal strips the bars and reverses the cycle.
    """
    tau = target.perm
    n = target.n
    if mode == ORTHOGONAL_MODE:
        if not tau.barred:
            raise UntieKeyError("orthogonal untying needs a barred target")
        rho = _key_perm(key, n, barred=True)
        out = rho.inverse().compose(tau).compose(rho.reversal().inverse())
    elif mode == UNITARY_I:
        if any(lbl < 0 for lbl in key):
            raise UntieKeyError("input-side key must be unbarred")
        rho = _key_perm(key, n, barred=False)
        out = rho.inverse().compose(tau)
    elif mode == UNITARY_O:
        if any(lbl > 0 for lbl in key):
            raise UntieKeyError("output-side key must be barred")
        stripped = tuple(-lbl for lbl in reversed(tuple(key)))
        rho_bar = _key_perm(stripped, n, barred=False)
        out = tau.compose(rho_bar.inverse())
    else:
        raise ValueError(f"unknown untying mode {mode!r}")
    return TargetPerm(n, out)


@dataclass(frozen=True)
class DiagramCount:
    """Counting data of one principal diagram.

    ``untieable`` lists the vertices admitting an untied partner as pairs
    (degree, lead) with degree = 2*m_v and lead one of input/output/mixed.
    """
    E: int
    V: int
    untieable: tuple[tuple[int, str], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.E < self.V + 1:
            raise ValueError("connected one-face diagrams need E >= V + 1")
        for degree, lead in self.untieable:
            if degree < 4 or degree % 2:
                raise ValueError(f"untieable vertex of degree {degree}")
            if lead not in (INPUT, OUTPUT, MIXED):
                raise ValueError(f"unknown lead {lead!r}")


def principal_contribution(counts: DiagramCount, n: int,
                           N1: int, N2: int, quantity: str) -> Fraction:
    """Exact value of the diagram and its untied partners.

    Each edge contributes 1/N, each vertex -N, and each boundary-cycle leaf
    pair a channel sum N_i or N_o; every untieable vertex multiplies in
    (1 - N^(m_v-1)/N_j^(m_v-1)) with N_j the channel count of its lead.
    For transmission a mixed-lead vertex cannot be untied and contributes 1.
    """
    N = N1 + N2
    if quantity == TRANSMISSION:
        Ni, No = N1, N2
        lead_channels = {INPUT: N1, OUTPUT: N2, MIXED: None}
    elif quantity == REFLECTION:
        Ni = No = N1
        lead_channels = {INPUT: N1, OUTPUT: N1, MIXED: N1}
    else:
        raise ValueError(f"unknown quantity {quantity!r}")
    value = Fraction((-1) ** counts.V * Ni ** n * No ** n,
                     N ** (counts.E - counts.V))
    for degree, lead in counts.untieable:
        m_v = degree // 2
        Nj = lead_channels[lead]
        if Nj is None:
            continue
        value *= 1 - Fraction(N ** (m_v - 1), Nj ** (m_v - 1))
    return value
