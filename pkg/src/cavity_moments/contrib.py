"""Contribution factors of nodes, composite edges, and vertices.

All factors are kept dimensionless: each edge factor is quoted with its 1/N
stripped and each vertex factor with its -N reduced to -1.  The removed
powers of N are reconstructed by the caller as V - E per structure.

The only non-polynomial channel factors in the source formulas are the
untying corrections 1/zeta^(k-1).  They are absorbed exactly by the reduced
tree functions u, uhat (f = zeta2*u etc.), keeping every series coefficient
a polynomial in zeta1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Poly, Series
from .basegen import ORTHOGONAL, UNITARY
from .trees import REFLECTION, TRANSMISSION, TreeFunctions

# Edge-end labels.  Single labels sit on unitary edge ends, composite ones
# on orthogonal edge ends.
I, O, IO, OI = "i", "o", "io", "oi"
SINGLE_LABELS = (I, O)
COMPOSITE_LABELS = (IO, OI)

TILDE = {I: O, O: I, IO: OI, OI: IO}
HAT = {I: I, O: O, IO: OI, OI: IO}
# first and last letter of each label, for the cyclic sector count
FIRST = {I: "i", O: "o", IO: "i", OI: "o"}
LAST = {I: "i", O: "o", IO: "o", OI: "i"}


class LabelError(ValueError):
    """Edge-end label not admissible for the edge kind."""


@dataclass(frozen=True)
class NodeFactors:
    quantity: str
    yA: Series
    yB: Series
    yBo: Series
    yBi: Series


def node_factors(tf: TreeFunctions) -> NodeFactors:
    """Even and odd node contributions (with the 1/N of the edge folded in)."""
    K = tf.K
    one = Series.const(1, "r", K)
    if tf.quantity == TRANSMISSION:
        denom2 = ((one - tf.h).inverse()) ** 2
        yA = tf.h * (tf.h - one.scale(2)) * denom2
        yB = -tf.h * denom2
        # zeta1/zeta2 * f^2 = zeta1*zeta2*u^2 since f = zeta2*u
        yBo = (tf.u * tf.u).scale(Poly.xi()) * denom2
        yBi = (tf.uhat * tf.uhat).scale(Poly.xi()) * denom2
    elif tf.quantity == REFLECTION:
        f2 = tf.f * tf.f
        denom2 = ((one - f2).inverse()) ** 2
        yA = f2 * (f2 - one.scale(2)) * denom2
        # zeta2/zeta1 * f^2 = xi*v^2 since f = zeta1*v
        yB = (tf.u * tf.u).scale(Poly.xi()) * denom2
        yBo = yBi = yB
    else:
        raise ValueError(f"unknown quantity {tf.quantity!r}")
    return NodeFactors(tf.quantity, yA, yB, yBo, yBi)


def edge_factor(kind: str, label1: str, label2: str,
                nf: NodeFactors, tf: TreeFunctions) -> Series:
    """Composite-edge contribution N*E(label1, label2), by the geometric
    sum over alternating odd nodes and runs of even nodes."""
    one = Series.const(1, "r", tf.K)
    inv_a = one - nf.yA
    if kind == UNITARY:
        if label1 not in SINGLE_LABELS or label2 not in SINGLE_LABELS:
            raise LabelError(f"unitary edge cannot carry ({label1}, {label2})")
        inv_d = (inv_a * inv_a - nf.yBo * nf.yBi).inverse()
        if label1 != label2:
            return inv_a * inv_d
        if label1 == I:
            return nf.yBo * inv_d
        return nf.yBi * inv_d
    if kind == ORTHOGONAL:
        if label1 not in COMPOSITE_LABELS or label2 not in COMPOSITE_LABELS:
            raise LabelError(
                f"orthogonal edge cannot carry ({label1}, {label2})")
        inv_d = (inv_a * inv_a - nf.yB * nf.yB).inverse()
        if label1 == label2:
            return inv_a * inv_d
        return nf.yB * inv_d
    raise LabelError(f"unknown edge kind {kind!r}")


def sector_counts(labels: tuple[str, ...]) -> tuple[int, int]:
    """(q, p): cyclic counts of i-after-i and o-after-o sectors."""
    q = p = 0
    k = len(labels)
    for j, b in enumerate(labels):
        a, c = LAST[b], FIRST[labels[(j + 1) % k]]
        if a == "i" and c == "i":
            q += 1
        elif a == "o" and c == "o":
            p += 1
    return q, p


def vertex_factor(quantity: str, k: int, labels: tuple[str, ...],
                  tf: TreeFunctions) -> Series:
    """Vertex contribution -(1/N)*V_k(labels), untying correction included.

    ``labels`` is the tilde-transformed stub sequence read around the vertex.
    """
    if k < 3 or len(labels) != k:
        raise ValueError("vertex degree must be >= 3 and match the labels")
    q, p = sector_counts(labels)
    one = Series.const(1, "r", tf.K)
    if quantity == TRANSMISSION:
        core = (tf.f ** q) * (tf.fhat ** p)
        if q == k:
            # f^k * (1/zeta2^(k-1)) = zeta2 * u^k
            core = core - (tf.u ** k).scale(Poly.zeta2())
        elif p == k:
            core = core - (tf.uhat ** k).scale(Poly.zeta1())
        return -core * ((one - tf.h).inverse() ** k)
    if quantity == REFLECTION:
        core = tf.f ** (q + p)
        if q + p == k:
            core = core - (tf.u ** k).scale(Poly.zeta1())
        return -core * ((one - tf.f * tf.f).inverse() ** k)
    raise ValueError(f"unknown quantity {quantity!r}")


class ContribCalculator:
    """Memoizing front end over the factor functions for one quantity.

    The distinct factor values are few (a handful of edges, vertices keyed
    by (degree, q, p)), so the sweep over assignments reduces to dictionary
    lookups once warm.
    """

    def __init__(self, tf: TreeFunctions):
        self.tf = tf
        self.nf = node_factors(tf)
        self._edges: dict[tuple, Series] = {}
        self._vertices: dict[tuple, Series] = {}

    def edge(self, kind: str, label1: str, label2: str) -> Series:
        key = (kind, label1, label2)
        v = self._edges.get(key)
        if v is None:
            v = edge_factor(kind, label1, label2, self.nf, self.tf)
            self._edges[key] = v
        return v

    def vertex(self, labels: tuple[str, ...]) -> Series:
        k = len(labels)
        q, p = sector_counts(labels)
        if self.tf.quantity == REFLECTION:
            key = (k, q + p, 0)
        else:
            key = (k, q, p)
        v = self._vertices.get(key)
        if v is None:
            v = vertex_factor(self.tf.quantity, k, labels, self.tf)
            self._vertices[key] = v
        return v
