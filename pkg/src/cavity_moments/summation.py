"""Assignment sweep and assembly of the moment generating functions.

For one base structure the sum runs over all 4**m admissible edge-end label
assignments; each assignment contributes a product of composite-edge and
vertex factors.  Because the distinct factor series are few, the sweep is
reduced to a tally: for every assignment we record the multiset of factor
ids (a numpy row, sorted and deduplicated), and only the distinct multisets
are ever multiplied out as series.  Tallies from all structures of a genus
are merged with their 1/(2m) weights before any series product is taken, so
each distinct product is computed exactly once per assembly.
"""

from __future__ import annotations

import bisect
import threading

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .algebra import (BasisError, ParityViolationError, Poly, Rational,
                      Series)
from . import basegen
from .basegen import BaseStructure, ORTHOGONAL, UNITARY
from .contrib import (COMPOSITE_LABELS, ContribCalculator, HAT,
                      SINGLE_LABELS, TILDE)
from . import trees
from .trees import REFLECTION, TRANSMISSION, TreeFunctions

DEFAULT_GUARD = 2  # extra s-orders carried by the tree functions


# ---------------------------------------------------------------------------
# Assignments (reference implementation)
# ---------------------------------------------------------------------------

def sweep_assignments(structure: BaseStructure) -> Iterable[dict[int, str]]:
    """Yield all 4**m assignments as {signed label: end label} maps.

    Two free binary choices per edge; the barred ends follow from
    b(z) = hat(b(bar(epsilon(z)))).  This straightforward version backs the
    tests; the tally sweep below is the fast path.
    """
    m = structure.m
    edges = structure.edges
    choices = []
    for e in edges:
        alphabet = SINGLE_LABELS if e.kind == UNITARY else COMPOSITE_LABELS
        choices.append(alphabet)

    def emit(j: int, acc: dict[int, str]):
        if j == m:
            yield dict(acc)
            return
        (s, r) = edges[j].half_cycle
        for b1 in choices[j]:
            for b2 in choices[j]:
                acc[s] = b1
                acc[r] = b2
                acc[-r] = HAT[b1]
                acc[-s] = HAT[b2]
                yield from emit(j + 1, acc)

    yield from emit(0, {})


# ---------------------------------------------------------------------------
# Factor registry and tally sweep
# ---------------------------------------------------------------------------

def _edge_descriptor(kind: str, b1: str, b2: str) -> tuple:
    if kind == UNITARY:
        return ("E", UNITARY) + tuple(sorted((b1, b2)))
    return ("E", ORTHOGONAL, "same" if b1 == b2 else "diff")


class FactorTable:
    """Maps factor descriptors to dense ids and realizes them as series."""

    def __init__(self, calc: ContribCalculator):
        self.calc = calc
        self.ids: dict[tuple, int] = {}
        self.descs: list[tuple] = []
        self.series: list[Series] = []
        self._products: dict[tuple[int, ...], Series] = {}
        self._lock = threading.Lock()

    def id_of(self, desc: tuple) -> int:
        i = self.ids.get(desc)
        if i is None:
            with self._lock:
                i = self.ids.get(desc)
                if i is None:
                    i = len(self.series)
                    self.series.append(self._realize(desc))
                    self.descs.append(desc)
                    self.ids[desc] = i
        return i

    def _realize(self, desc: tuple) -> Series:
        from .contrib import sector_counts, vertex_factor
        if desc[0] == "E":
            if desc[1] == UNITARY:
                return self.calc.edge(UNITARY, desc[2], desc[3])
            lab2 = "io" if desc[2] == "same" else "oi"
            return self.calc.edge(ORTHOGONAL, "io", lab2)
        _, k, q, p = desc
        labels = self._labels_for(k, q, p)
        assert sector_counts(labels) == (q, p)
        return vertex_factor(self.calc.tf.quantity, k, labels, self.calc.tf)

    @staticmethod
    def _labels_for(k: int, q: int, p: int) -> tuple[str, ...]:
        """A label cycle realizing the sector counts (q, p).

        Choose the cyclic gap sequence first (q matches at i, p at o, the
        rest mixed); each label is then read off as (second letter of the
        previous gap, first letter of the next gap).
        """
        if q + p > k:
            raise ValueError(f"unrealizable sector counts k={k}, q={q}, p={p}")
        gaps = [("i", "i")] * q + [("o", "o")] * p + \
            [("o", "i")] * (k - q - p)
        name = {("i", "i"): "i", ("o", "o"): "o",
                ("i", "o"): "io", ("o", "i"): "oi"}
        return tuple(name[(gaps[j - 1][1], gaps[j][0])] for j in range(k))

    def product(self, key: tuple[int, ...]) -> Series:
        """Product of the factor series with the given sorted id multiset."""
        v = self._products.get(key)
        if v is not None:
            return v
        if not key:
            v = Series.const(1, "r", self.calc.tf.K)
        elif len(key) == 1:
            v = self.series[key[0]]
        else:
            v = self.product(key[:-1]) * self.series[key[-1]]
        self._products[key] = v
        return v


def structure_tally(structure: BaseStructure, quantity: str,
                    table: FactorTable) -> dict[tuple[int, ...], int]:
    """Count assignments by their multiset of factor ids."""
    m = structure.m
    n = 2 * m
    total = 4 ** m
    codes = np.arange(total, dtype=np.uint32)
    bits = np.empty((total, 2 * m), dtype=np.uint8)
    for t in range(2 * m):
        bits[:, t] = (codes >> np.uint32(t)) & np.uint32(1)

    # stub -> (free variable, vertex-label bit flip, is orthogonal kind)
    stub_var = [0] * (2 * n)
    stub_flip = [0] * (2 * n)
    stub_orth = [False] * (2 * n)
    refl = quantity == REFLECTION

    cols = []
    for j, e in enumerate(structure.edges):
        s, r = e.half_cycle
        z1 = s - 1 if s > 0 else n + (-s) - 1
        z2 = r - 1 if r > 0 else n + (-r) - 1
        orth = e.kind == ORTHOGONAL
        for z, var, derived in ((z1, 2 * j, False), (z2, 2 * j + 1, False),
                                ((z2 + n) % (2 * n), 2 * j, True),
                                ((z1 + n) % (2 * n), 2 * j + 1, True)):
            stub_var[z] = var
            # the vertex stub carries tilde(b); hat on the derived end
            # cancels the tilde flip only on orthogonal edges
            stub_flip[z] = 0 if (derived and orth) else 1
            stub_orth[z] = orth
        # edge factor ids for the four bit combinations
        alphabet = COMPOSITE_LABELS if orth else SINGLE_LABELS
        tab = np.empty(4, dtype=np.uint16)
        for b1 in (0, 1):
            for b2 in (0, 1):
                desc = _edge_descriptor(e.kind, alphabet[b1], alphabet[b2])
                tab[b1 * 2 + b2] = table.id_of(desc)
        cols.append(tab[bits[:, 2 * j] * 2 + bits[:, 2 * j + 1]])

    for vtx in structure.vertices:
        cyc = [z - 1 if z > 0 else n + (-z) - 1 for z in vtx.half_cycle]
        k = len(cyc)
        q = np.zeros(total, dtype=np.uint8)
        p = np.zeros(total, dtype=np.uint8)
        lasts = []
        firsts = []
        for z in cyc:
            b = bits[:, stub_var[z]] ^ stub_flip[z]
            if stub_orth[z]:
                firsts.append(b)          # io -> first i(0); oi -> first o(1)
                lasts.append(1 - b)       # io -> last o(1);  oi -> last i(0)
            else:
                firsts.append(b)
                lasts.append(b)
        for j in range(k):
            L, F = lasts[j], firsts[(j + 1) % k]
            q += (L == 0) & (F == 0)
            p += (L == 1) & (F == 1)
        code = q.astype(np.int16) * (k + 1) + p
        uniq = np.unique(code)
        remap = np.zeros(int(uniq.max()) + 1, dtype=np.uint16)
        for c in uniq:
            qq, pp = int(c) // (k + 1), int(c) % (k + 1)
            desc = ("V", k, qq + pp, 0) if refl else ("V", k, qq, pp)
            remap[c] = table.id_of(desc)
        cols.append(remap[code])

    # Fold the factor-id columns into one state per assignment.  States are
    # canonical (sorted) id multisets, so they collapse to a few hundred
    # per structure; a bincount pass per column replaces sorting the whole
    # (4**m x (E+V)) matrix.
    base = len(table.series)
    multisets: list[tuple[int, ...]] = [()]
    state = np.zeros(total, dtype=np.int64)
    for col in cols:
        key = state * base + col
        size = len(multisets) * base
        live = np.flatnonzero(np.bincount(key, minlength=size))
        index: dict[tuple[int, ...], int] = {}
        grown: list[tuple[int, ...]] = []
        lookup = np.empty(size, dtype=np.int64)
        for u in live:
            parent, cid = divmod(int(u), base)
            ms = multisets[parent]
            pos = bisect.bisect(ms, cid)
            ms = ms[:pos] + (cid,) + ms[pos:]
            j = index.get(ms)
            if j is None:
                j = len(grown)
                index[ms] = j
                grown.append(ms)
            lookup[u] = j
        state = lookup[key]
        multisets = grown
    counts = np.bincount(state, minlength=len(multisets))
    return {ms: int(c) for ms, c in zip(multisets, counts) if c}


def structure_sum(structure: BaseStructure, quantity: str,
                  tf: TreeFunctions, calc: ContribCalculator | None = None,
                  table: FactorTable | None = None) -> Series:
    """Sum over all assignments of the product of edge and vertex factors.

    The N powers are stripped (see module contrib), so this is N**(E-V)
    times the physical sum.  The result contains only even powers of r.
    """
    if table is None:
        if calc is None:
            calc = ContribCalculator(tf)
        table = FactorTable(calc)
    tally = structure_tally(structure, quantity, table)
    acc = Series.zero("r", tf.K)
    for key, count in sorted(tally.items()):
        acc = acc + table.product(key).scale(count)
    for nn in range(1, tf.K + 1, 2):
        if not acc.coeffs[nn].is_zero():
            raise ParityViolationError(
                f"structure sum has odd power r^{nn}: "
                f"{structure.half_pair_string()}")
    return acc


# ---------------------------------------------------------------------------
# Assembly
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConjectureRecord:
    status: str                  # "ok" or "violation"
    beta: int
    genus2: int
    basis: tuple[str, str]       # e.g. ("xi", "s") or ("xi*s", "s")
    entries: tuple[tuple[int, int, Rational], ...]  # (i, j, coefficient)
    detail: str = ""


@dataclass(frozen=True)
class GenFunResult:
    quantity: str
    symmetry: str
    genus2: int
    truncation: int
    series: Series               # in s
    basis: str                   # "xi" or "zeta1"
    conjecture: Optional[ConjectureRecord] = None


def assemble(genus2: int, symmetry: str, quantity: str, K: int,
             cache_dir: str | None = None, threads: int = 1,
             extract: bool = True) -> GenFunResult:
    """Sum all base structures of one genus into the generating function.

    ``K`` is the truncation in s of the result.  Tree functions are carried
    with a guard of DEFAULT_GUARD extra s-orders.
    """
    if K < 2:
        raise ValueError("truncation must be at least 2")
    Kr = 2 * (K + DEFAULT_GUARD)
    tf = trees.solve_tree_functions(quantity, Kr)
    calc = ContribCalculator(tf)
    table = FactorTable(calc)

    if genus2 == 1:
        # At first order the only map is the closed loop with a half twist,
        # which has no vertex of degree >= 3 and is handled by a direct
        # cycle sum over its node decorations (empty for the unitary class,
        # where every map is orientable).
        if symmetry == basegen.ORTHOGONAL:
            total = _twisted_loop_hat(calc)
        else:
            total = Series.zero("r", Kr)
        return _finish(total, genus2, symmetry, quantity, K, extract)

    weighted = _collect_weighted(genus2, symmetry, quantity, table,
                                 cache_dir, threads)
    return _finish(_sum_products(weighted, table), genus2, symmetry,
                   quantity, K, extract)


def assemble_pair(genus2: int, symmetry: str, K: int,
                  cache_dir: str | None = None, threads: int = 1,
                  extract: bool = True) -> dict[str, GenFunResult]:
    """Both generating functions of one genus from a single sweep.

    The assignment tally does not depend on the quantity, only the factor
    series do, so transmission and reflection can share the expensive part;
    the reflection ids are obtained by collapsing each vertex descriptor
    (k, q, p) to (k, q + p, 0).
    """
    if genus2 == 1:
        return {q: assemble(genus2, symmetry, q, K, cache_dir, threads,
                            extract)
                for q in (TRANSMISSION, REFLECTION)}
    if K < 2:
        raise ValueError("truncation must be at least 2")
    Kr = 2 * (K + DEFAULT_GUARD)
    table_t = FactorTable(ContribCalculator(
        trees.solve_tree_functions(TRANSMISSION, Kr)))
    weighted = _collect_weighted(genus2, symmetry, TRANSMISSION, table_t,
                                 cache_dir, threads)
    out = {TRANSMISSION: _finish(_sum_products(weighted, table_t), genus2,
                                 symmetry, TRANSMISSION, K, extract)}

    table_r = FactorTable(ContribCalculator(
        trees.solve_tree_functions(REFLECTION, Kr)))
    remapped: dict[tuple[int, ...], Rational] = {}
    for key, c in weighted.items():
        new_key = tuple(sorted(
            table_r.id_of(_reflected_desc(table_t.descs[i])) for i in key))
        remapped[new_key] = remapped.get(new_key, Rational(0)) + c
    out[REFLECTION] = _finish(_sum_products(remapped, table_r), genus2,
                              symmetry, REFLECTION, K, extract)
    return out


def _reflected_desc(desc: tuple) -> tuple:
    if desc[0] == "V":
        _, k, q, p = desc
        return ("V", k, q + p, 0)
    return desc


def _collect_weighted(genus2: int, symmetry: str, quantity: str,
                      table: FactorTable, cache_dir: str | None,
                      threads: int) -> dict[tuple[int, ...], Rational]:
    structures = []
    for m in basegen.genus_m_range(genus2):
        structures.extend(
            basegen.iter_structures(m, symmetry, genus2, cache_dir))

    def tally_one(structure):
        V, E = len(structure.vertices), structure.m
        if V - E != 1 - genus2:
            raise AssertionError(
                "inconsistent N-power bookkeeping: "
                f"V-E={V - E}, 1-2g={1 - genus2}")
        return structure.m, structure_tally(structure, quantity, table)

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = pool.map(tally_one, structures)
            weighted = _merge_tallies(results)
    else:
        weighted = _merge_tallies(map(tally_one, structures))
    return weighted


def _merge_tallies(results) -> dict[tuple[int, ...], Rational]:
    weighted: dict[tuple[int, ...], Rational] = {}
    for m, tally in results:
        w = Rational(1, 2 * m)
        for key, count in tally.items():
            weighted[key] = weighted.get(key, Rational(0)) + w * count
    return weighted


def _sum_products(weighted: dict[tuple[int, ...], Rational],
                  table: FactorTable) -> Series:
    total = Series.zero("r", table.calc.tf.K)
    for key in sorted(weighted):
        c = weighted[key]
        if c != 0:
            total = total + table.product(key).scale(c)
    return total


def _twisted_loop_hat(calc: ContribCalculator) -> Series:
    """Cycle sum over node decorations of the half-twisted loop.

    Going once around the loop the two local sides of the curve are
    exchanged, so consistency forces an odd number n of odd nodes; each
    arrangement of n odd nodes separated by runs of even nodes is counted
    n times by its rotations, whence the 1/n weights.
    """
    nf = calc.nf
    Kr = calc.tf.K
    one = Series.const(1, "r", Kr)
    x = nf.yB * (one - nf.yA).inverse()
    acc = Series.zero("r", Kr)
    xp = x
    n = 1
    while n <= Kr:
        acc = acc + xp.scale(Rational(1, n))
        xp = xp * x * x
        n += 2
    return acc


def _finish(total: Series, genus2: int, symmetry: str, quantity: str,
            K: int, extract: bool) -> GenFunResult:
    hat_series = total.reindex_r_to_s().truncate(K)
    series = hat_series.s_d_ds()

    if quantity == TRANSMISSION:
        if not series.is_lead_symmetric():
            raise BasisError(
                "transmission result not symmetric under lead exchange")
        basis = "xi"
    else:
        basis = "zeta1"

    conjecture = None
    if extract and not series.is_zero():
        conjecture = conjecture_extract_series(
            series, quantity, symmetry, genus2)
    return GenFunResult(quantity, symmetry, genus2, K, series, basis,
                        conjecture)


# ---------------------------------------------------------------------------
# Closed-form catalogue used for cross-checks
# ---------------------------------------------------------------------------

def _half_pow(base: Series, num: int) -> Series:
    """base**(num/2) for even or odd num (constant term of base must be 1)."""
    if num % 2 == 0:
        return base ** (num // 2)
    return base.sqrt() ** num


def _xi_s(K: int) -> Series:
    return Series.variable("s", K).scale(Poly.xi())


def closed_form_series(formula_id: str, K: int) -> Series:
    """Series expansion of one of the catalogued generating functions."""
    s = Series.variable("s", K)
    one = Series.const(1, "s", K)
    xs = _xi_s(K)                      # xi*s
    xi = Poly.xi()

    def poly_in(*terms):
        """sum of coefficient * xs**a * s**b terms given as (c, a, b)."""
        acc = Series.zero("s", K)
        for c, a, b in terms:
            acc = acc + (xs ** a * s ** b).scale(c)
        return acc

    if formula_id == "T0":
        return trees.leading_order_closed_form(TRANSMISSION, "unitary", K)
    if formula_id == "R0":
        return trees.leading_order_closed_form(REFLECTION, "unitary", K)
    if formula_id == "T1O":
        return -xs * ((one - s) * (one - s + xs.scale(4))).inverse()
    if formula_id == "T2U":
        return -(xs * xs) * _half_pow(one - s, -3) \
            * _half_pow(one - s + xs.scale(4), -5)
    if formula_id == "T2O":
        bracket = xs * (s.scale(4) - one.scale(3)) + one - s * s
        return xs * bracket * _half_pow(one - s, -3) \
            * _half_pow(one - s + xs.scale(4), -5)
    if formula_id == "T3O":
        bracket = poly_in((1, 0, 2), (6, 0, 1), (1, 0, 0), (-8, 1, 1),
                          (-24, 1, 0), (16, 2, 0))
        return -xs * bracket * ((one - s + xs.scale(4)).inverse() ** 4)
    if formula_id == "T4U":
        bracket = poly_in(
            (1, 0, 0), (4, 0, 1), (-10, 0, 2), (4, 0, 3), (1, 0, 4),
            (-20, 1, 0), (40, 1, 1), (-12, 1, 2), (-8, 1, 3),
            (9, 2, 0), (-16, 2, 1), (16, 2, 2))
        return -(xs * xs) * bracket * _half_pow(one - s, -5) \
            * _half_pow(one - s + xs.scale(4), -11)
    if formula_id == "T4O":
        bracket = poly_in(
            (1, 0, 0), (20, 0, 1), (-43, 0, 2), (43, 0, 4), (-20, 0, 5),
            (-1, 0, 6), (-99, 1, 0), (68, 1, 1), (326, 1, 2), (-448, 1, 3),
            (141, 1, 4), (12, 1, 5), (518, 2, 0), (-1304, 2, 1),
            (1002, 2, 2), (-168, 2, 3), (-48, 2, 4), (-165, 3, 0),
            (408, 3, 1), (-304, 3, 2), (64, 3, 3))
        return xs * bracket * _half_pow(one - s, -5) \
            * _half_pow(one - s + xs.scale(4), -11)
    if formula_id == "R1O":
        return xs * (one - xs.scale(4)).inverse()
    if formula_id == "R2O":
        bracket = xs * (s + one.scale(3)) - s.scale(2) + one
        return -xs * bracket * _half_pow(one - xs.scale(4), -5)
    if formula_id == "R2U":
        return (xs * xs) * (s - one) * _half_pow(one - xs.scale(4), -5)
    if formula_id == "R3O":
        bracket = poly_in((8, 0, 2), (-8, 0, 1), (1, 0, 0), (-32, 1, 1),
                          (24, 1, 0), (16, 2, 0))
        return xs * bracket * ((one - xs.scale(4)).inverse() ** 4)
    if formula_id == "R4O":
        bracket = poly_in(
            (1, 0, 0), (-26, 0, 1), (-52, 1, 3), (198, 2, 2), (3, 3, 3),
            (4, 2, 3), (-17, 3, 2), (-87, 3, 1), (392, 1, 2), (-768, 2, 1),
            (-427, 1, 1), (518, 2, 0), (165, 3, 0), (-48, 0, 3),
            (72, 0, 2), (99, 1, 0))
        return -xs * bracket * _half_pow(one - xs.scale(4), -11)
    if formula_id == "R4U":
        bracket = poly_in(
            (1, 0, 0), (20, 1, 0), (9, 2, 0), (-8, 0, 1), (-20, 1, 1),
            (-2, 2, 1), (8, 0, 2), (-8, 1, 2), (9, 2, 2))
        return (xs * xs) * (s - one) * bracket \
            * _half_pow(one - xs.scale(4), -11)
    raise ValueError(f"unknown formula id {formula_id!r}")

CLOSED_FORM_IDS = ("T0", "T1O", "T2U", "T2O", "T3O", "T4U", "T4O",
                   "R0", "R1O", "R2O", "R2U", "R3O", "R4U", "R4O")


# ---------------------------------------------------------------------------
# Conjectured rational form extraction
# ---------------------------------------------------------------------------

def _poly_div_xi(p: Poly, power: int) -> Poly:
    """Exact division of p by xi**power; raises BasisError on remainder."""
    xi = Poly.xi()
    for _ in range(power):
        # divide by (zeta1 - zeta1^2): long division from the top
        cs = list(p.coeffs)
        if not cs:
            break
        out = [Rational(0)] * max(len(cs) - 1, 0)
        for d in range(len(cs) - 1, 1, -1):
            c = cs[d]
            if c == 0:
                continue
            out[d - 2] = -c
            cs[d] = Rational(0)
            cs[d - 1] += c
        if cs and (cs[0] != 0 or (len(cs) > 1 and cs[1] != 0)):
            raise BasisError("polynomial not divisible by xi")
        p = Poly(out)
    return p


def conjecture_extract_series(series: Series, quantity: str, symmetry: str,
                              genus2: int) -> ConjectureRecord:
    """Strip the conjectured prefactor and report the residual polynomial.

    Transmission: series = (xi s)^beta (1-s)^{-(2g+1)/2}
    (1-s+4 xi s)^{-(6g-1)/2} P(xi, s) with deg_xi P <= 2g-beta and
    deg_s P <= 2(2g-beta).  Reflection: series = (xi s)^beta (s-1)^{beta-1}
    (1-4 xi s)^{-(6g-1)/2} Q(xi s, s), both degrees <= 2g-beta.
    """
    beta = 1 if symmetry == ORTHOGONAL else 2
    K = series.K
    one = Series.const(1, "s", K)
    s = Series.variable("s", K)
    xs = _xi_s(K)
    if quantity == TRANSMISSION:
        q = series * _half_pow(one - s, genus2 + 1) \
            * _half_pow(one - s + xs.scale(4), 3 * genus2 - 1)
        basis = ("xi", "s")
    else:
        q = series * _half_pow(one - xs.scale(4), 3 * genus2 - 1)
        for _ in range(beta - 1):
            q = q * (s - one).inverse()
        basis = ("xi*s", "s")

    # divide by s^beta
    for nn in range(beta):
        if not q.coeffs[nn].is_zero():
            return ConjectureRecord("violation", beta, genus2, basis, (),
                                    f"nonzero coefficient below s^{beta}")
    q = Series("s", K - beta, q.coeffs[beta:])

    deg = genus2 - beta
    max_s = 2 * deg if quantity == TRANSMISSION else deg
    max_xi = deg
    entries = []
    try:
        for nn, poly in enumerate(q.coeffs):
            if poly.is_zero():
                continue
            xi_coeffs = _poly_div_xi(poly, beta).to_xi_basis()
            for i, c in enumerate(xi_coeffs):
                if c == 0:
                    continue
                if quantity == TRANSMISSION:
                    jj = nn
                else:
                    # coefficient of xi^i s^nn is (xi s)^i s^(nn - i)
                    jj = nn - i
                    if jj < 0:
                        return ConjectureRecord(
                            "violation", beta, genus2, basis, (),
                            f"xi power exceeds s power at s^{nn}")
                if i > max_xi or jj > max_s:
                    return ConjectureRecord(
                        "violation", beta, genus2, basis, (),
                        f"degree bound exceeded: xi^{i} s-slot {jj}")
                entries.append((i, jj, c))
    except BasisError as exc:
        return ConjectureRecord("violation", beta, genus2, basis, (),
                                str(exc))
    entries.sort(key=lambda t: (t[0], t[1]))
    return ConjectureRecord("ok", beta, genus2, basis, tuple(entries))


def conjecture_extract(result: GenFunResult) -> ConjectureRecord:
    return conjecture_extract_series(result.series, result.quantity,
                                     result.symmetry, result.genus2)
