"""Enumeration of base structures: unicellular maps with minimum degree 3.

A base structure with ``m`` edges is encoded by a palindromic fixed-point-free
involution ``epsilon`` on the ``4m`` edge-side labels; the vertex permutation
``nu = phi . epsilon`` (with ``phi`` the canonical boundary walk) must have no
cycles of length 1 or 2.  The orientable ("unitary") structures are exactly
those whose edges pair plain labels with plain labels; they are enumerated on
the halved, bar-free carrier and lifted.

Enumeration walks the canonical half-representation ``(s1 r1)...(sV rV)``
directly: at each step ``s`` is forced to be the least unused label, so each
structure is produced exactly once and no isomorphism rejection is needed.
Partial cycles of ``nu`` are tracked incrementally so that degree-1/2 vertices
(and, when a target genus is given, impossible vertex counts) prune the search
early.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .perm import Perm, bar_involution

CACHE_FORMAT_VERSION = 1

UNITARY = "unitary"
ORTHOGONAL = "orthogonal"


class InvalidStructureError(ValueError):
    """Encoding does not satisfy the base-structure invariants."""


def face_perm(m: int) -> Perm:
    """Canonical boundary walk ``(1 2 .. 2m)(bar(2m) .. bar(2) bar(1))``."""
    if m < 1:
        raise ValueError("need at least one edge")
    n = 2 * m
    images = [0] * (2 * n)
    for i in range(n):
        images[i] = (i + 1) % n
        # the barred cycle runs in the opposite label order
        images[n + i] = n + (i - 1) % n
    return Perm(images, n, barred=True)


def reduced_face_perm(m: int) -> Perm:
    """The bar-free boundary walk ``(1 2 .. 2m)`` of an orientable map."""
    n = 2 * m
    return Perm([(i + 1) % n for i in range(n)], n, barred=False)


def vertex_perm(epsilon: Perm) -> Perm:
    """``nu = phi . epsilon`` for a valid canonical involution ``epsilon``."""
    _validate_involution(epsilon)
    m = epsilon.n // 2
    return face_perm(m).compose(epsilon)


def _validate_involution(epsilon: Perm):
    n = epsilon.n
    if not epsilon.barred or n % 2:
        raise InvalidStructureError("epsilon must act on a barred 4m-carrier")
    for i, j in enumerate(epsilon.images):
        if j == i:
            raise InvalidStructureError("epsilon has a fixed point")
        if epsilon.images[j] != i:
            raise InvalidStructureError("epsilon is not an involution")
        if j == (i + n) % (2 * n):
            raise InvalidStructureError("epsilon pairs a label with its bar")
    tt = bar_involution(n)
    if tt.compose(epsilon) != epsilon.compose(tt):
        raise InvalidStructureError("epsilon does not commute with the bar map")


@dataclass(frozen=True)
class EdgeRecord:
    """One edge, named by the representative 2-cycle of the canonical half."""
    half_cycle: tuple[int, int]  # signed labels (s, r), s plain
    kind: str                    # UNITARY or ORTHOGONAL


@dataclass(frozen=True)
class VertexRecord:
    """One vertex, named by one of its two mirror cycles of ``nu``."""
    half_cycle: tuple[int, ...]  # signed labels
    degree: int


@dataclass(frozen=True)
class BaseStructure:
    m: int
    half_pairs: tuple[tuple[int, int], ...]  # canonical half of epsilon
    epsilon: Perm
    nu: Perm
    edges: tuple[EdgeRecord, ...]
    vertices: tuple[VertexRecord, ...]
    genus2: int
    orientable: bool

    @classmethod
    def from_half_pairs(cls, m: int,
                        pairs: list[tuple[int, int]]) -> "BaseStructure":
        """Build and validate a structure from the canonical half of epsilon.

        ``pairs`` are signed labels, e.g. ``[(1, 4), (2, -3), (5, -6)]``.
        """
        n = 2 * m
        cycles = [list(p) for p in pairs]
        cycles += [[-r, -s] for s, r in pairs]
        epsilon = Perm.from_cycles(cycles, n, barred=True)
        nu = vertex_perm(epsilon)

        edges = tuple(
            EdgeRecord((s, r), UNITARY if s > 0 and r > 0 else ORTHOGONAL)
            for s, r in pairs)
        if len(edges) != m:
            raise InvalidStructureError(f"expected {m} edges, got {len(edges)}")

        # kappa(z) = epsilon(bar z) conjugates nu to its inverse, so it maps
        # each side cycle of a vertex to the opposite-side cycle
        nu_cycles = nu.cycles_indices()
        if len(nu_cycles) % 2:
            raise InvalidStructureError("nu cycles do not pair into vertices")
        vertices = []
        seen: set[frozenset[int]] = set()
        for cyc in nu_cycles:
            if len(cyc) < 3:
                raise InvalidStructureError("vertex of degree 1 or 2")
            if frozenset(cyc) in seen:
                continue  # keep the first (lowest-start) cycle of each pair
            partner = frozenset(
                epsilon.images[(i + n) % (2 * n)] for i in cyc)
            if partner == frozenset(cyc):
                raise InvalidStructureError("a nu cycle is its own partner")
            seen.add(partner)
            labels = tuple(z + 1 if z < n else -(z - n + 1) for z in cyc)
            vertices.append(VertexRecord(labels, len(cyc)))
        n_vertices = len(vertices)
        if 2 * n_vertices != len(nu_cycles):
            raise InvalidStructureError("nu cycles failed to pair off")

        genus2 = 1 + m - n_vertices
        if genus2 < 2:
            raise InvalidStructureError(f"genus2 = {genus2} below 2")
        orientable = all(e.kind == UNITARY for e in edges)
        return cls(m, tuple((s, r) for s, r in pairs), epsilon, nu, edges,
                   tuple(vertices), genus2, orientable)

    def half_pair_string(self) -> str:
        """Cache/CLI encoding, e.g. ``"1:4,2:-3,5:-6"``."""
        return ",".join(f"{s}:{r}" for s, r in self.half_pairs)


def genus2_of(structure: BaseStructure) -> int:
    """``1 + E - V``; even for orientable maps, possibly odd otherwise."""
    return 1 + structure.m - len(structure.vertices)


# ---------------------------------------------------------------------------
# Backtracking enumeration
# ---------------------------------------------------------------------------

class _ChainTracker:
    """Incremental union of the partial cycles of ``nu`` with undo support."""

    __slots__ = ("head", "tail", "length", "closed", "closed_nodes",
                 "chains", "chain_nodes", "journal")

    def __init__(self, size: int):
        self.head: dict[int, int] = {}    # chain end -> chain start
        self.tail: dict[int, int] = {}    # chain start -> chain end
        self.length: dict[int, int] = {}  # chain start -> node count
        self.closed: list[int] = []       # lengths of closed cycles
        self.closed_nodes = 0
        self.chains = 0
        self.chain_nodes = 0
        self.journal: list[tuple] = []

    def mark(self) -> int:
        return len(self.journal)

    def undo(self, mark: int):
        while len(self.journal) > mark:
            op = self.journal.pop()
            kind = op[0]
            if kind == "set":
                _, d, k, old = op
                if old is None:
                    del d[k]
                else:
                    d[k] = old
            elif kind == "close":
                self.closed.pop()
                self.closed_nodes -= op[1]
            else:  # counters
                _, dchains, dnodes = op
                self.chains -= dchains
                self.chain_nodes -= dnodes

    def _set(self, d: dict, k: int, v):
        self.journal.append(("set", d, k, d.get(k)))
        if v is None:
            del d[k]
        else:
            d[k] = v

    def add_link(self, a: int, b: int) -> int:
        """Record ``nu(a) = b``.  Returns the closed cycle length, or 0."""
        # a has no outgoing link yet, so it is a chain end or untouched;
        # b has no incoming link yet, so it is a chain start or untouched
        sa = self.head.get(a, a)          # start of the chain ending at a
        a_single = a not in self.head
        b_single = b not in self.tail
        eb = self.tail.get(b, b)
        la = self.length.get(sa, 1)
        lb = self.length.get(b, 1)
        if sa == b:
            # closing the cycle sa -> ... -> a -> b == sa
            self.journal.append(("close", la))
            self.closed.append(la)
            self.closed_nodes += la
            if la > 1:
                self.journal.append(("cnt", -1, -la))
                self.chains -= 1
                self.chain_nodes -= la
                self._set(self.head, a, None)
                self._set(self.tail, b, None)
                self._set(self.length, b, None)
            return la
        dchains = 1 - (0 if a_single else 1) - (0 if b_single else 1)
        dnodes = (1 if a_single else 0) + (1 if b_single else 0)
        self.journal.append(("cnt", dchains, dnodes))
        self.chains += dchains
        self.chain_nodes += dnodes
        if a in self.head:
            self._set(self.head, a, None)
        if b in self.tail:
            self._set(self.tail, b, None)
            self._set(self.length, b, None)
        self._set(self.tail, sa, eb)
        self._set(self.head, eb, sa)
        self._set(self.length, sa, la + lb)
        return 0


def _enumerate_half_pairs(m: int, symmetry: str, genus2: int | None):
    """Yield canonical half-pair lists (internal indices) for valid bases."""
    if symmetry not in (UNITARY, ORTHOGONAL):
        raise ValueError(f"unknown symmetry {symmetry!r}")
    orth = symmetry == ORTHOGONAL
    n = 2 * m                      # plain labels
    size = 2 * n if orth else n    # carrier size
    per_pair = 4 if orth else 2    # labels consumed per chosen pair

    phi = face_perm(m).images if orth else reduced_face_perm(m).images

    target_cycles = None
    max_cycle = size  # node-count bound for any single nu cycle / chain
    if genus2 is not None:
        n_vertices = m + 1 - genus2
        if n_vertices < 1 or 3 * n_vertices > 2 * m:
            return
        target_cycles = 2 * n_vertices if orth else n_vertices
        # cycle lengths sum to 2m per mirror class (mirror pairs of nu
        # cycles have equal length), so with every vertex of degree >= 3
        # a single cycle has at most this many labels
        max_cycle = n - 3 * (n_vertices - 1)

    used = [False] * size
    tracker = _ChainTracker(size)
    pairs: list[int] = []  # flat [s0, r0, s1, r1, ...]
    out = []

    def links_of(s: int, r: int):
        if orth:
            bs, br = (s + n) % (2 * n), (r + n) % (2 * n)
            return ((s, phi[r]), (r, phi[s]), (bs, phi[br]), (br, phi[bs]))
        return ((s, phi[r]), (r, phi[s]))

    def add_pair(s: int, r: int) -> bool:
        """Apply links; False (after partial application) on a dead end."""
        for a, b in links_of(s, r):
            closed = tracker.add_link(a, b)
            if closed:
                if closed < 3 or closed > max_cycle:
                    return False
                if target_cycles is not None and \
                        len(tracker.closed) > target_cycles:
                    return False
            else:
                start = tracker.head.get(b, b)
                if tracker.length.get(start, 1) > max_cycle:
                    return False
        if target_cycles is not None:
            untouched = size - tracker.chain_nodes - tracker.closed_nodes
            if len(tracker.closed) + tracker.chains + untouched // 3 \
                    < target_cycles:
                return False
        return True

    def recurse(placed: int):
        if placed == m:
            if target_cycles is None or len(tracker.closed) == target_cycles:
                out.append(list(pairs))
            return
        s = used.index(False)
        for r in range(s + 1, size):
            if used[r]:
                continue
            if orth:
                if r == s + n:            # (x, bar x) is not an edge
                    continue
                if r >= n and r - n <= s:  # need s < bar(r)
                    continue
            mark = tracker.mark()
            used[s] = used[r] = True
            if orth:
                used[(s + n) % (2 * n)] = used[(r + n) % (2 * n)] = True
            pairs.extend((s, r))
            if add_pair(s, r):
                recurse(placed + 1)
            pairs.pop(); pairs.pop()
            tracker.undo(mark)
            used[s] = used[r] = False
            if orth:
                used[(s + n) % (2 * n)] = used[(r + n) % (2 * n)] = False

    recurse(0)
    for flat in out:
        yield flat


def _half_pairs_to_labels(flat: list[int], m: int,
                          symmetry: str) -> list[tuple[int, int]]:
    n = 2 * m
    labels = []
    for i in range(0, len(flat), 2):
        s, r = flat[i], flat[i + 1]
        # enumeration indices are already in canonical order; convert to
        # signed labels (plain 0..n-1, barred n..2n-1 in the orthogonal case)
        rs = r + 1 if (symmetry == UNITARY or r < n) else -(r - n + 1)
        labels.append((s + 1, rs))
    return labels


def enumerate_structures(m: int, symmetry: str,
                         genus2: int | None = None):
    """Yield every base structure with ``m`` edges, one canonical
    representative each.  ``genus2`` restricts (and prunes) to one genus."""
    if m < 2:
        return
    for flat in _enumerate_half_pairs(m, symmetry, genus2):
        structure = BaseStructure.from_half_pairs(
            m, _half_pairs_to_labels(flat, m, symmetry))
        if genus2 is not None and structure.genus2 != genus2:
            raise AssertionError("targeted enumeration produced wrong genus")
        if symmetry == UNITARY and not structure.orientable:
            raise AssertionError("unitary enumeration produced twists")
        yield structure


def genus_m_range(genus2: int) -> range:
    """Edge counts that can occur at a given genus: ``2g <= m <= 3*2g - 3``."""
    return range(genus2, 3 * genus2 - 2)


def count_by_genus(genus2: int, symmetry: str,
                   cache_dir: str | None = None) -> dict[int, int]:
    """Exact number of base structures per edge count at one genus."""
    counts: dict[int, int] = {}
    for m in genus_m_range(genus2):
        n = sum(1 for _ in iter_structures(m, symmetry, genus2, cache_dir))
        if n:
            counts[m] = n
    return counts


# ---------------------------------------------------------------------------
# Persistence
# ---------------------------------------------------------------------------

def cache_path(cache_dir: str, m: int, symmetry: str, genus2: int) -> str:
    return os.path.join(cache_dir,
                        f"bases-v{CACHE_FORMAT_VERSION}-g{genus2}-{symmetry}-m{m}.txt")


def save_structures(path: str, structures: list[BaseStructure],
                    m: int, symmetry: str, genus2: int):
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(f"version={CACHE_FORMAT_VERSION} m={m} "
                 f"symmetry={symmetry} genus2={genus2}\n")
        for s in structures:
            fh.write(s.half_pair_string() + "\n")
    os.replace(tmp, path)


def load_structures(path: str, m: int, symmetry: str,
                    genus2: int) -> list[BaseStructure]:
    """Load and re-validate cached structures; raises on any mismatch."""
    with open(path) as fh:
        header = fh.readline().strip()
        expected = (f"version={CACHE_FORMAT_VERSION} m={m} "
                    f"symmetry={symmetry} genus2={genus2}")
        if header != expected:
            raise InvalidStructureError(
                f"cache header {header!r} does not match {expected!r}")
        structures = []
        for line in fh:
            line = line.strip()
            if not line:
                continue
            pairs = []
            for tok in line.split(","):
                a, b = tok.split(":")
                pairs.append((int(a), int(b)))
            structure = BaseStructure.from_half_pairs(m, pairs)
            if structure.genus2 != genus2:
                raise InvalidStructureError("cached structure has wrong genus")
            if symmetry == UNITARY and not structure.orientable:
                raise InvalidStructureError("cached unitary structure twisted")
            structures.append(structure)
    return structures


def iter_structures(m: int, symmetry: str, genus2: int,
                    cache_dir: str | None = None):
    """Like :func:`enumerate_structures` at fixed genus, with a disk cache.

    The cache is purely an optimization: outputs are byte-identical with and
    without it.
    """
    if cache_dir is None:
        yield from enumerate_structures(m, symmetry, genus2)
        return
    os.makedirs(cache_dir, exist_ok=True)
    path = cache_path(cache_dir, m, symmetry, genus2)
    if os.path.exists(path):
        yield from load_structures(path, m, symmetry, genus2)
        return
    structures = list(enumerate_structures(m, symmetry, genus2))
    save_structures(path, structures, m, symmetry, genus2)
    yield from structures
