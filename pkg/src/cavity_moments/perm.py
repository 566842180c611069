"""Permutations on the barred half-edge alphabet.

Labels are signed integers: ``+k`` is the plain symbol ``k`` (1-based) and
``-k`` is its barred partner.  Internally a carrier of ``n`` base symbols is
laid out as indices ``0..n-1`` for the plain symbols followed by ``n..2n-1``
for the barred ones, so that barred symbols sort after all plain ones.  This
is the canonical ordering used throughout the enumeration code.

A ``Perm`` may also live on a bar-free ("reduced") carrier of ``n`` symbols,
which is what unitary-map bookkeeping uses.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence


class CarrierMismatchError(ValueError):
    """Two permutations act on different carrier sets."""


_BAR = "̄"  # combining macron, for human-readable output


def _label_to_index(label: int, n: int) -> int:
    if label == 0 or abs(label) > n:
        raise ValueError(f"label {label} outside carrier of {n} base symbols")
    return label - 1 if label > 0 else n + (-label) - 1


def _index_to_label(idx: int, n: int) -> int:
    return idx + 1 if idx < n else -(idx - n + 1)


class Perm:
    """An immutable permutation on the (optionally barred) carrier.

    ``images[i]`` is the internal index that index ``i`` maps to.
    """

    __slots__ = ("n", "barred", "images", "_cycles", "_hash")

    def __init__(self, images: Sequence[int], n: int, barred: bool = True):
        size = 2 * n if barred else n
        images = tuple(images)
        if len(images) != size:
            raise ValueError(f"expected {size} images, got {len(images)}")
        if sorted(images) != list(range(size)):
            raise ValueError("mapping is not a bijection on the carrier")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "barred", barred)
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_cycles", None)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("Perm is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, n: int, barred: bool = True) -> "Perm":
        size = 2 * n if barred else n
        return cls(range(size), n, barred)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int,
                    barred: bool = True) -> "Perm":
        """Build from cycles of signed labels, e.g. ``[(1, -3), (2, 4)]``."""
        size = 2 * n if barred else n
        images = list(range(size))
        seen = set()
        for cyc in cycles:
            idxs = [_label_to_index(z, n) for z in cyc]
            for i in idxs:
                if not barred and i >= n:
                    raise ValueError("barred label in a reduced permutation")
                if i in seen:
                    raise ValueError(f"label {_index_to_label(i, n)} repeated")
                seen.add(i)
            for a, b in zip(idxs, idxs[1:] + idxs[:1]):
                images[a] = b
        return cls(images, n, barred)

    @classmethod
    def parse(cls, text: str, n: int, barred: bool = True) -> "Perm":
        """Parse machine cycle notation, e.g. ``"(1 -3)(2 4)"``."""
        text = text.strip()
        if text in ("", "()", "id"):
            return cls.identity(n, barred)
        if not re.fullmatch(r"(\(\s*-?\d+(\s+-?\d+)*\s*\))+", text):
            raise ValueError(f"malformed cycle notation: {text!r}")
        cycles = [
            [int(tok) for tok in grp.split()]
            for grp in re.findall(r"\(([^()]*)\)", text)
        ]
        return cls.from_cycles(cycles, n, barred)

    # -- label-level access ------------------------------------------------

    def __call__(self, label: int) -> int:
        return _index_to_label(self.images[_label_to_index(label, self.n)], self.n)

    def apply_index(self, idx: int) -> int:
        return self.images[idx]

    def bar_label(self, label: int) -> int:
        if not self.barred:
            raise ValueError("reduced permutation has no barred labels")
        return -label

    # -- algebra -----------------------------------------------------------

    def _check_same_carrier(self, other: "Perm"):
        if self.n != other.n or self.barred != other.barred:
            raise CarrierMismatchError(
                f"carrier ({self.n}, barred={self.barred}) vs "
                f"({other.n}, barred={other.barred})")

    def compose(self, other: "Perm") -> "Perm":
        """Return ``z -> self(other(z))``."""
        self._check_same_carrier(other)
        return Perm([self.images[i] for i in other.images], self.n, self.barred)

    def __mul__(self, other: "Perm") -> "Perm":
        return self.compose(other)

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv, self.n, self.barred)

    def reversal(self) -> "Perm":
        """Bar-and-reverse every cycle: ``(z1 .. zk) -> (bar(zk) .. bar(z1))``.

        Equivalently ``T p^{-1} T`` with ``T`` the barring involution.
        """
        if not self.barred:
            raise ValueError("reversal requires a barred carrier")
        n = self.n
        inv = self.inverse().images
        rev = [0] * (2 * n)
        for i in range(2 * n):
            rev[i] = (inv[(i + n) % (2 * n)] + n) % (2 * n)
        return Perm(rev, n, True)

    def is_palindromic(self) -> bool:
        """True iff the reversal of every cycle is present and distinct."""
        if self.reversal() != self:
            return False
        n = self.n
        for cyc in self.cycles_indices():
            mirrored = frozenset((i + n) % (2 * n) for i in cyc)
            if mirrored == frozenset(cyc):
                return False
        return True

    # -- cycles ------------------------------------------------------------

    def cycles_indices(self) -> list[tuple[int, ...]]:
        """Cycles as internal index tuples, each starting at its minimum,
        sorted by that minimum.  Includes fixed points."""
        if self._cycles is not None:
            return self._cycles
        seen = [False] * len(self.images)
        cycles = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            cycles.append(tuple(cyc))
        object.__setattr__(self, "_cycles", cycles)
        return cycles

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles as tuples of signed labels."""
        return [tuple(_index_to_label(i, self.n) for i in cyc)
                for cyc in self.cycles_indices()]

    def cycle_type(self) -> tuple[int, ...]:
        """Multiset of cycle lengths (including fixed points), descending."""
        return tuple(sorted((len(c) for c in self.cycles_indices()),
                            reverse=True))

    # -- formatting --------------------------------------------------------

    def to_cycle_string(self, human: bool = False) -> str:
        parts = []
        for cyc in self.cycles_indices():
            if len(cyc) == 1:
                continue
            labels = [_index_to_label(i, self.n) for i in cyc]
            if human:
                toks = [f"{-z}{_BAR}" if z < 0 else str(z) for z in labels]
            else:
                toks = [str(z) for z in labels]
            parts.append("(" + " ".join(toks) + ")")
        return "".join(parts) or "()"

    def __str__(self) -> str:
        return self.to_cycle_string()

    def __repr__(self) -> str:
        kind = "barred" if self.barred else "reduced"
        return f"Perm({self.to_cycle_string()}, n={self.n}, {kind})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, Perm) and self.n == other.n
                and self.barred == other.barred and self.images == other.images)

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.n, self.barred, self.images)))
        return self._hash


def bar_involution(n: int) -> Perm:
    """The involution ``z -> bar(z)`` on the barred carrier of ``n`` symbols."""
    return Perm([(i + n) % (2 * n) for i in range(2 * n)], n, True)
