"""Exact arithmetic kernel: rationals, polynomials in the channel fraction
``zeta1``, and truncated power series with polynomial coefficients.

Everything is computed over exact rationals; there is no floating point in
any computation path.  Polynomials are univariate in ``zeta1`` with
``zeta2 = 1 - zeta1`` substituted eagerly, so e.g. ``xi = zeta1*zeta2`` is the
polynomial ``zeta1 - zeta1**2``.  Series are truncated at a fixed order ``K``
in either the leaf variable ``r`` or the moment variable ``s = r**2``.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rational

RationalLike = Union[int, "Rational"]

_ZERO = Rational(0)
_ONE = Rational(1)


class NonInvertibleError(ZeroDivisionError):
    """Series division by a series whose constant term is not a unit."""


class BranchError(ValueError):
    """Series square root of a series whose constant term is not 1."""


class ParityViolationError(ValueError):
    """A series in r carries a nonzero odd-power coefficient."""


class BasisError(ValueError):
    """A polynomial is not symmetric under zeta1 -> 1 - zeta1."""


class SeriesMismatchError(ValueError):
    """Operands have different variable tags or truncations."""


def _as_rational(x) -> Rational:
    if isinstance(x, int):
        return Rational(x)
    return Rational(x)


class Poly:
    """Polynomial in zeta1 over the rationals, dense and trailing-zero free."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [_as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c: RationalLike) -> "Poly":
        return cls((c,))

    @classmethod
    def zeta1(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def zeta2(cls) -> "Poly":
        return cls((1, -1))

    @classmethod
    def xi(cls) -> "Poly":
        return cls((0, 1, -1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> Rational:
        return self.coeffs[0] if self.coeffs else _ZERO

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    def scale(self, c: RationalLike) -> "Poly":
        c = _as_rational(c)
        return Poly(x * c for x in self.coeffs)

    def __call__(self, value: RationalLike) -> Rational:
        value = _as_rational(value)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def swap_leads(self) -> "Poly":
        """Substitute zeta1 -> 1 - zeta1 (exchange of the two leads)."""
        out = [_ZERO] * len(self.coeffs)
        # expand c * (1 - z)**k via Pascal's rule row by row
        row = [_ONE]
        for k, c in enumerate(self.coeffs):
            if c != 0:
                sign = _ONE
                for j, binom in enumerate(row):
                    out[j] += c * sign * binom
                    sign = -sign
            row = [_ONE] + [row[i] + row[i + 1]
                            for i in range(len(row) - 1)] + [_ONE]
        return Poly(out)

    def is_lead_symmetric(self) -> bool:
        return self.swap_leads() == self

    def to_xi_basis(self) -> tuple[Rational, ...]:
        """Coefficients c_k with self = sum c_k * xi**k, xi = zeta1*(1-zeta1).

        Only lead-symmetric polynomials lie in the xi subring; anything else
        raises :class:`BasisError`.
        """
        p = self
        out: dict[int, Rational] = {}
        xi = Poly.xi()
        while not p.is_zero():
            d = p.degree
            if d % 2:
                raise BasisError("odd degree cannot be expressed in xi")
            k = d // 2
            c = p.coeffs[d] * (1 if k % 2 == 0 else -1)  # xi**k leads (-1)^k
            out[k] = c
            q = Poly.const(c)
            for _ in range(k):
                q = q * xi
            p = p - q
        res = [out.get(k, _ZERO) for k in range(max(out, default=-1) + 1)]
        # sanity: reconstruction is exact by construction, but a symmetric
        # input is required for the caller's semantics
        return tuple(res)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(f"{c}")
            elif k == 1:
                terms.append(f"{c}*z1")
            else:
                terms.append(f"{c}*z1^{k}")
        return "Poly(" + " + ".join(terms) + ")"


_POLY_ZERO = Poly()
_POLY_ONE = Poly.const(1)


class Series:
    """Truncated power series with Poly coefficients.

    ``var`` is ``"r"`` or ``"s"``; ``coeffs[n]`` is the coefficient of
    ``var**n`` for ``n = 0..K``.  All arithmetic stays at or below order K.
    """

    __slots__ = ("var", "K", "coeffs")

    def __init__(self, var: str, K: int, coeffs: Sequence[Poly] = ()):
        if var not in ("r", "s"):
            raise ValueError(f"unknown series variable {var!r}")
        if K < 0:
            raise ValueError("truncation must be nonnegative")
        cs = list(coeffs)[:K + 1]
        cs += [_POLY_ZERO] * (K + 1 - len(cs))
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "K", K)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("Series is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, var: str, K: int) -> "Series":
        return cls(var, K)

    @classmethod
    def const(cls, c, var: str, K: int) -> "Series":
        p = c if isinstance(c, Poly) else Poly.const(c)
        return cls(var, K, (p,))

    @classmethod
    def variable(cls, var: str, K: int) -> "Series":
        return cls(var, K, (_POLY_ZERO, _POLY_ONE))

    @classmethod
    def from_poly_coeffs(cls, var: str, K: int,
                         coeffs: Sequence[Poly]) -> "Series":
        return cls(var, K, coeffs)

    # -- basics ------------------------------------------------------------

    def _check(self, other: "Series"):
        if self.var != other.var or self.K != other.K:
            raise SeriesMismatchError(
                f"({self.var}, K={self.K}) vs ({other.var}, K={other.K})")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def coefficient(self, n: int) -> Poly:
        return self.coeffs[n]

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        return Series(self.var, self.K,
                      [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "Series":
        return Series(self.var, self.K, [-c for c in self.coeffs])

    def __sub__(self, other: "Series") -> "Series":
        self._check(other)
        return Series(self.var, self.K,
                      [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: "Series") -> "Series":
        self._check(other)
        K = self.K
        out = [_POLY_ZERO] * (K + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(K + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Series(self.var, self.K, out)

    def scale(self, c) -> "Series":
        p = c if isinstance(c, Poly) else Poly.const(c)
        return Series(self.var, self.K, [x * p for x in self.coeffs])

    def __truediv__(self, other: "Series") -> "Series":
        return self * other.inverse()

    def inverse(self) -> "Series":
        b0 = self.coeffs[0]
        if not b0.is_constant() or b0.constant() == 0:
            raise NonInvertibleError(
                "series constant term must be a nonzero rational")
        inv0 = _ONE / b0.constant()
        K = self.K
        out = [Poly.const(inv0)] + [_POLY_ZERO] * K
        for n in range(1, K + 1):
            acc = _POLY_ZERO
            for j in range(1, n + 1):
                bj = self.coeffs[j]
                if not bj.is_zero():
                    acc = acc + bj * out[n - j]
            out[n] = acc.scale(-inv0)
        return Series(self.var, self.K, out)

    def sqrt(self) -> "Series":
        if self.coeffs[0] != _POLY_ONE:
            raise BranchError("series square root requires constant term 1")
        K = self.K
        half = Rational(1, 2)
        out = [_POLY_ONE] + [_POLY_ZERO] * K
        for n in range(1, K + 1):
            acc = self.coeffs[n]
            for j in range(1, n):
                acc = acc - out[j] * out[n - j]
            out[n] = acc.scale(half)
        return Series(self.var, self.K, out)

    def __pow__(self, e: int) -> "Series":
        if e < 0:
            return self.inverse() ** (-e)
        result = Series.const(1, self.var, self.K)
        base = self
        while e:
            if e & 1:
                result = result * base
            base_needed = e > 1
            if base_needed:
                base = base * base
            e >>= 1
        return result

    # -- calculus and reindexing ------------------------------------------

    def s_d_ds(self) -> "Series":
        """Multiply the coefficient of s**n by n (the operator s*d/ds)."""
        if self.var != "s":
            raise SeriesMismatchError("s*d/ds applies to series in s")
        return Series("s", self.K,
                      [c.scale(n) for n, c in enumerate(self.coeffs)])

    def reindex_r_to_s(self) -> "Series":
        """Rewrite a series in r containing only even powers as one in s=r^2."""
        if self.var != "r":
            raise SeriesMismatchError("reindexing applies to series in r")
        for n in range(1, self.K + 1, 2):
            if not self.coeffs[n].is_zero():
                raise ParityViolationError(
                    f"nonzero coefficient at odd power r^{n}")
        return Series("s", self.K // 2, self.coeffs[::2])

    def truncate(self, K: int) -> "Series":
        if K > self.K:
            raise SeriesMismatchError("cannot extend a truncated series")
        return Series(self.var, K, self.coeffs[:K + 1])

    def swap_leads(self) -> "Series":
        return Series(self.var, self.K,
                      [c.swap_leads() for c in self.coeffs])

    def is_lead_symmetric(self) -> bool:
        return all(c.is_lead_symmetric() for c in self.coeffs)

    # -- output ------------------------------------------------------------

    def to_json_obj(self) -> list:
        """``[[power, ["num/den", ...]], ...]`` skipping zero coefficients."""
        out = []
        for n, c in enumerate(self.coeffs):
            if not c.is_zero():
                out.append([n, [format_rational(x) for x in c.coeffs]])
        return out

    def xi_json_obj(self) -> list:
        """Like :meth:`to_json_obj` but each coefficient in the xi basis."""
        out = []
        for n, c in enumerate(self.coeffs):
            if not c.is_zero():
                if not c.is_lead_symmetric():
                    raise BasisError(f"coefficient of order {n} not symmetric")
                out.append([n, [format_rational(x) for x in c.to_xi_basis()]])
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, Series) and self.var == other.var
                and self.K == other.K and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.var, self.K, self.coeffs))

    def __repr__(self) -> str:
        nz = [(n, c) for n, c in enumerate(self.coeffs) if not c.is_zero()]
        body = " + ".join(f"({c!r})*{self.var}^{n}" for n, c in nz) or "0"
        return f"Series[{self.var}, K={self.K}]({body})"


def format_rational(x) -> str:
    x = _as_rational(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Rational:
    if "/" in text:
        num, den = text.split("/")
        return Rational(int(num), int(den))
    return Rational(int(text))


def inv_sqrt_pow(a: Series, half_exponent: int) -> Series:
    """``a ** (-half_exponent / 2)`` for a series with constant term 1."""
    root = a.sqrt()
    if half_exponent >= 0:
        return root.inverse() ** half_exponent
    return root ** (-half_exponent)
