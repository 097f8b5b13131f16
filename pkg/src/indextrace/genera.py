"""Exact characteristic-class computations on complex projective spaces.

Everything is a coefficient extraction in ``Q[[x]]`` truncated at a fixed
order, or in ``H^*(CP^{n_1} x ... x CP^{n_r}; Q)`` modelled as a polynomial
ring with ``x_i^{n_i+1} = 0``.  Genera are evaluated per Chern root: the
tangent bundle of ``CP^n`` has total Chern class ``(1+x)^{n+1}``, so a genus
with characteristic series ``Q`` evaluates to the top coefficient of
``Q(x)^{n+1}``.

Characteristic series (per Chern root):

=========  ===========================
A-hat      ``(x/2) / sinh(x/2)``
L          ``x / tanh(x)``
Todd       ``x / (1 - e^{-x})``
=========  ===========================

A twist ``k`` multiplies a factor by ``e^{k x / 2}``, so ``e^{kx/2} A-hat``
on ``CP^n`` is the index of the Spin^c Dirac operator twisted by a line
bundle with ``c_1 = k x``; ``k = n + 1`` gives the Todd genus.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Mapping, Sequence, Union

from .errors import InvalidDimension, LengthMismatch, SeriesOrderCapExceeded

__all__ = [
    "ORDER_CAP_ENV",
    "TruncatedSeries",
    "NilpotentPoly",
    "GenusSpec",
    "AHAT",
    "L_GENUS",
    "TODD",
    "BUILTIN_GENERA",
    "exp_twist",
    "series_ahat_half",
    "series_l",
    "series_todd",
    "twisted_ahat_cpn",
    "signature_cpn",
    "pontryagin_class_cpn",
    "l_class_cpn",
    "product_genus",
    "hattori_range",
]

ORDER_CAP_ENV = "INDEXTRACE_SERIES_ORDER_CAP"
DEFAULT_ORDER_CAP = 4096

Rational = Union[int, Fraction, str]


def series_order_cap() -> int:
    raw = os.environ.get(ORDER_CAP_ENV)
    return int(raw) if raw else DEFAULT_ORDER_CAP


def _check_order(order: int) -> None:
    if order < 0:
        raise ValueError(f"series order must be >= 0, got {order}")
    cap = series_order_cap()
    if order > cap:
        raise SeriesOrderCapExceeded(f"series order {order} exceeds {ORDER_CAP_ENV}={cap}")


@dataclass(frozen=True)
class TruncatedSeries:
    """``sum c_k x^k mod x^{N+1}`` with rational coefficients; ``N = order``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Rational]):
        c = tuple(Fraction(v) for v in coeffs)
        if not c:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, c: Rational, order: int) -> TruncatedSeries:
        return cls([c] + [0] * order)

    @classmethod
    def exp(cls, scale: Rational, order: int) -> TruncatedSeries:
        """``e^{scale * x}``."""
        s = Fraction(scale)
        return cls(s**k / factorial(k) for k in range(order + 1))

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.order else Fraction(0)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other) -> TruncatedSeries:
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedSeries(self.coeffs[k] + other.coeffs[k] for k in range(n + 1))

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(-c for c in self.coeffs)

    def __sub__(self, other) -> TruncatedSeries:
        return self + (-self._coerce(other))

    def __mul__(self, other) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            s = Fraction(other)
            return TruncatedSeries(s * c for c in self.coeffs)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries(
            sum((a[i] * b[k - i] for i in range(k + 1) if a[i] and b[k - i]), Fraction(0))
            for k in range(n + 1)
        )

    __rmul__ = __mul__

    def __pow__(self, e: int) -> TruncatedSeries:
        if e < 0:
            return self.inverse() ** (-e)
        result = TruncatedSeries.constant(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> TruncatedSeries:
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv = [1 / a[0]]
        for k in range(1, self.order + 1):
            inv.append(-sum((a[i] * inv[k - i] for i in range(1, k + 1)), Fraction(0)) / a[0])
        return TruncatedSeries(inv)

    def __truediv__(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return self * (1 / Fraction(other))

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        """``self(inner(x))``; ``inner`` must have zero constant term."""
        if inner[0] != 0:
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        out = TruncatedSeries.constant(0, n)
        for c in reversed(self.coeffs[: n + 1]):
            out = out * inner + c
        return out


def series_ahat_half(order: int) -> TruncatedSeries:
    """``(x/2)/sinh(x/2) = 1 - x^2/24 + 7 x^4/5760 - ...``"""
    _check_order(order)
    # sinh(x/2)/(x/2) = sum_j x^{2j} / (4^j (2j+1)!)
    s = TruncatedSeries(
        Fraction(1, 4 ** (k // 2) * factorial(k + 1)) if k % 2 == 0 else 0 for k in range(order + 1)
    )
    return s.inverse()


def series_l(order: int) -> TruncatedSeries:
    """``x/tanh(x) = 1 + x^2/3 - x^4/45 + ...``"""
    _check_order(order)
    cosh = TruncatedSeries(Fraction(1, factorial(k)) if k % 2 == 0 else 0 for k in range(order + 1))
    sinh_over_x = TruncatedSeries(
        Fraction(1, factorial(k + 1)) if k % 2 == 0 else 0 for k in range(order + 1)
    )
    return cosh / sinh_over_x


def series_todd(order: int) -> TruncatedSeries:
    """``x/(1 - e^{-x}) = 1 + x/2 + x^2/12 - x^4/720 + ...``"""
    _check_order(order)
    # (1 - e^{-x})/x = sum_k (-1)^k x^k / (k+1)!
    s = TruncatedSeries(Fraction((-1) ** k, factorial(k + 1)) for k in range(order + 1))
    return s.inverse()


@dataclass(frozen=True)
class GenusSpec:
    """A genus given by its per-root series plus a fixed ``e^{twist x/2}`` per factor."""

    name: str
    series: Callable[[int], TruncatedSeries] = field(compare=False)
    twist: Fraction = Fraction(0)

    def characteristic(self, order: int) -> TruncatedSeries:
        q = self.series(order)
        if q[0] != 1:
            raise ValueError(f"characteristic series of {self.name} has Q(0) = {q[0]}")
        return q


AHAT = GenusSpec("ahat", series_ahat_half)
L_GENUS = GenusSpec("L", series_l)
TODD = GenusSpec("todd", series_todd)
BUILTIN_GENERA = (AHAT, L_GENUS, TODD)


def exp_twist(k: Rational) -> GenusSpec:
    """A-hat genus with an extra ``e^{k x/2}`` on every factor.

    ``exp_twist(2 * k)`` realizes an ``e^{k x}`` twist.
    """
    return GenusSpec(f"exptwist({Fraction(k)})", series_ahat_half, Fraction(k))


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidDimension(f"CP^n needs n >= 1, got {n!r}")


def twisted_ahat_cpn(n: int, k: Rational) -> Fraction:
    """``< e^{kx/2} A-hat(CP^n), [CP^n] >``: coefficient of ``x^n`` in ``e^{kx/2} ((x/2)/sinh(x/2))^{n+1}``."""
    _check_n(n)
    s = TruncatedSeries.exp(Fraction(k) / 2, n) * series_ahat_half(n) ** (n + 1)
    return s[n]


def signature_cpn(n: int) -> int:
    _check_n(n)
    v = (series_l(n) ** (n + 1))[n]
    if v.denominator != 1:
        raise ArithmeticError(f"non-integral signature {v} for CP^{n}")
    return int(v)


def hattori_range(n: int) -> list[int]:
    """Twists ``k`` with ``|k| < n+1`` and ``k = n+1 (mod 2)``, ascending."""
    k0 = n + 1
    return [k for k in range(-k0 + 1, k0) if (k - k0) % 2 == 0]


Monomial = tuple[int, ...]


@dataclass(frozen=True)
class NilpotentPoly:
    """Element of ``Q[x_1..x_r] / (x_i^{n_i+1})`` -- the rational cohomology of a product of ``CP^{n_i}``."""

    dims: tuple[int, ...]
    terms: Mapping[Monomial, Fraction]

    def __init__(self, dims: Sequence[int], terms: Mapping[Monomial, Rational] | None = None):
        dims = tuple(int(d) for d in dims)
        if any(d < 0 for d in dims):
            raise InvalidDimension(f"negative nilpotency order in {dims}")
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != len(dims):
                raise LengthMismatch(f"monomial {mono} in ring with {len(dims)} variables")
            if any(e > d for e, d in zip(mono, dims)):
                continue
            c = Fraction(c)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "terms", {m: c for m, c in clean.items() if c})

    @classmethod
    def constant(cls, dims: Sequence[int], c: Rational = 1) -> NilpotentPoly:
        return cls(dims, {(0,) * len(dims): c})

    @classmethod
    def variable(cls, dims: Sequence[int], i: int) -> NilpotentPoly:
        """The generator ``x_i`` (0-based)."""
        return cls(dims, {tuple(int(j == i) for j in range(len(dims))): 1})

    @classmethod
    def from_series(cls, dims: Sequence[int], i: int, s: TruncatedSeries) -> NilpotentPoly:
        """Substitute ``x_i`` into a univariate series (which must reach order ``dims[i]``)."""
        if s.order < dims[i]:
            raise ValueError(f"series order {s.order} below nilpotency order {dims[i]}")
        return cls(dims, {tuple(e if j == i else 0 for j in range(len(dims))): s[e]
                          for e in range(dims[i] + 1)})

    def _compatible(self, other: NilpotentPoly) -> None:
        if self.dims != other.dims:
            raise LengthMismatch(f"rings {self.dims} and {other.dims} differ")

    def __add__(self, other: NilpotentPoly) -> NilpotentPoly:
        self._compatible(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return NilpotentPoly(self.dims, terms)

    def __mul__(self, other) -> NilpotentPoly:
        if not isinstance(other, NilpotentPoly):
            s = Fraction(other)
            return NilpotentPoly(self.dims, {m: s * c for m, c in self.terms.items()})
        self._compatible(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                if any(e > d for e, d in zip(m, self.dims)):
                    continue
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return NilpotentPoly(self.dims, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> NilpotentPoly:
        result = NilpotentPoly.constant(self.dims)
        for _ in range(e):
            result = result * self
        return result

    def coefficient(self, mono: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def top_coefficient(self) -> Fraction:
        """Evaluation on the fundamental class: the coefficient of ``x_1^{n_1} ... x_r^{n_r}``."""
        return self.coefficient(self.dims)

    def univariate_coeffs(self) -> list[Fraction]:
        """Coefficient list for a one-variable ring."""
        if len(self.dims) != 1:
            raise LengthMismatch("univariate_coeffs needs a one-variable ring")
        return [self.coefficient((e,)) for e in range(self.dims[0] + 1)]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (sum(m), m)):
            mono = "*".join(f"x{i+1}^{e}" if e > 1 else f"x{i+1}" for i, e in enumerate(m) if e)
            c = self.terms[m]
            parts.append(f"{c}" if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return " + ".join(parts)


def pontryagin_class_cpn(n: int) -> NilpotentPoly:
    """``p(CP^n) = (1 + x^2)^{n+1}`` in ``Q[x]/(x^{n+1})``."""
    _check_n(n)
    x = NilpotentPoly.variable((n,), 0)
    return (NilpotentPoly.constant((n,)) + x * x) ** (n + 1)


def l_class_cpn(n: int) -> NilpotentPoly:
    """``L(CP^n) = (x/tanh x)^{n+1}`` in ``Q[x]/(x^{n+1})``."""
    _check_n(n)
    return NilpotentPoly.from_series((n,), 0, series_l(n) ** (n + 1))


def product_genus(spec: GenusSpec, dims: Sequence[int], twists: Sequence[Rational]) -> Fraction:
    """Genus of ``CP^{n_1} x ... x CP^{n_r}``, factor ``i`` twisted by ``e^{k_i x_i / 2}``."""
    dims = list(dims)
    if not dims:
        raise InvalidDimension("product_genus needs at least one factor")
    for n in dims:
        _check_n(n)
    if len(twists) != len(dims):
        raise LengthMismatch(f"{len(dims)} factors but {len(twists)} twists")
    ring = tuple(dims)
    total = NilpotentPoly.constant(ring)
    for i, (n, k) in enumerate(zip(dims, twists)):
        s = spec.characteristic(n) ** (n + 1) * TruncatedSeries.exp((Fraction(k) + spec.twist) / 2, n)
        total = total * NilpotentPoly.from_series(ring, i, s)
    return total.top_coefficient()
