"""Exact truncated power series over the rationals.

A :class:`TruncatedSeries` holds the coefficients ``c_0 .. c_N`` of a formal
power series modulo ``t^(N+1)``.  Every coefficient is a
:class:`fractions.Fraction`, so nothing is ever rounded.

An :class:`ExponentPolynomial` is a polynomial in a symbolic exponent ``r``.
:func:`series_pow_symbolic` uses them to write the coefficient of ``t^k`` in
``f(t)^r`` as an explicit polynomial in ``r``::

    >>> f = base_series("complex_squared", 2)
    >>> print(series_pow_symbolic(f).polys[2])
    1/2*r^2 - 5/12*r
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm
from typing import Iterable, Sequence

__all__ = [
    "SeriesError",
    "OrderMismatchError",
    "NotInvertibleError",
    "SeriesDomainError",
    "TruncatedSeries",
    "ExponentPolynomial",
    "SymbolicPowerExpansion",
    "series_arith",
    "series_inverse",
    "series_log",
    "series_exp",
    "series_pow_symbolic",
    "base_series",
    "BASE_KINDS",
]


class SeriesError(ValueError):
    pass


class OrderMismatchError(SeriesError):
    pass


class NotInvertibleError(SeriesError):
    pass


class SeriesDomainError(SeriesError):
    pass


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact coefficients")
    return Fraction(x)


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series ``sum coeffs[k] t^k`` known modulo ``t^(order+1)``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable):
        cs = tuple(_frac(c) for c in coeffs)
        if not cs:
            raise SeriesError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1] + [0] * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise OrderMismatchError(
                f"cannot extend a series of order {self.order} to order {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def _check(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise OrderMismatchError(
                f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-a for a in self.coeffs)

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            c = _frac(other)
            return TruncatedSeries(c * a for a in self.coeffs)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries(
            sum((a[j] * b[k - j] for j in range(k + 1)), Fraction(0))
            for k in range(len(a)))

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "TruncatedSeries":
        if not isinstance(m, int) or m < 0:
            raise SeriesDomainError("only nonnegative integer powers are supported")
        result = TruncatedSeries.one(self.order)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def inverse(self) -> "TruncatedSeries":
        return series_inverse(self)

    def log(self) -> "TruncatedSeries":
        return series_log(self)

    def exp(self) -> "TruncatedSeries":
        return series_exp(self)

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}" if mono else f"{c}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(t^{self.order + 1})"


def series_arith(a: TruncatedSeries, b: TruncatedSeries, op: str) -> TruncatedSeries:
    """Apply ``op`` in {"add", "sub", "mul"} to two series of equal order."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown series operation {op!r}")


def series_inverse(f: TruncatedSeries) -> TruncatedSeries:
    """Reciprocal ``g`` with ``f * g = 1`` to the order of ``f``."""
    c = f.coeffs
    if c[0] == 0:
        raise NotInvertibleError("series with zero constant term has no reciprocal")
    inv0 = 1 / c[0]
    g = [inv0]
    for k in range(1, len(c)):
        s = sum((c[j] * g[k - j] for j in range(1, k + 1)), Fraction(0))
        g.append(-inv0 * s)
    return TruncatedSeries(g)


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    # k g_k = k f_k - sum_{j<k} j g_j f_{k-j}, from g' f = f'
    c = f.coeffs
    if c[0] != 1:
        raise SeriesDomainError("log needs constant term 1")
    g = [Fraction(0)]
    for k in range(1, len(c)):
        s = sum((j * g[j] * c[k - j] for j in range(1, k)), Fraction(0))
        g.append(c[k] - s / k)
    return TruncatedSeries(g)


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    # k e_k = sum_{j=1..k} j f_j e_{k-j}, from e' = f' e
    c = f.coeffs
    if c[0] != 0:
        raise SeriesDomainError("exp needs constant term 0")
    e = [Fraction(1)]
    for k in range(1, len(c)):
        s = sum((j * c[j] * e[k - j] for j in range(1, k + 1)), Fraction(0))
        e.append(s / k)
    return TruncatedSeries(e)


@dataclass(frozen=True)
class ExponentPolynomial:
    """Polynomial in the exponent ``r``; ``coeffs[j]`` multiplies ``r^j``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c) -> "ExponentPolynomial":
        return cls([c])

    @classmethod
    def r(cls) -> "ExponentPolynomial":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, r) -> Fraction:
        r = _frac(r)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * r + c
        return acc

    evaluate = __call__

    def __add__(self, other: "ExponentPolynomial") -> "ExponentPolynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return ExponentPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(n))

    def __neg__(self) -> "ExponentPolynomial":
        return ExponentPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "ExponentPolynomial") -> "ExponentPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "ExponentPolynomial":
        if not isinstance(other, ExponentPolynomial):
            c = _frac(other)
            return ExponentPolynomial(c * a for a in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ExponentPolynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return ExponentPolynomial(out)

    __rmul__ = __mul__

    def integer_form(self) -> tuple[tuple[int, ...], int]:
        """Return ``(N, D)`` with integer coefficients ``N`` and ``self = N / D``.

        ``D`` is the least common denominator, so ``self(r)`` is an integer
        exactly when ``D`` divides ``N(r)``.
        """
        d = 1
        for c in self.coeffs:
            d = lcm(d, c.denominator)
        return tuple(int(c * d) for c in self.coeffs), d

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            mono = "" if j == 0 else ("r" if j == 1 else f"r^{j}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(terms).replace("+ -", "- ")


@dataclass(frozen=True)
class SymbolicPowerExpansion:
    """Coefficients of ``f(t)^r`` as polynomials in ``r``; ``polys[k]`` goes with ``t^k``."""

    polys: tuple[ExponentPolynomial, ...]

    @property
    def order(self) -> int:
        return len(self.polys) - 1

    def evaluate(self, m) -> TruncatedSeries:
        """Specialise the symbolic exponent to ``m``."""
        return TruncatedSeries(p(m) for p in self.polys)


def series_pow_symbolic(f: TruncatedSeries) -> SymbolicPowerExpansion:
    """Expand ``f(t)^r`` for symbolic ``r`` as ``exp(r * log f)``."""
    if f.coeffs[0] != 1:
        raise SeriesDomainError("symbolic powers need constant term 1")
    g = series_log(f).coeffs
    # h_j = j * g_j * r, the derivative weights of r*log f
    h = [ExponentPolynomial([0, j * g[j]]) for j in range(len(g))]
    e = [ExponentPolynomial.constant(1)]
    for k in range(1, len(g)):
        acc = ExponentPolynomial()
        for j in range(1, k + 1):
            if not h[j].is_zero():
                acc = acc + h[j] * e[k - j]
        e.append(acc * Fraction(1, k))
    return SymbolicPowerExpansion(tuple(e))


BASE_KINDS = ("complex", "complex_squared", "quaternionic")


def _log1p_over_t(order: int) -> TruncatedSeries:
    return TruncatedSeries(Fraction((-1) ** k, k + 1) for k in range(order + 1))


def _asinh_sqrt_even(order: int) -> TruncatedSeries:
    # asinh(x)/x at x = sqrt(t)/2, as a series in t
    return TruncatedSeries(
        Fraction((-1) ** m * factorial(2 * m),
                 4 ** m * factorial(m) ** 2 * (2 * m + 1) * 4 ** m)
        for m in range(order + 1))


def base_series(kind: str, order: int) -> TruncatedSeries:
    """The base series whose powers drive the integrality tests.

    ``complex`` is ``t/ln(1+t)``, ``complex_squared`` its square, and
    ``quaternionic`` is ``((2/sqrt t) asinh(sqrt(t)/2))^2``.
    """
    if order < 1:
        raise SeriesDomainError("base series need order >= 1")
    if kind == "complex":
        return series_inverse(_log1p_over_t(order))
    if kind == "complex_squared":
        c = series_inverse(_log1p_over_t(order))
        return c * c
    if kind == "quaternionic":
        a = _asinh_sqrt_even(order)
        return a * a
    raise ValueError(f"unknown base series kind {kind!r}; expected one of {BASE_KINDS}")
