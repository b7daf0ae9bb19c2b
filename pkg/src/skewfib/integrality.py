"""Hurwitz-Radon arithmetic and the integrality period solver.

For the complex and quaternionic cases, a fibration of ``F^n`` by ``F^p`` can
only exist when the first ``p`` coefficients of a certain power series, raised
to a power fixed by ``q = n - p``, are integers (even integers for odd
coefficients in the quaternionic case).  The set of admissible ``q`` is the set
of multiples of a single period; :func:`james_complex` and
:func:`james_quaternionic` compute that period exactly by solving the
congruences prime by prime.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from sympy import factorint

from .series import (
    ExponentPolynomial,
    SymbolicPowerExpansion,
    base_series,
    series_pow_symbolic,
)

__all__ = [
    "IntegralityError",
    "StructureViolation",
    "InvariantViolation",
    "Congruence",
    "CongruenceSystem",
    "JamesVerdict",
    "Verdict",
    "hurwitz_radon",
    "real_exists",
    "real_period",
    "solve_congruences",
    "prime_periods",
    "integrality_system",
    "complex_expansion",
    "quaternionic_expansion",
    "james_complex",
    "james_quaternionic",
    "james_verdict",
    "first_failing_coefficient",
    "admissible",
    "cross_field_implications",
    "relation_check",
    "FIELDS",
]

FIELDS = ("R", "C", "H")


class IntegralityError(ValueError):
    pass


class StructureViolation(IntegralityError):
    """The solutions modulo a prime power are not the multiples of a power of that prime."""

    def __init__(self, prime: int, message: str = ""):
        self.prime = prime
        super().__init__(message or f"solution set at prime {prime} is not a multiples set")


class InvariantViolation(IntegralityError):
    pass


def hurwitz_radon(q: int) -> int:
    """rho(q) = 2^b + 8c where q = 2^(b + 4c) * odd and 0 <= b < 4."""
    if q < 1:
        raise IntegralityError(f"hurwitz_radon needs q >= 1, got {q}")
    v = (q & -q).bit_length() - 1
    c, b = divmod(v, 4)
    return 2 ** b + 8 * c


def real_exists(p: int, q: int) -> bool:
    """Whether a real (p, p+q)-fibration exists, i.e. p <= rho(q) - 1."""
    return p <= hurwitz_radon(q) - 1


def real_period(p: int, check_bound: int = 0) -> int:
    """Smallest power of two ``a`` with ``rho(a) >= p + 1``.

    With ``check_bound > 0`` also confirms that, for every ``q`` up to that
    bound, ``real_exists(p, q)`` holds exactly when ``a`` divides ``q``.
    """
    if p < 1:
        raise IntegralityError(f"real_period needs p >= 1, got {p}")
    a = 1
    while hurwitz_radon(a) < p + 1:
        a *= 2
    for q in range(1, check_bound + 1):
        if real_exists(p, q) != (q % a == 0):
            raise InvariantViolation(f"real admissible set for p={p} breaks at q={q}")
    return a


@dataclass(frozen=True)
class Congruence:
    """``poly(r) = 0 (mod modulus)`` for an integer polynomial ``poly``."""

    poly: tuple[int, ...]
    modulus: int
    coefficient: Optional[int] = None

    def holds(self, r: int) -> bool:
        return _eval_mod(self.poly, r, self.modulus) == 0


@dataclass(frozen=True)
class CongruenceSystem:
    constraints: tuple[Congruence, ...]

    def __init__(self, constraints: Sequence):
        cs = []
        for c in constraints:
            if not isinstance(c, Congruence):
                poly, modulus = c
                c = Congruence(tuple(int(a) for a in poly), int(modulus))
            if c.modulus < 1:
                raise IntegralityError("moduli must be positive")
            cs.append(c)
        object.__setattr__(self, "constraints", tuple(cs))

    def holds(self, r: int) -> bool:
        return all(c.holds(r) for c in self.constraints)


def _eval_mod(poly: Sequence[int], r: int, m: int) -> int:
    acc = 0
    for a in reversed(poly):
        acc = (acc * r + a) % m
    return acc


def _p_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _prime_exponent(system: CongruenceSystem, p: int) -> int:
    """Exponent e' with solutions mod p^E exactly the multiples of p^e'."""
    reduced = []
    for c in system.constraints:
        e = _p_valuation(c.modulus, p)
        if e:
            reduced.append((c.poly, e))
    top = max(e for _, e in reduced)

    # lift digit by digit: level j keeps residues mod p^j that satisfy every
    # constraint modulo p^min(e, j)
    sols = [0]
    pj = 1
    for j in range(1, top + 1):
        pj_next = pj * p
        checks = [(poly, p ** min(e, j)) for poly, e in reduced]
        sols = [s + d * pj
                for s in sols for d in range(p)
                if all(_eval_mod(poly, s + d * pj, m) == 0 for poly, m in checks)]
        pj = pj_next

    if not sols:
        raise StructureViolation(p, f"no solutions modulo {p}^{top}")
    least = min(s for s in sols if s) if len(sols) > 1 else pj
    expected = set(range(0, pj, least))
    if pj % least or set(sols) != expected:
        raise StructureViolation(p)
    return _p_valuation(least, p)


def prime_periods(system: CongruenceSystem) -> dict[int, int]:
    """Map each prime dividing some modulus to its exponent in the period."""
    if not system.constraints:
        raise IntegralityError("empty congruence system")
    primes: set[int] = set()
    for c in system.constraints:
        primes.update(factorint(c.modulus))
    return {p: _prime_exponent(system, p) for p in sorted(primes)}


def solve_congruences(system: CongruenceSystem) -> int:
    """Least positive ``r`` satisfying every congruence in ``system``.

    Raises :class:`StructureViolation` if at some prime the solutions are not
    the multiples of a prime power, since then no single period exists.
    """
    period = 1
    for p, e in prime_periods(system).items():
        period *= p ** e
    return period


def _coefficient_congruence(poly: ExponentPolynomial, k: int, even: bool) -> Congruence:
    nums, d = poly.integer_form()
    return Congruence(nums, 2 * d if even else d, coefficient=k)


def integrality_system(expansion: SymbolicPowerExpansion, upto: int,
                       even_odd: bool = False, start: int = 1) -> CongruenceSystem:
    """Congruences requiring ``polys[k]`` integral for ``start <= k <= upto``.

    With ``even_odd`` the odd-index coefficients must be even integers.
    """
    return CongruenceSystem([
        _coefficient_congruence(expansion.polys[k], k, even_odd and k % 2 == 1)
        for k in range(start, upto + 1)])


@lru_cache(maxsize=None)
def complex_expansion(order: int) -> SymbolicPowerExpansion:
    return series_pow_symbolic(base_series("complex", order))


@lru_cache(maxsize=None)
def quaternionic_expansion(order: int) -> SymbolicPowerExpansion:
    return series_pow_symbolic(base_series("quaternionic", order))


@lru_cache(maxsize=None)
def james_complex(p: int) -> int:
    """Period b_p: (t/ln(1+t))^q has integral t^1..t^p coefficients iff b_p | q."""
    if p < 1:
        raise IntegralityError(f"p must be >= 1, got {p}")
    return solve_congruences(integrality_system(complex_expansion(p), p))


@lru_cache(maxsize=None)
def james_quaternionic(p: int) -> int:
    """Period c_p for the quaternionic series raised to the power q."""
    if p < 1:
        raise IntegralityError(f"p must be >= 1, got {p}")
    return solve_congruences(
        integrality_system(quaternionic_expansion(p), p, even_odd=True))


def first_failing_coefficient(field: str, p: int, q: int) -> Optional[int]:
    """Index of the first coefficient t^k (1 <= k <= p) failing its test at exponent q."""
    if field == "C":
        exp, even_odd = complex_expansion(p), False
    elif field == "H":
        exp, even_odd = quaternionic_expansion(p), True
    else:
        raise IntegralityError(f"no power-series test for field {field!r}")
    for k in range(1, p + 1):
        v = exp.polys[k](q)
        if v.denominator != 1:
            return k
        if even_odd and k % 2 == 1 and v.numerator % 2:
            return k
    return None


@dataclass(frozen=True)
class JamesVerdict:
    field: str
    p: int
    period: int
    failing_coefficient: Optional[int] = None


def james_verdict(field: str, p: int, q: Optional[int] = None) -> JamesVerdict:
    if field == "R":
        period = real_period(p)
        failing = None
    elif field == "C":
        period = james_complex(p)
        failing = first_failing_coefficient("C", p, q) if q else None
    elif field == "H":
        period = james_quaternionic(p)
        failing = first_failing_coefficient("H", p, q) if q else None
    else:
        raise IntegralityError(f"unknown field {field!r}")
    return JamesVerdict(field, p, period, failing)


@dataclass(frozen=True)
class Verdict:
    field: str
    p: int
    n: int
    possible: bool
    reason: str
    period: int
    failing_coefficient: Optional[int] = None
    implications: tuple["Verdict", ...] = field(default=())

    @property
    def q(self) -> int:
        return self.n - self.p

    @property
    def label(self) -> str:
        return f"{self.field}-({self.p},{self.n})"

    def to_dict(self) -> dict:
        d = {
            "field": self.field,
            "p": self.p,
            "n": self.n,
            "q": self.q,
            "verdict": "possible" if self.possible else "ruled_out",
            "reason": self.reason,
            "period": self.period,
            "failing_coefficient": self.failing_coefficient,
        }
        if self.implications:
            d["implications"] = [v.to_dict() for v in self.implications]
        return d


def admissible(field: str, p: int, n: int) -> Verdict:
    """Whether an F-(p, n)-fibration survives the known obstructions."""
    if field not in FIELDS:
        raise IntegralityError(f"unknown field {field!r}")
    if p < 1 or n <= p:
        raise IntegralityError(f"need 1 <= p < n, got p={p}, n={n}")
    q = n - p
    if field == "R":
        rho = hurwitz_radon(q)
        ok = p <= rho - 1
        reason = (f"rho({q}) = {rho} and p {'<=' if ok else '>'} rho - 1 = {rho - 1}")
        return Verdict(field, p, n, ok, reason, real_period(p))
    jv = james_verdict(field, p, q)
    ok = q % jv.period == 0
    name = "b" if field == "C" else "c"
    if ok:
        reason = f"q = {q} is a multiple of {name}_{p} = {jv.period}"
    else:
        reason = (f"q = {q} is not a multiple of {name}_{p} = {jv.period}; "
                  f"coefficient of t^{jv.failing_coefficient} fails")
    return Verdict(field, p, n, ok, reason, jv.period, jv.failing_coefficient)


def cross_field_implications(field: str, p: int, n: int) -> list[Verdict]:
    """Real and complex fibrations whose existence a C or H fibration would force."""
    if field == "C":
        targets = [("R", 2 * p + 1, 2 * n + 1)]
    elif field == "H":
        targets = [("C", 2 * p + 1, 2 * n + 1), ("R", 2 * p + 3, 2 * n + 3)]
    else:
        raise IntegralityError("cross-field implications start from C or H")
    return [admissible(f, pp, nn) for f, pp, nn in targets]


def relation_check(p: int) -> str:
    """Compare c_p with b_(2p+1); returns "equal" or "half".

    Even ``p`` must give "half"; anything else raises :class:`InvariantViolation`.
    """
    c = james_quaternionic(p)
    b = james_complex(2 * p + 1)
    if c == b:
        case = "equal"
    elif 2 * c == b:
        case = "half"
    else:
        raise InvariantViolation(f"c_{p} = {c} is neither b_{2 * p + 1} = {b} nor half of it")
    if p % 2 == 0 and case != "half":
        raise InvariantViolation(f"c_{p} = b_{2 * p + 1} for even p = {p}")
    return case
