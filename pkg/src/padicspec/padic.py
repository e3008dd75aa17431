"""Exact p-adic scalar arithmetic at fixed precision.

A nonzero scalar is kept in canonical form p^v * u where u is a unit
residue modulo p^m (u % p != 0); zero is a distinguished sentinel with
valuation +inf.  The unit carries m base-p digits, so a scalar of
valuation v is determined modulo p^(v+m).  Arithmetic is exact on the
canonical representatives; a sum whose m leading digits all cancel
collapses to the sentinel ("zero at precision").

The p-power map sigma(x) = x^p contracts the unit ball: within |x| <= 1,
|sigma(x) - sigma(y)| <= |x - y| / p whenever |x - y| <= 1/p.  Iterating
sigma from any residue therefore stabilises modulo p^m, and the stable
points are the multiplicative lifts of the residues mod p.  Those fixed
points, their digit expansions, and the classification of sigma-orbits
are what everything else in the package is built from.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional, Union

INFINITE = math.inf


def is_prime(n: int) -> bool:
    """Trial-division primality check, adequate for p <= 2**31."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def int_valuation(n: int, p: int) -> int:
    """Largest k with p^k dividing n; n must be nonzero."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class PrecisionContext:
    """Shared precision parameters: prime p, digit count m, iteration budget.

    max_iters is the floor for fixed-point search budgets; individual
    searches widen it to m * N_max + 4 when a larger period bound N_max
    is in play.
    """

    p: int
    m: int
    max_iters: int = field(default=0, compare=False)
    modulus: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.m < 1:
            raise ValueError(f"precision m must be >= 1, got {self.m}")
        if self.max_iters == 0:
            object.__setattr__(self, "max_iters", self.m + 4)
        if self.max_iters < self.m:
            raise ValueError("max_iters must be at least m")
        object.__setattr__(self, "modulus", self.p**self.m)

    def budget(self, period_bound: int = 1) -> int:
        """Iteration cap for a fixed-point search with periods up to period_bound."""
        return max(self.max_iters, self.m * period_bound + 4)


@dataclass(frozen=True)
class PadicScalar:
    """An element of Q_p known to m significant base-p digits.

    Invariants: either the zero sentinel (valuation = +inf, unit = 0) or
    0 < unit < p^m with unit % p != 0.  The norm is p^(-valuation) and is
    exactly multiplicative; addition obeys the ultrametric inequality,
    with total cancellation reported as the zero sentinel.
    """

    ctx: PrecisionContext
    valuation: Union[int, float]
    unit: int

    def __post_init__(self):
        if self.valuation == INFINITE:
            if self.unit != 0:
                raise ValueError("zero sentinel must have unit 0")
            return
        if not isinstance(self.valuation, int):
            raise ValueError("finite valuation must be an integer")
        if not (0 < self.unit < self.ctx.modulus):
            raise ValueError(f"unit {self.unit} outside (0, p^m)")
        if self.unit % self.ctx.p == 0:
            raise ValueError(f"unit {self.unit} is divisible by p")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, ctx: PrecisionContext) -> "PadicScalar":
        return cls(ctx, INFINITE, 0)

    @classmethod
    def one(cls, ctx: PrecisionContext) -> "PadicScalar":
        return cls(ctx, 0, 1)

    @classmethod
    def from_int(cls, value: int, ctx: PrecisionContext) -> "PadicScalar":
        if value == 0:
            return cls.zero(ctx)
        v = int_valuation(value, ctx.p)
        unit = (value // ctx.p**v) % ctx.modulus
        return cls(ctx, v, unit)

    @classmethod
    def from_residue(cls, residue: int, ctx: PrecisionContext) -> "PadicScalar":
        """Scalar for a representative of Z/p^m, taken as exact."""
        r = residue % ctx.modulus
        if r == 0:
            return cls.zero(ctx)
        v = int_valuation(r, ctx.p)
        return cls(ctx, v, r // ctx.p**v)

    # -- canonical data ----------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.valuation == INFINITE

    @property
    def norm(self) -> float:
        """p-adic norm p^(-v); 0.0 for the zero sentinel."""
        if self.is_zero:
            return 0.0
        return float(self.ctx.p) ** (-self.valuation)

    def residue(self) -> int:
        """Representative in Z/p^m.  Defined for |x| <= 1 only."""
        if self.is_zero:
            return 0
        if self.valuation < 0:
            raise ValueError("scalar has norm > 1, no residue mod p^m")
        if self.valuation >= self.ctx.m:
            return 0
        return (self.ctx.p**self.valuation * self.unit) % self.ctx.modulus

    def congruent(self, other: "PadicScalar") -> bool:
        """Equality modulo p^m (the working window)."""
        self._check_ctx(other)
        return self.residue() == other.residue()

    def shift(self, k: int) -> "PadicScalar":
        """Multiply by p^k (exact valuation shift)."""
        if self.is_zero or k == 0:
            return self
        return replace(self, valuation=self.valuation + k)

    # -- ring operations ---------------------------------------------

    def _check_ctx(self, other: "PadicScalar"):
        if self.ctx != other.ctx:
            raise ValueError("mixed precision contexts")

    def __add__(self, other: "PadicScalar") -> "PadicScalar":
        self._check_ctx(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        base = min(self.valuation, other.valuation)
        total = self.unit * self.ctx.p ** (self.valuation - base) + other.unit * self.ctx.p ** (
            other.valuation - base
        )
        t = int_valuation(total, self.ctx.p)
        if t >= self.ctx.m:
            # cancellation beyond the m-digit window
            return PadicScalar.zero(self.ctx)
        return PadicScalar(self.ctx, base + t, (total // self.ctx.p**t) % self.ctx.modulus)

    def __neg__(self) -> "PadicScalar":
        if self.is_zero:
            return self
        return replace(self, unit=self.ctx.modulus - self.unit)

    def __sub__(self, other: "PadicScalar") -> "PadicScalar":
        return self + (-other)

    def __mul__(self, other: "PadicScalar") -> "PadicScalar":
        self._check_ctx(other)
        if self.is_zero or other.is_zero:
            return PadicScalar.zero(self.ctx)
        return PadicScalar(
            self.ctx,
            self.valuation + other.valuation,
            (self.unit * other.unit) % self.ctx.modulus,
        )

    def __truediv__(self, other: "PadicScalar") -> "PadicScalar":
        self._check_ctx(other)
        if other.is_zero:
            raise ZeroDivisionError("division by p-adic zero")
        if self.is_zero:
            return self
        inv = pow(other.unit, -1, self.ctx.modulus)
        return PadicScalar(
            self.ctx,
            self.valuation - other.valuation,
            (self.unit * inv) % self.ctx.modulus,
        )

    def __pow__(self, exponent: int) -> "PadicScalar":
        if exponent < 0:
            return PadicScalar.one(self.ctx) / self**-exponent
        if self.is_zero:
            return PadicScalar.zero(self.ctx) if exponent else PadicScalar.one(self.ctx)
        return PadicScalar(
            self.ctx,
            self.valuation * exponent,
            pow(self.unit, exponent, self.ctx.modulus),
        )

    def __repr__(self):
        if self.is_zero:
            return f"PadicScalar(0; p={self.ctx.p}, m={self.ctx.m})"
        return f"PadicScalar({self.ctx.p}^{self.valuation}*{self.unit}; m={self.ctx.m})"

    # -- sigma-orbit protocol (shared with matrices) -------------------

    def sigma_window(self, period: int = 1) -> "PadicScalar":
        return frobenius_step(self, period)

    def residue_key(self) -> int:
        return self.residue()


def scalar_from_rational(numerator: int, denominator: int, ctx: PrecisionContext) -> PadicScalar:
    """Canonical image of numerator/denominator in Q_p at precision m."""
    if denominator == 0:
        raise ValueError("denominator must be nonzero")
    if numerator == 0:
        return PadicScalar.zero(ctx)
    num = PadicScalar.from_int(numerator, ctx)
    den = PadicScalar.from_int(denominator, ctx)
    return num / den


def frobenius_step(x: PadicScalar, period: int = 1) -> PadicScalar:
    """sigma^period(x) = x^(p^period), computed in the window Z/p^m.

    Requires |x| <= 1; the p-power map leaves the unit ball and is only
    iterated there.
    """
    if period < 1:
        raise ValueError("period must be >= 1")
    if not x.is_zero and x.valuation < 0:
        raise ValueError("frobenius_step requires |x| <= 1")
    r = pow(x.residue(), x.ctx.p**period, x.ctx.modulus)
    return PadicScalar.from_residue(r, x.ctx)


def teichmuller_lift(residue: int, ctx: PrecisionContext) -> PadicScalar:
    """The unique w with w^p = w mod p^m and w = residue mod p.

    Iterates x <- x^p from the residue; each step gains at least one
    digit of agreement, so the orbit stabilises within the budget.
    """
    if not 0 <= residue < ctx.p:
        raise ValueError(f"residue {residue} outside [0, p)")
    if residue == 0:
        return PadicScalar.zero(ctx)
    x = residue
    for _ in range(ctx.budget()):
        nxt = pow(x, ctx.p, ctx.modulus)
        if nxt == x:
            return PadicScalar.from_residue(x, ctx)
        x = nxt
    raise RuntimeError("multiplicative lift failed to stabilise (internal defect)")


def teichmuller_points(ctx: PrecisionContext) -> list[PadicScalar]:
    """All p fixed points of x -> x^p mod p^m, ordered by residue mod p."""
    return [teichmuller_lift(r, ctx) for r in range(ctx.p)]


@dataclass(frozen=True)
class TeichDigits:
    """Digit expansion x = sum_i d_i p^(k+i) with every d_i a fixed point of sigma.

    Exactly m digits are produced; reassembling them reproduces the source
    scalar modulo p^(k+m).
    """

    ctx: PrecisionContext
    lead_valuation: int
    digits: tuple

    def reassemble(self) -> PadicScalar:
        total = 0
        for i, d in enumerate(self.digits):
            total += d.residue() * self.ctx.p**i
        return PadicScalar.from_residue(total, self.ctx).shift(self.lead_valuation)


def teichmuller_digits(x: PadicScalar) -> TeichDigits:
    """Peel the multiplicative digit expansion of a scalar.

    The valuation is factored into lead_valuation first, so the input may
    have any norm.  Every scalar admits the expansion (digit peeling on a
    unit always lands on lifts of residues).
    """
    ctx = x.ctx
    if x.is_zero:
        zero = PadicScalar.zero(ctx)
        return TeichDigits(ctx, 0, (zero,) * ctx.m)
    digits = []
    r = x.unit
    for _ in range(ctx.m):
        d = teichmuller_lift(r % ctx.p, ctx)
        digits.append(d)
        r = ((r - d.residue()) % ctx.modulus) // ctx.p
    return TeichDigits(ctx, x.valuation, tuple(digits))


class OrbitKind(Enum):
    TOP_NILPOTENT = "TopNilpotent"
    PERIODIC = "Periodic"
    QUASI_PERIODIC = "QuasiPeriodic"
    CHAOS_AT_PRECISION = "ChaosAtPrecision"


@dataclass(frozen=True)
class OrbitReport:
    """Verdict of a sigma-orbit scan at precision m.

    period is set for the (quasi-)periodic kinds; limit is the first
    element of the limit cycle for quasi-periodic orbits; steps is the
    number of sigma applications consumed by the scan.
    """

    kind: OrbitKind
    period: Optional[int] = None
    steps: int = 0
    limit: object = None


def classify_orbit(x, period_bound: int) -> OrbitReport:
    """Classify the sigma-orbit of a scalar or matrix in the unit ball.

    TopNilpotent: some iterate is 0 mod p^m.  Periodic(N): sigma^N(x) = x
    mod p^m with minimal N <= period_bound.  QuasiPeriodic(N): the orbit
    enters a cycle of length N <= period_bound that does not contain x.
    ChaosAtPrecision: neither happened within the iteration budget (a
    precision-relative verdict, not an error).
    """
    if period_bound < 1:
        raise ValueError("period_bound must be >= 1")
    if x.valuation < 0:
        raise ValueError("classify_orbit requires |x| <= 1")
    ctx = x.ctx
    budget = ctx.budget(period_bound) + period_bound
    start = x.residue_key()
    if _key_is_zero(start):
        return OrbitReport(OrbitKind.TOP_NILPOTENT, steps=0)
    seen = {start: 0}
    elems = [x]
    cur = x
    for k in range(1, budget + 1):
        cur = cur.sigma_window()
        key = cur.residue_key()
        if _key_is_zero(key):
            return OrbitReport(OrbitKind.TOP_NILPOTENT, steps=k)
        if key in seen:
            entry = seen[key]
            period = k - entry
            if period > period_bound:
                return OrbitReport(OrbitKind.CHAOS_AT_PRECISION, steps=k)
            if entry == 0:
                return OrbitReport(OrbitKind.PERIODIC, period=period, steps=k)
            return OrbitReport(
                OrbitKind.QUASI_PERIODIC, period=period, steps=k, limit=elems[entry]
            )
        seen[key] = k
        elems.append(cur)
    return OrbitReport(OrbitKind.CHAOS_AT_PRECISION, steps=budget)


def _key_is_zero(key) -> bool:
    if isinstance(key, int):
        return key == 0
    return all(_key_is_zero(part) for part in key)
