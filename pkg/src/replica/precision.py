"""Arbitrary-precision real arithmetic in decimal digits.

Every quantity in this package is a ``decimal.Decimal`` handled under a
``PrecisionContext`` that fixes the working precision (in decimal digits,
never bits).  Field operations inherit their rounding from the stdlib
``decimal`` module; n-th roots and rational powers are built here by Newton
iteration so that no general transcendental machinery (exp/log) is needed.
"""

from __future__ import annotations

import decimal
import math
from dataclasses import dataclass, replace
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import cached_property

from .errors import DomainError, UnsupportedExponentError

# A "Real" is a plain Decimal; its precision is whatever context produced it.
Real = Decimal

# Exponent range far beyond any digit count this tool is asked for, so the
# tiny deltas of a converged run never underflow to subnormals.
_EMAX = 10**15

#: Denominators q for which x**(p/q) is expressible with the supported roots.
SUPPORTED_DENOMINATORS = (1, 2, 3, 4, 6, 12)

# q -> chain of elementary roots whose composition is the q-th root.
_ROOT_CHAIN = {1: (), 2: (2,), 3: (3,), 4: (4,), 6: (2, 3), 12: (3, 4)}

MIN_GUARD_DIGITS = 32


@dataclass(frozen=True)
class PrecisionContext:
    """Precision policy for one computation.

    ``working_digits = target_digits + guard_digits``; the guard absorbs the
    rounding loss of the whole downstream computation so that the first
    ``target_digits`` digits of any result are exact.
    """

    target_digits: int
    working_digits: int
    guard_digits: int
    max_iterations: int

    def __post_init__(self):
        if self.target_digits < 1:
            raise DomainError("target_digits must be >= 1")
        if self.guard_digits < MIN_GUARD_DIGITS:
            raise DomainError(f"guard_digits must be >= {MIN_GUARD_DIGITS}")
        if self.working_digits != self.target_digits + self.guard_digits:
            raise DomainError("working_digits must equal target_digits + guard_digits")
        if self.max_iterations < 1:
            raise DomainError("max_iterations must be >= 1")

    @cached_property
    def _decimal_context(self) -> decimal.Context:
        return decimal.Context(
            prec=self.working_digits,
            rounding=decimal.ROUND_HALF_EVEN,
            Emin=-_EMAX,
            Emax=_EMAX,
        )

    def local(self):
        """Context manager installing this precision as the thread's decimal context."""
        return localcontext(self._decimal_context)

    def elevated(self, extra_digits: int):
        """Like :meth:`local` but with ``extra_digits`` more working digits."""
        c = self._decimal_context.copy()
        c.prec = self.working_digits + extra_digits
        return localcontext(c)

    def real(self, value: int | str | Decimal | Fraction) -> Real:
        """Convert ``value`` to a Real at working precision.

        Floats are rejected on purpose: decimal inputs must arrive as exact
        strings or rationals, never through hardware floating point.
        """
        if isinstance(value, float):
            raise TypeError("floats are not accepted; pass a str, int, Fraction or Decimal")
        with self.local():
            if isinstance(value, Fraction):
                return Decimal(value.numerator) / Decimal(value.denominator)
            return +Decimal(value)

    def epsilon(self, shift: int = 0) -> Real:
        """10**(-working_digits + shift) as an exact Decimal."""
        return Decimal(1).scaleb(shift - self.working_digits)

    def with_guard(self, guard_digits: int) -> "PrecisionContext":
        """Same target and step budget, different guard (for stability reruns)."""
        return replace(
            self,
            guard_digits=guard_digits,
            working_digits=self.target_digits + guard_digits,
        )

    def doubled_guard(self) -> "PrecisionContext":
        return self.with_guard(2 * self.guard_digits)


def make_context(target_digits: int, algorithm_order: int) -> PrecisionContext:
    """Build the precision policy for a run of the given algorithm order.

    The step budget is ceil(log_order(target_digits)) + 3, since correct
    digits multiply by ``algorithm_order`` per iteration; the guard grows
    with the budget because every iteration loses a bounded number of digits
    to rounding.
    """
    if target_digits < 1:
        raise DomainError("target_digits must be >= 1")
    if algorithm_order not in (2, 3, 4):
        raise UnsupportedExponentError("algorithm_order must be 2, 3 or 4")
    # Integer form of ceil(log(target)/log(order)); exact, unlike float logs.
    k = 0
    while algorithm_order**k < target_digits:
        k += 1
    max_iterations = k + 3
    guard_digits = MIN_GUARD_DIGITS + 8 * max_iterations
    return PrecisionContext(
        target_digits=target_digits,
        working_digits=target_digits + guard_digits,
        guard_digits=guard_digits,
        max_iterations=max_iterations,
    )


def _float_seed(x: Real, n: int) -> Real:
    """Hardware-precision estimate of x**(1/n), robust to any decimal exponent."""
    e = x.adjusted()
    q, r = divmod(e, n)
    # x = m * 10**(n*q + r) with 1 <= m < 10, so x**(1/n) = (m*10**r)**(1/n) * 10**q.
    mantissa = float(x.scaleb(-e)) * 10.0**r
    return Decimal(repr(mantissa ** (1.0 / n))).scaleb(q)


def _newton_root(x: Real, n: int) -> Real:
    """Newton n-th root at the ambient (already elevated) decimal context.

    Quadratic convergence from the float seed; the per-step check stops the
    loop once two successive iterates agree to the ambient precision.
    """
    if x == 0:
        return Decimal(0)
    prec = decimal.getcontext().prec
    r = +_float_seed(x, n)
    tol = r * Decimal(1).scaleb(-(prec - 6))
    for _ in range(200):
        r_next = ((n - 1) * r + x / r ** (n - 1)) / n
        if abs(r_next - r) <= tol:
            return r_next
        r = r_next
    raise ArithmeticError("Newton iteration failed to settle")  # pragma: no cover


def nth_root(x: Real, n: int, ctx: PrecisionContext) -> Real:
    """n-th root of x >= 0 for n in {2, 3, 4} by Newton iteration.

    Seeded from a hardware-precision estimate; runs with a few extra digits
    internally so the result rounded to working precision satisfies
    |r**n - x| <= 3 * x * 10**(1 - working_digits).
    """
    if n not in (2, 3, 4):
        raise UnsupportedExponentError(f"nth_root supports n in {{2, 3, 4}}, got {n}")
    if x.is_signed() and x != 0:
        raise DomainError("nth_root requires x >= 0")
    with ctx.elevated(10):
        r = _newton_root(x, n)
    with ctx.local():
        return +r


def pow_rational(x: Real, p: int, q: int, ctx: PrecisionContext) -> Real:
    """x**(p/q) for x > 0, p any integer, q in {1, 2, 3, 4, 6, 12}.

    Composed as the q-th root of x**|p| (roots chained through {2, 3, 4}),
    inverted when p < 0.  Relative error <= (|p| + 3) * 10**(1 - working_digits).
    """
    if q not in SUPPORTED_DENOMINATORS:
        raise UnsupportedExponentError(f"denominator {q} not in {SUPPORTED_DENOMINATORS}")
    if math.gcd(p, q) != 1:
        raise DomainError(f"exponent {p}/{q} must be in lowest terms")
    if x.is_signed() or x == 0:
        raise DomainError("pow_rational requires x > 0")
    if p == 0:
        return Decimal(1)
    with ctx.elevated(10):
        y = x ** abs(p)
        for n in _ROOT_CHAIN[q]:
            y = +_newton_root(y, n)
        if p < 0:
            y = 1 / y
    with ctx.local():
        return +y


def rat_pow(x: Real, exponent: Fraction, ctx: PrecisionContext) -> Real:
    """x**exponent for a Fraction exponent whose denominator divides 12."""
    return pow_rational(x, exponent.numerator, exponent.denominator, ctx)


def to_sig_digits(x: Real, n: int) -> str:
    """Plain positional string of the first ``n`` significant digits of x.

    Truncated toward zero, never rounded, so the output is a stable prefix
    as ``n`` grows.  Values whose magnitude needs more than ``n`` integer
    digits or leading zeros beyond 6 places fall back to scientific notation.
    """
    if n < 1:
        raise DomainError("need at least one digit")
    if x == 0:
        return "0"
    with localcontext() as c:
        c.prec = n + 5
        c.Emin, c.Emax = -_EMAX, _EMAX
        adj = x.adjusted()
        quantum = Decimal(1).scaleb(adj - n + 1)
        q = x.quantize(quantum, rounding=decimal.ROUND_DOWN)
    sign, digits, exp = q.as_tuple()
    digs = "".join(map(str, digits)).ljust(n, "0")[:n]
    prefix = "-" if sign else ""
    if adj >= n:
        if adj > n + 6:
            return f"{prefix}{digs[0]}.{digs[1:]}e{adj}"
        return prefix + digs + "0" * (adj + 1 - n)
    if adj >= 0:
        head, tail = digs[: adj + 1], digs[adj + 1 :]
        return prefix + head + ("." + tail if tail else "")
    if adj < -6:
        return f"{prefix}{digs[0]}.{digs[1:]}e{adj}"
    return prefix + "0." + "0" * (-adj - 1) + digs


def matching_digits(x: Real, y: Real) -> int:
    """Significant decimal digits on which x and y agree (conservative floor).

    Returns a large sentinel (10**9) when the two values are identical.
    """
    diff = abs(x - y)
    if diff == 0:
        return 10**9
    ref = max(abs(x), abs(y))
    return max(0, ref.adjusted() - diff.adjusted())
