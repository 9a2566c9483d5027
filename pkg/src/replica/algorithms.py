"""The Borwein-like iteration families and the ellipse-perimeter iterations.

Each family of order m in {2, 3, 4} iterates

    d_{n+1} = descend_m(d_n)          (the order-m algebraic argument map)
    c_{n+1}, a_{n+1}                  (coefficient updates with free parameter w)

from d_0 = 2**(-1/m), c_0 = 2, a_0 = 0.  The quantity

    A_n = (sum_k C_k d_n^{mk})**w * sum_k C_k (a_n + b_n k) d_n^{mk},

with b_n = c_n (1 - d_n^m), is invariant along the run, so a_n converges to
A_0, the couple product evaluated independently by the series module.  The
same recurrences at w = 0 with ellipse-specific initial values converge to
the normalized perimeter factor F(a, b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction

from .errors import (
    DomainError,
    InsufficientTraceError,
    NonConvergenceError,
    PrecisionInsufficientError,
    UnknownConstantError,
    UnsupportedExponentError,
    UnsupportedParameterError,
)
from .precision import (
    PrecisionContext,
    Real,
    nth_root,
    pow_rational,
    rat_pow,
)
from .series import SeriesSpec, couple_product, evaluate_series, pochhammer_pair
from .transforms import DESCEND


@dataclass(frozen=True)
class AlgorithmKind:
    """One iteration family, identified by its convergence order."""

    order: int

    def __post_init__(self):
        if self.order not in (2, 3, 4):
            raise UnsupportedParameterError("algorithm order must be 2, 3 or 4")

    @property
    def name(self) -> str:
        return {2: "quadratic", 3: "cubic", 4: "quartic"}[self.order]

    @property
    def couple_parameter(self) -> Fraction:
        """The s of the series couple this family starts from and tends to."""
        return Fraction(1, 3) if self.order == 3 else Fraction(1, 2)


QUADRATIC = AlgorithmKind(2)
CUBIC = AlgorithmKind(3)
QUARTIC = AlgorithmKind(4)


@dataclass(frozen=True)
class IterationState:
    """One row of a run trace; delta_exp is floor(log10 |a_n - a_{n-1}|)."""

    n: int
    d: Real
    c: Real
    a: Real
    delta_exp: int | None = None


@dataclass
class RunResult:
    """Outcome of a run: final value, full trace, measured orders."""

    value: Real
    trace: list[IterationState]
    orders: list[float] = field(default_factory=list)
    oracle_digits: int | None = None

    @property
    def iterations(self) -> int:
        return len(self.trace) - 1


def _step(order: int, w: Fraction, d: Real, c: Real, a: Real, ctx: PrecisionContext):
    """One update of (d, c, a) for the given family.

    The power of the order-specific factor f is computed once (g = f**(w-1),
    or f**(2w-2) for the quartic) and reused for the a-update exponent.
    """
    d1 = DESCEND[order](d, ctx)
    if order == 2:
        f = 1 + d1
        g = rat_pow(f, w - 1, ctx)
        c1 = 2 * c * g
        a1 = a * g * f * f + c1 * d1 * (1 - d1) / 2
    elif order == 3:
        f = 1 + 2 * d1
        g = rat_pow(f, w - 1, ctx)
        c1 = 3 * c * g
        a1 = a * g * f * f + 2 * c1 * d1 * (1 - d1**3) / (3 * f)
    else:
        f = 1 + d1
        g = rat_pow(f, 2 * w - 2, ctx)
        c1 = 4 * c * g
        a1 = a * g * f**4 + c1 * d1 * (1 - d1**4) / (2 * f)
    return d1, c1, a1


def _iterate(kind: AlgorithmKind, w: Fraction, d0: Real, c0: Real, a0: Real,
             ctx: PrecisionContext) -> RunResult:
    """Run the recurrences until two consecutive deltas drop below
    10**(-target_digits - 8), or the step budget runs out.

    A run that exhausts the budget is still accepted when its final delta
    alone met the threshold; it is a convergence failure only when not even
    that weaker certificate holds.
    """
    with ctx.local():
        threshold = Decimal(1).scaleb(-(ctx.target_digits + 8))
        d, c, a = d0, c0, a0
        trace = [IterationState(0, d, c, a)]
        consecutive = 0
        delta = None
        for n in range(1, ctx.max_iterations + 1):
            d, c, a1 = _step(kind.order, w, d, c, a, ctx)
            delta = abs(a1 - a)
            a = a1
            trace.append(
                IterationState(n, d, c, a, delta.adjusted() if delta != 0 else None)
            )
            consecutive = consecutive + 1 if delta < threshold else 0
            if consecutive >= 2:
                break
        else:
            if delta is None or delta >= threshold:
                raise NonConvergenceError(
                    f"{kind.name} run did not converge within "
                    f"{ctx.max_iterations} iterations",
                    trace=trace,
                )
        result = RunResult(value=a, trace=trace)
        try:
            result.orders = measure_orders(trace, a, ctx)
        except InsufficientTraceError:
            result.orders = []
        return result


def run_borwein(kind: AlgorithmKind, w: Fraction, ctx: PrecisionContext) -> RunResult:
    """Run the order-m constant algorithm with free parameter w.

    The limit is couple_product(s, w) with s = 1/2 for the quadratic and
    quartic families and s = 1/3 for the cubic one.
    """
    w = Fraction(w)
    if 12 % w.denominator != 0:
        raise UnsupportedExponentError("w must have a denominator dividing 12")
    m = kind.order
    with ctx.local():
        d0 = pow_rational(Decimal(2), -1, m, ctx)
        return _iterate(kind, w, d0, Decimal(2), Decimal(0), ctx)


def run_ellipse(kind: AlgorithmKind, semi_major: Real, semi_minor: Real,
                ctx: PrecisionContext) -> RunResult:
    """Perimeter iteration (order 2 or 4): the value converges to F(a, b)
    with P(a, b) = (2 pi b^2 / a) * F(a, b).

    Same recurrences as :func:`run_borwein` at w = 0, started from
    d_0 = (1 - b^2/a^2)**(1/m), c_0 = 2 a^2/b^2, a_0 = 1.
    """
    if kind.order not in (2, 4):
        raise UnsupportedParameterError("perimeter algorithms exist for orders 2 and 4")
    if semi_minor <= 0:
        raise DomainError("semi-minor axis must be > 0")
    if semi_minor > semi_major:
        raise DomainError("semi-minor axis must not exceed semi-major axis")
    with ctx.local():
        ratio = semi_minor / semi_major
        z = 1 - ratio * ratio
        if z >= 1:
            raise PrecisionInsufficientError(
                "b/a is below the working precision; increase digits to resolve d0 < 1"
            )
        d0 = nth_root(z, kind.order, ctx)
        if d0 >= 1:
            raise PrecisionInsufficientError(
                "initial eccentricity parameter rounded to 1 at working precision"
            )
        c0 = 2 / (ratio * ratio)
        return _iterate(kind, Fraction(0), d0, c0, Decimal(1), ctx)


def usable_error_logs(trace: list[IterationState], final_value: Real,
                      ctx: PrecisionContext | None = None) -> list[tuple[int, float]]:
    """(n, log10 err_n) for the contiguous block of order-measurable errors.

    err_n = |a_n - final_value| is usable when it lies in (0, 1) and, when a
    context is supplied, above the rounding noise floor
    10**(10 - working_digits) * |final_value|; below that floor the trace
    measures rounding, not the algorithm.
    """
    floor = Decimal(0)
    if ctx is not None and final_value != 0:
        floor = abs(final_value) * Decimal(1).scaleb(10 - ctx.working_digits)
    logs: list[tuple[int, float]] = []
    for state in trace:
        err = abs(state.a - final_value)
        if err == 0 or err >= 1 or err <= floor:
            if logs:
                break  # errors decrease monotonically; the usable block ended
            continue
        logs.append((state.n, _log10(err)))
    return logs


def measure_orders(trace: list[IterationState], final_value: Real,
                   ctx: PrecisionContext | None = None) -> list[float]:
    """Convergence orders log(err_{n+1}) / log(err_n) from a run trace.

    A pair of consecutive states contributes only when both errors are
    usable in the sense of :func:`usable_error_logs`.  The i-th returned
    order belongs to the i-th usable state.
    """
    if len(trace) < 3:
        raise InsufficientTraceError("need at least 3 trace states")
    logs = usable_error_logs(trace, final_value, ctx)
    if len(logs) < 2:
        raise InsufficientTraceError("fewer than 3 usable error points")
    return [logs[i + 1][1] / logs[i][1] for i in range(len(logs) - 1)]


def _log10(x: Real) -> float:
    """log10 of a positive Decimal of any magnitude, as a float."""
    exp = x.adjusted()
    return exp + math.log10(float(x.scaleb(-exp)))


def replication_invariant(kind: AlgorithmKind, w: Fraction, state: IterationState,
                          ctx: PrecisionContext) -> Real:
    """A_n computed from one trace state via two series evaluations.

    Successive states of a single run must produce equal values (to roughly
    working precision); the shared value is the run's limit.
    """
    if state.d < 0 or state.d >= 1:
        raise DomainError("state.d must lie in [0, 1)")
    p, q = pochhammer_pair(kind.couple_parameter)
    m = kind.order
    with ctx.local():
        z = state.d**m
        b_n = state.c * (1 - z)
        s0 = evaluate_series(SeriesSpec(p, q, Decimal(1), Decimal(0), z), ctx)
        s1 = evaluate_series(SeriesSpec(p, q, state.a, b_n, z), ctx)
        w = Fraction(w)
        if w == 0:
            return +s1
        return rat_pow(s0, w, ctx) * s1


#: constant id -> (algorithm orders that compute it, the w to run them at)
CONSTANT_RECIPES: dict[str, tuple[tuple[int, ...], Fraction]] = {
    "pi": ((2, 4), Fraction(1)),
    "gamma34": ((2, 4), Fraction(3)),
    "gamma14": ((2, 4), Fraction(1, 3)),
    "gamma23": ((3,), Fraction(2)),
    "gamma13": ((3,), Fraction(1, 2)),
}


def postprocess_constant(name: str, raw: Real, ctx: PrecisionContext) -> Real:
    """Invert the registered limit formula to extract the named constant.

    ``raw`` must be the converged value of the (family, w) pair registered in
    :data:`CONSTANT_RECIPES` for that name.
    """
    with ctx.local():
        if name == "pi":
            # raw = 1/pi
            return 1 / raw
        if name == "gamma34":
            # raw = Gamma(3/4)**(-4)
            return pow_rational(raw, -1, 4, ctx)
        if name == "gamma14":
            # raw = (sqrt(2)/Gamma(1/4))**(4/3)
            return nth_root(Decimal(2), 2, ctx) * pow_rational(raw, -3, 4, ctx)
        if name == "gamma23":
            # raw = 2**(-1/3) / Gamma(2/3)**3
            return pow_rational(pow_rational(Decimal(2), -1, 3, ctx) / raw, 1, 3, ctx)
        if name == "gamma13":
            # raw = 3**(3/4) * 2**(-4/3) * (2/(sqrt(3) Gamma(1/3)))**(3/2)
            scale = pow_rational(Decimal(3), 3, 4, ctx) * pow_rational(Decimal(2), -4, 3, ctx)
            core = pow_rational(scale / raw, 2, 3, ctx)
            return 2 / nth_root(Decimal(3), 2, ctx) * core
    raise UnknownConstantError(f"unknown constant id {name!r}")


def constant_limit_oracle(kind: AlgorithmKind, w: Fraction, ctx: PrecisionContext) -> Real:
    """Series-side value of the limit the (kind, w) run converges to."""
    return couple_product(kind.couple_parameter, Fraction(w), ctx)
