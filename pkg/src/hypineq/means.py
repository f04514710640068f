"""Bivariate means and the bound-family transfer to mean inequalities.

The arc-based means (sb, ns, v) and the log mean are implemented with
arguments rearranged so that no branch ever subtracts nearly equal
quantities inside an inverse trig call: acos(a/b) near a = b is replaced
by 2 asin(sqrt((b-a)/(2b))) and arccosh(a/b) by 2 asinh(sqrt((a-b)/(2b))),
both exact-difference forms.  Below NEAR_EQUAL the difference-series
branches take over, so every mean here is uniformly accurate to a few
ulp across its whole domain.
"""

from __future__ import annotations

import math

from . import hypcore as hc
from . import regions
from .errors import DomainError, InputError

NEAR_EQUAL = 1e-8
_INV_LOG2 = 1.0 / math.log(2.0)


def _check_positive(**vals: float) -> None:
    for name, v in vals.items():
        if not (isinstance(v, (int, float)) and math.isfinite(v)):
            raise InputError(f"{name} must be finite, got {v}")
        if v <= 0:
            raise DomainError(f"{name} must be positive, got {v}")


def log_mean(a: float, b: float) -> float:
    """L(a, b) = (a - b)/(log a - log b), continued by L(a, a) = a.

    The denominator is evaluated as log1p((a - b)/b), which stays
    well-conditioned for every argument ratio (atanh((a-b)/(a+b)) does
    not: it amplifies rounding by 1/(1 - z^2) for extreme ratios).
    """
    _check_positive(a=a, b=b)
    if a == b:
        return float(a)
    z = (a - b) / (a + b)
    if abs(z) < NEAR_EQUAL:
        z2 = z * z
        return 0.5 * (a + b) * (1.0 - z2 * (1.0 / 3.0 + z2 * (4.0 / 45.0)))
    hi, lo = (a, b) if a > b else (b, a)  # keep log1p off its singular side
    return (hi - lo) / math.log1p((hi - lo) / lo)


def classic_means(a: float, b: float) -> dict[str, float]:
    """Geometric, arithmetic, quadratic and logarithmic means."""
    _check_positive(a=a, b=b)
    return {
        "G": math.sqrt(a * b),
        "A": 0.5 * (a + b),
        "Q": math.sqrt(0.5 * (a * a + b * b)),
        "L": log_mean(a, b),
    }


def sb(a: float, b: float) -> float:
    """The arc mean sqrt(b^2-a^2)/acos(a/b) for a < b, hyperbolic for a > b.

    Not symmetric in its arguments.  a = 0 is allowed (value 2b/pi);
    near-equal arguments route through one series valid on both sides.
    """
    if not (isinstance(a, (int, float)) and math.isfinite(a)):
        raise InputError(f"a must be finite, got {a}")
    _check_positive(b=b)
    if a < 0:
        raise DomainError(f"sb requires a >= 0, got {a}")
    if a == b:
        return float(a)
    if abs(a - b) / (a + b) < NEAR_EQUAL:
        w = (a - b) / b
        s = w * (2.0 + w * (-1.0 / 3.0 + w * (4.0 / 45.0)))
        return b * (1.0 + s * (1.0 / 6.0 + s * (1.0 / 120.0 + s / 5040.0)))
    if a < b:
        angle = 2.0 * math.asin(math.sqrt((b - a) / (2.0 * b)))
        return math.sqrt((b - a) * (b + a)) / angle
    angle = 2.0 * math.asinh(math.sqrt((a - b) / (2.0 * b)))
    return math.sqrt((a - b) * (a + b)) / angle


def ns_mean(a: float, b: float) -> float:
    """NS(a, b) = (a - b)/(2 asinh((a - b)/(a + b))), equal to sb(Q, A)."""
    _check_positive(a=a, b=b)
    if a == b:
        return float(a)
    z = (a - b) / (a + b)
    if abs(z) < NEAR_EQUAL:
        z2 = z * z
        return 0.5 * (a + b) * (1.0 + z2 * (1.0 / 6.0 - z2 * (17.0 / 360.0)))
    return (a - b) / (2.0 * math.asinh(z))


def v_mean(a: float, b: float) -> float:
    """V(a, b) = G y/asinh(y) with y = (a - b)/sqrt(2ab), equal to sb(Q, G)."""
    _check_positive(a=a, b=b)
    if a == b:
        return float(a)
    g = math.sqrt(a * b)
    y = (a - b) / (g * math.sqrt(2.0))
    if abs(y) < NEAR_EQUAL:
        y2 = y * y
        return g * (1.0 + y2 * (1.0 / 6.0 - y2 * (17.0 / 360.0)))
    return g * y / math.asinh(y)


def ns_v_means(a: float, b: float) -> dict[str, float]:
    return {"NS": ns_mean(a, b), "V": v_mean(a, b)}


def zcothzm1(z: float) -> float:
    """z coth z - 1, even in z, with the exact limit 0 at z = 0."""
    z = abs(z)
    if z < 0.1:
        z2 = z * z
        return z2 * (1.0 / 3.0 + z2 * (-1.0 / 45.0 + z2 * (
            2.0 / 945.0 + z2 * (-1.0 / 4725.0 + z2 * (2.0 / 93555.0)))))
    if z > 350.0:
        return z - 1.0
    return z / math.tanh(z) - 1.0


def _log_sh_ratio(p: float, q: float, t: float) -> float:
    """log Sh(p, q, t) through f(r) = log(sinh(rt)/(rt)), which is even in r.

    Exact-zero and exact-equality branches dispatch first; nearly equal
    nonzero parameters use the midpoint derivative of f instead of the
    cancelling difference quotient.
    """
    def f(r: float) -> float:
        return hc.log_sinhc(abs(r) * t)

    if p == q:
        if p == 0.0:
            return 0.0
        return zcothzm1(p * t) / p
    if p == 0.0:
        return f(q) / q
    if q == 0.0:
        return f(p) / p
    if abs(p - q) < 1e-6:
        m = 0.5 * (p + q)
        if m == 0.0:
            return 0.0
        return zcothzm1(m * t) / m
    return (f(p) - f(q)) / (p - q)


def sh_mean(p: float, q: float, b: float, a: float) -> float:
    """The two-parameter hyperbolic mean a Sh(p, q, arccosh(b/a)), b >= a.

    Mean-validity condition: for p, q > 0 both p + q <= 3 and
    L(p, q) <= 1/log 2 must hold; otherwise 0 <= p + q <= 3 must hold.
    Violations raise DomainError naming the failed clause.
    """
    hc._check_params(p, q)
    _check_positive(a=a, b=b)
    if b < a:
        raise InputError(f"sh_mean requires b >= a, got b = {b} < a = {a}")
    if p > 0 and q > 0:
        if p + q > 3:
            raise DomainError(
                f"mean validity requires p + q <= 3, got p + q = {p + q}")
        lm = log_mean(p, q)
        if lm > _INV_LOG2:
            raise DomainError(
                f"mean validity requires L(p, q) <= 1/log 2 = {_INV_LOG2:.15g}, "
                f"got L = {lm:.15g}")
    elif not 0 <= p + q <= 3:
        raise DomainError(
            "mean validity requires 0 <= p + q <= 3 when a parameter is "
            f"nonpositive, got p + q = {p + q}")
    if b == a:
        return float(a)
    if (b - a) / (a + b) < NEAR_EQUAL:
        v = (b - a) / a
        s = 2.0 * v * (1.0 - v / 6.0)  # arccosh(1+v)^2 to the needed order
        log_ratio = (p + q) * s / 6.0 - (p + q) * (p * p + q * q) * s * s / 180.0
        return a * math.exp(log_ratio)
    t = 2.0 * math.asinh(math.sqrt((b - a) / (2.0 * a)))  # arccosh(b/a)
    return a * math.exp(_log_sh_ratio(p, q, t))


# ---------------------------------------------------------------------------
# bound-family transfer: bounds on sb(b, a) for b >= a > 0


def _transfer(b: float, a: float, p, q) -> float:
    return a * hc.m_bound(b / a, float(p), float(q))


def _require(p, q, direction: regions.Direction, role: str) -> None:
    if not hc.in_omega(p, q):
        raise DomainError(
            f"{role} parameters (p, q) = ({p}, {q}) lie outside the bound "
            "family domain (need p >= 0 or 3q <= p <= 0)")
    verdict = regions.classify(p, q)
    if verdict.direction is not direction:
        raise DomainError(
            f"{role} requires classification {direction.value} at "
            f"(p, q) = ({p}, {q}), but clause {verdict.clause} gives "
            f"{verdict.direction.value}")


MEAN_BOUND_KINDS = ("exponent-pair", "base-pair", "ratio", "boundary")


def mean_bounds(kind: str, b: float, a: float, *,
                p: float | None = None, q: float | None = None,
                p1: float | None = None, p2: float | None = None,
                q1: float | None = None, q2: float | None = None,
                k: float | None = None) -> tuple[float, float]:
    """Bounds on sb(b, a) from the bound family, b >= a > 0.

    kind "exponent-pair": lower from (p1, q), upper from (p2, q)
    kind "base-pair":     lower from (p, q1), upper from (p, q2)
    kind "ratio":         one bound from (kq, q); the side follows the
                          ray classification (increasing -> lower)
    kind "boundary":      one bound from the critical-line family at q

    One-sided kinds report the absent side as 0.0 (lower) or inf
    (upper).  Parameters whose classification does not support the
    requested side raise DomainError naming the clause that fired.

    Classification is exact on whatever numeric type is passed, so a
    parameter meant to sit exactly on a clause threshold should be a
    Fraction (the float 1.4 is strictly below 7/5 and classifies into
    the open gap); floats are used only for the final evaluation.
    """
    _check_positive(a=a, b=b)
    if b < a:
        raise InputError(f"mean_bounds requires b >= a, got b = {b} < a = {a}")

    def need(**kw):
        missing = [n for n, v in kw.items() if v is None]
        if missing:
            raise InputError(f"kind {kind!r} requires {', '.join(missing)}")
        return list(kw.values())

    if kind == "exponent-pair":
        lo_p, up_p, base = need(p1=p1, p2=p2, q=q)
        _require(lo_p, base, regions.Direction.INCREASING, "lower bound")
        _require(up_p, base, regions.Direction.DECREASING, "upper bound")
        if b == a:
            return (float(a), float(a))
        return (_transfer(b, a, lo_p, base), _transfer(b, a, up_p, base))
    if kind == "base-pair":
        expo, lo_q, up_q = need(p=p, q1=q1, q2=q2)
        _require(expo, lo_q, regions.Direction.INCREASING, "lower bound")
        _require(expo, up_q, regions.Direction.DECREASING, "upper bound")
        if b == a:
            return (float(a), float(a))
        return (_transfer(b, a, expo, lo_q), _transfer(b, a, expo, up_q))
    if kind == "ratio":
        ratio, base = need(k=k, q=q)
        verdict = regions.classify_kq(ratio, base)
        if verdict.direction is regions.Direction.NOT_COVERED:
            raise DomainError(
                f"ray (k, q) = ({ratio}, {base}) is not covered "
                f"(clause {verdict.clause})")
        pp = ratio * base
        if not hc.in_omega(pp, base):
            raise DomainError(
                f"(p, q) = ({pp}, {base}) lies outside the bound family domain")
        if b == a:
            return (float(a), float(a))
        value = _transfer(b, a, pp, base)
        if verdict.direction is regions.Direction.INCREASING:
            return (value, math.inf)
        return (0.0, value)
    if kind == "boundary":
        (base,) = need(q=q)
        verdict = regions.classify_boundary(base)
        if verdict.direction is regions.Direction.NOT_COVERED:
            raise DomainError(
                f"critical-line parameter q = {base} is not covered "
                f"(clause {verdict.clause})")
        if b == a:
            return (float(a), float(a))
        value = a * hc.m_boundary_family(b / a, float(base))
        if verdict.direction is regions.Direction.INCREASING:
            return (value, math.inf)
        return (0.0, value)
    raise InputError(
        f"unknown mean_bounds kind {kind!r}; valid kinds: "
        + ", ".join(MEAN_BOUND_KINDS))
