"""Numerically stable 64-bit evaluation of the scalar function family.

The central objects are the generalized logarithm u_p, the two building
blocks Sh_p(x) = u_p(sinh x / x) and Ch_q(x) = u_q(cosh x), their ratio
h_pq (limit 1/3 at 0+), the difference d_pq = Sh_p - (1/3) Ch_q whose
sign encodes every inequality in the family, the auxiliary trio A, B, C
with the derived function f3, and the bound family m_bound / its
one-parameter boundary slice.

Branch policy:
  * exact-zero dispatch on p and q (a parameter equal to 0.0 selects the
    logarithmic branch; nearby nonzero values go through the general
    path, which is continuous through 0 at machine precision);
  * x below X_SMALL = 1/8 routes to Maclaurin series whose exact
    rational coefficients are generated by the series oracle and shipped
    in series_constants.txt (carried through x^20, far past the 1e-16
    relative truncation point at 1/8, which also keeps the difference
    series fully accurate when its leading coefficients cancel);
  * |p ln t| below 1e-4 routes u_p to a short series in that product.

Everything here is pure float; exactness lives in seriesoracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .errors import DomainError, InputError

X_SMALL = 0.125
SMALL_Z = 1e-4
_EXP_MAX = 709.0  # exp overflows just past this; treated as +inf


# ---------------------------------------------------------------------------
# generated constants


def _load_constants():
    text = resources.files("hypineq").joinpath("series_constants.txt").read_text()
    sinhc: dict[int, float] = {}
    abc: dict[str, dict[int, float]] = {"A": {}, "B": {}, "C": {}}
    sh_rows: dict[int, dict[int, float]] = {}
    ch_rows: dict[int, dict[int, float]] = {}
    for line in text.splitlines():
        if not line or line.startswith("#"):
            continue
        tag, power, num, den = line.split(",")
        value = float(Fraction(int(num), int(den)))
        power = int(power)
        if tag == "sinhc":
            sinhc[power] = value
        elif tag in abc:
            abc[tag][power] = value
        elif tag.startswith("sh_p"):
            sh_rows.setdefault(power // 2, {})[int(tag[4:])] = value
        elif tag.startswith("ch_q"):
            ch_rows.setdefault(power // 2, {})[int(tag[4:])] = value
        else:
            raise InputError(f"unknown constants tag {tag!r}")

    def rows_to_lists(rows):
        out = [[] for _ in range(max(rows) + 1)]
        for m, byd in rows.items():
            out[m] = [byd[d] for d in range(len(byd))]
        return out

    maxj = max(sinhc) // 2
    return (
        [0.0] + [sinhc[2 * j] for j in range(1, maxj + 1)],
        {k: [v[pw] for pw in sorted(v)] for k, v in abc.items()},
        rows_to_lists(sh_rows),
        rows_to_lists(ch_rows),
    )


_SINHC_M1, _ABC, _SH_ROWS, _CH_ROWS = _load_constants()
_MAX_M = len(_SH_ROWS) - 1


@dataclass(frozen=True)
class FnValue:
    """A value plus provenance: which branch fired, which method ran."""

    value: float
    branch: str
    method: str


def _check_x(x: float) -> None:
    if not math.isfinite(x):
        raise InputError(f"x must be finite, got {x}")
    if x <= 0:
        raise DomainError(f"x must be positive, got {x}")


def _check_params(*vals: float) -> None:
    for v in vals:
        if not math.isfinite(v):
            raise InputError(f"parameters must be finite, got {v}")


# ---------------------------------------------------------------------------
# scalar primitives


def sinhcm1(x: float) -> float:
    """sinh(x)/x - 1, accurate for all x > 0 (series below X_SMALL)."""
    if x < X_SMALL:
        x2 = x * x
        acc = 0.0
        for j in range(_MAX_M, 0, -1):
            acc = acc * x2 + _SINHC_M1[j]
        return acc * x2
    if x < 710.0:
        return math.sinh(x) / x - 1.0
    return math.inf


def sinhc(x: float) -> float:
    _check_x(x)
    return 1.0 + sinhcm1(x)


def coshm1(x: float) -> float:
    """cosh(x) - 1 = 2 sinh^2(x/2), exact to rounding at every scale."""
    s = math.sinh(0.5 * x)
    return 2.0 * s * s


def log_sinhc(x: float) -> float:
    """ln(sinh x / x) without overflow; ~ x - ln(2x) for large x."""
    if x < X_SMALL:
        return math.log1p(sinhcm1(x))
    if x <= 33.0:
        return math.log(math.sinh(x) / x)
    return x - math.log(2.0 * x) + math.log1p(-math.exp(-2.0 * x))


def log_cosh(x: float) -> float:
    if x <= 33.0:
        return math.log(math.cosh(x))
    return x - math.log(2.0) + math.log1p(math.exp(-2.0 * x))


def _u_from_log(lt: float, p: float) -> float:
    """u_p(t) given lt = ln t; stable for small p and overflow-guarded."""
    if p == 0.0:
        return lt
    z = p * lt
    if abs(z) < SMALL_Z:
        return lt * (1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0)))
    if z > _EXP_MAX:
        return math.inf
    return math.expm1(z) / p


def u_p(t: float, p: float) -> float:
    """(t^p - 1)/p with u_0 = ln t; relative error ~1e-15 throughout."""
    if not (math.isfinite(t) and math.isfinite(p)):
        raise InputError(f"u_p inputs must be finite, got t={t}, p={p}")
    if t <= 0:
        raise DomainError(f"u_p requires t > 0, got {t}")
    return _u_from_log(math.log(t), p)


def sh_p(x: float, p: float) -> float:
    """u_p(sinh x / x); strictly positive for x > 0."""
    _check_x(x)
    _check_params(p)
    return _u_from_log(log_sinhc(x), p)


def ch_q(x: float, q: float) -> float:
    """u_q(cosh x); strictly positive for x > 0."""
    _check_x(x)
    _check_params(q)
    return _u_from_log(log_cosh(x), q)


def _row_eval(row: list[float], t: float) -> float:
    acc = 0.0
    for c in reversed(row):
        acc = acc * t + c
    return acc


def _h_series(x: float, p: float, q: float) -> float:
    # ratio of the x^2-factored series; exact 1/3 limit as x -> 0
    x2 = x * x
    num = 0.0
    den = 0.0
    for m in range(_MAX_M, 0, -1):
        num = num * x2 + _row_eval(_SH_ROWS[m], p)
        den = den * x2 + _row_eval(_CH_ROWS[m], q)
    return num / den


def h_pq(x: float, p: float, q: float) -> float:
    """Sh_p(x) / Ch_q(x); tends to 1/3 as x -> 0+ for every (p, q)."""
    _check_x(x)
    _check_params(p, q)
    if x < X_SMALL:
        return _h_series(x, p, q)
    lsc = log_sinhc(x)
    lch = log_cosh(x)
    sh = _u_from_log(lsc, p)
    ch = _u_from_log(lch, q)
    if math.isinf(sh) and math.isinf(ch):
        # both terms overflowed; compare on the log scale (p, q > 0 here)
        return math.exp((p * lsc - math.log(p)) - (q * lch - math.log(q)))
    if math.isinf(ch):
        return 0.0
    return sh / ch


def _d_series(x: float, p: float, q: float) -> float:
    x2 = x * x
    acc = 0.0
    for m in range(_MAX_M, 1, -1):
        acc = acc * x2 + (_row_eval(_SH_ROWS[m], p) - _row_eval(_CH_ROWS[m], q) / 3.0)
    return acc * x2 * x2


def d_pq(x: float, p: float, q: float) -> float:
    """Sh_p(x) - (1/3) Ch_q(x).

    The x^2 terms of the two sides cancel exactly, so the series branch
    sums the difference rows directly (leading term x^4) and stays fully
    accurate even where individual coefficients cancel.  Overflowing
    arguments resolve their sign on the log scale instead of returning
    inf - inf.
    """
    _check_x(x)
    _check_params(p, q)
    if x < X_SMALL:
        return _d_series(x, p, q)
    lsc = log_sinhc(x)
    lch = log_cosh(x)
    sh = _u_from_log(lsc, p)
    ch = _u_from_log(lch, q)
    if math.isinf(sh) and math.isinf(ch):
        return math.inf if p * lsc - math.log(p) > q * lch - math.log(3.0 * q) else -math.inf
    if math.isinf(ch):
        return -math.inf
    return sh - ch / 3.0


def d_comparison_scale(x: float, p: float, q: float) -> float:
    """Magnitude of the quantities d_pq actually combines at x.

    Violation margins are measured in ulps of this scale.  On the direct
    branch it is |Sh_p| + |Ch_q|/3 (the subtraction's operands).  On the
    series branch the x^2 rows cancel exactly in float, so the noise
    floor is the absolute-value sum of the x^4-and-up terms; using the
    direct-branch scale there would overstate the noise by orders of
    magnitude and mask genuine sign violations near sharp thresholds.
    """
    _check_x(x)
    if x < X_SMALL:
        x2 = x * x
        acc = 0.0
        for m in range(_MAX_M, 1, -1):
            acc = acc * x2 + (
                abs(_row_eval(_SH_ROWS[m], p)) + abs(_row_eval(_CH_ROWS[m], q)) / 3.0
            )
        return acc * x2 * x2
    sh = _u_from_log(log_sinhc(x), p)
    ch = _u_from_log(log_cosh(x), q)
    if math.isinf(sh) or math.isinf(ch):
        return math.inf
    return abs(sh) + abs(ch) / 3.0


# ---------------------------------------------------------------------------
# auxiliary trio and f3


def wilker_excess(x: float) -> float:
    """sinh^2(x)/x^2 + tanh(x)/x - 2, strictly positive for x > 0.

    Stable form: (sinhc-1)(sinhc+1) + (sinhc - cosh)/cosh keeps relative
    accuracy ~4e-16/x^2 even though the quantity is Theta(x^4).
    """
    _check_x(x)
    sm1 = sinhcm1(x)
    g = sm1 - coshm1(x)  # sinhc - cosh, Theta(x^2), no cancellation loss
    return sm1 * (sm1 + 2.0) + g / math.cosh(x)


def abc_eval(x: float) -> tuple[float, float, float]:
    """The auxiliary functions (A, B, C); all strictly positive for x > 0.

    A = (sinh x - x cosh x)^2 cosh x
    B = x (x cosh x - sinh x) sinh^2 x
    C = -2x^2 cosh x + x sinh x + cosh x sinh^2 x = x^2 cosh(x) * wilker_excess(x)
    """
    _check_x(x)
    x2 = x * x
    if x < X_SMALL:
        vals = []
        for tag in ("A", "B", "C"):
            acc = 0.0
            for c in reversed(_ABC[tag]):
                acc = acc * x2 + c
            vals.append(acc * x2 * x2 * x2)
        return tuple(vals)
    c = math.cosh(x)
    s = math.sinh(x)
    g = sinhcm1(x) - coshm1(x)  # (sinh - x cosh)/x
    a_val = x2 * g * g * c
    b_val = -x2 * g * s * s
    c_val = x2 * c * wilker_excess(x)
    return a_val, b_val, c_val


def f3_eval(x: float, p: float, q: float) -> float:
    """(p A(x) - q B(x)) / C(x) + 1; limit 5p/8 - 15q/8 + 1 as x -> 0+."""
    _check_x(x)
    _check_params(p, q)
    if x < X_SMALL:
        # common x^6 factor cancels; use the factored tables directly
        x2 = x * x
        parts = []
        for tag in ("A", "B", "C"):
            acc = 0.0
            for cf in reversed(_ABC[tag]):
                acc = acc * x2 + cf
            parts.append(acc)
        return (p * parts[0] - q * parts[1]) / parts[2] + 1.0
    a_val, b_val, c_val = abc_eval(x)
    return (p * a_val - q * b_val) / c_val + 1.0


def f2_eval(x: float, p: float, q: float) -> float:
    """p A(x) - q B(x) + C(x) = C(x) * f3(x)."""
    a_val, b_val, c_val = abc_eval(x)
    _check_params(p, q)
    return p * a_val - q * b_val + c_val


# ---------------------------------------------------------------------------
# the bound family


def in_omega(p: float, q: float) -> bool:
    """Parameter set on which the bound family is real: p >= 0 or 3q <= p <= 0."""
    return p >= 0 or (3 * q <= p <= 0)


def log_m_bound(t: float, p: float, q: float) -> float:
    """Natural log of the bound family value (1/p) log(1 + p u_q(t)/3).

    Chain comparisons run on these logs because the family itself
    overflows a float long before the logs do (the q = 8/15 exponential
    member tops out near x = 20 already).
    """
    _check_params(p, q)
    if not math.isfinite(t):
        raise InputError(f"t must be finite, got {t}")
    if t <= 1.0:
        raise DomainError(f"m_bound requires t > 1, got {t}")
    if not in_omega(p, q):
        raise DomainError(
            f"(p, q) = ({p}, {q}) fails both admissibility tests: p >= 0 is false "
            "and 3q <= p <= 0 is false"
        )
    lt = math.log(t)
    if p == 0.0:
        return _u_from_log(lt, q) / 3.0
    if p < 0:
        # admissibility forces 3q <= p < 0; write 1 + p u_q(t)/3 as the
        # nonnegative sum (1 - kappa) + kappa t^q with kappa = p/(3q) in
        # (0, 1], so the log never sees a cancelled -1 at large t
        kappa = p / (3.0 * q)
        assert 0.0 < kappa <= 1.0, "bound family inner quantity must stay positive"
        z = q * lt  # negative
        if kappa == 1.0:
            log_inner = z
        else:
            log_inner = math.log((1.0 - kappa) + kappa * math.exp(z))
    else:
        # p > 0 here, so 1 + p u_q(t)/3 >= 1 for every q (u_q(t) > 0)
        z = q * lt
        if q > 0 and z > _EXP_MAX:
            # u_q(t) would overflow; fold the exponential into the log
            log_inner = z + math.log(p / (3.0 * q)) + math.log1p(
                (3.0 * q / p - 1.0) * math.exp(-z)
            )
        else:
            inner_m1 = p * _u_from_log(lt, q) / 3.0
            if math.isinf(inner_m1):
                log_inner = math.inf
            else:
                log_inner = math.log1p(inner_m1)
    return log_inner / p


def m_bound(t: float, p: float, q: float) -> float:
    """The bound family value (1 + p u_q(t)/3)^(1/p), with its limits.

    Branches: p = q = 0 gives t^(1/3); p = 0 gives exp(u_q(t)/3); any
    other p evaluates through logs for stability.  The inner quantity
    1 + p u_q(t)/3 is positive everywhere on the admissible set, which
    is asserted at runtime rather than trusted silently.
    """
    log_value = log_m_bound(t, p, q)
    if log_value > _EXP_MAX:
        return math.inf
    return math.exp(log_value)


def log_m_boundary_family(t: float, q: float) -> float:
    """Natural log of m_boundary_family (see there)."""
    _check_params(q)
    if not math.isfinite(t):
        raise InputError(f"t must be finite, got {t}")
    if t <= 1.0:
        raise DomainError(f"m_boundary_family requires t > 1, got {t}")
    if q < 8.0 / 15.0 - 4.0 * math.ulp(1.0):
        raise DomainError(f"m_boundary_family requires q >= 8/15, got {q}")
    p = 3.0 * q - 1.6
    if abs(p) < 8.0 * math.ulp(1.6):
        p = 0.0
    return log_m_bound(t, p, q)


def m_boundary_family(t: float, q: float) -> float:
    """The bound family along the critical parameter line, p = 3q - 8/5.

    Decreasing in q, with limit t^(1/3) as q -> infinity.  The left
    endpoint q = 8/15 (where p crosses 0 and the rule changes to an
    exponential) is detected within a few ulps so that the usual float
    spellings of 8/15 land on the exact branch.
    """
    log_value = log_m_boundary_family(t, q)
    if log_value > _EXP_MAX:
        return math.inf
    return math.exp(log_value)


# ---------------------------------------------------------------------------
# provenance dispatcher (CLI surface)


def _u_tags(lt: float, p: float) -> tuple[str, str]:
    if p == 0.0:
        return "p=0", "direct"
    if abs(p * lt) < SMALL_Z:
        return "general", "small-p-series"
    return "general", "direct"


def evaluate(fn: str, *, x: float | None = None, t: float | None = None,
             p: float | None = None, q: float | None = None) -> FnValue:
    """Evaluate a named function and report branch/method provenance."""

    def need(**kw):
        missing = [k for k, v in kw.items() if v is None]
        if missing:
            raise InputError(f"{fn} requires {', '.join(missing)}")

    if fn == "u":
        need(t=t, p=p)
        value = u_p(t, p)
        branch, method = _u_tags(math.log(t), p)
        return FnValue(value, branch, method)
    if fn == "sinhc":
        need(x=x)
        return FnValue(sinhc(x), "general", "small-x-series" if x < X_SMALL else "direct")
    if fn == "sh":
        need(x=x, p=p)
        branch, method = _u_tags(log_sinhc(x), p)
        return FnValue(sh_p(x, p), branch, method)
    if fn == "ch":
        need(x=x, q=q)
        branch, method = _u_tags(log_cosh(x), q)
        return FnValue(ch_q(x, q), branch, method)
    if fn == "h":
        need(x=x, p=p, q=q)
        branch = f"p{'=0' if p == 0 else '!=0'},q{'=0' if q == 0 else '!=0'}"
        return FnValue(h_pq(x, p, q), branch,
                       "small-x-series" if x < X_SMALL else "direct")
    if fn == "d":
        need(x=x, p=p, q=q)
        return FnValue(d_pq(x, p, q), "general",
                       "small-x-series" if x < X_SMALL else "direct")
    if fn == "f3":
        need(x=x, p=p, q=q)
        return FnValue(f3_eval(x, p, q), "general",
                       "small-x-series" if x < X_SMALL else "direct")
    if fn == "m":
        need(t=t, p=p, q=q)
        if p == 0 and q == 0:
            branch = "p=q=0"
        elif p == 0:
            branch = "p=0"
        elif q == 0:
            branch = "q=0"
        else:
            branch = "general"
        return FnValue(m_bound(t, p, q), branch, "direct")
    if fn == "mboundary":
        need(t=t, q=q)
        exp_branch = abs(3.0 * q - 1.6) < 8.0 * math.ulp(1.6)
        return FnValue(m_boundary_family(t, q),
                       "p=0" if exp_branch else "general", "direct")
    raise InputError(f"unknown function {fn!r}; valid: u, sinhc, sh, ch, h, d, f3, m, mboundary")
