"""Grid verification, counterexample search, and sharpness bisection.

Everything here treats the sign question "is d_pq one-signed on (0, inf)"
as a numerical experiment with an honest noise floor: a grid value only
counts as a violation when it exceeds 64 ulp of the magnitude of the
quantities that were actually subtracted to produce it, and sign
information past the grid comes from the closed-form x -> inf behaviour
rather than from sampling ever larger x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Sequence

from . import hypcore as hc
from .errors import DomainError, InputError

ULP_FACTOR = 64
DEFAULT_GRID_SPEC = "log:0.0001:60:2000"
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class Side(Enum):
    SH_GREATER = "ShGreater"  # claim d_pq >= 0 on (0, inf)
    SH_LESS = "ShLess"        # claim d_pq <= 0 on (0, inf)


def log_grid(lo: float, hi: float, n: int) -> list[float]:
    """n points geometrically spaced over [lo, hi], endpoints included."""
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo <= 0 or hi <= lo:
        raise InputError(f"log grid needs 0 < lo < hi, got [{lo}, {hi}]")
    if n < 2:
        raise InputError(f"log grid needs n >= 2, got {n}")
    llo, lhi = math.log(lo), math.log(hi)
    step = (lhi - llo) / (n - 1)
    return [math.exp(llo + i * step) for i in range(n)]


def parse_grid_spec(spec: str) -> list[float]:
    """Parse 'log:LO:HI:N' into grid points."""
    parts = spec.split(":")
    if len(parts) != 4 or parts[0] != "log":
        raise InputError(f"grid spec must look like log:LO:HI:N, got {spec!r}")
    try:
        lo, hi, n = float(parts[1]), float(parts[2]), int(parts[3])
    except ValueError as exc:
        raise InputError(f"bad grid spec {spec!r}: {exc}") from None
    return log_grid(lo, hi, n)


_DEFAULT_GRID: list[float] | None = None


def _default_grid() -> list[float]:
    global _DEFAULT_GRID
    if _DEFAULT_GRID is None:
        _DEFAULT_GRID = parse_grid_spec(DEFAULT_GRID_SPEC)
    return _DEFAULT_GRID


# ---------------------------------------------------------------------------
# asymptotic sign of d_pq


def tail_sign(p: float, q: float) -> int:
    """Sign of d_pq(x) as x -> inf, from the closed-form limits.

    q > 0 : e^(-qx) d -> +inf if p > q, else -2^(-q)/(3q) < 0
    q = 0 : d -> +inf for p >= 0, -inf for p < 0
    q < 0 : d -> +inf for p >= 0, else 1/(3q) - 1/p (zero when p = 3q;
            the approach is from above there, reported as 0 = no gate)
    """
    if q > 0:
        return 1 if p > q else -1
    if q == 0:
        return 1 if p >= 0 else -1
    if p >= 0:
        return 1
    limit = 1.0 / (3.0 * q) - 1.0 / p
    if limit > 0:
        return 1
    if limit < 0:
        return -1
    return 0


def asymptote_violates(p: float, q: float, side: Side) -> bool:
    """True when the x -> inf behaviour alone already breaks the claim."""
    ts = tail_sign(p, q)
    if side is Side.SH_GREATER:
        return ts < 0
    return ts > 0


@dataclass(frozen=True)
class AsymptoteResult:
    observed: float   # d (or e^(-qx) d) at the probe point
    predicted: float  # the closed-form limit, +-inf for divergence
    scaled: bool      # whether the e^(-qx) scaling was applied
    case: str
    x: float


def _exp_or_inf(a: float) -> float:
    if a > hc._EXP_MAX:
        return math.inf
    return math.exp(a)


def verify_asymptote(p: float, q: float, x: float = 50.0) -> AsymptoteResult:
    """Probe the x -> inf behaviour of d_pq at a single large x.

    For q > 0 the probe observes e^(-qx) d_pq(x), assembled term by term
    in the exponent domain so that huge d and tiny e^(-qx) never meet as
    inf * 0.  For q <= 0 the probe observes d_pq(x) itself.
    """
    hc._check_params(p, q)
    if not (math.isfinite(x) and x > 0):
        raise InputError(f"probe point must be positive and finite, got {x}")
    if q > 0:
        lsc = hc.log_sinhc(x)
        lch = hc.log_cosh(x)
        if p == 0.0:
            term_sh = math.exp(-q * x) * lsc
        else:
            term_sh = (_exp_or_inf(p * lsc - q * x) - math.exp(-q * x)) / p
        term_ch = (_exp_or_inf(q * lch - q * x) - math.exp(-q * x)) / (3.0 * q)
        observed = term_sh - term_ch
        if p > q:
            return AsymptoteResult(observed, math.inf, True, "scaled-divergence", x)
        predicted = -(2.0 ** (-q)) / (3.0 * q)
        return AsymptoteResult(observed, predicted, True, "scaled-limit", x)
    observed = hc.d_pq(x, p, q)
    if p >= 0:
        return AsymptoteResult(observed, math.inf, False, "unscaled-divergence", x)
    if q == 0:
        return AsymptoteResult(observed, -math.inf, False, "unscaled-divergence", x)
    predicted = 1.0 / (3.0 * q) - 1.0 / p
    return AsymptoteResult(observed, predicted, False, "unscaled-limit", x)


# ---------------------------------------------------------------------------
# grid verification


@dataclass(frozen=True)
class InequalityVerdict:
    holds: bool
    witness_x: float | None   # grid point with the worst confirmed violation
    margin: float             # signed minimum of the oriented difference
    grid_spec: str
    inconclusive_at: tuple[float, ...] = ()
    notes: str = ""


def _noise_tol(scale: float) -> float:
    if not math.isfinite(scale):
        return math.inf
    return ULP_FACTOR * math.ulp(scale)


def verify(p: float, q: float, side: Side,
           grid: Sequence[float] | None = None,
           grid_spec: str | None = None) -> InequalityVerdict:
    """Check the claimed sign of d_pq over a grid with a 64-ulp noise floor.

    A point whose oriented value is negative but within 64 ulp of the
    comparison magnitude is inconclusive-at-tolerance, not a violation;
    the verdict still holds but lists those points.
    """
    hc._check_params(p, q)
    if grid is None:
        pts = _default_grid()
        spec = DEFAULT_GRID_SPEC
    else:
        pts = list(grid)
        spec = grid_spec or f"custom:{len(pts)}"
        if not pts:
            raise InputError("verification grid is empty")
    sign = 1.0 if side is Side.SH_GREATER else -1.0
    margin = math.inf
    witness = None
    worst = 0.0
    inconclusive: list[float] = []
    for x in pts:
        o = sign * hc.d_pq(x, p, q)
        if o < margin:
            margin = o
        if o < 0.0:
            tol = _noise_tol(hc.d_comparison_scale(x, p, q))
            if o < -tol:
                if o < worst:
                    worst = o
                    witness = x
            else:
                inconclusive.append(x)
    notes = ""
    if inconclusive:
        notes = (f"inconclusive-at-tolerance at {len(inconclusive)} grid "
                 f"point(s); wrong sign but within {ULP_FACTOR} ulp of the "
                 "comparison magnitude")
    return InequalityVerdict(witness is None, witness, margin, spec,
                             tuple(inconclusive), notes)


def _golden_min(f: Callable[[float], float], lo: float, hi: float,
                iters: int = 60) -> float:
    """Argmin of f over [lo, hi] by golden-section search."""
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
        if b - a <= 1e-12 * max(1.0, abs(a)):
            break
    return 0.5 * (a + b)


def find_counterexample(p: float, q: float, side: Side,
                        x_range: tuple[float, float] = (1e-4, 60.0),
                        n: int = 400) -> float | None:
    """Search x_range coarse-to-fine for a confirmed sign violation.

    Returns the violating x (sharpened by golden-section around the worst
    grid point) or None if every point is clean or merely inconclusive.
    """
    hc._check_params(p, q)
    pts = log_grid(x_range[0], x_range[1], n)
    sign = 1.0 if side is Side.SH_GREATER else -1.0

    def oriented(x: float) -> float:
        return sign * hc.d_pq(x, p, q)

    worst = 0.0
    worst_i = None
    for i, x in enumerate(pts):
        o = oriented(x)
        if o < worst and o < -_noise_tol(hc.d_comparison_scale(x, p, q)):
            worst = o
            worst_i = i
    if worst_i is None:
        return None
    lo = pts[max(worst_i - 1, 0)]
    hi = pts[min(worst_i + 1, len(pts) - 1)]
    x_star = _golden_min(oriented, lo, hi)
    if oriented(x_star) < worst:
        return x_star
    return pts[worst_i]


# ---------------------------------------------------------------------------
# sharpness families


@dataclass(frozen=True)
class Family:
    family_id: str
    label: str                          # "paper-sharp" or "empirical"
    paper_value: Fraction | None        # None for empirical families
    side: Side
    holds_from_above: bool              # inequality holds iff c >= threshold
    default_interval: tuple[float, float]
    witness_x_range: tuple[float, float]
    param_map: Callable[[float], tuple[float, float]] | None
    description: str

    def oriented(self, c: float, x: float) -> tuple[float, float]:
        """(oriented difference, noise tolerance) at parameter c, point x."""
        if self.param_map is None:
            lsc = hc.log_sinhc(x)
            lch = hc.log_cosh(x)
            v = c * lsc - lch
            return v, _noise_tol(abs(c * lsc) + abs(lch))
        p, q = self.param_map(c)
        sign = 1.0 if self.side is Side.SH_GREATER else -1.0
        return (sign * hc.d_pq(x, p, q),
                _noise_tol(hc.d_comparison_scale(x, p, q)))

    def tail_violates(self, c: float) -> bool:
        if self.param_map is None:
            return False  # c log sinhc - log cosh ~ (c-1)x > 0 on the search box
        p, q = self.param_map(c)
        return asymptote_violates(p, q, self.side)

    def holds(self, c: float, grid: Sequence[float]) -> bool:
        if self.tail_violates(c):
            return False
        for x in grid:
            v, tol = self.oriented(c, x)
            if v < -tol:
                return False
        return True


FAMILIES: dict[str, Family] = {
    f.family_id: f
    for f in [
        Family("q1-lower", "paper-sharp", Fraction(7, 5), Side.SH_GREATER, True,
               (1.0, 2.0), (1e-4, 60.0), lambda c: (c, 1.0),
               "least exponent c with d_{c,1} >= 0 everywhere"),
        Family("p0-upper", "paper-sharp", Fraction(8, 15), Side.SH_LESS, True,
               (0.3, 1.0), (1e-4, 60.0), lambda c: (0.0, c),
               "least base parameter c with d_{0,c} <= 0 everywhere"),
        Family("p1-upper", "paper-sharp", Fraction(1, 1), Side.SH_LESS, True,
               (0.5, 1.5), (1e-4, 600.0), lambda c: (1.0, c),
               "least base parameter c with d_{1,c} <= 0 everywhere"),
        Family("kq-upper-k1", "paper-sharp", Fraction(4, 5), Side.SH_LESS, True,
               (0.3, 2.0), (1e-4, 60.0), lambda c: (c, c),
               "least c with d_{c,c} <= 0 everywhere (ray k = 1)"),
        Family("kq-lower-k32", "paper-sharp", Fraction(16, 15), Side.SH_GREATER,
               False, (0.8, 1.4), (1e-4, 60.0), lambda c: (1.5 * c, c),
               "greatest c with d_{1.5c,c} >= 0 everywhere (ray k = 3/2)"),
        Family("kq-lower-k2", "paper-sharp", Fraction(8, 5), Side.SH_GREATER,
               False, (1.0, 2.0), (1e-4, 60.0), lambda c: (2.0 * c, c),
               "greatest c with d_{2c,c} >= 0 everywhere (ray k = 2)"),
        Family("boundary-lower", "paper-sharp", Fraction(34, 35),
               Side.SH_GREATER, True, (0.9, 1.1), (1e-4, 60.0),
               lambda c: (3.0 * c - 1.6, c),
               "least c with d >= 0 along the line p = 3q - 8/5"),
        Family("boundary-upper", "paper-sharp", Fraction(4, 5), Side.SH_LESS,
               False, (0.7, 0.9), (1e-4, 600.0), lambda c: (3.0 * c - 1.6, c),
               "greatest c with d <= 0 along the line p = 3q - 8/5"),
        Family("lazarevic-exponent", "paper-sharp", Fraction(3, 1),
               Side.SH_GREATER, True, (2.0, 4.0), (1e-4, 60.0), None,
               "least exponent c with (sinh x / x)^c >= cosh x everywhere"),
        Family("empirical-lower-qhalf", "empirical", None, Side.SH_GREATER,
               True, (0.5, 0.8), (1e-4, 60.0), lambda c: (c, 0.5),
               "observed frontier of d_{c,1/2} >= 0; no closed form is "
               "claimed, the covered sufficient clause starts at 23/34"),
    ]
}


def family_ids() -> list[str]:
    return list(FAMILIES)


def get_family(family_id: str) -> Family:
    try:
        return FAMILIES[family_id]
    except KeyError:
        raise InputError(
            f"unknown family {family_id!r}; valid families: "
            + ", ".join(FAMILIES)
        ) from None


@dataclass(frozen=True)
class SharpnessResult:
    family_id: str
    threshold: float
    paper_value: Fraction | None
    abs_error: float | None
    iterations: int
    label: str


def find_threshold(family_id: str,
                   interval: tuple[float, float] | None = None,
                   tol: float = 1e-9, max_iter: int = 60,
                   grid: Sequence[float] | None = None) -> SharpnessResult:
    """Bisect the family parameter to the frontier where the claim flips.

    The predicate combines the grid check with the asymptotic gate, so a
    violation that only materialises beyond the grid (slow divergence at
    huge x) still fails the right side of the bracket.  Endpoints that
    agree are a diagnostic error, not a silent shrink.
    """
    fam = get_family(family_id)
    lo, hi = interval if interval is not None else fam.default_interval
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise InputError(f"bad bisection interval [{lo}, {hi}]")
    pts = list(grid) if grid is not None else _default_grid()
    lo_holds = fam.holds(lo, pts)
    hi_holds = fam.holds(hi, pts)
    if lo_holds == hi_holds:
        raise DomainError(
            f"family {family_id!r}: predicate does not flip over "
            f"[{lo}, {hi}] (holds({lo}) = {lo_holds}, holds({hi}) = "
            f"{hi_holds}); widen the interval"
        )
    iterations = 0
    while hi - lo > tol and iterations < max_iter:
        mid = 0.5 * (lo + hi)
        if fam.holds(mid, pts) == lo_holds:
            lo = mid
        else:
            hi = mid
        iterations += 1
    threshold = 0.5 * (lo + hi)
    abs_error = (abs(threshold - float(fam.paper_value))
                 if fam.paper_value is not None else None)
    return SharpnessResult(fam.family_id, threshold, fam.paper_value,
                           abs_error, iterations, fam.label)


@dataclass(frozen=True)
class CounterexampleReport:
    family_id: str
    param: float
    x: float | None
    value: float  # the family's defining difference at (param, x)


def find_family_counterexample(family_id: str, delta: float = 0.01,
                               param: float | None = None) -> CounterexampleReport:
    """Push the family parameter past its frontier and exhibit a violation.

    With no explicit param the sharp value is perturbed by delta in the
    failing direction; families whose violations drift to very large x
    carry a wider witness range in the registry.
    """
    fam = get_family(family_id)
    if param is None:
        if fam.paper_value is None:
            raise InputError(
                f"family {family_id!r} has no sharp value; pass param explicitly"
            )
        c = float(fam.paper_value) + (-delta if fam.holds_from_above else delta)
    else:
        c = param
    if fam.param_map is None:
        pts = log_grid(*fam.witness_x_range, 400)

        def oriented(x: float) -> float:
            return fam.oriented(c, x)[0]

        worst_x = min(pts, key=oriented)
        x_star = _golden_min(oriented, worst_x * 0.8, worst_x * 1.25)
        if oriented(x_star) >= oriented(worst_x):
            x_star = worst_x
        v = oriented(x_star)
        return CounterexampleReport(family_id, c, x_star if v < 0 else None, v)
    p, q = fam.param_map(c)
    x = find_counterexample(p, q, fam.side, fam.witness_x_range)
    if x is None:
        return CounterexampleReport(family_id, c, None, math.nan)
    return CounterexampleReport(family_id, c, x, hc.d_pq(x, p, q))


# ---------------------------------------------------------------------------
# ordered bound chains


def _chain_members(chain_id: str) -> list[tuple[str, Callable[[float], float]]]:
    def lmb(p: float, q: float) -> Callable[[float], float]:
        return lambda x: hc.log_m_bound(math.cosh(x), p, q)

    def lmboundary(q: float) -> Callable[[float], float]:
        return lambda x: hc.log_m_boundary_family(math.cosh(x), q)

    if chain_id == "q1-chain":
        return [
            ("m(t;3,1)", lmb(3.0, 1.0)),
            ("m(t;2,1)", lmb(2.0, 1.0)),
            ("m(t;3/2,1)", lmb(1.5, 1.0)),
            ("m(t;7/5,1)", lmb(1.4, 1.0)),
            ("sinhc", hc.log_sinhc),
            ("m(t;1,1)", lmb(1.0, 1.0)),
        ]
    if chain_id == "p1-chain":
        return [
            ("m(t;1,0)", lmb(1.0, 0.0)),
            ("m(t;1,1/6)", lmb(1.0, 1.0 / 6.0)),
            ("m(t;1,1/3)", lmb(1.0, 1.0 / 3.0)),
            ("m(t;1,1/2)", lmb(1.0, 0.5)),
            ("m(t;1,2/3)", lmb(1.0, 2.0 / 3.0)),
            ("m(t;1,17/23)", lmb(1.0, 17.0 / 23.0)),
            ("sinhc", hc.log_sinhc),
            ("m(t;1,1)", lmb(1.0, 1.0)),
        ]
    if chain_id == "boundary-chain":
        return [
            ("t^(1/3)", lambda x: hc.log_cosh(x) / 3.0),
            ("mb(2)", lmboundary(2.0)),
            ("mb(8/5)", lmboundary(1.6)),
            ("mb(6/5)", lmboundary(1.2)),
            ("mb(16/15)", lmboundary(16.0 / 15.0)),
            ("mb(1)", lmboundary(1.0)),
            ("mb(34/35)", lmboundary(34.0 / 35.0)),
            ("sinhc", hc.log_sinhc),
            ("mb(4/5)", lmboundary(0.8)),
            ("mb(7/10)", lmboundary(0.7)),
            ("mb(2/3)", lmboundary(2.0 / 3.0)),
            ("mb(8/15)", lmboundary(8.0 / 15.0)),
        ]
    raise InputError(
        f"unknown chain {chain_id!r}; valid chains: q1-chain, p1-chain, "
        "boundary-chain"
    )


def chain_ids() -> list[str]:
    return ["q1-chain", "p1-chain", "boundary-chain"]


@dataclass(frozen=True)
class ChainReport:
    chain_id: str
    holds: bool
    members: tuple[str, ...]
    tightest_gap: float       # min adjacent log-gap over all x
    tightest_x: float
    tightest_pair: str
    violations: tuple[tuple[float, str], ...] = field(default_factory=tuple)


def verify_chain(chain_id: str, xs: Sequence[float] | None = None) -> ChainReport:
    """Check strict ordering of a bound chain on a set of x values.

    Members are compared in the log domain, where every member stays
    finite over the supported range even though some member values
    overflow a float well before x = 20.
    """
    members = _chain_members(chain_id)
    if xs is None:
        xs = log_grid(0.1, 20.0, 25)
    labels = tuple(lbl for lbl, _ in members)
    tightest = math.inf
    t_x = math.nan
    t_pair = ""
    violations: list[tuple[float, str]] = []
    for x in xs:
        if not (math.isfinite(x) and x > 0):
            raise InputError(f"chain grid point must be positive, got {x}")
        vals = [fn(x) for _, fn in members]
        for i in range(len(vals) - 1):
            gap = vals[i + 1] - vals[i]
            pair = f"{labels[i]} < {labels[i + 1]}"
            if gap < tightest:
                tightest = gap
                t_x = x
                t_pair = pair
            if gap <= 0.0:
                violations.append((x, pair))
    return ChainReport(chain_id, not violations, labels, tightest, t_x,
                       t_pair, tuple(violations))
