"""Numerical workbench for a two-parameter family of hyperbolic inequalities.

Core surface:

* hypcore: stable evaluation of the generalized logarithm, the ratio h,
  the difference d, the auxiliary positivity functions and the bound
  family, with explicit branch tags.
* seriesoracle: exact-rational Maclaurin machinery and the big-integer
  sequences behind the coefficient positivity arguments.
* regions: exact classification of parameter regions (plane, rays,
  critical line).
* sharpness: grid verification with an honest noise floor, sharp
  threshold bisection, counterexample search, ordered bound chains.
* means: classic and arc-based bivariate means, the two-parameter
  hyperbolic mean, and bound transfer to mean inequalities.
* acceptance: the numbered acceptance battery.
* cli: the `hypineq` command.
"""

from .errors import DomainError, InputError
from .hypcore import (
    FnValue,
    abc_eval,
    ch_q,
    d_comparison_scale,
    d_pq,
    evaluate,
    f2_eval,
    f3_eval,
    h_pq,
    in_omega,
    log_cosh,
    log_m_bound,
    log_m_boundary_family,
    log_sinhc,
    m_bound,
    m_boundary_family,
    sh_p,
    sinhc,
    sinhcm1,
    u_p,
    wilker_excess,
)
from .means import (
    classic_means,
    log_mean,
    mean_bounds,
    ns_mean,
    ns_v_means,
    sb,
    sh_mean,
    v_mean,
)
from .regions import (
    Direction,
    MonotonicityVerdict,
    RegionMembership,
    classify,
    classify_boundary,
    classify_kq,
    classify_pbands,
    membership,
)
from .seriesoracle import (
    SeriesRecord,
    TaylorTable,
    a_closed,
    b_closed,
    c_closed,
    coeffs,
    emit_constants,
    identity_check_w,
    taylor_abc,
    taylor_d,
    u_det,
    u_expanded,
    v_det,
    v_expanded,
    w_closed,
)
from .sharpness import (
    AsymptoteResult,
    ChainReport,
    CounterexampleReport,
    Family,
    InequalityVerdict,
    SharpnessResult,
    Side,
    chain_ids,
    family_ids,
    find_counterexample,
    find_family_counterexample,
    find_threshold,
    get_family,
    log_grid,
    tail_sign,
    verify,
    verify_asymptote,
    verify_chain,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError", "InputError", "FnValue", "abc_eval", "ch_q",
    "d_comparison_scale", "d_pq", "evaluate", "f2_eval", "f3_eval", "h_pq",
    "in_omega", "log_cosh", "log_m_bound", "log_m_boundary_family",
    "log_sinhc", "m_bound", "m_boundary_family", "sh_p", "sinhc", "sinhcm1",
    "u_p", "wilker_excess", "classic_means", "log_mean", "mean_bounds",
    "ns_mean", "ns_v_means", "sb", "sh_mean", "v_mean", "Direction",
    "MonotonicityVerdict", "RegionMembership", "classify",
    "classify_boundary", "classify_kq", "classify_pbands", "membership",
    "SeriesRecord", "TaylorTable", "a_closed", "b_closed", "c_closed",
    "coeffs", "emit_constants", "identity_check_w", "taylor_abc", "taylor_d",
    "u_det", "u_expanded", "v_det", "v_expanded", "w_closed",
    "AsymptoteResult", "ChainReport", "CounterexampleReport", "Family",
    "InequalityVerdict", "SharpnessResult", "Side", "chain_ids", "family_ids",
    "find_counterexample", "find_family_counterexample", "find_threshold",
    "get_family", "log_grid", "tail_sign", "verify", "verify_asymptote",
    "verify_chain", "__version__",
]
