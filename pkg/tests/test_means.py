"""Bivariate means: frozen values, identities, and bound transfer.

Frozen decimals come from an independent 50-digit evaluation of the
defining formulas at the exact float inputs shown.
"""

import math
import random
from fractions import Fraction as F

import pytest

from hypineq import means as mn
from hypineq.errors import DomainError, InputError

REL = 5e-15


def test_frozen_values():
    assert mn.sb(1.0, 2.0) == pytest.approx(1.65398668626537614853, rel=REL)
    assert mn.sb(2.0, 1.0) == pytest.approx(1.31519072220405058311, rel=REL)
    assert mn.ns_mean(2.0, 1.0) == pytest.approx(1.52694997891348721316, rel=REL)
    assert mn.v_mean(2.0, 1.0) == pytest.approx(1.46942935390036283721, rel=REL)
    assert mn.log_mean(2.0, 1.0) == pytest.approx(1.44269504088896340736, rel=REL)
    b = math.cosh(1.0)
    assert mn.sh_mean(1.0, 1.0, b, 1.0) == pytest.approx(
        1.36756978555901144178, rel=REL
    )
    # the (1, 0) member of the two-parameter family is the sb mean itself
    assert mn.sh_mean(1.0, 0.0, b, 1.0) == pytest.approx(
        1.1752011936438014362, rel=REL
    )
    assert mn.sb(0.0, 2.0) == pytest.approx(4.0 / math.pi, rel=REL)


def test_classic_means_dict():
    got = mn.classic_means(2.0, 1.0)
    assert got["G"] == pytest.approx(math.sqrt(2.0))
    assert got["A"] == 1.5
    assert got["Q"] == pytest.approx(math.sqrt(2.5))
    assert got["L"] == pytest.approx(1.0 / math.log(2.0), rel=REL)
    nsv = mn.ns_v_means(2.0, 1.0)
    assert set(nsv) == {"NS", "V"}


def _pairs(n, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        a = math.exp(rng.uniform(-6.0, 6.0))
        b = math.exp(rng.uniform(-6.0, 6.0))
        if a != b:
            out.append((a, b))
    return out


def test_identities_against_classics():
    # sb(A, G) = L, sb(Q, A) = NS, sb(Q, G) = V (larger argument first)
    for a, b in _pairs(1000, seed=101):
        cm = mn.classic_means(a, b)
        g, ar, q = cm["G"], cm["A"], cm["Q"]
        assert mn.sb(ar, g) == pytest.approx(cm["L"], rel=1e-12)
        assert mn.sb(q, ar) == pytest.approx(mn.ns_mean(a, b), rel=1e-12)
        assert mn.sb(q, g) == pytest.approx(mn.v_mean(a, b), rel=1e-12)


def test_sh_10_equals_sb():
    for a, b in _pairs(300, seed=202):
        hi, lo = max(a, b), min(a, b)
        assert mn.sh_mean(1.0, 0.0, hi, lo) == pytest.approx(
            mn.sb(hi, lo), rel=1e-13
        )


def test_betweenness_and_strictness():
    for a, b in _pairs(400, seed=303):
        lo, hi = min(a, b), max(a, b)
        for name, val in (
            ("L", mn.log_mean(a, b)),
            ("NS", mn.ns_mean(a, b)),
            ("V", mn.v_mean(a, b)),
            ("SB", mn.sb(hi, lo)),
        ):
            assert lo < val < hi, (name, a, b, val)


def test_homogeneity():
    for lam in (1e-3, 1.0, 1e3):
        for a, b in _pairs(100, seed=404):
            hi, lo = max(a, b), min(a, b)
            assert mn.sb(lam * hi, lam * lo) == pytest.approx(
                lam * mn.sb(hi, lo), rel=1e-13
            )
            assert mn.ns_mean(lam * a, lam * b) == pytest.approx(
                lam * mn.ns_mean(a, b), rel=1e-13
            )
            assert mn.v_mean(lam * a, lam * b) == pytest.approx(
                lam * mn.v_mean(a, b), rel=1e-13
            )
            assert mn.log_mean(lam * a, lam * b) == pytest.approx(
                lam * mn.log_mean(a, b), rel=1e-13
            )


def test_symmetry():
    for a, b in ((2.0, 1.0), (0.001, 552.0)):
        assert mn.ns_mean(a, b) == mn.ns_mean(b, a)
        assert mn.v_mean(a, b) == mn.v_mean(b, a)
        assert mn.log_mean(a, b) == mn.log_mean(b, a)
    # sb is orientation-dependent by construction
    assert mn.sb(1.0, 2.0) != mn.sb(2.0, 1.0)


def test_diagonal():
    assert mn.sb(3.0, 3.0) == 3.0
    assert mn.ns_mean(3.0, 3.0) == 3.0
    assert mn.v_mean(3.0, 3.0) == 3.0
    assert mn.log_mean(3.0, 3.0) == 3.0
    assert mn.sh_mean(1.0, 2.0, 5.0, 5.0) == 5.0


@pytest.mark.parametrize("eps", [1e-9, 5e-9, 2e-8, 1e-7, 1e-5])
def test_near_equal_branch_matches_reference(eps):
    # spans the series cutoff; compare to a 50-digit direct evaluation
    import mpmath

    mpmath.mp.dps = 50
    a, b = 1.0 + eps, 1.0
    am, bm = mpmath.mpf(a), mpmath.mpf(b)
    want_sb = mpmath.sqrt(am * am - bm * bm) / mpmath.acosh(am / bm)
    assert mn.sb(a, b) == pytest.approx(float(want_sb), rel=5e-14)
    want_ns = (am - bm) / (2 * mpmath.asinh((am - bm) / (am + bm)))
    assert mn.ns_mean(a, b) == pytest.approx(float(want_ns), rel=5e-14)
    y = (am - bm) / mpmath.sqrt(2 * am * bm)
    want_v = mpmath.sqrt(am * bm) * y / mpmath.asinh(y)
    assert mn.v_mean(a, b) == pytest.approx(float(want_v), rel=5e-14)
    want_l = (am - bm) / mpmath.log(am / bm)
    assert mn.log_mean(a, b) == pytest.approx(float(want_l), rel=5e-14)


def test_extreme_ratio_conditioning():
    import mpmath

    mpmath.mp.dps = 50
    a, b = 552.9685, 0.00108
    want = (mpmath.mpf(a) - mpmath.mpf(b)) / mpmath.log(mpmath.mpf(a) / mpmath.mpf(b))
    assert mn.log_mean(a, b) == pytest.approx(float(want), rel=1e-14)
    assert mn.log_mean(b, a) == pytest.approx(float(want), rel=1e-14)


def test_zcothzm1():
    import mpmath

    mpmath.mp.dps = 50
    for z in (1e-3, 0.05, 0.09, 0.5, 1.0, 10.0):
        want = float(mpmath.mpf(z) * mpmath.coth(mpmath.mpf(z)) - 1)
        assert mn.zcothzm1(z) == pytest.approx(want, rel=1e-14), z
    assert mn.zcothzm1(400.0) == 399.0  # coth saturates at 1 in floats


def test_sh_mean_validity_gates():
    with pytest.raises(DomainError, match="L\\(p, q\\)"):
        mn.sh_mean(1.45, 1.45, 3.0, 2.0)  # sum fine, log-mean gate trips
    with pytest.raises(DomainError, match="p \\+ q <= 3"):
        mn.sh_mean(2.0, 1.1, 3.0, 2.0)
    with pytest.raises(DomainError, match="nonpositive"):
        mn.sh_mean(-1.0, 0.5, 3.0, 2.0)
    # a nonpositive parameter is fine while the sum stays in [0, 3]
    got = mn.sh_mean(-1.0, 2.0, 3.0, 2.0)
    assert 2.0 < got < 3.0
    with pytest.raises(InputError):
        mn.sh_mean(1.0, 1.0, 2.0, 3.0)  # needs b >= a


def test_mean_bounds_enclosure():
    b, a = 3.0, 2.0
    s = mn.sb(b, a)
    lo, up = mn.mean_bounds("exponent-pair", b, a, p1=F(7, 5), p2=F(1), q=F(1))
    assert lo < s < up
    lo2, up2 = mn.mean_bounds("base-pair", b, a, p=F(1), q1=F(17, 23), q2=F(1))
    assert lo2 < s < up2
    blo, bup = mn.mean_bounds("boundary", b, a, q=F(1))
    assert blo < s and bup == math.inf
    blo, bup = mn.mean_bounds("boundary", b, a, q=F(4, 5))
    assert blo == 0.0 and s < bup
    rlo, rup = mn.mean_bounds("ratio", b, a, k=F(2), q=F(1))
    assert rlo < s and rup == math.inf
    rlo, rup = mn.mean_bounds("ratio", b, a, k=F(1, 2), q=F(1))
    assert rlo == 0.0 and s < rup


def test_mean_bounds_enclosure_random():
    rng = random.Random(505)
    for _ in range(50):
        a = math.exp(rng.uniform(-2.0, 2.0))
        b = a * math.exp(rng.uniform(1e-6, 4.0))
        s = mn.sb(b, a)
        lo, up = mn.mean_bounds("exponent-pair", b, a, p1=F(7, 5), p2=F(1), q=F(1))
        assert lo < s < up, (b, a)


def test_mean_bounds_rejections():
    b, a = 3.0, 2.0
    # the float 1.4 sits strictly below the sharp 7/5 and lands in the
    # uncovered gap, so it cannot certify a bound
    with pytest.raises(DomainError, match="gap"):
        mn.mean_bounds("exponent-pair", b, a, p1=1.4, p2=F(1), q=F(1))
    with pytest.raises(DomainError):
        mn.mean_bounds("boundary", b, a, q=F(9, 10))  # uncovered segment
    with pytest.raises(InputError):
        mn.mean_bounds("nope", b, a, q=F(1))
    with pytest.raises(InputError):
        mn.mean_bounds("ratio", b, a, k=F(2))  # q missing


def test_mean_bounds_degenerate_pair():
    assert mn.mean_bounds(
        "exponent-pair", 2.0, 2.0, p1=F(7, 5), p2=F(1), q=F(1)
    ) == (2.0, 2.0)


def test_argument_validation():
    with pytest.raises(DomainError):
        mn.sb(2.0, 0.0)
    with pytest.raises(DomainError):
        mn.log_mean(-1.0, 2.0)
    with pytest.raises(DomainError):
        mn.ns_mean(0.0, 0.0)
