"""Sharp-constant recovery, witness search, chains, and tail checks."""

import math

import pytest

from hypineq import sharpness as sh
from hypineq.errors import DomainError, InputError

SHARP_FAMILIES = (
    "q1-lower",
    "p0-upper",
    "p1-upper",
    "kq-upper-k1",
    "kq-lower-k32",
    "kq-lower-k2",
    "boundary-lower",
    "boundary-upper",
    "lazarevic-exponent",
)


@pytest.mark.parametrize("family_id", SHARP_FAMILIES)
def test_threshold_recovery(family_id):
    r = sh.find_threshold(family_id)
    assert r.label == "paper-sharp"
    assert r.paper_value is not None
    assert r.abs_error is not None and r.abs_error <= 1e-6, (
        f"{family_id}: |{r.threshold} - {r.paper_value}| = {r.abs_error}"
    )


def test_recovery_grid_independent():
    # a denser grid must not move the recovered constant materially
    for family_id in ("q1-lower", "kq-upper-k1"):
        base = sh.find_threshold(family_id)
        dense = sh.find_threshold(
            family_id, grid=sh.parse_grid_spec("log:0.0001:60:4000")
        )
        assert abs(base.threshold - dense.threshold) < 2e-6
        assert dense.abs_error <= 1e-6


def test_empirical_family_is_labeled_honestly():
    r = sh.find_threshold("empirical-lower-qhalf")
    assert r.label == "empirical"
    assert r.paper_value is None and r.abs_error is None
    # the measured frontier sits well inside the uncovered wedge
    assert 0.50 < r.threshold < 0.55


def test_witnesses_exist_just_past_threshold():
    for family_id in SHARP_FAMILIES:
        fam = sh.get_family(family_id)
        rep = sh.find_family_counterexample(family_id, delta=0.01)
        assert abs(rep.value) > 1e-10, (family_id, rep)
        lo, hi = fam.witness_x_range
        assert lo <= rep.x <= hi
    # known witness geometry for the first family
    rep = sh.find_family_counterexample("q1-lower", delta=0.01)
    assert rep.param == pytest.approx(1.39)
    assert rep.value < 0
    assert rep.x == pytest.approx(0.9588, abs=2e-3)


def test_verify_holds_and_fails():
    ok = sh.verify(3.0, 1.0, sh.Side.SH_GREATER)
    assert ok.holds and ok.witness_x is None
    bad = sh.verify(1.3, 1.0, sh.Side.SH_GREATER)
    assert not bad.holds
    assert bad.margin < 0
    assert 0.5 < bad.witness_x < 10.0
    assert bad.grid_spec == sh.DEFAULT_GRID_SPEC
    # the float spelling of 7/5 undershoots the sharp constant by half
    # an ulp; the resulting violation is below measurement noise and
    # must not be reported as a counterexample
    assert sh.verify(1.4, 1.0, sh.Side.SH_GREATER).holds


def test_verify_other_side():
    k = 8.0 / 15.0
    assert sh.verify(0.0, k + 0.01, sh.Side.SH_LESS).holds
    assert not sh.verify(0.0, k - 0.01, sh.Side.SH_LESS).holds


def test_find_counterexample_location():
    x = sh.find_counterexample(1.3, 1.0, sh.Side.SH_GREATER)
    assert x is not None
    # the refined point should be at least as deep as the grid's best
    from hypineq import hypcore as hc

    assert hc.d_pq(x, 1.3, 1.0) < 0
    assert sh.find_counterexample(3.0, 1.0, sh.Side.SH_GREATER) is None


def test_tail_sign_table():
    assert sh.tail_sign(3.0, 1.0) == 1
    assert sh.tail_sign(1.0, 2.0) == -1
    assert sh.tail_sign(0.5, 0.0) == 1
    assert sh.tail_sign(-1.0, 0.0) == -1
    assert sh.tail_sign(-1.0, -2.0) == 1  # finite limit 5/6 > 0
    assert sh.tail_sign(-6.0, -2.0) == 0  # p = 3q: limit is exactly zero


def test_asymptote_cases():
    a = sh.verify_asymptote(-1.0, -2.0)
    assert a.case == "unscaled-limit" and not a.scaled
    assert a.predicted == pytest.approx(5.0 / 6.0)
    assert abs(a.observed - a.predicted) < 1e-6

    a = sh.verify_asymptote(1.0, -1.0)
    assert a.case == "unscaled-divergence"
    assert a.observed > 1e10 and a.predicted == math.inf

    a = sh.verify_asymptote(0.5, 1.0)
    assert a.case == "scaled-limit" and a.scaled
    assert abs(a.observed - a.predicted) < 1e-4

    a = sh.verify_asymptote(-1.0, 1.0)
    assert a.observed == pytest.approx(-1.0 / 6.0, abs=1e-4)

    # the p = q diagonal approaches its limit only polynomially (the
    # residual at x = 50 is 1/(2x) = 0.01); assert the mechanism, not
    # convergence
    a = sh.verify_asymptote(1.0, 1.0)
    assert a.case == "scaled-limit"
    assert abs(a.observed - a.predicted) == pytest.approx(0.01, rel=1e-3)
    a100 = sh.verify_asymptote(1.0, 1.0, x=100.0)
    assert abs(a100.observed - a100.predicted) == pytest.approx(0.005, rel=1e-3)


def test_asymptote_gate_matches_tail_sign():
    # the gate flags parameters whose tail sign breaks the claimed side
    # (finite-x dips are the grid's job: (1.3, 1) violates ShGreater
    # near x = 4 yet its tail is positive, so the gate stays quiet)
    assert sh.asymptote_violates(0.9, 1.0, sh.Side.SH_GREATER)
    assert not sh.asymptote_violates(1.3, 1.0, sh.Side.SH_GREATER)
    assert not sh.asymptote_violates(3.0, 1.0, sh.Side.SH_GREATER)
    assert sh.asymptote_violates(0.9, 0.5, sh.Side.SH_LESS)
    assert not sh.asymptote_violates(0.0, 2.0, sh.Side.SH_LESS)


@pytest.mark.parametrize("chain_id", ("q1-chain", "p1-chain", "boundary-chain"))
def test_chains_hold(chain_id):
    rep = sh.verify_chain(chain_id)
    assert rep.holds
    assert rep.violations == ()
    assert rep.tightest_gap > 0
    # denser probe set, same verdict
    dense = sh.verify_chain(chain_id, xs=sh.log_grid(0.1, 20.0, 60))
    assert dense.holds and dense.violations == ()


def test_chain_tightest_links():
    rep = sh.verify_chain("q1-chain")
    assert rep.tightest_pair == "m(t;7/5,1) < sinhc"
    assert rep.tightest_x == pytest.approx(0.1, rel=1e-9)
    assert rep.tightest_gap < 1e-8  # the sharp link is razor thin at 0.1
    assert len(rep.members) == 6
    rep = sh.verify_chain("boundary-chain")
    assert rep.tightest_gap < 1e-10
    assert len(rep.members) == 12


def test_chain_and_family_registries():
    assert set(SHARP_FAMILIES) < set(sh.family_ids())
    assert "empirical-lower-qhalf" in sh.family_ids()
    assert sorted(sh.chain_ids()) == sorted(
        ["q1-chain", "p1-chain", "boundary-chain"]
    )


def test_grid_spec_parsing():
    pts = sh.parse_grid_spec("log:0.1:10:5")
    assert len(pts) == 5
    assert pts[0] == pytest.approx(0.1) and pts[-1] == pytest.approx(10.0)
    for bad in ("lin:0:1:5", "log:10:0.1:5", "log:0.1:10:1", "log:0.1:10", "log:-1:10:5"):
        with pytest.raises(InputError):
            sh.parse_grid_spec(bad)


def test_threshold_error_modes():
    with pytest.raises(InputError):
        sh.find_threshold("no-such-family")
    with pytest.raises(DomainError):
        # the predicate does not flip on this interval
        sh.find_threshold("q1-lower", interval=(1.6, 2.0))
