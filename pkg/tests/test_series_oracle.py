"""Exact-arithmetic checks for the integer sequences and Taylor tables."""

from fractions import Fraction

import pytest

from hypineq import seriesoracle as so


def test_small_values_exact():
    r = so.coeffs(3)
    assert (r.a, r.b, r.c) == (320, 960, 512)
    assert (r.u, r.v) == (6029312, 4456448)
    assert r.w == 10871635968
    assert r.ratio == Fraction(23, 17)


def test_determinant_matches_closed_forms():
    for n in range(3, 41):
        assert so.u_expanded(n) == so.u_det(n)
        assert so.v_expanded(n) == so.v_det(n)


def test_misprinted_middle_exponent_disagrees():
    # with the printed exponent the n = 3 value is wrong; the corrected
    # one matches the determinant definition for every n
    assert so.v_expanded(3, middle_exponent=2) == 5420903120
    assert so.v_expanded(3, middle_exponent=2) != so.v_det(3)
    bad = [n for n in range(3, 41) if so.v_expanded(n, middle_exponent=2) == so.v_det(n)]
    assert bad == []


def test_w_identity():
    for n in range(3, 41):
        ok, left, right = so.identity_check_w(n)
        assert ok, f"n={n}: {left} != {right}"
        assert left == Fraction(16, 3) * so.w_closed(n)


def test_sequences_positive():
    for n in range(3, 101):
        r = so.coeffs(n)
        assert r.a > 0 and r.b > 0 and r.c > 0
        assert r.u > 0 and r.v > 0 and r.w > 0


def test_ratio_decreasing_toward_one():
    prev = None
    for n in range(3, 201):
        ratio = Fraction(so.u_det(n), so.v_det(n))
        assert ratio > 1
        if prev is not None:
            assert ratio < prev
        prev = ratio
    # the supremum sits at n = 3 and is the sharp slope constant
    assert Fraction(so.u_det(3), so.v_det(3)) == Fraction(23, 17)


def test_coeffs_rejects_small_n():
    with pytest.raises(so.DomainError):
        so.coeffs(2)


def test_taylor_abc_links_to_sequences():
    import math

    ta, tb, tc = so.taylor_abc(8)
    for n in range(3, 9):
        fact = Fraction(math.factorial(2 * n))
        assert ta.coeff(2 * n) == Fraction(so.a_closed(n)) / (4 * fact)
        assert tb.coeff(2 * n) == Fraction(so.b_closed(n)) / (4 * fact)
        assert tc.coeff(2 * n) == Fraction(so.c_closed(n)) / (4 * fact)
    # leading terms
    assert ta.coeff(6) == Fraction(1, 9)
    assert tb.coeff(6) == Fraction(1, 3)
    assert tc.coeff(6) == Fraction(8, 45)


def test_taylor_abc_sums_match_float_eval():
    # the truncated tables should reproduce the closed forms for small x
    from hypineq import hypcore as hc

    ta, tb, tc = so.taylor_abc(12)
    x = 0.1
    for table, want in zip((ta, tb, tc), hc.abc_eval(x)):
        got = sum(float(cf) * x**k for k, cf in enumerate(table.coeffs))
        assert got == pytest.approx(want, rel=1e-12)


def test_parametric_rows():
    sh = so.sh_param_rows(4)
    ch = so.ch_param_rows(4)

    def at(rows, m, p):
        return sum(cf * Fraction(p) ** j for j, cf in enumerate(rows[m]))

    for p in (Fraction(0), Fraction(1), Fraction(-3), Fraction(7, 5)):
        assert at(sh, 1, p) == Fraction(1, 6)
        assert at(sh, 2, p) == Fraction(5 * p - 2, 360)
        assert at(sh, 3, p) == (35 * p * p - 42 * p + 16) / Fraction(45360)
        assert at(ch, 1, p) == Fraction(1, 2)
        assert at(ch, 2, p) == Fraction(3 * p - 2, 24)
        assert at(ch, 3, p) == (15 * p * p - 30 * p + 16) / Fraction(720)


def test_difference_coefficients():
    for p, q in ((Fraction(3), Fraction(1)), (Fraction(-2), Fraction(1, 2))):
        assert so.d4_coeff(p, q) == (5 * p - 15 * q + 8) / Fraction(360)
        assert so.d6_coeff(p, q) == (
            35 * p * p - 42 * p - 315 * q * q + 630 * q - 320
        ) / Fraction(45360)
    # on the critical line the fourth-order term vanishes identically
    for q in (Fraction(0), Fraction(1), Fraction(34, 35), Fraction(-2)):
        p = 3 * q - Fraction(8, 5)
        assert so.d4_coeff(p, q) == 0
        assert so.d6_on_boundary(q) == (35 * q - 34) / Fraction(9450)
    # and at q = 34/35 the sixth order vanishes too; the eighth is fixed
    q = Fraction(34, 35)
    assert so.d6_on_boundary(q) == 0
    table = so.taylor_d(3 * q - Fraction(8, 5), q, max_n=4)
    assert table.coeff(8) == Fraction(1, 55125)


def test_taylor_d_matches_row_combination():
    p, q = Fraction(3), Fraction(1)
    table = so.taylor_d(p, q, max_n=5)
    assert table.coeff(2) == 0  # the x^2 rows cancel exactly
    assert table.coeff(4) == so.d4_coeff(p, q)
    assert table.coeff(6) == so.d6_coeff(p, q)


def test_emit_constants_matches_packaged_file():
    from importlib import resources

    packaged = (
        resources.files("hypineq").joinpath("series_constants.txt").read_text()
    )
    assert so.emit_constants() == packaged
