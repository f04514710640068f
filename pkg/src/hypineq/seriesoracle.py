"""Exact-arithmetic oracle for the integer sequences and Taylor tables.

Everything in this module is computed with exact integers and rationals
(`fractions.Fraction`); nothing here touches floating point.  The module
serves three purposes:

1. Reproduce the closed-form integer sequences a_n, b_n, c_n, w_n and the
   determinant-style combinations u_n, v_n that control the sign analysis
   of the auxiliary function f3.
2. Expand the auxiliary functions A, B, C and the central difference
   D_{p,q} = Sh_p - (1/3)Ch_q as exact Maclaurin series, by direct series
   multiplication and composition.  These tables are the ground truth the
   floating-point code and the test suite are validated against.
3. Emit the generated constants file consumed by the fast evaluator for
   its small-argument branches.

The series composition is dense: coefficient arrays of fixed degree, no
sparsity tricks.  Degrees stay in the low hundreds so this is instant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError

# ---------------------------------------------------------------------------
# closed-form integer sequences


def a_closed(n: int) -> int:
    return (4 * n * n - 14 * n + 9) * 9 ** (n - 1) + 12 * n * n - 10 * n - 1


def b_closed(n: int) -> int:
    return 4 * n * (n - 2) * 9 ** (n - 1) - 4 * n * (n - 2)


def c_closed(n: int) -> int:
    return 9**n - 32 * n * n + 24 * n - 1


def w_closed(n: int) -> int:
    return (
        9 ** (3 * n + 2)
        - (1024 * n**4 - 2560 * n**3 + 2752 * n**2 + 243) * 9 ** (2 * n)
        + (1024 * n**4 + 2560 * n**3 + 2752 * n**2 + 243) * 9**n
        - 81
    )


def u_det(n: int) -> int:
    """u_n from its defining determinant-style combination."""
    return b_closed(n + 1) * c_closed(n) - b_closed(n) * c_closed(n + 1)


def v_det(n: int) -> int:
    """v_n from its defining determinant-style combination (ground truth)."""
    return a_closed(n + 1) * c_closed(n) - a_closed(n) * c_closed(n + 1)


def u_expanded(n: int) -> int:
    """The expanded closed form of u_n; agrees with u_det for all n >= 3."""
    bracket = (36 * n - 18) * 9**n - (512 * n**4 - 384 * n**3 - 560 * n**2 + 792 * n - 36)
    return 2 * 9 ** (n - 1) * bracket + 4 * (40 * n * n + 42 * n - 1)


def v_expanded(n: int, middle_exponent: int = 1) -> int:
    """The expanded closed form of v_n.

    The leading bracket term is (36n-45) * 9**(middle_exponent * n).  The
    printed source of this formula shows exponent 2n there, but that
    version disagrees with the determinant definition already at n = 3
    (it gives 5420903120 instead of 4456448); with exponent n both routes
    agree for every n checked.  The default is therefore the corrected
    exponent 1; pass middle_exponent=2 to reproduce the misprinted form.
    The same quantity reappears a few lines later in the source as
    (36n-45)(1+8)^n, which corroborates the correction.
    """
    lead = (36 * n - 45) * 9 ** (middle_exponent * n)
    bracket = lead - (512 * n**4 - 1152 * n**3 + 1072 * n**2)
    tail = 2 * (28 * n + 5) * 9**n - (16 * n * n + 60 * n + 5)
    return 2 * 9 ** (n - 1) * bracket + 2 * tail


@dataclass(frozen=True)
class SeriesRecord:
    """All six exact integers attached to one index n >= 3."""

    n: int
    a: int
    b: int
    c: int
    u: int
    v: int
    w: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.u, self.v)


def coeffs(n: int) -> SeriesRecord:
    """Exact sequence values at index n; u and v from the determinants."""
    if n < 3:
        raise DomainError(f"sequence index must be >= 3, got {n}")
    return SeriesRecord(
        n=n,
        a=a_closed(n),
        b=b_closed(n),
        c=c_closed(n),
        u=u_det(n),
        v=v_det(n),
        w=w_closed(n),
    )


def identity_check_w(n: int) -> tuple[bool, Fraction, Fraction]:
    """Check (u_n v_{n+1} - u_{n+1} v_n) / c_{n+1} == (16/3) w_n exactly.

    Returns (verdict, left side, right side), both sides as exact
    rationals so a failure would be inspectable.
    """
    if n < 3:
        raise DomainError(f"sequence index must be >= 3, got {n}")
    left = Fraction(u_det(n) * v_det(n + 1) - u_det(n + 1) * v_det(n), c_closed(n + 1))
    right = Fraction(16, 3) * w_closed(n)
    return left == right, left, right


# ---------------------------------------------------------------------------
# dense exact series machinery
#
# Even functions are stored as lists indexed by the power of x^2:
# s[j] is the exact coefficient of x^(2j).  All products are truncated
# at a fixed maximum index.


def _series_mul(a: Sequence[Fraction], b: Sequence[Fraction], maxj: int) -> list[Fraction]:
    out = [Fraction(0)] * (maxj + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > maxj:
            continue
        for j, bj in enumerate(b):
            if i + j > maxj:
                break
            if bj:
                out[i + j] += ai * bj
    return out


def _sinhc_series(maxj: int) -> list[Fraction]:
    # sinh(x)/x = sum x^(2j) / (2j+1)!
    return [Fraction(1, math.factorial(2 * j + 1)) for j in range(maxj + 1)]


def _cosh_series(maxj: int) -> list[Fraction]:
    return [Fraction(1, math.factorial(2 * j)) for j in range(maxj + 1)]


@dataclass(frozen=True)
class TaylorTable:
    """Exact Maclaurin coefficients, indexed by the power of x."""

    tag: str
    coeffs: tuple[Fraction, ...]

    def coeff(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        raise DomainError(f"power {power} outside computed table for {self.tag}")


def _even_to_table(tag: str, even: Sequence[Fraction]) -> TaylorTable:
    full = [Fraction(0)] * (2 * (len(even) - 1) + 1)
    for j, cj in enumerate(even):
        full[2 * j] = cj
    return TaylorTable(tag, tuple(full))


def taylor_abc(max_n: int) -> tuple[TaylorTable, TaylorTable, TaylorTable]:
    """Exact series of A, B, C up to x^(2 max_n) by direct multiplication.

    A(x) = (sinh x - x cosh x)^2 cosh x
    B(x) = x (x cosh x - sinh x) sinh^2 x
    C(x) = -2x^2 cosh x + x sinh x + cosh x sinh^2 x

    Writing g(x) = (sinh x - x cosh x)/x (an even function) gives
    A = x^2 g^2 cosh, B = -x^4 g (sinh/x)^2, and C factors through x^2 as
    well, so every product below stays in even-series form.  This route
    never touches the closed-form sequences; equality of the two is what
    the tests assert.
    """
    if max_n < 3:
        raise DomainError(f"max_n must be >= 3, got {max_n}")
    maxj = max_n
    sc = _sinhc_series(maxj)
    ch = _cosh_series(maxj)
    g = [si - ci for si, ci in zip(sc, ch)]  # (sinh - x cosh)/x, starts at j=1

    g2ch = _series_mul(_series_mul(g, g, maxj), ch, maxj)
    a_even = [Fraction(0)] + g2ch[: maxj]  # shift: A = x^2 * (g^2 cosh)

    gsc2 = _series_mul(g, _series_mul(sc, sc, maxj), maxj)
    b_even = [Fraction(0), Fraction(0)] + [-c for c in gsc2[: maxj - 1]]  # B = -x^4 g sc^2

    inner = [
        -2 * ci + si + pi
        for ci, si, pi in zip(ch, sc, _series_mul(ch, _series_mul(sc, sc, maxj), maxj))
    ]
    c_even = [Fraction(0)] + inner[: maxj]  # C = x^2 * (-2 cosh + sinh/x + cosh (sinh/x)^2)

    return (
        _even_to_table("A", a_even),
        _even_to_table("B", b_even),
        _even_to_table("C", c_even),
    )


# ---------------------------------------------------------------------------
# composition u_p(1 + m(x)) and the bivariate coefficient tables


def _u_compose(m1: Sequence[Fraction], p: Fraction, maxj: int) -> list[Fraction]:
    """Series of u_p(1 + m1(x)) for exact rational p; m1[0] must be 0.

    u_p(1+m) = sum_{k>=1} [prod_{i=1}^{k-1}(p - i)] / k! * m^k, which for
    p = 0 degenerates to the log series; the formula covers both because
    the product is interpreted as empty for k = 1.
    """
    assert m1[0] == 0
    out = [Fraction(0)] * (maxj + 1)
    mk = list(m1)
    prod = Fraction(1)
    for k in range(1, maxj + 1):
        if k > 1:
            prod *= p - (k - 1)
            mk = _series_mul(mk, m1, maxj)
        fk = prod / math.factorial(k)
        for j in range(k, maxj + 1):
            if mk[j]:
                out[j] += fk * mk[j]
    return out


def taylor_d(p, q, max_n: int = 10) -> TaylorTable:
    """Exact series of D_{p,q} = u_p(sinh x/x) - (1/3) u_q(cosh x).

    p and q must be exact (int or Fraction); the result is the exact
    Maclaurin table up to x^(2 max_n).  The x^2 coefficient is always 0,
    the x^4 coefficient equals (5p - 15q + 8)/360 and the x^6 one
    (35p^2 - 42p - 315q^2 + 630q - 320)/45360; both closed forms are
    asserted here so every call re-validates them.
    """
    p = Fraction(p)
    q = Fraction(q)
    maxj = max_n
    sc_m1 = _sinhc_series(maxj)
    sc_m1[0] = Fraction(0)
    ch_m1 = _cosh_series(maxj)
    ch_m1[0] = Fraction(0)
    sh = _u_compose(sc_m1, p, maxj)
    ch = _u_compose(ch_m1, q, maxj)
    even = [s - c / 3 for s, c in zip(sh, ch)]
    assert even[1] == 0
    assert even[2] == d4_coeff(p, q)
    assert even[3] == d6_coeff(p, q)
    return _even_to_table("D", even)


def d4_coeff(p, q) -> Fraction:
    """Closed form of the x^4 coefficient of D_{p,q}."""
    return (5 * Fraction(p) - 15 * Fraction(q) + 8) / 360


def d6_coeff(p, q) -> Fraction:
    """Closed form of the x^6 coefficient of D_{p,q}."""
    p = Fraction(p)
    q = Fraction(q)
    return (35 * p * p - 42 * p - 315 * q * q + 630 * q - 320) / 45360


def d6_on_boundary(q) -> Fraction:
    """x^6 coefficient of D along p = 3q - 8/5, where the x^4 term vanishes."""
    q = Fraction(q)
    assert d4_coeff(3 * q - Fraction(8, 5), q) == 0
    reduced = (35 * q - 34) / Fraction(9450)
    assert d6_coeff(3 * q - Fraction(8, 5), q) == reduced
    return reduced


def sh_param_rows(max_m: int = 10) -> list[list[Fraction]]:
    """Coefficient of x^(2m) of u_p(sinh x/x) as a polynomial in p.

    rows[m][d] is the exact coefficient of p^d; rows[0] is empty and
    rows[1] == [1/6] (the x^2 term does not depend on p).
    """
    return _param_rows(_sinhc_series(max_m), max_m)


def ch_param_rows(max_m: int = 10) -> list[list[Fraction]]:
    """Same as sh_param_rows but for u_q(cosh x); rows[1] == [1/2]."""
    return _param_rows(_cosh_series(max_m), max_m)


def _param_rows(base: list[Fraction], maxj: int) -> list[list[Fraction]]:
    m1 = list(base)
    m1[0] = Fraction(0)
    rows: list[list[Fraction]] = [[] for _ in range(maxj + 1)]
    mk = list(m1)
    # prod_{i=1}^{k-1}(p - i) kept as a coefficient list in p
    poly = [Fraction(1)]
    for k in range(1, maxj + 1):
        if k > 1:
            mk = _series_mul(mk, m1, maxj)
            shifted = [Fraction(0)] + poly
            poly = [s - (k - 1) * c for s, c in zip(shifted, poly + [Fraction(0)])]
        fk = Fraction(1, math.factorial(k))
        for m in range(k, maxj + 1):
            if not mk[m]:
                continue
            row = rows[m]
            for d, cd in enumerate(poly):
                val = cd * fk * mk[m]
                while len(row) <= d:
                    row.append(Fraction(0))
                row[d] += val
    return rows


# ---------------------------------------------------------------------------
# generated constants file

CONSTANTS_MAX_M = 10  # tables carried through x^20


def emit_constants() -> str:
    """Render the constants file consumed by the fast evaluator.

    Format: one coefficient per line, `function,power,numerator,denominator`.
    Functions:
      sinhc        coefficient of x^power in sinh(x)/x, power = 2..20
      A, B, C      coefficient of x^power, power = 6..20
      sh_p{d}      coefficient of p^d x^power in u_p(sinh x/x), power = 2..20
      ch_q{d}      same for u_q(cosh x)
    """
    maxm = CONSTANTS_MAX_M
    lines = ["# generated by hypineq.seriesoracle.emit_constants; do not edit"]

    sc = _sinhc_series(maxm)
    for j in range(1, maxm + 1):
        lines.append(_fmt("sinhc", 2 * j, sc[j]))

    ta, tb, tc = taylor_abc(maxm)
    for table in (ta, tb, tc):
        for n in range(3, maxm + 1):
            lines.append(_fmt(table.tag, 2 * n, table.coeff(2 * n)))

    for tag, rows in (("sh_p", sh_param_rows(maxm)), ("ch_q", ch_param_rows(maxm))):
        for m in range(1, maxm + 1):
            for d, cd in enumerate(rows[m]):
                lines.append(_fmt(f"{tag}{d}", 2 * m, cd))

    return "\n".join(lines) + "\n"


def _fmt(tag: str, power: int, value: Fraction) -> str:
    return f"{tag},{power},{value.numerator},{value.denominator}"
