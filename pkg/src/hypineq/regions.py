"""Exact parameter-region logic for the monotonicity classifications.

Every comparison in this module runs in exact rational arithmetic
(`Fraction(float)` is exact, so float inputs lose nothing), which makes
the two equivalent band formulations provably identical on any grid and
keeps boundary cases deterministic.

The classifier encodes sufficient conditions; parameter pairs that no
clause covers get the explicit NotCovered verdict, never an error and
never an extrapolated guess.  In particular the wedge q < p < 23q/17
with 0 < q < 34/35 is genuinely open and stays NotCovered.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import InputError

F34_35 = Fraction(34, 35)
F4_5 = Fraction(4, 5)
F46_35 = Fraction(46, 35)
F23_17 = Fraction(23, 17)
F8_5 = Fraction(8, 5)
F8_15 = Fraction(8, 15)


class Direction(Enum):
    INCREASING = "Increasing"
    DECREASING = "Decreasing"
    NOT_COVERED = "NotCovered"


@dataclass(frozen=True)
class MonotonicityVerdict:
    direction: Direction
    clause: str
    boundary_note: bool = False


@dataclass(frozen=True)
class RegionMembership:
    in_i1: bool
    in_i2: bool
    in_omega: bool
    slack: Fraction  # 5p/8 - 15q/8 + 1


def _exact(v, name: str) -> Fraction:
    if isinstance(v, float):
        if not math.isfinite(v):
            raise InputError(f"{name} must be finite, got {v}")
        return Fraction(v)
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    raise InputError(f"{name} must be a real number, got {type(v).__name__}")


def slack(p, q) -> Fraction:
    """The pivot quantity 5p/8 - 15q/8 + 1; its sign separates I1 from I2."""
    p = _exact(p, "p")
    q = _exact(q, "q")
    return Fraction(5, 8) * p - Fraction(15, 8) * q + 1


def membership(p, q) -> RegionMembership:
    """Exact membership in I1, I2 and the bound-family domain.

    I1 = {q=0, p>0} u {q>0, p/q >= 23/17} u {q<0, p/q <= 1}
    I2 = {q=0, p<0} u {q>0, p/q <= 1}    u {q<0, p/q >= 23/17}
    Omega = {p >= 0} u {3q <= p <= 0}
    """
    p = _exact(p, "p")
    q = _exact(q, "q")
    if q == 0:
        in_i1 = p > 0
        in_i2 = p < 0
    else:
        ratio = p / q
        if q > 0:
            in_i1 = ratio >= F23_17
            in_i2 = ratio <= 1
        else:
            in_i1 = ratio <= 1
            in_i2 = ratio >= F23_17
    in_omega = p >= 0 or (3 * q <= p <= 0)
    return RegionMembership(in_i1, in_i2, in_omega, slack(p, q))


def _verdict(direction: Direction, clause: str, on_boundary: bool) -> MonotonicityVerdict:
    return MonotonicityVerdict(direction, clause, on_boundary)


def classify(p, q) -> MonotonicityVerdict:
    """Monotonicity of h_pq in x per the four q-bands.

    band 1: q >= 34/35    increasing for p >= 3q - 8/5, decreasing for p <= q
    band 2: 4/5 <= q < 34/35  increasing for p >= 23q/17, decreasing for p <= q
    band 3: 0 < q < 4/5   increasing for p >= 23q/17, decreasing for p <= 3q - 8/5
    band 4: q <= 0        increasing for p >= q,      decreasing for p <= 3q - 8/5

    A clause that fires with equality (p exactly on its threshold, or q
    exactly on a band edge) is reported with boundary_note=True.
    """
    p = _exact(p, "p")
    q = _exact(q, "q")
    if q >= F34_35:
        band, edge = "q-band-1", q == F34_35
        up, down = 3 * q - F8_5, q
    elif q >= F4_5:
        band, edge = "q-band-2", q == F4_5
        up, down = F23_17 * q, q
    elif q > 0:
        band, edge = "q-band-3", False
        up, down = F23_17 * q, 3 * q - F8_5
    else:
        band, edge = "q-band-4", q == 0
        up, down = q, 3 * q - F8_5
    if p >= up:
        return _verdict(Direction.INCREASING, f"{band}.increasing", edge or p == up)
    if p <= down:
        return _verdict(Direction.DECREASING, f"{band}.decreasing", edge or p == down)
    return _verdict(Direction.NOT_COVERED, f"{band}.gap", edge)


def classify_pbands(p, q) -> MonotonicityVerdict:
    """The equivalent restatement of classify over four p-bands.

    band 1: p >= 46/35    increasing for q <= p/3 + 8/15, decreasing for q >= p
    band 2: 4/5 <= p < 46/35  increasing for q <= 17p/23, decreasing for q >= p
    band 3: 0 < p < 4/5   increasing for q <= 17p/23, decreasing for q >= p/3 + 8/15
    band 4: p <= 0        increasing for q <= p,      decreasing for q >= p/3 + 8/15

    Returns identical directions to classify for every (p, q); the test
    suite asserts this on a dense grid.
    """
    p = _exact(p, "p")
    q = _exact(q, "q")
    if p >= F46_35:
        band, edge = "p-band-1", p == F46_35
        up, down = p / 3 + F8_15, p
    elif p >= F4_5:
        band, edge = "p-band-2", p == F4_5
        up, down = Fraction(17, 23) * p, p
    elif p > 0:
        band, edge = "p-band-3", False
        up, down = Fraction(17, 23) * p, p / 3 + F8_15
    else:
        band, edge = "p-band-4", p == 0
        up, down = p, p / 3 + F8_15
    if q <= up:
        return _verdict(Direction.INCREASING, f"{band}.increasing", edge or q == up)
    if q >= down:
        return _verdict(Direction.DECREASING, f"{band}.decreasing", edge or q == down)
    return _verdict(Direction.NOT_COVERED, f"{band}.gap", edge)


def classify_kq(k, q) -> MonotonicityVerdict:
    """Monotonicity of h_pq along the ray p = k q, per the five k-bands.

    band 1: k > 3         increasing for q >= 0, decreasing for q <= 8/(5(3-k))
    band 2: k = 3         increasing for every q (transcribed as stated; see
                          the k=3 note below)
    band 3: 23/17 <= k < 3  increasing for 0 <= q <= 8/(5(3-k))
    band 4: 1 < k < 23/17   increasing for q = 0
    band 5: k <= 1        increasing for q <= 0, decreasing for q >= 8/(5(3-k))

    Note on k = 3 with q < 0: the transcribed clause claims increasing
    for all real q, but for q < 0 the underlying function has equal
    limits 1/3 at both ends of (0, inf) while sitting above 1/3 in
    between, so it cannot be increasing there.  The clause is kept as
    stated because this classifier's contract is transcription; the
    numerical-corroboration tests therefore restrict k = 3 to q >= 0.
    """
    k = _exact(k, "k")
    q = _exact(q, "q")
    if k > 3:
        pivot = 8 / (5 * (3 - k))  # negative here
        if q >= 0:
            return _verdict(Direction.INCREASING, "k-band-1.increasing", q == 0)
        if q <= pivot:
            return _verdict(Direction.DECREASING, "k-band-1.decreasing", q == pivot)
        return _verdict(Direction.NOT_COVERED, "k-band-1.gap", False)
    if k == 3:
        return _verdict(Direction.INCREASING, "k-band-2.increasing", True)
    if k >= F23_17:
        pivot = 8 / (5 * (3 - k))
        if 0 <= q <= pivot:
            return _verdict(
                Direction.INCREASING, "k-band-3.increasing",
                k == F23_17 or q == 0 or q == pivot,
            )
        return _verdict(Direction.NOT_COVERED, "k-band-3.gap", k == F23_17)
    if k > 1:
        if q == 0:
            return _verdict(Direction.INCREASING, "k-band-4.increasing", True)
        return _verdict(Direction.NOT_COVERED, "k-band-4.gap", False)
    pivot = 8 / (5 * (3 - k))
    if q <= 0:
        return _verdict(Direction.INCREASING, "k-band-5.increasing", k == 1 or q == 0)
    if q >= pivot:
        return _verdict(Direction.DECREASING, "k-band-5.decreasing", k == 1 or q == pivot)
    return _verdict(Direction.NOT_COVERED, "k-band-5.gap", k == 1)


def classify_boundary(q) -> MonotonicityVerdict:
    """Monotonicity of h_pq along the critical line p = 3q - 8/5."""
    q = _exact(q, "q")
    if q >= F34_35:
        return _verdict(Direction.INCREASING, "boundary.increasing", q == F34_35)
    if q <= F4_5:
        return _verdict(Direction.DECREASING, "boundary.decreasing", q == F4_5)
    return _verdict(Direction.NOT_COVERED, "boundary.gap", False)
