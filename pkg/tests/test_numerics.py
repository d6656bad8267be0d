import random
from fractions import Fraction

import pytest

from core.exceptions import DisconnectedUnionError, DomainError, InvalidBasePairError, RationalParseError
from core.rationals import format_rational, parse_rational
from models.base_pair import BasePair
from models.interval import EMPTY, RatInterval
from services.interval_service import IntervalService


@pytest.mark.parametrize(
    "text, expected",
    [
        ("3/4", Fraction(3, 4)),
        ("6/8", Fraction(3, 4)),
        ("-2/4", Fraction(-1, 2)),
        ("0.55", Fraction(11, 20)),
        (" 1 ", Fraction(1)),
        (".5", Fraction(1, 2)),
    ],
)
def test_parse_rational_accepts_fractions_and_decimals(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["", "abc", "1/0", "1/-2", "3/4/5", "1e-3", "0x10"])
def test_parse_rational_rejects_malformed_text(text):
    with pytest.raises(RationalParseError):
        parse_rational(text)


def test_format_rational_always_uses_p_over_q():
    assert format_rational(Fraction(2)) == "2/1"
    assert format_rational(Fraction(-6, 8)) == "-3/4"
    assert format_rational(0) == "0/1"


def test_parse_error_exit_code_differs_from_domain_errors():
    assert RationalParseError.exit_code == 1
    assert DomainError.exit_code == 2
    assert InvalidBasePairError.exit_code == 2


@pytest.mark.parametrize(
    "beta0, beta1, fragment",
    [
        ("3/4", "1/2", "β₁ = 1/2"),
        ("2/3", "3/4", "β₁ = 3/4 > β₀ = 2/3"),
        ("1/1", "2/3", "β₀ = 1/1"),
    ],
)
def test_invalid_base_pair_names_the_constraint(beta0, beta1, fragment):
    with pytest.raises(InvalidBasePairError) as excinfo:
        BasePair.parse(beta0, beta1)
    message = str(excinfo.value)
    assert "1/2 < β₁ ≤ β₀ < 1" in message
    assert fragment in message


def test_base_pair_derived_constants(continuum_pair):
    assert continuum_pair.interval_max == 2
    assert continuum_pair.overlap_hi == Fraction(3, 2)
    assert str(continuum_pair.overlap) == "[2/3, 3/2]"
    assert str(continuum_pair.open_interval) == "(0/1, 2/1)"


def test_equal_bases_are_allowed():
    pair = BasePair.parse("2/3", "2/3")
    assert pair.interval_max == 2


def test_interval_membership_respects_openness():
    half_open = RatInterval(Fraction(0), Fraction(1), True, False)
    assert half_open.contains(Fraction(0))
    assert not half_open.contains(Fraction(1))
    assert Fraction(1, 2) in half_open
    assert str(half_open) == "[0/1, 1/1)"
    assert not EMPTY.contains(Fraction(0))


def test_degenerate_interval_is_rejected():
    with pytest.raises(DomainError):
        RatInterval.open(Fraction(1), Fraction(1))
    assert RatInterval.closed(Fraction(1), Fraction(1)).contains(Fraction(1))


def test_intersect_handles_touching_and_disjoint_intervals():
    a = RatInterval.closed(Fraction(0), Fraction(1))
    b = RatInterval(Fraction(1), Fraction(2), True, False)
    touching = IntervalService.intersect(a, b)
    assert touching == RatInterval.closed(Fraction(1), Fraction(1))

    c = RatInterval.open(Fraction(1), Fraction(2))
    assert IntervalService.intersect(a, c) is EMPTY
    assert IntervalService.intersect(EMPTY, a) is EMPTY


def test_union_connected_merges_touching_intervals():
    a = RatInterval(Fraction(0), Fraction(1), True, False)
    b = RatInterval.closed(Fraction(1), Fraction(2))
    assert IntervalService.union_connected(a, b) == RatInterval.closed(Fraction(0), Fraction(2))
    assert IntervalService.union_connected(EMPTY, b) == b


def test_union_connected_rejects_gaps():
    a = RatInterval.open(Fraction(0), Fraction(1))
    b = RatInterval.open(Fraction(1), Fraction(2))
    with pytest.raises(DisconnectedUnionError):
        IntervalService.union_connected(a, b)

    far = RatInterval.closed(Fraction(3), Fraction(4))
    with pytest.raises(DisconnectedUnionError):
        IntervalService.union_connected(RatInterval.closed(Fraction(0), Fraction(1)), far)


def test_union_all_is_order_independent():
    pieces = [
        RatInterval.open(Fraction(2), Fraction(3)),
        RatInterval.closed(Fraction(0), Fraction(1)),
        RatInterval(Fraction(1, 2), Fraction(2), False, True),
    ]
    expected = RatInterval(Fraction(0), Fraction(3), True, False)
    assert IntervalService.union_all(pieces) == expected
    assert IntervalService.union_all(list(reversed(pieces))) == expected


def test_affine_image_keeps_openness():
    image = IntervalService.affine_image(RatInterval.open(Fraction(0), Fraction(2)), Fraction(2, 3), Fraction(2, 3))
    assert image == RatInterval.open(Fraction(2, 3), Fraction(2))


def _grid_intervals(rng, count):
    intervals = []
    while len(intervals) < count:
        lo, hi = sorted(Fraction(rng.randint(0, 24), 8) for _ in range(2))
        lo_closed, hi_closed = rng.random() < 0.5, rng.random() < 0.5
        if lo == hi and not (lo_closed and hi_closed):
            continue
        intervals.append(RatInterval(lo, hi, lo_closed, hi_closed))
    return intervals


def test_intersect_membership_on_a_rational_grid():
    rng = random.Random(3)
    grid = [Fraction(k, 16) for k in range(-4, 53)]
    intervals = _grid_intervals(rng, 40) + [EMPTY]
    for a in intervals:
        for b in intervals:
            both = IntervalService.intersect(a, b)
            for x in grid:
                assert both.contains(x) == (a.contains(x) and b.contains(x))


def test_format_then_parse_is_exact():
    rng = random.Random(11)
    values = [Fraction(rng.randint(-10**12, 10**12), rng.randint(1, 10**9)) for _ in range(500)]
    values += [Fraction(0), Fraction(2), Fraction(11, 20), Fraction(-3, 7)]
    for r in values:
        assert parse_rational(format_rational(r)) == r
