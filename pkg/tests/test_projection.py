from fractions import Fraction
from itertools import product

import pytest

from core.config import settings
from core.exceptions import DepthLimitError, DomainError
from models.base_pair import BasePair
from models.interval import RatInterval
from models.sequence import DigitWord, EventuallyPeriodicSequence
from services.projection_service import ProjectionService

P = EventuallyPeriodicSequence.parse


def test_contractions_and_inverses(continuum_pair):
    assert ProjectionService.apply_contraction(continuum_pair, 0, Fraction(1)) == Fraction(3, 4)
    assert ProjectionService.apply_contraction(continuum_pair, 1, Fraction(1)) == Fraction(4, 3)
    assert ProjectionService.invert_contraction(continuum_pair, 1, Fraction(4, 3)) == 1
    assert ProjectionService.invert_contraction(continuum_pair, 0, Fraction(3, 4)) == 1


def test_contraction_domain_errors(continuum_pair):
    with pytest.raises(DomainError):
        ProjectionService.apply_contraction(continuum_pair, 0, Fraction(3))
    with pytest.raises(DomainError):
        ProjectionService.invert_contraction(continuum_pair, 0, Fraction(2))
    with pytest.raises(DomainError):
        ProjectionService.invert_contraction(continuum_pair, 1, Fraction(1, 2))
    with pytest.raises(DomainError):
        ProjectionService.apply_contraction(continuum_pair, 2, Fraction(1))


def test_composition_with_remainder_worked_example(continuum_pair):
    word = DigitWord.parse("101")
    assert ProjectionService.project_prefix_with_remainder(continuum_pair, word, Fraction(0)) == 1
    with pytest.raises(DomainError):
        ProjectionService.project_prefix_with_remainder(continuum_pair, word, Fraction(5, 2))


def test_cylinder_of_empty_word_is_the_whole_interval(continuum_pair):
    assert ProjectionService.cylinder_interval(continuum_pair, DigitWord()) == continuum_pair.full_interval
    assert ProjectionService.cylinder_interval(continuum_pair, DigitWord.parse("0")) == RatInterval.closed(
        Fraction(0), Fraction(3, 2)
    )
    assert ProjectionService.cylinder_interval(continuum_pair, DigitWord.parse("1")) == RatInterval.closed(
        Fraction(2, 3), Fraction(2)
    )


def test_weight_and_offset_matches_series(continuum_pair):
    word = DigitWord.parse("0110")
    weight, offset = ProjectionService.weight_and_offset(continuum_pair, word)
    b0, b1 = continuum_pair.beta0, continuum_pair.beta1
    assert weight == b0 * b0 * b1 * b1
    assert offset == b0 * b1 + b0 * b1 * b1


def test_truncated_series_brackets_the_closed_form(unique_pair):
    sequence = P("10(011)")
    exact = ProjectionService.project_eventually_periodic(unique_pair, sequence)
    for n in (0, 1, 5, 20):
        value, tail = ProjectionService.project_truncated(unique_pair, sequence, n)
        assert value <= exact <= value + tail
    with pytest.raises(DomainError):
        ProjectionService.project_truncated(unique_pair, sequence, -1)


def test_truncated_bound_shrinks(continuum_pair):
    _, short_tail = ProjectionService.project_truncated(continuum_pair, P("(01)"), 4)
    _, long_tail = ProjectionService.project_truncated(continuum_pair, P("(01)"), 12)
    assert long_tail < short_tail


def test_endpoints_of_the_interval(continuum_pair):
    assert ProjectionService.project_eventually_periodic(continuum_pair, P("(0)")) == 0
    assert ProjectionService.project_eventually_periodic(continuum_pair, P("(1)")) == continuum_pair.interval_max


def test_closed_forms_over_seeded_pairs(make_pairs):
    for pair in make_pairs(100, seed=8):
        b0, b1 = pair.beta0, pair.beta1
        p = b0 * b1
        project = lambda text: ProjectionService.project_eventually_periodic(pair, P(text))  # noqa: E731
        assert project("(01)") == p / (1 - p)
        assert project("(10)") == b1 / (1 - p)
        assert project("011(01)") == b1 * (b0 + b0 * b1 - b0 * b0 * b1) / (1 - p)
        assert project("100(10)") == b1 + p * p / (1 - p)


def test_projection_is_independent_of_representation(continuum_pair):
    same = [P("(01)"), EventuallyPeriodicSequence.of("01", "0101"), EventuallyPeriodicSequence.of("0", "10")]
    values = {ProjectionService.project_eventually_periodic(continuum_pair, s) for s in same}
    assert len(values) == 1


def test_continuity_bound_holds_for_agreeing_sequences(continuum_pair):
    base = P("0110(01)")
    for u in range(1, 8):
        other = EventuallyPeriodicSequence(base.prefix(u), DigitWord.parse("1" if base.digit(u) == 0 else "0"))
        distance = abs(
            ProjectionService.project_eventually_periodic(continuum_pair, base)
            - ProjectionService.project_eventually_periodic(continuum_pair, other)
        )
        assert distance < ProjectionService.continuity_bound(continuum_pair, u) or distance == 0


def test_coverage_small_depths(continuum_pair, unique_pair):
    for n in (1, 2, 6):
        assert ProjectionService.coverage_check(continuum_pair, n)
        assert ProjectionService.coverage_check(unique_pair, n)


def test_coverage_over_seeded_pairs(make_pairs):
    for pair in make_pairs(50, seed=3):
        assert ProjectionService.coverage_check(pair, 10)


@pytest.mark.slow
def test_coverage_at_depth_fourteen(make_pairs):
    for pair in make_pairs(50, seed=3):
        assert ProjectionService.coverage_check(pair, 14)


def test_coverage_in_parallel_matches_sequential(unique_pair):
    assert ProjectionService.coverage_check(unique_pair, 8, workers=2)


def test_coverage_depth_limits(continuum_pair):
    with pytest.raises(DomainError):
        ProjectionService.coverage_check(continuum_pair, 0)
    with pytest.raises(DepthLimitError):
        ProjectionService.coverage_check(continuum_pair, settings.MAX_COVERAGE_DEPTH + 1)


def test_regime_report_for_the_canonical_pairs(continuum_pair, unique_pair):
    report = ProjectionService.regime_report(continuum_pair)
    assert report.continuum_all
    assert not report.countable_unique
    assert not report.uncountable_unique
    assert not report.extremal_inequality
    assert not report.ifs_separated

    report = ProjectionService.regime_report(unique_pair)
    assert not report.continuum_all
    assert report.countable_unique
    assert report.uncountable_unique
    assert report.extremal_inequality
    assert report.ifs_separated


def test_regime_flags_are_consistent(make_pairs):
    for pair in make_pairs(200, seed=11):
        report = ProjectionService.regime_report(pair)
        if report.uncountable_unique:
            assert report.countable_unique
            assert report.extremal_inequality
        assert report.ifs_separated == report.uncountable_unique


def test_regime_boundary_is_strict():
    # β₀(1+β₁) = 1 exatamente
    pair = BasePair(Fraction(5, 8), Fraction(3, 5))
    assert pair.beta0 * (1 + pair.beta1) == 1
    assert not ProjectionService.regime_report(pair).countable_unique


def test_cylinder_width_is_weight_times_interval(make_pairs):
    for pair in make_pairs(20, seed=31):
        for n in range(9):
            for digits in product((0, 1), repeat=n):
                word = DigitWord(digits)
                weight, _ = ProjectionService.weight_and_offset(pair, word)
                assert ProjectionService.cylinder_interval(pair, word).width == weight * pair.interval_max
                assert weight <= pair.beta0**n
