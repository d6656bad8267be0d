import math
from fractions import Fraction

import pytest

from core.config import settings
from core.exceptions import DepthLimitError, RegimeError
from models.base_pair import BasePair
from models.interval import RatInterval
from services.dimension_service import DimensionService
from services.projection_service import ProjectionService
from services.uniqueness_service import UNCOUNTABLE_INEQUALITY


def test_dimension_of_the_thin_pair(unique_pair):
    value = DimensionService.hausdorff_dimension(unique_pair)
    assert value.numerator_arg == 2
    assert value.denominator_arg == Fraction(2000, 561)
    assert value.exact is None
    assert value.approx == pytest.approx(-math.log(2) / math.log(561 / 2000))
    assert abs(value.approx - 0.5452) <= 0.0005


def test_box_count_estimate_converges(unique_pair):
    formula = DimensionService.hausdorff_dimension(unique_pair).approx
    assert abs(DimensionService.box_count_estimate(unique_pair, 20) - formula) < 0.02
    coarse = abs(DimensionService.box_count_estimate(unique_pair, 5) - formula)
    fine = abs(DimensionService.box_count_estimate(unique_pair, 40) - formula)
    assert fine < coarse


def test_grid_box_dimension_tracks_the_formula(unique_pair):
    formula = DimensionService.hausdorff_dimension(unique_pair).approx
    assert abs(DimensionService.grid_box_dimension(unique_pair, 16) - formula) < 0.12


def test_grid_box_dimension_limits(unique_pair):
    with pytest.raises(DepthLimitError):
        DimensionService.grid_box_dimension(unique_pair, settings.MAX_IFS_DEPTH + 1)


def test_attractor_hull(unique_pair):
    assert DimensionService.attractor_hull(unique_pair) == RatInterval.closed(Fraction(0), Fraction(1020, 1439))


@pytest.mark.parametrize("depth", [0, 1, 5, 10, 14])
def test_ifs_images_are_disjoint_in_the_thin_regime(unique_pair, depth):
    images = DimensionService.ifs_images(unique_pair, depth)
    assert len(images) == 2**depth
    assert DimensionService.images_disjoint(images)


def test_ifs_images_overlap_in_the_continuum_regime(continuum_pair):
    assert not DimensionService.images_disjoint(DimensionService.ifs_images(continuum_pair, 1))


def test_first_level_images_are_the_two_maps(unique_pair):
    p = unique_pair.beta0 * unique_pair.beta1
    hull = DimensionService.attractor_hull(unique_pair)
    first, second = DimensionService.ifs_images(unique_pair, 1)
    assert first == RatInterval.closed(p, p + p * hull.hi)
    assert second == RatInterval.closed(unique_pair.beta1, unique_pair.beta1 + p * hull.hi)


def test_product_one_half_is_recognized_exactly():
    pair = BasePair(Fraction(5, 7), Fraction(7, 10))
    value = DimensionService.dimension_formula(pair)
    assert value.exact == 1
    assert value.approx == 1.0

    # β₀β₁ = 1/2 nunca satisfaz a hipótese do atrator
    assert not ProjectionService.regime_report(pair).uncountable_unique
    with pytest.raises(RegimeError) as excinfo:
        DimensionService.hausdorff_dimension(pair)
    assert excinfo.value.inequality == UNCOUNTABLE_INEQUALITY


def test_dimension_requires_the_regime(continuum_pair):
    with pytest.raises(RegimeError):
        DimensionService.hausdorff_dimension(continuum_pair)
    with pytest.raises(RegimeError):
        DimensionService.box_count_estimate(continuum_pair, 10)


def test_dimension_over_thin_pairs():
    candidates = [
        BasePair(Fraction(numerator + extra, denominator), Fraction(numerator, denominator))
        for denominator in range(20, 50)
        for numerator in [denominator // 2 + 1]
        for extra in (0, 1)
    ]
    pairs = [pair for pair in candidates if ProjectionService.regime_report(pair).uncountable_unique]
    assert len(pairs) >= 20
    for pair in pairs:
        value = DimensionService.hausdorff_dimension(pair)
        assert 0 < value.approx < 1
        assert DimensionService.images_disjoint(DimensionService.ifs_images(pair, 8))


def test_ifs_images_use_their_own_depth_limit(unique_pair, monkeypatch):
    monkeypatch.setattr(settings, "MAX_COVERAGE_DEPTH", 2)
    assert len(DimensionService.ifs_images(unique_pair, 6)) == 2**6
    monkeypatch.setattr(settings, "MAX_IFS_DEPTH", 5)
    with pytest.raises(DepthLimitError):
        DimensionService.ifs_images(unique_pair, 6)


def test_ifs_images_depth_limit_is_max_ifs_depth(unique_pair):
    assert settings.MAX_IFS_DEPTH > settings.MAX_COVERAGE_DEPTH
    with pytest.raises(DepthLimitError):
        DimensionService.ifs_images(unique_pair, settings.MAX_IFS_DEPTH + 1)
