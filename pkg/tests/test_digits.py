from fractions import Fraction

import pytest

from core.exceptions import DomainError
from models.algorithm import AlgorithmKind, AlgorithmVariant
from models.base_pair import BasePair
from models.sequence import DigitWord
from services.digit_service import DigitService
from services.projection_service import ProjectionService

GREEDY = AlgorithmKind.greedy()
LAZY = AlgorithmKind.lazy()


def test_greedy_worked_example(continuum_pair):
    word, orbit = DigitService.expand(continuum_pair, GREEDY, Fraction(1), 5)
    assert word == DigitWord((1, 0, 1, 0, 0))
    assert orbit == [Fraction(1), Fraction(1, 2), Fraction(2, 3), Fraction(0), Fraction(0), Fraction(0)]


def test_lazy_worked_example(continuum_pair):
    word, orbit = DigitService.expand(continuum_pair, LAZY, Fraction(1), 6)
    assert str(word) == "001101"
    assert orbit[-1] == 2


def test_lazy_at_zero_is_all_zeros(continuum_pair):
    assert str(DigitService.digits(continuum_pair, LAZY, Fraction(0), 4)) == "0000"


def test_greedy_at_the_right_endpoint_is_all_ones(continuum_pair):
    assert str(DigitService.digits(continuum_pair, GREEDY, continuum_pair.interval_max, 5)) == "11111"


def test_intermediate_threshold_is_inclusive(continuum_pair):
    kind = AlgorithmKind.intermediate(Fraction(1))
    word = DigitService.digits(continuum_pair, kind, Fraction(1), 3)
    assert str(word) == "100"


def test_greedy_threshold_at_beta1(continuum_pair):
    digit, following = DigitService.step(continuum_pair, GREEDY, continuum_pair.beta1)
    assert (digit, following) == (1, 0)


def test_lazy_threshold_at_overlap_end(continuum_pair):
    digit, following = DigitService.step(continuum_pair, LAZY, continuum_pair.overlap_hi)
    assert (digit, following) == (0, continuum_pair.interval_max)


@pytest.mark.parametrize("alpha", [Fraction(2, 3), Fraction(3, 2), Fraction(1, 2), Fraction(2)])
def test_intermediate_alpha_must_lie_inside_the_overlap(continuum_pair, alpha):
    with pytest.raises(DomainError):
        DigitService.digits(continuum_pair, AlgorithmKind.intermediate(alpha), Fraction(1), 3)


def test_alpha_only_for_intermediate():
    with pytest.raises(DomainError):
        AlgorithmKind(AlgorithmVariant.GREEDY, Fraction(1))
    with pytest.raises(DomainError):
        AlgorithmKind(AlgorithmVariant.INTERMEDIATE)
    assert AlgorithmKind("lazy") == LAZY


def test_point_outside_interval(continuum_pair):
    with pytest.raises(DomainError):
        DigitService.digits(continuum_pair, GREEDY, Fraction(-1, 3), 3)
    with pytest.raises(DomainError):
        DigitService.orbit(continuum_pair, LAZY, Fraction(5, 2), 3)


def test_exact_reconstruction_for_all_algorithms(continuum_pair, make_points):
    kinds = [GREEDY, LAZY, AlgorithmKind.intermediate(Fraction(1))]
    for x in make_points(continuum_pair, 200, seed=1):
        for kind in kinds:
            word, orbit = DigitService.expand(continuum_pair, kind, x, 60)
            assert ProjectionService.cylinder_interval(continuum_pair, word).contains(x)
            assert ProjectionService.project_prefix_with_remainder(continuum_pair, word, orbit[-1]) == x
            assert all(continuum_pair.in_full_interval(point) for point in orbit)


def test_expansions_for_seeded_pairs(make_pairs, make_points):
    for pair in make_pairs(20, seed=4):
        for x in make_points(pair, 10, seed=5):
            word, orbit = DigitService.expand(pair, GREEDY, x, 25)
            assert ProjectionService.project_prefix_with_remainder(pair, word, orbit[-1]) == x
            lazy = DigitService.digits(pair, LAZY, x, 25)
            assert lazy <= word


def test_intermediate_lies_between_lazy_and_greedy(make_pairs, make_points):
    for pair in [*make_pairs(10, seed=17), BasePair(Fraction(3, 4), Fraction(2, 3))]:
        lo, hi = pair.beta1, pair.overlap_hi
        alphas = [lo + (hi - lo) * Fraction(k, 5) for k in range(1, 5)]
        for x in make_points(pair, 20, seed=18):
            lazy = DigitService.digits(pair, LAZY, x, 30)
            greedy = DigitService.digits(pair, GREEDY, x, 30)
            for alpha in alphas:
                middle = DigitService.digits(pair, AlgorithmKind.intermediate(alpha), x, 30)
                assert lazy <= middle <= greedy
