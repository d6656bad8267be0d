from collections import Counter
from fractions import Fraction
from itertools import product

import pytest

from core.config import settings
from core.exceptions import DepthLimitError, DomainError
from models.algorithm import AlgorithmKind
from models.sequence import DigitWord
from services.digit_service import DigitService
from services.enumeration_service import EnumerationService
from services.projection_service import ProjectionService


def _brute_force(pair, x, n):
    words = (DigitWord(digits) for digits in product((0, 1), repeat=n))
    return [word for word in words if ProjectionService.cylinder_interval(pair, word).contains(x)]


def test_allowed_digits(continuum_pair):
    assert EnumerationService.allowed_digits(continuum_pair, Fraction(1, 3)) == (0,)
    assert EnumerationService.allowed_digits(continuum_pair, continuum_pair.beta1) == (0, 1)
    assert EnumerationService.allowed_digits(continuum_pair, Fraction(3, 2)) == (0, 1)
    assert EnumerationService.allowed_digits(continuum_pair, Fraction(7, 4)) == (1,)


def test_worked_example_count(continuum_pair):
    nodes = EnumerationService.enumerate_prefixes(continuum_pair, Fraction(1), 2)
    assert [str(node.prefix) for node in nodes] == ["00", "01", "10"]
    assert [node.pullback for node in nodes] == [Fraction(16, 9), Fraction(1), Fraction(2, 3)]
    assert EnumerationService.count_expansions(continuum_pair, Fraction(1), 2) == 3


def test_zero_has_a_single_expansion(continuum_pair):
    for n in (0, 1, 10, 40):
        assert EnumerationService.count_expansions(continuum_pair, Fraction(0), n) == 1


def test_depth_zero_is_the_empty_prefix(continuum_pair):
    nodes = EnumerationService.enumerate_prefixes(continuum_pair, Fraction(1), 0)
    assert len(nodes) == 1
    assert nodes[0].prefix == DigitWord()
    assert nodes[0].pullback == 1


def test_pullbacks_reconstruct_x(continuum_pair, make_points):
    for x in make_points(continuum_pair, 20, seed=2):
        for node in EnumerationService.enumerate_prefixes(continuum_pair, x, 8):
            assert ProjectionService.project_prefix_with_remainder(continuum_pair, node.prefix, node.pullback) == x


def test_enumeration_matches_brute_force(continuum_pair, unique_pair, make_points):
    for pair in (continuum_pair, unique_pair):
        for x in make_points(pair, 50, seed=6):
            for n in (1, 4, 8):
                nodes = EnumerationService.enumerate_prefixes(pair, x, n)
                assert [node.prefix for node in nodes] == _brute_force(pair, x, n)


@pytest.mark.slow
def test_enumeration_matches_brute_force_at_depth_twelve(continuum_pair, make_points):
    for x in make_points(continuum_pair, 50, seed=6):
        nodes = EnumerationService.enumerate_prefixes(continuum_pair, x, 12)
        assert [node.prefix for node in nodes] == _brute_force(continuum_pair, x, 12)


def test_count_matches_listing(continuum_pair, make_points):
    for x in make_points(continuum_pair, 30, seed=9):
        for n in (3, 7, 10):
            assert EnumerationService.count_expansions(continuum_pair, x, n) == len(
                EnumerationService.enumerate_prefixes(continuum_pair, x, n)
            )


def test_greedy_and_lazy_are_extremal(continuum_pair, make_points):
    greedy, lazy = AlgorithmKind.greedy(), AlgorithmKind.lazy()
    for x in make_points(continuum_pair, 30, seed=10):
        nodes = EnumerationService.enumerate_prefixes(continuum_pair, x, 12)
        greedy_word = DigitService.digits(continuum_pair, greedy, x, 12)
        lazy_word = DigitService.digits(continuum_pair, lazy, x, 12)
        for n in range(1, 13):
            truncated = [node.prefix[:n] for node in nodes]
            assert max(truncated) == greedy_word[:n]
            assert min(truncated) == lazy_word[:n]


def test_parallel_enumeration_is_identical(continuum_pair):
    x = Fraction(5, 4)
    sequential = EnumerationService.enumerate_prefixes(continuum_pair, x, 10, workers=1)
    parallel = EnumerationService.enumerate_prefixes(continuum_pair, x, 10, workers=2)
    assert parallel == sequential


def test_exceeds_count(continuum_pair):
    x = Fraction(1)
    exact = EnumerationService.count_expansions(continuum_pair, x, 6)
    assert EnumerationService.exceeds_count(continuum_pair, x, 6, exact)
    assert not EnumerationService.exceeds_count(continuum_pair, x, 6, exact + 1)
    assert EnumerationService.exceeds_count(continuum_pair, x, 6, 0)


def test_exceeds_count_guards(continuum_pair):
    with pytest.raises(DomainError):
        EnumerationService.exceeds_count(continuum_pair, Fraction(1), -1, 2)
    with pytest.raises(DepthLimitError):
        EnumerationService.exceeds_count(continuum_pair, Fraction(1), settings.MAX_COUNT_DEPTH + 1, 2)
    with pytest.raises(DomainError):
        EnumerationService.exceeds_count(continuum_pair, Fraction(3), 4, 2)


def test_continuum_evidence_at_depth_forty(continuum_pair, make_points):
    points = make_points(continuum_pair, 100, seed=12, interior=True, bits=20)
    assert len(set(points)) == 100
    for x in points:
        assert EnumerationService.exceeds_count(continuum_pair, x, 40, 16)


@pytest.mark.parametrize("zeros", [20, 24])
def test_count_at_depth_forty_near_the_left_endpoint(continuum_pair, zeros):
    # os primeiros dígitos são forçados a 0 até o resto atingir β₁
    x = continuum_pair.beta1 * continuum_pair.beta0**zeros
    count = EnumerationService.count_expansions(continuum_pair, x, 40)
    assert count >= 16
    assert count == EnumerationService.count_expansions(continuum_pair, continuum_pair.beta1, 40 - zeros)
    assert EnumerationService.exceeds_count(continuum_pair, x, 40, count)
    assert not EnumerationService.exceeds_count(continuum_pair, x, 40, count + 1)


def test_every_node_has_one_or_two_children(continuum_pair, unique_pair, make_points):
    for pair in (continuum_pair, unique_pair):
        for x in make_points(pair, 20, seed=15):
            for n in range(8):
                parents = EnumerationService.enumerate_prefixes(pair, x, n)
                children = Counter(node.prefix[:n] for node in EnumerationService.enumerate_prefixes(pair, x, n + 1))
                assert set(children) == {node.prefix for node in parents}
                assert all(count in (1, 2) for count in children.values())


def test_enumeration_domain_errors(continuum_pair):
    with pytest.raises(DomainError):
        EnumerationService.enumerate_prefixes(continuum_pair, Fraction(3), 2)
    with pytest.raises(DomainError):
        EnumerationService.count_expansions(continuum_pair, Fraction(1), -1)
