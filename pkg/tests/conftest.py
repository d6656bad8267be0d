"""Fixtures compartilhadas: pares de bases canônicos e geradores semeados."""

import random
from fractions import Fraction

import pytest

from models.base_pair import BasePair


@pytest.fixture
def continuum_pair() -> BasePair:
    """(3/4, 2/3): β₁²+β₀ > 1."""
    return BasePair(Fraction(3, 4), Fraction(2, 3))


@pytest.fixture
def unique_pair() -> BasePair:
    """(11/20, 51/100): β₀(1+2β₁−β₀β₁) < 1."""
    return BasePair(Fraction(11, 20), Fraction(51, 100))


@pytest.fixture
def make_pairs():
    """Fábrica de pares de bases válidos, reprodutível pela semente."""

    def factory(count: int, seed: int = 0, continuum: bool = False) -> list[BasePair]:
        rng = random.Random(seed)
        pairs: list[BasePair] = []
        while len(pairs) < count:
            denominator = rng.randint(5, 60)
            one = rng.randint(denominator // 2 + 1, denominator - 1)
            zero = rng.randint(one, denominator - 1)
            pair = BasePair(Fraction(zero, denominator), Fraction(one, denominator))
            if continuum and not pair.beta1 * pair.beta1 + pair.beta0 > 1:
                continue
            pairs.append(pair)
        return pairs

    return factory


@pytest.fixture
def make_points():
    """Fábrica de pontos racionais distintos de I = [0, β₁/(1−β₁)]."""

    def factory(pair: BasePair, count: int, seed: int = 0, interior: bool = False, bits: int = 12) -> list[Fraction]:
        rng = random.Random(seed)
        low = 1 if interior else 0
        high = 2**bits - 1 if interior else 2**bits
        # Amostragem sem repetição na grade de passo |I|/2^bits
        return [pair.interval_max * Fraction(m, 2**bits) for m in rng.sample(range(low, high + 1), count)]

    return factory
