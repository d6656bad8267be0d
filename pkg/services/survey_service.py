"""
Serviço de Amostragem

Evidência amostral de que quase todo x ∈ I tem muitas expansões:
sorteia pontos da grade x = (β₁/(1−β₁))·m/2ᵏ, 0 < m < 2ᵏ, com um gerador
determinístico semeado, e resume as contagens de prefixos. Nenhuma afirmação
de medida é feita, apenas estatísticas da amostra.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction

from core.config import settings
from core.exceptions import DepthLimitError, DomainError
from models.base_pair import BasePair
from services.enumeration_service import EnumerationService

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class SurveyReport:
    """
    Resumo da amostragem.

    Atributos:
        points: Pontos sorteados, na ordem do sorteio
        counts: Contagens de prefixos de cada ponto
        minimum / median / maximum: Estatísticas exatas das contagens
        above_threshold: Fração exata de contagens maiores que threshold
    """

    points: tuple[Fraction, ...]
    counts: tuple[int, ...]
    depth: int
    threshold: int
    minimum: int
    median: Fraction
    maximum: int
    above_threshold: Fraction


class SurveyService:
    """
    Serviço de amostragem de contagens de expansões.
    """

    @staticmethod
    def sample_points(pair: BasePair, samples: int, seed: int, grid_bits: int | None = None) -> list[Fraction]:
        """
        Sorteia pontos interiores da grade diádica de I.

        O mesmo (samples, seed, grid_bits) produz sempre os mesmos pontos.
        """
        if samples < 1:
            raise DomainError(f"samples = {samples} deve ser ≥ 1")
        if samples > settings.MAX_SAMPLES:
            raise DepthLimitError(f"samples = {samples} acima do limite {settings.MAX_SAMPLES}")
        bits = grid_bits or settings.SURVEY_GRID_BITS
        generator = random.Random(seed)
        return [pair.interval_max * Fraction(generator.randrange(1, 2**bits), 2**bits) for _ in range(samples)]

    @staticmethod
    def survey(pair: BasePair, samples: int, depth: int, seed: int, threshold: int = 1) -> SurveyReport:
        """
        Contagens de prefixos de comprimento depth para pontos sorteados.

        Args:
            pair: Par de bases
            samples: Número de pontos
            depth: Comprimento dos prefixos
            seed: Semente do gerador
            threshold: Limiar da fração reportada

        Returns:
            SurveyReport com mínimo, mediana, máximo e fração acima do limiar
        """
        if depth > settings.MAX_COUNT_DEPTH:
            raise DepthLimitError(f"depth = {depth} acima do limite {settings.MAX_COUNT_DEPTH}")

        points = SurveyService.sample_points(pair, samples, seed)
        counts = [EnumerationService.count_expansions(pair, x, depth) for x in points]
        logger.info(f"Amostragem concluída: {samples} pontos, profundidade {depth}")

        ordered = sorted(counts)
        middle = len(ordered) // 2
        if len(ordered) % 2:
            median = Fraction(ordered[middle])
        else:
            median = Fraction(ordered[middle - 1] + ordered[middle], 2)

        return SurveyReport(
            points=tuple(points),
            counts=tuple(counts),
            depth=depth,
            threshold=threshold,
            minimum=ordered[0],
            median=median,
            maximum=ordered[-1],
            above_threshold=Fraction(sum(1 for c in counts if c > threshold), len(counts)),
        )
