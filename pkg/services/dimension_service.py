"""
Serviço de Dimensão de Hausdorff

O conjunto A = π(V), V = {01,10}^ℕ, é o atrator do sistema de funções iteradas
F(x) = T₀∘T₁(x) = β₀β₁x + β₀β₁ e G(x) = T₁∘T₀(x) = β₀β₁x + β₁
sobre J̄ = [0, β₁/(1−β₀β₁)]. Sob β₀(1+2β₁−β₀β₁) < 1 as imagens F(J̄) e G(J̄)
são disjuntas e dim_H A = −log 2 / log(β₀β₁).

Os valores aproximados (float) ficam restritos às estimativas; toda
verificação de disjunção é feita em aritmética exata.
"""

import logging
import math
from fractions import Fraction

import numpy as np

from core.config import settings
from core.exceptions import DepthLimitError, DomainError, RegimeError
from core.rationals import format_rational
from models.base_pair import BasePair
from models.expansion import DimensionValue
from models.interval import RatInterval
from services.projection_service import ProjectionService
from services.uniqueness_service import UNCOUNTABLE_INEQUALITY

logger = logging.getLogger(__name__)


class DimensionService:
    """
    Serviço da dimensão do atrator das expansões únicas.
    """

    @staticmethod
    def require_uncountable(pair: BasePair) -> None:
        """
        Raises:
            RegimeError: Se β₀(1+2β₁−β₀β₁) ≥ 1
        """
        report = ProjectionService.regime_report(pair)
        if not report.uncountable_unique:
            value = pair.beta0 * (1 + 2 * pair.beta1 - pair.beta0 * pair.beta1)
            raise RegimeError(UNCOUNTABLE_INEQUALITY, f"β₀(1+2β₁−β₀β₁) = {format_rational(value)}")
        assert report.ifs_separated, "F(J̄)∩G(J̄) deveria ser vazio neste regime"

    @staticmethod
    def attractor_hull(pair: BasePair) -> RatInterval:
        """J̄ = [0, β₁/(1−β₀β₁)]."""
        return RatInterval.closed(Fraction(0), pair.beta1 / (1 - pair.beta0 * pair.beta1))

    @staticmethod
    def dimension_formula(pair: BasePair) -> DimensionValue:
        """
        log 2 / log(1/(β₀β₁)) sem verificar o regime.

        Reconhece exatamente o caso β₀β₁ = 1/2, em que o valor é 1.
        """
        ratio = pair.beta0 * pair.beta1
        exact = Fraction(1) if ratio == Fraction(1, 2) else None
        return DimensionValue(numerator_arg=Fraction(2), denominator_arg=1 / ratio, exact=exact)

    @staticmethod
    def hausdorff_dimension(pair: BasePair) -> DimensionValue:
        """
        dim_H A = −log 2 / log(β₀β₁), com o regime verificado.

        Raises:
            RegimeError: Se β₀(1+2β₁−β₀β₁) ≥ 1
        """
        DimensionService.require_uncountable(pair)
        return DimensionService.dimension_formula(pair)

    @staticmethod
    def ifs_images(pair: BasePair, depth: int) -> list[RatInterval]:
        """
        Imagens exatas de J̄ por todas as composições de F e G de comprimento depth.

        Returns:
            2^depth intervalos fechados de comprimento (β₀β₁)^depth·|J̄|, ordenados
        """
        if depth < 0:
            raise DomainError(f"depth = {depth} deve ser não negativo")
        if depth > settings.MAX_IFS_DEPTH:
            raise DepthLimitError(f"depth = {depth} acima do limite {settings.MAX_IFS_DEPTH}")

        ratio = pair.beta0 * pair.beta1
        hull = DimensionService.attractor_hull(pair)
        # f₁∘(resto)(x) = ratio·(resto(x)) + c_{f₁}
        offsets = [Fraction(0)]
        for _ in range(depth):
            offsets = [shift + ratio * offset for shift in (ratio, pair.beta1) for offset in offsets]

        length = ratio**depth * hull.hi
        return sorted((RatInterval.closed(offset, offset + length) for offset in offsets), key=lambda iv: iv.lo)

    @staticmethod
    def images_disjoint(images: list[RatInterval]) -> bool:
        """Se intervalos ordenados são dois a dois disjuntos."""
        return all(left.hi < right.lo for left, right in zip(images, images[1:]))

    @staticmethod
    def box_count_estimate(pair: BasePair, depth: int) -> float:
        """
        Estimativa log(2^depth) / (−log((β₀β₁)^depth·|J̄|)).

        Converge para a fórmula fechada com erro O(1/depth).

        Raises:
            RegimeError: Se as imagens do sistema se sobrepõem
        """
        if depth < 1:
            raise DomainError(f"depth = {depth} deve ser ≥ 1")
        DimensionService.require_uncountable(pair)

        ratio = float(pair.beta0 * pair.beta1)
        hull_width = float(DimensionService.attractor_hull(pair).hi)
        return depth * math.log(2) / (depth * -math.log(ratio) - math.log(hull_width))

    @staticmethod
    def grid_box_dimension(pair: BasePair, depth: int = 16, scales: int | None = None) -> float:
        """
        Contagem de caixas numa grade sobre os pontos do atrator.

        Os pontos são as extremidades esquerdas das imagens de profundidade depth;
        para caixas de lado |J̄|·(β₀β₁)^j conta as caixas ocupadas e ajusta por
        mínimos quadrados a inclinação de log N contra log(1/lado).

        Args:
            pair: Par de bases
            depth: Profundidade das imagens (2^depth pontos)
            scales: Número de escalas j = 1…scales (padrão: depth − 2)
        """
        DimensionService.require_uncountable(pair)
        if depth > settings.MAX_IFS_DEPTH:
            raise DepthLimitError(f"depth = {depth} acima do limite {settings.MAX_IFS_DEPTH}")
        scales = scales or max(depth - 2, 2)
        if not 2 <= scales <= depth:
            raise DomainError(f"scales = {scales} deve estar em [2, {depth}]")

        ratio = float(pair.beta0 * pair.beta1)
        hull_width = float(DimensionService.attractor_hull(pair).hi)
        points = np.zeros(1)
        for _ in range(depth):
            points = np.concatenate((ratio * points + ratio, ratio * points + float(pair.beta1)))

        sizes = hull_width * ratio ** np.arange(1, scales + 1)
        counts = np.array([np.unique(np.floor(points / size)).size for size in sizes])
        slope, _ = np.polyfit(np.log(1 / sizes), np.log(counts), 1)
        logger.debug(f"Contagem de caixas: {counts.tolist()}")
        return float(slope)
