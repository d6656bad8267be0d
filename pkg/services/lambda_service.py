"""
Serviço dos Intervalos Λₙ - Contínuo de Expansões

No regime β₁²+β₀ > 1:
- Λ₀ = T₀(J) ∩ T₁(J) = (β₁, β₀β₁/(1−β₁))
- Λₙ₊₁ = T₀(Λₙ) ∪ Λ₀ ∪ T₁(Λₙ)
- forma fechada Λₙ = (β₀ⁿβ₁, (β₁ⁿ(β₀−1)+1)·β₁/(1−β₁)), com ⋃Λₙ = J

Todo x ∈ Λ₀ admite os dois dígitos com restos em J; descendo por Λₙ
obtemos a árvore de ramificação que certifica 2^splits prefixos distintos.
"""

import logging
from fractions import Fraction
from typing import Literal

from core.config import settings
from core.exceptions import BoundaryHitError, DepthLimitError, DomainError, RegimeError
from core.rationals import format_rational
from models.base_pair import BasePair
from models.expansion import BranchNode
from models.interval import RatInterval
from models.sequence import DigitWord
from services.interval_service import IntervalService
from services.projection_service import ProjectionService

logger = logging.getLogger(__name__)

CONTINUUM_INEQUALITY = "β₁²+β₀ > 1"


class LambdaService:
    """
    Serviço dos intervalos Λₙ e da árvore de ramificação.
    """

    @staticmethod
    def require_continuum(pair: BasePair) -> None:
        """
        Raises:
            RegimeError: Se β₁²+β₀ ≤ 1
        """
        if not ProjectionService.regime_report(pair).continuum_all:
            value = pair.beta1 * pair.beta1 + pair.beta0
            raise RegimeError(CONTINUUM_INEQUALITY, f"β₁²+β₀ = {format_rational(value)}")

    @staticmethod
    def initial_interval(pair: BasePair) -> RatInterval:
        """Λ₀ = T₀(J) ∩ T₁(J), calculado pela interseção exata."""
        open_j = pair.open_interval
        t0_image = IntervalService.affine_image(open_j, pair.beta0, Fraction(0))
        t1_image = IntervalService.affine_image(open_j, pair.beta1, pair.beta1)
        return IntervalService.intersect(t0_image, t1_image)

    @staticmethod
    def lambda_interval_closed_form(pair: BasePair, n: int) -> RatInterval:
        """
        Forma fechada (β₀ⁿβ₁, (β₁ⁿ(β₀−1)+1)·β₁/(1−β₁)).

        Raises:
            RegimeError: Fora do regime β₁²+β₀ > 1
        """
        if n < 0:
            raise DomainError(f"n = {n} deve ser não negativo")
        LambdaService.require_continuum(pair)
        b0, b1 = pair.beta0, pair.beta1
        return RatInterval.open(b0**n * b1, (b1**n * (b0 - 1) + 1) * pair.interval_max)

    @staticmethod
    def lambda_interval_recursive(
        pair: BasePair, n: int, bridge: Literal["initial", "previous"] = "initial"
    ) -> RatInterval:
        """
        Calcula Λₙ pela recursão com uniões exatas.

        Args:
            pair: Par de bases
            n: Índice (n ≥ 0)
            bridge: Termo central da união: "initial" usa Λ₀, "previous" usa Λₙ

        Raises:
            RegimeError: Fora do regime β₁²+β₀ > 1
            DisconnectedUnionError: Se algum passo da recursão não é conexo
        """
        if n < 0:
            raise DomainError(f"n = {n} deve ser não negativo")
        LambdaService.require_continuum(pair)

        initial = LambdaService.initial_interval(pair)
        current = initial
        for _ in range(n):
            middle = initial if bridge == "initial" else current
            current = IntervalService.union_all(
                [
                    IntervalService.affine_image(current, pair.beta0, Fraction(0)),
                    middle,
                    IntervalService.affine_image(current, pair.beta1, pair.beta1),
                ]
            )
        return current

    @staticmethod
    def branching_depth(pair: BasePair, x: Fraction) -> int:
        """
        Menor n ≥ 0 com x ∈ Λₙ.

        Raises:
            RegimeError: Fora do regime β₁²+β₀ > 1
            DomainError: Se x ∉ J (as extremidades nunca pertencem a Λₙ)
        """
        LambdaService.require_continuum(pair)
        if not pair.open_interval.contains(x):
            raise DomainError(
                f"x = {format_rational(x)} fora de J = (0, {format_rational(pair.interval_max)})"
            )
        n = 0
        while not LambdaService.lambda_interval_closed_form(pair, n).contains(x):
            n += 1
        return n

    @staticmethod
    def descend(pair: BasePair, y: Fraction) -> tuple[int, DigitWord, Fraction]:
        """
        Desce de y ∈ Λₖ até Λ₀.

        Em cada nível m > 0, y ∉ Λₘ₋₁ ⊇ Λ₀ implica y ∈ T₀(Λₘ₋₁) ∪ T₁(Λₘ₋₁);
        escolhe o dígito d com T_d⁻¹(y) ∈ Λₘ₋₁ (0 quando ambos servem).

        Returns:
            Tupla (k, prefixo comum s₁…sₖ, z ∈ Λ₀) com y = T_{s₁…sₖ}(z)
        """
        depth = LambdaService.branching_depth(pair, y)
        digits: list[int] = []
        current = y
        for level in range(depth, 0, -1):
            previous = LambdaService.lambda_interval_closed_form(pair, level - 1)
            for digit in (0, 1):
                scale = pair.factor(digit)
                image = IntervalService.affine_image(previous, scale, Fraction(digit) * pair.beta1)
                if image.contains(current):
                    digits.append(digit)
                    current = ProjectionService.invert_contraction(pair, digit, current)
                    break
            else:
                raise DomainError(f"Descida interrompida em {format_rational(current)} no nível {level}")
        return depth, DigitWord(tuple(digits)), current

    @staticmethod
    def branching_witness(pair: BasePair, x: Fraction, splits: int) -> BranchNode:
        """
        Árvore binária de profundidade splits de ramificações de x.

        Args:
            pair: Par de bases
            x: Ponto de J
            splits: Número de ramificações sucessivas (splits ≥ 1)

        Returns:
            Raiz da árvore; cada folha é um prefixo distinto de expansão de x

        Raises:
            RegimeError: Fora do regime β₁²+β₀ > 1
            BoundaryHitError: Se algum resto atinge uma extremidade de J
        """
        if splits < 1:
            raise DomainError(f"splits = {splits} deve ser ≥ 1")
        if splits > settings.MAX_SPLITS:
            raise DepthLimitError(f"splits = {splits} acima do limite {settings.MAX_SPLITS}")
        LambdaService.require_continuum(pair)
        return LambdaService._branch(pair, x, splits, None)

    @staticmethod
    def _branch(pair: BasePair, y: Fraction, splits: int, branch_digit: int | None) -> BranchNode:
        if not pair.open_interval.contains(y):
            raise BoundaryHitError(f"Resto {format_rational(y)} na fronteira de J")

        depth, prefix, pivot = LambdaService.descend(pair, y)
        if splits == 0:
            return BranchNode(value=y, depth=depth, prefix=prefix, branch_digit=branch_digit)

        children = tuple(
            LambdaService._branch(
                pair, ProjectionService.invert_contraction(pair, digit, pivot), splits - 1, digit
            )
            for digit in (0, 1)
        )
        logger.debug(f"Ramificação em {format_rational(y)}: k={depth}, prefixo={prefix}")
        return BranchNode(value=y, depth=depth, prefix=prefix, branch_digit=branch_digit, children=children)
