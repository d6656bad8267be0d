"""
Model do Algoritmo de Dígitos

Seleciona a regra de limiar do mapa de expansão:
- GREEDY: dígito 1 sse x ≥ β₁ (x ∈ T₁(I))
- LAZY: dígito 1 sse x > β₀β₁/(1−β₁) (x ∉ T₀(I))
- INTERMEDIATE: dígito 1 sse x ≥ α, com α no interior da sobreposição
"""

import enum
from dataclasses import dataclass
from fractions import Fraction

from core.exceptions import DomainError
from core.rationals import format_rational
from models.base_pair import BasePair


class AlgorithmVariant(str, enum.Enum):
    """Variantes do algoritmo de expansão."""

    GREEDY = "greedy"
    LAZY = "lazy"
    INTERMEDIATE = "intermediate"


@dataclass(frozen=True, slots=True)
class AlgorithmKind:
    """
    Algoritmo escolhido e, para o intermediário, o limiar α.
    """

    variant: AlgorithmVariant
    alpha: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "variant", AlgorithmVariant(self.variant))
        if self.variant is AlgorithmVariant.INTERMEDIATE:
            if self.alpha is None:
                raise DomainError("O algoritmo intermediário exige alpha")
            object.__setattr__(self, "alpha", Fraction(self.alpha))
        elif self.alpha is not None:
            raise DomainError(f"alpha só é aceito pelo algoritmo intermediário, não por {self.variant.value}")

    @classmethod
    def greedy(cls) -> "AlgorithmKind":
        return cls(AlgorithmVariant.GREEDY)

    @classmethod
    def lazy(cls) -> "AlgorithmKind":
        return cls(AlgorithmVariant.LAZY)

    @classmethod
    def intermediate(cls, alpha: Fraction) -> "AlgorithmKind":
        return cls(AlgorithmVariant.INTERMEDIATE, alpha)

    def validate_for(self, pair: BasePair) -> None:
        """
        Verifica α ∈ (β₁, β₀β₁/(1−β₁)) estritamente.

        Raises:
            DomainError: Se α está fora do interior da sobreposição
        """
        if self.variant is AlgorithmVariant.INTERMEDIATE and not pair.beta1 < self.alpha < pair.overlap_hi:
            raise DomainError(
                f"alpha = {format_rational(self.alpha)} fora de "
                f"({format_rational(pair.beta1)}, {format_rational(pair.overlap_hi)})"
            )

    def threshold(self, pair: BasePair) -> tuple[Fraction, bool]:
        """
        Limiar da regra: (t, inclusivo). O dígito é 1 sse x ≥ t (inclusivo) ou x > t.
        """
        if self.variant is AlgorithmVariant.GREEDY:
            return pair.beta1, True
        if self.variant is AlgorithmVariant.LAZY:
            return pair.overlap_hi, False
        return self.alpha, True
