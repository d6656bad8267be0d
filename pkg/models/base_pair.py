"""
Model do Par de Bases

Representa o par (β₀,β₁) com 1/2 < β₁ ≤ β₀ < 1 e as constantes derivadas:
- I = [0, β₁/(1−β₁)] e J = (0, β₁/(1−β₁))
- intervalo de sobreposição T₀(I)∩T₁(I) = [β₁, β₀β₁/(1−β₁)]
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from core.exceptions import InvalidBasePairError
from core.rationals import format_rational, parse_rational
from models.interval import RatInterval

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class BasePair:
    """
    Par de bases (β₀,β₁).

    Atributos:
        beta0: Fator de contração do dígito 0
        beta1: Fator de contração do dígito 1
    """

    beta0: Fraction
    beta1: Fraction

    def __post_init__(self):
        object.__setattr__(self, "beta0", Fraction(self.beta0))
        object.__setattr__(self, "beta1", Fraction(self.beta1))
        b0, b1 = self.beta0, self.beta1
        if not HALF < b1:
            raise InvalidBasePairError(f"Restrição violada: 1/2 < β₁ ≤ β₀ < 1 (β₁ = {format_rational(b1)} ≤ 1/2)")
        if not b1 <= b0:
            raise InvalidBasePairError(
                f"Restrição violada: 1/2 < β₁ ≤ β₀ < 1 (β₁ = {format_rational(b1)} > β₀ = {format_rational(b0)})"
            )
        if not b0 < 1:
            raise InvalidBasePairError(f"Restrição violada: 1/2 < β₁ ≤ β₀ < 1 (β₀ = {format_rational(b0)} ≥ 1)")

    @classmethod
    def parse(cls, beta0: str, beta1: str) -> "BasePair":
        return cls(parse_rational(beta0), parse_rational(beta1))

    @cached_property
    def interval_max(self) -> Fraction:
        """Extremidade direita de I: β₁/(1−β₁)."""
        return self.beta1 / (1 - self.beta1)

    @cached_property
    def overlap_hi(self) -> Fraction:
        """Extremidade direita de T₀(I): β₀β₁/(1−β₁)."""
        return self.beta0 * self.interval_max

    @property
    def full_interval(self) -> RatInterval:
        return RatInterval.closed(Fraction(0), self.interval_max)

    @property
    def open_interval(self) -> RatInterval:
        return RatInterval.open(Fraction(0), self.interval_max)

    @property
    def overlap(self) -> RatInterval:
        return RatInterval.closed(self.beta1, self.overlap_hi)

    def in_full_interval(self, x: Fraction) -> bool:
        return 0 <= x <= self.interval_max

    def factor(self, digit: int) -> Fraction:
        return self.beta0 if digit == 0 else self.beta1

    def __str__(self) -> str:
        return f"(β₀={format_rational(self.beta0)}, β₁={format_rational(self.beta1)})"


@dataclass(frozen=True, slots=True)
class RegimeReport:
    """
    Valores exatos das hipóteses dos teoremas para um par de bases.

    Atributos:
        continuum_all: β₁²+β₀ > 1 (todo ponto interior tem um contínuo de expansões)
        countable_unique: β₀(1+β₁) < 1 (ao menos enumeráveis pontos com expansão única)
        uncountable_unique: β₀(1+2β₁−β₀β₁) < 1 (não enumeráveis, dimensão positiva)
        extremal_inequality: β₁(1+2β₀−β₀β₁) < 1 (desigualdade da menor projeção em U)
        ifs_separated: F(J̄)∩G(J̄) = ∅ avaliado exatamente
    """

    continuum_all: bool
    countable_unique: bool
    uncountable_unique: bool
    extremal_inequality: bool
    ifs_separated: bool

    def __post_init__(self):
        # β₁²+β₀>1 e β₀(1+β₁)<1 implicariam β₁ > β₀
        assert not (self.continuum_all and self.countable_unique), "Regimes incompatíveis"
