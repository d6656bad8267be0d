"""
Serviço de Dígitos - Algoritmos Guloso, Preguiçoso e Intermediário

Cada algoritmo é um mapa R: I → I que escolhe o dígito por limiar e
aplica a inversa da contração correspondente:

1. GULOSO: dígito 1 sse x ≥ β₁ (x ∈ T₁(I), fechado em β₁)
2. PREGUIÇOSO: dígito 1 sse x > β₀β₁/(1−β₁) (x ∉ T₀(I), fechado na direita)
3. INTERMEDIÁRIO: dígito 1 sse x ≥ α

As regras de limiar coincidem com as definições por partes dos mapas e
mantêm os dígitos em {0,1} também nas extremidades de I.
"""

from fractions import Fraction

from models.algorithm import AlgorithmKind
from models.base_pair import BasePair
from models.sequence import DigitWord
from services.projection_service import ProjectionService


class DigitService:
    """
    Serviço de extração de dígitos.
    """

    @staticmethod
    def step(pair: BasePair, kind: AlgorithmKind, x: Fraction) -> tuple[int, Fraction]:
        """
        Um passo do mapa do algoritmo.

        Args:
            pair: Par de bases
            kind: Algoritmo (guloso, preguiçoso ou intermediário)
            x: Ponto de I

        Returns:
            Tupla (dígito, próximo ponto)

        Raises:
            DomainError: Se x ∉ I ou α é inválido
        """
        kind.validate_for(pair)
        ProjectionService.require_in_interval(pair, x)

        threshold, inclusive = kind.threshold(pair)
        digit = 1 if (x >= threshold if inclusive else x > threshold) else 0
        return digit, ProjectionService.invert_contraction(pair, digit, x)

    @staticmethod
    def expand(pair: BasePair, kind: AlgorithmKind, x: Fraction, n: int) -> tuple[DigitWord, list[Fraction]]:
        """
        Itera o mapa n vezes.

        Returns:
            Tupla (dígitos, órbita [x, R(x), …, Rⁿ(x)])
        """
        kind.validate_for(pair)
        ProjectionService.require_in_interval(pair, x)

        digits: list[int] = []
        orbit = [x]
        current = x
        for _ in range(n):
            digit, current = DigitService.step(pair, kind, current)
            digits.append(digit)
            orbit.append(current)
        return DigitWord(tuple(digits)), orbit

    @staticmethod
    def digits(pair: BasePair, kind: AlgorithmKind, x: Fraction, n: int) -> DigitWord:
        """
        Os n primeiros dígitos da expansão de x pelo algoritmo.

        A palavra w satisfaz x ∈ T_w(I) e x = T_w(Rⁿ(x)) exatamente.
        """
        return DigitService.expand(pair, kind, x, n)[0]

    @staticmethod
    def orbit(pair: BasePair, kind: AlgorithmKind, x: Fraction, n: int) -> list[Fraction]:
        """A órbita [x, R(x), …, Rⁿ(x)]; todos os elementos ficam em I."""
        return DigitService.expand(pair, kind, x, n)[1]
