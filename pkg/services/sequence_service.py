"""
Serviço de Sequências

Contagem de dígitos, mapa deslocamento σ e métrica de Σ.
"""

from fractions import Fraction

from core.exceptions import DomainError
from models.sequence import DigitWord, EventuallyPeriodicSequence


class SequenceService:
    """
    Serviço de operações sobre palavras e sequências binárias.
    """

    @staticmethod
    def digit_counts(word: DigitWord, n: int) -> tuple[int, int]:
        """
        Conta zeros e uns em (w₁,…,wₙ).

        Args:
            word: Palavra binária
            n: Comprimento do prefixo (0 ≤ n ≤ |w|)

        Returns:
            Tupla (zeros, uns)

        Raises:
            DomainError: Se n está fora do intervalo
        """
        if not 0 <= n <= len(word):
            raise DomainError(f"n = {n} fora de [0, {len(word)}]")
        ones = sum(word.digits[:n])
        return n - ones, ones

    @staticmethod
    def shift(sequence: EventuallyPeriodicSequence, k: int) -> EventuallyPeriodicSequence:
        """
        Aplica σᵏ.

        Args:
            sequence: Sequência eventualmente periódica
            k: Número de deslocamentos (k ≥ 0)

        Returns:
            σᵏ(s) em forma canônica
        """
        if k < 0:
            raise DomainError(f"k = {k} deve ser não negativo")

        pre, per = sequence.preperiod.digits, sequence.period.digits
        if k <= len(pre):
            return EventuallyPeriodicSequence(DigitWord(pre[k:]), DigitWord(per))

        rotation = (k - len(pre)) % len(per)
        return EventuallyPeriodicSequence(DigitWord(()), DigitWord(per[rotation:] + per[:rotation]))

    @staticmethod
    def sequence_distance(s: DigitWord, t: DigitWord) -> Fraction:
        """
        Distância Σ |sᵢ−tᵢ| 2⁻ⁱ sobre o comprimento comum.

        Raises:
            DomainError: Se os comprimentos diferem
        """
        if len(s) != len(t):
            raise DomainError(f"Comprimentos diferentes: {len(s)} e {len(t)}")
        return sum(
            (Fraction(1, 2**i) for i, (a, b) in enumerate(zip(s, t), start=1) if a != b),
            Fraction(0),
        )

    @staticmethod
    def distinct_shift_count(sequence: EventuallyPeriodicSequence) -> int:
        """Número de sequências distintas em {σᵏ(s) : k ≥ 0}."""
        return len(sequence.preperiod) + len(sequence.period)
