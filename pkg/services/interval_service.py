"""
Serviço de Intervalos Racionais

Interseção, união conexa e imagens afins de intervalos com
abertura explícita nas extremidades. Todas as operações são exatas.
"""

from fractions import Fraction

from core.exceptions import DisconnectedUnionError
from models.interval import EMPTY, Interval, RatInterval


class IntervalService:
    """
    Serviço de aritmética de intervalos.
    """

    @staticmethod
    def intersect(a: Interval, b: Interval) -> Interval:
        """
        Interseção exata.

        Args:
            a: Primeiro intervalo
            b: Segundo intervalo

        Returns:
            O intervalo interseção, ou EMPTY quando disjuntos
        """
        if a.is_empty or b.is_empty:
            return EMPTY

        if a.lo > b.lo:
            lo, lo_closed = a.lo, a.lo_closed
        elif a.lo < b.lo:
            lo, lo_closed = b.lo, b.lo_closed
        else:
            lo, lo_closed = a.lo, a.lo_closed and b.lo_closed

        if a.hi < b.hi:
            hi, hi_closed = a.hi, a.hi_closed
        elif a.hi > b.hi:
            hi, hi_closed = b.hi, b.hi_closed
        else:
            hi, hi_closed = a.hi, a.hi_closed and b.hi_closed

        if lo < hi or (lo == hi and lo_closed and hi_closed):
            return RatInterval(lo, hi, lo_closed, hi_closed)
        return EMPTY

    @staticmethod
    def is_connected(a: RatInterval, b: RatInterval) -> bool:
        """Se a ∪ b é um único intervalo."""
        left, right = (a, b) if (a.lo, not a.lo_closed) <= (b.lo, not b.lo_closed) else (b, a)
        if left.hi > right.lo:
            return True
        if left.hi == right.lo:
            return left.hi_closed or right.lo_closed
        return False

    @staticmethod
    def union_connected(a: Interval, b: Interval) -> Interval:
        """
        União de dois intervalos que se sobrepõem ou se tocam.

        Args:
            a: Primeiro intervalo
            b: Segundo intervalo

        Returns:
            O intervalo união

        Raises:
            DisconnectedUnionError: Se a união não é um intervalo
        """
        if a.is_empty:
            return b
        if b.is_empty:
            return a
        if not IntervalService.is_connected(a, b):
            raise DisconnectedUnionError(f"União desconexa: {a} ∪ {b}")

        if a.lo < b.lo:
            lo, lo_closed = a.lo, a.lo_closed
        elif a.lo > b.lo:
            lo, lo_closed = b.lo, b.lo_closed
        else:
            lo, lo_closed = a.lo, a.lo_closed or b.lo_closed

        if a.hi > b.hi:
            hi, hi_closed = a.hi, a.hi_closed
        elif a.hi < b.hi:
            hi, hi_closed = b.hi, b.hi_closed
        else:
            hi, hi_closed = a.hi, a.hi_closed or b.hi_closed

        return RatInterval(lo, hi, lo_closed, hi_closed)

    @staticmethod
    def union_all(intervals: list[Interval]) -> Interval:
        """
        União conexa de vários intervalos, ordenados pela extremidade esquerda.

        Raises:
            DisconnectedUnionError: Se algum passo da varredura deixa um buraco
        """
        pieces = sorted(
            (iv for iv in intervals if not iv.is_empty),
            key=lambda iv: (iv.lo, not iv.lo_closed),
        )
        result: Interval = EMPTY
        for piece in pieces:
            result = IntervalService.union_connected(result, piece)
        return result

    @staticmethod
    def affine_image(interval: Interval, scale: Fraction, offset: Fraction) -> Interval:
        """
        Imagem de um intervalo por x ↦ scale·x + offset, com scale > 0.
        """
        if interval.is_empty:
            return EMPTY
        return RatInterval(
            interval.lo * scale + offset,
            interval.hi * scale + offset,
            interval.lo_closed,
            interval.hi_closed,
        )
