"""
Model de Intervalo Racional

Intervalos com extremidades racionais exatas e abertura explícita em cada
extremidade. O intervalo vazio é uma variante própria (EmptyInterval).
"""

from dataclasses import dataclass
from fractions import Fraction

from core.exceptions import DomainError
from core.rationals import format_rational


@dataclass(frozen=True, slots=True)
class EmptyInterval:
    """Intervalo vazio."""

    def contains(self, x: Fraction) -> bool:
        return False

    @property
    def is_empty(self) -> bool:
        return True

    def __str__(self) -> str:
        return "∅"


EMPTY = EmptyInterval()


@dataclass(frozen=True, slots=True)
class RatInterval:
    """
    Intervalo racional não vazio.

    Atributos:
        lo: Extremidade esquerda
        hi: Extremidade direita
        lo_closed: Se lo pertence ao intervalo
        hi_closed: Se hi pertence ao intervalo

    Invariante: lo < hi, ou lo = hi com ambas as extremidades fechadas.
    """

    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi or (self.lo == self.hi and not (self.lo_closed and self.hi_closed)):
            raise DomainError(f"Intervalo degenerado: use EMPTY em vez de {self._render()}")

    @classmethod
    def closed(cls, lo: Fraction, hi: Fraction) -> "RatInterval":
        return cls(lo, hi, True, True)

    @classmethod
    def open(cls, lo: Fraction, hi: Fraction) -> "RatInterval":
        return cls(lo, hi, False, False)

    @property
    def is_empty(self) -> bool:
        return False

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: Fraction) -> bool:
        """Pertinência exata respeitando a abertura das extremidades."""
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def __contains__(self, x: Fraction) -> bool:
        return self.contains(x)

    def _render(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{format_rational(self.lo)}, {format_rational(self.hi)}{right}"

    def __str__(self) -> str:
        return self._render()


Interval = RatInterval | EmptyInterval
