"""
Schemas Pydantic Comuns

- RationalText: racional em texto, normalizado para "p/q"
- BasePairRequest: base de todas as requisições, com β₀ e β₁
- OutputFormat: formato de saída da CLI
"""

import enum
from typing import Annotated

from pydantic import AfterValidator, BaseModel, Field

from core.rationals import format_rational, parse_rational
from models.base_pair import BasePair


def _canonical_rational(value: str) -> str:
    return format_rational(parse_rational(value))


RationalText = Annotated[str, AfterValidator(_canonical_rational)]


class OutputFormat(str, enum.Enum):
    """Formatos de saída."""

    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class BasePairRequest(BaseModel):
    """
    Schema base com o par de bases.

    Os racionais são validados sintaticamente aqui; as restrições
    1/2 < β₁ ≤ β₀ < 1 são verificadas pelo controller (erro de domínio).
    """

    beta0: RationalText = Field(..., description="β₀ em texto racional, ex: 3/4")
    beta1: RationalText = Field(..., description="β₁ em texto racional, ex: 2/3")

    def to_pair(self) -> BasePair:
        return BasePair(parse_rational(self.beta0), parse_rational(self.beta1))


class ApproxValues(BaseModel):
    """
    Valores aproximados (float), sempre isolados sob a chave "approx".
    """

    dimension: float | None = None
    box_count_estimate: float | None = None
    grid_box_dimension: float | None = None
