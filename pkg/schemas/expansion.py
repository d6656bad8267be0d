"""
Schemas Pydantic para Expansões

Define os schemas de validação de dados para:
- Expansão por algoritmo (guloso, preguiçoso, intermediário)
- Enumeração de todos os prefixos de expansões
- Verificação de cobertura de I pelos cilindros
"""

from pydantic import BaseModel, Field

from models.algorithm import AlgorithmVariant
from schemas.common import BasePairRequest, RationalText


class ExpandRequest(BasePairRequest):
    """
    Schema para expansão de x por um algoritmo.
    """

    x: RationalText = Field(..., description="Ponto de I")
    algorithm: AlgorithmVariant = Field(default=AlgorithmVariant.GREEDY, description="Algoritmo de dígitos")
    alpha: RationalText | None = Field(default=None, description="Limiar α (apenas intermediário)")
    depth: int = Field(default=20, ge=1, description="Número de dígitos")


class ExpandResult(BaseModel):
    """
    Schema de resposta da expansão.

    O resíduo de reconstrução x − T_w(Rⁿ(x)) é sempre exatamente zero.
    """

    algorithm: AlgorithmVariant
    x: str
    digits: str = Field(..., description="Dígitos w₁…wₙ")
    orbit: list[str] = Field(..., description="[x, R(x), …, Rⁿ(x)]")
    cylinder: str = Field(..., description="T_w(I)")
    in_cylinder: bool
    residual: str


class EnumerateRequest(BasePairRequest):
    """
    Schema para enumeração de prefixos de expansões de x.
    """

    x: RationalText = Field(..., description="Ponto de I")
    depth: int = Field(default=8, ge=0, description="Comprimento dos prefixos")
    listing: bool = Field(default=True, description="Listar os prefixos além de contá-los")


class PrefixEntry(BaseModel):
    """Um prefixo e seu resto exato."""

    digits: list[int]
    pullback: str


class EnumerateResult(BaseModel):
    """
    Schema de resposta da enumeração, em ordem lexicográfica.
    """

    count: int
    prefixes: list[PrefixEntry] | None = None


class CoverageRequest(BasePairRequest):
    """Schema para a verificação de cobertura."""

    depth: int = Field(default=10, ge=1, description="Comprimento das palavras")


class CoverageResult(BaseModel):
    depth: int
    interval: str
    covered: bool
