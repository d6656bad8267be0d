"""
Schemas Pydantic para Análise

Define os schemas de validação de dados para:
- Relatório de regimes dos teoremas
- Intervalos Λₙ e árvore de ramificação
- Decisão de unicidade
- Dimensão de Hausdorff
- Amostragem de contagens
"""

from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator

from core.config import settings
from models.sequence import EventuallyPeriodicSequence
from schemas.common import ApproxValues, BasePairRequest, RationalText


class RegimeResult(BaseModel):
    """
    Schema de resposta do relatório de regimes.
    """

    continuum_all: bool = Field(..., description="β₁²+β₀ > 1")
    countable_unique: bool = Field(..., description="β₀(1+β₁) < 1")
    uncountable_unique: bool = Field(..., description="β₀(1+2β₁−β₀β₁) < 1")
    extremal_inequality: bool = Field(..., description="β₁(1+2β₀−β₀β₁) < 1")
    ifs_separated: bool = Field(..., description="F(J̄)∩G(J̄) = ∅")
    values: dict[str, str] = Field(..., description="Lados esquerdos exatos das desigualdades")
    interval: str
    overlap: str


class LambdaRequest(BasePairRequest):
    """Schema para Λₙ."""

    n: int = Field(default=5, ge=0, le=200)
    bridge: Literal["initial", "previous"] = Field(default="initial", description="Termo central da recursão")


class LambdaResult(BaseModel):
    n: int
    initial: str
    closed_form: str
    recursive: str
    equal: bool


class BranchRequest(BasePairRequest):
    """Schema para a árvore de ramificação."""

    x: RationalText = Field(..., description="Ponto de J")
    splits: int = Field(default=3, ge=1)


class BranchNodeSchema(BaseModel):
    value: str
    depth: int
    prefix: str
    branch_digit: int | None = None
    children: list["BranchNodeSchema"] = Field(default_factory=list)


class BranchResult(BaseModel):
    x: str
    splits: int
    leaves: list[str] = Field(..., description="Prefixos distintos de expansões de x")
    tree: BranchNodeSchema


class UniqueRequest(BasePairRequest):
    """
    Schema para decisão de unicidade.

    Informe exatamente uma fonte: sequence, zeros (família 0^k(01)^ω) ou pattern (V).
    """

    sequence: str | None = Field(
        default=None, max_length=settings.MAX_SEQUENCE_LENGTH + 2, description="Texto 'u(v)', ex: 101(01)"
    )
    zeros: int | None = Field(
        default=None, ge=0, le=settings.MAX_SEQUENCE_LENGTH - 2, description="k da família 0^k(01)^ω"
    )
    pattern: str | None = Field(
        default=None,
        max_length=settings.MAX_SEQUENCE_LENGTH // 2,
        description="Palavra sobre {A,B} para V = {01,10}^ℕ",
    )
    shift: int = Field(default=0, ge=0, le=1, description="Deslocamento do elemento de V")

    @field_validator("sequence")
    @classmethod
    def validate_sequence(cls, v):
        """Valida o formato da sequência."""
        if v is not None:
            EventuallyPeriodicSequence.parse(v)
        return v

    @model_validator(mode="after")
    def validate_single_source(self):
        """Exatamente uma fonte de sequência."""
        sources = [self.sequence is not None, self.zeros is not None, self.pattern is not None]
        if sum(sources) != 1:
            raise ValueError("Informe exatamente um de: sequence, zeros, pattern")
        return self


class UniqueResult(BaseModel):
    sequence: str
    sequence_json: dict[str, list[int]]
    projection: str
    verdict: bool
    shifted_values: list[str]
    overlap: str
    witness_shift: int | None = None
    extremal: dict[str, str | bool] | None = None


class DimensionRequest(BasePairRequest):
    """Schema para dimensão de Hausdorff."""

    depth: int = Field(default=20, ge=1, description="Profundidade da estimativa por caixas")
    disjoint_depth: int = Field(default=10, ge=0, description="Profundidade da verificação exata de disjunção")
    grid_depth: int = Field(default=14, ge=4, description="Profundidade dos pontos da contagem em grade")


class DimensionResult(BaseModel):
    log_numerator: str = Field(..., description="Argumento do log do numerador")
    log_denominator: str = Field(..., description="Argumento do log do denominador")
    exact: str | None = Field(None, description="Valor exato quando reconhecido")
    images_disjoint: bool
    approx: ApproxValues


class SurveyRequest(BasePairRequest):
    """Schema para amostragem."""

    samples: int = Field(default=20, ge=1)
    depth: int = Field(default=12, ge=0)
    seed: int = Field(default=0, ge=0)
    threshold: int = Field(default=1, ge=0)


class SurveyResult(BaseModel):
    samples: int
    depth: int
    seed: int
    threshold: int
    min: int
    median: str
    max: int
    above_threshold: str
    points: list[str]
    counts: list[int]
