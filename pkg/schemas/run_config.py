"""
Schema de Configuração de Execução da CLI

Reúne as opções globais (β₀, β₁, formato, semente, paralelismo)
e o comando escolhido. Configurações idênticas produzem saídas idênticas.
"""

import enum

from pydantic import BaseModel, Field

from schemas.common import OutputFormat, RationalText


class Command(str, enum.Enum):
    """Subcomandos da CLI."""

    EXPAND = "expand"
    ENUMERATE = "enumerate"
    COVERAGE = "coverage"
    UNIQUE = "unique"
    REGIME = "regime"
    LAMBDA = "lambda"
    BRANCH = "branch"
    DIMENSION = "dimension"
    SURVEY = "survey"


class RunConfig(BaseModel):
    """
    Configuração de uma execução.
    """

    beta0: RationalText
    beta1: RationalText
    command: Command | None = None
    output_format: OutputFormat = OutputFormat.TEXT
    seed: int = Field(default=0, ge=0, lt=2**64)
    workers: int = Field(default=1, ge=1)
    params: dict = Field(default_factory=dict)

    def request_fields(self) -> dict:
        """Campos para os schemas de requisição."""
        return {"beta0": self.beta0, "beta1": self.beta1, **self.params}
