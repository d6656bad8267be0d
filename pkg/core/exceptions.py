"""
Exceções do BetaPair

Hierarquia única de erros de domínio. Routers convertem em status HTTP,
a CLI converte em códigos de saída:
- RationalParseError: texto malformado (saída 1, HTTP 400)
- DomainError e subclasses: valor fora do domínio da operação (saída 2, HTTP 422)
"""


class ExpansionError(ValueError):
    """Erro base de todas as operações de expansão."""

    exit_code: int = 2


class RationalParseError(ExpansionError):
    """Texto de racional, sequência ou padrão malformado."""

    exit_code = 1


class DomainError(ExpansionError):
    """Argumento fora do domínio da operação (ex: x fora de I)."""


class InvalidBasePairError(DomainError):
    """O par (β₀,β₁) viola 1/2 < β₁ ≤ β₀ < 1."""


class RegimeError(DomainError):
    """
    A hipótese de um teorema não vale para o par de bases.

    Atributos:
        inequality: a desigualdade estrita violada, em texto
    """

    def __init__(self, inequality: str, detail: str = ""):
        self.inequality = inequality
        message = f"Hipótese violada: {inequality}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class DisconnectedUnionError(DomainError):
    """A união de dois intervalos não é um intervalo."""


class BoundaryHitError(DomainError):
    """A descida da ramificação atingiu uma extremidade de J."""


class DepthLimitError(DomainError):
    """Profundidade, número de divisões ou amostras acima do limite configurado."""
