"""
Router de Expansões

Endpoints relacionados a expansões de pontos de I:
- POST /expansions/expand - Dígitos de x por algoritmo guloso, preguiçoso ou intermediário
- POST /expansions/enumerate - Contagem e listagem de prefixos de expansões de x
- POST /expansions/coverage - Cobertura de I pelos cilindros de comprimento n
"""

from fastapi import APIRouter

from controllers.expansion_controller import ExpansionController
from schemas.expansion import (
    CoverageRequest,
    CoverageResult,
    EnumerateRequest,
    EnumerateResult,
    ExpandRequest,
    ExpandResult,
)

router = APIRouter(
    prefix="/expansions",
    tags=["Expansões"],
)


@router.post(
    "/expand",
    response_model=ExpandResult,
    summary="Expandir um ponto",
    description="Calcula os n primeiros dígitos de x e a órbita exata do mapa do algoritmo.",
)
def expand(request: ExpandRequest) -> ExpandResult:
    """
    Expande x por um algoritmo.

    Exemplo de uso:
    ```json
    {"beta0": "3/4", "beta1": "2/3", "x": "1", "algorithm": "greedy", "depth": 5}
    ```
    Retorna os dígitos "10100" e a órbita 1 → 1/2 → 2/3 → 0 → 0 → 0.
    """
    return ExpansionController.expand(request)


@router.post(
    "/enumerate",
    response_model=EnumerateResult,
    response_model_exclude_none=True,
    summary="Enumerar prefixos",
    description="Todos os prefixos de comprimento n de expansões de x, em ordem lexicográfica.",
)
def enumerate_prefixes(request: EnumerateRequest) -> EnumerateResult:
    """
    Enumera os prefixos de expansões de x.

    Com listing=false apenas a contagem é devolvida (até MAX_COUNT_DEPTH).
    """
    return ExpansionController.enumerate(request)


@router.post(
    "/coverage",
    response_model=CoverageResult,
    summary="Verificar cobertura",
)
def coverage(request: CoverageRequest) -> CoverageResult:
    return ExpansionController.coverage(request)
