"""
Router de Análise

Endpoints relacionados aos teoremas sobre o par de bases:
- POST /analysis/regime - Desigualdades dos teoremas avaliadas exatamente
- POST /analysis/lambda - Λₙ pela recursão e pela forma fechada
- POST /analysis/branch - Árvore de ramificação de x
- POST /analysis/unique - Decisão de unicidade de uma sequência eventualmente periódica
- POST /analysis/dimension - Dimensão de Hausdorff do atrator
- POST /analysis/survey - Contagens de expansões em pontos sorteados
"""

from fastapi import APIRouter

from controllers.analysis_controller import AnalysisController
from schemas.analysis import (
    BranchRequest,
    BranchResult,
    DimensionRequest,
    DimensionResult,
    LambdaRequest,
    LambdaResult,
    RegimeResult,
    SurveyRequest,
    SurveyResult,
    UniqueRequest,
    UniqueResult,
)
from schemas.common import BasePairRequest

router = APIRouter(
    prefix="/analysis",
    tags=["Análise"],
)


@router.post(
    "/regime",
    response_model=RegimeResult,
    summary="Relatório de regimes",
    description="Avalia exatamente β₁²+β₀ > 1, β₀(1+β₁) < 1, β₀(1+2β₁−β₀β₁) < 1 e as condições auxiliares.",
)
def regime(request: BasePairRequest) -> RegimeResult:
    return AnalysisController.regime(request)


@router.post(
    "/lambda",
    response_model=LambdaResult,
    summary="Intervalos Λₙ",
    description="Compara a recursão Λₙ₊₁ = T₀(Λₙ) ∪ Λ₀ ∪ T₁(Λₙ) com a forma fechada. Exige β₁²+β₀ > 1.",
)
def lambda_interval(request: LambdaRequest) -> LambdaResult:
    return AnalysisController.lambda_interval(request)


@router.post(
    "/branch",
    response_model=BranchResult,
    summary="Árvore de ramificação",
)
def branch(request: BranchRequest) -> BranchResult:
    """
    Certifica 2^splits prefixos distintos de expansões de x ∈ J.

    Cada folha é um prefixo; prefixos de folhas distintas divergem em
    um dígito de ramificação.
    """
    return AnalysisController.branch(request)


@router.post(
    "/unique",
    response_model=UniqueResult,
    summary="Decidir unicidade",
)
def unique(request: UniqueRequest) -> UniqueResult:
    """
    Decide se π(s) tem s como única expansão.

    Exemplo de uso:
    ```json
    {"beta0": "11/20", "beta1": "51/100", "sequence": "(01)"}
    ```
    """
    return AnalysisController.unique(request)


@router.post(
    "/dimension",
    response_model=DimensionResult,
    summary="Dimensão de Hausdorff",
    description="−log 2 / log(β₀β₁) sob β₀(1+2β₁−β₀β₁) < 1; estimativas em ponto flutuante ficam em approx.",
)
def dimension(request: DimensionRequest) -> DimensionResult:
    return AnalysisController.dimension(request)


@router.post(
    "/survey",
    response_model=SurveyResult,
    summary="Amostragem de contagens",
)
def survey(request: SurveyRequest) -> SurveyResult:
    return AnalysisController.survey(request)
