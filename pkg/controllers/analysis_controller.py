"""
Controller de Análise

Responsável por coordenar as operações ligadas aos teoremas:
regimes, intervalos Λₙ, ramificação, unicidade, dimensão e amostragem.
"""

import logging

from core.rationals import format_rational, parse_rational
from models.expansion import BranchNode
from models.sequence import EventuallyPeriodicSequence
from schemas.analysis import (
    BranchNodeSchema,
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
from schemas.common import ApproxValues, BasePairRequest
from services.dimension_service import DimensionService
from services.lambda_service import LambdaService
from services.projection_service import ProjectionService
from services.survey_service import SurveyService
from services.uniqueness_service import UniquenessService

logger = logging.getLogger(__name__)


def _branch_schema(node: BranchNode) -> BranchNodeSchema:
    return BranchNodeSchema(
        value=format_rational(node.value),
        depth=node.depth,
        prefix=str(node.prefix),
        branch_digit=node.branch_digit,
        children=[_branch_schema(child) for child in node.children],
    )


class AnalysisController:
    """
    Controller para operações de análise.
    """

    @staticmethod
    def regime(request: BasePairRequest) -> RegimeResult:
        """
        Relatório exato das desigualdades dos teoremas.

        Args:
            request: Par de bases

        Returns:
            Flags e os lados esquerdos exatos de cada desigualdade
        """
        pair = request.to_pair()
        report = ProjectionService.regime_report(pair)
        b0, b1 = pair.beta0, pair.beta1
        product = b0 * b1
        values = {
            "continuum_all": b1 * b1 + b0,
            "countable_unique": b0 * (1 + b1),
            "uncountable_unique": b0 * (1 + 2 * b1 - product),
            "extremal_inequality": b1 * (1 + 2 * b0 - product),
        }
        return RegimeResult(
            continuum_all=report.continuum_all,
            countable_unique=report.countable_unique,
            uncountable_unique=report.uncountable_unique,
            extremal_inequality=report.extremal_inequality,
            ifs_separated=report.ifs_separated,
            values={key: format_rational(value) for key, value in values.items()},
            interval=str(pair.full_interval),
            overlap=str(pair.overlap),
        )

    @staticmethod
    def lambda_interval(request: LambdaRequest) -> LambdaResult:
        """
        Compara Λₙ pela recursão e pela forma fechada.

        Raises:
            RegimeError: Se β₁²+β₀ ≤ 1
        """
        pair = request.to_pair()
        closed_form = LambdaService.lambda_interval_closed_form(pair, request.n)
        recursive = LambdaService.lambda_interval_recursive(pair, request.n, bridge=request.bridge)
        return LambdaResult(
            n=request.n,
            initial=str(LambdaService.initial_interval(pair)),
            closed_form=str(closed_form),
            recursive=str(recursive),
            equal=closed_form == recursive,
        )

    @staticmethod
    def branch(request: BranchRequest) -> BranchResult:
        """
        Árvore de ramificação de x com 2^splits folhas.

        Raises:
            RegimeError: Se β₁²+β₀ ≤ 1
            DepthLimitError: Se splits excede MAX_SPLITS
        """
        pair = request.to_pair()
        x = parse_rational(request.x)
        root = LambdaService.branching_witness(pair, x, request.splits)
        return BranchResult(
            x=request.x,
            splits=request.splits,
            leaves=[str(word) for word in root.leaf_words()],
            tree=_branch_schema(root),
        )

    @staticmethod
    def unique(request: UniqueRequest) -> UniqueResult:
        """
        Decide a unicidade da expansão de uma sequência eventualmente periódica.

        A sequência vem do texto 'u(v)', da família 0^k(01)^ω ou de um padrão de V.

        Raises:
            RegimeError: Família 0^k(01)^ω fora de β₀(1+β₁) < 1
            RationalParseError: Padrão malformado
        """
        pair = request.to_pair()
        extremal = None
        if request.sequence is not None:
            sequence = EventuallyPeriodicSequence.parse(request.sequence)
        elif request.zeros is not None:
            sequence = UniquenessService.countable_unique_family(pair, request.zeros)
        else:
            sequence = UniquenessService.v_set_sequence(request.pattern, request.shift)
            extremal = {
                key: format_rational(value) if not isinstance(value, bool) else value
                for key, value in UniquenessService.extremal_projections(pair).items()
            }

        certificate = UniquenessService.unique_eventually_periodic(pair, sequence)
        logger.info(f"Unicidade de {sequence} em {pair}: {certificate.verdict}")
        return UniqueResult(
            sequence=str(certificate.sequence),
            sequence_json=certificate.sequence.to_json(),
            projection=format_rational(ProjectionService.project_eventually_periodic(pair, sequence)),
            verdict=certificate.verdict,
            shifted_values=[format_rational(value) for value in certificate.shifted_values],
            overlap=str(pair.overlap),
            witness_shift=certificate.witness_shift,
            extremal=extremal,
        )

    @staticmethod
    def dimension(request: DimensionRequest) -> DimensionResult:
        """
        Dimensão de Hausdorff do atrator das expansões únicas.

        Os valores exatos são argumentos de logaritmos; os floats ficam em approx.

        Raises:
            RegimeError: Se β₀(1+2β₁−β₀β₁) ≥ 1
        """
        pair = request.to_pair()
        value = DimensionService.hausdorff_dimension(pair)
        images = DimensionService.ifs_images(pair, request.disjoint_depth)
        return DimensionResult(
            log_numerator=format_rational(value.numerator_arg),
            log_denominator=format_rational(value.denominator_arg),
            exact=format_rational(value.exact) if value.exact is not None else None,
            images_disjoint=DimensionService.images_disjoint(images),
            approx=ApproxValues(
                dimension=value.approx,
                box_count_estimate=DimensionService.box_count_estimate(pair, request.depth),
                grid_box_dimension=DimensionService.grid_box_dimension(pair, request.grid_depth),
            ),
        )

    @staticmethod
    def survey(request: SurveyRequest) -> SurveyResult:
        """
        Estatísticas das contagens de prefixos em pontos sorteados.

        O mesmo seed produz sempre o mesmo resultado.
        """
        pair = request.to_pair()
        report = SurveyService.survey(pair, request.samples, request.depth, request.seed, request.threshold)
        return SurveyResult(
            samples=request.samples,
            depth=report.depth,
            seed=request.seed,
            threshold=report.threshold,
            min=report.minimum,
            median=format_rational(report.median),
            max=report.maximum,
            above_threshold=format_rational(report.above_threshold),
            points=[format_rational(point) for point in report.points],
            counts=list(report.counts),
        )
