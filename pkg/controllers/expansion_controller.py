"""
Controller de Expansões

Responsável por coordenar as operações de expansão de pontos:
algoritmos de dígitos, enumeração de prefixos e cobertura de I.
"""

import logging

from core.config import settings
from core.exceptions import DepthLimitError
from core.rationals import format_rational, parse_rational
from models.algorithm import AlgorithmKind
from schemas.expansion import (
    CoverageRequest,
    CoverageResult,
    EnumerateRequest,
    EnumerateResult,
    ExpandRequest,
    ExpandResult,
    PrefixEntry,
)
from services.digit_service import DigitService
from services.enumeration_service import EnumerationService
from services.projection_service import ProjectionService

logger = logging.getLogger(__name__)


class ExpansionController:
    """
    Controller para operações de expansão.
    """

    @staticmethod
    def expand(request: ExpandRequest) -> ExpandResult:
        """
        Expande x pelo algoritmo escolhido e verifica a reconstrução exata.

        Args:
            request: Dados da expansão

        Returns:
            Dígitos, órbita, cilindro e resíduo (sempre 0/1)

        Raises:
            DomainError: Par inválido, x ∉ I ou alpha inválido
        """
        pair = request.to_pair()
        x = parse_rational(request.x)
        alpha = parse_rational(request.alpha) if request.alpha is not None else None
        kind = AlgorithmKind(request.algorithm, alpha)

        word, orbit = DigitService.expand(pair, kind, x, request.depth)
        cylinder = ProjectionService.cylinder_interval(pair, word)
        residual = x - ProjectionService.project_prefix_with_remainder(pair, word, orbit[-1])

        logger.info(f"Expansão {kind.variant.value} de {request.x}: {word}")
        return ExpandResult(
            algorithm=kind.variant,
            x=request.x,
            digits=str(word),
            orbit=[format_rational(value) for value in orbit],
            cylinder=str(cylinder),
            in_cylinder=cylinder.contains(x),
            residual=format_rational(residual),
        )

    @staticmethod
    def enumerate(request: EnumerateRequest, workers: int | None = None) -> EnumerateResult:
        """
        Conta (e opcionalmente lista) os prefixos de expansões de x.

        A listagem é limitada por MAX_LIST_DEPTH e a contagem por MAX_COUNT_DEPTH.

        Raises:
            DepthLimitError: Profundidade acima do limite
        """
        pair = request.to_pair()
        x = parse_rational(request.x)

        if request.listing:
            if request.depth > settings.MAX_LIST_DEPTH:
                raise DepthLimitError(
                    f"depth = {request.depth} acima do limite de listagem {settings.MAX_LIST_DEPTH}"
                )
            nodes = EnumerationService.enumerate_prefixes(pair, x, request.depth, workers=workers)
            return EnumerateResult(
                count=len(nodes),
                prefixes=[
                    PrefixEntry(digits=list(node.prefix.digits), pullback=format_rational(node.pullback))
                    for node in nodes
                ],
            )

        if request.depth > settings.MAX_COUNT_DEPTH:
            raise DepthLimitError(f"depth = {request.depth} acima do limite de contagem {settings.MAX_COUNT_DEPTH}")
        return EnumerateResult(count=EnumerationService.count_expansions(pair, x, request.depth))

    @staticmethod
    def coverage(request: CoverageRequest, workers: int | None = None) -> CoverageResult:
        """Verifica que os cilindros de comprimento depth cobrem I."""
        pair = request.to_pair()
        covered = ProjectionService.coverage_check(pair, request.depth, workers=workers)
        return CoverageResult(depth=request.depth, interval=str(pair.full_interval), covered=covered)
