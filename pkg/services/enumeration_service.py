"""
Serviço de Enumeração de Expansões

Percorre em profundidade todas as escolhas válidas de dígitos para x:
em cada resto r o dígito d é permitido sse r ∈ T_d(I), e o novo resto
é T_d⁻¹(r). Um prefixo w é gerado sse x ∈ T_w(I).

A contagem agrupa restos iguais no mesmo nível com multiplicidade,
o que controla a explosão exponencial no regime de contínuo.
"""

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from core.config import settings
from core.exceptions import DepthLimitError, DomainError
from models.base_pair import BasePair
from models.expansion import ExpansionNode
from models.sequence import DigitWord
from services.projection_service import ProjectionService

logger = logging.getLogger(__name__)


def _children(pair: BasePair, node: ExpansionNode) -> list[ExpansionNode]:
    """Filhos de um nó em ordem lexicográfica (dígito 0 antes do 1)."""
    return [
        ExpansionNode(node.prefix.append(digit), ProjectionService.invert_contraction(pair, digit, node.pullback))
        for digit in EnumerationService.allowed_digits(pair, node.pullback)
    ]


def _expand_subtree(pair: BasePair, root: ExpansionNode, depth: int) -> list[ExpansionNode]:
    """Todos os descendentes de root no nível depth, em ordem lexicográfica."""
    level = [root]
    for _ in range(depth - len(root.prefix)):
        level = [child for node in level for child in _children(pair, node)]
    return level


class EnumerationService:
    """
    Serviço de enumeração e contagem de prefixos de expansões.
    """

    @staticmethod
    def allowed_digits(pair: BasePair, x: Fraction) -> tuple[int, ...]:
        """
        Dígitos d com x ∈ T_d(I).

        Args:
            pair: Par de bases
            x: Ponto de I

        Returns:
            (0,) se x < β₁, (1,) se x > β₀β₁/(1−β₁), (0, 1) na sobreposição fechada

        Raises:
            DomainError: Se x ∉ I
        """
        ProjectionService.require_in_interval(pair, x)
        if x < pair.beta1:
            return (0,)
        if x > pair.overlap_hi:
            return (1,)
        return (0, 1)

    @staticmethod
    def enumerate_prefixes(
        pair: BasePair, x: Fraction, n: int, workers: int | None = None
    ) -> list[ExpansionNode]:
        """
        Todos os prefixos de comprimento n de expansões de x.

        Args:
            pair: Par de bases
            x: Ponto de I
            n: Comprimento (n ≥ 0)
            workers: Processos para as subárvores (padrão: settings.WORKERS)

        Returns:
            Nós ordenados lexicograficamente pelo prefixo, com o resto exato

        Raises:
            DomainError: Se x ∉ I ou n < 0
        """
        ProjectionService.require_in_interval(pair, x)
        if n < 0:
            raise DomainError(f"n = {n} deve ser não negativo")

        root = ExpansionNode(DigitWord(), x)
        workers = workers or settings.WORKERS
        if workers <= 1 or n < 4:
            return _expand_subtree(pair, root, n)

        # Subárvores a partir de um nível raso, concatenadas na ordem das raízes
        frontier = _expand_subtree(pair, root, 3)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_expand_subtree, [pair] * len(frontier), frontier, [n] * len(frontier))
            nodes = [node for part in parts for node in part]
        logger.debug(f"Enumeração paralela: {len(frontier)} subárvores, {len(nodes)} nós")
        return nodes

    @staticmethod
    def count_expansions(pair: BasePair, x: Fraction, n: int) -> int:
        """
        Número de prefixos de comprimento n de expansões de x, sem materializá-los.

        Restos iguais no mesmo nível são agrupados com multiplicidade.
        """
        ProjectionService.require_in_interval(pair, x)
        if n < 0:
            raise DomainError(f"n = {n} deve ser não negativo")

        level: Counter[Fraction] = Counter({x: 1})
        for depth in range(n):
            following: Counter[Fraction] = Counter()
            for pullback, multiplicity in level.items():
                for digit in EnumerationService.allowed_digits(pair, pullback):
                    following[ProjectionService.invert_contraction(pair, digit, pullback)] += multiplicity
            level = following
            logger.debug(f"Nível {depth + 1}: {len(level)} restos distintos")
        return sum(level.values())

    @staticmethod
    def exceeds_count(pair: BasePair, x: Fraction, n: int, threshold: int) -> bool:
        """
        Se existem ao menos threshold prefixos de comprimento n.

        Busca em profundidade com parada antecipada; útil em profundidades
        onde a contagem completa seria cara.

        Raises:
            DomainError: Se x ∉ I ou n < 0
            DepthLimitError: Se n excede settings.MAX_COUNT_DEPTH
        """
        ProjectionService.require_in_interval(pair, x)
        if n < 0:
            raise DomainError(f"n = {n} deve ser não negativo")
        if n > settings.MAX_COUNT_DEPTH:
            raise DepthLimitError(f"n = {n} acima do limite {settings.MAX_COUNT_DEPTH}")
        if threshold <= 0:
            return True

        found = 0
        stack = [(x, 0)]
        while stack:
            pullback, depth = stack.pop()
            if depth == n:
                found += 1
                if found >= threshold:
                    return True
                continue
            for digit in reversed(EnumerationService.allowed_digits(pair, pullback)):
                stack.append((ProjectionService.invert_contraction(pair, digit, pullback), depth + 1))
        return False
