"""
Serviço de Projeção - Núcleo das Expansões (β₀,β₁)

Este é o CORE do BetaPair!

Responsável por:
- Contrações T₀(x) = β₀x e T₁(x) = β₁x + β₁ e suas inversas
- Projeção π nas três formas: série truncada, composição de contrações
  e forma fechada para sequências eventualmente periódicas
- Intervalos cilíndricos T_{w₁}∘…∘T_{wₙ}(I)
- Verificação de cobertura de I pelos 2ⁿ cilindros
- Relatório exato dos regimes dos teoremas
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import product

from core.config import settings
from core.exceptions import DepthLimitError, DomainError
from core.rationals import format_rational
from models.base_pair import BasePair, RegimeReport
from models.interval import RatInterval
from models.sequence import DigitWord, EventuallyPeriodicSequence

logger = logging.getLogger(__name__)


def _affine_of(pair: BasePair, digits) -> tuple[Fraction, Fraction]:
    """(peso, deslocamento) da composição T_{w₁}∘…∘T_{wₙ}: x ↦ peso·x + deslocamento."""
    weight, offset = Fraction(1), Fraction(0)
    beta0, beta1 = pair.beta0, pair.beta1
    for digit in digits:
        if digit:
            weight *= beta1
            offset += weight
        else:
            weight *= beta0
    return weight, offset


def _cylinders_under(pair: BasePair, head: tuple[int, ...], depth: int) -> list[tuple[Fraction, Fraction]]:
    """Extremidades (lo, hi) de todos os cilindros de comprimento depth que começam com head."""
    weight, offset = _affine_of(pair, head)
    stack = [(depth - len(head), weight, offset)]
    ends: list[tuple[Fraction, Fraction]] = []
    top = pair.interval_max
    while stack:
        remaining, weight, offset = stack.pop()
        if remaining == 0:
            ends.append((offset, offset + weight * top))
            continue
        stack.append((remaining - 1, weight * pair.beta0, offset))
        one_weight = weight * pair.beta1
        stack.append((remaining - 1, one_weight, offset + one_weight))
    return ends


class ProjectionService:
    """
    Serviço da projeção π: Σ → I.
    """

    @staticmethod
    def require_in_interval(pair: BasePair, x: Fraction, name: str = "x") -> None:
        if not pair.in_full_interval(x):
            raise DomainError(
                f"{name} = {format_rational(x)} fora de I = [0, {format_rational(pair.interval_max)}]"
            )

    @staticmethod
    def _require_digit(digit: int) -> None:
        if digit not in (0, 1):
            raise DomainError(f"Dígito inválido {digit!r}: apenas 0 ou 1")

    @staticmethod
    def apply_contraction(pair: BasePair, digit: int, x: Fraction) -> Fraction:
        """
        Aplica T₀ ou T₁.

        Args:
            pair: Par de bases
            digit: 0 ou 1
            x: Ponto de I

        Returns:
            β₀x para o dígito 0, β₁x + β₁ para o dígito 1

        Raises:
            DomainError: Se x ∉ I
        """
        ProjectionService._require_digit(digit)
        ProjectionService.require_in_interval(pair, x)
        if digit == 0:
            return pair.beta0 * x
        return pair.beta1 * x + pair.beta1

    @staticmethod
    def invert_contraction(pair: BasePair, digit: int, x: Fraction) -> Fraction:
        """
        Aplica T₀⁻¹ ou T₁⁻¹.

        Args:
            pair: Par de bases
            digit: 0 ou 1
            x: Ponto de T_d(I)

        Returns:
            β₀⁻¹x para o dígito 0, β₁⁻¹x − 1 para o dígito 1

        Raises:
            DomainError: Se x ∉ T_d(I)
        """
        ProjectionService._require_digit(digit)
        if digit == 0:
            if not 0 <= x <= pair.overlap_hi:
                raise DomainError(
                    f"x = {format_rational(x)} fora de T₀(I) = [0, {format_rational(pair.overlap_hi)}]"
                )
            return x / pair.beta0
        if not pair.beta1 <= x <= pair.interval_max:
            raise DomainError(
                f"x = {format_rational(x)} fora de T₁(I) = "
                f"[{format_rational(pair.beta1)}, {format_rational(pair.interval_max)}]"
            )
        return x / pair.beta1 - 1

    @staticmethod
    def weight_and_offset(pair: BasePair, word: DigitWord) -> tuple[Fraction, Fraction]:
        """
        Coeficientes da composição T_{w₁}∘…∘T_{wₙ}(x) = β₀^{0ₙ}β₁^{1ₙ}·x + Σ wᵢβ₀^{0ᵢ}β₁^{1ᵢ}.
        """
        return _affine_of(pair, word)

    @staticmethod
    def cylinder_interval(pair: BasePair, word: DigitWord) -> RatInterval:
        """
        Intervalo cilíndrico T_{w₁}∘…∘T_{wₙ}(I), fechado.

        Args:
            pair: Par de bases
            word: Palavra w (vazia devolve I)

        Returns:
            [deslocamento, deslocamento + peso·β₁/(1−β₁)]
        """
        weight, offset = _affine_of(pair, word)
        return RatInterval.closed(offset, offset + weight * pair.interval_max)

    @staticmethod
    def project_prefix_with_remainder(pair: BasePair, word: DigitWord, remainder: Fraction) -> Fraction:
        """
        Valor exato da composição de contrações no resto r.

        Raises:
            DomainError: Se r ∉ I
        """
        ProjectionService.require_in_interval(pair, remainder, "r")
        weight, offset = _affine_of(pair, word)
        return weight * remainder + offset

    @staticmethod
    def project_truncated(
        pair: BasePair, sequence: EventuallyPeriodicSequence, n: int
    ) -> tuple[Fraction, Fraction]:
        """
        Série truncada de π com cota do resto.

        Args:
            pair: Par de bases
            sequence: Sequência eventualmente periódica
            n: Número de termos (n ≥ 0)

        Returns:
            Tupla (valor, cota) com π(s) ∈ [valor, valor + cota]
        """
        if n < 0:
            raise DomainError(f"n = {n} deve ser não negativo")
        weight, offset = _affine_of(pair, sequence.prefix(n))
        return offset, weight * pair.interval_max

    @staticmethod
    def project_eventually_periodic(pair: BasePair, sequence: EventuallyPeriodicSequence) -> Fraction:
        """
        Forma fechada de π(u·(v)^ω).

        O período é o ponto fixo da composição afim x = c·x + d, isto é d/(1−c),
        e o pré-período é aplicado a esse ponto fixo.
        """
        c, d = _affine_of(pair, sequence.period)
        fixed_point = d / (1 - c)
        weight, offset = _affine_of(pair, sequence.preperiod)
        return weight * fixed_point + offset

    @staticmethod
    def continuity_bound(pair: BasePair, u: int) -> Fraction:
        """
        Módulo de continuidade de π: sequências que concordam nos u primeiros
        dígitos têm projeções a distância menor que β₀ᵘ·β₁/(1−β₁).
        """
        return pair.beta0**u * pair.interval_max

    @staticmethod
    def coverage_check(pair: BasePair, n: int, workers: int | None = None) -> bool:
        """
        Verifica que os 2ⁿ cilindros de comprimento n cobrem exatamente I.

        Args:
            pair: Par de bases
            n: Comprimento das palavras (n ≥ 1)
            workers: Processos para particionar as palavras (padrão: settings.WORKERS)

        Returns:
            True sse a varredura ordenada não deixa buracos e vai de 0 a β₁/(1−β₁)

        Raises:
            DepthLimitError: Se n excede settings.MAX_COVERAGE_DEPTH
        """
        if n < 1:
            raise DomainError(f"n = {n} deve ser ≥ 1")
        if n > settings.MAX_COVERAGE_DEPTH:
            raise DepthLimitError(f"n = {n} acima do limite {settings.MAX_COVERAGE_DEPTH}")

        workers = workers or settings.WORKERS
        split = min(n, 3) if workers > 1 else 0
        heads = list(product((0, 1), repeat=split))

        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_cylinders_under, [pair] * len(heads), heads, [n] * len(heads)))
        else:
            parts = [_cylinders_under(pair, head, n) for head in heads]

        ends = sorted(end for part in parts for end in part)
        logger.debug(f"Cobertura n={n}: {len(ends)} cilindros")

        if ends[0][0] != 0:
            return False
        reach = ends[0][1]
        for lo, hi in ends[1:]:
            if lo > reach:
                return False
            reach = max(reach, hi)
        return reach == pair.interval_max

    @staticmethod
    def regime_report(pair: BasePair) -> RegimeReport:
        """
        Avalia exatamente as desigualdades estritas dos teoremas.

        - continuum_all: β₁²+β₀ > 1
        - countable_unique: β₀(1+β₁) < 1
        - uncountable_unique: β₀(1+2β₁−β₀β₁) < 1
        - extremal_inequality: β₁(1+2β₀−β₀β₁) < 1
        - ifs_separated: F(J̄) = T₀∘T₁(J̄) termina antes de G(J̄) = T₁∘T₀(J̄) começar
        """
        b0, b1 = pair.beta0, pair.beta1
        product_ = b0 * b1
        attractor_top = b1 / (1 - product_)
        f_top = product_ * attractor_top + product_

        return RegimeReport(
            continuum_all=b1 * b1 + b0 > 1,
            countable_unique=b0 * (1 + b1) < 1,
            uncountable_unique=b0 * (1 + 2 * b1 - product_) < 1,
            extremal_inequality=b1 * (1 + 2 * b0 - product_) < 1,
            ifs_separated=f_top < b1,
        )
