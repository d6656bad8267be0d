"""
Serviço de Expansões Únicas

A expansão s de x é única sse π(σᵏ(s)) ∈ [0,β₁) ∪ (β₀β₁/(1−β₁), β₁/(1−β₁)]
para todo k ≥ 0. Para s eventualmente periódica há apenas
|pré-período| + |período| deslocamentos distintos, então a decisão é finita e exata.

Construções:
- família 0…0(01)^ω, única quando β₀(1+β₁) < 1
- V = {01,10}^ℕ e U = ⋃ σᵏ(V), únicas quando β₀(1+2β₁−β₀β₁) < 1
"""

import logging
from fractions import Fraction

from core.exceptions import DomainError, RationalParseError, RegimeError
from core.rationals import format_rational
from models.base_pair import BasePair
from models.expansion import UniquenessCertificate
from models.sequence import DigitWord, EventuallyPeriodicSequence
from services.projection_service import ProjectionService
from services.sequence_service import SequenceService

logger = logging.getLogger(__name__)

COUNTABLE_INEQUALITY = "β₀(1+β₁) < 1"
UNCOUNTABLE_INEQUALITY = "β₀(1+2β₁−β₀β₁) < 1"

_V_BLOCKS = {"A": (0, 1), "B": (1, 0)}

# Sequências extremas de U: maior projeção com s₁ = 0 e menor com s₁ = 1
LARGEST_ZERO_LED = EventuallyPeriodicSequence.of("011", "01")
SMALLEST_ONE_LED = EventuallyPeriodicSequence.of("100", "10")


class UniquenessService:
    """
    Serviço de decisão e construção de expansões únicas.
    """

    @staticmethod
    def in_overlap(pair: BasePair, value: Fraction) -> bool:
        """Se value ∈ [β₁, β₀β₁/(1−β₁)] (sobreposição fechada)."""
        return pair.beta1 <= value <= pair.overlap_hi

    @staticmethod
    def unique_eventually_periodic(pair: BasePair, sequence: EventuallyPeriodicSequence) -> UniquenessCertificate:
        """
        Decide exatamente se π(s) tem s como única expansão.

        Args:
            pair: Par de bases
            sequence: Sequência eventualmente periódica

        Returns:
            Certificado com π(σᵏ(s)) para cada deslocamento distinto,
            o veredito e o primeiro deslocamento testemunha quando não é única
        """
        values: list[Fraction] = []
        witness: int | None = None
        for k in range(SequenceService.distinct_shift_count(sequence)):
            value = ProjectionService.project_eventually_periodic(pair, SequenceService.shift(sequence, k))
            values.append(value)
            if witness is None and UniquenessService.in_overlap(pair, value):
                witness = k

        logger.debug(f"Unicidade de {sequence}: testemunha={witness}")
        return UniquenessCertificate(
            sequence=sequence,
            shifted_values=tuple(values),
            verdict=witness is None,
            witness_shift=witness,
        )

    @staticmethod
    def countable_unique_family(pair: BasePair, zeros: int) -> EventuallyPeriodicSequence:
        """
        A sequência 0^zeros·(01)^ω.

        Raises:
            RegimeError: Se β₀(1+β₁) ≥ 1
        """
        if zeros < 0:
            raise DomainError(f"zeros = {zeros} deve ser não negativo")
        if not ProjectionService.regime_report(pair).countable_unique:
            value = pair.beta0 * (1 + pair.beta1)
            raise RegimeError(COUNTABLE_INEQUALITY, f"β₀(1+β₁) = {format_rational(value)}")
        return EventuallyPeriodicSequence(DigitWord((0,) * zeros), DigitWord((0, 1)))

    @staticmethod
    def v_set_word(pattern: str, shift: int) -> DigitWord:
        """
        Substitui A ↦ 01, B ↦ 10 e remove os shift primeiros dígitos.

        Args:
            pattern: Palavra não vazia sobre {A, B}
            shift: 0 ou 1

        Raises:
            RationalParseError: Se o padrão contém outras letras
        """
        blocks = UniquenessService._blocks(pattern)
        if shift not in (0, 1):
            raise DomainError(f"shift = {shift} deve ser 0 ou 1")
        digits = tuple(d for block in blocks for d in block)
        return DigitWord(digits[shift:])

    @staticmethod
    def v_set_sequence(pattern: str, shift: int) -> EventuallyPeriodicSequence:
        """σ^shift do elemento periódico (padrão)^ω de V, um elemento de U."""
        blocks = UniquenessService._blocks(pattern)
        if shift not in (0, 1):
            raise DomainError(f"shift = {shift} deve ser 0 ou 1")
        periodic = EventuallyPeriodicSequence(DigitWord(()), DigitWord(tuple(d for block in blocks for d in block)))
        return SequenceService.shift(periodic, shift)

    @staticmethod
    def _blocks(pattern: str) -> list[tuple[int, int]]:
        text = pattern.strip().upper()
        if not text or any(letter not in _V_BLOCKS for letter in text):
            raise RationalParseError(f"Padrão malformado: '{pattern}' (use letras A e B)")
        return [_V_BLOCKS[letter] for letter in text]

    @staticmethod
    def extremal_projections(pair: BasePair) -> dict[str, Fraction | bool]:
        """
        Projeções extremas de U e suas comparações exatas.

        - largest_zero_led = π(011(01)^ω) = β₁(β₀+β₀β₁−β₀²β₁)/(1−β₀β₁), deve ser < β₁
        - smallest_one_led = π(100(10)^ω) = β₁+(β₀β₁)²/(1−β₀β₁), deve ser > β₀β₁/(1−β₁)
        """
        largest = ProjectionService.project_eventually_periodic(pair, LARGEST_ZERO_LED)
        smallest = ProjectionService.project_eventually_periodic(pair, SMALLEST_ONE_LED)
        return {
            "largest_zero_led": largest,
            "smallest_one_led": smallest,
            "largest_below_beta1": largest < pair.beta1,
            "smallest_above_overlap": smallest > pair.overlap_hi,
        }
