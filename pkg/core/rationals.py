"""
Codec de Racionais Exatos

Formatos aceitos:
- "p/q" com p inteiro e q inteiro positivo
- decimal finito, ex: "0.55" (convertido exatamente para 11/20)

Todo racional é renderizado como "p/q", inclusive inteiros ("2/1").
"""

import re
from fractions import Fraction

from core.exceptions import RationalParseError

_RATIO = re.compile(r"^([+-]?\d+)/(\d+)$")
_DECIMAL = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)$")


def parse_rational(text: str) -> Fraction:
    """
    Converte texto em racional exato.

    Args:
        text: "p/q" ou decimal finito

    Returns:
        Fraction em forma canônica

    Raises:
        RationalParseError: Se o texto é malformado ou o denominador é zero
    """
    if not isinstance(text, str):
        raise RationalParseError(f"Racional deve ser texto, recebido {type(text).__name__}")

    stripped = text.strip()
    match = _RATIO.match(stripped)
    if match:
        numerator, denominator = int(match.group(1)), int(match.group(2))
        if denominator == 0:
            raise RationalParseError(f"Denominador zero em '{text}'")
        return Fraction(numerator, denominator)

    if _DECIMAL.match(stripped):
        # Fraction interpreta decimais de forma exata
        return Fraction(stripped)

    raise RationalParseError(f"Racional malformado: '{text}' (use 'p/q' ou decimal finito)")


def format_rational(value: Fraction | int) -> str:
    """Renderiza um racional como "p/q"."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"
