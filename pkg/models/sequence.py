"""
Model de Sequências Binárias

- DigitWord: palavra finita sobre {0,1} (prefixos, truncamentos)
- EventuallyPeriodicSequence: sequência u·(v)^ω em forma canônica

Formato texto: "101(01)" significa pré-período 1,0,1 seguido do período 0,1
repetido; "(0)" é a sequência nula.
"""

import re
from dataclasses import dataclass
from typing import Iterator

from core.exceptions import DomainError, RationalParseError

_SEQUENCE_TEXT = re.compile(r"^([01]*)\(([01]+)\)$")
_WORD_TEXT = re.compile(r"^[01]*$")


@dataclass(frozen=True, slots=True, order=True)
class DigitWord:
    """
    Palavra finita de dígitos binários.

    Palavras de mesmo comprimento comparam-se lexicograficamente.
    A palavra vazia é a identidade da composição.
    """

    digits: tuple[int, ...] = ()

    def __post_init__(self):
        digits = tuple(self.digits)
        for digit in digits:
            if digit not in (0, 1):
                raise DomainError(f"Dígito inválido {digit!r}: apenas 0 ou 1")
        object.__setattr__(self, "digits", tuple(int(d) for d in digits))

    @classmethod
    def parse(cls, text: str) -> "DigitWord":
        stripped = text.strip()
        if not _WORD_TEXT.match(stripped):
            raise RationalParseError(f"Palavra binária malformada: '{text}'")
        return cls(tuple(int(c) for c in stripped))

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return DigitWord(self.digits[index])
        return self.digits[index]

    def __add__(self, other: "DigitWord") -> "DigitWord":
        return DigitWord(self.digits + tuple(other))

    def append(self, digit: int) -> "DigitWord":
        return DigitWord(self.digits + (digit,))

    def __str__(self) -> str:
        return "".join(str(d) for d in self.digits)


def _primitive_root(word: tuple[int, ...]) -> tuple[int, ...]:
    """Menor palavra r tal que word = r^k."""
    size = len(word)
    for length in range(1, size + 1):
        if size % length == 0 and word[:length] * (size // length) == word:
            return word[:length]
    return word


@dataclass(frozen=True, slots=True)
class EventuallyPeriodicSequence:
    """
    Sequência eventualmente periódica u·(v)^ω.

    A construção normaliza para a forma canônica: o período é primitivo
    e o pré-período é mínimo (seu último dígito difere do último dígito
    do período). Assim a igualdade estrutural decide a igualdade das sequências.

    Atributos:
        preperiod: Palavra u
        period: Palavra v (não vazia)
    """

    preperiod: DigitWord
    period: DigitWord

    def __post_init__(self):
        preperiod = self.preperiod if isinstance(self.preperiod, DigitWord) else DigitWord(tuple(self.preperiod))
        period = self.period if isinstance(self.period, DigitWord) else DigitWord(tuple(self.period))
        if len(period) == 0:
            raise DomainError("O período deve ser não vazio")

        pre = preperiod.digits
        per = _primitive_root(period.digits)
        # Absorve dígitos finais do pré-período girando o período para a direita
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = per[-1:] + per[:-1]

        object.__setattr__(self, "preperiod", DigitWord(pre))
        object.__setattr__(self, "period", DigitWord(per))

    @classmethod
    def of(cls, preperiod: str | tuple[int, ...], period: str | tuple[int, ...]) -> "EventuallyPeriodicSequence":
        pre = DigitWord.parse(preperiod) if isinstance(preperiod, str) else DigitWord(tuple(preperiod))
        per = DigitWord.parse(period) if isinstance(period, str) else DigitWord(tuple(period))
        return cls(pre, per)

    @classmethod
    def parse(cls, text: str) -> "EventuallyPeriodicSequence":
        """
        Lê o formato "u(v)".

        Raises:
            RationalParseError: Se o texto não segue o formato
        """
        match = _SEQUENCE_TEXT.match(text.strip())
        if not match:
            raise RationalParseError(f"Sequência malformada: '{text}' (use por exemplo '101(01)')")
        return cls.of(match.group(1), match.group(2))

    @classmethod
    def from_json(cls, data: dict) -> "EventuallyPeriodicSequence":
        try:
            return cls.of(tuple(data["preperiod"]), tuple(data["period"]))
        except (KeyError, TypeError) as exc:
            raise RationalParseError(f"Sequência JSON malformada: {data!r}") from exc

    def to_json(self) -> dict:
        return {"preperiod": list(self.preperiod.digits), "period": list(self.period.digits)}

    def digit(self, index: int) -> int:
        """Dígito na posição index (base 0)."""
        pre_len = len(self.preperiod)
        if index < pre_len:
            return self.preperiod.digits[index]
        return self.period.digits[(index - pre_len) % len(self.period)]

    def prefix(self, n: int) -> DigitWord:
        """Os n primeiros dígitos."""
        return DigitWord(tuple(self.digit(i) for i in range(n)))

    def __str__(self) -> str:
        return f"{self.preperiod}({self.period})"
