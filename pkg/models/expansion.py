"""
Models dos Resultados de Análise

- ExpansionNode: nó da árvore de enumeração de expansões de x
- UniquenessCertificate: decisão exata de unicidade de uma sequência eventualmente periódica
- BranchNode: nó da árvore de ramificação (contínuo de expansões)
- DimensionValue: dimensão como razão de logaritmos
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from models.sequence import DigitWord, EventuallyPeriodicSequence


@dataclass(frozen=True, slots=True)
class ExpansionNode:
    """
    Prefixo válido de uma expansão de x.

    Atributos:
        prefix: Palavra w com x ∈ T_w(I)
        pullback: Resto r = T_w⁻¹(x) ∈ I, isto é, T_w(r) = x
    """

    prefix: DigitWord
    pullback: Fraction


@dataclass(frozen=True, slots=True)
class UniquenessCertificate:
    """
    Certificado da decisão de unicidade.

    Atributos:
        sequence: Sequência analisada (forma canônica)
        shifted_values: π(σᵏ(s)) para cada deslocamento distinto k
        verdict: True sse nenhum valor cai na sobreposição fechada
        witness_shift: Primeiro k com π(σᵏ(s)) na sobreposição (quando verdict é False)
    """

    sequence: EventuallyPeriodicSequence
    shifted_values: tuple[Fraction, ...]
    verdict: bool
    witness_shift: int | None = None


@dataclass(frozen=True, slots=True)
class BranchNode:
    """
    Nó da árvore de ramificação.

    Em y vale y = T_{prefix}∘T_d(x_d) para d = 0 e d = 1, com x₀ ≠ x₁ em J.

    Atributos:
        value: O ponto y
        depth: Menor k com y ∈ Λₖ
        prefix: Dígitos comuns s₁…sₖ até a ramificação
        branch_digit: Dígito que levou a este nó (None na raiz)
        children: Filhos para os dígitos 0 e 1 (vazio nas folhas)
    """

    value: Fraction
    depth: int
    prefix: DigitWord
    branch_digit: int | None = None
    children: tuple["BranchNode", ...] = field(default=())

    def leaf_words(self, head: DigitWord = DigitWord()) -> list[DigitWord]:
        """
        Prefixos completos de x obtidos descendo até cada folha.

        Prefixos de folhas distintas divergem em um dígito de ramificação,
        portanto nenhum é prefixo do outro.
        """
        if not self.children:
            return [head]
        words: list[DigitWord] = []
        for child in self.children:
            words.extend(child.leaf_words(head + self.prefix.append(child.branch_digit)))
        return words

    def leaf_count(self) -> int:
        if not self.children:
            return 1
        return sum(child.leaf_count() for child in self.children)


@dataclass(frozen=True, slots=True)
class DimensionValue:
    """
    Dimensão log(numerator_arg) / log(denominator_arg).

    Atributos:
        numerator_arg: Argumento do logaritmo do numerador (2)
        denominator_arg: Argumento do logaritmo do denominador (1/(β₀β₁))
        exact: Valor racional quando reconhecido exatamente (β₀β₁ = 1/2 ⇒ 1)
    """

    numerator_arg: Fraction
    denominator_arg: Fraction
    exact: Fraction | None = None

    @property
    def approx(self) -> float:
        if self.exact is not None:
            return float(self.exact)
        return math.log(self.numerator_arg) / math.log(self.denominator_arg)
