"""
Models do BetaPair

Exporta todos os tipos de domínio imutáveis para fácil importação.
"""

from models.interval import EMPTY, EmptyInterval, Interval, RatInterval
from models.sequence import DigitWord, EventuallyPeriodicSequence
from models.base_pair import BasePair, RegimeReport
from models.algorithm import AlgorithmKind, AlgorithmVariant
from models.expansion import BranchNode, DimensionValue, ExpansionNode, UniquenessCertificate

__all__ = [
    "EMPTY",
    "EmptyInterval",
    "Interval",
    "RatInterval",
    "DigitWord",
    "EventuallyPeriodicSequence",
    "BasePair",
    "RegimeReport",
    "AlgorithmKind",
    "AlgorithmVariant",
    "BranchNode",
    "DimensionValue",
    "ExpansionNode",
    "UniquenessCertificate",
]
