"""
Schemas Pydantic do BetaPair

Exporta todos os schemas para fácil importação.
"""

from schemas.common import ApproxValues, BasePairRequest, OutputFormat, RationalText
from schemas.expansion import (
    CoverageRequest,
    CoverageResult,
    EnumerateRequest,
    EnumerateResult,
    ExpandRequest,
    ExpandResult,
    PrefixEntry,
)
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
from schemas.run_config import Command, RunConfig

__all__ = [
    # Common schemas
    "ApproxValues",
    "BasePairRequest",
    "OutputFormat",
    "RationalText",
    # Expansion schemas
    "CoverageRequest",
    "CoverageResult",
    "EnumerateRequest",
    "EnumerateResult",
    "ExpandRequest",
    "ExpandResult",
    "PrefixEntry",
    # Analysis schemas
    "BranchNodeSchema",
    "BranchRequest",
    "BranchResult",
    "DimensionRequest",
    "DimensionResult",
    "LambdaRequest",
    "LambdaResult",
    "RegimeResult",
    "SurveyRequest",
    "SurveyResult",
    "UniqueRequest",
    "UniqueResult",
    # CLI
    "Command",
    "RunConfig",
]
