"""
Services do BetaPair

Exporta todos os services para fácil importação.
"""

from services.interval_service import IntervalService
from services.sequence_service import SequenceService
from services.projection_service import ProjectionService
from services.digit_service import DigitService
from services.enumeration_service import EnumerationService
from services.lambda_service import LambdaService
from services.uniqueness_service import UniquenessService
from services.dimension_service import DimensionService
from services.survey_service import SurveyService

__all__ = [
    "IntervalService",
    "SequenceService",
    "ProjectionService",
    "DigitService",
    "EnumerationService",
    "LambdaService",
    "UniquenessService",
    "DimensionService",
    "SurveyService",
]
