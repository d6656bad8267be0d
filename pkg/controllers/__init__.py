"""
Controllers do BetaPair

Exporta todos os controllers para fácil importação.
"""

from controllers.expansion_controller import ExpansionController
from controllers.analysis_controller import AnalysisController

__all__ = [
    "ExpansionController",
    "AnalysisController",
]
