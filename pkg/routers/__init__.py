"""
Routers do BetaPair

Exporta todos os routers para fácil importação.
"""

from routers import analysis, expansions

__all__ = [
    "expansions",
    "analysis",
]
