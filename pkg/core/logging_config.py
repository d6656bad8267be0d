"""
Configuração de Logs

Os logs vão sempre para stderr via RichHandler, de modo que a saída
da CLI em stdout permaneça idêntica byte a byte entre execuções.
"""

import logging

from rich.console import Console
from rich.logging import RichHandler

from core.config import settings


def setup_logging(level: str | None = None) -> None:
    """
    Instala o handler de logs da aplicação.

    Args:
        level: Nível de log (padrão: settings.LOG_LEVEL)
    """
    logging.basicConfig(
        level=(level or settings.LOG_LEVEL).upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )
