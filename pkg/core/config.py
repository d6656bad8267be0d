"""
Arquivo de Configuração Central do BetaPair

Contém todas as configurações da aplicação incluindo:
- Configurações gerais da aplicação (nome, versão, logs)
- Limites de segurança para enumeração, contagem e amostragem
- Semente padrão e grade de amostragem do survey
- Paralelismo interno da enumeração
"""

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """
    Classe de configurações da aplicação usando Pydantic BaseSettings.
    As variáveis podem ser sobrescritas por variáveis de ambiente.
    """

    # Configurações Gerais
    APP_NAME: str = "BetaPair API"
    APP_VERSION: str = "1.0.0"
    APP_DESCRIPTION: str = "Expansões não uniformes (β₀,β₁) de números reais em aritmética exata"
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"

    # Limites de profundidade
    MAX_LIST_DEPTH: int = 16  # Listagem de prefixos (saída exponencial)
    MAX_COUNT_DEPTH: int = 40  # Contagem com memoização
    MAX_COVERAGE_DEPTH: int = 20  # 2^n intervalos cilíndricos
    MAX_IFS_DEPTH: int = 24  # Imagens do IFS e contagem de caixas
    MAX_SPLITS: int = 8  # Árvore de ramificação (2^splits folhas)
    MAX_SAMPLES: int = 10000
    MAX_SEQUENCE_LENGTH: int = 256  # Dígitos de sequências, padrões e k da família 0^k(01)

    # Amostragem
    DEFAULT_SEED: int = 0
    SURVEY_GRID_BITS: int = 20  # Pontos da grade 2^k de I

    # Paralelismo (1 = sequencial)
    WORKERS: int = 1

    # Configurações CORS
    CORS_ORIGINS: list = [
        "http://localhost:3000",
        "http://localhost:8000",
        "http://127.0.0.1:3000",
        "http://127.0.0.1:8000",
    ]

    class Config:
        env_file = ".env"
        case_sensitive = True


# Instância global de configurações
settings = Settings()
