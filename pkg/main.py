"""
BetaPair Backend - Main Application

Este é o ponto de entrada HTTP do BetaPair.

Aplicação FastAPI para expansões não uniformes (β₀,β₁) de números reais.
Permite explorar em aritmética racional exata:
- Expansões gulosa, preguiçosa e intermediária
- Enumeração e contagem de todas as expansões de um ponto
- Regimes de contínuo e de unicidade
- Dimensão de Hausdorff do conjunto de expansões únicas

Tecnologias:
- FastAPI: Framework web
- Pydantic: Validação de dados e configuração
- fractions: Aritmética racional exata
- NumPy: Estimativas por contagem de caixas
"""

# Carregar variáveis de ambiente ANTES de qualquer import
from dotenv import load_dotenv
load_dotenv()

import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI, Request, status
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from core.config import settings
from core.exceptions import DomainError, RationalParseError, RegimeError
from core.logging_config import setup_logging
from routers import analysis, expansions

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    """
    Gerencia o ciclo de vida da aplicação.

    Startup:
    - Configura os logs (stderr, nível LOG_LEVEL)
    """
    setup_logging()
    logger.info(f"Iniciando {settings.APP_NAME} {settings.APP_VERSION} (workers={settings.WORKERS})")

    yield

    logger.info(f"Encerrando {settings.APP_NAME}")


# Cria a aplicação FastAPI
app = FastAPI(
    title=settings.APP_NAME,
    version=settings.APP_VERSION,
    description=settings.APP_DESCRIPTION,
    lifespan=lifespan,
    docs_url="/docs",
    redoc_url="/redoc",
)

# ============= MIDDLEWARES =============

# CORS - Permite requisições de outros domínios
app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.CORS_ORIGINS,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# ============= EXCEPTION HANDLERS =============

@app.exception_handler(RationalParseError)
async def parse_error_handler(request: Request, exc: RationalParseError):
    """Texto malformado: 400."""
    return JSONResponse(
        status_code=status.HTTP_400_BAD_REQUEST,
        content={"detail": str(exc), "type": type(exc).__name__},
    )


@app.exception_handler(DomainError)
async def domain_error_handler(request: Request, exc: DomainError):
    """
    Valor fora do domínio ou hipótese de teorema violada: 422.

    Para RegimeError a desigualdade violada vai no campo "inequality".
    """
    content = {"detail": str(exc), "type": type(exc).__name__}
    if isinstance(exc, RegimeError):
        content["inequality"] = exc.inequality
    return JSONResponse(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, content=content)


@app.exception_handler(Exception)
async def global_exception_handler(request: Request, exc: Exception):
    """
    Handler global para exceções não tratadas.
    """
    logger.exception(f"Erro não tratado em {request.url.path}")
    if settings.DEBUG:
        # Em desenvolvimento, mostra o erro completo
        return JSONResponse(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            content={
                "detail": "Erro interno do servidor",
                "error": str(exc),
                "type": type(exc).__name__
            }
        )
    else:
        # Em produção, oculta detalhes do erro
        return JSONResponse(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            content={"detail": "Erro interno do servidor"}
        )


# ============= ROUTERS =============

# Health check endpoint
@app.get(
    "/",
    tags=["Health"],
    summary="Health Check",
    description="Verifica se a API está funcionando."
)
def health_check():
    """
    Endpoint simples para verificar se a API está online.
    """
    return {
        "status": "ok",
        "app": settings.APP_NAME,
        "version": settings.APP_VERSION,
    }


@app.get(
    "/health",
    tags=["Health"],
    summary="Health Check Detalhado",
    description="Verifica o status da API e os limites configurados."
)
def detailed_health_check():
    """
    Health check detalhado incluindo os limites de profundidade.
    """
    return {
        "status": "ok",
        "app": settings.APP_NAME,
        "version": settings.APP_VERSION,
        "limits": {
            "max_list_depth": settings.MAX_LIST_DEPTH,
            "max_count_depth": settings.MAX_COUNT_DEPTH,
            "max_coverage_depth": settings.MAX_COVERAGE_DEPTH,
            "max_splits": settings.MAX_SPLITS,
            "max_samples": settings.MAX_SAMPLES,
            "max_sequence_length": settings.MAX_SEQUENCE_LENGTH,
        },
        "workers": settings.WORKERS,
    }


# Registra os routers
app.include_router(expansions.router)
app.include_router(analysis.router)


# ============================================
# Para desenvolvimento local, execute:
# uvicorn main:app --reload --host 0.0.0.0 --port 8000
# ============================================
