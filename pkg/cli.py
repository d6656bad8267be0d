#!/usr/bin/env python3
"""
BetaPair CLI - Expansões (β₀,β₁) em aritmética exata

Expõe todas as operações com saída determinística em texto, JSON ou CSV:

    python cli.py --beta0 3/4 --beta1 2/3 expand --x 1 --algorithm greedy --depth 5
    python cli.py --beta0 11/20 --beta1 51/100 --format json unique --sequence "(01)"
    python cli.py regime --beta0 3/4 --beta1 2/3

Códigos de saída:
- 0: sucesso
- 1: erro de leitura ou de uso (racional malformado, opção inválida)
- 2: erro de domínio ou de regime (x fora de I, hipótese de teorema violada)

Os logs vão para stderr; stdout contém apenas o resultado.
"""

import csv
import io
import json
import logging
import sys
from typing import Annotated, Callable, NoReturn, Optional

import click
import typer
from pydantic import BaseModel, ValidationError
from rich.console import Console
from rich.markup import escape
from typer.core import TyperGroup

from controllers.analysis_controller import AnalysisController
from controllers.expansion_controller import ExpansionController
from core.config import settings
from core.exceptions import ExpansionError, RationalParseError
from core.logging_config import setup_logging
from models.algorithm import AlgorithmVariant
from schemas.analysis import BranchRequest, DimensionRequest, LambdaRequest, SurveyRequest, UniqueRequest
from schemas.common import BasePairRequest, OutputFormat
from schemas.expansion import CoverageRequest, EnumerateRequest, ExpandRequest
from schemas.run_config import Command, RunConfig

logger = logging.getLogger(__name__)

PARSE_EXIT_CODE = RationalParseError.exit_code


class UsageExitGroup(TyperGroup):
    """Grupo de comandos cujos erros de uso saem com o código de erro de leitura."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            result = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.UsageError as exc:
            exc.exit_code = PARSE_EXIT_CODE
            if not standalone_mode:
                raise
            exc.show()
            sys.exit(PARSE_EXIT_CODE)
        except click.ClickException as exc:
            if not standalone_mode:
                raise
            exc.show()
            sys.exit(exc.exit_code)
        except click.Abort:
            if not standalone_mode:
                raise
            click.echo("Abortado", err=True)
            sys.exit(PARSE_EXIT_CODE)

        if not standalone_mode:
            return result
        # Sem standalone_mode, typer.Exit vira o código de saída devolvido
        sys.exit(result if isinstance(result, int) else 0)


app = typer.Typer(
    name="betapair",
    help="Expansões não uniformes (β₀,β₁) de números reais em aritmética racional exata",
    add_completion=False,
    no_args_is_help=True,
    rich_markup_mode="rich",
    cls=UsageExitGroup,
)

# Diagnósticos em stderr; resultados via typer.echo em stdout
console = Console(stderr=True)

Beta0Option = Annotated[Optional[str], typer.Option("--beta0", help="β₀ como 'p/q' ou decimal finito")]
Beta1Option = Annotated[Optional[str], typer.Option("--beta1", help="β₁ como 'p/q' ou decimal finito")]
PointOption = Annotated[str, typer.Option("--x", help="Ponto x como 'p/q' ou decimal finito")]


# ============= RENDERIZAÇÃO =============

def _scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    return str(value)


def _flatten(payload: dict, parent: str = "") -> list[tuple[str, str]]:
    """Pares (chave, valor) com chaves aninhadas unidas por ponto."""
    pairs: list[tuple[str, str]] = []
    for key, value in payload.items():
        name = f"{parent}.{key}" if parent else key
        if isinstance(value, dict):
            pairs.extend(_flatten(value, name))
        elif isinstance(value, list):
            pairs.append((name, ", ".join(_scalar(item) for item in value)))
        else:
            pairs.append((name, _scalar(value)))
    return pairs


def render(
    payload: dict,
    output_format: OutputFormat,
    rows_key: str | None = None,
    rows: list[dict] | None = None,
    labels: dict[str, str] | None = None,
    text_exclude: tuple[str, ...] = (),
) -> str:
    """
    Renderiza um resultado de forma determinística.

    Args:
        payload: Resultado em modo JSON (racionais como "p/q")
        output_format: text, json ou csv
        rows_key: Chave do payload que contém a tabela principal
        rows: Linhas planas da tabela (uma linha CSV por item)
        labels: Rótulos alternativos para o modo texto
        text_exclude: Chaves omitidas no modo texto

    Returns:
        Texto sem quebra de linha final
    """
    if output_format is OutputFormat.JSON:
        return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)

    scalars = {key: value for key, value in payload.items() if key != rows_key}

    if output_format is OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        if rows is not None:
            columns = list(rows[0]) if rows else []
            writer.writerow(columns)
            for row in rows:
                writer.writerow([_scalar(row[column]) for column in columns])
        else:
            writer.writerow(["key", "value"])
            writer.writerows(_flatten(scalars))
        return buffer.getvalue().rstrip("\n")

    labels = labels or {}
    visible = {key: value for key, value in scalars.items() if key not in text_exclude}
    lines = [f"{labels.get(key, key)}: {value}" for key, value in _flatten(visible)]
    if rows_key is not None and rows:
        lines.append(f"{rows_key}:")
        lines.extend("  " + "  ".join(_scalar(value) for value in row.values()) for row in rows)
    return "\n".join(lines)


# ============= EXECUÇÃO =============

def _run_config(ctx: typer.Context, command: Command, beta0: str | None, beta1: str | None, **params) -> RunConfig:
    """Junta as opções globais às do subcomando; o subcomando tem precedência."""
    options = ctx.obj or {}
    beta0 = beta0 if beta0 is not None else options.get("beta0")
    beta1 = beta1 if beta1 is not None else options.get("beta1")
    if beta0 is None or beta1 is None:
        raise click.UsageError("--beta0 e --beta1 são obrigatórios", ctx)

    try:
        return RunConfig(
            beta0=beta0,
            beta1=beta1,
            command=command,
            output_format=options.get("output_format", OutputFormat.TEXT),
            seed=options.get("seed", settings.DEFAULT_SEED),
            workers=options.get("workers", settings.WORKERS),
            params={key: value for key, value in params.items() if value is not None},
        )
    except ValidationError as exc:
        _fail(_validation_message(exc), PARSE_EXIT_CODE)


def _validation_message(exc: ValidationError) -> str:
    return "; ".join(
        f"{'.'.join(str(part) for part in error['loc']) or 'entrada'}: {error['msg']}" for error in exc.errors()
    )


def _fail(message: str, exit_code: int) -> NoReturn:
    console.print(f"[bold red]Erro:[/bold red] {escape(message)}", highlight=False, soft_wrap=True)
    raise typer.Exit(code=exit_code)


def _execute(
    config: RunConfig,
    request_cls: type[BaseModel],
    handler: Callable[[BaseModel], BaseModel],
    **render_options,
) -> None:
    """
    Valida a requisição, executa o controller e imprime o resultado.

    Erros de leitura saem com código 1 e erros de domínio com código 2,
    sempre com a mensagem em stderr.
    """
    try:
        request = request_cls(**config.request_fields())
    except ValidationError as exc:
        _fail(_validation_message(exc), PARSE_EXIT_CODE)

    try:
        result = handler(request)
    except ExpansionError as exc:
        logger.debug(f"{config.command.value} falhou: {type(exc).__name__}")
        _fail(str(exc), exc.exit_code)

    payload = result.model_dump(mode="json", exclude_none=True)
    rows_builder = render_options.pop("rows_builder", None)
    rows = rows_builder(payload) if rows_builder else None
    typer.echo(render(payload, config.output_format, rows=rows, **render_options))


# ============= COMANDOS =============

@app.callback()
def configure(
    ctx: typer.Context,
    beta0: Beta0Option = None,
    beta1: Beta1Option = None,
    output_format: Annotated[OutputFormat, typer.Option("--format", "-f", help="Formato de saída")] = OutputFormat.TEXT,
    seed: Annotated[int, typer.Option("--seed", min=0, max=2**64 - 1, help="Semente da amostragem")] = settings.DEFAULT_SEED,
    workers: Annotated[int, typer.Option("--workers", min=1, help="Processos para enumeração e cobertura")] = settings.WORKERS,
    log_level: Annotated[Optional[str], typer.Option("--log-level", help="Nível de log em stderr")] = None,
):
    """
    Opções globais: par de bases, formato, semente e paralelismo.
    """
    setup_logging(log_level)
    ctx.obj = {
        "beta0": beta0,
        "beta1": beta1,
        "output_format": output_format,
        "seed": seed,
        "workers": workers,
    }


@app.command()
def expand(
    ctx: typer.Context,
    x: PointOption,
    algorithm: Annotated[AlgorithmVariant, typer.Option("--algorithm", "-a", help="Algoritmo de dígitos")] = AlgorithmVariant.GREEDY,
    alpha: Annotated[Optional[str], typer.Option("--alpha", help="Limiar α do algoritmo intermediário")] = None,
    depth: Annotated[int, typer.Option("--depth", "-n", min=1, help="Número de dígitos")] = 20,
    beta0: Beta0Option = None,
    beta1: Beta1Option = None,
):
    """Dígitos, órbita e resíduo de reconstrução de x."""
    config = _run_config(ctx, Command.EXPAND, beta0, beta1, x=x, algorithm=algorithm, alpha=alpha, depth=depth)
    _execute(config, ExpandRequest, ExpansionController.expand)


def _prefix_rows(payload: dict) -> list[dict] | None:
    if "prefixes" not in payload:
        return None
    return [
        {"digits": "".join(str(digit) for digit in entry["digits"]), "pullback": entry["pullback"]}
        for entry in payload.get("prefixes", [])
    ]


@app.command("enumerate")
def enumerate_(
    ctx: typer.Context,
    x: PointOption,
    depth: Annotated[int, typer.Option("--depth", "-n", min=0, help="Comprimento dos prefixos")] = 8,
    count_only: Annotated[bool, typer.Option("--count-only", help="Apenas contar (até MAX_COUNT_DEPTH)")] = False,
    beta0: Beta0Option = None,
    beta1: Beta1Option = None,
):
    """Todos os prefixos de expansões de x em ordem lexicográfica, com a contagem."""
    config = _run_config(ctx, Command.ENUMERATE, beta0, beta1, x=x, depth=depth, listing=not count_only)
    _execute(
        config,
        EnumerateRequest,
        lambda request: ExpansionController.enumerate(request, workers=config.workers),
        rows_key="prefixes",
        rows_builder=_prefix_rows,
    )


@app.command()
def coverage(
    ctx: typer.Context,
    depth: Annotated[int, typer.Option("--depth", "-n", min=1, help="Comprimento das palavras")] = 10,
    beta0: Beta0Option = None,
    beta1: Beta1Option = None,
):
    """Verifica que os 2ⁿ cilindros cobrem I."""
    config = _run_config(ctx, Command.COVERAGE, beta0, beta1, depth=depth)
    _execute(config, CoverageRequest, lambda request: ExpansionController.coverage(request, workers=config.workers))


@app.command()
def unique(
    ctx: typer.Context,
    sequence: Annotated[Optional[str], typer.Option("--sequence", "-s", help="Sequência 'u(v)', ex: 101(01)")] = None,
    zeros: Annotated[Optional[int], typer.Option("--zeros", min=0, help="k da família 0^k(01)^ω")] = None,
    pattern: Annotated[Optional[str], typer.Option("--pattern", help="Palavra sobre {A,B}: A=01, B=10")] = None,
    shift: Annotated[int, typer.Option("--shift", min=0, max=1, help="Deslocamento do elemento de V")] = 0,
    beta0: Beta0Option = None,
    beta1: Beta1Option = None,
):
    """Decide se a expansão de π(s) é única."""
    config = _run_config(
        ctx, Command.UNIQUE, beta0, beta1, sequence=sequence, zeros=zeros, pattern=pattern, shift=shift
    )
    _execute(config, UniqueRequest, AnalysisController.unique, text_exclude=("sequence_json",))


@app.command()
def regime(
    ctx: typer.Context,
    beta0: Beta0Option = None,
    beta1: Beta1Option = None,
):
    """Desigualdades dos teoremas avaliadas exatamente."""
    config = _run_config(ctx, Command.REGIME, beta0, beta1)
    _execute(config, BasePairRequest, AnalysisController.regime)


@app.command("lambda")
def lambda_(
    ctx: typer.Context,
    n: Annotated[int, typer.Option("--n", min=0, help="Índice de Λₙ")] = 5,
    bridge: Annotated[str, typer.Option("--bridge", help="Termo central da recursão: initial ou previous")] = "initial",
    beta0: Beta0Option = None,
    beta1: Beta1Option = None,
):
    """Λₙ pela recursão e pela forma fechada."""
    config = _run_config(ctx, Command.LAMBDA, beta0, beta1, n=n, bridge=bridge)
    _execute(
        config,
        LambdaRequest,
        AnalysisController.lambda_interval,
        labels={"equal": "recursion == closed form"},
    )


def _leaf_rows(payload: dict) -> list[dict]:
    return [{"leaf": index, "prefix": word} for index, word in enumerate(payload["leaves"])]


@app.command()
def branch(
    ctx: typer.Context,
    x: PointOption,
    splits: Annotated[int, typer.Option("--splits", min=1, help="Ramificações sucessivas")] = 3,
    beta0: Beta0Option = None,
    beta1: Beta1Option = None,
):
    """Árvore de ramificação com 2^splits prefixos distintos de x."""
    config = _run_config(ctx, Command.BRANCH, beta0, beta1, x=x, splits=splits)
    _execute(
        config,
        BranchRequest,
        AnalysisController.branch,
        rows_key="leaves",
        rows_builder=_leaf_rows,
        text_exclude=("tree",),
    )


@app.command()
def dimension(
    ctx: typer.Context,
    depth: Annotated[int, typer.Option("--depth", "-n", min=1, help="Profundidade da estimativa por caixas")] = 20,
    disjoint_depth: Annotated[int, typer.Option("--disjoint-depth", min=0, help="Profundidade da disjunção exata")] = 10,
    grid_depth: Annotated[int, typer.Option("--grid-depth", min=4, help="Profundidade da contagem em grade")] = 14,
    beta0: Beta0Option = None,
    beta1: Beta1Option = None,
):
    """Dimensão de Hausdorff do atrator das expansões únicas."""
    config = _run_config(
        ctx, Command.DIMENSION, beta0, beta1, depth=depth, disjoint_depth=disjoint_depth, grid_depth=grid_depth
    )
    _execute(config, DimensionRequest, AnalysisController.dimension)


def _sample_rows(payload: dict) -> list[dict]:
    return [{"x": point, "count": count} for point, count in zip(payload["points"], payload["counts"])]


@app.command()
def survey(
    ctx: typer.Context,
    samples: Annotated[int, typer.Option("--samples", min=1, help="Número de pontos sorteados")] = 20,
    depth: Annotated[int, typer.Option("--depth", "-n", min=0, help="Comprimento dos prefixos contados")] = 12,
    threshold: Annotated[int, typer.Option("--threshold", min=0, help="Limiar da fração reportada")] = 1,
    beta0: Beta0Option = None,
    beta1: Beta1Option = None,
):
    """Estatísticas das contagens de expansões em pontos sorteados com a semente global."""
    options = ctx.obj or {}
    config = _run_config(
        ctx,
        Command.SURVEY,
        beta0,
        beta1,
        samples=samples,
        depth=depth,
        threshold=threshold,
        seed=options.get("seed", settings.DEFAULT_SEED),
    )
    _execute(
        config,
        SurveyRequest,
        AnalysisController.survey,
        rows_builder=_sample_rows,
        text_exclude=("points", "counts"),
    )


def main() -> None:
    app()


if __name__ == "__main__":
    main()
