import logging
from pathlib import Path
from typing import NoReturn

import typer
from returns.result import Failure

from wpa_core import __version__
from wpa_core.config import ConfigInfo, WpaConfig, resolve_config
from wpa_core.frontend import FormulaError, VariableMap
from wpa_core.generators import GeneratorError
from wpa_core.intlin import Vector
from wpa_core.solver import BudgetExceededError, SearchExhaustedError

EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4
EXIT_SEARCH = 5


def setup_logging(verbose: bool = False) -> None:
    """Configure logging for CLI.

    Args:
        verbose: If True, set log level to DEBUG; otherwise INFO.
    """
    level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(
        format='%(levelname)s: %(message)s',
        level=level,
    )


def version_callback(value: bool) -> None:
    """Display version and exit.

    Args:
        value: If True, display version and exit.
    """
    if value:
        typer.echo(f'wpa version {__version__}')

        # Display bundled suites version if available
        try:
            import wpa_suites

            typer.echo(f'wpa-suites version {wpa_suites.__version__}')
        except (ImportError, AttributeError):
            pass

        raise typer.Exit()


def help_callback(ctx: typer.Context, value: bool) -> None:
    """Display help and exit.

    Args:
        ctx: Typer context.
        value: If True, display help and exit.
    """
    if value:
        typer.echo(ctx.get_help())
        raise typer.Exit()


def load_config_or_exit(config: Path | None) -> tuple[WpaConfig, ConfigInfo]:
    result = resolve_config(config)
    if isinstance(result, Failure):
        typer.echo(str(result.failure()), err=True)
        raise typer.Exit(code=EXIT_USAGE)
    return result.unwrap()


def read_formula_or_exit(file: Path) -> str:
    try:
        return file.read_text(encoding='utf-8')
    except (OSError, UnicodeDecodeError) as e:
        typer.echo(f'[ERROR] Cannot read {file}: {e}', err=True)
        raise typer.Exit(code=EXIT_USAGE)


def exit_code_for(error: Exception) -> int:
    match error:
        case FormulaError():
            return EXIT_PARSE
        case BudgetExceededError():
            return EXIT_BUDGET
        case SearchExhaustedError():
            return EXIT_SEARCH
        case GeneratorError():
            return EXIT_USAGE
    return EXIT_USAGE


def fail(error: Exception) -> NoReturn:
    typer.echo(f'[ERROR] {error}', err=True)
    raise typer.Exit(code=exit_code_for(error))


def format_point(point: Vector, variables: VariableMap) -> str:
    if not point:
        return '()'
    return ', '.join(f'{variables.name(i)}={v}' for i, v in enumerate(point, 1))


def write_output(text: str, destination: str) -> None:
    """Write text to a file, or to stdout when destination is '-'."""
    if destination == '-':
        typer.echo(text)
        return
    Path(destination).write_text(text + '\n', encoding='utf-8')
