"""CLI application for wpa."""

from pathlib import Path
from typing import Annotated

import typer

from wpa_core.commands import (
    bench as bench_executor,
    check as check_executor,
    decide as decide_executor,
    eval as eval_executor,
    gen as gen_executor,
    utils,
)

app = typer.Typer(no_args_is_help=True)

FormulaFile = Annotated[
    Path,
    typer.Argument(
        help='Formula file (UTF-8).',
        exists=True,
        dir_okay=False,
        resolve_path=True,
    ),
]
ConfigOption = Annotated[
    Path | None,
    typer.Option(
        '-c',
        '--config',
        help='Path to config file.',
        exists=True,
        dir_okay=False,
        resolve_path=True,
    ),
]
MaxNegOption = Annotated[
    int | None,
    typer.Option(
        '-k',
        '--max-neg',
        min=0,
        help='Refuse formulas with more negations than this after desugaring.',
    ),
]
VerboseOption = Annotated[
    bool,
    typer.Option(
        '-V',
        '--verbose',
        help='Enable verbose output.',
    ),
]
HelpOption = Annotated[
    bool,
    typer.Option(
        '-h',
        '--help',
        callback=utils.help_callback,
        is_eager=True,
        help='Show this message and exit.',
    ),
]


@app.callback()
def main(
    _version: Annotated[
        bool,
        typer.Option(
            '-v',
            '--version',
            callback=utils.version_callback,
            is_eager=True,
            help='Show version and exit.',
        ),
    ] = False,
    _help: HelpOption = False,
) -> None:
    """wpa: decide weak Presburger arithmetic formulas with few negations."""


@app.command()
def decide(
    file: FormulaFile,
    max_neg: MaxNegOption = None,
    witness: Annotated[bool, typer.Option('-w', '--witness', help='Print a satisfying point.')] = False,
    json_out: Annotated[
        str | None,
        typer.Option('--json', help="Write the solution set as JSON to this file ('-' for stdout)."),
    ] = None,
    config: ConfigOption = None,
    verbose: VerboseOption = False,
    _help: HelpOption = False,
) -> None:
    """Decide satisfiability of a formula."""
    utils.setup_logging(verbose)
    decide_executor.execute(file, config, max_neg, witness, json_out)


@app.command('eval')
def eval_(
    file: FormulaFile,
    max_neg: MaxNegOption = None,
    config: ConfigOption = None,
    verbose: VerboseOption = False,
    _help: HelpOption = False,
) -> None:
    """Print the solution set of a formula as JSON."""
    utils.setup_logging(verbose)
    eval_executor.execute(file, config, max_neg)


@app.command()
def check(
    file: FormulaFile,
    box: Annotated[int | None, typer.Option('-b', '--box', min=0, help='Radius of the checked box.')] = None,
    quantifier_box: Annotated[
        int | None,
        typer.Option('-q', '--quantifier-box', min=0, help='Range of quantified variables at every nesting level of the oracle.'),
    ] = None,
    config: ConfigOption = None,
    verbose: VerboseOption = False,
    _help: HelpOption = False,
) -> None:
    """Cross-check the solver against brute-force evaluation on a box."""
    utils.setup_logging(verbose)
    check_executor.execute(file, config, box, quantifier_box)


@app.command('gen-noncong')
def gen_noncong(
    constraints: Annotated[str, typer.Argument(help='Comma-separated modulus:residue pairs, e.g. 2:0,3:1.')],
    _help: HelpOption = False,
) -> None:
    """Print a system of non-congruences as a formula."""
    gen_executor.execute(constraints)


@app.command()
def bench(
    suite: Annotated[
        list[str] | None,
        typer.Option('-s', '--suite', help='Suite to run; repeat for several. Defaults to all.'),
    ] = None,
    report: Annotated[
        Path | None,
        typer.Option('-r', '--report', dir_okay=False, help='Write the per-instance table as CSV.'),
    ] = None,
    config: ConfigOption = None,
    verbose: VerboseOption = False,
    _help: HelpOption = False,
) -> None:
    """Run benchmark suites and report timings."""
    utils.setup_logging(verbose)
    bench_executor.execute(config, suite, report)
