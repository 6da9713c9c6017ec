"""wpa check"""

from pathlib import Path

import typer
from returns.result import Failure

from wpa_core.commands import utils
from wpa_core.oracle import Agreement, Mismatch, Skipped, compare
from wpa_core.solver import solve


def execute(file: Path, config: Path | None, box: int | None, quantifier_box: int | None):
    cfg, _ = utils.load_config_or_exit(config)
    box = cfg.check.box if box is None else box
    quantifier_box = cfg.check.quantifier_box if quantifier_box is None else quantifier_box

    result = solve(utils.read_formula_or_exit(file), cfg.solver)
    if isinstance(result, Failure):
        utils.fail(result.failure())
    solution = result.unwrap()
    typer.echo(f'[CHECK] Solver verdict: {"sat" if solution.satisfiable else "unsat"}')

    outcome = compare(
        solution.formula,
        solution.chain,
        solution.variables,
        box,
        quantifier_box,
        cfg.check.max_quantifier_box,
    )
    match outcome:
        case Skipped(reason):
            typer.echo(f'[SKIPPED] {reason}')
        case Mismatch(point, solver, oracle):
            typer.echo(
                f'[ERROR] Mismatch at {utils.format_point(point, solution.variables)}: '
                f'solver says {solver}, oracle says {oracle}',
                err=True,
            )
            raise typer.Exit(code=utils.EXIT_MISMATCH)
        case Agreement(points):
            typer.echo(f'\n[SUCCESS] OK: {points} point(s) of [-{box}, {box}]^{solution.chain.dim} agree')
