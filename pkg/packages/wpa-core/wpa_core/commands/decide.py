"""wpa decide"""

from pathlib import Path

import typer
from returns.result import Failure

from wpa_core.commands import utils
from wpa_core.solver import solution_set_json, solve


def execute(file: Path, config: Path | None, max_neg: int | None, witness: bool, json_out: str | None):
    cfg, _ = utils.load_config_or_exit(config)
    options = cfg.solver if max_neg is None else cfg.solver.model_copy(update={'max_neg': max_neg})

    result = solve(utils.read_formula_or_exit(file), options, witness=witness)
    if isinstance(result, Failure):
        utils.fail(result.failure())
    solution = result.unwrap()

    typer.echo('sat' if solution.satisfiable else 'unsat')
    if witness and solution.witness is not None:
        typer.echo(f'witness: {utils.format_point(solution.witness, solution.variables)}')
    if json_out is not None:
        utils.write_output(solution_set_json(solution.chain), json_out)
