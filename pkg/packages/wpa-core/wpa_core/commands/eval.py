"""wpa eval"""

from pathlib import Path

from returns.result import Failure

from wpa_core.commands import utils
from wpa_core.solver import solution_set_json, solve


def execute(file: Path, config: Path | None, max_neg: int | None):
    cfg, _ = utils.load_config_or_exit(config)
    options = cfg.solver if max_neg is None else cfg.solver.model_copy(update={'max_neg': max_neg})

    result = solve(utils.read_formula_or_exit(file), options)
    if isinstance(result, Failure):
        utils.fail(result.failure())
    utils.write_output(solution_set_json(result.unwrap().chain), '-')
