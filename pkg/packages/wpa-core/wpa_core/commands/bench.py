"""wpa bench"""

import logging
import time
from pathlib import Path

import polars as pl
import typer
from returns.result import Failure

from wpa_core.commands import utils
from wpa_core.config import SolverConfig
from wpa_core.loader import PluginLoadError, get_suites, load_suites
from wpa_core.plugin import BenchInstance
from wpa_core.solver import solve

logger = logging.getLogger(__name__)

# bound on t(2n)/t(n) for fixed-weight instances
MAX_SCALING_RATIO = 16

REPORT_SCHEMA = {
    'suite': pl.String,
    'instance': pl.String,
    'size': pl.Int64,
    'weight': pl.Int64,
    'verdict': pl.String,
    'expected': pl.String,
    'chain_length': pl.Int64,
    'seconds': pl.Float64,
}


def _verdict(value: bool | None) -> str | None:
    if value is None:
        return None
    return 'sat' if value else 'unsat'


def run_instance(suite: str, instance: BenchInstance, options: SolverConfig) -> dict:
    start = time.perf_counter()
    result = solve(instance.text, options)
    seconds = time.perf_counter() - start
    row = {
        'suite': suite,
        'instance': instance.name,
        'size': instance.size,
        'weight': None,
        'verdict': 'error',
        'expected': _verdict(instance.expected),
        'chain_length': None,
        'seconds': seconds,
    }
    if isinstance(result, Failure):
        logger.error(f'{suite}/{instance.name}: {result.failure()}')
        return row
    solution = result.unwrap()
    row |= {
        'weight': solution.weight,
        'verdict': _verdict(solution.satisfiable),
        'chain_length': len(solution.chain.links),
    }
    return row


def scaling_ratios(report: pl.DataFrame) -> pl.DataFrame:
    """Running-time ratio t(2n)/t(n) between consecutive instances whose size doubles."""
    return (
        report.sort('suite', 'size')
        .with_columns(
            pl.col('size').shift(1).over('suite').alias('previous_size'),
            pl.col('seconds').shift(1).over('suite').alias('previous_seconds'),
        )
        .filter(pl.col('size') == 2 * pl.col('previous_size'))
        .select('suite', 'size', (pl.col('seconds') / pl.col('previous_seconds')).alias('ratio'))
    )


def mismatches(report: pl.DataFrame) -> pl.DataFrame:
    return report.filter(pl.col('expected').is_not_null() & (pl.col('verdict') != pl.col('expected')))


def execute(config: Path | None, suite_names: list[str] | None, report_path: Path | None):
    cfg, info = utils.load_config_or_exit(config)

    try:
        pm = load_suites(cfg, info.file)
    except PluginLoadError as e:
        typer.echo(str(e), err=True)
        raise typer.Exit(code=utils.EXIT_USAGE)

    suites = get_suites(pm)
    if suite_names:
        known = {s.name() for s in suites}
        unknown = [n for n in suite_names if n not in known]
        if unknown:
            typer.echo(f'[ERROR] Unknown suite(s): {", ".join(unknown)}', err=True)
            raise typer.Exit(code=utils.EXIT_USAGE)
        suites = [s for s in suites if s.name() in suite_names]

    work = [(suite.name(), instance) for suite in suites for instance in suite.instances()]
    typer.echo(f'[BENCH] {len(work)} instance(s) from {len(suites)} suite(s)')

    rows = []
    for i, (name, instance) in enumerate(work, 1):
        logger.info(f'  [{i}/{len(work)}] {name}/{instance.name}')
        rows.append(run_instance(name, instance, cfg.solver))

    report = pl.DataFrame(rows, schema=REPORT_SCHEMA)
    typer.echo(report)

    ratios = scaling_ratios(report)
    for suite, size, ratio in ratios.iter_rows():
        if ratio > MAX_SCALING_RATIO:
            logger.warning(f'{suite}: t({size})/t({size // 2}) = {ratio:.2f} exceeds {MAX_SCALING_RATIO}')
        else:
            logger.info(f'{suite}: t({size})/t({size // 2}) = {ratio:.2f}')

    if report_path is not None:
        report.write_csv(report_path)
        typer.echo(f'[BENCH] Report written to {report_path}')

    wrong = mismatches(report)
    if wrong.height:
        for suite, instance, verdict, expected in wrong.select('suite', 'instance', 'verdict', 'expected').iter_rows():
            typer.echo(f'[ERROR] {suite}/{instance}: got {verdict}, expected {expected}', err=True)
        raise typer.Exit(code=utils.EXIT_MISMATCH)

    typer.echo('\n[SUCCESS] All verdicts match')
