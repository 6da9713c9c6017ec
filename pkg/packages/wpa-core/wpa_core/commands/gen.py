"""wpa gen-noncong"""

import typer

from wpa_core.commands import utils
from wpa_core.generators import GeneratorError, noncongruence_instance, parse_constraints


def execute(constraints: str):
    try:
        text = noncongruence_instance(parse_constraints(constraints))
    except GeneratorError as e:
        utils.fail(e)
    typer.echo(text)
