from typing import Optional

import click
from loguru import logger

from cohexp.cli.commands.cohomology import cohomology_command
from cohexp.cli.commands.group_info import group_info_command
from cohexp.cli.commands.snf import snf_command
from cohexp.cli.commands.subalgebras import subalgebras_command
from cohexp.cli.commands.verify import verify_command
from cohexp.cli.commands.version import version_command
from cohexp.logger import new_run_id, setup_logger
from cohexp.settings import get_settings


@click.group()
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], case_sensitive=False),
    default=None,
    help="Overrides COHEXP__LOGGER__LOG_LEVEL.",
)
@click.pass_context
def cli(ctx: click.Context, log_level: Optional[str]) -> None:
    """cohexp: cohomology exponents of small p-groups and the G(sl2) counterexample."""
    run_id = new_run_id()
    ctx.ensure_object(dict)["run_id"] = run_id
    setup_logger(log_level or get_settings().logger.log_level, run_id=run_id)
    logger.debug(f"invoked {ctx.invoked_subcommand}")


cli.add_command(verify_command)
cli.add_command(cohomology_command)
cli.add_command(group_info_command)
cli.add_command(subalgebras_command)
cli.add_command(snf_command)
cli.add_command(version_command)
