from typing import Optional

import click

from cohexp.cli.commands._common import (
    EXIT_CHECK_FAILED,
    cap_option,
    console,
    emit_json,
    err_console,
    format_option,
    handle_errors,
)
from cohexp.cli.utils import verdict_panel, verification_table
from cohexp.verify import CounterexamplePipeline


@click.command("verify-counterexample")
@click.option("--p", "p", type=int, required=True, help="Odd prime: 3, 5 or 7 (7 runs a reduced set).")
@format_option
@click.option("--threads", type=click.IntRange(min=1), default=None, help="Worker threads for sweeps.")
@click.option("--seed", type=int, default=None, help="Seed for sampled sweeps.")
@cap_option
@handle_errors
def verify_command(
    p: int,
    output_format: str,
    threads: Optional[int],
    seed: Optional[int],
    cap: Optional[int],
) -> None:
    """
    Check, for G(sl2, F_p), that the index-p^2 subgroups meet trivially while
    the group is not elementary abelian.
    """
    pipeline = CounterexamplePipeline(p, threads=threads, seed=seed, cap=cap)
    report = pipeline.run()
    if output_format == "json":
        emit_json(report.payload())
    else:
        console.print(verification_table(report))
        console.print(verdict_panel(report))
    if not report.passed:
        failure = report.first_failure
        err_console.print(f"[bold red]check failed:[/bold red] {failure.check_id if failure else '?'}")
        raise click.exceptions.Exit(EXIT_CHECK_FAILED)
