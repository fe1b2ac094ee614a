from typing import Optional

import click

from cohexp.cli.commands._common import cap_option, console, emit_json, format_option, handle_errors
from cohexp.cli.core.parsers import parse_group_spec
from cohexp.cli.utils import cohomology_table
from cohexp.cohom import cohomology_of_group, e_lowdeg


@click.command("cohomology")
@click.option(
    "--group",
    "group_spec",
    required=True,
    help="cyclic:m, abelian:m1,m2,... or table:FILE.",
)
@click.option("--max-degree", type=click.IntRange(min=0), default=4, show_default=True)
@format_option
@click.option("--threads", type=click.IntRange(min=1), default=None, help="Worker threads for SNF.")
@cap_option
@handle_errors
def cohomology_command(
    group_spec: str,
    max_degree: int,
    output_format: str,
    threads: Optional[int],
    cap: Optional[int],
) -> None:
    """Integral cohomology H^0 .. H^N of a small finite group, with exponents."""
    spec = parse_group_spec(group_spec)
    report = cohomology_of_group(spec.target(), max_degree, cap=cap, threads=threads)
    e_low = e_lowdeg(report, max_degree)
    if output_format == "json":
        emit_json(
            {
                "group": report.name,
                "order": report.group_order,
                "max_degree": report.max_degree,
                "degrees": [
                    {
                        "degree": d.degree,
                        "free_rank": d.group.free_rank,
                        "divisors": d.group.divisors,
                        "exponent": d.exponent,
                    }
                    for d in report.degrees
                ],
                "e_lowdeg": e_low,
            }
        )
        return
    console.print(cohomology_table(report, e_low))
