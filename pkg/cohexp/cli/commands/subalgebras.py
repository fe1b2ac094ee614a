from typing import Optional

import click
from rich.table import Table

from cohexp.cli.commands._common import cap_option, console, emit_json, format_option, handle_errors
from cohexp.cli.core.parsers import parse_algebra_spec
from cohexp.bracket import subalgebras_of_dim


@click.command("subalgebras")
@click.option("--algebra", "algebra_spec", default="sl2", show_default=True)
@click.option("--p", "p", type=int, default=None, help="Prime for the builtin algebras.")
@click.option("--dim", "k", type=click.IntRange(min=0), default=2, show_default=True)
@format_option
@cap_option
@handle_errors
def subalgebras_command(
    algebra_spec: str, p: Optional[int], k: int, output_format: str, cap: Optional[int]
) -> None:
    """List the k-dimensional subalgebras, each by its reduced basis."""
    algebra = parse_algebra_spec(algebra_spec, p)
    found = subalgebras_of_dim(algebra, k, cap=cap)
    bases = [[list(v.digits) for v in s.basis] for s in found]
    if output_format == "json":
        emit_json({"names": list(algebra.names), "dim": k, "count": len(found), "subalgebras": bases})
        return
    table = Table(title=f"{len(found)} subalgebras of dim {k} in {algebra!r}")
    table.add_column("#", justify="right")
    table.add_column("basis")
    for i, basis in enumerate(bases):
        table.add_row(str(i), "; ".join(" ".join(map(str, v)) for v in basis))
    console.print(table)
