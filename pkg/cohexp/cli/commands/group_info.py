from typing import Optional

import click

from cohexp.cli.commands._common import cap_option, console, emit_json, format_option, handle_errors
from cohexp.cli.core.parsers import parse_algebra_spec
from cohexp.cli.utils import key_value_table
from cohexp.bracket import subalgebras_of_dim
from cohexp.groups import BracketGroup, closure
from cohexp.lattice import frattini


@click.command("group-info")
@click.option(
    "--algebra",
    "algebra_spec",
    default="sl2",
    show_default=True,
    help="sl2, zero:n, or a structure-constants file.",
)
@click.option("--p", "p", type=int, default=None, help="Prime for the builtin algebras.")
@format_option
@cap_option
@handle_errors
def group_info_command(
    algebra_spec: str, p: Optional[int], output_format: str, cap: Optional[int]
) -> None:
    """Order, exponent, centre and Frattini subgroup of the group of a bracket algebra."""
    algebra = parse_algebra_spec(algebra_spec, p)
    validation = algebra.validate()
    group = BracketGroup(algebra, cap=cap)
    whole = closure(group, group.generators(), cap=cap)
    info = {
        "algebra": list(algebra.names),
        "p": algebra.field.p,
        "dim": algebra.dim,
        "alternating": validation.alternating,
        "jacobi": validation.jacobi,
        "order": group.order_of_group(cross_check=True),
        "exponent": group.group_exponent(),
        "center_order": group.center().order,
        "frattini_order": frattini(whole, cap=cap).order,
        "subalgebras_dim2": len(subalgebras_of_dim(algebra, 2, cap=cap)) if algebra.dim >= 2 else 0,
    }
    if output_format == "json":
        emit_json(info)
        return
    console.print(key_value_table(repr(group), info))
