import click

from cohexp.cli.commands._common import console, emit_json, format_option, handle_errors
from cohexp.cli.core.parsers import parse_matrix
from cohexp.cli.utils import key_value_table
from cohexp.cohom import smith_normal_form


@click.command("snf")
@click.option("--matrix", "matrix_text", required=True, help='Rows split by ";", e.g. "2 4; 6 8".')
@format_option
@handle_errors
def snf_command(matrix_text: str, output_format: str) -> None:
    """Smith normal form D = U A V of an integer matrix (debugging aid)."""
    a = parse_matrix(matrix_text)
    form = smith_normal_form(a)
    payload = {
        "U": form.U.to_dense(),
        "D": form.D.to_dense(),
        "V": form.V.to_dense(),
        "divisors": form.divisors,
    }
    if output_format == "json":
        emit_json(payload)
        return
    console.print(key_value_table(f"SNF of a {a.rows}x{a.cols} matrix", payload))
