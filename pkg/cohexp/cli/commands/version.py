import platform

import click
import numpy as np
from rich.tree import Tree

from cohexp.cli.commands._common import console
from cohexp.fpla.field import MAX_CHARACTERISTIC
from cohexp.verify import REDUCED_PRIMES, SUPPORTED_PRIMES
from cohexp.version import __version__


@click.command("version")
@click.option(
    "-s",
    "--short",
    "short",
    default=False,
    is_flag=True,
    required=False,
    help="Display only the short version number.",
)
def version_command(short: bool) -> None:
    """
    Displays the cohexp-kit version with its numeric runtime and prime ranges.
    """
    if short:
        console.print(__version__)
        return
    full = [p for p in SUPPORTED_PRIMES if p not in REDUCED_PRIMES]
    tree = Tree(f"[bold cyan]cohexp-kit[/bold cyan] [bold green]{__version__}[/bold green]")
    tree.add(f"python {platform.python_version()}, numpy {np.__version__}")
    tree.add(f"fields: odd primes 3..{MAX_CHARACTERISTIC}")
    tree.add(
        "verify-counterexample: p in "
        + ", ".join(map(str, full))
        + " (reduced: "
        + ", ".join(map(str, REDUCED_PRIMES))
        + ")"
    )
    console.print(tree)
