import functools
import json
from typing import Any, Callable, TypeVar

import click
from loguru import logger
from rich.console import Console

from cohexp.exceptions import CapExceededError, CohexpError, ContractError

console = Console()
err_console = Console(stderr=True)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3

F = TypeVar("F", bound=Callable[..., Any])

format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="Human readable tables or canonical JSON.",
)

cap_option = click.option(
    "--cap",
    type=click.IntRange(min=1),
    default=None,
    help="Override the enumeration cap for this run.",
)


def emit_json(payload: Any) -> None:
    """Canonical JSON on stdout: sorted keys, fixed indentation."""
    click.echo(json.dumps(payload, sort_keys=True, indent=2))


def handle_errors(fn: F) -> F:
    """Map library exceptions to exit codes: contract 2, cap 3."""

    @functools.wraps(fn)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return fn(*args, **kwargs)
        except CapExceededError as e:
            err_console.print(f"[bold red]cap exceeded:[/bold red] {e}")
            raise click.exceptions.Exit(EXIT_CAP)
        except ContractError as e:
            err_console.print(f"[bold red]error:[/bold red] {e}")
            raise click.exceptions.Exit(EXIT_USAGE)
        except CohexpError as e:
            logger.exception(e)
            err_console.print(f"[bold red]failed:[/bold red] {e}")
            raise click.exceptions.Exit(EXIT_CHECK_FAILED)

    return wrapper  # type: ignore[return-value]


__all__ = [
    "EXIT_CAP",
    "EXIT_CHECK_FAILED",
    "EXIT_OK",
    "EXIT_USAGE",
    "cap_option",
    "console",
    "emit_json",
    "err_console",
    "format_option",
    "handle_errors",
]
