from typing import Optional

from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from cohexp.cohom import CohomologyReport
from cohexp.verify import CheckStatus, VerificationReport

STATUS_STYLE = {
    CheckStatus.PASS: "bold green",
    CheckStatus.FAIL: "bold red",
    CheckStatus.CITED: "bold yellow",
}


def _details(details: dict) -> str:
    return ", ".join(f"{k}={v}" for k, v in sorted(details.items()))


def verification_table(report: VerificationReport) -> Table:
    table = Table(title=f"G(sl2, F{report.p})", show_lines=False)
    table.add_column("check", style="cyan", no_wrap=True)
    table.add_column("status")
    table.add_column("claim")
    table.add_column("details", style="dim")
    for check in report.checks:
        table.add_row(
            check.check_id,
            Text(check.status.value.upper(), style=STATUS_STYLE[check.status]),
            check.claim,
            _details(check.details),
        )
    return table


def verdict_panel(report: VerificationReport) -> Panel:
    style = "green" if report.passed else "red"
    return Panel("\n".join(report.verdict), title="verdict", border_style=style)


def cohomology_table(report: CohomologyReport, e_low: Optional[int] = None) -> Table:
    title = f"H^*({report.name}; Z)"
    if report.group_order is not None:
        title += f", |G| = {report.group_order}"
    table = Table(title=title)
    table.add_column("n", justify="right")
    table.add_column("H^n")
    table.add_column("divisors")
    table.add_column("exponent", justify="right")
    for d in report.degrees:
        table.add_row(
            str(d.degree),
            str(d.group),
            " ".join(map(str, d.group.divisors)) or "-",
            "inf" if d.exponent is None else str(d.exponent),
        )
    if e_low is not None:
        table.caption = f"e_lowdeg({report.max_degree}) = {e_low}"
    return table


def key_value_table(title: str, rows: dict[str, object]) -> Table:
    table = Table(title=title, show_header=False)
    table.add_column("key", style="cyan")
    table.add_column("value")
    for key, value in rows.items():
        table.add_row(key, str(value))
    return table
