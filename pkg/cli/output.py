import csv
import io
from typing import Any, Iterable, Optional, Sequence

import click

SIGNIFICANT_DIGITS = ".12g"


def format_value(value: Any) -> str:
    """
    Render one output cell: numbers with 12 significant digits, booleans as true/false.
    """
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float)):
        return format(float(value), SIGNIFICANT_DIGITS)
    return str(value)


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """
    Comma-separated text with a header row and LF line endings.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(value) for value in row])
    return buffer.getvalue()


def emit(text: str, output: Optional[str] = None) -> None:
    """
    Write text to the output file, or to stdout if none is given.
    """
    if output is None:
        click.echo(text, nl=False)
        return
    with open(output, "w", newline="", encoding="utf-8") as handle:
        handle.write(text)
