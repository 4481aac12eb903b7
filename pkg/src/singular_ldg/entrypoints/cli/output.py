import csv
import sys
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import TextIO

_FLOAT_FORMAT = ".15g"


def _write_line(message: str) -> None:
    sys.stdout.write(f"{message}\n")


def _write_error(message: str) -> None:
    sys.stderr.write(f"error: {message}\n")


def _write_labeled(values: Iterable[tuple[str, object]]) -> None:
    """Print ``label: value`` lines."""
    for label, value in values:
        _write_line(f"{label}: {_format_value(value)}")


def _write_verdict(*, check: str, passed: bool, details: str) -> None:
    """Print the one-line pass/fail summary of a check."""
    _write_line(f"{check}: {'PASS' if passed else 'FAIL'} ({details})")


def _write_table(
    *,
    header: Sequence[str],
    rows: Iterable[Sequence[object]],
    path: Path | None = None,
) -> None:
    """Write a CSV table to ``path``, or to stdout when no path is given."""
    if path is None:
        _write_rows(stream=sys.stdout, header=header, rows=rows)
        return

    with path.open("w", newline="", encoding="utf-8") as stream:
        _write_rows(stream=stream, header=header, rows=rows)


def _format_value(value: object) -> str:
    """Render floats with 15 significant digits and everything else with ``str``.

    Returns:
        The rendered value.
    """
    if isinstance(value, float):
        return format(value, _FLOAT_FORMAT)

    return str(value)


def _write_rows(*, stream: TextIO, header: Sequence[str], rows: Iterable[Sequence[object]]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    writer.writerows([_format_value(value) for value in row] for row in rows)
