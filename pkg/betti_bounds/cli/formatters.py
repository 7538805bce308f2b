"""
Output Formatters
Pretty tables, JSON and CSV on stdout; structured errors on stderr
"""

import csv
import io
import json
from typing import Any, List, Sequence

import click


def to_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


def render_table(headers: Sequence[str], rows: List[Sequence[Any]]) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = []
    for index, row in enumerate(cells):
        lines.append('  '.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
        if index == 0:
            lines.append('  '.join('-' * width for width in widths))
    return '\n'.join(lines)


def render_csv(headers: Sequence[str], rows: List[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(headers)
    writer.writerows(rows)
    return buffer.getvalue().rstrip('\n')


def emit(output_format: str, payload: Any, headers: Sequence[str], rows: List[Sequence[Any]]) -> None:
    """Write one result in the requested format"""
    if output_format == 'json':
        click.echo(to_json(payload))
    elif output_format == 'csv':
        click.echo(render_csv(headers, rows))
    else:
        click.echo(render_table(headers, rows))


def emit_error(error: dict) -> None:
    click.echo(json.dumps(error, sort_keys=True, default=str), err=True)
