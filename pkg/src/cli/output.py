"""
JSONL record emission and rich summaries.
"""

import json
from typing import Any, Dict, Iterable, List, Optional, Sequence

import click
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

console = Console()
err_console = Console(stderr=True)


class RecordWriter:
    """
    Writes one JSON object per line to a file or stdout, keeping key insertion order.
    """

    def __init__(self, path: Optional[str] = None, echo: bool = True):
        self.path = path
        self.echo = echo
        self._handle = None
        self.count = 0

    def __enter__(self) -> "RecordWriter":
        if self.path is not None:
            self._handle = click.open_file(self.path, 'w')
        return self

    def __exit__(self, exc_type, exc, tb):
        if self._handle is not None:
            self._handle.close()
            self._handle = None

    def write(self, record: Dict[str, Any]):
        line = json.dumps(record, separators=(',', ':'))
        if self._handle is not None:
            self._handle.write(line + "\n")
        elif self.echo:
            click.echo(line)
        self.count += 1


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "[green]yes[/green]" if value else "[red]no[/red]"
    if value is None:
        return "[dim]-[/dim]"
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(',', ':'))
    return str(value)


def render_records(title: str, records: Sequence[Dict[str, Any]], columns: Optional[List[str]] = None,
                   limit: int = 50):
    """
    Show records as a rich table; columns default to the first record's keys.
    """
    if not records:
        console.print(f"[yellow]{title}: no records[/yellow]")
        return
    columns = columns or list(records[0].keys())
    table = Table(title=title, show_header=True, header_style="bold magenta")
    for column in columns:
        table.add_column(column)
    for record in records[:limit]:
        style = None if record.get('agree', True) else "red"
        table.add_row(*(_cell(record.get(c)) for c in columns), style=style)
    console.print(table)
    if len(records) > limit:
        console.print(f"[dim]... and {len(records) - limit} more records[/dim]")


def render_summary(title: str, summary: Dict[str, Any], red_flags: int):
    body = "\n".join(f"{key}: {_cell(value)}" for key, value in summary.items())
    colour = "red" if red_flags else "green"
    console.print(Panel(body, title=title, border_style=colour))


def count_red_flags(records: Iterable[Dict[str, Any]]) -> int:
    return sum(
        1 for r in records
        if r.get('agree') is False or r.get('verified') is False or r.get('status') == 'unresolved'
    )
