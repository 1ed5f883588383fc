#!/usr/bin/env python3
"""
grlw CLI Tool
"""

import logging
import platform
import sys
from typing import Any, List, Optional, Sequence

try:
    from rich.console import Console
    from rich.panel import Panel
    from rich.table import Table
    RICH_AVAILABLE = True
except ImportError:
    RICH_AVAILABLE = False

from . import __version__
from .environment import OUT_DIR_VARIABLE, default_output_dir, load_environment
from .exceptions import ConfigurationError, GrlwError, OutputError
from .experiments.config import (
    available_presets,
    build_parser,
    config_from_namespace,
    load_preset,
    parse_arguments,
)
from .experiments.output import format_value
from .experiments.runner import ExperimentResult, run_experiment
from .utils.logger import setup_logger

console = Console() if RICH_AVAILABLE else None

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2

# Table rows echoed to the console; the CSV always holds all of them
MAX_ECHO_ROWS = 12


def show_banner():
    """Show the grlw banner"""
    title = f"grlw v{__version__}"
    subtitle = "B-spline Petrov-Galerkin solver for the generalized regularized long wave equation"
    if RICH_AVAILABLE:
        console.print(Panel.fit(
            f"[bold white]{subtitle}[/bold white]",
            title=f"[bold blue]{title}[/bold blue]",
            border_style="blue"
        ))
    else:
        print(f"{title} - {subtitle}")


def _module_version(name: str) -> str:
    try:
        module = __import__(name)
        return getattr(module, "__version__", "Installed")
    except ImportError:
        return "Not found"


def show_system_info():
    """Show versions and the resolved output directory"""
    rows = [
        ("grlw Version", __version__),
        ("Python Version", sys.version.split()[0]),
        ("Platform", platform.platform()),
        ("numpy", _module_version("numpy")),
        ("pydantic", _module_version("pydantic")),
        ("rich", _module_version("rich")),
        (f"Output dir (${OUT_DIR_VARIABLE})", str(default_output_dir())),
    ]
    if RICH_AVAILABLE:
        table = Table(show_header=False, box=None, padding=(0, 2))
        table.add_column("Property", style="bold cyan")
        table.add_column("Value", style="white")
        for name, value in rows:
            table.add_row(name, value)
        console.print(Panel(table, title="[bold blue]System Information[/bold blue]", border_style="blue"))
    else:
        print("System Information:")
        for name, value in rows:
            print(f"  {name:<28} {value}")


def show_presets():
    """List shipped presets with their problem and description"""
    entries = []
    for name in available_presets():
        values = load_preset(name)
        entries.append((name, values.get("problem", "")))
    if RICH_AVAILABLE:
        table = Table(show_header=True, box=None, padding=(0, 2))
        table.add_column("Preset", style="bold")
        table.add_column("Problem", style="cyan")
        for name, problem in entries:
            table.add_row(name, problem)
        console.print(Panel(table, title="[bold green]Presets[/bold green]", border_style="green"))
    else:
        print("Presets:")
        for name, problem in entries:
            print(f"  {name:<18} {problem}")


def _columns(rows: List[dict]) -> List[str]:
    columns: List[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    return columns


def _summary_value(value: Any) -> str:
    if isinstance(value, dict):
        return ", ".join(f"{k}={format_value(v)}" for k, v in value.items() if v is not None)
    if isinstance(value, (list, tuple)):
        return ", ".join(format_value(v) for v in value)
    return format_value(value)


def show_result(result: ExperimentResult):
    """Print the main table (truncated), summary values and files written"""
    rows = result.rows[:MAX_ECHO_ROWS]
    columns = _columns(rows)

    if RICH_AVAILABLE:
        if rows:
            table = Table(show_header=True, padding=(0, 1))
            for column in columns:
                table.add_column(column, justify="right")
            for row in rows:
                table.add_row(*(format_value(row.get(c)) for c in columns))
            console.print(Panel(table, title=f"[bold blue]{result.problem}[/bold blue]", border_style="blue"))
        for key, value in result.summary.items():
            console.print(f"[bold cyan]{key}[/bold cyan]: {_summary_value(value)}")
        for path in result.files:
            console.print(f"[dim]wrote {path}[/dim]")
        if result.failed:
            console.print(f"[bold red]Solver failure:[/bold red] {result.error}")
    else:
        if rows:
            print(",".join(columns))
            for row in rows:
                print(",".join(format_value(row.get(c)) for c in columns))
        for key, value in result.summary.items():
            print(f"{key}: {_summary_value(value)}")
        for path in result.files:
            print(f"wrote {path}")
        if result.failed:
            print(f"Solver failure: {result.error}")

    if len(result.rows) > MAX_ECHO_ROWS:
        print(f"... {len(result.rows) - MAX_ECHO_ROWS} more rows in the CSV")


def _error(message: str):
    print(f"grlw: error: {message}", file=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI entry point, returns the process exit code"""
    load_environment()

    try:
        args = parse_arguments(argv)
    except ConfigurationError as e:
        _error(str(e))
        return EXIT_USAGE

    setup_logger(
        level=getattr(args, "log_level", "WARNING"),
        log_file=getattr(args, "log_file", None)
    )
    logger = logging.getLogger("grlw.cli")

    if not getattr(args, "no_banner", False):
        show_banner()

    if args.command is None:
        build_parser().print_help()
        return EXIT_OK
    if args.command == "info":
        show_system_info()
        return EXIT_OK
    if args.command == "presets":
        show_presets()
        return EXIT_OK

    try:
        cfg = config_from_namespace(args)
    except ConfigurationError as e:
        _error(f"{e} (key: {e.key})" if e.key else str(e))
        return EXIT_USAGE

    try:
        result = run_experiment(cfg)
    except OutputError as e:
        logger.error(f"Output failed: {e}")
        _error(str(e))
        return EXIT_FAILURE
    except GrlwError as e:
        logger.error(f"Experiment failed: {e}")
        _error(str(e))
        return EXIT_FAILURE

    show_result(result)
    return EXIT_FAILURE if result.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
