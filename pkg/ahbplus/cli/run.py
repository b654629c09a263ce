"""Run command."""

from pathlib import Path
from typing import List, Optional

import typer
from rich.console import Console

from ahbplus.config import SimConfig, load_config
from ahbplus.errors import AhbPlusError, InvalidSpec, UnknownFormat
from ahbplus.formatters import get_formatter
from ahbplus.logger import configure_logging, logger
from ahbplus.logging import SimLogger
from ahbplus.presets import preset_document
from ahbplus.schema import validate_report
from ahbplus.settings import settings
from ahbplus.simulation import SimResult, run_simulation
from ahbplus.types import ReportFormat

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_ASSERTION_ABORT = 2

console = Console()

_SUFFIX = {ReportFormat.STRUCT: "json", ReportFormat.TABLE: "csv"}


def resolve_config(
    config: Optional[Path],
    preset: Optional[str],
    overrides: List[str],
    seed: Optional[int],
    max_cycles: Optional[int],
) -> SimConfig:
    if (config is None) == (preset is None):
        raise InvalidSpec("pass exactly one of --config or --preset")
    source = preset_document(preset) if preset is not None else config
    return load_config(source, overrides, seed=seed, max_cycles=max_cycles)


def emit_report(result: SimResult, fmt: ReportFormat) -> str:
    """Render the report; the structured document is checked against its schema first."""
    document = result.to_report()
    validate_report(document)
    return get_formatter(fmt).format(document)


def _report_format(fmt: Optional[str], sim_config: SimConfig) -> ReportFormat:
    if fmt is None:
        return sim_config.outputs.format
    try:
        return ReportFormat(fmt)
    except ValueError:
        raise UnknownFormat(f"unknown report format '{fmt}'") from None


def make_run_logger(level: str, scopes: List[str], log_file: Optional[Path]) -> SimLogger:
    """Console run log, plus a JSON-lines file when ``log_file`` is given."""
    if log_file is None:
        return SimLogger(level=level, scopes=scopes)
    return SimLogger(level=level, scopes=scopes, output="both", format="both", log_file=str(log_file))


def _default_name(sim_config: SimConfig) -> str:
    return sim_config.name or "report"


def run(
    config: Optional[Path] = typer.Option(
        None, "--config", "-c", help="Config file (JSON)", dir_okay=False
    ),
    preset: Optional[str] = typer.Option(None, "--preset", "-p", help="Named preset instead of a file"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Override run.seed"),
    max_cycles: Optional[int] = typer.Option(None, "--max-cycles", help="Override run.max_cycles"),
    overrides: List[str] = typer.Option([], "--set", help="Override a config key: key=value"),
    trace: Optional[Path] = typer.Option(None, "--trace", help="Write the event trace (CSV) here"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Report path"),
    fmt: Optional[str] = typer.Option(None, "--format", "-f", help="struct or table"),
    log_level: Optional[str] = typer.Option(None, "--log-level", help="Run log level"),
    log_scopes: List[str] = typer.Option([], "--log-scope", help="Run log scopes (default all)"),
    log_file: Optional[Path] = typer.Option(None, "--log-file", help="Also write the run log (JSON lines) here"),
):
    """Run one simulation and write its report."""
    settings.reload()
    level = log_level or settings.log_level
    configure_logging(level)
    try:
        sim_config = resolve_config(config, preset, overrides, seed, max_cycles)
        report_format = _report_format(fmt, sim_config)
        sim_logger = make_run_logger(level, log_scopes, log_file)
    except OSError as e:
        console.print(f"[red]cannot read config: {e}[/red]")
        raise typer.Exit(EXIT_ERROR)
    except AhbPlusError as e:
        console.print(f"[red]{e}[/red]")
        raise typer.Exit(EXIT_ERROR)

    outputs = sim_config.outputs
    name = _default_name(sim_config)
    report_path = out or (
        Path(outputs.report_path)
        if outputs.report_path
        else settings.output_dir / f"{name}.{_SUFFIX[report_format]}"
    )
    trace_path = trace
    if trace_path is None and outputs.trace:
        trace_path = Path(outputs.trace_path) if outputs.trace_path else settings.output_dir / f"{name}.trace.csv"

    try:
        result = run_simulation(sim_config, sim_logger, trace_path=trace_path, overrides=overrides)
        text = emit_report(result, report_format)
        report_path.parent.mkdir(parents=True, exist_ok=True)
        report_path.write_text(text)
    except AhbPlusError as e:
        sim_logger.log_error(e)
        console.print(f"[red]{e}[/red]")
        raise typer.Exit(EXIT_ERROR)
    except OSError as e:
        logger.error(f"Failed to write outputs: {e}")
        raise typer.Exit(EXIT_ERROR)
    finally:
        sim_logger.close()

    summary = result.summary
    console.print(
        f"{summary.total_cycles} cycles, {summary.completed_transactions} transactions "
        f"({summary.terminated_reason.value}) in {result.elapsed_seconds:.2f}s, "
        f"{result.cycles_per_second:,.0f} cycles/s"
    )
    console.print(f"report: {report_path}")
    if trace_path is not None:
        console.print(f"trace: {trace_path}")
    if result.aborted:
        console.print(f"[red]assertion abort: {result.fatal_violation}[/red]")
        raise typer.Exit(EXIT_ASSERTION_ABORT)
    raise typer.Exit(EXIT_OK)
