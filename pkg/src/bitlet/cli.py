"""Command-line interface.

Subcommands: eval, compare, sweep, contour, crossover, scenario,
list-scenarios, serve. Exit codes: 0 success, 1 failed expectations or
invalid inputs, 2 usage errors.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path

import click

from . import scenarios as scenario_catalog
from . import sweep as sweep_mod
from .config import ConfigDocument, parse_config
from .engine import evaluate
from .errors import BitletError
from .quantities import GIGA, MachineConfig, WorkloadProfile, machine_to_dict, workload_to_dict
from .tables import ResultColumn, emit_table


def _load_config(path: str) -> ConfigDocument:
    try:
        return parse_config(Path(path).read_text())
    except OSError as err:
        raise click.ClickException(f"cannot read {path}: {err}") from None
    except BitletError as err:
        raise click.ClickException(f"{path}: {err}") from None


def _resolve_column(doc: ConfigDocument, fallback_label: str) -> ResultColumn:
    """Turn one config document into an evaluated column."""
    if doc.scenario is not None:
        scenario = scenario_catalog.get_scenario(doc.scenario)
        machine, workload = scenario.machine, scenario.workload
        label = scenario.id
    elif doc.workload is not None:
        machine, workload = doc.machine, doc.workload
        label = workload.label if workload.label != "workload" else fallback_label
    else:
        raise click.ClickException("config has neither a workload nor a scenario")
    result = evaluate(machine, workload)
    return ResultColumn(label=label, machine=machine, workload=workload, result=result)


def _parse_axis_flag(text: str) -> sweep_mod.AxisSpec:
    """Parse `param:min:max:scale:points`, e.g. `xbs:512:16384:log:4`."""
    parts = text.split(":")
    if len(parts) != 5:
        raise click.BadParameter(f"expected param:min:max:scale:points, got {text!r}")
    param, lo, hi, scale, points = parts
    try:
        return sweep_mod.AxisSpec(
            param=param, min=float(lo), max=float(hi), points=int(points), scale=scale
        )
    except (ValueError, BitletError) as err:
        raise click.BadParameter(str(err)) from None


format_option = click.option(
    "--format", "fmt", type=click.Choice(["text", "csv", "json"]), default="text",
    help="Output format.",
)


@click.group()
@click.version_option(package_name="bitlet")
def cli():
    """Analytical throughput/power/energy model for PIM+CPU machines."""


@cli.command("eval")
@click.option("--config", "config_path", required=True, type=click.Path(), help="Config JSON file.")
@format_option
def eval_cmd(config_path: str, fmt: str):
    """Evaluate one configuration and print its outputs."""
    doc = _load_config(config_path)
    try:
        column = _resolve_column(doc, Path(config_path).stem)
    except BitletError as err:
        raise click.ClickException(str(err)) from None
    click.echo(emit_table([column], fmt), nl=False)


@cli.command()
@click.option(
    "--config", "config_paths", required=True, multiple=True, type=click.Path(),
    help="Config JSON file (repeat for more columns).",
)
@format_option
def compare(config_paths: tuple[str, ...], fmt: str):
    """Evaluate several configurations side by side."""
    columns = []
    for path in config_paths:
        doc = _load_config(path)
        try:
            columns.append(_resolve_column(doc, Path(path).stem))
        except BitletError as err:
            raise click.ClickException(f"{path}: {err}") from None
    click.echo(emit_table(columns, fmt), nl=False)


def _sweep_rows(grid: sweep_mod.SweepGrid):
    header = [axis.param for axis in grid.axes] + list(grid.metrics)
    rows = []
    if len(grid.axes) == 1:
        for i, v in enumerate(grid.axis_values[0]):
            rows.append([v] + grid.values[i, :].tolist())
    else:
        for i, v0 in enumerate(grid.axis_values[0]):
            for j, v1 in enumerate(grid.axis_values[1]):
                rows.append([v0, v1] + grid.values[i, j, :].tolist())
    return header, rows


def _emit_rows(header: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(
            {"columns": header, "rows": [[_num(v) for v in row] for row in rows]},
            indent=2,
        )
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _num(v):
    import math
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


@cli.command("sweep")
@click.option("--config", "config_path", required=True, type=click.Path(), help="Config JSON file.")
@click.option(
    "--axis", "axis_flags", multiple=True, metavar="PARAM:MIN:MAX:SCALE:POINTS",
    help="Sweep axis (repeat for a 2D grid); overrides the config's sweep section.",
)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
def sweep_cmd(config_path: str, axis_flags: tuple[str, ...], fmt: str):
    """Sample the model over 1 or 2 parameter axes."""
    doc = _load_config(config_path)
    column = _resolve_column(doc, Path(config_path).stem)
    if axis_flags:
        axes = [_parse_axis_flag(flag) for flag in axis_flags]
        metrics = sweep_mod.DEFAULT_METRICS
    elif doc.sweep is not None:
        axes = list(doc.sweep.axes)
        metrics = doc.sweep.metrics or sweep_mod.DEFAULT_METRICS
    else:
        raise click.ClickException("no sweep axes: pass --axis or a sweep section")
    try:
        grid = sweep_mod.grid_sweep(column.machine, column.workload, axes, tuple(metrics))
    except BitletError as err:
        raise click.ClickException(str(err)) from None
    header, rows = _sweep_rows(grid)
    click.echo(_emit_rows(header, rows, fmt), nl=False)


@cli.command()
@click.option("--config", "config_path", required=True, type=click.Path(), help="Config JSON file.")
@click.option(
    "--metric", type=click.Choice(["tp_combined", "p_combined"]), default="tp_combined",
    help="Which combined metric the level refers to.",
)
@click.option(
    "--level", "levels", multiple=True, required=True, type=float,
    help="Iso level in GOPS (throughput) or watts (power); repeatable.",
)
@click.option("--cc-min", type=float, default=10.0, show_default=True)
@click.option("--cc-max", type=float, default=1e5, show_default=True)
@click.option("--points", type=int, default=256, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
def contour(config_path, metric, levels, cc_min, cc_max, points, fmt):
    """Closed-form iso-lines in the (cc, dio) plane."""
    doc = _load_config(config_path)
    header = ["metric", "level", "cc", "dio"]
    rows = []
    for level in levels:
        si_level = level * GIGA if metric == "tp_combined" else level
        try:
            line = sweep_mod.iso_line_cc_dio(
                doc.machine, metric, si_level, cc_min=cc_min, cc_max=cc_max, points=points
            )
        except BitletError as err:
            raise click.ClickException(f"level {level:g}: {err}") from None
        for cc, dio in line.samples():
            rows.append([metric, level, cc, dio])
    click.echo(_emit_rows(header, rows, fmt), nl=False)


@cli.command()
@click.option("--config", "config_path", required=True, type=click.Path(), help="Config JSON file.")
@click.option(
    "--metric", type=click.Choice(["throughput", "power"]), default="throughput",
    help="Which crossover to solve for.",
)
@click.option("--bw-min", type=float, default=250.0, show_default=True, help="Gbps")
@click.option("--bw-max", type=float, default=16000.0, show_default=True, help="Gbps")
@click.option("--points", type=int, default=64, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
def crossover(config_path, metric, bw_min, bw_max, points, fmt):
    """CPU-pure vs combined crossover curve in the (xbs, bw) plane."""
    doc = _load_config(config_path)
    if doc.workload is None:
        raise click.ClickException("crossover needs a workload (cc and the two DIOs)")
    w = doc.workload
    try:
        curve = sweep_mod.crossover_xbs_bw(
            doc.machine, w.cc(), w.dio_cpu, w.dio_combined,
            bw_min=bw_min * GIGA, bw_max=bw_max * GIGA, points=points, metric=metric,
        )
    except BitletError as err:
        raise click.ClickException(str(err)) from None
    if curve.dominant is not None:
        click.echo(f"# no crossover: {curve.dominant} dominates everywhere", err=False)
        return
    header = ["bw_gbps", "xbs_star"]
    rows = [[bw / GIGA, x] for bw, x in zip(curve.bw.tolist(), curve.xbs_star.tolist())]
    click.echo(_emit_rows(header, rows, fmt), nl=False)


@cli.command()
@click.argument("scenario_id")
@click.option(
    "--tolerance-mode", type=click.Choice(["paper", "strict"]), default="paper",
    show_default=True, help="Compare at the published precision or exactly.",
)
def scenario(scenario_id: str, tolerance_mode: str):
    """Run one published scenario and report expected vs computed values."""
    try:
        report = scenario_catalog.run_scenario(scenario_id, tolerance_mode)
    except BitletError as err:
        raise click.ClickException(str(err)) from None
    click.echo(f"scenario {report.scenario_id}")
    for check in report.checks:
        status = "pass" if check.passed else "FAIL"
        click.echo(
            f"  [{status}] {check.field}: expected {check.expected:g}, "
            f"computed {check.computed:.6g} (compared as {check.compared:g})"
            + (f"  [{check.citation}]" if check.citation else "")
        )
    if not report.checks:
        click.echo("  (no pinned expectations)")
    click.echo("PASS" if report.passed else "FAIL")
    if not report.passed:
        sys.exit(1)


@cli.command("list-scenarios")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def list_scenarios_cmd(fmt: str):
    """List every scenario id with its description and source."""
    entries = scenario_catalog.list_scenarios()
    if fmt == "json":
        click.echo(json.dumps(
            [
                {"id": s.id, "description": s.description, "citation": s.citation,
                 "expectations": len(s.expectations)}
                for s in entries
            ],
            indent=2,
        ))
        return
    width = max(len(s.id) for s in entries)
    for s in entries:
        click.echo(f"{s.id.ljust(width)}  {s.description}  [{s.citation}]")


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int):
    """Start the HTTP evaluation service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


def main():
    cli()


if __name__ == "__main__":
    main()
