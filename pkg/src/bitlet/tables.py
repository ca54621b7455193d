"""Result projection and emission: metric dictionaries, text comparison
tables (parameters as rows, configurations as columns), CSV, and JSON.

Column names and order are a stable contract; change them only with the
golden files.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

from .engine import EvalResult
from .quantities import GIGA, MachineConfig, WorkloadProfile, machine_to_dict, workload_to_dict

METRIC_COLUMNS = (
    "tp_pim_gops",
    "tp_cpu_gops",
    "tp_combined_gops",
    "p_pim_w",
    "p_cpu_w",
    "p_combined_w",
    "epc_pim_jgop",
    "epc_cpu_jgop",
    "epc_combined_jgop",
)

EXTRA_COLUMNS = (
    "tp_cpu_combined_gops",
    "tp_pim_per_cycle",
    "pim_gops_per_watt",
    "duty_pim",
    "duty_cpu",
    "throttle_factor_pim",
    "throttle_factor_cpu",
)

PARAM_COLUMNS = (
    "xbs",
    "rows",
    "cols",
    "cycle_time_s",
    "ebit_pim_j",
    "bw_bps",
    "ebit_cpu_j",
    "tdp_pim_w",
    "tdp_cpu_w",
    "oc_cycles",
    "pac_cycles",
    "cc_cycles",
    "dio_cpu_bits",
    "dio_combined_bits",
)

CSV_COLUMNS = ("label",) + PARAM_COLUMNS + METRIC_COLUMNS + EXTRA_COLUMNS


@dataclass(frozen=True)
class ResultColumn:
    """One labelled configuration with its evaluated outputs."""

    label: str
    machine: MachineConfig
    workload: WorkloadProfile
    result: EvalResult


def metrics_dict(m: MachineConfig, w: WorkloadProfile, r: EvalResult) -> dict[str, float]:
    """Display-unit projection of one evaluation (GOPS, W, J/GOP)."""
    out = {
        "tp_pim_gops": r.tp_pim / GIGA,
        "tp_cpu_gops": r.tp_cpu / GIGA,
        "tp_combined_gops": r.tp_combined / GIGA,
        "p_pim_w": r.p_pim,
        "p_cpu_w": r.p_cpu,
        "p_combined_w": r.p_combined,
        "epc_pim_jgop": r.epc_pim * GIGA,
        "epc_cpu_jgop": r.epc_cpu * GIGA,
        "epc_combined_jgop": r.epc_combined * GIGA,
        "tp_cpu_combined_gops": r.tp_cpu_combined / GIGA,
        "tp_pim_per_cycle": r.tp_pim * m.cycle_time,
        "pim_gops_per_watt": (r.tp_pim / GIGA) / r.p_pim if r.p_pim > 0 else math.inf,
        "duty_pim": r.duty_pim,
        "duty_cpu": r.duty_cpu,
        "throttle_factor_pim": r.throttle_factor_pim,
        "throttle_factor_cpu": r.throttle_factor_cpu,
        "cc_cycles": w.cc(),
        "oc_cycles": w.oc,
        "pac_cycles": w.pac,
        "dio_cpu_bits": w.dio_cpu,
        "dio_combined_bits": w.dio_combined,
    }
    return out


def column_values(col: ResultColumn) -> dict[str, object]:
    """Full flat row for one column: label, parameters, then metrics."""
    m = col.machine
    metrics = metrics_dict(m, col.workload, col.result)
    row: dict[str, object] = {
        "label": col.label,
        "xbs": m.xbs,
        "rows": m.rows,
        "cols": m.cols,
        "cycle_time_s": m.cycle_time,
        "ebit_pim_j": m.ebit_pim,
        "bw_bps": m.bw,
        "ebit_cpu_j": m.ebit_cpu,
        "tdp_pim_w": m.tdp_pim,
        "tdp_cpu_w": m.tdp_cpu,
    }
    for key in PARAM_COLUMNS[9:] + METRIC_COLUMNS + EXTRA_COLUMNS:
        row[key] = metrics[key] if key in metrics else None
    return row


def _csv_cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        if not math.isfinite(value):
            return ""
        return repr(value)
    return str(value)


def _display_cell(value: object) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        if math.isinf(value):
            return "inf"
        return f"{value:.6g}"
    return str(value)


def emit_csv(columns: list[ResultColumn]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for col in columns:
        row = column_values(col)
        writer.writerow([_csv_cell(row[key]) for key in CSV_COLUMNS])
    return buf.getvalue()


def _json_safe(value: object) -> object:
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def column_to_json_dict(col: ResultColumn) -> dict:
    metrics = metrics_dict(col.machine, col.workload, col.result)
    return {
        "label": col.label,
        "machine": machine_to_dict(col.machine),
        "workload": workload_to_dict(col.workload),
        "metrics": {k: _json_safe(v) for k, v in metrics.items()},
        "tdp_flags": list(col.result.tdp_flags),
    }


def emit_json(columns: list[ResultColumn]) -> str:
    return json.dumps({"columns": [column_to_json_dict(c) for c in columns]}, indent=2)


def emit_text(columns: list[ResultColumn]) -> str:
    """Spreadsheet-style comparison: one row per parameter or output, one
    column per configuration."""
    rows = [row for row in CSV_COLUMNS]
    table = {key: [] for key in rows}
    for col in columns:
        values = column_values(col)
        for key in rows:
            table[key].append(_display_cell(values[key]))
    name_width = max(len(k) for k in rows)
    col_widths = [
        max(len(table[key][i]) for key in rows) for i in range(len(columns))
    ]
    lines = []
    for key in rows:
        cells = "  ".join(v.rjust(w) for v, w in zip(table[key], col_widths))
        lines.append(f"{key.ljust(name_width)}  {cells}")
        if key == "label" or key == "dio_combined_bits":
            lines.append("-" * len(lines[-1]))
    return "\n".join(lines) + "\n"


def emit_table(columns: list[ResultColumn], format: str = "text") -> str:
    """Render columns in the requested format: text, csv, or json."""
    if not columns:
        raise ValueError("need at least one result column")
    if format == "text":
        return emit_text(columns)
    if format == "csv":
        return emit_csv(columns)
    if format == "json":
        return emit_json(columns)
    raise ValueError(f"unknown table format {format!r}")
