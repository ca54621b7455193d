"""Config document parsing and rendering.

A document is a JSON object with an optional `machine` section (defaults
applied per field), exactly one workload source (`workload` with explicit
cycles/DIO, `workload` with declarative complexity+usecase parts, or a
`scenario` reference), and an optional `sweep` section. Unknown keys are
rejected everywhere so typos cannot silently fall back to defaults.

Technology fields accept unit-suffixed strings ("10ns", "0.29fJ",
"1000Gbps") or raw SI numbers.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from . import complexity, usecases
from .errors import ConfigError, ValidationError
from .quantities import (
    MachineConfig,
    WorkloadProfile,
    check_capacity,
    machine_to_dict,
    validate_machine,
    validate_workload,
    workload_to_dict,
)
from .sweep import AxisSpec

_TIME_SUFFIXES = {"s": 1.0, "ms": 1e-3, "us": 1e-6, "ns": 1e-9, "ps": 1e-12}
_ENERGY_SUFFIXES = {
    "j": 1.0, "mj": 1e-3, "uj": 1e-6, "nj": 1e-9,
    "pj": 1e-12, "fj": 1e-15, "aj": 1e-18,
}
_BANDWIDTH_SUFFIXES = {"bps": 1.0, "kbps": 1e3, "mbps": 1e6, "gbps": 1e9, "tbps": 1e12}
_POWER_SUFFIXES = {"w": 1.0, "mw": 1e-3, "kw": 1e3}

_UNIT_KINDS = {
    "time": _TIME_SUFFIXES,
    "energy": _ENERGY_SUFFIXES,
    "bandwidth": _BANDWIDTH_SUFFIXES,
    "power": _POWER_SUFFIXES,
}

# field -> unit kind (None: plain number only)
_MACHINE_FIELDS = {
    "xbs": None,
    "rows": None,
    "cols": None,
    "cycle_time": "time",
    "ebit_pim": "energy",
    "bw": "bandwidth",
    "ebit_cpu": "energy",
    "tdp_pim": "power",
    "tdp_cpu": "power",
}

_EXPLICIT_WORKLOAD_KEYS = {"oc", "pac", "dio_cpu", "dio_combined", "label"}
_DECLARATIVE_WORKLOAD_KEYS = {"complexity", "usecase", "n", "dio_cpu", "label"}

_COMPLEXITY_KEYS = {"op", "width", "layout", "rows", "exact", "custom_cycles"}

_USECASE_PARAMS = {
    "cpu_pure": (usecases.CpuPure, {"s"}),
    "cpu_pure_two_pass": (usecases.CpuPureTwoPass, {"s", "s1", "p"}),
    "pim_pure": (usecases.PimPure, {"s"}),
    "compact": (usecases.Compact, {"s", "s1"}),
    "filter1": (usecases.Filter1, {"s", "p"}),
    "filter2": (usecases.Filter2, {"s", "p", "ceil_index"}),
    "hybrid": (usecases.Hybrid, {"s", "s1", "p"}),
    "reduction0": (usecases.Reduction0, {"s", "s1"}),
    "reduction1": (usecases.Reduction1, {"s", "s1", "r"}),
}

_NUMBER_WITH_SUFFIX = re.compile(r"^\s*([+-]?[0-9.]+(?:[eE][+-]?[0-9]+)?)\s*([a-zA-Z]+)\s*$")


@dataclass(frozen=True)
class SweepRequest:
    axes: tuple[AxisSpec, ...]
    metrics: tuple[str, ...] | None = None


@dataclass(frozen=True)
class ConfigDocument:
    """Fully resolved document: machine with defaults applied, at most one
    workload source, optional sweep request."""

    machine: MachineConfig
    workload: WorkloadProfile | None = None
    scenario: str | None = None
    sweep: SweepRequest | None = None
    cells_per_row: float | None = None


def parse_quantity(value: object, kind: str | None, path: str) -> float:
    """Accept a raw number or a unit-suffixed string of the given kind."""
    if isinstance(value, bool):
        raise ConfigError(path, "expected a number")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        match = _NUMBER_WITH_SUFFIX.match(value)
        if not match:
            raise ConfigError(path, f"cannot parse quantity {value!r}")
        number, suffix = match.groups()
        if kind is None:
            raise ConfigError(path, f"field takes a plain number, not {value!r}")
        table = _UNIT_KINDS[kind]
        factor = table.get(suffix.lower())
        if factor is None:
            expected = ", ".join(sorted(table))
            raise ConfigError(
                path, f"unit {suffix!r} does not measure {kind} (expected one of: {expected})"
            )
        try:
            return float(number) * factor
        except ValueError:
            raise ConfigError(path, f"cannot parse quantity {value!r}") from None
    raise ConfigError(path, "expected a number or unit-suffixed string")


def _reject_unknown(section: dict, allowed: set[str], path: str) -> None:
    for key in section:
        if key not in allowed:
            raise ConfigError(f"{path}.{key}" if path else key, "unknown key")


def _parse_machine(section: object, path: str = "machine") -> MachineConfig:
    if section is None:
        section = {}
    if not isinstance(section, dict):
        raise ConfigError(path, "must be an object")
    _reject_unknown(section, set(_MACHINE_FIELDS), path)
    kwargs = {
        key: parse_quantity(raw, _MACHINE_FIELDS[key], f"{path}.{key}")
        for key, raw in section.items()
    }
    try:
        return validate_machine(MachineConfig(**kwargs))
    except ValidationError as err:
        raise ConfigError(f"{path}.{err.field}", err.message) from None


def _parse_complexity(section: dict, path: str) -> tuple[float, float]:
    _reject_unknown(section, _COMPLEXITY_KEYS, path)
    if "op" not in section:
        raise ConfigError(f"{path}.op", "required")
    if "width" not in section:
        raise ConfigError(f"{path}.width", "required")
    try:
        op = complexity.OpKind(section["op"])
    except ValueError:
        raise ConfigError(f"{path}.op", f"unknown operation {section['op']!r}") from None
    layout_name = section.get("layout", "parallel_aligned")
    try:
        layout = complexity.LayoutClass(layout_name)
    except ValueError:
        raise ConfigError(f"{path}.layout", f"unknown layout {layout_name!r}") from None
    spec = complexity.ComplexitySpec(
        op=op,
        width=parse_quantity(section["width"], None, f"{path}.width"),
        layout=layout,
        rows=(
            parse_quantity(section["rows"], None, f"{path}.rows")
            if "rows" in section else None
        ),
        exact=bool(section.get("exact", True)),
        custom_cycles=(
            parse_quantity(section["custom_cycles"], None, f"{path}.custom_cycles")
            if "custom_cycles" in section else None
        ),
    )
    try:
        return complexity.compile_spec(spec)
    except ValidationError as err:
        raise ConfigError(f"{path}.{err.field}", err.message) from None


def _parse_usecase(section: dict, path: str) -> usecases.UseCase:
    if "kind" not in section:
        raise ConfigError(f"{path}.kind", "required")
    kind = section["kind"]
    if kind not in _USECASE_PARAMS:
        known = ", ".join(sorted(_USECASE_PARAMS))
        raise ConfigError(f"{path}.kind", f"unknown use case {kind!r} (expected one of: {known})")
    cls, allowed = _USECASE_PARAMS[kind]
    _reject_unknown(section, allowed | {"kind"}, path)
    kwargs = {}
    for key, raw in section.items():
        if key == "kind":
            continue
        if key == "ceil_index":
            kwargs[key] = bool(raw)
        else:
            kwargs[key] = parse_quantity(raw, None, f"{path}.{key}")
    try:
        return cls(**kwargs)
    except TypeError:
        needed = ", ".join(sorted(allowed))
        raise ConfigError(path, f"use case {kind!r} needs parameters: {needed}") from None
    except ValidationError as err:
        raise ConfigError(f"{path}.{err.field}", err.message) from None


def _parse_workload(section: dict, path: str = "workload") -> WorkloadProfile:
    if not isinstance(section, dict):
        raise ConfigError(path, "must be an object")
    declarative = "complexity" in section or "usecase" in section
    if declarative:
        _reject_unknown(section, _DECLARATIVE_WORKLOAD_KEYS, path)
        if "complexity" not in section:
            raise ConfigError(f"{path}.complexity", "required for declarative workloads")
        if "usecase" not in section:
            raise ConfigError(f"{path}.usecase", "required for declarative workloads")
        if "n" not in section:
            raise ConfigError(f"{path}.n", "required for declarative workloads")
        oc, pac = _parse_complexity(section["complexity"], f"{path}.complexity")
        uc = _parse_usecase(section["usecase"], f"{path}.usecase")
        n = parse_quantity(section["n"], None, f"{path}.n")
        try:
            dio_combined = usecases.dio_per_computation(uc, n)
        except ValidationError as err:
            raise ConfigError(f"{path}.n", err.message) from None
        # CPU-pure moves every record in full unless overridden.
        if "dio_cpu" in section:
            dio_cpu = parse_quantity(section["dio_cpu"], None, f"{path}.dio_cpu")
        else:
            dio_cpu = uc.s
        workload = WorkloadProfile(
            oc=oc, pac=pac, dio_cpu=dio_cpu, dio_combined=dio_combined,
            label=str(section.get("label", "workload")),
        )
    else:
        _reject_unknown(section, _EXPLICIT_WORKLOAD_KEYS, path)
        if "oc" not in section:
            raise ConfigError(f"{path}.oc", "required")
        workload = WorkloadProfile(
            oc=parse_quantity(section["oc"], None, f"{path}.oc"),
            pac=parse_quantity(section.get("pac", 0.0), None, f"{path}.pac"),
            dio_cpu=parse_quantity(section.get("dio_cpu", 0.0), None, f"{path}.dio_cpu"),
            dio_combined=parse_quantity(
                section.get("dio_combined", 0.0), None, f"{path}.dio_combined"
            ),
            label=str(section.get("label", "workload")),
        )
    try:
        return validate_workload(workload)
    except ValidationError as err:
        raise ConfigError(f"{path}.{err.field}", err.message) from None


def _parse_axis(section: dict, path: str) -> AxisSpec:
    _reject_unknown(section, {"param", "min", "max", "points", "scale"}, path)
    for key in ("param", "min", "max", "points"):
        if key not in section:
            raise ConfigError(f"{path}.{key}", "required")
    try:
        return AxisSpec(
            param=str(section["param"]),
            min=parse_quantity(section["min"], None, f"{path}.min"),
            max=parse_quantity(section["max"], None, f"{path}.max"),
            points=int(section["points"]),
            scale=str(section.get("scale", "linear")),
        )
    except ValidationError as err:
        raise ConfigError(f"{path}.{err.field}", err.message) from None


def _parse_sweep(section: dict, path: str = "sweep") -> SweepRequest:
    if not isinstance(section, dict):
        raise ConfigError(path, "must be an object")
    _reject_unknown(section, {"axes", "metrics"}, path)
    if "axes" not in section or not isinstance(section["axes"], list) or not section["axes"]:
        raise ConfigError(f"{path}.axes", "need a non-empty list of axes")
    axes = tuple(
        _parse_axis(axis, f"{path}.axes[{i}]") for i, axis in enumerate(section["axes"])
    )
    metrics = None
    if "metrics" in section:
        if not isinstance(section["metrics"], list):
            raise ConfigError(f"{path}.metrics", "must be a list of metric ids")
        metrics = tuple(str(mid) for mid in section["metrics"])
    return SweepRequest(axes=axes, metrics=metrics)


def parse_config_dict(doc: object) -> ConfigDocument:
    """Parse and validate an already-decoded JSON object."""
    if not isinstance(doc, dict):
        raise ConfigError("", "config document must be a JSON object")
    _reject_unknown(doc, {"machine", "workload", "scenario", "sweep", "cells_per_row"}, "")
    machine = _parse_machine(doc.get("machine"))

    sources = [key for key in ("workload", "scenario") if key in doc]
    if len(sources) > 1:
        raise ConfigError("", "workload and scenario are mutually exclusive")

    workload = None
    scenario = None
    if "workload" in doc:
        workload = _parse_workload(doc["workload"])
    if "scenario" in doc:
        if not isinstance(doc["scenario"], str):
            raise ConfigError("scenario", "must be a scenario id string")
        scenario = doc["scenario"]

    sweep = _parse_sweep(doc["sweep"]) if "sweep" in doc else None

    cells_per_row = None
    if "cells_per_row" in doc:
        cells_per_row = parse_quantity(doc["cells_per_row"], None, "cells_per_row")
        try:
            check_capacity(machine, cells_per_row)
        except ValidationError as err:
            raise ConfigError("cells_per_row", err.message) from None

    return ConfigDocument(
        machine=machine, workload=workload, scenario=scenario,
        sweep=sweep, cells_per_row=cells_per_row,
    )


def parse_config(text: str) -> ConfigDocument:
    """Parse a JSON config document from text."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ConfigError("", f"invalid JSON at line {err.lineno}, column {err.colno}: {err.msg}") from None
    return parse_config_dict(doc)


def render_config(doc: ConfigDocument) -> str:
    """Serialize back to JSON with raw SI numbers; parse(render(d)) == d."""
    out: dict = {"machine": machine_to_dict(doc.machine)}
    if doc.workload is not None:
        out["workload"] = workload_to_dict(doc.workload)
    if doc.scenario is not None:
        out["scenario"] = doc.scenario
    if doc.sweep is not None:
        sweep: dict = {
            "axes": [
                {
                    "param": a.param, "min": a.min, "max": a.max,
                    "points": a.points, "scale": a.scale,
                }
                for a in doc.sweep.axes
            ]
        }
        if doc.sweep.metrics is not None:
            sweep["metrics"] = list(doc.sweep.metrics)
        out["sweep"] = sweep
    if doc.cells_per_row is not None:
        out["cells_per_row"] = doc.cells_per_row
    return json.dumps(out, indent=2)
