"""Machine and workload parameter types, unit conventions, and validation.

All quantities are SI doubles internally: seconds, joules, bits/s, OPS,
watts, J/OP. Display units (GOPS, Gbps, J/GOP) are pure power-of-ten
conversions applied at the boundary.
"""

from __future__ import annotations

import dataclasses
import math
import warnings
from dataclasses import dataclass
from typing import Any

from .errors import ValidationError

GIGA = 1.0e9

# Typical machine values: 1024 crossbars of 1024x1024 cells, 10 ns cycle,
# 0.1 pJ per switched bit, 1 Tbps memory bus at 15 pJ per transferred bit.
DEFAULT_XBS = 1024.0
DEFAULT_ROWS = 1024.0
DEFAULT_COLS = 1024.0
DEFAULT_CYCLE_TIME_S = 10e-9
DEFAULT_EBIT_PIM_J = 0.1e-12
DEFAULT_BW_BPS = 1000e9
DEFAULT_EBIT_CPU_J = 15e-12

# Typical ranges used for advisory warnings only; anything physically sane
# is accepted so limit studies can probe extreme configurations.
TYPICAL_RANGES = {
    "xbs": (1.0, 65536.0),
    "rows": (16.0, 1024.0),
    "cols": (16.0, 1024.0),
    "bw": (0.1e12, 16e12),
}
TYPICAL_DIO_RANGE = (1.0, 256.0)
TYPICAL_CC_MAX = 65536.0


@dataclass(frozen=True)
class MachineConfig:
    """Technological and architectural parameters of one PIM+CPU machine.

    xbs         number of crossbar arrays
    rows, cols  crossbar dimensions (cols only bounds per-row cell demand)
    cycle_time  PIM cycle time [s]
    ebit_pim    energy per switched bit per PIM cycle [J]
    bw          memory-to-CPU bandwidth [bits/s]
    ebit_cpu    energy per bit transferred over the bus [J]
    tdp_pim/cpu optional power caps [W] that trigger duty-cycle throttling
    """

    xbs: float = DEFAULT_XBS
    rows: float = DEFAULT_ROWS
    cols: float = DEFAULT_COLS
    cycle_time: float = DEFAULT_CYCLE_TIME_S
    ebit_pim: float = DEFAULT_EBIT_PIM_J
    bw: float = DEFAULT_BW_BPS
    ebit_cpu: float = DEFAULT_EBIT_CPU_J
    tdp_pim: float | None = None
    tdp_cpu: float | None = None

    def replace(self, **changes: Any) -> "MachineConfig":
        return dataclasses.replace(self, **changes)


@dataclass(frozen=True)
class WorkloadProfile:
    """Algorithmic parameters of one computation.

    oc            cycles spent on the row-parallel arithmetic itself
    pac           cycles spent copying data into place (alignment)
    dio_cpu       bits moved per computation when the CPU does everything
    dio_combined  bits moved per computation when PIM preprocesses
    """

    oc: float
    pac: float = 0.0
    dio_cpu: float = 0.0
    dio_combined: float = 0.0
    label: str = "workload"

    def cc(self) -> float:
        """Total PIM cycles per batch; always the sum, never stored."""
        return self.oc + self.pac

    def replace(self, **changes: Any) -> "WorkloadProfile":
        return dataclasses.replace(self, **changes)


def _require_finite(field: str, value: float) -> None:
    if not math.isfinite(value):
        raise ValidationError(field, "must be finite")


def validate_machine(cfg: MachineConfig) -> MachineConfig:
    """Check physical sanity; returns cfg unchanged when every constraint holds.

    Values outside the typical ranges are accepted with a warning so that
    limit studies remain possible.
    """
    for field in ("xbs", "rows", "cols"):
        value = getattr(cfg, field)
        _require_finite(field, value)
        if value < 1:
            raise ValidationError(field, "must be >= 1")
    _require_finite("cycle_time", cfg.cycle_time)
    if cfg.cycle_time <= 0:
        raise ValidationError("cycle_time", "must be > 0")
    _require_finite("bw", cfg.bw)
    if cfg.bw <= 0:
        raise ValidationError("bw", "must be > 0")
    for field in ("ebit_pim", "ebit_cpu"):
        value = getattr(cfg, field)
        _require_finite(field, value)
        if value < 0:
            raise ValidationError(field, "must be >= 0")
    for field in ("tdp_pim", "tdp_cpu"):
        value = getattr(cfg, field)
        if value is None:
            continue
        _require_finite(field, value)
        if value <= 0:
            raise ValidationError(field, "must be > 0")
    for field, (lo, hi) in TYPICAL_RANGES.items():
        value = getattr(cfg, field)
        if not lo <= value <= hi:
            warnings.warn(
                f"{field}={value:g} is outside the typical range [{lo:g}, {hi:g}]; "
                "accepted for limit studies",
                stacklevel=2,
            )
    return cfg


def validate_workload(w: WorkloadProfile) -> WorkloadProfile:
    """Check workload sanity; cc() >= 1 is enforced by the engine, not here."""
    for field in ("oc", "pac", "dio_cpu", "dio_combined"):
        value = getattr(w, field)
        _require_finite(field, value)
        if value < 0:
            raise ValidationError(field, "must be >= 0")
    # Sub-range DIO is legitimate (per-crossbar reduction amortizes to a
    # fraction of a bit per computation), so only oversized values warn.
    for field, hi in (("oc", TYPICAL_CC_MAX), ("pac", TYPICAL_CC_MAX),
                      ("dio_cpu", TYPICAL_DIO_RANGE[1]), ("dio_combined", TYPICAL_DIO_RANGE[1])):
        value = getattr(w, field)
        if value > hi:
            warnings.warn(
                f"{field}={value:g} is above the typical maximum {hi:g}; "
                "accepted for limit studies",
                stacklevel=2,
            )
    return w


def check_capacity(cfg: MachineConfig, cells_per_row: float) -> None:
    """Optional capacity check: a workload's per-row cell demand must fit in cols."""
    if cells_per_row < 0:
        raise ValidationError("cells_per_row", "must be >= 0")
    if cells_per_row > cfg.cols:
        raise ValidationError(
            "cells_per_row",
            f"needs {cells_per_row:g} cells per row but the crossbar "
            f"has only {cfg.cols:g} columns",
        )


# Unit conversions. The constants are exact powers of ten; round trips are
# lossless for values whose scaled image is exactly representable (in
# particular for every power of ten in the working range).

def to_gops(ops: float) -> float:
    return ops / GIGA


def from_gops(gops: float) -> float:
    return gops * GIGA


def to_gbps(bps: float) -> float:
    return bps / GIGA


def from_gbps(gbps: float) -> float:
    return gbps * GIGA


def to_j_per_gop(j_per_op: float) -> float:
    return j_per_op * GIGA


def from_j_per_gop(j_per_gop: float) -> float:
    return j_per_gop / GIGA


_OPTIONAL_MACHINE_FIELDS = ("tdp_pim", "tdp_cpu")


def machine_to_dict(cfg: MachineConfig) -> dict:
    """Plain-dict form with SI numbers; omits unset optional fields."""
    out = dataclasses.asdict(cfg)
    for field in _OPTIONAL_MACHINE_FIELDS:
        if out[field] is None:
            del out[field]
    return out


def machine_from_dict(data: dict) -> MachineConfig:
    return validate_machine(MachineConfig(**data))


def workload_to_dict(w: WorkloadProfile) -> dict:
    return dataclasses.asdict(w)


def workload_from_dict(data: dict) -> WorkloadProfile:
    return validate_workload(WorkloadProfile(**data))
