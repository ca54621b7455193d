"""Sensitivity data generation: 1D/2D parameter grids, analytic iso-level
polylines in the (cc, dio) plane, and CPU-vs-combined crossover curves in
the (xbs, bw) plane.

Both iso-line families are affine in linear coordinates, so they are
computed in closed form rather than traced numerically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import engine
from .errors import UnachievableLevelError, ValidationError
from .quantities import GIGA, MachineConfig, WorkloadProfile

MACHINE_PARAMS = {
    "xbs": "xbs",
    "rows": "rows",
    "bw": "bw",
    "ct": "cycle_time",
    "ebit_pim": "ebit_pim",
    "ebit_cpu": "ebit_cpu",
}
WORKLOAD_PARAMS = ("cc", "dio_cpu", "dio_combined")

DEFAULT_METRICS = (
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

_EXTRACTORS = {
    "tp_pim_gops": lambda r: r.tp_pim / GIGA,
    "tp_cpu_gops": lambda r: r.tp_cpu / GIGA,
    "tp_combined_gops": lambda r: r.tp_combined / GIGA,
    "tp_cpu_combined_gops": lambda r: r.tp_cpu_combined / GIGA,
    "p_pim_w": lambda r: r.p_pim,
    "p_cpu_w": lambda r: r.p_cpu,
    "p_combined_w": lambda r: r.p_combined,
    "epc_pim_jgop": lambda r: r.epc_pim * GIGA,
    "epc_cpu_jgop": lambda r: r.epc_cpu * GIGA,
    "epc_combined_jgop": lambda r: r.epc_combined * GIGA,
    "duty_pim": lambda r: r.duty_pim,
    "duty_cpu": lambda r: r.duty_cpu,
}


def extract_metric(result: engine.EvalResult, metric: str) -> float:
    try:
        return _EXTRACTORS[metric](result)
    except KeyError:
        raise ValidationError("metric", f"{metric!r} is not a known metric id") from None


@dataclass(frozen=True)
class AxisSpec:
    """One swept parameter: id, range, sample count, and spacing."""

    param: str
    min: float
    max: float
    points: int
    scale: str = "linear"

    def __post_init__(self):
        if self.param not in MACHINE_PARAMS and self.param not in WORKLOAD_PARAMS:
            raise ValidationError("param", f"{self.param!r} is not a sweep parameter")
        if self.points < 2:
            raise ValidationError("points", "must be >= 2")
        if not self.min < self.max:
            raise ValidationError("min", "must be < max")
        if self.scale not in ("linear", "log"):
            raise ValidationError("scale", "must be 'linear' or 'log'")
        if self.scale == "log" and self.min <= 0:
            raise ValidationError("min", "must be > 0 for log scale")

    def values(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.min, self.max, self.points)
        return np.linspace(self.min, self.max, self.points)


@dataclass(frozen=True, eq=False)
class SweepGrid:
    """Dense metric matrix over one or two axes, row-major with the first
    axis outermost."""

    axes: tuple[AxisSpec, ...]
    metrics: tuple[str, ...]
    axis_values: tuple[np.ndarray, ...]
    values: np.ndarray  # shape (*points_per_axis, len(metrics))


def _apply_param(m: MachineConfig, w: WorkloadProfile, param: str, value: float):
    if param in MACHINE_PARAMS:
        return m.replace(**{MACHINE_PARAMS[param]: float(value)}), w
    if param == "cc":
        return m, w.replace(oc=float(value), pac=0.0)
    return m, w.replace(**{param: float(value)})


def grid_sweep(
    machine: MachineConfig,
    workload: WorkloadProfile,
    axes: list[AxisSpec] | tuple[AxisSpec, ...],
    metrics: tuple[str, ...] = DEFAULT_METRICS,
) -> SweepGrid:
    """Evaluate the model at every grid point of up to two axes."""
    axes = tuple(axes)
    if not 1 <= len(axes) <= 2:
        raise ValidationError("axes", "need 1 or 2 sweep axes")
    for metric in metrics:
        if metric not in _EXTRACTORS:
            raise ValidationError("metrics", f"{metric!r} is not a known metric id")
    axis_values = tuple(axis.values() for axis in axes)
    shape = tuple(len(v) for v in axis_values) + (len(metrics),)
    out = np.empty(shape, dtype=float)
    if len(axes) == 1:
        for i, v in enumerate(axis_values[0]):
            m, w = _apply_param(machine, workload, axes[0].param, v)
            r = engine.evaluate(m, w)
            out[i, :] = [extract_metric(r, metric) for metric in metrics]
    else:
        for i, v0 in enumerate(axis_values[0]):
            m0, w0 = _apply_param(machine, workload, axes[0].param, v0)
            for j, v1 in enumerate(axis_values[1]):
                m, w = _apply_param(m0, w0, axes[1].param, v1)
                r = engine.evaluate(m, w)
                out[i, j, :] = [extract_metric(r, metric) for metric in metrics]
    return SweepGrid(axes=axes, metrics=tuple(metrics), axis_values=axis_values, values=out)


@dataclass(frozen=True, eq=False)
class IsoLine:
    """Closed-form level set of a combined metric in the (cc, dio) plane.

    Coefficients satisfy cc_coeff*cc + dio_coeff*dio = rhs at the level.
    """

    metric: str
    level: float
    cc: np.ndarray
    dio: np.ndarray
    cc_coeff: float
    dio_coeff: float
    rhs: float

    def samples(self) -> list[tuple[float, float]]:
        return list(zip(self.cc.tolist(), self.dio.tolist()))


def iso_line_cc_dio(
    m: MachineConfig,
    metric: str,
    level: float,
    cc_min: float = 10.0,
    cc_max: float = 1e5,
    points: int = 256,
) -> IsoLine:
    """Level set of tp_combined [OPS] or p_combined [W] over (cc, dio).

    Throughput lines satisfy cc*ct/(rows*xbs) + dio/bw = 1/level; power
    lines pass through the origin with a slope fixed by how far the level
    sits between the two pure powers.
    """
    if metric not in ("tp_combined", "p_combined"):
        raise ValidationError("metric", "must be 'tp_combined' or 'p_combined'")
    if level <= 0:
        raise UnachievableLevelError("level must be > 0")
    if cc_min < 1:
        raise ValidationError("cc_min", "must be >= 1")
    if points < 2:
        raise ValidationError("points", "must be >= 2")
    n = m.xbs * m.rows

    if metric == "tp_combined":
        cc_coeff = m.cycle_time / n
        dio_coeff = 1.0 / m.bw
        rhs = 1.0 / level
        cc_intercept = rhs / cc_coeff  # dio == 0 endpoint
        if cc_intercept < cc_min:
            raise UnachievableLevelError(
                f"throughput level {level:g} OPS needs cc < {cc_min:g}"
            )
        hi = min(cc_max, cc_intercept)
        cc = np.geomspace(cc_min, hi, points)
        dio = np.maximum(0.0, m.bw * (rhs - cc * cc_coeff))
        return IsoLine(metric, level, cc, dio, cc_coeff, dio_coeff, rhs)

    power_pim = engine.p_pim(m)
    power_cpu = engine.p_cpu(m)
    lo, hi_p = min(power_pim, power_cpu), max(power_pim, power_cpu)
    if lo == hi_p:
        raise UnachievableLevelError(
            "degenerate power plane: pure PIM and CPU powers coincide"
        )
    if not lo < level < hi_p:
        raise UnachievableLevelError(
            f"power level {level:g} W outside achievable ({lo:g}, {hi_p:g}) W"
        )
    slope = (m.bw * m.cycle_time / n) * (level - power_pim) / (power_cpu - level)
    cc = np.geomspace(cc_min, cc_max, points)
    dio = slope * cc
    cc_coeff = m.ebit_pim - level * m.cycle_time / n
    dio_coeff = m.ebit_cpu - level / m.bw
    return IsoLine(metric, level, cc, dio, cc_coeff, dio_coeff, 0.0)


@dataclass(frozen=True, eq=False)
class CrossoverCurve:
    """Where CPU-pure and combined performance meet in the (xbs, bw) plane.

    xbs_star is linear in bw (xbs_star = slope * bw); when the combined
    system can never catch up the curve is empty and `dominant` names the
    winning side everywhere.
    """

    metric: str
    bw: np.ndarray
    xbs_star: np.ndarray
    slope: float | None
    dominant: str | None
    dio_cpu: float
    dio_combined: float
    cc: float
    machine: MachineConfig = field(repr=False)

    def better_side(self, xbs: float, bw: float) -> str:
        """Evaluate both alternatives at one point: 'combined' or 'cpu'.

        For throughput the better side is the faster one; for power it is
        the one drawing less.
        """
        m = self.machine.replace(xbs=float(xbs), bw=float(bw))
        w = WorkloadProfile(
            oc=self.cc, dio_cpu=self.dio_cpu, dio_combined=self.dio_combined
        )
        r = engine.evaluate(m, w)
        if self.metric == "throughput":
            return "combined" if r.tp_combined > r.tp_cpu else "cpu"
        return "combined" if r.p_combined < r.p_cpu else "cpu"

    def predicted_side(self, xbs: float, bw: float) -> str:
        """Side of the closed-form curve a point falls on."""
        if self.slope is None:
            return self.dominant
        if self.metric == "throughput":
            # More crossbars than the crossover needs: combined wins.
            return "combined" if xbs > self.slope * bw else "cpu"
        # Above the power boundary the PIM side dominates the budget.
        return "cpu" if xbs > self.slope * bw else "combined"


def crossover_xbs_bw(
    machine: MachineConfig,
    cc: float,
    dio_cpu: float,
    dio_combined: float,
    bw_min: float = 250e9,
    bw_max: float = 16e12,
    points: int = 256,
    metric: str = "throughput",
) -> CrossoverCurve:
    """Solve CPU-pure == combined for xbs at each sampled bandwidth.

    For throughput the transfer saved per computation must buy back the PIM
    time: xbs* = cc*ct*bw / (rows*(dio_cpu - dio_combined)). For power the
    boundary is where pure PIM power meets pure CPU power and is independent
    of cc and dio.
    """
    if metric not in ("throughput", "power"):
        raise ValidationError("metric", "must be 'throughput' or 'power'")
    if cc < 1:
        raise ValidationError("cc", "must be >= 1")
    if dio_cpu <= 0:
        raise ValidationError("dio_cpu", "must be > 0")
    if dio_combined < 0:
        raise ValidationError("dio_combined", "must be >= 0")
    bw = np.geomspace(bw_min, bw_max, points)

    if metric == "throughput":
        if dio_combined >= dio_cpu:
            # No transfer reduction: the harmonic combination always loses.
            return CrossoverCurve(
                metric, bw, np.array([]), None, "cpu", dio_cpu, dio_combined, cc, machine
            )
        slope = cc * machine.cycle_time / (machine.rows * (dio_cpu - dio_combined))
    else:
        if machine.ebit_pim == 0:
            return CrossoverCurve(
                metric, bw, np.array([]), None, "combined", dio_cpu, dio_combined, cc, machine
            )
        slope = machine.ebit_cpu * machine.cycle_time / (machine.rows * machine.ebit_pim)
    return CrossoverCurve(
        metric, bw, slope * bw, slope, None, dio_cpu, dio_combined, cc, machine
    )
