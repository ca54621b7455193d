"""The nine model equations: throughput, power, and energy-per-computation
for PIM-only, CPU-only, and combined execution, plus TDP throttling.

The combined system never overlaps PIM cycles with bus transfers, so its
throughput is the harmonic combination of the component throughputs and its
power is the active-time-weighted mean of the component powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import EvaluationError
from .quantities import MachineConfig, WorkloadProfile, validate_machine, validate_workload

UNBOUNDED = math.inf


@dataclass(frozen=True)
class EvalResult:
    """All model outputs for one (machine, workload) pair.

    Throughputs are OPS, powers watts, energies J/OP. tp_pim is unbounded
    (inf) when the workload has no PIM cycles; tp_cpu likewise when its DIO
    is zero. The CPU-pure column uses dio_cpu; the combined column uses
    dio_combined, with tp_cpu_combined the bus rate at that DIO.
    """

    tp_pim: float
    tp_cpu: float
    tp_combined: float
    p_pim: float
    p_cpu: float
    p_combined: float
    epc_pim: float
    epc_cpu: float
    epc_combined: float
    tp_cpu_combined: float
    duty_pim: float
    duty_cpu: float
    throttle_factor_pim: float = 1.0
    throttle_factor_cpu: float = 1.0
    tdp_flags: tuple[str, ...] = ()


def tp_pim(m: MachineConfig, cc: float) -> float:
    """PIM throughput: xbs*rows computations finish every cc cycles."""
    if cc < 1:
        raise EvaluationError("cc must be >= 1 for PIM throughput")
    return m.xbs * m.rows / (cc * m.cycle_time)


def tp_cpu(m: MachineConfig, dio: float) -> float:
    """CPU throughput, bandwidth-bound: bw/dio."""
    if dio <= 0:
        raise EvaluationError("dio must be > 0 for CPU throughput")
    return m.bw / dio


def tp_combined(tp_p: float, tp_c: float) -> float:
    """Harmonic combination of non-overlapping PIM and transfer phases.

    An unbounded side contributes no time, so the other side's throughput
    is returned.
    """
    if tp_p <= 0 or tp_c <= 0:
        raise EvaluationError("component throughputs must be > 0")
    if math.isinf(tp_p) and math.isinf(tp_c):
        return UNBOUNDED
    if math.isinf(tp_p):
        return tp_c
    if math.isinf(tp_c):
        return tp_p
    return 1.0 / (1.0 / tp_p + 1.0 / tp_c)


def p_pim(m: MachineConfig) -> float:
    """PIM power; every row of every crossbar switches one cell per cycle,
    so the workload's cc cancels out."""
    return m.ebit_pim * m.rows * m.xbs / m.cycle_time


def p_cpu(m: MachineConfig, duty: float = 1.0) -> float:
    """Bus power at the given duty cycle (1.0 = bus never idle)."""
    if not 0.0 <= duty <= 1.0:
        raise EvaluationError("duty must be in [0, 1]")
    return m.ebit_cpu * m.bw * duty


def epc(p: float, tp: float) -> float:
    """Energy per computation as power over throughput."""
    if tp <= 0:
        raise EvaluationError("throughput must be > 0")
    return p / tp


def p_combined(p_p: float, tp_p: float, p_c: float, tp_c: float, tp_comb: float) -> float:
    """Combined power: per-computation energies of both sides times the
    combined throughput."""
    if tp_p <= 0 or tp_c <= 0:
        raise EvaluationError("component throughputs must be > 0")
    return (p_p / tp_p + p_c / tp_c) * tp_comb


def evaluate(m: MachineConfig, w: WorkloadProfile) -> EvalResult:
    """Evaluate all nine outputs; throttles automatically when TDPs are set.

    cc == 0 with a nonzero combined DIO degenerates to CPU-only; a zero
    combined DIO degenerates to PIM-only; both zero is rejected.
    """
    validate_machine(m)
    validate_workload(w)
    cc = w.cc()
    if cc == 0 and w.dio_combined == 0:
        raise EvaluationError("cc and dio_combined cannot both be zero")
    if 0 < cc < 1:
        raise EvaluationError("cc must be 0 (no PIM work) or >= 1")

    n = m.xbs * m.rows
    # Per-computation times for the combined pipeline; a zero time means the
    # corresponding side is idle and the equations reduce to the pure case.
    t_p = 0.0 if cc == 0 else cc * m.cycle_time / n
    t_c = 0.0 if w.dio_combined == 0 else w.dio_combined / m.bw

    tp_p = UNBOUNDED if cc == 0 else n / (cc * m.cycle_time)
    tp_c_pure = UNBOUNDED if w.dio_cpu == 0 else m.bw / w.dio_cpu
    tp_c_comb = UNBOUNDED if w.dio_combined == 0 else m.bw / w.dio_combined
    tp_comb = 1.0 / (t_p + t_c)

    # Defining EPC as energy-per-bit times work keeps the additivity
    # epc_combined == epc_pim + Ebit_cpu*dio_combined exact in floats.
    epc_p = m.ebit_pim * cc
    epc_c_pure = m.ebit_cpu * w.dio_cpu
    epc_comb = epc_p + m.ebit_cpu * w.dio_combined

    total_t = t_p + t_c
    result = EvalResult(
        tp_pim=tp_p,
        tp_cpu=tp_c_pure,
        tp_combined=tp_comb,
        p_pim=p_pim(m),
        p_cpu=p_cpu(m),
        p_combined=epc_comb * tp_comb,
        epc_pim=epc_p,
        epc_cpu=epc_c_pure,
        epc_combined=epc_comb,
        tp_cpu_combined=tp_c_comb,
        duty_pim=t_p / total_t,
        duty_cpu=t_c / total_t,
    )
    if m.tdp_pim is not None or m.tdp_cpu is not None:
        result = throttle(result, m)
    return result


def throttle(result: EvalResult, m: MachineConfig) -> EvalResult:
    """Slow each side down just enough to respect its TDP.

    Throttling is uniform duty-cycle scaling: throughput and power scale by
    the same factor, so energy per computation is unchanged. Combined
    quantities are recomputed from the throttled component throughputs.
    """
    factor_p, factor_c = 1.0, 1.0
    flags: list[str] = []
    if m.tdp_pim is not None:
        if m.tdp_pim <= 0:
            raise EvaluationError("tdp_pim must be > 0")
        if result.p_pim > m.tdp_pim:
            factor_p = m.tdp_pim / result.p_pim
            flags.append("tdp_pim")
    if m.tdp_cpu is not None:
        if m.tdp_cpu <= 0:
            raise EvaluationError("tdp_cpu must be > 0")
        if result.p_cpu > m.tdp_cpu:
            factor_c = m.tdp_cpu / result.p_cpu
            flags.append("tdp_cpu")
    if factor_p == 1.0 and factor_c == 1.0:
        return replace(
            result,
            throttle_factor_pim=1.0,
            throttle_factor_cpu=1.0,
            tdp_flags=(),
        )

    tp_p = result.tp_pim * factor_p
    tp_c_comb = result.tp_cpu_combined * factor_c
    t_p = 0.0 if math.isinf(tp_p) else 1.0 / tp_p
    t_c = 0.0 if math.isinf(tp_c_comb) else 1.0 / tp_c_comb
    tp_comb = 1.0 / (t_p + t_c)
    total_t = t_p + t_c
    return replace(
        result,
        tp_pim=tp_p,
        tp_cpu=result.tp_cpu * factor_c,
        tp_combined=tp_comb,
        p_pim=result.p_pim * factor_p,
        p_cpu=result.p_cpu * factor_c,
        p_combined=result.epc_combined * tp_comb,
        tp_cpu_combined=tp_c_comb,
        duty_pim=t_p / total_t,
        duty_cpu=t_c / total_t,
        throttle_factor_pim=factor_p,
        throttle_factor_cpu=factor_c,
        tdp_flags=tuple(flags),
    )
