"""Analytical throughput/power/energy model for PIM+CPU machines.

Ten parameters in, nine outputs out: PIM-only, CPU-only, and combined
throughput [OPS], power [W], and energy per computation [J/OP], plus
cycle-count builders for common data layouts, published case-study
scenarios, and design-space sweep/iso-line/crossover generators.
"""

from .complexity import (
    ComplexitySpec,
    ConvolutionCycles,
    LayoutClass,
    OpKind,
    compile_spec,
    convolution_cc,
    fipdp_cc,
    floatpim_cc,
    oc_cycles,
    pac_cycles,
    reduction_cc,
)
from .config import ConfigDocument, parse_config, render_config
from .engine import EvalResult, evaluate, throttle
from .errors import (
    BitletError,
    ConfigError,
    EvaluationError,
    UnachievableLevelError,
    UnknownScenarioError,
    ValidationError,
)
from .quantities import (
    MachineConfig,
    WorkloadProfile,
    check_capacity,
    from_gops,
    to_gops,
    validate_machine,
    validate_workload,
)
from .scenarios import Scenario, ScenarioReport, get_scenario, list_scenarios, run_scenario
from .sweep import AxisSpec, CrossoverCurve, IsoLine, SweepGrid, crossover_xbs_bw, grid_sweep, iso_line_cc_dio
from .tables import ResultColumn, emit_table, metrics_dict
from .usecases import (
    Compact,
    CpuPure,
    CpuPureTwoPass,
    Filter1,
    Filter2,
    Hybrid,
    PimPure,
    Reduction0,
    Reduction1,
    UseCase,
    dio_per_computation,
    total_transfer_bits,
    transfer_reduction_bits,
)

__version__ = "0.1.0"

__all__ = [
    "AxisSpec",
    "BitletError",
    "Compact",
    "ComplexitySpec",
    "ConfigDocument",
    "ConfigError",
    "ConvolutionCycles",
    "CpuPure",
    "CpuPureTwoPass",
    "CrossoverCurve",
    "EvalResult",
    "EvaluationError",
    "Filter1",
    "Filter2",
    "Hybrid",
    "IsoLine",
    "LayoutClass",
    "MachineConfig",
    "OpKind",
    "PimPure",
    "Reduction0",
    "Reduction1",
    "ResultColumn",
    "Scenario",
    "ScenarioReport",
    "SweepGrid",
    "UnachievableLevelError",
    "UnknownScenarioError",
    "UseCase",
    "ValidationError",
    "WorkloadProfile",
    "check_capacity",
    "compile_spec",
    "convolution_cc",
    "crossover_xbs_bw",
    "dio_per_computation",
    "emit_table",
    "evaluate",
    "fipdp_cc",
    "floatpim_cc",
    "from_gops",
    "get_scenario",
    "grid_sweep",
    "iso_line_cc_dio",
    "list_scenarios",
    "metrics_dict",
    "oc_cycles",
    "pac_cycles",
    "parse_config",
    "reduction_cc",
    "render_config",
    "run_scenario",
    "throttle",
    "to_gops",
    "total_transfer_bits",
    "transfer_reduction_bits",
    "validate_machine",
    "validate_workload",
]
