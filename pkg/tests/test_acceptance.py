"""Acceptance suite: every exit criterion at its stated tolerance.

Each test is one criterion; the terminal summary prints one pass/fail line
per criterion (see conftest). Randomized properties run >= 1000 cases from
a fixed seed.
"""

import dataclasses
import json
import math
from pathlib import Path

import numpy as np
import pytest
from click.testing import CliRunner

from bitlet.cli import cli
from bitlet.complexity import ComplexitySpec, LayoutClass, OpKind, compile_spec, convolution_cc, fipdp_cc
from bitlet.config import ConfigDocument, parse_config, render_config
from bitlet.engine import evaluate, tp_combined
from bitlet.quantities import GIGA, MachineConfig, WorkloadProfile
from bitlet.scenarios import round_half_up, run_scenario
from bitlet.sweep import crossover_xbs_bw, iso_line_cc_dio
from bitlet.usecases import (
    Compact,
    CpuPure,
    Filter1,
    Filter2,
    Hybrid,
    PimPure,
    Reduction0,
    Reduction1,
    dio_per_computation,
    total_transfer_bits,
    transfer_reduction_bits,
)

CASES = 1000
DATA = Path(__file__).parent / "data"
DEFAULTS = MachineConfig()


def paper_round(value, decimals=0):
    return round_half_up(value, decimals)


def random_machine(rng) -> MachineConfig:
    return MachineConfig(
        xbs=float(rng.integers(1, 65537)),
        rows=float(rng.integers(1, 4097)),
        cycle_time=10.0 ** rng.uniform(-10, -6),
        ebit_pim=10.0 ** rng.uniform(-16, -11),
        bw=10.0 ** rng.uniform(9.5, 13.5),
        ebit_cpu=10.0 ** rng.uniform(-13, -10),
    )


def random_workload(rng) -> WorkloadProfile:
    return WorkloadProfile(
        oc=float(rng.uniform(1, 1e5)),
        pac=float(rng.uniform(0, 1e5)),
        dio_cpu=float(rng.uniform(0.01, 512)),
        dio_combined=float(rng.uniform(0.01, 512)),
    )


def test_criterion_01_shifted_vector_add_walkthrough():
    """Defaults + 16-bit shifted vector-add reproduce all worked values."""
    w = WorkloadProfile(oc=144, pac=512, dio_cpu=48, dio_combined=16)
    r = evaluate(DEFAULTS, w)
    assert r.tp_pim / GIGA == pytest.approx(159.84, abs=0.005)
    assert paper_round(r.tp_pim / GIGA) == 160
    assert paper_round(r.tp_combined / GIGA, 1) == 44.9
    assert paper_round(r.p_pim, 1) == 10.5
    assert paper_round(r.p_cpu) == 15
    assert paper_round(r.p_combined, 1) == 13.7
    assert paper_round(r.epc_cpu * GIGA, 2) == 0.72
    assert paper_round(r.epc_combined * GIGA, 2) == 0.31


def test_criterion_02_transfer_throughput_row():
    """DIO {48, 32, 16, 3} at 1 Tbps -> {20.8, 31.3, 62.5, 333.3} GOPS."""
    for dio, expected in [(48, 20.8), (32, 31.3), (16, 62.5), (3, 333.3)]:
        w = WorkloadProfile(oc=0, dio_cpu=dio, dio_combined=dio)
        r = evaluate(DEFAULTS, w)
        assert paper_round(r.tp_cpu / GIGA, 1) == expected, f"dio={dio}"


def test_criterion_03_binary_operation_columns():
    """All five published binary-operation columns at printed precision."""
    columns = [
        (32, 48, 16, 3277, 0, 61.3, 14.9),
        (144, 48, 16, 728, 0, 57.6, 14.6),
        (1600, 48, 16, 65.5, 1, 32.0, 12.8),
        (6400, 96, 32, 16.4, 1, 10.7, 12.0),
        (25600, 192, 64, 4.1, 1, 3.2, 11.4),
    ]
    for cc, dio_cpu, dio_comb, tpp, tpp_dec, tcomb, pcomb in columns:
        r = evaluate(DEFAULTS, WorkloadProfile(oc=cc, dio_cpu=dio_cpu, dio_combined=dio_comb))
        assert paper_round(r.tp_pim / GIGA, tpp_dec) == tpp, f"cc={cc}"
        assert paper_round(r.tp_combined / GIGA, 1) == tcomb, f"cc={cc}"
        assert paper_round(r.p_combined, 1) == pcomb, f"cc={cc}"


def test_criterion_04_hadamard_rows():
    """All four element-wise product rows at cc=710."""
    rows = [(512, 512, 37, 23), (1024, 512, 74, 34), (4096, 1024, 591, 57), (16384, 1024, 2363, 61)]
    for xbs, r_rows, tpp, tcomb in rows:
        m = DEFAULTS.replace(xbs=float(xbs), rows=float(r_rows))
        r = evaluate(m, WorkloadProfile(oc=710, dio_cpu=32, dio_combined=16))
        assert paper_round(r.tp_pim / GIGA) == tpp, f"xbs={xbs}"
        assert paper_round(r.tp_combined / GIGA) == tcomb, f"xbs={xbs}"


def test_criterion_05_convolution_constants_and_throughputs():
    """Tabulated convolution cycle counts exact; derived throughputs match."""
    constants = {(3, 512): 69296, (3, 1024): 77488, (5, 512): 188592, (5, 1024): 204976}
    for (p, rows), cycles in constants.items():
        out = convolution_cc(p, 8, rows)
        assert out.cycles == cycles and not out.approximate
    throughputs = [
        (3, 1024, 1.4, 1.3), (3, 8192, 10.8, 9.2), (3, 65536, 86.6, 36.3),
        (5, 1024, 0.5, 0.5), (5, 8192, 4.1, 3.8), (5, 65536, 32.7, 21.5),
    ]
    for p, xbs, tpp, tcomb in throughputs:
        cc = constants[(p, 1024)]
        m = DEFAULTS.replace(xbs=float(xbs))
        r = evaluate(m, WorkloadProfile(oc=cc, dio_cpu=16, dio_combined=16))
        assert paper_round(r.tp_pim / GIGA, 1) == tpp, f"p={p} xbs={xbs}"
        assert paper_round(r.tp_combined / GIGA, 1) == tcomb, f"p={p} xbs={xbs}"


def test_criterion_06_bfloat16_rows():
    """Published-parameter and default-parameter bfloat16 rows at cc=336.5."""
    w = WorkloadProfile(oc=336.5, dio_cpu=16, dio_combined=0)
    native = evaluate(
        DEFAULTS.replace(xbs=65536.0, cycle_time=1.1e-9, ebit_pim=2.9e-16), w
    )
    assert paper_round(native.tp_pim / GIGA) == 181302
    assert paper_round(native.p_pim) == 18
    ratio = (native.tp_pim / GIGA) / native.p_pim
    assert abs(ratio - 10247) <= 0.005 * 10247  # power printed as integer

    default = evaluate(DEFAULTS.replace(xbs=65536.0), w)
    assert paper_round(default.tp_pim / GIGA) == 19943
    assert paper_round(default.p_pim) == 671
    assert paper_round((default.tp_pim / GIGA) / default.p_pim) == 30


def test_criterion_07_dot_product_case():
    """Multiply + per-crossbar reduction cycle count and the two configs."""
    assert fipdp_cc(8, 32, 512) == 4191
    small = evaluate(
        DEFAULTS.replace(xbs=512.0, rows=512.0),
        WorkloadProfile(oc=4191, dio_cpu=32, dio_combined=32 / 512),
    )
    assert paper_round(small.tp_pim / GIGA) == 6
    large = evaluate(
        DEFAULTS.replace(xbs=4096.0, rows=1024.0),
        WorkloadProfile(oc=4191, dio_cpu=32, dio_combined=32 / 1024),
    )
    assert paper_round(large.tp_pim / GIGA) == 100


class TestCriterion08Properties:
    """Structural invariants, >= 1000 randomized cases each."""

    def test_harmonic_combination_bound(self):
        rng = np.random.default_rng(8001)
        for _ in range(CASES):
            a = 10.0 ** rng.uniform(6, 14)
            b = 10.0 ** rng.uniform(6, 14)
            combined = tp_combined(a, b)
            assert combined < min(a, b)
            assert tp_combined(a, a) <= 0.5 * a * (1 + 1e-12)


    def test_pim_power_independent_of_cycle_count(self):
        rng = np.random.default_rng(8002)
        for _ in range(CASES):
            m = random_machine(rng)
            w1, w2 = random_workload(rng), random_workload(rng)
            assert evaluate(m, w1).p_pim == evaluate(m, w2).p_pim

    def test_cpu_power_independent_of_dio(self):
        rng = np.random.default_rng(8003)
        for _ in range(CASES):
            m = random_machine(rng)
            w1, w2 = random_workload(rng), random_workload(rng)
            assert evaluate(m, w1).p_cpu == evaluate(m, w2).p_cpu

    def test_scaling_leaves_power_invariant_and_divides_throughput(self):
        rng = np.random.default_rng(8004)
        for _ in range(CASES):
            m = random_machine(rng)
            w = random_workload(rng)
            k = 10.0 ** rng.uniform(0, 3)
            scaled = w.replace(oc=w.oc * k, pac=w.pac * k, dio_combined=w.dio_combined * k)
            r1, r2 = evaluate(m, w), evaluate(m, scaled)
            assert r2.p_combined == pytest.approx(r1.p_combined, rel=1e-10)
            assert r2.tp_combined == pytest.approx(r1.tp_combined / k, rel=1e-10)

    def test_time_accounting_oracle_matches_harmonic_form(self):
        rng = np.random.default_rng(8005)
        for _ in range(CASES):
            m = random_machine(rng)
            w = random_workload(rng)
            r = evaluate(m, w)
            n = m.xbs * m.rows
            direct = n / (w.cc() * m.cycle_time + n * w.dio_combined / m.bw)
            assert r.tp_combined == pytest.approx(direct, rel=1e-12)

    def test_layout_gap_bounds(self):
        rng = np.random.default_rng(8006)
        gathered = [
            LayoutClass.PARALLEL_ALIGNED,
            LayoutClass.GATHERED_PLACEMENT_ALIGNMENT,
            LayoutClass.GATHERED_UNALIGNED,
        ]
        scattered = [
            LayoutClass.SCATTERED_PLACEMENT_ALIGNMENT,
            LayoutClass.SCATTERED_UNALIGNED,
        ]
        layouts = gathered + scattered + [LayoutClass.REDUCTION_PER_XB]
        for _ in range(CASES):
            rows = int(rng.integers(2, 4097))
            width = int(rng.integers(1, max(2, min(rows, 256))))
            layout = layouts[int(rng.integers(0, len(layouts)))]
            exact = compile_spec(ComplexitySpec(OpKind.ADD, width, layout, rows=rows))
            approx = compile_spec(
                ComplexitySpec(OpKind.ADD, width, layout, rows=rows, exact=False)
            )
            gap = abs(sum(exact) - sum(approx))
            if layout in scattered:
                assert gap <= rows
            elif layout is LayoutClass.REDUCTION_PER_XB:
                assert gap == math.ceil(math.log2(rows)) * width - 1
            else:
                assert gap <= max(width, 1)

    def test_iso_line_collinearity(self):
        rng = np.random.default_rng(8007)
        for _ in range(CASES):
            m = random_machine(rng)
            peak = m.xbs * m.rows / (10.0 * m.cycle_time)
            level = peak * rng.uniform(1e-4, 0.5)
            line = iso_line_cc_dio(m, "tp_combined", level, points=5)
            cc, dio = line.cc, line.dio
            span = (dio[-1] - dio[0]) / (cc[-1] - cc[0])
            for i in range(1, 4):
                local = (dio[i] - dio[0]) / (cc[i] - cc[0])
                assert local == pytest.approx(span, rel=1e-9)

    def test_crossover_partition(self):
        rng = np.random.default_rng(8008)
        for _ in range(CASES):
            cc = float(rng.uniform(100, 30000))
            dio_cpu = float(rng.uniform(8, 256))
            dio_comb = dio_cpu * float(rng.uniform(0.05, 0.95))
            curve = crossover_xbs_bw(DEFAULTS, cc, dio_cpu, dio_comb)
            xbs = 10.0 ** rng.uniform(1, 4.8)
            bw = 10.0 ** rng.uniform(11.4, 13.2)
            boundary = curve.slope * bw
            if abs(xbs - boundary) <= 1e-9 * boundary:
                continue
            assert curve.better_side(xbs, bw) == curve.predicted_side(xbs, bw)


def test_criterion_09_usecase_conservation():
    """Transferred + saved == n*s for every row; filter closed form at the
    worked point."""
    assert dio_per_computation(Filter1(s=200, p=0.01), 10 ** 6) == 3.0
    rng = np.random.default_rng(9001)
    for _ in range(CASES):
        s = float(rng.integers(1, 8193))
        s1 = float(rng.integers(0, 8193))
        p = float(rng.integers(0, 257)) / 256.0
        n = 2 ** int(rng.integers(0, 31))
        r = float(2 ** int(rng.integers(0, 21)))
        cases = [
            CpuPure(s=s),
            PimPure(s=s),
            Compact(s=s, s1=min(s1, s)),
            Filter1(s=s, p=p),
            Filter2(s=s, p=p),
            Hybrid(s=s, s1=min(s1, s), p=p),
            Reduction0(s=s, s1=s1),
            Reduction1(s=s, s1=s1, r=r),
        ]
        for uc in cases:
            total = total_transfer_bits(uc, n)
            assert total + transfer_reduction_bits(uc, n) == n * s, uc


def test_criterion_10_interface_round_trip_and_golden(monkeypatch, tmp_path):
    """Config round-trip bit-exact; corrupted expectation fails the CLI;
    CSV golden file stable."""
    rng = np.random.default_rng(10001)
    for _ in range(200):
        doc = ConfigDocument(
            machine=MachineConfig(
                xbs=float(rng.uniform(1, 65536)),
                cycle_time=10.0 ** rng.uniform(-10, -6),
                ebit_pim=10.0 ** rng.uniform(-16, -11),
                bw=10.0 ** rng.uniform(10, 13.5),
            ),
            workload=WorkloadProfile(
                oc=float(rng.uniform(1, 1e5)),
                pac=float(rng.uniform(0, 1e5)),
                dio_cpu=float(rng.uniform(0.01, 256)),
                dio_combined=float(rng.uniform(0.01, 256)),
            ),
        )
        assert parse_config(render_config(doc)) == doc

    runner = CliRunner()
    out = runner.invoke(cli, ["scenario", "table6/add16"])
    assert out.exit_code == 0

    from bitlet import scenarios as cat

    real = cat.CATALOG["table6/add16"]
    corrupted = dataclasses.replace(
        real,
        expectations=tuple(
            dataclasses.replace(e, value=e.value + 1.0) for e in real.expectations
        ),
    )
    monkeypatch.setitem(cat.CATALOG, "table6/add16", corrupted)
    out = runner.invoke(cli, ["scenario", "table6/add16"])
    assert out.exit_code == 1
    monkeypatch.undo()

    from bitlet.scenarios import get_scenario
    from bitlet.tables import ResultColumn, emit_csv

    cols = []
    for sid in ["table6/add16", "table6/mult32", "walkthrough/shifted-vector-add"]:
        s = get_scenario(sid)
        cols.append(ResultColumn(s.id, s.machine, s.workload, evaluate(s.machine, s.workload)))
    assert emit_csv(cols) == (DATA / "golden_table6.csv").read_text()


def test_all_catalog_scenarios_pass():
    """Every published scenario reproduces its pinned values."""
    from bitlet.scenarios import CATALOG

    failures = []
    for sid in CATALOG:
        report = run_scenario(sid)
        if not report.passed:
            failures.append((sid, [c for c in report.checks if not c.passed]))
    assert not failures, failures
