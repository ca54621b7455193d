"""Data-transfer volume and per-computation DIO for the standard use cases.

Every use case records the original per-record size `s` so the saved
transfer can be measured against the move-everything baseline of n*s bits.
Per-record DIO values are computed in closed form; totals are DIO * n so the
two stay consistent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ValidationError


def _check_size(field: str, value: float) -> None:
    if not math.isfinite(value) or value < 0:
        raise ValidationError(field, "must be a finite size >= 0")


def _check_selectivity(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValidationError("p", "selectivity must be in [0, 1]")


@dataclass(frozen=True)
class CpuPure:
    """Baseline: every record moves to the CPU in full."""

    s: float

    def __post_init__(self):
        _check_size("s", self.s)

    def dio(self, n: float) -> float:
        return self.s


@dataclass(frozen=True)
class CpuPureTwoPass:
    """CPU-only filtering that first reads the s1-bit selection fields, then
    re-reads the selected records in full."""

    s: float
    s1: float
    p: float

    def __post_init__(self):
        _check_size("s", self.s)
        _check_size("s1", self.s1)
        if self.s1 > self.s:
            raise ValidationError("s1", "must be <= s")
        _check_selectivity(self.p)

    def dio(self, n: float) -> float:
        return self.s1 + self.p * self.s


@dataclass(frozen=True)
class PimPure:
    """Everything computed in memory; nothing moves."""

    s: float

    def __post_init__(self):
        _check_size("s", self.s)

    def dio(self, n: float) -> float:
        return 0.0


@dataclass(frozen=True)
class Compact:
    """Each record shrinks from s to s1 bits before transfer."""

    s: float
    s1: float

    def __post_init__(self):
        _check_size("s", self.s)
        _check_size("s1", self.s1)
        if self.s1 > self.s:
            raise ValidationError("s1", "must be <= s")

    def dio(self, n: float) -> float:
        return self.s1


@dataclass(frozen=True)
class Filter1:
    """Selected records move in full plus a one-bit-per-record selection vector."""

    s: float
    p: float

    def __post_init__(self):
        _check_size("s", self.s)
        _check_selectivity(self.p)

    def dio(self, n: float) -> float:
        return self.s * self.p + 1.0


@dataclass(frozen=True)
class Filter2:
    """Selected records move in full plus a log2(n)-bit index each.

    The index width is real-valued by default to match the closed-form
    algebra; set ceil_index for the physical whole-bit variant.
    """

    s: float
    p: float
    ceil_index: bool = False

    def __post_init__(self):
        _check_size("s", self.s)
        _check_selectivity(self.p)

    def dio(self, n: float) -> float:
        index_bits = math.log2(n)
        if self.ceil_index:
            index_bits = math.ceil(index_bits)
        return self.p * (self.s + index_bits)


@dataclass(frozen=True)
class Hybrid:
    """Compact and filter combined: selected records move at s1 bits plus the
    bit vector."""

    s: float
    s1: float
    p: float

    def __post_init__(self):
        _check_size("s", self.s)
        _check_size("s1", self.s1)
        if self.s1 > self.s:
            raise ValidationError("s1", "must be <= s")
        _check_selectivity(self.p)

    def dio(self, n: float) -> float:
        return self.p * self.s1 + 1.0


@dataclass(frozen=True)
class Reduction0:
    """Textbook reduction: all n records collapse to one s1-bit result."""

    s: float
    s1: float

    def __post_init__(self):
        _check_size("s", self.s)
        _check_size("s1", self.s1)

    def dio(self, n: float) -> float:
        return self.s1 / n


@dataclass(frozen=True)
class Reduction1:
    """Per-crossbar reduction: one s1-bit interim result per r rows goes to
    the CPU for the final pass."""

    s: float
    s1: float
    r: float

    def __post_init__(self):
        _check_size("s", self.s)
        _check_size("s1", self.s1)
        if self.r < 1:
            raise ValidationError("r", "must be >= 1")

    def dio(self, n: float) -> float:
        return self.s1 / self.r


UseCase = (
    CpuPure
    | CpuPureTwoPass
    | PimPure
    | Compact
    | Filter1
    | Filter2
    | Hybrid
    | Reduction0
    | Reduction1
)


def _check_n(n: float) -> None:
    if n < 1:
        raise ValidationError("n", "must be >= 1")


def total_transfer_bits(uc: UseCase, n: float) -> float:
    """Bits moved between memory and CPU to process n records."""
    _check_n(n)
    if isinstance(uc, Reduction0):
        return uc.s1
    if isinstance(uc, Reduction1):
        return math.ceil(n / uc.r) * uc.s1
    return uc.dio(n) * n


def dio_per_computation(uc: UseCase, n: float) -> float:
    """Bits moved per accomplished computation (transfer total over n).

    Reduction over crossbars amortizes to s1/r per record regardless of n.
    """
    _check_n(n)
    return uc.dio(n)


def transfer_reduction_bits(uc: UseCase, n: float) -> float:
    """Transfer saved versus the move-everything baseline of n*s bits.

    Negative for the two-pass CPU variant when re-reading costs more than
    one full pass.
    """
    _check_n(n)
    return n * uc.s - total_transfer_bits(uc, n)
