"""The a_p / b_p / c_p table, with comparison against published values."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .integrality import james_complex, james_quaternionic, real_period

__all__ = ["REFERENCE_TABLE", "Reference", "TableRow", "build_table", "agrees_with_reference"]


@dataclass(frozen=True)
class Reference:
    """A published entry: an exact integer, or ``mantissa x 10^exponent`` estimate."""

    value: Optional[int] = None
    mantissa: Optional[str] = None
    exponent: Optional[int] = None

    @property
    def exact(self) -> bool:
        return self.value is not None

    def to_json(self):
        if self.exact:
            return {"kind": "exact", "value": self.value}
        return {"kind": "estimate", "value": f"{self.mantissa}e{self.exponent}"}


def _e(m: str, x: int) -> Reference:
    return Reference(mantissa=m, exponent=x)


def _x(v: int) -> Reference:
    return Reference(value=v)


REFERENCE_TABLE: dict[str, dict[int, Reference]] = {
    "a": {p: _x(v) for p, v in enumerate(
        [2, 4, 4, 8, 8, 8, 8, 16, 32, 64, 64, 128, 128, 128], start=1)},
    "b": {**{p: _x(v) for p, v in enumerate(
        [2, 24, 24, 2880, 2880, 362880, 362880, 29030400, 29030400,
         958003200, 958003200], start=1)},
          12: _e("3.14", 13), 13: _e("3.14", 13), 14: _e("6.28", 13)},
    "c": {**{p: _x(v) for p, v in enumerate(
        [24, 1440, 362880, 14515200, 958003200], start=1)},
          6: _e("1.57", 13), 7: _e("6.28", 13), 8: _e("2.56", 17), 9: _e("9.20", 20),
          10: _e("1.01", 24), 11: _e("9.31", 25), 12: _e("6.10", 29), 13: _e("1.22", 30),
          14: _e("2.12", 33)},
}


def agrees_with_reference(value: int, ref: Reference) -> bool:
    """Exact equality, or agreement with an estimate to its printed digits."""
    if ref.exact:
        return value == ref.value
    digits = len(ref.mantissa.replace(".", ""))
    scale = 10 ** (ref.exponent - digits + 1)
    # round half up to the printed precision
    rounded = (value + scale // 2) // scale
    return rounded == int(ref.mantissa.replace(".", ""))


@dataclass
class TableRow:
    p: int
    values: dict[str, Optional[int]] = field(default_factory=dict)
    skipped: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out: dict = {"p": self.p}
        for name, v in self.values.items():
            key = f"{name}_p"
            out[key] = "skipped" if v is None else v
            ref = REFERENCE_TABLE.get(name, {}).get(self.p)
            if ref is not None:
                out[f"{key}_reference"] = ref.to_json()
                out[f"{key}_matches_reference"] = (
                    None if v is None else agrees_with_reference(v, ref))
        return out


_COMPUTE = {"a": real_period, "b": james_complex, "c": james_quaternionic}


def build_table(max_p: int, fields: str = "abc", budget_seconds: float = 300.0) -> list[TableRow]:
    """Rows ``1..max_p``; a cell is skipped once the time budget is used up.

    The budget is checked before each cell, so a single cell may overrun it.
    """
    if max_p < 1:
        raise ValueError("max_p must be >= 1")
    for f in fields:
        if f not in _COMPUTE:
            raise ValueError(f"unknown table field {f!r}; use a, b, c")
    start = time.monotonic()
    rows = []
    for p in range(1, max_p + 1):
        row = TableRow(p)
        for f in fields:
            if time.monotonic() - start > budget_seconds:
                row.values[f] = None
                row.skipped.append(f)
                continue
            row.values[f] = _COMPUTE[f](p)
        rows.append(row)
    return rows
