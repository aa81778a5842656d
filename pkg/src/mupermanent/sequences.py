"""Independent routes to the terms of OEIS A001792: 1, 3, 8, 20, 48, 112, ...

The count of canonical mu-labelings of the path on m vertices lines up
with term ``m - 2``; :func:`cross_validate` tabulates every route side by
side.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .labeling import count_path_labelings
from .matrix import SquareMatrix, determinant_oracle

__all__ = [
    "a001792_closed_form",
    "a001792_recurrence",
    "a001792_det_3diag",
    "a001792_det_toeplitz",
    "CrossValidationRow",
    "cross_validate",
    "format_table",
    "format_csv",
]


def a001792_closed_form(k: int) -> int:
    """(k + 2) * 2**(k - 1)."""
    if k < 0:
        raise ValueError(f"index must be nonnegative, got {k}")
    value = (k + 2) * Fraction(2) ** (k - 1)
    assert value.denominator == 1
    return value.numerator


def a001792_recurrence(k: int) -> int:
    """a(0) = 1, a(1) = 3, a(k) = 4 a(k-1) - 4 a(k-2)."""
    if k < 0:
        raise ValueError(f"index must be nonnegative, got {k}")
    a, b = 1, 3
    for _ in range(k):
        a, b = b, 4 * b - 4 * a
    return a


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer determinant, got {x}")
    return x.numerator


def a001792_det_3diag(k: int) -> int:
    """Determinant of the k-by-k matrix with 3 on the diagonal and 1 elsewhere.

    k = 0 is the empty determinant, 1.
    """
    if k < 0:
        raise ValueError(f"order must be nonnegative, got {k}")
    if k == 0:
        return 1
    M = SquareMatrix([[3 if p == q else 1 for q in range(k)] for p in range(k)])
    return _as_int(determinant_oracle(M))


def a001792_det_toeplitz(k: int) -> int:
    """|det| of the k-by-k Toeplitz matrix with entries |p - q| + 1; equals a(k - 1)."""
    if k < 1:
        raise ValueError(f"order must be at least 1, got {k}")
    M = SquareMatrix([[abs(p - q) + 1 for q in range(k)] for p in range(k)])
    return abs(_as_int(determinant_oracle(M)))


@dataclass(frozen=True)
class CrossValidationRow:
    k: int
    closed: int
    recurrence: int
    det3: int
    toeplitz: int
    enumeration: int | None

    @property
    def values(self) -> list[int]:
        vals = [self.closed, self.recurrence, self.det3, self.toeplitz]
        if self.enumeration is not None:
            vals.append(self.enumeration)
        return vals

    @property
    def agree(self) -> bool:
        return len(set(self.values)) == 1


def cross_validate(k_max: int, enumerate_up_to: int = 9, engine: str = "pruned") -> list[CrossValidationRow]:
    """One row per k in 0..k_max; path counts (order k + 2) only for k <= enumerate_up_to."""
    if k_max < 0:
        raise ValueError(f"k_max must be nonnegative, got {k_max}")
    rows = []
    for k in range(k_max + 1):
        enum = count_path_labelings(k + 2, engine=engine) if k <= enumerate_up_to else None
        rows.append(
            CrossValidationRow(
                k=k,
                closed=a001792_closed_form(k),
                recurrence=a001792_recurrence(k),
                det3=a001792_det_3diag(k),
                toeplitz=a001792_det_toeplitz(k + 1),
                enumeration=enum,
            )
        )
    return rows


_COLUMNS = ("k", "closed", "recurrence", "det3", "toeplitz", "enumeration")


def _cells(row: CrossValidationRow) -> list[str]:
    return [str(getattr(row, c)) if getattr(row, c) is not None else "" for c in _COLUMNS]


def format_table(rows: list[CrossValidationRow]) -> str:
    body = [_cells(r) + ["yes" if r.agree else "NO"] for r in rows]
    header = list(_COLUMNS) + ["agree"]
    widths = [max(len(x) for x in col) for col in zip(header, *body)]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(line, widths)).rstrip() for line in [header, *body]]
    return "\n".join(lines) + "\n"


def format_csv(rows: list[CrossValidationRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_COLUMNS)
    for r in rows:
        writer.writerow(_cells(r))
    return buf.getvalue()
