"""
Exact linear algebra over the rationals on sparse rows (dicts column -> value).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable


def _reduce(row: dict[int, Fraction], pivots: dict[int, dict[int, Fraction]]) -> dict[int, Fraction]:
    for column in [c for c in row if c in pivots]:
        factor = row.get(column)
        if not factor:
            continue
        for c, v in pivots[column].items():
            value = row.get(c, 0) - factor * v
            if value:
                row[c] = value
            else:
                row.pop(c, None)
    return row


def row_reduce(rows: Iterable[dict[int, object]], max_rank: int | None = None) -> dict[int, dict[int, Fraction]]:
    """Reduced row echelon form, keyed by pivot column. Stops reading rows once max_rank pivots exist."""
    pivots: dict[int, dict[int, Fraction]] = {}
    if max_rank is not None and max_rank <= 0:
        return pivots
    for raw in rows:
        row = {c: Fraction(v) for c, v in raw.items() if v}
        row = _reduce(row, pivots)
        if not row:
            continue
        pivot = min(row)
        scale = row[pivot]
        row = {c: v / scale for c, v in row.items()}
        for other in pivots.values():
            factor = other.get(pivot)
            if factor:
                for c, v in row.items():
                    value = other.get(c, 0) - factor * v
                    if value:
                        other[c] = value
                    else:
                        other.pop(c, None)
        pivots[pivot] = row
        if max_rank is not None and len(pivots) >= max_rank:
            break
    return pivots


def nullspace(
    rows: Iterable[dict[int, object]], ncols: int, max_rank: int | None = None
) -> list[list[Fraction]]:
    """Basis of {x : row·x = 0 for every row}, one vector per free column, in column order."""
    pivots = row_reduce(rows, max_rank)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for pivot, row in pivots.items():
            if free in row:
                vector[pivot] = -row[free]
        basis.append(vector)
    return basis