"""
Standard reverse composition tableaux, straight and skew.

Rows are stored top to bottom, each listing the entries of its non-inner cells
left to right. Inner cells of a skew shape are absent; the triple rule reads
them as infinity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from happ.combinat.compositions import (
    EMPTY,
    Composition,
    SkewShapePair,
    as_composition,
    box_add,
    comp_of,
    fits_bottom_left,
    inner_row_lengths,
)
from happ.combinat.errors import TableauError
from happ.combinat.permutations import Permutation

INF = math.inf

Cell = tuple[int, int]


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    rule: str | None = None
    cells: tuple[Cell, ...] = ()
    detail: str = ""

    def __bool__(self):
        return self.valid

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "rule": self.rule,
            "cells": [list(cell) for cell in self.cells],
            "detail": self.detail,
        }


def _normalize_rows(rows) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in row) for row in rows)


def check_filling(outer, rows, inner=EMPTY) -> ValidationReport:
    """
    Validate a (skew) filling. Rules are tried in order: grid, row,
    first_column, triple. The first violated rule is reported with its cells.
    """
    outer, inner = as_composition(outer), as_composition(inner)
    rows = _normalize_rows(rows)

    if not fits_bottom_left(inner, outer):
        return ValidationReport(False, "grid", (), f"{inner} does not fit inside {outer}")
    skips = inner_row_lengths(outer, inner)
    if len(rows) != outer.length:
        return ValidationReport(False, "grid", (), f"expected {outer.length} rows, got {len(rows)}")

    grid: dict[Cell, int] = {}
    for r, (row, skip, part) in enumerate(zip(rows, skips, outer.parts), start=1):
        if len(row) != part - skip:
            return ValidationReport(
                False, "grid", (), f"row {r} needs {part - skip} entries, got {len(row)}"
            )
        for offset, value in enumerate(row):
            grid[(r, skip + offset + 1)] = value

    if sorted(grid.values()) != list(range(1, len(grid) + 1)):
        return ValidationReport(False, "grid", (), f"entries are not a bijection onto 1..{len(grid)}")

    def at(r, c):
        if (r, c) in grid:
            return grid[(r, c)]
        if 1 <= r <= outer.length and 1 <= c <= skips[r - 1]:
            return INF
        return None

    for (r, c), value in sorted(grid.items()):
        right = grid.get((r, c + 1))
        if right is not None and right >= value:
            return ValidationReport(False, "row", ((r, c), (r, c + 1)), "rows must decrease left to right")

    first_column = sorted((r, v) for (r, c), v in grid.items() if c == 1)
    for (r1, v1), (r2, v2) in zip(first_column, first_column[1:]):
        if v1 >= v2:
            return ValidationReport(
                False, "first_column", ((r1, 1), (r2, 1)), "first column must increase top to bottom"
            )

    for (j, c), b in sorted(grid.items()):
        if c < 2:
            continue
        for i in range(1, j):
            a = at(i, c - 1)
            if a is None or a < b:
                continue
            beside = at(i, c)
            if beside is None or beside < b:
                return ValidationReport(
                    False, "triple", ((i, c - 1), (i, c), (j, c)), "triple rule violated"
                )

    return ValidationReport(True)


def is_valid_srct(shape, rows) -> ValidationReport:
    return check_filling(shape, rows)


@dataclass(frozen=True)
class SkewSrct:
    outer: Composition
    rows: tuple[tuple[int, ...], ...]
    inner: Composition = field(default=EMPTY)

    def __post_init__(self):
        object.__setattr__(self, "outer", as_composition(self.outer))
        object.__setattr__(self, "inner", as_composition(self.inner))
        object.__setattr__(self, "rows", _normalize_rows(self.rows))

    @property
    def shape(self):
        return SkewShapePair(self.outer, self.inner)

    @property
    def is_straight(self) -> bool:
        return self.inner.length == 0

    @cached_property
    def skips(self) -> tuple[int, ...]:
        return inner_row_lengths(self.outer, self.inner)

    @cached_property
    def grid(self) -> dict[Cell, int]:
        return {
            (r, skip + offset + 1): value
            for r, (row, skip) in enumerate(zip(self.rows, self.skips), start=1)
            for offset, value in enumerate(row)
        }

    @cached_property
    def positions(self) -> dict[int, Cell]:
        return {value: cell for cell, value in self.grid.items()}

    @property
    def n(self) -> int:
        return len(self.grid)

    def value_at(self, row: int, column: int):
        """Entry of a cell, INF on inner cells, None outside the diagram."""
        if (row, column) in self.grid:
            return self.grid[(row, column)]
        if 1 <= row <= self.outer.length and 1 <= column <= self.skips[row - 1]:
            return INF
        return None

    def check(self) -> ValidationReport:
        return check_filling(self.outer, self.rows, self.inner)

    def descent_set(self) -> frozenset[int]:
        pos = self.positions
        return frozenset(i for i in range(1, self.n) if pos[i + 1][1] >= pos[i][1])

    def descent_composition(self) -> Composition:
        return comp_of(self.descent_set(), self.n)

    def column_reading(self) -> tuple[int, ...]:
        return tuple(self.grid[cell] for cell in sorted(self.grid, key=lambda rc: (rc[1], rc[0])))

    def column_word(self) -> Permutation:
        return Permutation(self.column_reading())

    def columns(self) -> list[list[int]]:
        width = max(self.outer.parts, default=0)
        result = [[] for _ in range(width)]
        for (r, c) in sorted(self.grid, key=lambda rc: (rc[1], rc[0])):
            result[c - 1].append(self.grid[(r, c)])
        return [column for column in result if column]

    def standardized_column_word(self) -> tuple[tuple[int, ...], ...]:
        return tuple(_standardize(column) for column in self.columns())

    def swap(self, i: int) -> "SkewSrct":
        """s_i(τ): exchange the entries i and i+1, no validation."""
        exchange = {i: i + 1, i + 1: i}
        return self._with_rows(tuple(tuple(exchange.get(v, v) for v in row) for row in self.rows))

    def _with_rows(self, rows) -> "SkewSrct":
        return SkewSrct(self.outer, rows, self.inner)

    def __str__(self):
        return "/".join(
            ",".join(["*"] * skip + [str(v) for v in row])
            for row, skip in zip(self.rows, self.skips)
        )

    def to_json(self) -> dict:
        payload = {"shape": self.outer.to_json(), "rows": [list(row) for row in self.rows]}
        if not self.is_straight:
            payload["inner"] = self.inner.to_json()
        return payload


class Srct(SkewSrct):
    """A straight SRCT: a skew one with empty inner shape."""

    def __init__(self, shape, rows):
        super().__init__(outer=shape, rows=rows, inner=EMPTY)

    @property
    def shape(self) -> Composition:
        return self.outer

    def _with_rows(self, rows) -> "Srct":
        return Srct(self.outer, rows)

    @classmethod
    def from_rows(cls, shape, rows) -> "Srct":
        report = is_valid_srct(shape, rows)
        if not report:
            raise TableauError(f"not an SRCT ({report.rule}): {report.detail}")
        return cls(shape, rows)


def _standardize(column) -> tuple[int, ...]:
    order = sorted(column)
    return tuple(order.index(v) + 1 for v in column)


def swap(tableau: SkewSrct, i: int) -> SkewSrct:
    return tableau.swap(i)


def parse_tableau(text: str) -> SkewSrct:
    """
    Read "5,4,2/8,7,6,3": rows top to bottom separated by '/', inner cells
    written as '*'. Returns an Srct when no inner cell appears.
    """
    if text is None or not text.strip():
        raise TableauError("empty tableau text")
    rows, stars = [], []
    for r, chunk in enumerate(text.strip().split("/"), start=1):
        tokens = [token.strip() for token in chunk.split(",") if token.strip()]
        inner_count = 0
        while inner_count < len(tokens) and tokens[inner_count] == "*":
            inner_count += 1
        entries = tokens[inner_count:]
        if not all(token.isascii() and token.isdecimal() for token in entries):
            raise TableauError(f"row {r} of {text!r} has a non-integer entry")
        rows.append(tuple(int(token) for token in entries))
        stars.append(inner_count)

    outer = Composition(tuple(s + len(row) for s, row in zip(stars, rows)))
    inner = Composition(tuple(s for s in stars if s > 0))
    if inner_row_lengths(outer, inner) != tuple(stars):
        raise TableauError(f"inner cells of {text!r} are not bottom-left justified")

    report = check_filling(outer, rows, inner)
    if not report:
        raise TableauError(f"not an SRCT ({report.rule}): {report.detail}")
    if inner.length == 0:
        return Srct(outer, rows)
    return SkewSrct(outer, rows, inner)


def _fillings(outer: Composition, inner: Composition, columns_increasing: bool) -> list[tuple]:
    """
    Place n, n-1, …, 1 one at a time. A cell is open when everything that must
    hold a larger entry already does, so every completed filling is an SRCT.
    """
    skips = inner_row_lengths(outer, inner)
    length = outer.length
    cells = [
        (r, c)
        for r, (skip, part) in enumerate(zip(skips, outer.parts), start=1)
        for c in range(skip + 1, part + 1)
    ]
    first_column = [r for (r, c) in cells if c == 1]
    filled: dict[Cell, int] = {}
    results = []

    def is_set(r, c):
        return (r, c) in filled or c <= skips[r - 1]

    def in_diagram(r, c):
        return 1 <= r <= length and 1 <= c <= outer.parts[r - 1]

    def is_open(r, c):
        if (r, c) in filled:
            return False
        if c > 1 and not is_set(r, c - 1):
            return False
        if c == 1 and any(below > r and (below, 1) not in filled for below in first_column):
            return False
        if columns_increasing and any(
            (below, c) not in filled for below in range(r + 1, length + 1)
            if in_diagram(below, c) and c > skips[below - 1]
        ):
            return False
        if c >= 2:
            for i in range(1, r):
                if in_diagram(i, c - 1) and is_set(i, c - 1):
                    if not in_diagram(i, c) or not is_set(i, c):
                        return False
        return True

    def extend(value):
        if value == 0:
            results.append(tuple(
                tuple(filled[(r, c)] for c in range(skip + 1, part + 1))
                for r, (skip, part) in enumerate(zip(skips, outer.parts), start=1)
            ))
            return
        for cell in cells:
            if is_open(*cell):
                filled[cell] = value
                extend(value - 1)
                del filled[cell]

    extend(len(cells))
    return results


@lru_cache(maxsize=1024)
def _srct_rows(alpha: Composition, columns_increasing: bool) -> tuple:
    found = []
    for rows in _fillings(alpha, EMPTY, columns_increasing):
        tableau = Srct(alpha, rows)
        report = tableau.check()
        if not report:
            raise TableauError(f"enumeration produced an invalid filling of {alpha}: {report.rule}")
        found.append(tableau)
    return tuple(sorted(found, key=SkewSrct.column_reading))


def enumerate_srct(alpha, columns_increasing: bool = False) -> list[Srct]:
    """All SRCTs of shape α sorted by column word; only those with increasing columns on request."""
    return list(_srct_rows(as_composition(alpha), columns_increasing))


@lru_cache(maxsize=1024)
def _skew_rows(skew: SkewShapePair) -> tuple:
    found = []
    for rows in _fillings(skew.outer, skew.inner, False):
        tableau = SkewSrct(skew.outer, rows, skew.inner)
        report = tableau.check()
        if not report:
            raise TableauError(f"enumeration produced an invalid filling of {skew}: {report.rule}")
        found.append(tableau)
    return tuple(sorted(found, key=SkewSrct.column_reading))


def enumerate_skew_srct(skew: SkewShapePair) -> list[SkewSrct]:
    return list(_skew_rows(skew))


def has_skew_filling(outer, inner) -> bool:
    """Whether the cells of outer outside a bottom-left inner admit any skew filling."""
    outer, inner = as_composition(outer), as_composition(inner)
    if not fits_bottom_left(inner, outer):
        return False
    return bool(_fillings(outer, inner, False))


def canonical_tableau(alpha) -> Srct:
    alpha = as_composition(alpha)
    rows, start = [], 0
    for part in alpha.parts:
        rows.append(tuple(range(start + part, start, -1)))
        start += part
    return Srct(alpha, rows)


@dataclass(frozen=True)
class GrowthWord:
    word: tuple[int, ...]

    def apply(self) -> Composition | None:
        return apply_growth_word(self.word)

    def to_json(self) -> list[int]:
        return list(self.word)


def growth_word(tableau: Srct) -> GrowthWord:
    """Letter j is the column of entry j."""
    pos = tableau.positions
    return GrowthWord(tuple(pos[j][1] for j in range(1, tableau.n + 1)))


def apply_box_adding(i: int, alpha) -> Composition | None:
    return box_add(i, as_composition(alpha))


def apply_growth_word(word) -> Composition | None:
    """t_{i_1} ⋯ t_{i_n} applied to the empty composition, rightmost letter first."""
    current = EMPTY
    for letter in reversed(tuple(word)):
        current = box_add(letter, current)
        if current is None:
            return None
    return current


def remove_one(tableau: Srct) -> Srct:
    """τ₋₁: delete the cell of 1, drop an emptied row, subtract 1 everywhere."""
    if not tableau.is_straight:
        raise TableauError("remove_one is defined on straight tableaux")
    if tableau.n == 0:
        raise TableauError("cannot remove 1 from the empty tableau")
    rows = [[v - 1 for v in row if v != 1] for row in tableau.rows]
    rows = [row for row in rows if row]
    return Srct(Composition(tuple(len(row) for row in rows)), rows)


def split(tableau: Srct, m: int) -> tuple[SkewSrct, Srct]:
    """
    (τ_{≤m}, τ_{>m}). The entries above m fill a bottom-left shape β; the low
    part lives on α//β, the high part on β with m subtracted.
    """
    if not 0 <= m <= tableau.n:
        raise TableauError(f"split point {m} outside [0, {tableau.n}]")
    counts = tuple(sum(1 for v in row if v > m) for row in tableau.rows)
    beta = Composition(tuple(count for count in counts if count > 0))
    if inner_row_lengths(tableau.outer, beta) != counts:
        raise TableauError(f"entries above {m} do not form a bottom-left shape in {tableau}")
    low = SkewSrct(tableau.outer, tuple(row[count:] for row, count in zip(tableau.rows, counts)), beta)
    high = Srct(beta, tuple(tuple(v - m for v in row[:count]) for row, count in zip(tableau.rows, counts) if count))
    return low, high
