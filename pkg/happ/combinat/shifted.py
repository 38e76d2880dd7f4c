"""
Shifted and truncated shifted reverse tableaux, the left-shift bijection with
the canonical class, and the closed-form counts checked against enumeration.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from math import comb, factorial, prod

from happ.combinat.compositions import (
    EMPTY,
    Composition,
    as_composition,
    compositions_of,
    delta_interval,
    is_strict_reverse_partition,
    strict_reverse_partitions_of,
)
from happ.combinat.equivalence import canonical_class
from happ.combinat.errors import FormulaError, ShapeError
from happ.combinat.hecke import pi_word
from happ.combinat.reports import CheckReport
from happ.combinat.tableaux import canonical_tableau, enumerate_srct

Cell = tuple[int, int]


@dataclass(frozen=True)
class ShiftedShape:
    """
    Shifted reverse diagram of a strict reverse partition α with k rows: row i
    spans columns k-i+1 … k-i+α_i. A truncation β shortens the last ℓ(β) rows
    from the right, row i losing β_{i+s-k} cells.
    """

    alpha: Composition
    truncation: Composition = EMPTY

    def __post_init__(self):
        alpha = as_composition(self.alpha)
        beta = as_composition(self.truncation)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "truncation", beta)
        if not is_strict_reverse_partition(alpha):
            raise ShapeError(f"{alpha} is not a strict reverse partition")
        if not is_strict_reverse_partition(beta):
            raise ShapeError(f"truncation {beta} is not a strict reverse partition")
        if beta.length > alpha.length:
            raise ShapeError(f"truncation {beta} has more rows than {alpha}")
        for cut, part in zip(self.row_cuts, alpha.parts):
            if cut > part:
                raise ShapeError(f"cannot truncate {beta} from {alpha}")

    @property
    def row_cuts(self) -> tuple[int, ...]:
        k, s = self.alpha.length, self.truncation.length
        return tuple(0 if i <= k - s else self.truncation.part(i + s - k) for i in range(1, k + 1))

    @cached_property
    def cells(self) -> frozenset[Cell]:
        k = self.alpha.length
        return frozenset(
            (i, c)
            for i, (part, cut) in enumerate(zip(self.alpha.parts, self.row_cuts), start=1)
            for c in range(k - i + 1, k - i + part - cut + 1)
        )

    @property
    def size(self) -> int:
        return len(self.cells)

    def rows(self) -> list[list[Cell]]:
        k = self.alpha.length
        return [sorted(c for c in self.cells if c[0] == i) for i in range(1, k + 1)]

    def __str__(self):
        if self.truncation.length == 0:
            return str(self.alpha)
        return f"{self.alpha}\\{self.truncation}"

    def to_json(self) -> dict:
        return {"alpha": self.alpha.to_json(), "truncation": self.truncation.to_json()}


def _available(cells: frozenset[Cell], filled: frozenset[Cell]):
    """Cells that may take the next smallest entry: right and upper neighbours done."""
    for (r, c) in sorted(cells - filled):
        right, up = (r, c + 1), (r - 1, c)
        if (right not in cells or right in filled) and (up not in cells or up in filled):
            yield (r, c)


def enumerate_shifted(shape: ShiftedShape) -> list[tuple[tuple[int, ...], ...]]:
    """Fillings with rows decreasing rightward and columns increasing downward, as row tuples."""
    cells = shape.cells
    rows = shape.rows()
    found = []
    values: dict[Cell, int] = {}

    def extend(filled: frozenset[Cell], value: int):
        if value > len(cells):
            found.append(tuple(tuple(values[cell] for cell in row) for row in rows))
            return
        for cell in _available(cells, filled):
            values[cell] = value
            extend(filled | {cell}, value + 1)
            del values[cell]

    extend(frozenset(), 1)
    return sorted(found)


def count_shifted(shape: ShiftedShape) -> int:
    """Number of fillings, memoised on the set of cells already holding the smallest entries."""
    cells = shape.cells

    @lru_cache(maxsize=None)
    def completions(filled: frozenset[Cell]) -> int:
        if len(filled) == len(cells):
            return 1
        return sum(completions(filled | {cell}) for cell in _available(cells, filled))

    return completions(frozenset())


def class_bijection(alpha) -> CheckReport:
    """
    Shifting row i of each member of E_α left by i-1 cells lands on a shifted
    reverse tableau of shape α, and every such tableau is hit exactly once.
    """
    alpha = as_composition(alpha)
    if not is_strict_reverse_partition(alpha):
        raise ShapeError(f"{alpha} is not a strict reverse partition")
    canonical = enumerate_srct(alpha, columns_increasing=True)
    shifted = set(enumerate_shifted(ShiftedShape(alpha)))
    images = {}
    for tableau in canonical:
        image = tableau.rows
        if image not in shifted:
            return CheckReport.failed("bijection", alpha, {
                "shape": str(alpha), "tableau": str(tableau), "reason": "image_not_shifted",
            })
        if image in images:
            return CheckReport.failed("bijection", alpha, {
                "shape": str(alpha), "tableau": str(tableau), "reason": "not_injective",
            })
        images[image] = tableau
    unmatched = shifted - set(images)
    if unmatched:
        first = min(unmatched)
        return CheckReport.failed("bijection", alpha, {
            "shape": str(alpha),
            "tableau": "/".join(",".join(str(v) for v in row) for row in first),
            "reason": "not_surjective",
        })
    return CheckReport.passed(
        "bijection", alpha, checked=len(images),
        pairs=[[str(tableau), [list(row) for row in image]] for image, tableau in sorted(images.items())],
    )


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def _exact_div(numerator: int, denominator: int, what: str) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise FormulaError(f"{what}: {numerator} is not divisible by {denominator}")
    return quotient


def staircase_count(m: int) -> int:
    """g_m = binom(m+1, 2)! / Π_{0≤i<j≤m} (i+j), the shifted staircase count."""
    denominator = prod(i + j for i, j in combinations(range(m + 1), 2))
    return _exact_div(factorial(comb(m + 1, 2)), denominator, f"g_{m}")


def staircase_double_formula(n: int) -> int:
    numerator = staircase_count(n + 1) * catalan(n + 1) * catalan(n - 1)
    return _exact_div(numerator, 2 * catalan(2 * n - 1), f"staircase_double({n})")


def truncated_staircase(top: int, bottom: int, k: int) -> ShiftedShape:
    """δ_{[top, bottom]} with δ_{k-1} cut away."""
    inner = delta_interval(k - 1, 1) if k >= 2 else EMPTY
    return ShiftedShape(delta_interval(top, bottom), inner)


def canonical_count(alpha) -> int:
    return len(enumerate_srct(alpha, columns_increasing=True))


@dataclass(frozen=True)
class CountReport:
    family: str
    parameter: dict
    formula: int
    enumerated: int

    @property
    def match(self) -> bool:
        return self.formula == self.enumerated

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "parameter": self.parameter,
            "formula": self.formula,
            "enumerated": self.enumerated,
            "match": self.match,
        }


FAMILIES = ("threes", "staircase_double", "staircase_truncated", "rectangle", "truncated_threes")


def count_formulas(family: str, **parameter) -> CountReport:
    """
    threes(k): 2^{k-1} vs |E_{(3^k)}|.
    staircase_double(n): closed form vs |E_{(1,2,…,n,n)}|.
    staircase_truncated(n): truncated δ_{n+1}∖δ_1 vs |E_{(1,2,…,n,n)}|.
    rectangle(n, k): truncated δ_{[n+k-1,n]}∖δ_{k-1} vs |E_{(n^k)}|.
    truncated_threes(k): 2^{k-1} vs truncated δ_{[k+2,3]}∖δ_{k-1}.
    """
    if family == "threes":
        k = _positive(parameter, "k")
        return CountReport(family, {"k": k}, 2 ** (k - 1), canonical_count(Composition((3,) * k)))
    if family == "staircase_double":
        n = _positive(parameter, "n")
        alpha = Composition(tuple(range(1, n + 1)) + (n,))
        return CountReport(family, {"n": n}, staircase_double_formula(n), canonical_count(alpha))
    if family == "staircase_truncated":
        n = _positive(parameter, "n")
        alpha = Composition(tuple(range(1, n + 1)) + (n,))
        formula = count_shifted(ShiftedShape(delta_interval(n + 1, 1), Composition((1,))))
        return CountReport(family, {"n": n}, formula, canonical_count(alpha))
    if family == "rectangle":
        n, k = _positive(parameter, "n"), _positive(parameter, "k")
        formula = count_shifted(truncated_staircase(n + k - 1, n, k))
        return CountReport(family, {"n": n, "k": k}, formula, canonical_count(Composition((n,) * k)))
    if family == "truncated_threes":
        k = _positive(parameter, "k")
        return CountReport(family, {"k": k}, 2 ** (k - 1), count_shifted(truncated_staircase(k + 2, 3, k)))
    raise ShapeError(f"unknown count family {family!r}")


def _positive(parameter: dict, name: str) -> int:
    value = parameter.get(name)
    if not isinstance(value, int) or value < 1:
        raise ShapeError(f"parameter {name} must be a positive integer, got {value!r}")
    return value


def threes_sink_word(k: int) -> tuple[int, ...]:
    """Letters 3, 6, …, 3k-3: π_{3k-3} ⋯ π_6 π_3 applied with π_3 first."""
    return tuple(range(3, 3 * k - 2, 3))


def threes_structure_check(k: int) -> CheckReport:
    """
    In E_{(3^k)} the sink is the canonical tableau pushed through π_3, π_6, …,
    and the 2^{k-1} subsets of those flips give pairwise distinct members.
    """
    alpha = Composition((3,) * k)
    canonical = set(enumerate_srct(alpha, columns_increasing=True))
    start = canonical_tableau(alpha)
    letters = threes_sink_word(k)

    images = {}
    for size in range(len(letters) + 1):
        for subset in combinations(letters, size):
            result = pi_word(subset, start)
            if result.is_zero or result.tableau not in canonical:
                return CheckReport.failed("threes", alpha, {
                    "shape": str(alpha), "tableau": str(start), "generators": list(subset),
                })
            images[subset] = result.tableau
    if len(set(images.values())) != 2 ** (k - 1) or len(canonical) != 2 ** (k - 1):
        return CheckReport.failed("threes", alpha, {
            "shape": str(alpha), "distinct": len(set(images.values())), "class_size": len(canonical),
        })

    sink = canonical_class(alpha).sink
    if images[letters] != sink:
        return CheckReport.failed("threes", alpha, {
            "shape": str(alpha), "tableau": str(images[letters]), "sink": str(sink),
            "generators": list(letters),
        })
    return CheckReport.passed("threes", alpha, checked=len(images), sink=str(sink))


def truncated_match_search(n: int) -> list[dict]:
    """
    For each α ⊨ n, the truncated shifted shapes with n cells and outer size at
    most 2n whose filling count equals |E_α|. Reports only; nothing is classified.
    """
    candidates = []
    for outer_size in range(n, 2 * n + 1):
        for alpha in strict_reverse_partitions_of(outer_size):
            for beta in strict_reverse_partitions_of(outer_size - n) if outer_size > n else [EMPTY]:
                try:
                    shape = ShiftedShape(alpha, beta)
                except ShapeError:
                    continue
                if shape.size == n:
                    candidates.append((str(shape), count_shifted(shape)))

    rows = []
    for alpha in compositions_of(n):
        target = canonical_count(alpha)
        rows.append({
            "shape": alpha.to_json(),
            "canonical_count": target,
            "matches": [name for name, count in candidates if count == target],
        })
    return rows
