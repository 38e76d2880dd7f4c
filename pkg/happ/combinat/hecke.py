"""
The 0-Hecke operators π_i acting on standard reverse composition tableaux.

π_i leaves τ alone when i is not a descent, kills it when i is an attacking
descent and otherwise swaps i and i+1. The same rule acts on skew tableaux.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from happ.combinat.compositions import SkewShapePair, as_composition
from happ.combinat.errors import TableauError
from happ.combinat.permutations import Permutation
from happ.combinat.reports import CheckReport
from happ.combinat.tableaux import SkewSrct, enumerate_skew_srct, enumerate_srct


class FlipKind(Enum):
    UNCHANGED = "unchanged"
    ZERO = "zero"
    SWAPPED = "swapped"


@dataclass(frozen=True)
class FlipResult:
    kind: FlipKind
    tableau: SkewSrct | None = None

    @classmethod
    def zero(cls) -> "FlipResult":
        return cls(FlipKind.ZERO)

    @property
    def is_zero(self) -> bool:
        return self.kind is FlipKind.ZERO

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "tableau": None if self.tableau is None else self.tableau.to_json(),
        }


def _check_index(i: int, tableau: SkewSrct):
    if not 1 <= i < tableau.n:
        raise TableauError(f"generator π_{i} does not act on a tableau with {tableau.n} entries")


def is_attacking(i: int, tableau: SkewSrct) -> bool:
    _check_index(i, tableau)
    (r1, c1), (r2, c2) = tableau.positions[i], tableau.positions[i + 1]
    if c1 == c2:
        return True
    return c2 == c1 + 1 and r2 > r1


def pi(i: int, tableau: SkewSrct) -> FlipResult:
    _check_index(i, tableau)
    if i not in tableau.descent_set():
        return FlipResult(FlipKind.UNCHANGED, tableau)
    if is_attacking(i, tableau):
        return FlipResult.zero()
    return FlipResult(FlipKind.SWAPPED, tableau.swap(i))


def pi_word(word: Iterable[int], tableau: SkewSrct) -> FlipResult:
    """Apply π_{word[0]} first, then the next letter; zero absorbs."""
    current = tableau
    for i in word:
        step = pi(i, current)
        if step.is_zero:
            return step
        current = step.tableau
    if current == tableau:
        return FlipResult(FlipKind.UNCHANGED, tableau)
    return FlipResult(FlipKind.SWAPPED, current)


def pi_sigma(sigma: Permutation, tableau: SkewSrct) -> FlipResult:
    """π_σ = π_{i_1} ⋯ π_{i_p} for a reduced word of σ, so i_p acts first."""
    if sigma.n != tableau.n:
        raise TableauError(f"σ ∈ S_{sigma.n} cannot act on a tableau with {tableau.n} entries")
    return pi_word(reversed(sigma.reduced_word()), tableau)


def flips(tableau: SkewSrct) -> list[tuple[int, SkewSrct]]:
    """Every (i, π_i τ) with π_i τ a new tableau."""
    result = []
    for i in range(1, tableau.n):
        step = pi(i, tableau)
        if step.kind is FlipKind.SWAPPED:
            result.append((i, step.tableau))
    return result


def _relation_witness(tableau, relation, generators) -> dict:
    return {
        "shape": str(tableau.shape),
        "tableau": str(tableau),
        "relation": relation,
        "generators": list(generators),
    }


def relation_counterexample(tableaux: Iterable[SkewSrct]) -> tuple[dict | None, int]:
    """First (tableau, relation) breaking idempotence, braid or far commutation."""
    checked = 0
    for tableau in tableaux:
        n = tableau.n
        for i in range(1, n):
            checked += 1
            if pi_word([i, i], tableau) != pi_word([i], tableau):
                return _relation_witness(tableau, "idempotent", [i]), checked
            if i + 1 < n and pi_word([i, i + 1, i], tableau) != pi_word([i + 1, i, i + 1], tableau):
                return _relation_witness(tableau, "braid", [i, i + 1]), checked
            for j in range(i + 2, n):
                if pi_word([i, j], tableau) != pi_word([j, i], tableau):
                    return _relation_witness(tableau, "commute", [i, j]), checked
    return None, checked


def verify_hecke_relations(shape) -> CheckReport:
    """Relations of H_n(0) on every SRCT of a straight or skew shape."""
    if isinstance(shape, SkewShapePair):
        tableaux = enumerate_skew_srct(shape)
    else:
        shape = as_composition(shape)
        tableaux = enumerate_srct(shape)
    witness, checked = relation_counterexample(tableaux)
    if witness:
        return CheckReport.failed("relations", shape, witness, checked=checked)
    return CheckReport.passed("relations", shape, checked=checked, tableaux=len(tableaux))


def orbit(tableau: SkewSrct) -> list[SkewSrct]:
    """Forward closure under the swapping flips, sorted by column word."""
    seen = {tableau}
    queue = deque([tableau])
    while queue:
        current = queue.popleft()
        for _, image in flips(current):
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return sorted(seen, key=SkewSrct.column_reading)
