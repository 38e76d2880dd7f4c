"""
H_n(0)-modules spanned by (skew) SRCTs, written out as 0/1 generator matrices.

The basis is ordered by (inversions of the column word, column word), a linear
extension of the flip order, so each A_i sends a basis vector to zero, to
itself or to a later basis vector.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator

import numpy as np

from happ.combinat.compositions import (
    Composition,
    SkewShapePair,
    as_composition,
    is_simple,
    lc_down_covers,
)
from happ.combinat.equivalence import SrctClass, equivalence_classes
from happ.combinat.errors import TableauError
from happ.combinat.hecke import FlipKind, pi
from happ.combinat.linalg import nullspace
from happ.combinat.qsym import QSymF
from happ.combinat.reports import CheckReport
from happ.combinat.tableaux import SkewSrct, enumerate_skew_srct, enumerate_srct, split


def basis_key(tableau: SkewSrct):
    word = tableau.column_word()
    return (word.length, word.word)


@dataclass(eq=False)
class HeckeModule:
    label: str
    n: int
    basis: tuple[SkewSrct, ...]
    generators: tuple[np.ndarray, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def generator(self, i: int) -> np.ndarray:
        """A_i for 1 <= i <= n-1."""
        if not 1 <= i < self.n:
            raise TableauError(f"π_{i} is not a generator of H_{self.n}(0)")
        return self.generators[i - 1]

    def index_of(self, tableau: SkewSrct) -> int:
        return self.basis.index(tableau)

    def target(self, i: int, column: int) -> int | None:
        """Basis index hit by A_i e_column, None for zero."""
        rows = np.flatnonzero(self.generator(i)[:, column])
        return int(rows[0]) if len(rows) else None

    def transition_map(self, i: int) -> list[int | None]:
        """target(i, column) for every column at once."""
        matrix = self.generator(i)
        hit = matrix.any(axis=0)
        first = matrix.argmax(axis=0)
        return [int(t) if h else None for t, h in zip(first, hit)]

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "n": self.n,
            "dimension": self.dimension,
            "basis": [tableau.to_json() for tableau in self.basis],
            "generators": [matrix.tolist() for matrix in self.generators],
        }


def _build(label: str, n: int, tableaux: Iterable[SkewSrct]) -> HeckeModule:
    basis = tuple(sorted(tableaux, key=basis_key))
    position = {tableau: k for k, tableau in enumerate(basis)}
    generators = []
    for i in range(1, n):
        matrix = np.zeros((len(basis), len(basis)), dtype=np.int64)
        for column, tableau in enumerate(basis):
            step = pi(i, tableau)
            if step.kind is FlipKind.UNCHANGED:
                matrix[column, column] = 1
            elif step.kind is FlipKind.SWAPPED:
                if step.tableau not in position:
                    raise TableauError(f"π_{i} takes {tableau} outside the span of {label}")
                matrix[position[step.tableau], column] = 1
        generators.append(matrix)
    return HeckeModule(label, n, basis, tuple(generators))


def build_module(alpha) -> HeckeModule:
    alpha = as_composition(alpha)
    return _build(str(alpha), alpha.size, enumerate_srct(alpha))


def build_class_module(srct_class: SrctClass) -> HeckeModule:
    return _build(f"{srct_class.shape}:{srct_class.key_text}", srct_class.shape.size, srct_class.members)


def build_skew_module(skew: SkewShapePair) -> HeckeModule:
    return _build(str(skew), skew.size, enumerate_skew_srct(skew))


def characteristic(module: HeckeModule) -> QSymF:
    """Sum of F over the descent compositions of the basis, one per filtration factor."""
    return QSymF.from_tableaux(module.basis)


def restriction_generators(n: int, m: int) -> list[int]:
    """Generators of H_m(0) ⊗ H_{n-m}(0) inside H_n(0): every π_i except π_m."""
    return [i for i in range(1, n) if i != m]


def relations_report(module: HeckeModule) -> CheckReport:
    generators = module.generators
    count = len(generators)
    for k, a in enumerate(generators, start=1):
        if not np.array_equal(a @ a, a):
            return CheckReport.failed("relations", module.label, {
                "shape": module.label, "relation": "idempotent", "generators": [k],
            })
        if k < count:
            b = generators[k]
            if not np.array_equal(a @ b @ a, b @ a @ b):
                return CheckReport.failed("relations", module.label, {
                    "shape": module.label, "relation": "braid", "generators": [k, k + 1],
                })
        for j in range(k + 2, count + 1):
            c = generators[j - 1]
            if not np.array_equal(a @ c, c @ a):
                return CheckReport.failed("relations", module.label, {
                    "shape": module.label, "relation": "commute", "generators": [k, j],
                })
    return CheckReport.passed("relations", module.label, checked=count, dimension=module.dimension)


def is_filtration_compatible(module: HeckeModule) -> CheckReport:
    """Each A_i sends e_j to 0, e_j or some e_k with k > j."""
    for i in range(1, module.n):
        for column in range(module.dimension):
            target = module.target(i, column)
            if target is not None and target < column:
                return CheckReport.failed("filtration", module.label, {
                    "shape": module.label,
                    "tableau": str(module.basis[column]),
                    "generators": [i],
                })
    return CheckReport.passed("filtration", module.label, checked=module.dimension)


def source_generates(module: HeckeModule, source: SkewSrct) -> CheckReport:
    """The generators applied repeatedly to the source vector reach every basis vector."""
    start = module.index_of(source)
    reached = {start}
    frontier = [start]
    while frontier:
        column = frontier.pop()
        for i in range(1, module.n):
            target = module.target(i, column)
            if target is not None and target not in reached:
                reached.add(target)
                frontier.append(target)
    if len(reached) != module.dimension:
        missing = min(set(range(module.dimension)) - reached)
        return CheckReport.failed("source_generates", module.label, {
            "shape": module.label,
            "tableau": str(source),
            "unreached": str(module.basis[missing]),
        })
    return CheckReport.passed("source_generates", module.label, checked=module.dimension)


def direct_sum_check(alpha) -> CheckReport:
    """Each class spans an A_i-invariant coordinate block and the blocks fill 𝐒_α."""
    alpha = as_composition(alpha)
    module = build_module(alpha)
    classes = equivalence_classes(alpha)
    block_of = {}
    for k, srct_class in enumerate(classes):
        for member in srct_class.members:
            block_of[module.index_of(member)] = k
    sizes = [srct_class.size for srct_class in classes]
    if sum(sizes) != module.dimension:
        return CheckReport.failed("direct_sum", alpha, {
            "shape": str(alpha), "blocks": sizes, "dimension": module.dimension,
        })
    for i in range(1, module.n):
        for column in range(module.dimension):
            target = module.target(i, column)
            if target is not None and block_of[target] != block_of[column]:
                return CheckReport.failed("direct_sum", alpha, {
                    "shape": str(alpha),
                    "tableau": str(module.basis[column]),
                    "generators": [i],
                })
    return CheckReport.passed("direct_sum", alpha, checked=module.dimension, blocks=sizes)


@dataclass(eq=False)
class CommutantBasis:
    module: HeckeModule
    matrices: list[np.ndarray]

    @property
    def dimension(self) -> int:
        return len(self.matrices)

    def verify(self) -> bool:
        return all(
            np.array_equal(m.dot(a.astype(object)), a.astype(object).dot(m))
            for m in self.matrices
            for a in self.module.generators
        )

    def to_json(self) -> dict:
        return {
            "module": self.module.label,
            "dimension": self.dimension,
            "matrices": [[[str(v) for v in row] for row in m.tolist()] for m in self.matrices],
        }


def _push(targets: list[int | None], image: dict[int, list[int]]) -> dict[int, list[int]]:
    """Apply a generator, given as its transition map, to a vector of linear forms."""
    pushed: dict[int, list[int]] = {}
    for t, variables in image.items():
        target = targets[t]
        if target is not None:
            pushed.setdefault(target, []).extend(variables)
    return pushed


def _cyclic_images(module: HeckeModule, maps: list[list[int | None]]) -> tuple[int, list[dict[int, list[int]]]]:
    """
    Cover the basis by cyclic submodules. Each cover starts at the earliest
    unreached basis vector g and owns the unknowns x_g = M e_g, numbered
    slot * d + coordinate. images[j][t] lists the unknowns summing to
    (M e_j)_t along the first path found from the start of e_j's cover.
    """
    d = module.dimension
    images: list[dict[int, list[int]] | None] = [None] * d
    slots = 0
    for start in range(d):
        if images[start] is not None:
            continue
        images[start] = {t: [slots * d + t] for t in range(d)}
        slots += 1
        frontier = deque([start])
        while frontier:
            column = frontier.popleft()
            for targets in maps:
                target = targets[column]
                if target is not None and images[target] is None:
                    images[target] = _push(targets, images[column])
                    frontier.append(target)
    return slots, images


def _commutation_rows(maps, images) -> Iterator[dict[int, int]]:
    """Rows of M A_i e_j - A_i M e_j = 0, one per coordinate, vector by vector."""
    for column, image in enumerate(images):
        for targets in maps:
            target = targets[column]
            lhs = images[target] if target is not None else {}
            rhs = _push(targets, image)
            for t in lhs.keys() | rhs.keys():
                row: dict[int, int] = {}
                for v in lhs.get(t, ()):
                    row[v] = row.get(v, 0) + 1
                for v in rhs.get(t, ()):
                    row[v] = row.get(v, 0) - 1
                row = {v: c for v, c in row.items() if c}
                if row:
                    yield row


def commutant(module: HeckeModule) -> CommutantBasis:
    """
    Basis of {M : M A_i = A_i M for all i} over ℚ. M is determined by its
    values on the starts of a cyclic cover, so the unknowns are those values
    and the rows come straight from the 0/1 transition maps. The identity
    always commutes, so the solve stops once the rank leaves one free unknown.
    """
    d = module.dimension
    maps = [module.transition_map(i) for i in range(1, module.n)]
    slots, images = _cyclic_images(module, maps)
    unknowns = slots * d
    matrices = []
    for vector in nullspace(_commutation_rows(maps, images), unknowns, max_rank=unknowns - 1):
        matrix = np.zeros((d, d), dtype=object)
        for column, image in enumerate(images):
            for t, variables in image.items():
                matrix[t, column] = sum((vector[v] for v in variables), Fraction(0))
        matrices.append(matrix)
    return CommutantBasis(module, matrices)


class Verdict(Enum):
    INDECOMPOSABLE = "indecomposable"
    DECOMPOSABLE = "decomposable"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class VerdictReport:
    shape: Composition
    verdict: Verdict
    classes: int
    commutant_dimension: int | None
    simple: bool

    @property
    def consistent(self) -> bool:
        """Verdict agrees with the simple/complex classification."""
        if self.verdict is Verdict.INCONCLUSIVE:
            return False
        return (self.verdict is Verdict.INDECOMPOSABLE) == self.simple

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "verdict": self.verdict.value,
            "classes": self.classes,
            "commutant_dimension": self.commutant_dimension,
            "simple": self.simple,
        }


def indecomposability_verdict(alpha) -> VerdictReport:
    """
    Two or more classes already split 𝐒_α, so the commutant is only solved for
    a single class and commutant_dimension stays None otherwise.
    """
    alpha = as_composition(alpha)
    classes = len(equivalence_classes(alpha))
    if classes >= 2:
        return VerdictReport(alpha, Verdict.DECOMPOSABLE, classes, None, is_simple(alpha))
    dimension = commutant(build_module(alpha)).dimension
    if dimension == 1:
        verdict = Verdict.INDECOMPOSABLE
    else:
        verdict = Verdict.INCONCLUSIVE
    return VerdictReport(alpha, verdict, classes, dimension, is_simple(alpha))


def _restriction_blocks(module: HeckeModule, m: int) -> dict[Composition, list[int]]:
    blocks: dict[Composition, list[int]] = {}
    for k, tableau in enumerate(module.basis):
        _, high = split(tableau, m)
        blocks.setdefault(high.shape, []).append(k)
    return blocks


def restrict_and_verify(alpha, m: int) -> CheckReport:
    """
    Split 𝐒_α over H_m(0) ⊗ H_{n-m}(0). Blocks X_β collect the basis tableaux
    whose entries above m fill β. Each block must be invariant under every π_i
    with i != m, and τ ↦ (τ_{≤m}, τ_{>m}) must carry it onto 𝐒_{α//β} ⊗ 𝐒_β.
    """
    alpha = as_composition(alpha)
    n = alpha.size
    subject = f"{alpha} m={m}"
    if not 0 <= m <= n:
        raise TableauError(f"restriction point {m} outside [0, {n}]")
    module = build_module(alpha)
    blocks = _restriction_blocks(module, m)
    generators = restriction_generators(n, m)

    def witness(beta, column, i, reason):
        return {
            "shape": str(alpha),
            "m": m,
            "beta": str(beta),
            "tableau": str(module.basis[column]),
            "generators": [i] if i else [],
            "reason": reason,
        }

    for beta, block in blocks.items():
        members = set(block)
        for i in generators:
            for column in block:
                target = module.target(i, column)
                if target is not None and target not in members:
                    return CheckReport.failed("restriction", subject, witness(beta, column, i, "block_not_invariant"))

        skew_module = build_skew_module(SkewShapePair(alpha, beta))
        straight_module = build_module(beta)
        width = straight_module.dimension
        theta = []
        for column in block:
            low, high = split(module.basis[column], m)
            theta.append(skew_module.index_of(low) * width + straight_module.index_of(high))
        if sorted(theta) != list(range(skew_module.dimension * width)):
            return CheckReport.failed("restriction", subject, witness(beta, block[0], 0, "theta_not_bijective"))

        for i in generators:
            if i < m:
                expected = np.kron(skew_module.generator(i), np.eye(width, dtype=np.int64))
            else:
                expected = np.kron(np.eye(skew_module.dimension, dtype=np.int64), straight_module.generator(i - m))
            restricted = module.generator(i)[np.ix_(block, block)]
            relabelled = np.zeros_like(expected)
            relabelled[np.ix_(theta, theta)] = restricted
            if not np.array_equal(relabelled, expected):
                return CheckReport.failed("restriction", subject, witness(beta, block[0], i, "not_intertwined"))

    if sum(len(block) for block in blocks.values()) != module.dimension:
        return CheckReport.failed("restriction", subject, {"shape": str(alpha), "m": m, "reason": "dimension"})
    return CheckReport.passed(
        "restriction", subject, checked=len(blocks),
        blocks={str(beta): len(block) for beta, block in blocks.items()},
    )


def branching_check(alpha) -> CheckReport:
    """
    dim 𝐒_α = Σ dim 𝐒_{α⁻} over removable-node reductions, and restricting
    along π_2, …, π_{n-1} splits 𝐒_α into copies of exactly those 𝐒_{α⁻}.
    """
    alpha = as_composition(alpha)
    n = alpha.size
    reductions = lc_down_covers(alpha)
    dimension = len(enumerate_srct(alpha))
    reduced = sum(len(enumerate_srct(beta)) for beta in reductions)
    if dimension != reduced:
        return CheckReport.failed("branching", alpha, {
            "shape": str(alpha), "dimension": dimension, "reductions": reduced,
        })

    first = restrict_and_verify(alpha, 1)
    if not first:
        return CheckReport.failed("branching", alpha, first.witness)
    if set(first.details["blocks"]) != {str(beta) for beta in reductions}:
        return CheckReport.failed("branching", alpha, {
            "shape": str(alpha),
            "blocks": sorted(first.details["blocks"]),
            "reductions": [str(beta) for beta in reductions],
        })
    if n >= 2:
        last = restrict_and_verify(alpha, n - 1)
        if not last:
            return CheckReport.failed("branching", alpha, last.witness)
    return CheckReport.passed(
        "branching", alpha, checked=len(reductions), dimension=dimension,
        reductions={str(beta): len(enumerate_srct(beta)) for beta in reductions},
    )

