"""
Quasisymmetric functions as integer vectors in the fundamental basis.

Only coefficients are stored, keyed by composition; the monomial basis
appears through fundamental_to_monomial and the Schur oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from happ.combinat.compositions import (
    EMPTY,
    Composition,
    SkewShapePair,
    as_composition,
    btr_key,
    compositions_of,
    lc_leq,
    set_of,
    underlying_partition,
)
from happ.combinat.errors import ShapeError
from happ.combinat.reports import CheckReport
from happ.combinat.tableaux import SkewSrct, enumerate_skew_srct, enumerate_srct


class QSymF:
    """Homogeneous quasisymmetric function Σ c_α F_α. Zero coefficients are dropped."""

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        coefficients: dict[Composition, int] = {}
        for key, coefficient in items:
            alpha = as_composition(key)
            coefficients[alpha] = coefficients.get(alpha, 0) + int(coefficient)
        self._terms = {alpha: c for alpha, c in coefficients.items() if c}
        degrees = {alpha.size for alpha in self._terms}
        if len(degrees) > 1:
            raise ShapeError(f"quasisymmetric function mixes degrees {sorted(degrees)}")

    @classmethod
    def fundamental(cls, alpha) -> "QSymF":
        return cls({as_composition(alpha): 1})

    @classmethod
    def one(cls) -> "QSymF":
        return cls({EMPTY: 1})

    @classmethod
    def from_tableaux(cls, tableaux: Iterable[SkewSrct]) -> "QSymF":
        return cls((tableau.descent_composition(), 1) for tableau in tableaux)

    @property
    def degree(self) -> int | None:
        for alpha in self._terms:
            return alpha.size
        return None

    def coefficient(self, alpha) -> int:
        return self._terms.get(as_composition(alpha), 0)

    def items(self) -> list[tuple[Composition, int]]:
        """Terms ▶-descending."""
        return sorted(self._terms.items(), key=lambda item: btr_key(item[0]), reverse=True)

    def mass(self) -> int:
        return sum(self._terms.values())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, QSymF):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "QSymF") -> "QSymF":
        return QSymF(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "QSymF":
        return QSymF({alpha: -c for alpha, c in self._terms.items()})

    def __sub__(self, other: "QSymF") -> "QSymF":
        return self + (-other)

    def __mul__(self, scalar: int) -> "QSymF":
        if not isinstance(scalar, int):
            return NotImplemented
        return QSymF({alpha: scalar * c for alpha, c in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self):
        if not self._terms:
            return "QSymF(0)"
        return "QSymF(" + " + ".join(f"{c}·F({alpha})" for alpha, c in self.items()) + ")"

    def to_lines(self) -> list[str]:
        return [f"{c} F({alpha})" for alpha, c in self.items()]

    def to_json(self) -> dict[str, int]:
        return {str(alpha): c for alpha, c in self.items()}

    def to_monomial(self) -> dict[Composition, int]:
        result: dict[Composition, int] = {}
        for alpha, c in self._terms.items():
            for beta in fundamental_to_monomial(alpha):
                result[beta] = result.get(beta, 0) + c
        return {beta: c for beta, c in result.items() if c}


@lru_cache(maxsize=512)
def _refinements(alpha: Composition) -> tuple[Composition, ...]:
    descents = set_of(alpha)
    return tuple(beta for beta in compositions_of(alpha.size) if set_of(beta) >= descents)


def fundamental_to_monomial(alpha) -> dict[Composition, int]:
    """F_α = Σ M_β over β with set(β) ⊇ set(α)."""
    return {beta: 1 for beta in _refinements(as_composition(alpha))}


def quasisymmetric_schur(alpha) -> QSymF:
    return QSymF.from_tableaux(enumerate_srct(alpha))


def canonical_qsym(alpha) -> QSymF:
    """C_α, summed over the SRCTs of shape α whose columns increase downward."""
    return QSymF.from_tableaux(enumerate_srct(alpha, columns_increasing=True))


def skew_quasisymmetric_schur(skew: SkewShapePair) -> QSymF:
    return QSymF.from_tableaux(enumerate_skew_srct(skew))


def _horizontal_strips(mu: tuple[int, ...], size: int, shape: tuple[int, ...]):
    """Partitions ν ⊆ shape with ν/μ a horizontal strip of the given size."""
    mu = mu + (0,) * (len(shape) - len(mu))

    def extend(row, remaining, current):
        if row == len(shape):
            if remaining == 0:
                yield tuple(part for part in current if part)
            return
        cap = shape[row] if row == 0 else min(shape[row], mu[row - 1])
        for add in range(0, min(remaining, cap - mu[row]) + 1):
            yield from extend(row + 1, remaining - add, current + [mu[row] + add])

    yield from extend(0, size, [])


def kostka_number(lam: Composition, content: Composition) -> int:
    """Semistandard tableaux of shape λ and content α, counted strip by strip."""
    shape = lam.parts

    @lru_cache(maxsize=None)
    def count(mu: tuple[int, ...], letter: int) -> int:
        if letter == content.length:
            return 1 if mu == shape else 0
        return sum(
            count(nu, letter + 1)
            for nu in _horizontal_strips(mu, content.parts[letter], shape)
        )

    return count((), 0)


def schur_monomial_oracle(lam) -> dict[Composition, int]:
    lam = as_composition(lam)
    if list(lam.parts) != sorted(lam.parts, reverse=True):
        raise ShapeError(f"{lam} is not a partition")
    result = {}
    for content in compositions_of(lam.size):
        k = kostka_number(lam, content)
        if k:
            result[content] = k
    return result


def schur_expansion_check(lam) -> CheckReport:
    """Σ over β with underlying partition λ of 𝒮_β, against the SSYT oracle, in the monomial basis."""
    lam = as_composition(lam)
    total = QSymF()
    for beta in compositions_of(lam.size):
        if underlying_partition(beta) == lam:
            total = total + quasisymmetric_schur(beta)
    expanded = total.to_monomial()
    oracle = schur_monomial_oracle(lam)
    for content in compositions_of(lam.size):
        if expanded.get(content, 0) != oracle.get(content, 0):
            return CheckReport.failed("schur", lam, {
                "shape": str(lam),
                "monomial": str(content),
                "expansion": expanded.get(content, 0),
                "oracle": oracle.get(content, 0),
            })
    return CheckReport.passed("schur", lam, checked=len(oracle))


@dataclass(frozen=True, eq=False)
class TransitionMatrix:
    """Row α holds the F-coefficients of the row function; both axes ▶-descending."""

    n: int
    index: tuple[Composition, ...]
    matrix: np.ndarray

    def is_upper_unitriangular(self) -> bool:
        return bool(
            np.all(np.diag(self.matrix) == 1) and np.all(np.tril(self.matrix, k=-1) == 0)
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "index": [alpha.to_json() for alpha in self.index],
            "matrix": self.matrix.tolist(),
            "upper_unitriangular": self.is_upper_unitriangular(),
        }


def canonical_transition_matrix(n: int) -> TransitionMatrix:
    index = tuple(compositions_of(n))
    position = {alpha: k for k, alpha in enumerate(index)}
    matrix = np.zeros((len(index), len(index)), dtype=object)
    for row, alpha in enumerate(index):
        for beta, c in canonical_qsym(alpha).items():
            matrix[row, position[beta]] = c
    return TransitionMatrix(n, index, matrix)


def canonical_modules_distinct(n: int) -> CheckReport:
    """The characteristics C_α, α ⊨ n, are pairwise different."""
    seen: dict[QSymF, Composition] = {}
    for alpha in compositions_of(n):
        c_alpha = canonical_qsym(alpha)
        if c_alpha in seen:
            return CheckReport.failed("canonical_distinct", n, {
                "shape": str(alpha),
                "same_as": str(seen[c_alpha]),
            })
        seen[c_alpha] = alpha
    return CheckReport.passed("canonical_distinct", n, checked=len(seen))


def coproduct_mass_check(alpha) -> CheckReport:
    """
    |SRCT(α)| = Σ_β |SRCT(α//β)|·|SRCT(β)| over β ≤_c α with |β| = n - m,
    for every 0 ≤ m ≤ n.
    """
    alpha = as_composition(alpha)
    n = alpha.size
    total = quasisymmetric_schur(alpha).mass()
    per_m = []
    for m in range(n + 1):
        split_mass = 0
        for beta in compositions_of(n - m):
            if not lc_leq(beta, alpha):
                continue
            skew_mass = skew_quasisymmetric_schur(SkewShapePair(alpha, beta)).mass()
            split_mass += skew_mass * quasisymmetric_schur(beta).mass()
        per_m.append(split_mass)
        if split_mass != total:
            return CheckReport.failed("coproduct", alpha, {
                "shape": str(alpha),
                "m": m,
                "mass": total,
                "split_mass": split_mass,
            })
    return CheckReport.passed("coproduct", alpha, checked=n + 1, mass=total)
