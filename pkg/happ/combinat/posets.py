"""
Finite posets on column words: the flip order on a class of SRCTs (or on all
skew SRCTs of a skew shape) and intervals of the left weak order on S_n.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from happ.combinat.compositions import SkewShapePair, as_composition
from happ.combinat.equivalence import SrctClass, equivalence_classes
from happ.combinat.errors import PosetError
from happ.combinat.hecke import flips, pi_sigma
from happ.combinat.permutations import Permutation, bruhat_leq
from happ.combinat.reports import CheckReport
from happ.combinat.tableaux import SkewSrct, enumerate_skew_srct


class FinitePoset:
    """
    Elements are hashable labels. The order is the reflexive transitive closure
    of the covers, stored as a boolean numpy matrix. A rank function, when
    given, must rise by exactly one along every cover.
    """

    def __init__(self, elements, covers, rank=None, name="P", payload=None):
        self.name = name
        self.payload = dict(payload or {})
        self.elements = tuple(elements)
        self.index = {element: k for k, element in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise PosetError(f"{name} has repeated elements")

        covers = set(covers)
        for low, high in covers:
            if low not in self.index or high not in self.index:
                raise PosetError(f"cover {low} -> {high} leaves {name}")
        self.covers = tuple(sorted(covers, key=lambda pair: (self.index[pair[0]], self.index[pair[1]])))
        size = len(self.elements)
        order = np.eye(size, dtype=bool)
        for low, high in self.covers:
            order[self.index[low], self.index[high]] = True
        while True:
            closed = order | ((order.astype(np.int64) @ order.astype(np.int64)) > 0)
            if np.array_equal(closed, order):
                break
            order = closed
        if np.any(order & order.T & ~np.eye(size, dtype=bool)):
            raise PosetError(f"{name} has a directed cycle among its covers")
        self.order = order

        self.rank = dict(rank) if rank is not None else None
        if self.rank is not None:
            for low, high in self.covers:
                if self.rank[high] != self.rank[low] + 1:
                    raise PosetError(f"rank does not rise by one along {low} -> {high}")

    def __len__(self):
        return len(self.elements)

    @property
    def is_graded(self) -> bool:
        return self.rank is not None

    def leq(self, a, b) -> bool:
        return bool(self.order[self.index[a], self.index[b]])

    def minimal(self) -> list:
        below = self.order.sum(axis=0)
        return [e for k, e in enumerate(self.elements) if below[k] == 1]

    def maximal(self) -> list:
        above = self.order.sum(axis=1)
        return [e for k, e in enumerate(self.elements) if above[k] == 1]

    def _extremum(self, bounds: np.ndarray, greatest: bool):
        candidates = np.flatnonzero(bounds)
        for k in candidates:
            if greatest and np.all(self.order[candidates, k]):
                return self.elements[k]
            if not greatest and np.all(self.order[k, candidates]):
                return self.elements[k]
        return None

    def meet(self, a, b):
        lower = self.order[:, self.index[a]] & self.order[:, self.index[b]]
        return self._extremum(lower, greatest=True)

    def join(self, a, b):
        upper = self.order[self.index[a], :] & self.order[self.index[b], :]
        return self._extremum(upper, greatest=False)

    def lattice_failure(self):
        """First pair lacking a meet or a join, None for a lattice."""
        for i, a in enumerate(self.elements):
            for b in self.elements[i + 1:]:
                if self.meet(a, b) is None:
                    return ("meet", a, b)
                if self.join(a, b) is None:
                    return ("join", a, b)
        return None

    def is_lattice(self) -> bool:
        if len(self.minimal()) != 1 or len(self.maximal()) != 1:
            return False
        return self.lattice_failure() is None

    def rank_vector(self) -> tuple[int, ...]:
        if not self.is_graded:
            raise PosetError(f"{self.name} is not graded")
        if not self.elements:
            return ()
        counts = [0] * (max(self.rank.values()) + 1)
        for value in self.rank.values():
            counts[value] += 1
        return tuple(counts)

    def is_rank_symmetric(self) -> bool:
        vector = self.rank_vector()
        return vector == vector[::-1]

    def is_rank_unimodal(self) -> bool:
        vector = self.rank_vector()
        peak = vector.index(max(vector)) if vector else 0
        rising = all(a <= b for a, b in zip(vector[:peak], vector[1:peak + 1]))
        falling = all(a >= b for a, b in zip(vector[peak:], vector[peak + 1:]))
        return rising and falling

    def to_dot(self) -> str:
        lines = [f'digraph "{self.name}" {{', "  rankdir=BT;"]
        for element in self.elements:
            label = str(element)
            if self.is_graded:
                label += f" [{self.rank[element]}]"
            lines.append(f'  "{element}" [label="{label}"];')
        for low, high in self.covers:
            lines.append(f'  "{low}" -> "{high}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "elements": [_label_json(e) for e in self.elements],
            "covers": [[_label_json(a), _label_json(b)] for a, b in self.covers],
            "ranks": None if not self.is_graded else [self.rank[e] for e in self.elements],
        }


def _label_json(label):
    return label.to_json() if hasattr(label, "to_json") else label


def chain(length: int) -> FinitePoset:
    elements = list(range(length + 1))
    return FinitePoset(elements, zip(elements, elements[1:]), {e: e for e in elements}, name=f"chain{length}")


def _flip_order(tableaux: Iterable[SkewSrct], name: str, base_length=None) -> FinitePoset:
    tableaux = list(tableaux)
    labels = {tableau: tableau.column_word() for tableau in tableaux}
    members = set(tableaux)
    covers = []
    for tableau in tableaux:
        for i, image in flips(tableau):
            if image not in members:
                raise PosetError(f"π_{i} takes {tableau} outside {name}")
            covers.append((labels[tableau], labels[image]))
    if base_length is None:
        base_length = min((label.length for label in labels.values()), default=0)
    rank = {label: label.length - base_length for label in labels.values()}
    return FinitePoset(
        [labels[t] for t in tableaux], covers, rank, name=name,
        payload={label: tableau for tableau, label in labels.items()},
    )


def flip_poset(srct_class: SrctClass) -> FinitePoset:
    """Flip order on a class, labelled by column words, ranked from the source."""
    return _flip_order(
        srct_class.members,
        f"{srct_class.shape}:{srct_class.key_text}",
        base_length=srct_class.source.column_word().length,
    )


def skew_flip_poset(skew: SkewShapePair) -> FinitePoset:
    return _flip_order(enumerate_skew_srct(skew), str(skew))


def bruhat_interval(sigma1: Permutation, sigma2: Permutation) -> FinitePoset:
    """[σ₁, σ₂] in the left weak order, grown upward from σ₁ by length-raising s_i."""
    if not bruhat_leq(sigma1, sigma2):
        raise PosetError(f"{sigma1} is not below {sigma2} in the left weak order")
    seen = {sigma1}
    queue = deque([sigma1])
    covers = []
    while queue:
        current = queue.popleft()
        for i in range(1, current.n):
            if i in current.left_descents():
                continue
            above = current.left_multiply(i)
            if not bruhat_leq(above, sigma2):
                continue
            covers.append((current, above))
            if above not in seen:
                seen.add(above)
                queue.append(above)
    elements = sorted(seen, key=lambda s: (s.length, s.word))
    rank = {s: s.length - sigma1.length for s in elements}
    return FinitePoset(elements, covers, rank, name=f"[{sigma1}, {sigma2}]")


def verify_interval_iso(srct_class: SrctClass) -> CheckReport:
    """τ ↦ col_τ maps the class onto [col source, col sink] and covers onto covers."""
    subject = f"{srct_class.shape}:{srct_class.key_text}"
    flips_order = flip_poset(srct_class)
    interval = bruhat_interval(srct_class.source.column_word(), srct_class.sink.column_word())

    missing = set(interval.elements) ^ set(flips_order.elements)
    if missing:
        label = min(missing)
        return CheckReport.failed("bruhat", subject, {
            "shape": str(srct_class.shape),
            "column_word": label.to_json(),
            "reason": "element_mismatch",
        })
    cover_mismatch = set(interval.covers) ^ set(flips_order.covers)
    if cover_mismatch:
        low, high = min(cover_mismatch)
        return CheckReport.failed("bruhat", subject, {
            "shape": str(srct_class.shape),
            "tableau": str(flips_order.payload.get(low, "")),
            "cover": [low.to_json(), high.to_json()],
            "reason": "cover_mismatch",
        })
    failure = flips_order.lattice_failure()
    if failure:
        kind, a, b = failure
        return CheckReport.failed("bruhat", subject, {
            "shape": str(srct_class.shape),
            "reason": f"no_{kind}",
            "pair": [a.to_json(), b.to_json()],
        })
    return CheckReport.passed(
        "bruhat", subject, checked=len(flips_order), rank_vector=list(flips_order.rank_vector())
    )


def verify_word_property(srct_class: SrctClass) -> CheckReport:
    """
    For τ₁ ≼ τ₂ in the class, π_σ with σ = col_{τ₂}·col_{τ₁}⁻¹ carries τ₁ to τ₂.
    """
    subject = f"{srct_class.shape}:{srct_class.key_text}"
    poset = flip_poset(srct_class)
    checked = 0
    for low in poset.elements:
        for high in poset.elements:
            if not poset.leq(low, high):
                continue
            checked += 1
            sigma = high.compose(low.inverse())
            result = pi_sigma(sigma, poset.payload[low])
            if result.is_zero or result.tableau != poset.payload[high]:
                return CheckReport.failed("word_property", subject, {
                    "shape": str(srct_class.shape),
                    "tableau": str(poset.payload[low]),
                    "target": str(poset.payload[high]),
                    "generators": list(reversed(sigma.reduced_word())),
                }, checked=checked)
    return CheckReport.passed("word_property", subject, checked=checked)


@dataclass(frozen=True)
class RankStatistics:
    shape: str
    st_word: str
    size: int
    rank_vector: tuple[int, ...]
    symmetric: bool
    unimodal: bool

    def to_json(self) -> dict:
        return {
            "shape": self.shape,
            "st_word": self.st_word,
            "size": self.size,
            "rank_vector": list(self.rank_vector),
            "symmetric": self.symmetric,
            "unimodal": self.unimodal,
        }


def rank_statistics(alpha) -> list[RankStatistics]:
    alpha = as_composition(alpha)
    rows = []
    for srct_class in equivalence_classes(alpha):
        poset = flip_poset(srct_class)
        rows.append(RankStatistics(
            shape=str(alpha),
            st_word=srct_class.key_text,
            size=len(poset),
            rank_vector=poset.rank_vector(),
            symmetric=poset.is_rank_symmetric(),
            unimodal=poset.is_rank_unimodal(),
        ))
    return rows
