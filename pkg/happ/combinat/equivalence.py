"""
Equivalence classes of SRCTs under equal standardized column words, with the
source and sink tableau of each class and its distinguished removable nodes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from happ.combinat.compositions import Composition, as_composition, removable_parts
from happ.combinat.errors import ClassStructureError, ShapeError
from happ.combinat.hecke import is_attacking
from happ.combinat.tableaux import Srct, canonical_tableau, enumerate_srct


def st_word_text(key) -> str:
    return "|".join("".join(str(v) for v in column) for column in key)


@dataclass(frozen=True)
class SrctClass:
    shape: Composition
    key: tuple[tuple[int, ...], ...]
    members: tuple[Srct, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def key_text(self) -> str:
        return st_word_text(self.key)

    @cached_property
    def source(self) -> Srct:
        return source_of(self)

    @cached_property
    def sink(self) -> Srct:
        return sink_of(self)

    @cached_property
    def drn(self) -> frozenset[int]:
        return drn(self)

    def __contains__(self, tableau):
        return tableau in self.members

    def to_json(self, with_members=False) -> dict:
        payload = {
            "shape": self.shape.to_json(),
            "size": self.size,
            "st_word": self.key_text,
            "source": self.source.to_json(),
            "sink": self.sink.to_json(),
            "drn": sorted(self.drn),
        }
        if with_members:
            payload["members"] = [member.to_json() for member in self.members]
        return payload


def is_source(tableau: Srct) -> bool:
    """Every non-descent i < n has i+1 immediately left of i."""
    pos = tableau.positions
    descents = tableau.descent_set()
    for i in range(1, tableau.n):
        if i in descents:
            continue
        r, c = pos[i]
        if pos[i + 1] != (r, c - 1):
            return False
    return True


def is_sink(tableau: Srct) -> bool:
    return all(is_attacking(i, tableau) for i in tableau.descent_set())


def drn_of_tableau(tableau: Srct) -> frozenset[int]:
    columns = {}
    for (r, c), value in tableau.grid.items():
        columns[c] = min(value, columns.get(c, value))
    return frozenset(
        column
        for row, column in removable_parts(tableau.shape)
        if tableau.grid[(row, column)] == columns[column]
    )


def drn(srct_class: SrctClass) -> frozenset[int]:
    """Columns of removable nodes holding their column minimum; read off any member."""
    return drn_of_tableau(srct_class.members[0])


def _unique(srct_class: SrctClass, predicate, role: str) -> Srct:
    found = [member for member in srct_class.members if predicate(member)]
    if len(found) != 1:
        raise ClassStructureError(
            f"class {srct_class.key_text} of {srct_class.shape} has {len(found)} {role} tableaux"
        )
    return found[0]


def source_of(srct_class: SrctClass) -> Srct:
    source = _unique(srct_class, is_source, "source")
    column = source.positions[1][1]
    if column != min(drn(srct_class)):
        raise ClassStructureError(
            f"1 sits in column {column} of the source of {srct_class.key_text}, not the least DRN column"
        )
    return source


def sink_of(srct_class: SrctClass) -> Srct:
    sink = _unique(srct_class, is_sink, "sink")
    column = sink.positions[1][1]
    if column != max(drn(srct_class)):
        raise ClassStructureError(
            f"1 sits in column {column} of the sink of {srct_class.key_text}, not the greatest DRN column"
        )
    return sink


def equivalence_classes(alpha) -> list[SrctClass]:
    """SRCT(α) grouped by standardized column word, ordered by the column words of the sources."""
    alpha = as_composition(alpha)
    if alpha.size == 0:
        raise ShapeError("the empty composition has no classes")
    groups: dict[tuple, list[Srct]] = {}
    for tableau in enumerate_srct(alpha):
        groups.setdefault(tableau.standardized_column_word(), []).append(tableau)
    classes = [SrctClass(alpha, key, tuple(members)) for key, members in groups.items()]
    return sorted(classes, key=lambda c: c.source.column_reading())


def class_of(tableau: Srct) -> SrctClass:
    key = tableau.standardized_column_word()
    for srct_class in equivalence_classes(tableau.shape):
        if srct_class.key == key:
            return srct_class
    raise ClassStructureError(f"{tableau} is not an SRCT of shape {tableau.shape}")


def canonical_class(alpha) -> SrctClass:
    """E_α, the class of the canonical tableau."""
    return class_of(canonical_tableau(alpha))


def is_tableau_cyclic(alpha) -> bool:
    return len(equivalence_classes(alpha)) == 1
