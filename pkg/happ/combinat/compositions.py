"""
Compositions and the structure that lives on them: the set/comp bijection,
removable nodes, simple compositions, the ▶ total order, strict reverse
partitions and the reverse composition poset.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from happ.combinat.errors import ShapeError, ShapeParseError


@dataclass(frozen=True, order=True)
class Composition:
    """
    Ordered list of positive integers. Doubles as the reverse composition
    diagram: part i is the number of left-justified cells in row i from the top.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        for part in parts:
            if not isinstance(part, int) or isinstance(part, bool) or part < 1:
                raise ShapeError(f"composition parts must be positive integers, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Composition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """
        Parse the canonical text form "3,2,4". The empty string is the
        empty composition. Errors carry the 0-based position of the bad token.
        """
        if text is None:
            raise ShapeParseError(text, 0, "no shape given")
        if text.strip() == "":
            return cls(())

        parts = []
        offset = 0
        for token in text.split(","):
            stripped = token.strip()
            position = offset + (len(token) - len(token.lstrip()))
            if not (stripped.isascii() and stripped.isdecimal()):
                raise ShapeParseError(text, position, f"expected a positive integer, got {stripped!r}")
            value = int(stripped)
            if value < 1:
                raise ShapeParseError(text, position, "parts must be at least 1")
            parts.append(value)
            offset += len(token) + 1
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __str__(self):
        return ",".join(str(part) for part in self.parts)

    def __repr__(self):
        return f"Composition({str(self)!r})"

    def part(self, row: int) -> int:
        """1-based access, as rows are numbered in the diagram."""
        return self.parts[row - 1]

    def to_json(self) -> list[int]:
        return list(self.parts)


EMPTY = Composition(())


def as_composition(value) -> Composition:
    if isinstance(value, Composition):
        return value
    if isinstance(value, str):
        return Composition.parse(value)
    return Composition(tuple(value))


def set_of(alpha: Composition) -> frozenset[int]:
    """Partial sums α_1, α_1+α_2, …, leaving out the total."""
    total = 0
    result = []
    for part in alpha.parts[:-1]:
        total += part
        result.append(total)
    return frozenset(result)


def comp_of(subset: Iterable[int], n: int) -> Composition:
    subset = sorted(set(subset))
    if n < 0:
        raise ShapeError(f"size must be non-negative, got {n}")
    for value in subset:
        if value <= 0 or value >= n:
            raise ShapeError(f"{value} is outside [1, {n - 1}]")
    if n == 0:
        return EMPTY
    boundaries = [0] + subset + [n]
    return Composition(tuple(b - a for a, b in zip(boundaries, boundaries[1:])))


def underlying_partition(alpha: Composition) -> Composition:
    return Composition(tuple(sorted(alpha.parts, reverse=True)))


def btr_key(alpha: Composition) -> tuple:
    """Sort key realising ▶: partition first, then the composition, both lexicographically."""
    return (underlying_partition(alpha).parts, alpha.parts)


def cmp_btr(alpha: Composition, beta: Composition) -> int:
    """1 when α ▶ β, -1 when β ▶ α, 0 when equal."""
    if alpha.size != beta.size:
        raise ShapeError(f"cannot compare {alpha} and {beta}: sizes differ")
    left, right = btr_key(alpha), btr_key(beta)
    if left == right:
        return 0
    return 1 if left > right else -1


def compositions_of(n: int) -> list[Composition]:
    """All compositions of n, ▶-descending, so (n) comes first."""
    if n == 0:
        return [EMPTY]
    found = [
        comp_of(subset, n)
        for k in range(n)
        for subset in combinations(range(1, n), k)
    ]
    return sorted(found, key=btr_key, reverse=True)


def compositions_up_to(n: int, start: int = 1) -> list[Composition]:
    return [alpha for size in range(start, n + 1) for alpha in compositions_of(size)]


def partitions_of(n: int) -> list[Composition]:
    """Weakly decreasing compositions of n, lexicographically descending."""
    def generate(remaining, bound):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, bound), 0, -1):
            for rest in generate(remaining - first, first):
                yield (first,) + rest

    return [Composition(parts) for parts in generate(n, n)]


def is_strict_reverse_partition(alpha: Composition) -> bool:
    return all(a < b for a, b in zip(alpha.parts, alpha.parts[1:]))


def strict_reverse_partitions_of(n: int) -> list[Composition]:
    return [
        Composition(tuple(reversed(lam.parts)))
        for lam in partitions_of(n)
        if all(a > b for a, b in zip(lam.parts, lam.parts[1:]))
    ]


def removable_parts(alpha: Composition) -> list[tuple[int, int]]:
    """
    Rows i (1-based) whose part has a removable node, each paired with the
    column α_i of that node: i = 1, or α_i >= 2 with no earlier part equal to α_i - 1.
    """
    result = []
    for row, part in enumerate(alpha.parts, start=1):
        if row == 1 or (part >= 2 and (part - 1) not in alpha.parts[: row - 1]):
            result.append((row, part))
    return result


def remove_node(alpha: Composition, row: int) -> Composition:
    """α⁻ for the removable node in the given row; a part of size 1 disappears."""
    if row not in {r for r, _ in removable_parts(alpha)}:
        raise ShapeError(f"row {row} of {alpha} has no removable node")
    parts = list(alpha.parts)
    parts[row - 1] -= 1
    return Composition(tuple(part for part in parts if part > 0))


def is_simple(alpha: Composition) -> bool:
    parts = alpha.parts
    for j in range(len(parts)):
        if parts[j] < 2:
            continue
        for i in range(j):
            if parts[i] >= parts[j] and (parts[j] - 1) not in parts[i + 1: j]:
                return False
    return True


def delta_interval(a: int, b: int) -> Composition:
    """δ_{[a,b]} = (b, b+1, …, a)."""
    if b < 1 or a < b:
        raise ShapeError(f"delta interval needs a >= b >= 1, got a={a}, b={b}")
    return Composition(tuple(range(b, a + 1)))


def box_add(i: int, alpha: Composition) -> Composition | None:
    """
    The box-adding operator t_i. t_1 prefixes a part 1; t_i for i >= 2 turns the
    leftmost part i-1 into i. None stands for the zero result.
    """
    if i < 1:
        raise ShapeError(f"box-adding operators are indexed from 1, got {i}")
    if i == 1:
        return Composition((1,) + alpha.parts)
    parts = list(alpha.parts)
    try:
        k = parts.index(i - 1)
    except ValueError:
        return None
    parts[k] = i
    return Composition(tuple(parts))


def lc_covers(alpha: Composition) -> list[Composition]:
    """Up-covers in the reverse composition poset, prefix cover first."""
    result = [Composition((1,) + alpha.parts)]
    seen = set()
    for k, part in enumerate(alpha.parts):
        if part in seen:
            continue
        seen.add(part)
        parts = list(alpha.parts)
        parts[k] += 1
        result.append(Composition(tuple(parts)))
    return result


def lc_down_covers(alpha: Composition) -> list[Composition]:
    """Down-covers coincide with the removable-node reductions α⁻."""
    return [remove_node(alpha, row) for row, _ in removable_parts(alpha)]


@lru_cache(maxsize=4096)
def _reachable(beta: Composition, size: int) -> frozenset[Composition]:
    seen = {beta}
    queue = deque([beta])
    while queue:
        current = queue.popleft()
        if current.size >= size:
            continue
        for cover in lc_covers(current):
            if cover not in seen:
                seen.add(cover)
                queue.append(cover)
    return frozenset(seen)


def lc_leq(beta: Composition, alpha: Composition) -> bool:
    """β ≤_c α, by breadth-first search upward from β bounded by |α|."""
    if beta.size > alpha.size:
        return False
    return alpha in _reachable(beta, alpha.size)


def inner_row_lengths(outer: Composition, inner: Composition) -> tuple[int, ...]:
    """Per outer row, the number of inner cells when β is drawn bottom-left in α."""
    offset = outer.length - inner.length
    if offset < 0:
        raise ShapeError(f"{inner} has more rows than {outer}")
    return tuple(0 if row < offset else inner.parts[row - offset] for row in range(outer.length))


def fits_bottom_left(beta: Composition, alpha: Composition) -> bool:
    """Cell containment only: β drawn in the bottom-left corner of α."""
    if beta.length > alpha.length:
        return False
    return all(b <= a for b, a in zip(inner_row_lengths(alpha, beta), alpha.parts))


@dataclass(frozen=True)
class SkewShapePair:
    outer: Composition
    inner: Composition = EMPTY

    def __post_init__(self):
        object.__setattr__(self, "outer", as_composition(self.outer))
        object.__setattr__(self, "inner", as_composition(self.inner))
        if not lc_leq(self.inner, self.outer):
            raise ShapeError(f"{self.inner} is not below {self.outer} in the reverse composition poset")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def is_straight(self) -> bool:
        return self.inner.length == 0

    def inner_lengths(self) -> tuple[int, ...]:
        return inner_row_lengths(self.outer, self.inner)

    def cells(self) -> list[tuple[int, int]]:
        return [
            (row, column)
            for row, (skip, part) in enumerate(zip(self.inner_lengths(), self.outer.parts), start=1)
            for column in range(skip + 1, part + 1)
        ]

    def __str__(self):
        return f"{self.outer}//{self.inner}"

    def to_json(self) -> dict:
        return {"outer": self.outer.to_json(), "inner": self.inner.to_json()}
