"""
Permutations in one-line notation, with the type A Coxeter data the weak
Bruhat order needs: inversion sets, length, simple reflections, reduced words.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from happ.combinat.errors import PermutationError


@dataclass(frozen=True, order=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(v) for v in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise PermutationError(f"{word} is not a permutation of 1..{len(word)}")
        object.__setattr__(self, "word", word)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        tokens = text.replace(",", " ").split()
        try:
            return cls(tuple(int(token) for token in tokens))
        except ValueError as e:
            raise PermutationError(f"cannot parse permutation {text!r}") from e

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __call__(self, position: int) -> int:
        return self.word[position - 1]

    def __str__(self):
        return " ".join(str(v) for v in self.word)

    def to_json(self) -> list[int]:
        return list(self.word)

    @cached_property
    def inversions(self) -> frozenset[tuple[int, int]]:
        w = self.word
        return frozenset(
            (p + 1, q + 1)
            for p in range(len(w))
            for q in range(p + 1, len(w))
            if w[p] > w[q]
        )

    @property
    def length(self) -> int:
        return len(self.inversions)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for position, value in enumerate(self.word, start=1):
            inv[value - 1] = position
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """(self ∘ other)(p) = self(other(p))."""
        if other.n != self.n:
            raise PermutationError(f"cannot compose permutations of sizes {self.n} and {other.n}")
        return Permutation(tuple(self.word[v - 1] for v in other.word))

    def left_multiply(self, i: int) -> "Permutation":
        """s_i σ: exchange the values i and i+1."""
        if not 1 <= i < self.n:
            raise PermutationError(f"s_{i} is not a generator of S_{self.n}")
        swap = {i: i + 1, i + 1: i}
        return Permutation(tuple(swap.get(v, v) for v in self.word))

    def position_of(self, value: int) -> int:
        return self.word.index(value) + 1

    def left_descents(self) -> list[int]:
        """Generators s_i with l(s_i σ) < l(σ), i.e. i+1 before i in the word."""
        return [i for i in range(1, self.n) if self.position_of(i + 1) < self.position_of(i)]

    def reduced_word(self) -> tuple[int, ...]:
        """Letters (i_1, …, i_p) with σ = s_{i_1} ⋯ s_{i_p} and p = l(σ)."""
        letters = []
        current = self
        while True:
            descents = current.left_descents()
            if not descents:
                break
            i = descents[0]
            letters.append(i)
            current = current.left_multiply(i)
        return tuple(letters)


def bruhat_leq(sigma1: Permutation, sigma2: Permutation) -> bool:
    """Left weak order: Inv(σ₁) ⊆ Inv(σ₂)."""
    if sigma1.n != sigma2.n:
        raise PermutationError(f"permutations of different sizes {sigma1.n} and {sigma2.n}")
    return sigma1.inversions <= sigma2.inversions
