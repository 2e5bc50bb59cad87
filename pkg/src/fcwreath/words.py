"""Freely reduced words over the group generators s and t.

Letters are small integers: S = 1 and T = 2 denote the generators, and
negation denotes the formal inverse, so a word is a sequence over
{S, -S, T, -T}.  Word objects reduce on construction and stay reduced,
so equality of Word values is equality in the free group F(s, t); use
the group module to decide equality in the quotient groups.
"""

from __future__ import annotations

from itertools import groupby
from typing import Iterable, Iterator

S = 1
T = 2

_VALID = frozenset((S, -S, T, -T))


def reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    """Freely reduce a letter sequence (cancel adjacent inverse pairs)."""
    out: list[int] = []
    for g in letters:
        if g not in _VALID:
            raise ValueError(f"invalid letter {g!r}")
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


class Word:
    """An immutable, freely reduced word in s, t, s^-1, t^-1."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        object.__setattr__(self, "letters", reduce_letters(letters))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple(-g for g in reversed(self.letters)))

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return self.inverse() ** (-k)
        return Word(self.letters * k)

    def conjugate(self, by: "Word") -> "Word":
        """by * self * by^-1."""
        return by * self * by.inverse()

    def is_identity(self) -> bool:
        return not self.letters

    def is_cyclically_reduced(self) -> bool:
        return not self.letters or self.letters[0] != -self.letters[-1]

    def render(self) -> str:
        """Grammar-compatible text; parse_word(w.render()) == w."""
        parts = []
        for g, run in groupby(self.letters):
            n = sum(1 for _ in run)
            base = "s" if abs(g) == S else "t"
            exp = n if g > 0 else -n
            parts.append(base if exp == 1 else f"{base}^{exp}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Word({self.render()!r})" if self.letters else "Word()"


EMPTY = Word()
WORD_S = Word((S,))
WORD_T = Word((T,))


def s_gen(i: int = 0) -> Word:
    """The conjugate generator t^i s t^-i."""
    return Word((T,) * i + (S,) + (-T,) * i) if i >= 0 else Word(
        (-T,) * (-i) + (S,) + (T,) * (-i))


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u v u^-1 v^-1."""
    return u * v * u.inverse() * v.inverse()
