"""The layer groups H_n = D^k x| C_k with C_k cyclically permuting factors.

Coordinates are stored 0-indexed: position p in {1..k} of the group
definition lives at index p-1.  The cycle direction is pinned so that
conjugating by the shift generator moves position x to x + 1; that is
the orientation under which t^i s t^-i projects to the standard element
r_i (letter a at position i+1, letter b at position d+i, both mod k).
The test suite validates this against direct conjugation, since nothing
else fixes the orientation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dihedral import IDENTITY, DihedralElement
from .words import S, T, Word


@dataclass(frozen=True)
class LayerParams:
    """Index n and the two size parameters (d, k) of one layer."""

    n: int
    d: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("layer index must be >= 1")
        if self.d < 2:
            # d_1 > 1 and strict growth force d >= 2 at every layer
            raise ValueError(f"layer d must be >= 2, got {self.d}")
        if self.k < 2 * self.d:
            raise ValueError(f"need k >= 2d, got k={self.k}, d={self.d}")


@dataclass(frozen=True)
class LayerElement:
    """Element (coords, shift) of D^k x| C_k; len(coords) == k."""

    coords: tuple[DihedralElement, ...]
    shift: int

    def __post_init__(self):
        k = len(self.coords)
        if k == 0:
            raise ValueError("empty coordinate vector")
        if not 0 <= self.shift < k:
            object.__setattr__(self, "shift", self.shift % k)

    def __mul__(self, other: "LayerElement") -> "LayerElement":
        if not isinstance(other, LayerElement):
            return NotImplemented
        k = len(self.coords)
        if len(other.coords) != k:
            raise ValueError(
                f"layer size mismatch: {k} vs {len(other.coords)}")
        c = self.shift
        coords = tuple(self.coords[i] * other.coords[(i - c) % k]
                       for i in range(k))
        return LayerElement(coords, (c + other.shift) % k)

    def inverse(self) -> "LayerElement":
        k = len(self.coords)
        c = self.shift
        coords = tuple(self.coords[(i + c) % k].inverse() for i in range(k))
        return LayerElement(coords, -c % k)

    def __pow__(self, n: int) -> "LayerElement":
        if n < 0:
            return self.inverse() ** (-n)
        out = identity(len(self.coords))
        for _ in range(n):
            out = out * self
        return out

    def is_identity(self) -> bool:
        return self.shift == 0 and all(x.is_identity() for x in self.coords)

    def render(self) -> str:
        """1-based sparse display "[pos:elt, ...]; shift=c"."""
        inside = ", ".join(f"{i + 1}:{x.render()}"
                           for i, x in enumerate(self.coords)
                           if not x.is_identity())
        return f"[{inside}]; shift={self.shift}"

    def __str__(self) -> str:
        return self.render()


def identity(k: int) -> LayerElement:
    return LayerElement((IDENTITY,) * k, 0)


def sigma(p: LayerParams) -> LayerElement:
    """The involution with a at position 1 and b at position d."""
    return r_elem(p, 0)


def r_elem(p: LayerParams, i: int) -> LayerElement:
    """a at position i+1 and b at position d+i (mod k); equals the
    conjugate of sigma by the i-th power of the shift generator."""
    coords = [IDENTITY] * p.k
    coords[i % p.k] = DihedralElement(0, 1)            # a at position i+1
    coords[(p.d - 1 + i) % p.k] = DihedralElement(-1, 1)  # b at position d+i
    return LayerElement(tuple(coords), 0)


def shift_gen(p: LayerParams) -> LayerElement:
    """Image of t: the trivial vector with shift 1."""
    return LayerElement((IDENTITY,) * p.k, 1)


def project_word(p: LayerParams, w: Word) -> LayerElement:
    """Project a word in s, t onto this layer.

    s and s^-1 both map to sigma (an involution), t to the shift
    generator.  Evaluated letter by letter; each s-letter touches two
    coordinates, each t-letter only the running shift.
    """
    d, k = p.d, p.k
    trans = [0] * k
    refl = [0] * k
    c = 0
    for g in w.letters:
        if g == T:
            c += 1
        elif g == -T:
            c -= 1
        else:
            ia = c % k
            ib = (d - 1 + c) % k
            # right-multiply coordinate ia by a and ib by b
            refl[ia] ^= 1
            trans[ib] += 1 if refl[ib] else -1
            refl[ib] ^= 1
    coords = tuple(DihedralElement(t_, r_) for t_, r_ in zip(trans, refl))
    return LayerElement(coords, c % k)
