"""Exact arithmetic in the lamplighter group C2 wr Z.

Elements are pairs (config, shift): a finite set of integer positions
whose lamp is on, and an integer translation.  The product shifts the
right factor's lamps by the left factor's translation and adds mod 2:

    (A, m) * (B, n) = (A xor (B + m), m + n)
"""

from __future__ import annotations

from dataclasses import dataclass

from .dihedral import INF, checked64


@dataclass(frozen=True)
class LampElement:
    config: frozenset[int] = frozenset()
    shift: int = 0

    def __post_init__(self):
        checked64(self.shift)
        for p in self.config:
            checked64(p)

    @classmethod
    def dirac(cls, i: int = 0) -> "LampElement":
        return cls(frozenset((i,)), 0)

    @classmethod
    def translation(cls, m: int = 1) -> "LampElement":
        return cls(frozenset(), m)

    def __mul__(self, other: "LampElement") -> "LampElement":
        if not isinstance(other, LampElement):
            return NotImplemented
        moved = frozenset(checked64(p + self.shift) for p in other.config)
        return LampElement(self.config ^ moved,
                           checked64(self.shift + other.shift))

    def inverse(self) -> "LampElement":
        moved = frozenset(p - self.shift for p in self.config)
        return LampElement(moved, -self.shift)

    def __pow__(self, k: int) -> "LampElement":
        if k < 0:
            return self.inverse() ** (-k)
        out = LampElement()
        for _ in range(k):
            out = out * self
        return out

    def is_identity(self) -> bool:
        return not self.config and self.shift == 0

    def order(self) -> float | int:
        """1, 2 or INF.

        A nonzero translation has infinite order; a pure configuration is
        an involution because lamps are mod 2.
        """
        if self.shift != 0:
            return INF
        return 1 if not self.config else 2

    def render(self) -> str:
        inside = ", ".join(str(p) for p in sorted(self.config))
        return f"({{{inside}}}, {self.shift})"

    def __str__(self) -> str:
        return self.render()
