"""Exact arithmetic in the infinite dihedral group D = <a, b | a^2 = b^2 = 1>.

Every element of D has a unique normal form (ab)^n * a^eps with n an
integer and eps in {0, 1}; we store the pair (trans, refl) = (n, eps).
The subgroup generated by ab is infinite cyclic and D splits as its
semidirect product with <a>, which gives an O(1) multiplication law:

    (n1, e1) * (n2, e2) = (n1 + (-1)^e1 * n2,  e1 xor e2)

Dictionary for the generators:  a = (0, 1),  b = (-1, 1),  ab = (1, 0),
(ba)^2 = (-2, 0).  The derived subgroup D' is generated by (ab)^2, i.e.
the even translations.
"""

from __future__ import annotations

from dataclasses import dataclass

INF = float("inf")

# Translations are confined to the signed 64-bit range.  Python integers
# never wrap, but a runaway exponent should fail loudly instead of eating
# memory, and the bound documents the arithmetic width the rest of the
# package is allowed to assume.
INT64_MAX = 2**63 - 1


def checked64(n: int) -> int:
    """Return n, raising OverflowError outside the signed 64-bit range."""
    if n > INT64_MAX or n < -INT64_MAX - 1:
        raise OverflowError(f"value {n} exceeds the 64-bit arithmetic bound")
    return n


@dataclass(frozen=True)
class DihedralElement:
    """Normal form (ab)^trans * a^refl of an element of D."""

    trans: int = 0
    refl: int = 0

    def __post_init__(self):
        if self.refl not in (0, 1):
            raise ValueError(f"refl must be 0 or 1, got {self.refl}")
        checked64(self.trans)

    def __mul__(self, other: "DihedralElement") -> "DihedralElement":
        if not isinstance(other, DihedralElement):
            return NotImplemented
        t = self.trans - other.trans if self.refl else self.trans + other.trans
        return DihedralElement(checked64(t), self.refl ^ other.refl)

    def inverse(self) -> "DihedralElement":
        # every reflection is an involution
        if self.refl:
            return self
        return DihedralElement(-self.trans, 0)

    def __pow__(self, k: int) -> "DihedralElement":
        if k < 0:
            return self.inverse() ** (-k)
        if self.refl:
            return IDENTITY if k % 2 == 0 else self
        return DihedralElement(checked64(self.trans * k), 0)

    def is_identity(self) -> bool:
        return self.trans == 0 and self.refl == 0

    def order(self) -> float | int:
        """1, 2 or INF; the torsion elements of D are exactly the reflections."""
        if self.refl:
            return 2
        return 1 if self.trans == 0 else INF

    def phi(self) -> tuple[int, int]:
        """Image under (phi_a, phi_b) in C2 x C2.

        phi_a counts the a-letters mod 2 and phi_b the b-letters mod 2 of
        any word representing the element; on the normal form this is
        ((trans + refl) % 2, trans % 2).
        """
        return ((self.trans + self.refl) % 2, self.trans % 2)

    def in_derived(self) -> bool:
        """True iff the element lies in D' = <(ab)^2>."""
        return self.refl == 0 and self.trans % 2 == 0

    def render(self) -> str:
        if self.is_identity():
            return "e"
        parts = []
        if self.trans == 1:
            parts.append("ab")
        elif self.trans != 0:
            parts.append(f"(ab)^{self.trans}")
        if self.refl:
            parts.append("a")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


IDENTITY = DihedralElement(0, 0)
GEN_A = DihedralElement(0, 1)
GEN_B = DihedralElement(-1, 1)
