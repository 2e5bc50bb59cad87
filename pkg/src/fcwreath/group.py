"""Words in the two-generator group G and the decision procedures on them.

G is generated by s and t inside the product Z x prod_n H_n, where the
n-th layer H_n = D^{k_n} x| C_{k_n} is built from two strictly increasing
integer sequences (d_n), (k_n) with d_1 > 1 and k_n >= 2 d_n.  The letter
s projects to a generator of Z and to the involution sigma at every
layer; t projects to 0 in Z and to the shift generator at every layer.

Every word rewrites to the normal form  s_{i_1}^{e_1} ... s_{i_r}^{e_r} t^m
with s_i = t^i s t^-i.  Reducing its exponents mod 2 per position gives
the image in the lamplighter quotient; the integer exponent sum gives the
Z-coordinate; and the span of the indices bounds which layers can see the
element at all.  Those three facts together decide the word problem.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .dihedral import INF, DihedralElement
from .lamplighter import LampElement
from .layers import LayerParams, project_word
from .words import S, T, Word


class ListTooShortError(ValueError):
    """An explicit finite sequence cannot certify the requested layer."""


# ---------------------------------------------------------------------------
# sequence rules


@dataclass(frozen=True)
class AffineRule:
    """n -> slope * n + offset, defined for every n >= 1."""

    slope: int
    offset: int

    def __post_init__(self):
        if self.slope < 1:
            raise ValueError("affine sequences must be strictly increasing "
                             f"(slope {self.slope} < 1)")

    def value(self, n: int) -> int:
        return self.slope * n + self.offset

    def max_n(self) -> Optional[int]:
        return None

    def last_leq(self, limit: int) -> int:
        """Largest n >= 0 with value(n) <= limit."""
        return max(0, (limit - self.offset) // self.slope)


@dataclass(frozen=True)
class ListRule:
    """Explicit finite sequence; queries past the end refuse loudly."""

    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("empty sequence list")
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise ValueError(f"sequence {self.values} is not strictly increasing")

    def value(self, n: int) -> int:
        if n > len(self.values):
            raise ListTooShortError(
                f"sequence list of length {len(self.values)} has no term {n}")
        return self.values[n - 1]

    def max_n(self) -> Optional[int]:
        return len(self.values)

    def last_leq(self, limit: int) -> int:
        if self.values[-1] <= limit:
            raise ListTooShortError(
                f"sequence list ending at {self.values[-1]} cannot certify "
                f"where the terms pass {limit}")
        lo = 0
        for v in self.values:
            if v > limit:
                break
            lo += 1
        return lo


Rule = Union[AffineRule, ListRule]


@dataclass(frozen=True)
class GroupParams:
    """The pair of sequence rules defining one group of the family."""

    d_rule: Rule
    k_rule: Rule
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.d_rule.value(1) <= 1:
            raise ValueError(f"d_1 must be > 1, got {self.d_rule.value(1)}")
        d_aff = isinstance(self.d_rule, AffineRule)
        k_aff = isinstance(self.k_rule, AffineRule)
        if d_aff and k_aff:
            # k(n) - 2 d(n) is affine in n; nonnegative on n >= 1 iff it is
            # nonnegative at n = 1 and has nonnegative slope
            if self.k_rule.slope < 2 * self.d_rule.slope or \
                    self.k_rule.value(1) < 2 * self.d_rule.value(1):
                raise ValueError("need k_n >= 2 d_n for all n")
        else:
            top = min(r.max_n() for r in (self.d_rule, self.k_rule)
                      if r.max_n() is not None)
            for n in range(1, top + 1):
                if self.k_rule.value(n) < 2 * self.d_rule.value(n):
                    raise ValueError(
                        f"need k_n >= 2 d_n, violated at n={n}: "
                        f"k={self.k_rule.value(n)}, d={self.d_rule.value(n)}")

    @classmethod
    def paper(cls) -> "GroupParams":
        """The torsion-free preset d_n = n + 1, k_n = 2n + 2."""
        return cls(AffineRule(1, 1), AffineRule(2, 2), label="paper")

    @classmethod
    def affine(cls, d: tuple[int, int], k: tuple[int, int]) -> "GroupParams":
        return cls(AffineRule(*d), AffineRule(*k),
                   label=f"d={d[0]}n+{d[1]},k={k[0]}n+{k[1]}")

    @classmethod
    def from_lists(cls, d: list[int] | tuple[int, ...],
                   k: list[int] | tuple[int, ...]) -> "GroupParams":
        return cls(ListRule(tuple(d)), ListRule(tuple(k)),
                   label=f"d={list(d)},k={list(k)}")

    def d(self, n: int) -> int:
        return self.d_rule.value(n)

    def k(self, n: int) -> int:
        return self.k_rule.value(n)

    def max_layer(self) -> Optional[int]:
        tops = [r.max_n() for r in (self.d_rule, self.k_rule)]
        tops = [t for t in tops if t is not None]
        return min(tops) if tops else None

    def layer(self, n: int) -> LayerParams:
        return LayerParams(n, self.d(n), self.k(n))

    def bound_for_span(self, span: int) -> int:
        """Largest layer index whose d-value is <= span + 1.

        Beyond this index the a-block and b-block of any normal form with
        index span <= span cannot collide, so all higher projections of a
        lamplighter-trivial element are trivial.
        """
        b = self.d_rule.last_leq(span + 1)
        top = self.max_layer()
        if top is not None and b > top:
            raise ListTooShortError(
                f"bound {b} exceeds the {top} layers the sequence lists define")
        return b

    def describe(self) -> str:
        return self.label or "custom"


# ---------------------------------------------------------------------------
# normal form


@dataclass(frozen=True)
class NormalForm:
    """s_{i_1}^{e_1} ... s_{i_r}^{e_r} t^m with adjacent indices distinct.

    Exponents stay in Z: the Z-coordinate needs the integer sum, only the
    per-layer projections reduce mod 2, and reducing here would corrupt
    the former.
    """

    pairs: tuple[tuple[int, int], ...]
    t_exp: int

    def index_span(self) -> int:
        if not self.pairs:
            return 0
        idx = [i for i, _ in self.pairs]
        return max(idx) - min(idx)

    def render(self) -> str:
        parts = []
        for i, e in self.pairs:
            parts.append(f"s_{i}" if e == 1 else f"s_{i}^{e}")
        if self.t_exp:
            parts.append(f"t^{self.t_exp}" if self.t_exp != 1 else "t")
        return " ".join(parts) if parts else "e"

    def __str__(self) -> str:
        return self.render()


def normal_form(w: Word) -> NormalForm:
    """Scan the word once, emitting (offset, +-1) at each s-letter."""
    pairs: list[list[int]] = []
    c = 0
    for g in w.letters:
        if g == T:
            c += 1
        elif g == -T:
            c -= 1
        else:
            e = 1 if g == S else -1
            if pairs and pairs[-1][0] == c:
                pairs[-1][1] += e
                if pairs[-1][1] == 0:
                    pairs.pop()
            else:
                pairs.append([c, e])
    return NormalForm(tuple((i, e) for i, e in pairs), c)


# ---------------------------------------------------------------------------
# projections and the word problem


def pi0(w: Word) -> int:
    """Exponent sum of s: the coordinate on the central Z factor."""
    total = 0
    for g in w.letters:
        if g == S:
            total += 1
        elif g == -S:
            total -= 1
    return total


def quotient_image(w: Word) -> LampElement:
    """Image in the lamplighter quotient: exponent parities per index."""
    nf = normal_form(w)
    config = set()
    for i, e in nf.pairs:
        if e % 2:
            config.symmetric_difference_update((i,))
    return LampElement(frozenset(config), nf.t_exp)


def support_bound(nf: NormalForm, gp: GroupParams) -> int:
    """Certified truncation layer for an element with trivial quotient image.

    For such an element every projection above the returned index is
    trivial: with d_n >= span + 2 and k_n >= 2 d_n the a-letters and
    b-letters of the contributing conjugates land in disjoint position
    blocks, so each coordinate is a product of equal letters with the
    (even) parity of the corresponding lamp.  Meaningless if the quotient
    image is nontrivial.
    """
    return gp.bound_for_span(nf.index_span())


def is_identity(w: Word, gp: GroupParams) -> bool:
    """Decide w = e in G."""
    q = quotient_image(w)
    if not q.is_identity():
        return False
    if pi0(w) != 0:
        return False
    bound = support_bound(normal_form(w), gp)
    return all(project_word(gp.layer(n), w).is_identity()
               for n in range(1, bound + 1))


def order(w: Word, gp: GroupParams) -> float | int:
    """Order of the element of G represented by w: 1, 2 or INF.

    The lamplighter image decides almost everything: a nonzero shift has
    infinite order; a trivial image puts the element in the free abelian
    kernel, where only the identity has finite order; an involution image
    leaves order 2 or infinity, settled by testing w^2.
    """
    q = quotient_image(w)
    qo = q.order()
    if qo == INF:
        return INF
    if qo == 1:
        return 1 if is_identity(w, gp) else INF
    return 2 if is_identity(w * w, gp) else INF


@dataclass(frozen=True)
class FCDecomposition:
    """Coordinates of a finite-conjugacy-class element.

    z is the (even) coordinate on the central Z factor; layers maps each
    layer index with a nontrivial projection to its coordinate vector,
    every entry of which lies in the derived subgroup D'.
    """

    z: int
    layers: dict[int, tuple[DihedralElement, ...]]

    def render(self) -> str:
        lines = [f"z={self.z}"]
        for n in sorted(self.layers):
            inside = ", ".join(f"{i + 1}:{x.render()}"
                               for i, x in enumerate(self.layers[n])
                               if not x.is_identity())
            lines.append(f"layer {n}: [{inside}]")
        return "\n".join(lines)


def fc_membership(w: Word, gp: GroupParams) -> Optional[FCDecomposition]:
    """Decompose w over the FC-center, or None if it lies outside.

    Membership is exactly triviality of the lamplighter image.  The
    returned layer vectors are certified to lie in (D')^k; a violation
    would mean the arithmetic itself is broken, hence RuntimeError.
    """
    q = quotient_image(w)
    if not q.is_identity():
        return None
    z = pi0(w)
    if z % 2:
        raise RuntimeError(
            f"quotient-trivial word {w.render()!r} with odd Z-coordinate {z}")
    bound = support_bound(normal_form(w), gp)
    out: dict[int, tuple[DihedralElement, ...]] = {}
    for n in range(1, bound + 1):
        el = project_word(gp.layer(n), w)
        if el.shift != 0:
            raise RuntimeError(
                f"quotient-trivial word {w.render()!r} with nonzero shift "
                f"at layer {n}")
        if el.is_identity():
            continue
        bad = [i for i, x in enumerate(el.coords) if not x.in_derived()]
        if bad:
            raise RuntimeError(
                f"layer {n} coordinate {bad[0] + 1} of {w.render()!r} "
                "escapes the derived subgroup")
        out[n] = el.coords
    return FCDecomposition(z, out)
