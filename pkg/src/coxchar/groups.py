"""Classical Coxeter groups A_{n-1}, B_n, D_n as signed permutation groups.

All three families act on Q^n by signed permutation matrices: type A
elements are the all-positive ones (with the reflection representation the
sum-zero subspace), type D the even-signed ones.  Conjugacy classes are
labelled by (signed) partitions; in type D a class with all cycles positive
of even length splits in two, distinguished by a +/- tag.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from . import centralizers
from .linalg import Subspace, kernel
from .partitions import SignedPartition, partitions, signed_partitions
from .signedperm import SignedPermutation, all_signed_permutations

__all__ = [
    "BudgetError",
    "GroupDescriptor",
    "ConjClass",
    "DEFAULT_ELEMENT_BUDGET",
    "signed_cycle_type",
    "conjugacy_classes",
    "d_split_side",
    "class_key",
    "reflection_length",
    "sign_character",
    "fixed_space",
    "fixed_space_ambient",
    "Hyperplane",
    "hyperplane_set",
    "hyperplane_action",
    "group_elements",
]

DEFAULT_ELEMENT_BUDGET = 2**8 * factorial(8)


class BudgetError(RuntimeError):
    """An enumeration or lattice build would exceed the configured budget."""


@dataclass(frozen=True)
class GroupDescriptor:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "B", "D"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if self.family == "D" and self.rank < 4:
            raise ValueError("type D needs rank >= 4")

    @property
    def degree(self) -> int:
        """Number of coordinates the group permutes."""
        return self.rank + 1 if self.family == "A" else self.rank

    @property
    def order(self) -> int:
        n = self.degree
        if self.family == "A":
            return factorial(n)
        if self.family == "B":
            return 2**n * factorial(n)
        return 2 ** (n - 1) * factorial(n)

    def contains(self, w: SignedPermutation) -> bool:
        if w.n != self.degree:
            return False
        if self.family == "A":
            return w.is_positive()
        if self.family == "D":
            return w.is_even_signed()
        return True

    def coxeter_generators(self) -> tuple[SignedPermutation, ...]:
        n = self.degree
        trans = [SignedPermutation.transposition(n, i) for i in range(1, n)]
        if self.family == "A":
            return tuple(trans)
        if self.family == "B":
            return (SignedPermutation.flip(n),) + tuple(trans)
        return (SignedPermutation.neg_transposition(n),) + tuple(trans)

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class ConjClass:
    rep: SignedPermutation
    label: SignedPartition
    tag: str | None
    size: int
    centralizer_order: int

    @property
    def key(self):
        return (self.label, self.tag)

    def __str__(self) -> str:
        tag = f"^{self.tag}" if self.tag else ""
        return f"{self.label}{tag}"


def signed_cycle_type(w: SignedPermutation) -> SignedPartition:
    neg, pos = [], []
    for support, sign in w.signed_cycles():
        (neg if sign < 0 else pos).append(len(support))
    return SignedPartition(tuple(sorted(neg)), tuple(sorted(pos, reverse=True)))


def _splits_in_d(mu: SignedPartition) -> bool:
    return not mu.neg and all(p % 2 == 0 for p in mu.pos)


def d_split_side(w: SignedPermutation) -> str:
    """Which of the two D-classes of an all-even positive type w lies in.

    Returns '+' when w is conjugate to w_mu inside the even-signed group,
    '-' when it is conjugate to t w_mu t.  Any conjugator x with
    x w x^{-1} = w_mu has well-defined sign parity because C(w_mu) is
    even-signed for these types; we build one cycle by cycle.
    """
    mu = signed_cycle_type(w)
    if not _splits_in_d(mu):
        raise ValueError(f"class {mu} does not split")
    if not w.is_even_signed():
        raise ValueError("element is not even-signed")
    cycles = sorted(
        w.signed_cycles(), key=lambda c: (-len(c[0]), c[0][0])
    )
    images = [0] * w.n
    position = 1
    for support, _ in cycles:
        v = support[0]
        for _ in range(len(support)):
            if v > 0:
                images[v - 1] = position
            else:
                images[-v - 1] = -position
            v = w(v)
            position += 1
    conjugator = SignedPermutation(tuple(images))
    return "-" if conjugator.neg_count() % 2 else "+"


def class_key(w: SignedPermutation, family: str):
    """Fusion key (label, tag) of the class of w in its group."""
    mu = signed_cycle_type(w)
    if family == "D" and _splits_in_d(mu):
        return (mu, d_split_side(w))
    return (mu, None)


@lru_cache(maxsize=None)
def _classes(G: GroupDescriptor) -> tuple[ConjClass, ...]:
    n = G.degree
    out = []
    if G.family == "A":
        for lam in partitions(n):
            mu = SignedPartition((), lam)
            c = centralizers.symmetric_centralizer_order(mu)
            out.append(ConjClass(centralizers.w_mu(n, mu), mu, None, G.order // c, c))
        out.sort(key=lambda cls: (cls.label.neg, cls.label.pos))
        return tuple(out)
    if G.family == "B":
        for mu in signed_partitions(n):
            c = centralizers.centralizer_order(mu)
            out.append(ConjClass(centralizers.w_mu(n, mu), mu, None, G.order // c, c))
        return tuple(out)
    t = SignedPermutation.flip(n)
    for mu in signed_partitions(n):
        if len(mu.neg) % 2:
            continue
        cb = centralizers.centralizer_order(mu)
        rep = centralizers.w_mu(n, mu)
        if _splits_in_d(mu):
            out.append(ConjClass(rep, mu, "+", G.order // cb, cb))
            out.append(ConjClass(rep.conjugate(t), mu, "-", G.order // cb, cb))
        else:
            out.append(ConjClass(rep, mu, None, 2 * G.order // cb, cb // 2))
    return tuple(out)


def conjugacy_classes(G: GroupDescriptor, budget=DEFAULT_ELEMENT_BUDGET):
    if budget is not None and G.order > budget:
        raise BudgetError(
            f"|{G}| = {G.order} exceeds the element budget {budget}"
        )
    return _classes(G)


@lru_cache(maxsize=None)
def class_index(G: GroupDescriptor) -> dict:
    return {cls.key: k for k, cls in enumerate(_classes(G))}


def reflection_length(G: GroupDescriptor, w: SignedPermutation) -> int:
    """Codimension of the fixed space in the reflection representation."""
    positive = sum(1 for _, sign in w.signed_cycles() if sign > 0)
    return G.degree - positive


def sign_character(G: GroupDescriptor, w: SignedPermutation) -> int:
    """Determinant of w on the reflection representation."""
    cycles = w.signed_cycles()
    perm_sign = -1 if (w.n - len(cycles)) % 2 else 1
    if G.family == "A":
        return perm_sign
    return perm_sign * (-1 if w.neg_count() % 2 else 1)


def fixed_space_ambient(w: SignedPermutation) -> Subspace:
    """Fix(w) in Q^n: spanned by the indicator vectors of positive cycles."""
    rows = []
    for support, sign in w.signed_cycles():
        if sign > 0:
            rows.append(tuple(1 if i + 1 in support else 0 for i in range(w.n)))
    return Subspace(w.n, tuple(rows))


def fixed_space(G: GroupDescriptor, w: SignedPermutation) -> Subspace:
    """Fix(w) in the reflection representation (sum-zero subspace for A)."""
    if G.family != "A":
        return fixed_space_ambient(w)
    rows = [[a - b for a, b in zip(row, m_row)] for row, m_row in
            zip(w.matrix_rows(), Subspace.full(w.n).basis)]
    rows.append([1] * w.n)
    return kernel(w.n, rows)


# -- the reflection arrangement ------------------------------------------------


@dataclass(frozen=True)
class Hyperplane:
    """x_i = rel * x_j for j > 0; the coordinate hyperplane x_i = 0 if j = 0."""

    i: int
    j: int
    rel: int

    def normal(self, n: int) -> tuple[int, ...]:
        row = [0] * n
        row[self.i - 1] = 1
        if self.j:
            row[self.j - 1] = -self.rel
        return tuple(row)

    def __str__(self) -> str:
        if not self.j:
            return f"x{self.i}=0"
        return f"x{self.i}={'' if self.rel > 0 else '-'}x{self.j}"


@lru_cache(maxsize=None)
def hyperplane_set(G: GroupDescriptor) -> tuple[Hyperplane, ...]:
    n = G.degree
    out = []
    if G.family == "B":
        out.extend(Hyperplane(i, 0, 0) for i in range(1, n + 1))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append(Hyperplane(i, j, 1))
            if G.family != "A":
                out.append(Hyperplane(i, j, -1))
    return tuple(out)


@lru_cache(maxsize=None)
def _hyperplane_index(G: GroupDescriptor) -> dict:
    return {h: k for k, h in enumerate(hyperplane_set(G))}


def hyperplane_action(G: GroupDescriptor, w: SignedPermutation) -> tuple[int, ...]:
    """Permutation of hyperplane indices induced by w."""
    index = _hyperplane_index(G)
    out = []
    for h in hyperplane_set(G):
        a = w(h.i)
        if not h.j:
            image = Hyperplane(abs(a), 0, 0)
        else:
            b = w(h.j)
            rel = h.rel if (a > 0) == (b > 0) else -h.rel
            ai, bi = abs(a), abs(b)
            image = Hyperplane(min(ai, bi), max(ai, bi), rel)
        out.append(index[image])
    return tuple(out)


def group_elements(G: GroupDescriptor, budget=DEFAULT_ELEMENT_BUDGET):
    """Iterate all elements; for brute-force checks on small groups."""
    if budget is not None and G.order > budget:
        raise BudgetError(f"|{G}| = {G.order} exceeds the element budget {budget}")
    for w in all_signed_permutations(G.degree):
        if G.contains(w):
            yield w
