"""Shapes: conjugacy classes of parabolic subgroups, and their cuspidal classes.

A shape of B_n is a partition lam of m, 0 <= m <= n, standing for the
parabolic W_{n-m} x S_lam (the first n-m coordinates carry a full
hyperoctahedral block, the rest Young blocks of sizes lam).  A shape of
A_{n-1} is a partition of n.  For D_n the shapes are the partitions of m
for m <= n-2 (parabolic D_{n-m} x S_lam), together with the partitions of
n (Young subgroups); a partition of n with all parts even labels two
non-conjugate parabolics S_lam and t S_lam t, tagged + and -.

A class is cuspidal in a parabolic exactly when its fixed space equals the
fixed space of the parabolic; labels of cuspidal classes per shape are the
signed partitions mu with mu_bar = ((n-m), lam), in type D additionally
with an even number of negative parts.

The type-D list (partitions of n-1 dropped as redundant, all-even
partitions of n doubled, everything else kept once) is cross-checked in
the test suite against exhaustive conjugacy of all standard parabolics
for n = 4 and 5; no independent check is run at higher rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import centralizers
from .groups import ConjClass, GroupDescriptor, fixed_space_ambient
from .linalg import Subspace
from .partitions import SignedPartition, format_partition, parse_partition, partitions
from .signedperm import SignedPermutation

__all__ = [
    "Shape",
    "shapes",
    "parabolic_generators",
    "shape_fix_space",
    "shape_rank",
    "cuspidal_labels",
    "is_cuspidal",
    "class_rep",
    "parse_shape",
]


@dataclass(frozen=True, order=True)
class Shape:
    lam: tuple[int, ...]
    tag: str | None = None

    def __str__(self) -> str:
        text = format_partition(self.lam) or "()"
        return f"{text}^{self.tag}" if self.tag else text


def parse_shape(text: str) -> Shape:
    text = text.strip()
    tag = None
    if text.endswith(("^+", "^-")):
        tag = text[-1]
        text = text[:-2]
    return Shape(parse_partition(text), tag)


@lru_cache(maxsize=None)
def shapes(G: GroupDescriptor) -> tuple[Shape, ...]:
    n = G.degree
    out = []
    if G.family == "A":
        return tuple(Shape(lam) for lam in partitions(n))
    if G.family == "B":
        for m in range(n + 1):
            out.extend(Shape(lam) for lam in partitions(m))
        return tuple(out)
    for m in range(n - 1):
        out.extend(Shape(lam) for lam in partitions(m))
    for lam in partitions(n):
        if all(p % 2 == 0 for p in lam):
            out.append(Shape(lam, "+"))
            out.append(Shape(lam, "-"))
        else:
            out.append(Shape(lam))
    return tuple(out)


def _check_shape(G: GroupDescriptor, shape: Shape):
    n = G.degree
    m = sum(shape.lam)
    if G.family == "A":
        if m != n or shape.tag:
            raise ValueError(f"{shape} is not a shape of {G}")
    elif G.family == "B":
        if m > n or shape.tag:
            raise ValueError(f"{shape} is not a shape of {G}")
    else:
        if m == n:
            even = all(p % 2 == 0 for p in shape.lam)
            if even != (shape.tag is not None):
                raise ValueError(f"{shape} is not a shape of {G}")
        elif m > n - 2 or shape.tag:
            raise ValueError(f"{shape} is not a shape of {G}")
    return n, m


def _young_generators(n, lam, offset):
    gens = []
    u = offset
    for part in lam:
        gens.extend(
            SignedPermutation.transposition(n, i) for i in range(u + 1, u + part)
        )
        u += part
    return gens


def parabolic_generators(G: GroupDescriptor, shape: Shape):
    """Reflections generating the standard parabolic of this shape."""
    n, m = _check_shape(G, shape)
    head = n - m
    gens: list[SignedPermutation] = []
    if G.family == "B" and head:
        gens.append(SignedPermutation.flip(n))
        gens.extend(SignedPermutation.transposition(n, i) for i in range(1, head))
    elif G.family == "D" and head:
        gens.append(SignedPermutation.neg_transposition(n))
        gens.extend(SignedPermutation.transposition(n, i) for i in range(1, head))
    young = _young_generators(n, shape.lam, head)
    if shape.tag == "-":
        t = SignedPermutation.flip(n)
        young = [g.conjugate(t) for g in young]
    return tuple(gens + young)


def shape_rank(G: GroupDescriptor, shape: Shape) -> int:
    """Rank of the parabolic = codimension of its fixed space."""
    n, _ = _check_shape(G, shape)
    return n - len(shape.lam)


def shape_fix_space(G: GroupDescriptor, shape: Shape) -> Subspace:
    """Fixed space of the shape's standard parabolic in Q^n."""
    n, m = _check_shape(G, shape)
    rows = []
    u = n - m
    for part in shape.lam:
        row = [0] * n
        for c in range(u, u + part):
            row[c] = 1
        if shape.tag == "-" and u == 0:
            row[0] = -1
        rows.append(row)
        u += part
    return Subspace.from_vectors(n, rows)


def cuspidal_labels(G: GroupDescriptor, shape: Shape):
    """Keys (mu, tag) of the cuspidal classes of the shape's parabolic."""
    n, m = _check_shape(G, shape)
    if G.family == "A":
        return ((SignedPartition((), shape.lam), None),)
    if G.family == "D" and m == n:
        mu = SignedPartition((), shape.lam)
        return ((mu, shape.tag),)
    out = []
    for nu in partitions(n - m):
        if G.family == "D" and len(nu) % 2:
            continue
        out.append((SignedPartition(tuple(reversed(nu)), shape.lam), None))
    return tuple(out)


def class_rep(G: GroupDescriptor, label: SignedPartition, tag: str | None = None):
    """The class representative w_mu (or its t-conjugate for tag '-')."""
    n = G.degree
    if label.n != n:
        raise ValueError(f"{label} is not a label for {G}")
    if G.family == "A" and label.neg:
        raise ValueError("type A labels have no negative parts")
    if G.family == "D" and len(label.neg) % 2:
        raise ValueError("type D labels need an even number of negative parts")
    split = G.family == "D" and not label.neg and all(p % 2 == 0 for p in label.pos)
    if (tag is not None) != split:
        raise ValueError(f"tag {tag!r} invalid for label {label} in {G}")
    rep = centralizers.w_mu(n, label)
    if tag == "-":
        rep = rep.conjugate(SignedPermutation.flip(n))
    return rep


def _member_of_parabolic(G, w, shape) -> bool:
    n, m = _check_shape(G, shape)
    head = n - m
    v = w
    if shape.tag == "-":
        v = w.conjugate(SignedPermutation.flip(n))
    if any(abs(v(i)) > head for i in range(1, head + 1)):
        return False
    u = head
    for part in shape.lam:
        for i in range(u + 1, u + part + 1):
            if not u < v(i) <= u + part:
                return False
        u += part
    if G.family == "A":
        return v.is_positive()
    if G.family == "D":
        return v.is_even_signed()
    return True


def is_cuspidal(G: GroupDescriptor, w: SignedPermutation, shape: Shape) -> bool:
    """True when w lies in no proper parabolic of the shape's parabolic."""
    if not _member_of_parabolic(G, w, shape):
        raise ValueError(f"{w} is not in the parabolic of shape {shape}")
    return fixed_space_ambient(w).dim == len(shape.lam)


def conjugacy_class_of(G: GroupDescriptor, label, tag=None) -> ConjClass:
    from .groups import class_index, conjugacy_classes

    return conjugacy_classes(G)[class_index(G)[(label, tag)]]
