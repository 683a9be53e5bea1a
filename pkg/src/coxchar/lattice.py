"""Intersection lattice of the reflection arrangement.

Flats are intersections of reflecting hyperplanes, stored with a canonical
exact basis and an incidence bitset over the hyperplane list; the bitset
determines the flat, shared bits decide containment (X <= Y in the lattice,
i.e. X is a subspace of Y, iff bits(Y) is a subset of bits(X)).  The
ambient space is Q^n for every family; in type A all flats contain the
diagonal, and codimension (n - dim) equals the degree in the reflection
representation, so nothing else changes.

Per element w the w-stable flats form the subposet on which the Moebius
function mu_w recurses top-down; its generating function

    P_w(t) = sum over stable X of mu_w(X) (-t)^(codim X)

has the trace of w on the degree-p cohomology of the arrangement
complement as its t^p coefficient.  Orbits of flats are labelled by
shapes, refining P_w per shape.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classfunctions import ClassFunction
from .cyclotomic import Cyc
from .groups import (
    BudgetError,
    GroupDescriptor,
    conjugacy_classes,
    class_index,
    class_key,
    hyperplane_action,
    hyperplane_set,
)
from .linalg import Subspace
from .shapes import Shape, shape_fix_space, shape_rank, shapes
from .signedperm import SignedPermutation

__all__ = [
    "Flat",
    "Lattice",
    "build_lattice",
    "get_lattice",
    "fixed_subposet",
    "moebius",
    "poincare_polynomial",
    "graded_os_character",
    "shape_os_character",
    "reflection_exponents",
    "DEFAULT_FLAT_BUDGET",
]

DEFAULT_FLAT_BUDGET = 300_000


@dataclass(frozen=True)
class Flat:
    index: int
    subspace: Subspace
    bits: int
    dim: int

    @property
    def codim(self) -> int:
        return self.subspace.ambient - self.dim


def _permute_bits(bits: int, action) -> int:
    out = 0
    while bits:
        low = bits & -bits
        out |= 1 << action[low.bit_length() - 1]
        bits ^= low
    return out


class Lattice:
    def __init__(self, G: GroupDescriptor, flats, shape_labels):
        self.G = G
        self.hyperplanes = hyperplane_set(G)
        self.flats = flats
        self.by_bits = {f.bits: f.index for f in flats}
        self.shape_labels = shape_labels
        self._mu_cache: dict = {}

    @property
    def rank(self) -> int:
        return self.G.rank

    def flats_of_shape(self, shape: Shape):
        return [f for f in self.flats if self.shape_labels[f.index] == shape]

    # -- fixed subposets and their Moebius functions -------------------------

    def fixed_subposet(self, w: SignedPermutation):
        action = hyperplane_action(self.G, w)
        return [
            f.index
            for f in self.flats
            if _permute_bits(f.bits, action) == f.bits
        ]

    def moebius(self, subposet) -> dict[int, int]:
        """mu of the subposet ordered by reverse inclusion from the bottom V."""
        flats = sorted((self.flats[k] for k in subposet), key=lambda f: f.codim)
        if not flats or flats[0].codim != 0:
            raise ValueError("subposet must contain the ambient space")
        mu: dict[int, int] = {}
        done: list[Flat] = []
        for f in flats:
            total = 0
            bx = f.bits
            for g in done:
                if g.bits & bx == g.bits:
                    total += mu[g.index]
            mu[f.index] = 1 if not done else -total
            done.append(f)
        return mu

    def _class_mu(self, k: int):
        """(subposet, mu) for class k, shared with the -w partner class."""
        if k in self._mu_cache:
            return self._mu_cache[k]
        classes = conjugacy_classes(self.G)
        w = classes[k].rep
        sub = self.fixed_subposet(w)
        mu = self.moebius(sub)
        self._mu_cache[k] = (sub, mu)
        n = self.G.degree
        if self.G.family == "B" or (self.G.family == "D" and n % 2 == 0):
            partner = w.compose(SignedPermutation.minus_identity(n))
            pk = class_index(self.G)[class_key(partner, self.G.family)]
            self._mu_cache.setdefault(pk, (sub, mu))
        return self._mu_cache[k]

    def poincare_polynomial(self, w: SignedPermutation):
        """Coefficients of P_w(t), ascending, length rank + 1."""
        key = class_key(w, self.G.family)
        k = class_index(self.G).get(key)
        if k is not None and conjugacy_classes(self.G)[k].rep == w:
            sub, mu = self._class_mu(k)
        else:
            sub = self.fixed_subposet(w)
            mu = self.moebius(sub)
        coeffs = [0] * (self.rank + 1)
        for idx in sub:
            c = self.flats[idx].codim
            coeffs[c] += mu[idx] * (-1) ** c
        return tuple(coeffs)


def build_lattice(G: GroupDescriptor, budget=DEFAULT_FLAT_BUDGET) -> Lattice:
    n = G.degree
    hyperplanes = hyperplane_set(G)
    normals = [h.normal(n) for h in hyperplanes]

    def incidence(space: Subspace) -> int:
        bits = 0
        for k, normal in enumerate(normals):
            if space.orthogonal_to(normal):
                bits |= 1 << k
        return bits

    ambient = Subspace.full(n)
    flats = [Flat(0, ambient, 0, n)]
    by_basis = {ambient.basis: 0}
    frontier = [flats[0]]
    while frontier:
        next_frontier = []
        for flat in frontier:
            for k, normal in enumerate(normals):
                if flat.bits >> k & 1:
                    continue
                space = flat.subspace.meet_hyperplane(normal)
                if space.basis in by_basis:
                    continue
                if budget is not None and len(flats) >= budget:
                    raise BudgetError(
                        f"flat budget {budget} exceeded while building {G} lattice"
                    )
                new = Flat(len(flats), space, incidence(space), space.dim)
                by_basis[space.basis] = new.index
                flats.append(new)
                next_frontier.append(new)
        frontier = next_frontier

    labels = _label_orbits(G, flats)
    return Lattice(G, flats, labels)


def _label_orbits(G, flats):
    by_bits = {f.bits: f.index for f in flats}
    actions = [hyperplane_action(G, g) for g in G.coxeter_generators()]
    labels: list[Shape | None] = [None] * len(flats)
    for shape in shapes(G):
        space = shape_fix_space(G, shape)
        n = G.degree
        normals = [h.normal(n) for h in hyperplane_set(G)]
        bits = 0
        for k, normal in enumerate(normals):
            if space.orthogonal_to(normal):
                bits |= 1 << k
        start = by_bits.get(bits)
        if start is None or flats[start].subspace != space:
            raise AssertionError(f"fixed space of shape {shape} is not a flat")
        stack = [flats[start].bits]
        seen = {flats[start].bits}
        while stack:
            bits = stack.pop()
            idx = by_bits[bits]
            if labels[idx] is not None:
                raise AssertionError(
                    f"flat {idx} reached from two shapes: {labels[idx]}, {shape}"
                )
            labels[idx] = shape
            for action in actions:
                image = _permute_bits(bits, action)
                if image not in seen:
                    seen.add(image)
                    stack.append(image)
    if any(label is None for label in labels):
        raise AssertionError("orbit labelling did not cover the lattice")
    return tuple(labels)


_LATTICES: dict[GroupDescriptor, Lattice] = {}


def get_lattice(G: GroupDescriptor, budget=DEFAULT_FLAT_BUDGET) -> Lattice:
    """Build-once cache; lattices are immutable after construction.

    The budget binds even on a cache hit, so a caller's limit means the
    same thing whether or not another caller built the lattice first.
    """
    lattice = _LATTICES.get(G)
    if lattice is None:
        lattice = build_lattice(G, budget)
        _LATTICES[G] = lattice
    elif budget is not None and len(lattice.flats) > budget:
        raise BudgetError(
            f"lattice of {G} has {len(lattice.flats)} flats > budget {budget}"
        )
    return lattice


def fixed_subposet(lattice: Lattice, w: SignedPermutation):
    return lattice.fixed_subposet(w)


def moebius(lattice: Lattice, subposet):
    return lattice.moebius(subposet)


def poincare_polynomial(lattice: Lattice, w: SignedPermutation):
    return lattice.poincare_polynomial(w)


def graded_os_character(lattice: Lattice):
    """ClassFunctions of the cohomology of the complement, degrees 0..rank."""
    G = lattice.G
    classes = conjugacy_classes(G)
    rows = [lattice.poincare_polynomial(cls.rep) for cls in classes]
    return [
        ClassFunction(G, tuple(Cyc.from_rational(row[p]) for row in rows))
        for p in range(lattice.rank + 1)
    ]


def shape_os_character(lattice: Lattice, shape: Shape):
    """Per-shape refinement: degree-p trace from the shape's orbit of flats."""
    G = lattice.G
    classes = conjugacy_classes(G)
    p0 = shape_rank(G, shape)
    values = []
    for k, cls in enumerate(classes):
        sub, mu = lattice._class_mu(k)
        total = 0
        for idx in sub:
            if lattice.shape_labels[idx] == shape:
                total += mu[idx]
        values.append(total * (-1) ** p0)
    out = []
    for p in range(lattice.rank + 1):
        if p == p0:
            out.append(
                ClassFunction(G, tuple(Cyc.from_rational(v) for v in values))
            )
        else:
            out.append(
                ClassFunction(G, tuple(Cyc.zero() for _ in classes))
            )
    return out


def reflection_exponents(G: GroupDescriptor):
    """Exponents m_i with P_1(t) = prod (1 + m_i t)."""
    n = G.degree
    if G.family == "A":
        return tuple(range(1, n))
    if G.family == "B":
        return tuple(2 * i - 1 for i in range(1, n + 1))
    return tuple(2 * i - 1 for i in range(1, n)) + (n - 1,)
