"""Exact rational linear algebra on small matrices.

Subspaces of Q^n are kept in a canonical form: reduced row echelon basis,
each row scaled to a primitive integer vector (positive leading entry),
so that equal subspaces have identical representations.  Everything is
fractions-exact; no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

__all__ = ["Subspace", "rref", "kernel", "det"]


def rref(rows):
    """Reduced row echelon form over Q; returns (rows, pivot columns).

    Zero rows are dropped.  Input rows are sequences of ints/Fractions.
    """
    mat = [[Fraction(x) for x in row] for row in rows]
    ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c]
        mat[r] = [x / inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def _primitive(row):
    """Scale a rational row to a primitive integer tuple, leading entry > 0."""
    denom = 1
    for x in row:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    lead = next((v for v in ints if v != 0), 1)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


@dataclass(frozen=True)
class Subspace:
    """Canonical subspace of Q^n: primitive-integer RREF basis rows."""

    ambient: int
    basis: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_vectors(ambient, vectors) -> "Subspace":
        vectors = [v for v in vectors if any(x != 0 for x in v)]
        if not vectors:
            return Subspace(ambient, ())
        reduced, _ = rref(vectors)
        return Subspace(ambient, tuple(_primitive(r) for r in reduced))

    @staticmethod
    def full(ambient) -> "Subspace":
        eye = tuple(
            tuple(1 if i == j else 0 for j in range(ambient)) for i in range(ambient)
        )
        return Subspace(ambient, eye)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector) -> bool:
        rows = [list(b) for b in self.basis] + [list(vector)]
        reduced, _ = rref(rows)
        return len(reduced) == self.dim

    def orthogonal_to(self, normal) -> bool:
        """True when every basis vector annihilates the linear form."""
        return all(
            sum(c * x for c, x in zip(normal, row)) == 0 for row in self.basis
        )

    def meet_hyperplane(self, normal) -> "Subspace":
        """Intersection with the hyperplane {x : normal . x = 0}."""
        vals = [sum(c * x for c, x in zip(normal, row)) for row in self.basis]
        if all(v == 0 for v in vals):
            return self
        p = next(i for i, v in enumerate(vals) if v != 0)
        new = [
            [vals[p] * a - vals[k] * b for a, b in zip(row, self.basis[p])]
            for k, row in enumerate(self.basis)
            if k != p
        ]
        return Subspace.from_vectors(self.ambient, new)

    def annihilator_rows(self):
        """Rows spanning the space of linear forms vanishing on self."""
        return kernel(self.ambient, [list(b) for b in self.basis]).basis

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")
        constraints = list(self.annihilator_rows()) + list(other.annihilator_rows())
        if not constraints:
            return Subspace.full(self.ambient)
        return kernel(self.ambient, constraints)

    def coordinates_of(self, vector):
        """Coefficients of vector in this basis; None if outside."""
        mat = [list(b) for b in self.basis]
        target = [Fraction(x) for x in vector]
        coeffs = [Fraction(0)] * self.dim
        # basis rows are in echelon form: peel off pivots front to back
        for k, row in enumerate(mat):
            lead = next(i for i, v in enumerate(row) if v != 0)
            c = target[lead] / row[lead]
            coeffs[k] = c
            target = [t - c * v for t, v in zip(target, row)]
        if any(t != 0 for t in target):
            return None
        return coeffs


def kernel(ncols, rows) -> Subspace:
    """Solution space of the homogeneous system rows . x = 0 in Q^ncols."""
    if not rows:
        return Subspace.full(ncols)
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return Subspace.from_vectors(ncols, basis)


def det(matrix) -> Fraction:
    """Exact determinant of a square matrix by elimination."""
    mat = [[Fraction(x) for x in row] for row in matrix]
    m = len(mat)
    if any(len(row) != m for row in mat):
        raise ValueError("matrix not square")
    result = Fraction(1)
    for c in range(m):
        pivot = next((i for i in range(c, m) if mat[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            mat[c], mat[pivot] = mat[pivot], mat[c]
            result = -result
        result *= mat[c][c]
        inv = mat[c][c]
        for i in range(c + 1, m):
            if mat[i][c] != 0:
                f = mat[i][c] / inv
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[c])]
    return result
