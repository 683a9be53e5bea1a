from fractions import Fraction

import pytest

from coxchar.linalg import Subspace, det, kernel, rref


def test_rref_canonical():
    reduced, pivots = rref([[2, 4], [1, 2]])
    assert reduced == [[1, 2]]
    assert pivots == [0]
    reduced, pivots = rref([[0, 1], [1, 0]])
    assert reduced == [[1, 0], [0, 1]]


def test_subspace_canonical_form():
    a = Subspace.from_vectors(3, [(1, 1, 0), (0, 0, 2)])
    b = Subspace.from_vectors(3, [(2, 2, 2), (0, 0, -1)])
    assert a == b
    assert a.basis == ((1, 1, 0), (0, 0, 1))


def test_intersect_examples():
    V = Subspace.full(2)
    h = V.meet_hyperplane((1, 0))  # x1 = 0
    assert V.intersect(h) == h
    diag = V.meet_hyperplane((1, -1))  # x1 = x2
    origin = h.intersect(diag)
    assert origin.dim == 0
    assert h.meet_hyperplane((1, -1)) == origin


def test_meet_already_contained():
    h = Subspace.from_vectors(2, [(0, 1)])
    assert h.meet_hyperplane((1, 0)) is h


def test_det():
    assert det([[1, 0], [0, 1]]) == 1
    assert det([[0, 1], [1, 0]]) == -1
    assert det([[2, 1], [1, 1]]) == 1
    assert det([[1, 2], [2, 4]]) == 0
    assert det([[Fraction(1, 2), 0], [0, 4]]) == 2
    with pytest.raises(ValueError):
        det([[1, 2, 3], [4, 5, 6]])


def test_kernel():
    space = kernel(3, [[1, 1, 1]])
    assert space.dim == 2
    assert space.contains((1, -1, 0))
    assert not space.contains((1, 0, 0))
    assert kernel(2, []).dim == 2


def test_contains_and_coordinates():
    space = Subspace.from_vectors(3, [(1, 0, 1), (0, 1, 0)])
    assert space.contains((2, 3, 2))
    assert space.coordinates_of((2, 3, 2)) == [2, 3]
    assert space.coordinates_of((1, 0, 0)) is None


def test_orthogonal_to():
    space = Subspace.from_vectors(3, [(1, 1, 0)])
    assert space.orthogonal_to((1, -1, 0))
    assert not space.orthogonal_to((1, 0, 0))
