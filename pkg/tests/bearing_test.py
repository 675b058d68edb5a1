# coding=utf-8
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from subframework_rigidity.bearing import bearing, bearing_function, projection, \
    bearing_rigidity_matrix, trivial_motion_basis, numerical_rank, is_ibr_rank, \
    is_idr, distance_rigidity_matrix
from subframework_rigidity.exceptions import DegenerateRealization, InvalidBearing, \
    UnsupportedSize
from subframework_rigidity.framework import Graph, Framework
from subframework_rigidity.generator import substream, gen_erdos_renyi

from tests.fixtures.framework import triangle, three_path, square, complete_3d

coordinate = st.floats(-100, 100, allow_nan=False, allow_infinity=False)
point = st.lists(coordinate, min_size=3, max_size=3)


@settings(max_examples=200, deadline=None)
@given(point, point)
def test_bearing_properties(p_i, p_j):
    """Test that bearings are unit, antisymmetric and annihilated by their projector."""
    if np.linalg.norm(np.subtract(p_j, p_i)) < 1e-6:
        return
    b_ij, b_ji = bearing(p_i, p_j), bearing(p_j, p_i)
    assert np.linalg.norm(b_ij) == pytest.approx(1)
    assert np.allclose(b_ij, -b_ji)
    proj = projection(b_ij)
    assert np.allclose(proj @ b_ij, 0, atol=1e-9)
    assert np.allclose(proj @ proj, proj, atol=1e-9)


def test_bearing_errors():
    """Test the errors of coincident points and non-unit bearings."""
    with pytest.raises(DegenerateRealization):
        bearing([1, 1], [1, 1])
    with pytest.raises(InvalidBearing):
        projection([1, 1])


def test_bearing_function():
    """Test the stacked bearings of a triangle in EdgeOrder."""
    values = bearing_function(triangle())
    half = np.sqrt(0.5)
    assert np.allclose(values, [1, 0, 0, 1, -half, half])


def test_rigidity_matrix_rank():
    """Test the rank of the bearing rigidity matrix."""
    assert numerical_rank(bearing_rigidity_matrix(triangle())) == 3
    assert numerical_rank(bearing_rigidity_matrix(three_path())) == 2
    assert is_ibr_rank(triangle())
    assert not is_ibr_rank(three_path())
    assert is_ibr_rank(complete_3d())
    with pytest.raises(UnsupportedSize):
        is_ibr_rank(Framework(Graph(1), [[0, 0]]))


def test_trivial_motions_in_null_space():
    """Test that translations and scaling are flexes of every framework."""
    rng = substream(3)
    framework = gen_erdos_renyi(8, 0.5, 3, rng)
    basis = trivial_motion_basis(framework.positions)
    assert basis.shape == (24, 4)
    assert np.allclose(bearing_rigidity_matrix(framework) @ basis, 0, atol=1e-10)


def test_distance_rigidity_matrix():
    """Test the rows of the distance rigidity matrix."""
    framework = three_path()
    matrix = distance_rigidity_matrix(framework)
    assert matrix.tolist() == [[-1, 0, 1, 0, 0, 0], [0, 0, 0, -1, 0, 1]]
    translation = np.tile([0.3, -0.7], 3)
    assert np.allclose(matrix @ translation, 0)


def test_is_idr():
    """Test the distance rigidity test."""
    assert is_idr(triangle())
    assert not is_idr(square())
    square_diag = Framework(Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]),
                            square().positions)
    assert is_idr(square_diag)
    two = Framework(Graph.complete(2), [[0, 0, 0], [1, 0, 0]])
    with pytest.raises(UnsupportedSize):
        is_idr(two)
    assert is_idr(two, allow_small=True)
    assert not is_idr(Framework(Graph(2), [[0, 0, 0], [1, 0, 0]]), allow_small=True)


def test_idr_implies_ibr():
    """Test that Erdos-Renyi frameworks in R^3 that are IDR are always IBR."""
    rng = substream(2024, 3)
    checked = 0
    while checked < 500:
        framework = gen_erdos_renyi(int(rng.integers(5, 13)), 0.6, 3, rng)
        if not framework.is_connected() or not is_idr(framework):
            continue
        assert is_ibr_rank(framework)
        checked += 1
