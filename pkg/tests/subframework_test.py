# coding=utf-8
import numpy as np
import pytest

from subframework_rigidity.bearing import is_ibr_rank
from subframework_rigidity.exceptions import DisconnectedGraph, \
    InconsistentRealization
from subframework_rigidity.framework import Graph, Framework
from subframework_rigidity.generator import substream
from subframework_rigidity.laplacian import bearing_laplacian
from subframework_rigidity.subframework import ball, minimal_radius, decompose, \
    Decomposition, is_ibr_subframework, union, shared_vertex_flex

from tests.fixtures.framework import triangle, three_path, complete_3d, \
    random_connected, random_ibr


def _kite():
    """Get a framework whose first vertex hangs on two vertices that are not adjacent."""
    positions = [[0, 0], [1, 1], [1, -1], [2, 0.2], [2.5, -0.3]]
    edges = [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]
    return Framework(Graph(5, edges), positions)


def test_ball():
    """Test the vertices and diameter of ball subframeworks."""
    framework = Framework(Graph.path(5), [[k, k * k] for k in range(5)])
    sub = ball(framework, 2, 1)
    str(sub)  # test the string representation
    assert sub.vertex_map == (1, 2, 3)
    assert sub.local_center == 1
    assert sub.diameter == 2
    assert ball(framework, 0, 0).vertex_map == (0,)
    assert ball(framework, 0, 10).vertices == frozenset(range(5))


def test_minimal_radius_oracles():
    """Test the minimal radii of the triangle, the three-path and K5 in R^3."""
    assert decompose(triangle()).radii == (1, 1, 1)
    path = decompose(three_path())
    assert path.radii == (1, None, 1)
    assert not path.is_rigid
    assert decompose(complete_3d()).radii == (1,) * 5


def test_minimal_radius_larger_than_one():
    """Test a framework where some balls need two hops to be rigid."""
    framework = _kite()
    assert minimal_radius(framework, 0) == 2
    assert decompose(framework).radii == (2, 2, 2, 1, 1)
    assert is_ibr_rank(framework)


def test_distance_minimal_radius():
    """Test distance minimal radii on a triangle with a pendant vertex."""
    framework = Framework(Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)]),
                          [[0, 0], [1, 0], [0, 1], [1, 2]])
    radii = decompose(framework, measurement='distance').radii
    assert radii == (1, 1, None, 1)


def test_decomposition():
    """Test the inverse memberships and emission radii of a Decomposition."""
    framework = Framework(Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3), (1, 3)]),
                          [[0, 0], [1, 0], [0, 1], [1.5, 1.2]])
    decomposition = decompose(framework)
    str(decomposition)  # test the string representation
    assert decomposition.radii == (1, 1, 1, 1)
    assert decomposition.membership[3] == (1, 2, 3)
    assert decomposition.membership[0] == (0, 1, 2)
    assert decomposition.emission_radii == (1, 1, 1, 1)
    data = decomposition.to_dict()
    assert data['r_star'] == [1, 1, 1, 1]
    new = Decomposition.from_dict(data, framework)
    assert new.membership == decomposition.membership
    moved = Framework(framework.graph, framework.positions + [0.1, -0.2])
    frozen = Decomposition.from_radii(moved, decomposition.radii)
    assert frozen.radii == decomposition.radii
    assert frozen.membership == decomposition.membership


def test_decompose_disconnected():
    """Test that disconnected frameworks cannot be decomposed."""
    framework = Framework(Graph(4, [(0, 1), (2, 3)]), [[0, 0], [1, 0], [0, 1], [1, 1]])
    with pytest.raises(DisconnectedGraph):
        decompose(framework)


def test_decompose_workers():
    """Test that threaded searches give the same radii."""
    rng = substream(9)
    framework = random_connected(rng, 2, count=8, rho=0.5)
    assert decompose(framework, workers=4).radii == decompose(framework).radii


def test_subframework_matches_rank():
    """Test that finite minimal radii everywhere is equivalent to IBR."""
    rng = substream(2024, 5)
    for k in range(500):
        framework = random_connected(rng, 2 + k % 2)
        assert is_ibr_subframework(framework) == is_ibr_rank(framework)


def _glued(rng, dim, shared):
    """Get two random complete frameworks sharing a number of vertices."""
    first = random_ibr(rng, dim, int(rng.integers(3, 6)))
    second = random_ibr(rng, dim, int(rng.integers(3, 6)))
    # move the second so that its first vertices land on the first one
    count = min(shared, first.vertex_count, second.vertex_count)
    positions = np.array(second.positions)
    positions[:count] = first.positions[:count]
    if count == 1:
        positions[1:] += first.positions[0] - second.positions[0] + 2.0
    second = Framework(second.graph, positions)
    return first, second, {k: k for k in range(count)}


@pytest.mark.parametrize('seed', range(100))
def test_union_single_vertex(seed):
    """Test that frameworks glued at one vertex are never IBR."""
    rng = substream(seed, 21)
    dim = 2 + seed % 2
    first, second, shared = _glued(rng, dim, 1)
    merged = union(first, second, shared)
    assert not is_ibr_rank(merged)
    second_side = [0] + list(range(first.vertex_count, merged.vertex_count))
    u = shared_vertex_flex(merged, second_side, 0)
    matrix = bearing_laplacian(merged).matrix
    assert np.linalg.norm(matrix @ u) <= 1e-9 * np.linalg.norm(matrix) * \
        np.linalg.norm(u)


@pytest.mark.parametrize('seed', range(100))
def test_union_two_vertices(seed):
    """Test that frameworks glued at two or more vertices are IBR."""
    rng = substream(seed, 22)
    dim = 2 + seed % 2
    first, second, shared = _glued(rng, dim, int(rng.integers(2, 4)))
    assert is_ibr_rank(union(first, second, shared))


def test_union_inconsistent():
    """Test that shared vertices at different positions raise."""
    first = triangle()
    second = triangle().move([5, 5])
    with pytest.raises(InconsistentRealization):
        union(first, second, {0: 0})
