# coding=utf-8
"""Hop distances and diameters of undirected graphs."""
import numpy as np
import networkx as nx

from .exceptions import DisconnectedGraph


def hop_distances_from(graph, source, cutoff=None):
    """Get the BFS hop distance from a source vertex to every reachable vertex.

    Args:
        graph: A Graph.
        source: Index of the source vertex.
        cutoff: Optional integer. Vertices farther than this are not returned.

    Returns:
        A dictionary from vertex index to its hop distance from the source.
    """
    return nx.single_source_shortest_path_length(
        graph.to_networkx(), source, cutoff=cutoff)


def graph_distances(graph):
    """Get the all-pairs hop distance table of a graph.

    Returns:
        A (vertex_count, vertex_count) float array. Unreachable pairs are inf.
    """
    n = graph.vertex_count
    table = np.full((n, n), np.inf)
    for source, lengths in nx.all_pairs_shortest_path_length(graph.to_networkx()):
        for target, length in lengths.items():
            table[source, target] = length
    return table


def eccentricity(graph, vertex):
    """Get the largest hop distance from a vertex to any vertex it can reach."""
    return max(hop_distances_from(graph, vertex).values())


def diameter(graph, distances=None):
    """Get the diameter of a connected graph.

    Args:
        graph: A Graph.
        distances: Optional all-pairs distance table from graph_distances.

    Returns:
        An integer for the largest hop distance between two vertices.
    """
    distances = graph_distances(graph) if distances is None else distances
    if not np.all(np.isfinite(distances)):
        raise DisconnectedGraph(
            'The diameter of a disconnected graph is not defined.')
    return int(distances.max())
