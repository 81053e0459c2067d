"""Immutable simple connected graphs, unweighted distances and eccentricities.

Vertex ids are the dense integers ``0..n-1``. Edges are stored as a read-only ``(m, 2)``
integer array, each row ``(u, v)`` with ``u < v``, rows sorted lexicographically, so that two
graphs built from the same edge set compare (and hash) equal whatever the input order was.

Distances are computed with :func:`scipy.sparse.csgraph.shortest_path` on the unweighted
adjacency matrix: every source row is one breadth-first search, and the optional
:class:`Counters` record how many of them were run.
"""
import collections
from functools import cached_property
from typing import Dict, Iterable, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from splice_indices.exceptions import (DisconnectedGraphError, DuplicateEdgeError,
                                       EmptyGraphError, SelfLoopError, VertexOutOfRangeError)

Edge = Tuple[int, int]

# (n, n) int64 array of hop counts, read-only
DistanceMatrix = np.ndarray


class Counters:
    """Instrumentation counters used for the composition vs recomputation comparison."""

    def __init__(self, bfs_calls: int = 0, classification_passes: int = 0):
        """Constructor.

        Args:
            bfs_calls: number of single-source breadth-first searches run so far
            classification_passes: number of passes classifying all edges of a graph
        """
        self.bfs_calls = bfs_calls
        self.classification_passes = classification_passes

    def to_dict(self) -> Dict[str, int]:
        """Returns the counters as a dict."""
        return {'bfs_calls': self.bfs_calls,
                'classification_passes': self.classification_passes}

    def __eq__(self, other):
        """Overloaded method."""
        if not isinstance(other, Counters):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self):
        """Overloaded method."""
        return (f'Counters(bfs_calls={self.bfs_calls}, '
                f'classification_passes={self.classification_passes})')


class Graph:
    """A simple connected undirected graph.

    Use :func:`build_graph` to create one: the constructor does not validate its input.
    """

    def __init__(self, n: int, edges: np.ndarray):
        """Constructor.

        Args:
            n: the number of vertices
            edges: (m, 2) array of normalized, sorted, unique edges
        """
        self._n = n
        self._edges = edges
        self._edges.flags.writeable = False

    @property
    def n(self) -> int:
        """Number of vertices."""
        return self._n

    vertex_count = n

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self._edges)

    @property
    def edges(self) -> np.ndarray:
        """The (m, 2) read-only array of edges, each row (u, v) with u < v."""
        return self._edges

    @cached_property
    def degrees(self) -> np.ndarray:
        """deg(u) for every vertex."""
        degrees = np.bincount(self._edges.ravel(), minlength=self._n).astype(np.int64)
        degrees.flags.writeable = False
        return degrees

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """Per-vertex sorted neighbor ids."""
        neighbors = [[] for _ in range(self._n)]
        for u, v in self._edges.tolist():
            neighbors[u].append(v)
            neighbors[v].append(u)
        return tuple(tuple(sorted(row)) for row in neighbors)

    @cached_property
    def _edge_ids(self) -> Dict[Edge, int]:
        return {(u, v): i for i, (u, v) in enumerate(self._edges.tolist())}

    def edge_index(self, u: int, v: int) -> int:
        """Position of the edge {u, v} in the edge array, -1 if it is not an edge."""
        return self._edge_ids.get((min(u, v), max(u, v)), -1)

    def has_edge(self, u: int, v: int) -> bool:
        """Whether {u, v} is an edge."""
        return self.edge_index(u, v) >= 0

    @cached_property
    def csgraph(self) -> csr_matrix:
        """Symmetric unweighted adjacency matrix."""
        rows = np.concatenate((self._edges[:, 0], self._edges[:, 1]))
        cols = np.concatenate((self._edges[:, 1], self._edges[:, 0]))
        return csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)),
                          shape=(self._n, self._n))

    def to_networkx(self):
        """Returns the graph as a networkx.Graph."""
        import networkx as nx  # pylint: disable=import-outside-toplevel
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(self._edges.tolist())
        return graph

    def __getstate__(self):
        """Pickles the vertex count and edges only, caches are rebuilt on demand."""
        return {'_n': self._n, '_edges': self._edges}

    def __setstate__(self, state):
        """Overloaded method."""
        self.__init__(state['_n'], state['_edges'])

    def __eq__(self, other):
        """Overloaded method."""
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other.n and np.array_equal(self._edges, other.edges)

    def __hash__(self):
        """Overloaded method."""
        return hash((self._n, self._edges.tobytes()))

    def __repr__(self):
        """Overloaded method."""
        return f'Graph(n={self._n}, m={self.m})'


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Builds and validates a Graph.

    Each edge is normalized to (min, max) order and the edge sequence is sorted.

    Args:
        n: the number of vertices
        edges: the vertex pairs

    Raises:
        EmptyGraphError: if n is 0
        VertexOutOfRangeError: if a vertex id is not in 0..n-1
        SelfLoopError: if an edge joins a vertex to itself
        DuplicateEdgeError: if the same pair appears twice
        DisconnectedGraphError: if some vertex is not reachable from vertex 0
    """
    if n <= 0:
        raise EmptyGraphError(f'A graph needs at least one vertex (got n={n})')

    pairs = []
    for edge in edges:
        u, v = (int(vertex) for vertex in edge)
        for vertex in (u, v):
            if not 0 <= vertex < n:
                raise VertexOutOfRangeError(
                    f'Edge ({u}, {v}) uses vertex {vertex} which is not in 0..{n - 1}')
        if u == v:
            raise SelfLoopError(f'Self-loop on vertex {u}')
        pairs.append((min(u, v), max(u, v)))

    pairs.sort()
    duplicates = [pair for pair, count in collections.Counter(pairs).items() if count > 1]
    if duplicates:
        raise DuplicateEdgeError(f'Duplicate edge {duplicates[0]}')

    if len(pairs) < n - 1:
        raise DisconnectedGraphError(
            f'Graph is disconnected: {len(pairs)} edges cannot connect {n} vertices')
    graph = Graph(n, np.array(pairs, dtype=np.int64).reshape(-1, 2))
    if n > 1:
        n_components = connected_components(graph.csgraph, directed=False, return_labels=False)
        if n_components > 1:
            raise DisconnectedGraphError(
                f'Graph is disconnected: {n_components} connected components')
    return graph


def _shortest_paths(g: Graph, sources: np.ndarray, counters: Optional[Counters]) -> np.ndarray:
    """Runs one breadth-first search per source, returns a (len(sources), n) int64 array."""
    if counters is not None:
        counters.bfs_calls += len(sources)
    if g.n == 1:
        return np.zeros((len(sources), 1), dtype=np.int64)
    distances = shortest_path(g.csgraph, method='D', directed=False, unweighted=True,
                              indices=sources)
    return distances.reshape(len(sources), g.n).astype(np.int64)


def bfs_distances(g: Graph, source: int, counters: Optional[Counters] = None) -> np.ndarray:
    """Returns the hop distance from source to every vertex.

    Raises:
        VertexOutOfRangeError: if source is not a vertex of g
    """
    if not 0 <= source < g.n:
        raise VertexOutOfRangeError(f'BFS source {source} is not in 0..{g.n - 1}')
    distances = _shortest_paths(g, np.array([source]), counters)[0]
    distances.flags.writeable = False
    return distances


def all_pairs_distances(g: Graph, counters: Optional[Counters] = None) -> DistanceMatrix:
    """Returns the distance matrix of g, row v being bfs_distances(g, v)."""
    distances = _shortest_paths(g, np.arange(g.n), counters)
    distances.flags.writeable = False
    return distances


class EccentricityProfile:
    """Eccentricity of every vertex, radius, diameter and center of a graph."""

    def __init__(self, eccentricities: np.ndarray):
        """Constructor.

        Args:
            eccentricities: ε(v) for every vertex
        """
        self.eccentricities = eccentricities
        self.radius = int(eccentricities.min())
        self.diameter = int(eccentricities.max())
        self.center = tuple(int(v) for v in np.flatnonzero(eccentricities == self.radius))

    def __repr__(self):
        """Overloaded method."""
        return (f'EccentricityProfile(radius={self.radius}, diameter={self.diameter}, '
                f'center={self.center})')


def eccentricity_profile(g: Graph, d: DistanceMatrix) -> EccentricityProfile:
    """Returns the eccentricity profile of g given its distance matrix."""
    assert d.shape == (g.n, g.n), 'distance matrix does not match the graph'
    eccentricities = d.max(axis=1)
    eccentricities.flags.writeable = False
    return EccentricityProfile(eccentricities)


def edge_vertex_distance(d: DistanceMatrix, f: Sequence[int], u: int) -> int:
    """d(f, u) = min(d(x, u), d(y, u)) for the edge f = {x, y}."""
    x, y = f
    return int(min(d[x, u], d[y, u]))


def is_tree(g: Graph) -> bool:
    """Whether the (connected) graph is a tree."""
    return g.m == g.n - 1


def is_bipartite(g: Graph, d: DistanceMatrix) -> bool:
    """Whether g is bipartite: no edge joins two vertices at the same distance from vertex 0."""
    from_root = d[0]
    return not np.any(from_root[g.edges[:, 0]] == from_root[g.edges[:, 1]])
