"""Splice graphs and the decomposition parameters of their two components.

The splice ``S(G1, G2; u1, u2)`` is the disjoint union of ``G1`` and ``G2`` in which ``u1`` and
``u2`` are identified into a single glue vertex. Vertices of ``G1`` keep their ids, so the glue
vertex is ``u1``; the other vertices of ``G2`` are numbered ``|V1|, |V1|+1, ...`` in increasing
order of their id in ``G2``.

Every shortest path between the two sides goes through the glue vertex, so for ``a`` in ``G1``
and ``b`` in ``G2``::

    d_S(a, b) = d_G1(a, u1) + d_G2(u2, b)

and each component is isometrically embedded. An edge ``f = xy`` of ``G_i`` with
``d(x, u_i) == d(y, u_i)`` (the set ``S_i``) sees the whole other component at equal distance;
for the remaining edges (the set ``T_i``) the whole other component is on the glue side.
"""
from enum import Enum
from typing import Dict, Optional, Tuple

import numpy as np

from splice_indices.exceptions import EdgeListParseError, VertexOutOfRangeError
from splice_indices.graph import (Counters, DistanceMatrix, Graph, all_pairs_distances,
                                  build_graph, eccentricity_profile)
from splice_indices.indices import CutTable, cut_table


class Variant(Enum):
    """Reading of the splice formulas.

    PRINTED counts the glue vertex in both components, as the formulas are printed.
    CORRECTED counts it once, which is what direct computation on the splice gives.
    """

    PRINTED = 'printed'
    CORRECTED = 'corrected'

    @classmethod
    def values(cls):
        """Get all possible values."""
        return list(map(lambda c: c.value, cls))


def _graph_to_dict(g: Graph) -> Dict:
    return {'n': g.n, 'edges': g.edges.tolist()}


def _graph_from_dict(data: Dict) -> Graph:
    return build_graph(data['n'], data['edges'])


class SpliceSpec:
    """The two components of a splice and their glue vertices."""

    def __init__(self, g1: Graph, g2: Graph, u1: int, u2: int):
        """Constructor.

        Args:
            g1: first component
            g2: second component
            u1: glue vertex in g1
            u2: glue vertex in g2

        Raises:
            VertexOutOfRangeError: if a glue vertex does not belong to its component
        """
        for name, graph, vertex in (('u1', g1, u1), ('u2', g2, u2)):
            if not 0 <= vertex < graph.n:
                raise VertexOutOfRangeError(
                    f'Glue vertex {name}={vertex} is not in 0..{graph.n - 1}')
        self.g1 = g1
        self.g2 = g2
        self.u1 = int(u1)
        self.u2 = int(u2)

    def swapped(self) -> 'SpliceSpec':
        """Returns S(G2, G1; u2, u1)."""
        return SpliceSpec(self.g2, self.g1, self.u2, self.u1)

    def to_dict(self) -> Dict:
        """Serializable representation, used for mismatch witnesses."""
        return {'g1': _graph_to_dict(self.g1), 'u1': self.u1,
                'g2': _graph_to_dict(self.g2), 'u2': self.u2}

    @classmethod
    def from_dict(cls, data: Dict) -> 'SpliceSpec':
        """Builds a SpliceSpec from the output of to_dict.

        Raises:
            EdgeListParseError: if a field is missing or has the wrong type
        """
        try:
            g1, g2 = _graph_from_dict(data['g1']), _graph_from_dict(data['g2'])
            return cls(g1, g2, int(data['u1']), int(data['u2']))
        except (KeyError, TypeError, ValueError) as e:
            raise EdgeListParseError(f'Malformed splice witness: {e!r}') from e

    def __eq__(self, other):
        """Overloaded method."""
        if not isinstance(other, SpliceSpec):
            return NotImplemented
        return (self.g1, self.g2, self.u1, self.u2) == (other.g1, other.g2, other.u1, other.u2)

    def __hash__(self):
        """Overloaded method."""
        return hash((self.g1, self.g2, self.u1, self.u2))

    def __repr__(self):
        """Overloaded method."""
        return f'SpliceSpec({self.g1!r}, {self.g2!r}, u1={self.u1}, u2={self.u2})'


class VertexMap:
    """Where the vertices of both components end up in the splice."""

    def __init__(self, map1: np.ndarray, map2: np.ndarray, glue: int):
        """Constructor.

        Args:
            map1: splice id of every vertex of G1
            map2: splice id of every vertex of G2
            glue: splice id of the identified vertex
        """
        self.map1 = map1
        self.map2 = map2
        self.glue = glue

    @property
    def n(self) -> int:
        """Number of vertices of the splice."""
        return len(self.map1) + len(self.map2) - 1


def vertex_map(n1: int, n2: int, u1: int, u2: int) -> VertexMap:
    """Returns the deterministic vertex relabeling of S(G1, G2; u1, u2)."""
    map1 = np.arange(n1, dtype=np.int64)
    map2 = np.empty(n2, dtype=np.int64)
    map2[np.arange(n2) != u2] = n1 + np.arange(n2 - 1)
    map2[u2] = u1
    map1.flags.writeable = False
    map2.flags.writeable = False
    return VertexMap(map1, map2, u1)


def splice(spec: SpliceSpec) -> Tuple[Graph, VertexMap]:
    """Builds the splice graph S(G1, G2; u1, u2)."""
    vmap = vertex_map(spec.g1.n, spec.g2.n, spec.u1, spec.u2)
    edges = np.concatenate((vmap.map1[spec.g1.edges], vmap.map2[spec.g2.edges]))
    return build_graph(vmap.n, edges), vmap


class SpliceParams:
    """Decomposition parameters of one component, rooted at its glue vertex."""

    def __init__(self, graph: Graph, root: int, distances: DistanceMatrix, table: CutTable):
        """Constructor.

        Args:
            graph: the component
            root: its glue vertex
            distances: distance matrix of the component
            table: cut counts of the component edges
        """
        self.graph = graph
        self.root = root
        self.distances = distances
        self.table = table
        self.profile = eccentricity_profile(graph, distances)
        self.dist_to_root = distances[root]

        dx = self.dist_to_root[graph.edges[:, 0]]
        dy = self.dist_to_root[graph.edges[:, 1]]
        self.x_near = dx < dy
        self.y_near = dy < dx
        self.in_t = dx != dy
        # n^i(f), m^i(f): counts on the side away from the root, 0 on S_i
        self.far_n = np.where(self.y_near, table.n_u, np.where(self.x_near, table.n_v, 0))
        self.far_m = np.where(self.y_near, table.m_u, np.where(self.x_near, table.m_v, 0))

    @property
    def n(self) -> int:
        """|V_i|."""
        return self.graph.n

    @property
    def m(self) -> int:
        """|E_i|."""
        return self.graph.m

    @property
    def t(self) -> int:
        """Number of edges of T_i."""
        return int(self.in_t.sum())

    @property
    def sum_far_n(self) -> int:
        """Sum of n^i(f) over the component edges."""
        return int(self.far_n.sum())

    @property
    def sum_far_m(self) -> int:
        """Sum of m^i(f) over the component edges."""
        return int(self.far_m.sum())

    @property
    def eccentricities(self) -> np.ndarray:
        """ε_i of every vertex of the component."""
        return self.profile.eccentricities

    @property
    def root_eccentricity(self) -> int:
        """ε_i(u_i)."""
        return int(self.profile.eccentricities[self.root])

    @property
    def degrees(self) -> np.ndarray:
        """Component degrees."""
        return self.graph.degrees

    def __repr__(self):
        """Overloaded method."""
        return (f'SpliceParams({self.graph!r}, root={self.root}, t={self.t}, '
                f'sum_far_n={self.sum_far_n}, sum_far_m={self.sum_far_m})')


def splice_params(g: Graph, u: int, counters: Optional[Counters] = None,
                  distances: Optional[DistanceMatrix] = None) -> SpliceParams:
    """Classifies the edges of g with respect to u and computes their far-side counts.

    Args:
        g: the component
        u: its glue vertex
        counters: optional instrumentation counters
        distances: the distance matrix of g, computed if not given

    Raises:
        VertexOutOfRangeError: if u is not a vertex of g
    """
    if not 0 <= u < g.n:
        raise VertexOutOfRangeError(f'Glue vertex {u} is not in 0..{g.n - 1}')
    if distances is None:
        distances = all_pairs_distances(g, counters)
    return SpliceParams(g, u, distances, cut_table(g, distances, counters))


def transfer_counts(half: SpliceParams, other_sizes: Tuple[int, int],
                    variant: Variant) -> CutTable:
    """Cut counts in the splice of the edges of one component.

    Edges of T_i gain the other component on their glue side: |V_j| vertices as printed,
    |V_j| - 1 once the shared glue vertex is counted a single time, and |E_j| edges in both
    readings. Edges of S_i keep their counts and see the other component at equal distance.

    Args:
        half: parameters of component i
        other_sizes: (|V_j|, |E_j|) of the other component
        variant: reading of the vertex transfer

    Returns:
        The counts, rows in the order and orientation of the component edges
    """
    other_n, other_m = other_sizes
    vertex_gain = other_n if variant is Variant.PRINTED else other_n - 1
    table = half.table
    level = ~half.in_t
    return CutTable(half.graph.edges,
                    table.n_u + vertex_gain * half.x_near,
                    table.n_v + vertex_gain * half.y_near,
                    table.m_u + other_m * half.x_near,
                    table.m_v + other_m * half.y_near,
                    table.eq_vertices + (other_n - 1) * level,
                    table.eq_edges + other_m * level)


def cross_distance(half1: SpliceParams, half2: SpliceParams, a: int, b: int) -> int:
    """Distance in the splice between a in G1 and b in G2."""
    return int(half1.dist_to_root[a] + half2.dist_to_root[b])


def component_eccentricity(half: SpliceParams, other: SpliceParams) -> np.ndarray:
    """Splice eccentricity of the vertices of one component, in component ids.

    A vertex x of G_i is farthest either from a vertex of G_i or from the vertex of G_j
    farthest from u_j, hence ε(x) = max(d_Gi(x, u_i) + ε_j(u_j), ε_i(x)).
    """
    return np.maximum(half.dist_to_root + other.root_eccentricity, half.eccentricities)


def splice_eccentricity(half1: SpliceParams, half2: SpliceParams) -> np.ndarray:
    """Eccentricities of the splice vertices, indexed by splice ids."""
    eps1 = component_eccentricity(half1, half2)
    eps2 = component_eccentricity(half2, half1)
    vmap = vertex_map(half1.n, half2.n, half1.root, half2.root)
    eccentricities = np.empty(vmap.n, dtype=np.int64)
    eccentricities[vmap.map2] = eps2
    # both sides give max(ε_1(u1), ε_2(u2)) at the glue vertex
    eccentricities[vmap.map1] = eps1
    return eccentricities
