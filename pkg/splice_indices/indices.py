"""Direct computation of five distance-based topological indices.

For an edge ``e = uv``, ``n_u`` counts the vertices strictly closer to ``u`` than to ``v`` and
``m_u`` counts the edges strictly closer to ``u``, the distance from an edge ``f = xy`` to a
vertex being ``min(d(x, u), d(y, u))``. Then:

- Szeged: sum of ``n_u * n_v``
- edge-Szeged: sum of ``m_u * m_v``
- PI (edge-PI): sum of ``m_u + m_v``
- vertex-PI: sum of ``n_u + n_v``
- eccentric connectivity: sum over vertices of ``deg(u) * ε(u)``

Values are exact python integers, checked against the unsigned 64-bit range.
"""
import logging
import time
from enum import Enum
from typing import Dict, NamedTuple, Optional, Tuple

import numpy as np
import pandas as pd

from splice_indices.exceptions import NotAnEdgeError
from splice_indices.graph import (Counters, DistanceMatrix, Edge, Graph, all_pairs_distances,
                                  is_bipartite)
from splice_indices.utils import check_uint64

L = logging.getLogger(__name__)

INDEX_NAMES = ('szeged', 'edge_szeged', 'pi_edge', 'pi_vertex', 'eccentric_connectivity')

# edges classified per vectorised block, bounds the (block, m) temporaries
EDGE_BLOCK = 256


class Method(Enum):
    """How the values of an IndexReport were obtained."""

    DIRECT = 'direct'
    FORMULA_PRINTED = 'formula-printed'
    FORMULA_CORRECTED = 'formula-corrected'

    @classmethod
    def values(cls):
        """Get all possible values."""
        return list(map(lambda c: c.value, cls))


class EdgeCutCounts(NamedTuple):
    """Vertex and edge counts on both sides of the edge (u, v)."""

    edge: Edge
    n_u: int
    n_v: int
    m_u: int
    m_v: int
    eq_vertices: int
    eq_edges: int


class CutTable:
    """Cut counts of every edge of a graph, as parallel arrays in edge order."""

    COLUMNS = ['u', 'v', 'n_u', 'n_v', 'm_u', 'm_v', 'eq_vertices', 'eq_edges']

    def __init__(self, edges, n_u, n_v, m_u, m_v, eq_vertices, eq_edges):
        """Constructor.

        Args:
            edges: (m, 2) array, row i being the edge (u, v) the counts of row i refer to
            n_u: vertices closer to u
            n_v: vertices closer to v
            m_u: edges closer to u
            m_v: edges closer to v
            eq_vertices: vertices at equal distance from u and v
            eq_edges: edges at equal distance from u and v
        """
        self.edges = edges
        self.n_u = n_u
        self.n_v = n_v
        self.m_u = m_u
        self.m_v = m_v
        self.eq_vertices = eq_vertices
        self.eq_edges = eq_edges

    def __len__(self):
        """Overloaded method."""
        return len(self.edges)

    def __getitem__(self, i: int) -> EdgeCutCounts:
        """Returns the counts of the i-th edge."""
        u, v = self.edges[i]
        return EdgeCutCounts((int(u), int(v)),
                             int(self.n_u[i]), int(self.n_v[i]),
                             int(self.m_u[i]), int(self.m_v[i]),
                             int(self.eq_vertices[i]), int(self.eq_edges[i]))

    @property
    def df(self) -> pd.DataFrame:
        """The table as a DataFrame, one row per edge."""
        return pd.DataFrame({
            'u': self.edges[:, 0], 'v': self.edges[:, 1],
            'n_u': self.n_u, 'n_v': self.n_v,
            'm_u': self.m_u, 'm_v': self.m_v,
            'eq_vertices': self.eq_vertices, 'eq_edges': self.eq_edges,
        }, columns=self.COLUMNS)


def _cut_arrays(g: Graph, d: DistanceMatrix, us: np.ndarray, vs: np.ndarray):
    """Counts both sides of the edges (us[i], vs[i]).

    The vertex scan compares distance rows, the edge scan compares the edge-vertex distances
    min(d(x, ·), d(y, ·)) over every edge f = xy.
    """
    fx, fy = g.edges[:, 0], g.edges[:, 1]
    n_u, n_v, m_u, m_v = (np.zeros(len(us), dtype=np.int64) for _ in range(4))
    for start in range(0, len(us), EDGE_BLOCK):
        block = slice(start, start + EDGE_BLOCK)
        du, dv = d[us[block]], d[vs[block]]
        n_u[block] = (du < dv).sum(axis=1)
        n_v[block] = (dv < du).sum(axis=1)
        fu = np.minimum(du[:, fx], du[:, fy])
        fv = np.minimum(dv[:, fx], dv[:, fy])
        m_u[block] = (fu < fv).sum(axis=1)
        m_v[block] = (fv < fu).sum(axis=1)
    return n_u, n_v, m_u, m_v, g.n - n_u - n_v, g.m - m_u - m_v


def edge_cut_counts(g: Graph, d: DistanceMatrix, e: Edge) -> EdgeCutCounts:
    """Returns the cut counts of the edge e = (u, v), n_u and m_u referring to e[0].

    Raises:
        NotAnEdgeError: if e is not an edge of g
    """
    u, v = (int(vertex) for vertex in e)
    if not (0 <= u < g.n and 0 <= v < g.n and g.has_edge(u, v)):
        raise NotAnEdgeError(f'({u}, {v}) is not an edge of {g}')
    arrays = _cut_arrays(g, d, np.array([u]), np.array([v]))
    return EdgeCutCounts((u, v), *(int(array[0]) for array in arrays))


def cut_table(g: Graph, d: DistanceMatrix, counters: Optional[Counters] = None) -> CutTable:
    """Returns the cut counts of every edge of g, edges oriented as in g.edges."""
    if counters is not None:
        counters.classification_passes += 1
    return CutTable(g.edges, *_cut_arrays(g, d, g.edges[:, 0], g.edges[:, 1]))


def _exact(values: np.ndarray) -> np.ndarray:
    """Python integer copy of values, so that products and sums cannot wrap around."""
    return np.asarray(values).astype(object)


def _total(terms: np.ndarray, name: str) -> int:
    return check_uint64(int(terms.sum()) if len(terms) else 0, name)


def _ensure_table(g: Graph, table: Optional[CutTable]) -> CutTable:
    if table is None:
        table = cut_table(g, all_pairs_distances(g))
    return table


def szeged(g: Graph, table: Optional[CutTable] = None) -> int:
    """Szeged index: sum over edges of n_u * n_v."""
    table = _ensure_table(g, table)
    return _total(_exact(table.n_u) * _exact(table.n_v), 'szeged')


def edge_szeged(g: Graph, table: Optional[CutTable] = None) -> int:
    """Edge-Szeged index: sum over edges of m_u * m_v."""
    table = _ensure_table(g, table)
    return _total(_exact(table.m_u) * _exact(table.m_v), 'edge_szeged')


def pi_edge(g: Graph, table: Optional[CutTable] = None) -> int:
    """Edge-PI index: sum over edges of m_u + m_v."""
    table = _ensure_table(g, table)
    return _total(_exact(table.m_u) + _exact(table.m_v), 'pi_edge')


# the edge version came first and is usually called PI without subscript
pi = pi_edge


def pi_vertex(g: Graph, table: Optional[CutTable] = None) -> int:
    """Vertex-PI index: sum over edges of n_u + n_v."""
    table = _ensure_table(g, table)
    return _total(_exact(table.n_u) + _exact(table.n_v), 'pi_vertex')


def eccentric_connectivity(g: Graph, d: Optional[DistanceMatrix] = None) -> int:
    """Eccentric connectivity index: sum over vertices of deg(u) * ε(u)."""
    if d is None:
        d = all_pairs_distances(g)
    return _total(_exact(g.degrees) * _exact(d.max(axis=1)), 'eccentric_connectivity')


class IndexReport:
    """The five index values of a graph and how they were obtained."""

    def __init__(self, szeged: int, edge_szeged: int, pi_edge: int, pi_vertex: int,
                 eccentric_connectivity: int, method: Method = Method.DIRECT,
                 counters: Optional[Counters] = None, wall_time: float = 0.0):
        """Constructor.

        Args:
            szeged: Szeged index
            edge_szeged: edge-Szeged index
            pi_edge: edge-PI index
            pi_vertex: vertex-PI index
            eccentric_connectivity: eccentric connectivity index
            method: how the values were obtained
            counters: instrumentation counters of the computation
            wall_time: seconds spent computing
        """
        # pylint: disable=too-many-arguments
        self.szeged = szeged
        self.edge_szeged = edge_szeged
        self.pi_edge = pi_edge
        self.pi_vertex = pi_vertex
        self.eccentric_connectivity = eccentric_connectivity
        self.method = method
        self.counters = counters or Counters()
        self.wall_time = wall_time

    @property
    def pi(self) -> int:
        """Alias of pi_edge."""
        return self.pi_edge

    def values(self) -> Dict[str, int]:
        """The five values, keyed by index name in canonical order."""
        return {name: getattr(self, name) for name in INDEX_NAMES}

    def __repr__(self):
        """Overloaded method."""
        values = ', '.join(f'{name}={value}' for name, value in self.values().items())
        return f'IndexReport({values}, method={self.method.value})'


def _log_pi_vertex_extreme(g: Graph, d: DistanceMatrix, value: int):
    """Bipartite graphs reach PI_v = n * m, report the non-bipartite ones that do too."""
    if g.m and value == g.n * g.m and not is_bipartite(g, d):
        L.warning('Non-bipartite %s attains PI_v = n * m = %d, edges: %s',
                  g, value, g.edges.tolist())


def compute_indices(g: Graph, counters: Optional[Counters] = None) -> IndexReport:
    """Computes the five indices of g from their definitions.

    One all-pairs distance computation (n breadth-first searches) and one edge
    classification pass are performed.
    """
    start = time.perf_counter()
    counters = counters if counters is not None else Counters()
    d = all_pairs_distances(g, counters)
    table = cut_table(g, d, counters)
    report = IndexReport(szeged=szeged(g, table),
                         edge_szeged=edge_szeged(g, table),
                         pi_edge=pi_edge(g, table),
                         pi_vertex=pi_vertex(g, table),
                         eccentric_connectivity=eccentric_connectivity(g, d),
                         method=Method.DIRECT,
                         counters=counters)
    _log_pi_vertex_extreme(g, d, report.pi_vertex)
    report.wall_time = time.perf_counter() - start
    return report
