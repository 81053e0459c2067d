from pathlib import Path

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mock import patch
from numpy.testing import assert_array_equal

import splice_indices.indices as tested
from splice_indices.edgelist import read_edgelist
from splice_indices.exceptions import IndexOverflowError, NotAnEdgeError
from splice_indices.graph import Counters, all_pairs_distances, build_graph
from splice_indices.verify import random_connected_graph

DATA = Path(__file__).parent / 'data'

EXPECTED = {
    'k2': (1, 0, 0, 2, 2),
    'p3': (4, 0, 2, 6, 6),
    'p4': (10, 1, 6, 12, 14),
    'c3': (3, 3, 6, 6, 6),
    'c4': (16, 4, 8, 16, 16),
    'paw': (8, 5, 11, 12, 13),
}


def naive_indices(g):
    """Double loop over edges and vertices, distances from networkx."""
    d = dict(nx.all_pairs_shortest_path_length(g.to_networkx()))
    edges = [tuple(e) for e in g.edges.tolist()]

    def edge_dist(f, w):
        return min(d[f[0]][w], d[f[1]][w])

    sz = sze = pi_e = pi_v = 0
    for u, v in edges:
        n_u = sum(1 for w in range(g.n) if d[u][w] < d[v][w])
        n_v = sum(1 for w in range(g.n) if d[v][w] < d[u][w])
        m_u = sum(1 for f in edges if edge_dist(f, u) < edge_dist(f, v))
        m_v = sum(1 for f in edges if edge_dist(f, v) < edge_dist(f, u))
        sz += n_u * n_v
        sze += m_u * m_v
        pi_e += m_u + m_v
        pi_v += n_u + n_v
    ecc = sum(max(d[u].values()) * int(g.degrees[u]) for u in range(g.n))
    return sz, sze, pi_e, pi_v, ecc


@pytest.mark.parametrize('name', sorted(EXPECTED))
def test_fixture_values(name):
    g = read_edgelist(DATA / f'{name}.txt')
    report = tested.compute_indices(g)
    assert tuple(report.values().values()) == EXPECTED[name]
    assert naive_indices(g) == EXPECTED[name]


def test_single_vertex():
    report = tested.compute_indices(build_graph(1, []))
    assert tuple(report.values().values()) == (0, 0, 0, 0, 0)


def test_individual_functions():
    g = read_edgelist(DATA / 'paw.txt')
    assert tested.szeged(g) == 8
    assert tested.edge_szeged(g) == 5
    assert tested.pi_edge(g) == 11
    assert tested.pi(g) == 11
    assert tested.pi_vertex(g) == 12
    assert tested.eccentric_connectivity(g) == 13


def test_edge_cut_counts():
    g = read_edgelist(DATA / 'paw.txt')
    d = all_pairs_distances(g)
    counts = tested.edge_cut_counts(g, d, (0, 3))
    assert counts == tested.EdgeCutCounts((0, 3), 3, 1, 3, 0, 0, 1)

    # orientation follows the argument
    counts = tested.edge_cut_counts(g, d, (3, 0))
    assert (counts.n_u, counts.n_v, counts.m_u, counts.m_v) == (1, 3, 0, 3)

    counts = tested.edge_cut_counts(g, d, (1, 2))
    assert counts == tested.EdgeCutCounts((1, 2), 1, 1, 1, 1, 2, 2)

    with pytest.raises(NotAnEdgeError):
        tested.edge_cut_counts(g, d, (1, 3))
    with pytest.raises(NotAnEdgeError):
        tested.edge_cut_counts(g, d, (1, 7))


def test_cut_table():
    g = read_edgelist(DATA / 'c4.txt')
    counters = Counters()
    table = tested.cut_table(g, all_pairs_distances(g), counters)
    assert counters.classification_passes == 1
    assert len(table) == 4
    assert table[0] == tested.EdgeCutCounts((0, 1), 2, 2, 1, 1, 0, 2)
    df = table.df
    assert list(df.columns) == tested.CutTable.COLUMNS
    assert_array_equal(df.n_u + df.n_v + df.eq_vertices, [4] * 4)
    assert_array_equal(df.m_u + df.m_v + df.eq_edges, [4] * 4)


def test_cut_table_blocks():
    g = random_connected_graph(40, 0.3, np.random.default_rng(3))
    d = all_pairs_distances(g)
    with patch.object(tested, 'EDGE_BLOCK', 7):
        small_blocks = tested.cut_table(g, d)
    table = tested.cut_table(g, d)
    assert_array_equal(small_blocks.n_u, table.n_u)
    assert_array_equal(small_blocks.m_v, table.m_v)


def test_compute_indices_counters():
    g = read_edgelist(DATA / 'p4.txt')
    counters = Counters()
    report = tested.compute_indices(g, counters)
    assert report.counters is counters
    assert counters == Counters(bfs_calls=4, classification_passes=1)
    assert report.method is tested.Method.DIRECT
    assert report.wall_time >= 0
    assert report.pi == report.pi_edge
    assert repr(report) == ('IndexReport(szeged=10, edge_szeged=1, pi_edge=6, pi_vertex=12, '
                            'eccentric_connectivity=14, method=direct)')


def test_overflow():
    g = read_edgelist(DATA / 'c4.txt')
    with patch('splice_indices.utils.UINT64_MAX', 15):
        with pytest.raises(IndexOverflowError, match='szeged = 16'):
            tested.szeged(g)
        assert tested.edge_szeged(g) == 4


def test_pi_vertex_bipartite_identity(caplog):
    g = read_edgelist(DATA / 'c4.txt')
    assert tested.pi_vertex(g) == g.n * g.m
    tested.compute_indices(g)
    assert 'Non-bipartite' not in caplog.text


def test_method_values():
    assert tested.Method.values() == ['direct', 'formula-printed', 'formula-corrected']


@settings(max_examples=30, deadline=None)
@given(n=st.integers(2, 12), density=st.floats(0, 1), seed=st.integers(0, 2**32))
def test_matches_naive_definitions(n, density, seed):
    g = random_connected_graph(n, density, np.random.default_rng(seed))
    assert tuple(tested.compute_indices(g).values().values()) == naive_indices(g)


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 2**32))
def test_edge_order_does_not_matter(seed):
    rng = np.random.default_rng(seed)
    g = random_connected_graph(9, 0.4, rng)
    shuffled = g.edges[rng.permutation(g.m)][:, ::-1]
    other = build_graph(g.n, shuffled.tolist())
    assert other == g
    assert tested.compute_indices(other).values() == tested.compute_indices(g).values()


def test_pi_vertex_of_trees():
    rng = np.random.default_rng(100)
    for _ in range(100):
        n = int(rng.integers(1, 201))
        g = random_connected_graph(n, 0., rng)
        assert tested.pi_vertex(g) == n * (n - 1)


@settings(max_examples=20, deadline=None)
@given(n=st.integers(1, 15), density=st.floats(0, 1), seed=st.integers(0, 2**32))
def test_vertex_relabeling_does_not_matter(n, density, seed):
    rng = np.random.default_rng(seed)
    g = random_connected_graph(n, density, rng)
    perm = rng.permutation(n)
    relabeled = build_graph(n, perm[g.edges].tolist())
    assert tested.compute_indices(relabeled).values() == tested.compute_indices(g).values()
