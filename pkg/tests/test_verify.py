import json
from pathlib import Path

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mock import patch

import splice_indices.verify as tested
from splice_indices.edgelist import read_edgelist
from splice_indices.exceptions import CampaignConfigError, EnumerationLimitError
from splice_indices.graph import is_tree
from splice_indices.splice import SpliceSpec, Variant

DATA = Path(__file__).parent / 'data'


def load(name):
    return read_edgelist(DATA / f'{name}.txt')


@settings(max_examples=30, deadline=None)
@given(n=st.integers(1, 30), density=st.floats(0, 1), seed=st.integers(0, 2**32))
def test_random_connected_graph(n, density, seed):
    g = tested.random_connected_graph(n, density, np.random.default_rng(seed))
    assert g.n == n
    assert n - 1 <= g.m <= n * (n - 1) // 2
    assert g == tested.random_connected_graph(n, density, np.random.default_rng(seed))


def test_random_connected_graph_extremes():
    assert is_tree(tested.random_connected_graph(50, 0., 1))
    assert tested.random_connected_graph(6, 1., 1).m == 15


def test_random_trees_are_diverse():
    rng = np.random.default_rng(0)
    trees = {tested.random_connected_graph(4, 0., rng) for _ in range(200)}
    # 16 labeled trees on 4 vertices
    assert len(trees) == 16


@pytest.mark.parametrize('max_n, count', [(0, 0), (1, 1), (2, 2), (3, 4), (4, 10), (5, 31)])
def test_enumerate_small_graphs(max_n, count):
    graphs = list(tested.enumerate_small_graphs(max_n))
    assert len(graphs) == count
    assert [g.n for g in graphs] == sorted(g.n for g in graphs)
    for i, g in enumerate(graphs):
        for other in graphs[i + 1:]:
            if other.n == g.n:
                assert not nx.is_isomorphic(g.to_networkx(), other.to_networkx())


@settings(max_examples=30, deadline=None)
@given(n=st.integers(1, 7), density=st.floats(0, 1), seed=st.integers(0, 2**32))
def test_isomorphic_relabeled(n, density, seed):
    rng = np.random.default_rng(seed)
    g = tested.random_connected_graph(n, density, rng)
    perm = rng.permutation(n)
    relabeled = tested.build_graph(n, perm[g.edges].tolist())
    a, b = tested._invariants(g), tested._invariants(relabeled)
    assert a.signature == b.signature
    assert tested._isomorphic(a, b)


def test_enumerate_six_vertices():
    assert sum(1 for g in tested.enumerate_small_graphs(6) if g.n == 6) == 112


def test_enumeration_limit():
    with pytest.raises(EnumerationLimitError, match='got 8'):
        tested.enumerate_small_graphs(8)


def test_verify_one():
    spec = SpliceSpec(load('c3'), load('k2'), 0, 0)
    result = tested.verify_one(spec)
    assert not result
    assert len(result.comparisons) == 5
    assert result.info == ''

    result = tested.verify_one(spec, [Variant.PRINTED, 'corrected'])
    assert result
    assert [c.variant for c in result.comparisons] == [Variant.PRINTED] * 5 + \
        [Variant.CORRECTED] * 5
    assert [c.index for c in result.mismatches] == ['szeged', 'pi_vertex',
                                                    'eccentric_connectivity']
    assert result.info.splitlines()[0] == \
        'szeged (printed): formula 11 != direct 8 (discrepancy +3)'


def test_verify_one_cached():
    spec = SpliceSpec(load('p4'), load('paw'), 3, 1)
    assert tested.verify_one(spec, Variant.CORRECTED, cache=True).comparisons == \
        tested.verify_one(spec, Variant.CORRECTED).comparisons


def test_replay_witness():
    spec = SpliceSpec(load('k2'), load('k2'), 1, 0)
    result = tested.replay_witness(json.loads(json.dumps(spec.to_dict())))
    assert result.spec == spec
    assert {c.index for c in result.mismatches} == {'szeged', 'pi_vertex',
                                                    'eccentric_connectivity'}
    assert all(c.variant is Variant.PRINTED for c in result.mismatches)


@pytest.mark.parametrize('kwargs, message', [
    ({'trials': -1}, 'trials'),
    ({'min_n': 5, 'max_n': 4}, 'min_n <= max_n'),
    ({'min_n': 0}, 'min_n <= max_n'),
    ({'density': (0.6, 0.5)}, 'density'),
    ({'density': 1.5}, 'density'),
    ({'exhaustive_limit': 8}, 'exhaustive_limit'),
    ({'seed': -1}, 'seed'),
    ({'variants': []}, 'variant'),
    ({'workers': 0}, 'workers'),
    ({'workers': -2}, 'workers'),
])
def test_campaign_config_errors(kwargs, message):
    with pytest.raises(CampaignConfigError, match=message):
        tested.CampaignConfig(**kwargs)


def test_campaign_config():
    config = tested.CampaignConfig(density=0.2, variants='corrected')
    assert config.density == (0.2, 0.2)
    assert config.variants == [Variant.CORRECTED]
    assert config.to_dict() == {'trials': 200, 'min_n': 10, 'max_n': 40,
                                'density': [0.2, 0.2], 'seed': 0, 'variants': ['corrected'],
                                'exhaustive_limit': 4}


def test_run_campaign_corrected():
    config = tested.CampaignConfig(trials=20, min_n=2, max_n=12, exhaustive_limit=4,
                                   variants=Variant.CORRECTED, seed=5)
    report = tested.run_campaign(config)
    # unordered pairs of the 10 graphs, all glue vertices: their orders sum to 33, squares to 119
    assert report.exhaustive_cases == (33 ** 2 + 119) // 2
    assert report.random_cases == 20
    assert report.corrected_ok
    assert report.mismatches(Variant.CORRECTED) == 0
    assert all(cell.matches == report.cases for cell in report.cells.values())
    df = report.df
    assert list(df['index']) == list(tested.INDEX_NAMES)
    assert set(df.variant) == {'corrected'}


def test_run_campaign_printed(caplog):
    config = tested.CampaignConfig(trials=0, exhaustive_limit=3, variants=tuple(Variant))
    report = tested.run_campaign(config)
    assert report.corrected_ok
    assert report.mismatches(Variant.PRINTED) > 0
    for name in ('szeged', 'pi_vertex', 'eccentric_connectivity'):
        cell = report.cells[name, Variant.PRINTED]
        assert cell.mismatches > 0
        assert cell.overestimates_only
        assert SpliceSpec.from_dict(cell.first_witness)
    for name in ('edge_szeged', 'pi_edge'):
        assert report.cells[name, Variant.PRINTED].mismatches == 0
    assert 'underestimated' not in caplog.text


def test_first_witness_is_earliest_case():
    config = tested.CampaignConfig(trials=0, exhaustive_limit=2, variants=Variant.PRINTED)
    report = tested.run_campaign(config)
    cell = report.cells['szeged', Variant.PRINTED]
    # K1 splices match, the first mismatch is K1 with K2
    assert cell.first_witness_case == 1
    assert SpliceSpec.from_dict(cell.first_witness).g1.n == 1


def test_report_is_deterministic():
    config = tested.CampaignConfig(trials=10, min_n=3, max_n=8, exhaustive_limit=2, seed=42)
    first = tested.run_campaign(config).to_dict()
    second = tested.run_campaign(config).to_dict()
    assert json.dumps(first) == json.dumps(second)
    assert list(first) == ['version', 'rng', 'config', 'totals', 'cells']
    assert first['rng'] == 'PCG64'
    assert 'elapsed' not in json.dumps(first)


def test_seed_changes_trials():
    base = dict(trials=5, min_n=5, max_n=9, exhaustive_limit=0, variants=Variant.PRINTED)
    first = tested.run_campaign(tested.CampaignConfig(seed=1, **base)).to_dict()
    second = tested.run_campaign(tested.CampaignConfig(seed=2, **base)).to_dict()
    assert first['cells'] != second['cells']


def test_workers_without_dask(caplog):
    config = tested.CampaignConfig(trials=3, min_n=3, max_n=5, exhaustive_limit=0, workers=2)
    with patch.dict('sys.modules', {'dask': None, 'dask.bag': None}):
        report = tested.run_campaign(config)
    assert report.cases == 3
    assert 'running on a single worker' in caplog.text


def test_underestimate_is_logged(caplog):
    report = tested.CampaignReport(tested.CampaignConfig(variants=Variant.PRINTED))
    spec = SpliceSpec(load('k2'), load('k2'), 0, 0)
    result = tested.VerifyResult(spec, None, [
        tested.Comparison('szeged', Variant.PRINTED, direct=5, formula=4)])
    report.add(0, result)
    tested._log_underestimates(report)
    assert 'Printed szeged underestimated' in caplog.text
    assert report.cells['szeged', Variant.PRINTED].max_abs_discrepancy == 1
