import json

import pytest

from splice_indices.splice import Variant
from splice_indices.utils import worker_count
from splice_indices.verify import CampaignConfig, enumerate_small_graphs, run_campaign


@pytest.mark.parametrize('max_n, count', [(6, 143), (7, 996)])
def test_connected_graph_counts(max_n, count):
    assert len(list(enumerate_small_graphs(max_n))) == count


def test_corrected_formulas_exhaustive():
    # every splice of two connected graphs with at most 6 vertices
    config = CampaignConfig(trials=0, exhaustive_limit=6, variants=tuple(Variant),
                            workers=worker_count())
    report = run_campaign(config)
    assert report.exhaustive_cases == 330388
    assert report.mismatches(Variant.CORRECTED) == 0
    for name in ('edge_szeged', 'pi_edge'):
        assert report.cells[name, Variant.PRINTED].mismatches == 0


def test_corrected_formulas_random():
    config = CampaignConfig(trials=500, min_n=10, max_n=40, density=(0.1, 0.5), seed=2024,
                            exhaustive_limit=0, variants=tuple(Variant))
    report = run_campaign(config)
    assert report.corrected_ok
    for name in ('szeged', 'pi_vertex', 'eccentric_connectivity'):
        cell = report.cells[name, Variant.PRINTED]
        assert cell.mismatches == 500
        assert cell.overestimates_only
    for name in ('edge_szeged', 'pi_edge'):
        assert report.cells[name, Variant.PRINTED].mismatches == 0
    json.dumps(report.to_dict())
