import numpy as np

from splice_indices.formulas import splice_index_report
from splice_indices.graph import Counters
from splice_indices.indices import Method
from splice_indices.splice import SpliceSpec
from splice_indices.verify import random_connected_graph

REPEAT = 5


def test_composition_is_faster_on_large_trees():
    rng = np.random.default_rng(1000)
    g1 = random_connected_graph(1000, 0., rng)
    g2 = random_connected_graph(1000, 0., rng)
    spec = SpliceSpec(g1, g2, 0, 0)

    times, values = {}, {}
    for method in (Method.DIRECT, Method.FORMULA_CORRECTED):
        runs = []
        for _ in range(REPEAT):
            counters = Counters()
            report = splice_index_report(spec, method, counters)
            runs.append(report.wall_time)
        times[method] = np.median(runs)
        values[method] = report.values()
        expected_bfs = 1999 if method is Method.DIRECT else 2000
        assert counters.bfs_calls == expected_bfs

    assert values[Method.DIRECT] == values[Method.FORMULA_CORRECTED]
    assert times[Method.FORMULA_CORRECTED] < times[Method.DIRECT]
