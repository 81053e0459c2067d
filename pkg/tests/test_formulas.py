from pathlib import Path

import numpy as np
import pytest

import splice_indices.formulas as tested
from splice_indices.edgelist import read_edgelist
from splice_indices.graph import Counters, build_graph
from splice_indices.indices import Method, compute_indices
from splice_indices.splice import SpliceSpec, Variant, splice
from splice_indices.verify import random_connected_graph

DATA = Path(__file__).parent / 'data'


def load(name):
    return read_edgelist(DATA / f'{name}.txt')


def values(report):
    return tuple(report.values().values())


def test_k2_k2_printed_and_corrected():
    spec = SpliceSpec(load('k2'), load('k2'), 1, 0)
    inputs = tested.formula_inputs(spec)
    assert inputs.sizes == (2, 2, 1, 1)
    assert values(tested.evaluate(inputs, Variant.PRINTED)) == (6, 0, 2, 12, 8)
    assert values(tested.evaluate(inputs, Variant.CORRECTED)) == (4, 0, 2, 6, 6)
    assert values(tested.splice_index_report(spec, Method.DIRECT)) == (4, 0, 2, 6, 6)


def test_c3_k2():
    spec = SpliceSpec(load('c3'), load('k2'), 0, 0)
    corrected = tested.splice_index_report(spec, 'formula-corrected')
    assert corrected.method is Method.FORMULA_CORRECTED
    assert values(corrected) == (8, 5, 11, 12, 13)

    printed = tested.splice_index_report(spec, Method.FORMULA_PRINTED)
    assert printed.method is Method.FORMULA_PRINTED
    assert values(printed) == (11, 5, 11, 20, 16)


def test_individual_formulas():
    inputs = tested.formula_inputs(SpliceSpec(load('c3'), load('k2'), 0, 0))
    assert tested.szeged_splice(inputs, Variant.CORRECTED) == 8
    assert tested.edge_szeged_splice(inputs, Variant.PRINTED) == 5
    assert tested.pi_edge_splice(inputs, Variant.PRINTED) == 11
    assert tested.pi_vertex_splice(inputs, Variant.CORRECTED) == 12
    assert tested.ecc_splice(inputs, Variant.CORRECTED) == 13


def test_counters():
    spec = SpliceSpec(load('p4'), load('c3'), 1, 2)
    direct, formula = Counters(), Counters()
    tested.splice_index_report(spec, Method.DIRECT, direct)
    report = tested.splice_index_report(spec, Method.FORMULA_CORRECTED, formula)
    assert direct.bfs_calls == 6
    assert formula.bfs_calls == 7
    assert report.counters is formula
    assert report.wall_time >= 0


def test_component_half():
    half, report = tested.component_half(load('paw'), 3)
    assert values(report) == values(compute_indices(load('paw')))
    assert half.root == 3


def test_glue_single_vertex():
    spec = SpliceSpec(load('c4'), build_graph(1, []), 1, 0)
    assert values(tested.splice_index_report(spec, Method.FORMULA_CORRECTED)) == \
        (16, 4, 8, 16, 16)


@pytest.mark.parametrize('seed', range(10))
def test_corrected_matches_direct(seed):
    rng = np.random.default_rng(seed)
    n1, n2 = (int(n) for n in rng.integers(2, 15, size=2))
    g1 = random_connected_graph(n1, 0.3, rng)
    g2 = random_connected_graph(n2, 0.3, rng)
    spec = SpliceSpec(g1, g2, int(rng.integers(n1)), int(rng.integers(n2)))
    direct = compute_indices(splice(spec)[0])
    assert values(tested.splice_index_report(spec, Method.FORMULA_CORRECTED)) == values(direct)
    # splicing is symmetric up to isomorphism
    assert values(tested.splice_index_report(spec.swapped(), Method.FORMULA_CORRECTED)) == \
        values(direct)


@pytest.mark.parametrize('seed', range(10))
def test_printed_overestimates(seed):
    rng = np.random.default_rng(seed)
    g1 = random_connected_graph(8, 0.4, rng)
    g2 = random_connected_graph(6, 0.4, rng)
    spec = SpliceSpec(g1, g2, int(rng.integers(8)), int(rng.integers(6)))
    inputs = tested.formula_inputs(spec)
    printed = tested.evaluate(inputs, Variant.PRINTED)
    corrected = tested.evaluate(inputs, Variant.CORRECTED)
    half1, half2 = inputs.half1, inputs.half2
    assert printed.szeged - corrected.szeged == half1.sum_far_n + half2.sum_far_n
    assert printed.pi_vertex - corrected.pi_vertex == half1.t + half2.t + g1.n + g2.n
    assert printed.eccentric_connectivity > corrected.eccentric_connectivity
    assert printed.edge_szeged == corrected.edge_szeged
    assert printed.pi_edge == corrected.pi_edge


def test_method_variant_maps():
    assert tested.METHOD_VARIANTS[Method.FORMULA_PRINTED] is Variant.PRINTED
    assert tested.VARIANT_METHODS[Variant.CORRECTED] is Method.FORMULA_CORRECTED
