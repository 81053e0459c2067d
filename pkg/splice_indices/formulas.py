"""Closed-form indices of a splice, from the parameters of its two components.

The splice is never built: only the components are traversed, so the number of breadth-first
searches is |V1| + |V2| instead of |V1| + |V2| - 1 searches over the larger splice.

With ``c(k) = k`` for the printed reading and ``c(k) = k - 1`` for the corrected one::

    Sz(S)   = Sz(G1) + Sz(G2) + c(|V2|) Σ n^1(f) + c(|V1|) Σ n^2(f)
    Sz_e(S) = Sz_e(G1) + Sz_e(G2) + |E2| Σ m^1(f) + |E1| Σ m^2(f)
    PI(S)   = PI(G1) + PI(G2) + t2 |E1| + t1 |E2|
    PI_v(S) = PI_v(G1) + PI_v(G2) + (t2 + 1) |V1| + (t1 + 1) |V2|      (printed)
    PI_v(S) = PI_v(G1) + PI_v(G2) + t1 (|V2| - 1) + t2 (|V1| - 1)      (corrected)
    Ecc(S)  = Σ_{x in V1} deg_S(x) ε(x) + Σ_{y in V2} deg_S(y) ε(y)

the printed Ecc summing over all of V2 and the corrected one over V2 without u2.

Erratum trace: the printed derivations of PI_v and PI add a term ``n_{u1}(e) + n_{u2}(e)``
(resp. ``m_{u1}(e) + m_{u2}(e)``) for an edge e joining u1 and u2. A splice has no such edge,
the term looks inherited from the bridge graph construction. It is what turns ``t_i |V_j|``
into the printed ``(t_i + 1) |V_j|``. The edge part of the count transfer needs no correction:
the glue vertex is shared, no edge is.
"""
import time
from typing import Optional, Tuple, Union

import numpy as np

from splice_indices.graph import Counters, Graph, all_pairs_distances
from splice_indices.indices import (IndexReport, Method, compute_indices,
                                    eccentric_connectivity, edge_szeged, pi_edge, pi_vertex,
                                    szeged)
from splice_indices.splice import (SpliceParams, SpliceSpec, Variant, component_eccentricity,
                                   splice, splice_params, vertex_map)
from splice_indices.utils import check_uint64

METHOD_VARIANTS = {
    Method.FORMULA_PRINTED: Variant.PRINTED,
    Method.FORMULA_CORRECTED: Variant.CORRECTED,
}
VARIANT_METHODS = {variant: method for method, variant in METHOD_VARIANTS.items()}


def component_half(g: Graph, u: int,
                   counters: Optional[Counters] = None) -> Tuple[SpliceParams, IndexReport]:
    """Splice parameters and direct indices of one component, from a single distance matrix."""
    distances = all_pairs_distances(g, counters)
    half = splice_params(g, u, counters, distances)
    report = IndexReport(szeged=szeged(g, half.table),
                         edge_szeged=edge_szeged(g, half.table),
                         pi_edge=pi_edge(g, half.table),
                         pi_vertex=pi_vertex(g, half.table),
                         eccentric_connectivity=eccentric_connectivity(g, distances))
    return half, report


class FormulaInputs:
    """Everything the closed forms need, for both components."""

    def __init__(self, half1: SpliceParams, half2: SpliceParams,
                 report1: IndexReport, report2: IndexReport):
        """Constructor.

        Args:
            half1: parameters of G1 rooted at u1
            half2: parameters of G2 rooted at u2
            report1: direct indices of G1
            report2: direct indices of G2
        """
        self.half1 = half1
        self.half2 = half2
        self.report1 = report1
        self.report2 = report2

    @property
    def sizes(self) -> Tuple[int, int, int, int]:
        """|V1|, |V2|, |E1|, |E2|."""
        return self.half1.n, self.half2.n, self.half1.m, self.half2.m

    def __repr__(self):
        """Overloaded method."""
        return f'FormulaInputs({self.half1!r}, {self.half2!r})'


def formula_inputs(spec: SpliceSpec, counters: Optional[Counters] = None) -> FormulaInputs:
    """Computes the formula inputs of a splice, traversing only its components."""
    half1, report1 = component_half(spec.g1, spec.u1, counters)
    half2, report2 = component_half(spec.g2, spec.u2, counters)
    return FormulaInputs(half1, half2, report1, report2)


def _vertex_coefficient(size: int, variant: Variant) -> int:
    """Vertices of a component that end up on the glue side of an edge of the other one."""
    return size if variant is Variant.PRINTED else size - 1


def szeged_splice(inputs: FormulaInputs, variant: Variant) -> int:
    """Szeged index of the splice."""
    n1, n2, _, _ = inputs.sizes
    value = (inputs.report1.szeged + inputs.report2.szeged
             + _vertex_coefficient(n2, variant) * inputs.half1.sum_far_n
             + _vertex_coefficient(n1, variant) * inputs.half2.sum_far_n)
    return check_uint64(value, 'szeged')


def edge_szeged_splice(inputs: FormulaInputs, variant: Variant) -> int:
    """Edge-Szeged index of the splice, identical in both readings."""
    assert isinstance(variant, Variant)
    _, _, m1, m2 = inputs.sizes
    value = (inputs.report1.edge_szeged + inputs.report2.edge_szeged
             + m2 * inputs.half1.sum_far_m + m1 * inputs.half2.sum_far_m)
    return check_uint64(value, 'edge_szeged')


def pi_vertex_splice(inputs: FormulaInputs, variant: Variant) -> int:
    """Vertex-PI index of the splice."""
    n1, n2, _, _ = inputs.sizes
    t1, t2 = inputs.half1.t, inputs.half2.t
    value = inputs.report1.pi_vertex + inputs.report2.pi_vertex
    if variant is Variant.PRINTED:
        value += (t2 + 1) * n1 + (t1 + 1) * n2
    else:
        value += t1 * (n2 - 1) + t2 * (n1 - 1)
    return check_uint64(value, 'pi_vertex')


def pi_edge_splice(inputs: FormulaInputs, variant: Variant) -> int:
    """Edge-PI index of the splice, identical in both readings."""
    assert isinstance(variant, Variant)
    _, _, m1, m2 = inputs.sizes
    value = (inputs.report1.pi_edge + inputs.report2.pi_edge
             + inputs.half2.t * m1 + inputs.half1.t * m2)
    return check_uint64(value, 'pi_edge')


def ecc_splice(inputs: FormulaInputs, variant: Variant) -> int:
    """Eccentric connectivity index of the splice."""
    half1, half2 = inputs.half1, inputs.half2
    vmap = vertex_map(half1.n, half2.n, half1.root, half2.root)
    degrees = np.zeros(vmap.n, dtype=np.int64)
    np.add.at(degrees, vmap.map1, half1.degrees)
    np.add.at(degrees, vmap.map2, half2.degrees)

    over_v1 = (degrees[vmap.map1].astype(object)
               * component_eccentricity(half1, half2).astype(object))
    over_v2 = (degrees[vmap.map2].astype(object)
               * component_eccentricity(half2, half1).astype(object))
    if variant is Variant.CORRECTED:
        over_v2 = np.delete(over_v2, half2.root)
    return check_uint64(int(over_v1.sum()) + int(over_v2.sum()), 'eccentric_connectivity')


def evaluate(inputs: FormulaInputs, variant: Variant) -> IndexReport:
    """Evaluates the five closed forms in one reading."""
    return IndexReport(szeged=szeged_splice(inputs, variant),
                       edge_szeged=edge_szeged_splice(inputs, variant),
                       pi_edge=pi_edge_splice(inputs, variant),
                       pi_vertex=pi_vertex_splice(inputs, variant),
                       eccentric_connectivity=ecc_splice(inputs, variant),
                       method=VARIANT_METHODS[variant])


def splice_index_report(spec: SpliceSpec, method: Union[Method, str],
                        counters: Optional[Counters] = None) -> IndexReport:
    """The five indices of a splice, computed directly or through the closed forms.

    Args:
        spec: the splice
        method: DIRECT builds the splice, FORMULA_* only traverse the components
        counters: optional counters, updated in place
    """
    start = time.perf_counter()
    method = Method(method)
    counters = counters if counters is not None else Counters()
    if method is Method.DIRECT:
        graph, _ = splice(spec)
        report = compute_indices(graph, counters)
    else:
        report = evaluate(formula_inputs(spec, counters), METHOD_VARIANTS[method])
        report.counters = counters
    report.wall_time = time.perf_counter() - start
    return report
