"""Brute-force checks of the splice formulas against direct computation.

A campaign runs an exhaustive phase (every unordered pair of connected graphs up to a given
size, every choice of glue vertices) followed by a randomized phase of seeded trials. Each
case is verified independently, so the cases can be spread over dask workers; the report is
reduced in case order and does not depend on scheduling.

Random numbers come from numpy's ``PCG64`` bit generator. Trial ``i`` uses the ``i``-th child
of ``SeedSequence(seed).spawn(trials)``, so a report is reproducible from its seed alone.
"""
import itertools
import logging
import time
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple, Union

import numpy as np
import pandas as pd
from more_itertools import always_iterable

from splice_indices.exceptions import CampaignConfigError, EnumerationLimitError
from splice_indices.formulas import (FormulaInputs, component_half, evaluate, formula_inputs,
                                     splice_index_report)
from splice_indices.graph import Graph, all_pairs_distances, build_graph
from splice_indices.indices import INDEX_NAMES, IndexReport, Method
from splice_indices.splice import SpliceSpec, Variant
from splice_indices.utils import worker_count
from splice_indices.version import VERSION

L = logging.getLogger(__name__)

RNG_ALGORITHM = 'PCG64'
MAX_ENUMERATION_SIZE = 7

# printed readings that count the glue vertex twice, hence can only overestimate
DOUBLE_COUNTING_INDICES = ('szeged', 'pi_vertex', 'eccentric_connectivity')

VariantsArg = Union[Variant, str, Iterable[Union[Variant, str]]]


def _as_variants(variants: VariantsArg) -> List[Variant]:
    """Requested variants, deduplicated, in canonical order."""
    requested = {Variant(variant) for variant in always_iterable(variants)}
    return [variant for variant in Variant if variant in requested]


def random_connected_graph(n: int, density: float, rng=None) -> Graph:
    """Returns a random connected graph on n vertices.

    A uniform random spanning tree of the complete graph is drawn with a random walk (the edge
    used to enter each vertex for the first time), then every other pair of vertices is joined
    independently with probability density.

    Args:
        n: number of vertices, at least 1
        density: probability of each non-tree edge
        rng: a numpy Generator, or a seed for one
    """
    rng = np.random.default_rng(rng)
    visited = np.zeros(n, dtype=bool)
    current = int(rng.integers(n))
    visited[current] = True
    remaining = n - 1
    tree = set()
    while remaining:
        step = int(rng.integers(n - 1))
        step += step >= current
        if not visited[step]:
            visited[step] = True
            tree.add((min(current, step), max(current, step)))
            remaining -= 1
        current = step

    rows, cols = np.triu_indices(n, k=1)
    keep = rng.random(len(rows)) < density
    extra = [pair for pair in zip(rows[keep].tolist(), cols[keep].tolist()) if pair not in tree]
    return build_graph(n, sorted(tree) + extra)


class _Invariants(NamedTuple):
    """A graph with its per-vertex isomorphism invariants."""

    graph: Graph
    vertex_keys: Tuple[Tuple, ...]

    @property
    def signature(self) -> Tuple:
        """Edge count and the sorted vertex keys, equal for isomorphic graphs."""
        return self.graph.m, tuple(sorted(self.vertex_keys))


def _invariants(g: Graph) -> _Invariants:
    """Keys every vertex by its degree and its sorted distance row."""
    d = all_pairs_distances(g)
    return _Invariants(g, tuple((int(degree), tuple(sorted(row)))
                                for degree, row in zip(g.degrees, d.tolist())))


def _isomorphic(a: _Invariants, b: _Invariants) -> bool:
    """Brute-force check over the vertex permutations that preserve the keys.

    The two graphs must have the same signature.
    """
    classes: Dict[Tuple, List[int]] = {}
    for v, key in enumerate(b.vertex_keys):
        classes.setdefault(key, []).append(v)
    sources = [[v for v, key in enumerate(a.vertex_keys) if key == target] for target in classes]
    edges_a = a.graph.edges.tolist()
    edges_b = set(map(tuple, b.graph.edges.tolist()))
    mapping = [0] * a.graph.n
    for images in itertools.product(*(itertools.permutations(vs) for vs in classes.values())):
        for source, image in zip(sources, images):
            for v, w in zip(source, image):
                mapping[v] = w
        if all((min(mapping[u], mapping[v]), max(mapping[u], mapping[v])) in edges_b
               for u, v in edges_a):
            return True
    return False


def _extend(graphs: List[Graph], n: int) -> List[Graph]:
    """Connected graphs on n vertices, up to isomorphism.

    Every connected graph has a vertex whose removal leaves it connected, so adding a vertex
    joined to a nonempty subset of the vertices of every graph on n - 1 vertices reaches them
    all.
    """
    buckets: Dict[Tuple, List[_Invariants]] = {}
    found = []
    for graph in graphs:
        base = graph.edges.tolist()
        for mask in range(1, 2 ** (n - 1)):
            candidate = _invariants(
                build_graph(n, base + [(v, n - 1) for v in range(n - 1) if mask >> v & 1]))
            bucket = buckets.setdefault(candidate.signature, [])
            if any(_isomorphic(candidate, other) for other in bucket):
                continue
            bucket.append(candidate)
            found.append(candidate.graph)
    return found


@lru_cache(maxsize=None)
def _small_graphs(max_n: int) -> Tuple[Graph, ...]:
    level = [build_graph(1, [])]
    graphs = list(level)
    for n in range(2, max_n + 1):
        level = _extend(level, n)
        graphs.extend(level)
    return tuple(graphs)


def enumerate_small_graphs(max_n: int) -> Iterator[Graph]:
    """Yields every connected graph with at most max_n vertices, up to isomorphism.

    Graphs come by increasing number of vertices, in a deterministic order.

    Raises:
        EnumerationLimitError: if max_n is larger than 7
    """
    if max_n > MAX_ENUMERATION_SIZE:
        raise EnumerationLimitError(
            f'Exhaustive enumeration is limited to {MAX_ENUMERATION_SIZE} vertices (got {max_n})')
    if max_n < 1:
        return iter(())
    return iter(_small_graphs(max_n))


class Comparison(NamedTuple):
    """One index of one splice, computed directly and by a closed form."""

    index: str
    variant: Variant
    direct: int
    formula: int

    @property
    def match(self) -> bool:
        """Whether the closed form gives the direct value."""
        return self.direct == self.formula

    @property
    def discrepancy(self) -> int:
        """Formula minus direct value."""
        return self.formula - self.direct


class VerifyResult:
    """An object that, when casted as a boolean, is equivalent to True when some formula fails.

    Additional information about the failures is stored in VerifyResult.info.
    """

    def __init__(self, spec: SpliceSpec, direct: IndexReport, comparisons: List[Comparison]):
        """The VerifyResult constructor.

        Args:
            spec: the splice that was checked
            direct: its directly computed indices
            comparisons: one entry per index and requested variant
        """
        self.spec = spec
        self.direct = direct
        self.comparisons = comparisons

    @property
    def mismatches(self) -> List[Comparison]:
        """The comparisons where the closed form differs from the direct value."""
        return [comparison for comparison in self.comparisons if not comparison.match]

    @property
    def info(self) -> str:
        """Human readable description of the mismatches."""
        return '\n'.join(f'{c.index} ({c.variant.value}): formula {c.formula} != direct '
                         f'{c.direct} (discrepancy {c.discrepancy:+d})'
                         for c in self.mismatches)

    def __bool__(self):
        """Returns True if some closed form differs from direct computation."""
        return bool(self.mismatches)


# component parameters are shared by every splice of the exhaustive phase using them
_cached_half = lru_cache(maxsize=4096)(component_half)


def _cached_inputs(spec: SpliceSpec) -> FormulaInputs:
    half1, report1 = _cached_half(spec.g1, spec.u1)
    half2, report2 = _cached_half(spec.g2, spec.u2)
    return FormulaInputs(half1, half2, report1, report2)


def verify_one(spec: SpliceSpec, variants: VariantsArg = Variant.CORRECTED,
               cache: bool = False) -> VerifyResult:
    """Compares the closed forms with direct computation on one splice.

    Args:
        spec: the splice
        variants: one variant or several
        cache: reuse the parameters of components already seen
    """
    direct = splice_index_report(spec, Method.DIRECT)
    inputs = _cached_inputs(spec) if cache else formula_inputs(spec)
    comparisons = []
    for variant in _as_variants(variants):
        formula = evaluate(inputs, variant).values()
        comparisons.extend(Comparison(name, variant, value, formula[name])
                           for name, value in direct.values().items())
    return VerifyResult(spec, direct, comparisons)


def replay_witness(witness: Dict, variants: VariantsArg = tuple(Variant)) -> VerifyResult:
    """Re-checks a splice serialized in a campaign report."""
    return verify_one(SpliceSpec.from_dict(witness), variants)


class CampaignConfig:
    """Parameters of a verification campaign."""

    def __init__(self, trials: int = 200, min_n: int = 10, max_n: int = 40,
                 density: Union[float, Tuple[float, float]] = (0.1, 0.5), seed: int = 0,
                 variants: VariantsArg = tuple(Variant), exhaustive_limit: int = 4,
                 workers: int = 1):
        """Constructor.

        Args:
            trials: number of random splices
            min_n: smallest component size of the random phase
            max_n: largest component size of the random phase
            density: non-tree edge probability, or a (low, high) range drawn per component
            seed: seed of the random phase
            variants: readings of the formulas to check
            exhaustive_limit: largest component size of the exhaustive phase (0 skips it)
            workers: number of dask workers, 1 runs in process

        Raises:
            CampaignConfigError: if the bounds are empty or out of range, or workers < 1
        """
        # pylint: disable=too-many-arguments
        bounds = tuple(float(value) for value in always_iterable(density))
        if len(bounds) == 1:
            bounds = bounds * 2
        errors = []
        if trials < 0:
            errors.append(f'trials must be >= 0 (got {trials})')
        if not 1 <= min_n <= max_n:
            errors.append(f'component sizes need 1 <= min_n <= max_n (got {min_n}, {max_n})')
        if len(bounds) != 2 or not 0. <= bounds[0] <= bounds[1] <= 1.:
            errors.append(f'density must be a range within [0, 1] (got {density})')
        if not 0 <= exhaustive_limit <= MAX_ENUMERATION_SIZE:
            errors.append(f'exhaustive_limit must be in 0..{MAX_ENUMERATION_SIZE} '
                          f'(got {exhaustive_limit})')
        if not 0 <= seed < 2**64:
            errors.append(f'seed must be a 64-bit unsigned integer (got {seed})')
        if workers < 1:
            errors.append(f'workers must be >= 1 (got {workers})')
        self.variants = _as_variants(variants)
        if not self.variants:
            errors.append('at least one variant is needed')
        if errors:
            raise CampaignConfigError('\n'.join(errors))

        self.trials = trials
        self.min_n = min_n
        self.max_n = max_n
        self.density = bounds
        self.seed = seed
        self.exhaustive_limit = exhaustive_limit
        self.workers = workers

    def to_dict(self) -> Dict:
        """Serializable representation, echoed in the report."""
        return {'trials': self.trials, 'min_n': self.min_n, 'max_n': self.max_n,
                'density': list(self.density), 'seed': self.seed,
                'variants': [variant.value for variant in self.variants],
                'exhaustive_limit': self.exhaustive_limit}


class CellStats:
    """Outcome of one index in one variant over a campaign."""

    def __init__(self):
        """Constructor."""
        self.matches = 0
        self.mismatches = 0
        self.max_abs_discrepancy = 0
        self.overestimates_only = True
        self.first_witness_case: Optional[int] = None
        self.first_witness: Optional[Dict] = None

    def add(self, case: int, comparison: Comparison, spec: SpliceSpec):
        """Accounts for the comparison made on the case-th splice."""
        if comparison.match:
            self.matches += 1
            return
        self.mismatches += 1
        self.max_abs_discrepancy = max(self.max_abs_discrepancy, abs(comparison.discrepancy))
        if comparison.discrepancy < 0:
            self.overestimates_only = False
        if self.first_witness is None:
            self.first_witness_case = case
            self.first_witness = spec.to_dict()

    def to_dict(self) -> Dict:
        """Serializable representation."""
        return {'matches': self.matches, 'mismatches': self.mismatches,
                'max_abs_discrepancy': self.max_abs_discrepancy,
                'overestimates_only': self.overestimates_only,
                'first_witness_case': self.first_witness_case,
                'first_witness': self.first_witness}


class CampaignReport:
    """Per index and variant outcome of a campaign."""

    def __init__(self, config: CampaignConfig, exhaustive_cases: int = 0, random_cases: int = 0,
                 elapsed: float = 0.):
        """Constructor.

        Args:
            config: the campaign configuration
            exhaustive_cases: number of splices of the exhaustive phase
            random_cases: number of splices of the randomized phase
            elapsed: wall time of the campaign, in seconds
        """
        self.config = config
        self.exhaustive_cases = exhaustive_cases
        self.random_cases = random_cases
        self.elapsed = elapsed
        self.cells = {(name, variant): CellStats()
                      for name in INDEX_NAMES for variant in config.variants}

    @property
    def cases(self) -> int:
        """Number of splices checked."""
        return self.exhaustive_cases + self.random_cases

    def add(self, case: int, result: VerifyResult):
        """Accounts for the result of the case-th splice."""
        for comparison in result.comparisons:
            self.cells[comparison.index, comparison.variant].add(case, comparison, result.spec)

    def mismatches(self, variant: Variant) -> int:
        """Total number of mismatches of a variant, over all indices."""
        return sum(cell.mismatches for (_, cell_variant), cell in self.cells.items()
                   if cell_variant is variant)

    @property
    def corrected_ok(self) -> bool:
        """Whether the corrected formulas, if checked, never failed."""
        return Variant.CORRECTED not in self.config.variants or \
            self.mismatches(Variant.CORRECTED) == 0

    @property
    def df(self) -> pd.DataFrame:
        """One row per index and variant."""
        columns = ['index', 'variant', 'matches', 'mismatches', 'max_abs_discrepancy',
                   'overestimates_only']
        return pd.DataFrame([[name, variant.value, cell.matches, cell.mismatches,
                              cell.max_abs_discrepancy, cell.overestimates_only]
                             for (name, variant), cell in self.cells.items()],
                            columns=columns)

    def to_dict(self) -> Dict:
        """Serializable representation, without wall time so that it only depends on config."""
        return {
            'version': VERSION,
            'rng': RNG_ALGORITHM,
            'config': self.config.to_dict(),
            'totals': {'exhaustive_cases': self.exhaustive_cases,
                       'random_cases': self.random_cases,
                       'cases': self.cases},
            'cells': [dict(index=name, variant=variant.value, **cell.to_dict())
                      for (name, variant), cell in self.cells.items()],
        }


def _exhaustive_specs(limit: int) -> Iterator[SpliceSpec]:
    """All splices of unordered pairs of small connected graphs, all glue vertices."""
    graphs = list(enumerate_small_graphs(limit))
    for i, g1 in enumerate(graphs):
        for g2 in graphs[i:]:
            for u1, u2 in itertools.product(range(g1.n), range(g2.n)):
                yield SpliceSpec(g1, g2, u1, u2)


def _random_spec(config: CampaignConfig, seed: np.random.SeedSequence) -> SpliceSpec:
    rng = np.random.Generator(np.random.PCG64(seed))
    n1, n2 = (int(n) for n in rng.integers(config.min_n, config.max_n + 1, size=2))
    density1, density2 = rng.uniform(*config.density, size=2)
    g1 = random_connected_graph(n1, float(density1), rng)
    g2 = random_connected_graph(n2, float(density2), rng)
    return SpliceSpec(g1, g2, int(rng.integers(n1)), int(rng.integers(n2)))


def _check(spec: SpliceSpec, variants: List[Variant]) -> VerifyResult:
    return verify_one(spec, variants, cache=True)


def _verify_all(specs: List[SpliceSpec], variants: List[Variant],
                workers: int) -> Iterable[VerifyResult]:
    if workers > 1:
        # pylint: disable=import-outside-toplevel
        try:
            import dask.bag as dask_bag
        except ImportError:
            L.warning('splice-indices[parallel] is not installed, running on a single worker. '
                      'Run: pip install splice-indices[parallel]')
        else:
            return dask_bag.from_sequence(specs, npartitions=4 * workers).map(
                _check, variants=variants).compute(scheduler='processes', num_workers=workers)
    return (_check(spec, variants) for spec in specs)


def _log_underestimates(report: CampaignReport):
    for name in DOUBLE_COUNTING_INDICES:
        cell = report.cells.get((name, Variant.PRINTED))
        if cell is not None and not cell.overestimates_only:
            L.warning('Printed %s underestimated the direct value at least once (first witness '
                      'at case %s): the overestimate property is only an observation',
                      name, cell.first_witness_case)


def run_campaign(config: CampaignConfig) -> CampaignReport:
    """Runs the exhaustive then the randomized phase and reduces their results."""
    start = time.perf_counter()
    specs = list(_exhaustive_specs(config.exhaustive_limit))
    exhaustive_cases = len(specs)
    L.info('Exhaustive phase: %d splices of components with at most %d vertices',
           exhaustive_cases, config.exhaustive_limit)
    specs.extend(_random_spec(config, seed)
                 for seed in np.random.SeedSequence(config.seed).spawn(config.trials))
    L.info('Randomized phase: %d splices of components with %d to %d vertices',
           config.trials, config.min_n, config.max_n)

    report = CampaignReport(config, exhaustive_cases, config.trials)
    for case, result in enumerate(_verify_all(specs, config.variants,
                                              worker_count(config.workers))):
        report.add(case, result)

    _log_underestimates(report)
    report.elapsed = time.perf_counter() - start
    L.info('Checked %d splices in %.2fs', report.cases, report.elapsed)
    return report
