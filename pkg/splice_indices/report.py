"""JSON documents printed by the command line."""
import json
from typing import Dict, Optional, Sequence

from splice_indices.graph import Graph
from splice_indices.indices import INDEX_NAMES, IndexReport
from splice_indices.splice import Variant
from splice_indices.version import VERSION


def comparison_dict(direct: IndexReport, formula: IndexReport, variant: Variant,
                    names: Sequence[str] = INDEX_NAMES) -> Dict:
    """Direct and closed-form values side by side."""
    direct_values, formula_values = direct.values(), formula.values()
    return {name: {'direct': direct_values[name],
                   'formula': formula_values[name],
                   'variant': variant.value,
                   'match': direct_values[name] == formula_values[name]}
            for name in names}


def index_dict(g: Graph, report: IndexReport, names: Sequence[str] = INDEX_NAMES,
               comparison: Optional[Dict] = None) -> Dict:
    """The indices of a graph, keys in a stable order."""
    values = report.values()
    data = {
        'graph': {'n': g.n, 'm': g.m},
        'indices': {name: values[name] for name in names},
        'method': report.method.value,
        'counters': {'bfs_calls': report.counters.bfs_calls},
    }
    if comparison is not None:
        data['comparison'] = comparison
    data['version'] = VERSION
    return data


def dumps(data: Dict) -> str:
    """Serializes a report, keeping the key order."""
    return json.dumps(data, indent=2)
