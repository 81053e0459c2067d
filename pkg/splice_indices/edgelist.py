"""Reading and writing graph files.

The edge-list format is a header line ``n m`` followed by ``m`` lines ``u v``. Blank lines and
lines starting with ``#`` are ignored. Vertex ids are 0-based unless ``one_based`` is set.
Files in the graph6 format hold one graph on their first line, decoded with networkx.
"""
from pathlib import Path
from typing import List, Tuple, Union

from splice_indices.exceptions import EdgeListParseError
from splice_indices.graph import Graph, build_graph

FORMATS = ('edgelist', 'graph6')
GRAPH6_HEADER = b'>>graph6<<'

PathLike = Union[str, Path]


def _significant_lines(text: str) -> List[Tuple[int, List[str]]]:
    return [(lineno, line.split())
            for lineno, line in enumerate(text.splitlines(), start=1)
            if line.strip() and not line.lstrip().startswith('#')]


def _int_pair(lineno: int, tokens: List[str]) -> Tuple[int, int]:
    if len(tokens) != 2:
        raise EdgeListParseError(f'Line {lineno}: expected 2 integers, got {len(tokens)} tokens')
    try:
        return int(tokens[0]), int(tokens[1])
    except ValueError as e:
        raise EdgeListParseError(f'Line {lineno}: not an integer: {" ".join(tokens)}') from e


def parse_edgelist(text: str, one_based: bool = False) -> Graph:
    """Parses the edge-list format.

    Raises:
        EdgeListParseError: if the text is malformed
        GraphValidationError: if it does not describe a simple connected graph
    """
    lines = _significant_lines(text)
    if not lines:
        raise EdgeListParseError('Missing "n m" header line')
    n, m = _int_pair(*lines[0])
    if m < 0:
        raise EdgeListParseError(f'Line {lines[0][0]}: negative edge count {m}')
    body = lines[1:]
    if len(body) != m:
        raise EdgeListParseError(f'The header announces {m} edges but {len(body)} were found')
    offset = 1 if one_based else 0
    edges = []
    for lineno, tokens in body:
        u, v = _int_pair(lineno, tokens)
        edges.append((u - offset, v - offset))
    return build_graph(n, edges)


def read_edgelist(path: PathLike, one_based: bool = False) -> Graph:
    """Reads an edge-list file.

    Raises:
        EdgeListParseError: if the file is not UTF-8 text or is malformed
    """
    try:
        text = Path(path).read_text(encoding='utf-8')
    except UnicodeDecodeError as e:
        raise EdgeListParseError(f'{path} is not UTF-8 text: {e}') from e
    return parse_edgelist(text, one_based)


def serialize_edgelist(g: Graph) -> str:
    """Returns g in the 0-based edge-list format, edges in canonical order."""
    lines = [f'{g.n} {g.m}'] + [f'{u} {v}' for u, v in g.edges.tolist()]
    return '\n'.join(lines) + '\n'


def write_edgelist(g: Graph, path: PathLike):
    """Writes g to an edge-list file."""
    Path(path).write_text(serialize_edgelist(g), encoding='utf-8')


def parse_graph6(data: bytes) -> Graph:
    """Decodes the first graph of graph6 data.

    Raises:
        EdgeListParseError: if the data is not valid graph6
    """
    import networkx as nx  # pylint: disable=import-outside-toplevel
    lines = data.strip().splitlines()
    if not lines:
        raise EdgeListParseError('Empty graph6 data')
    line = lines[0].strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    try:
        graph = nx.from_graph6_bytes(line)
    except (nx.NetworkXError, ValueError) as e:
        raise EdgeListParseError(f'Invalid graph6 data: {e}') from e
    return build_graph(graph.number_of_nodes(), graph.edges())


def read_graph6(path: PathLike) -> Graph:
    """Reads a graph6 file."""
    return parse_graph6(Path(path).read_bytes())


def load_graph(path: PathLike, fmt: str = 'edgelist', one_based: bool = False) -> Graph:
    """Reads a graph file in one of FORMATS."""
    if fmt == 'graph6':
        return read_graph6(path)
    if fmt == 'edgelist':
        return read_edgelist(path, one_based)
    raise ValueError(f'Unknown graph format {fmt!r}, expected one of {FORMATS}')
