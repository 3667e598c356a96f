"""
Edge-list reading and writing.

Format: one edge per line as two whitespace-separated vertex tokens, ``#``
comment lines, and an optional header ``n <vertex_count>`` declaring
isolated vertices. Files made only of two-token lines of non-negative
integers keep those integers as vertex indices when a header is present or
they are exactly 0..n-1; other integer files (1-based, sparse) are
relabelled in ascending numeric order and keep the integers as names.
Anything else (a name, or a single-token line declaring a vertex) switches
the whole file to first-appearance relabelling.
"""

import os
from typing import Dict, Iterable, List, Optional, Tuple

from divmatch.errors import GraphFormatError, UsageError
from divmatch.graph.core import Graph
from divmatch.logging import get_logger


logger = get_logger(__name__)


def _tokenize(text: str) -> Tuple[Optional[int], List[Tuple[int, List[str]]]]:
    header = None
    records = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n" and len(tokens) == 2 and not records and header is None:
            try:
                header = int(tokens[1])
            except ValueError:
                raise GraphFormatError(f"invalid vertex count '{tokens[1]}'", line_number)
            if header < 0:
                raise GraphFormatError("vertex count must be non-negative", line_number)
            continue
        if len(tokens) > 2:
            raise GraphFormatError(f"expected at most two tokens, got {len(tokens)}", line_number)
        records.append((line_number, tokens))
    return header, records


def parse_edge_list(text: str) -> Graph:
    """
    Parse a graph from edge-list text.

    Args:
        text: The file contents.

    Returns:
        The parsed graph.

    Raises:
        GraphFormatError: On malformed lines, self-loops, duplicate edges or
            a header smaller than the number of vertices used.
    """
    header, records = _tokenize(text)
    numeric = all(len(tokens) == 2 and all(token.isdigit() for token in tokens) for _, tokens in records)

    index: Dict[str, int] = {}
    names: List[str] = []

    if numeric and header is None:
        values = sorted({int(token) for _, tokens in records for token in tokens})
        if values != list(range(len(values))):
            # Not 0..n-1: relabel in ascending numeric order, keep the integers as names.
            for value in values:
                index[str(value)] = len(names)
                names.append(str(value))
            records = [(line_number, [str(int(token)) for token in tokens]) for line_number, tokens in records]
            numeric = False

    def vertex_of(token: str, line_number: int) -> int:
        if numeric:
            vertex = int(token)
            if header is not None and vertex >= header:
                raise GraphFormatError(f"vertex {vertex} exceeds declared count {header}", line_number)
            return vertex
        if token not in index:
            index[token] = len(names)
            names.append(token)
        return index[token]

    edges = []
    seen = {}
    for line_number, tokens in records:
        if len(tokens) == 1:
            vertex_of(tokens[0], line_number)
            continue
        u, v = (vertex_of(token, line_number) for token in tokens)
        if u == v:
            raise GraphFormatError(f"self-loop at '{tokens[0]}'", line_number)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {tokens[0]} {tokens[1]} (first seen on line {seen[key]})",
                                   line_number)
        seen[key] = line_number
        edges.append((u, v))

    if numeric:
        used = 1 + max((vertex for edge in edges for vertex in edge), default=-1)
        vertex_count = header if header is not None else used
        return Graph.from_edges(vertex_count, edges)

    if header is not None and header < len(names):
        raise GraphFormatError(f"header declares {header} vertices but {len(names)} are named")
    vertex_count = header if header is not None else len(names)
    taken = set(names)
    for vertex in range(len(names), vertex_count):
        name = f"_v{vertex}"
        if name in taken:
            raise GraphFormatError(f"cannot name padding vertex {vertex}: '{name}' already used")
        names.append(name)
    logger.debug(f"Parsed named graph: n={vertex_count}, m={len(edges)}")
    return Graph.from_edges(vertex_count, edges, names)


def _has_identity_names(graph: Graph) -> bool:
    return all(name == str(vertex) for vertex, name in enumerate(graph.names))


def serialize_edge_list(graph: Graph, comments: Iterable[str] = ()) -> str:
    """
    Render a graph in the canonical edge-list format.

    Args:
        graph: The graph to write.
        comments: Lines emitted as ``# ...`` comments after the header.

    Returns:
        The file contents, newline-terminated.
    """
    lines = [f"n {graph.vertex_count}"]
    lines.extend(f"# {comment}" for comment in comments)
    names = graph.names
    if not _has_identity_names(graph):
        for name in names:
            if not name or any(ch.isspace() for ch in name) or name.startswith("#"):
                raise UsageError(f"vertex name {name!r} cannot be written as a token")
        # Declaration block fixes vertex indices on re-parse.
        lines.extend(names)
    lines.extend(f"{names[u]} {names[v]}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    """
    Read a graph from an edge-list file.

    Raises:
        FileNotFoundError: If the file does not exist.
        GraphFormatError: If the contents cannot be parsed.
    """
    with open(path, "r") as f:
        return parse_edge_list(f.read())


def write_graph(graph: Graph, path: str, comments: Iterable[str] = ()) -> None:
    """Write a graph to an edge-list file, creating parent directories."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w") as f:
        f.write(serialize_edge_list(graph, comments))
