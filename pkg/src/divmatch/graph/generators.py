"""
Instance generators.

Deterministic constructions (cycles, paths, complete graphs, the Petersen
graph) and seeded random families (G(n, p), random bipartite, random
cubic). Random families draw from ``numpy.random.default_rng(seed)`` so
every instance is reproducible from its seed.
"""

from itertools import combinations
from typing import Callable, Dict, List, Optional, Set, Tuple

import numpy as np

from divmatch.errors import UsageError
from divmatch.graph.core import Edge, Graph
from divmatch.logging import get_logger


logger = get_logger(__name__)

MAX_CUBIC_ATTEMPTS = 10000


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise UsageError(message)


def cycle(n: int) -> Graph:
    """The cycle C_n (n >= 3)."""
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """The path P_n on n >= 1 vertices."""
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    """The complete graph K_n, edges in lexicographic order."""
    _require(n >= 0, f"complete needs n >= 0, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts ``0..a-1`` and ``a..a+b-1``."""
    _require(a >= 0 and b >= 0, f"complete_bipartite needs a, b >= 0, got {a}, {b}")
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def petersen() -> Graph:
    """The Petersen graph: outer 5-cycle, spokes, inner pentagram."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def gnp(n: int, p: float, seed: Optional[int] = None) -> Graph:
    """
    Erdős–Rényi random graph G(n, p).

    Args:
        n: Number of vertices.
        p: Independent edge probability in [0, 1].
        seed: Seed for the generator.

    Returns:
        The sampled graph, edges in lexicographic order.
    """
    _require(n >= 0, f"gnp needs n >= 0, got {n}")
    _require(0.0 <= p <= 1.0, f"gnp needs p in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    pairs = list(combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return Graph.from_edges(n, [pair for pair, kept in zip(pairs, keep) if kept])


def random_bipartite(a: int, b: int, p: float, seed: Optional[int] = None) -> Graph:
    """
    Random bipartite graph with parts ``0..a-1`` and ``a..a+b-1``.

    Every cross pair is an edge independently with probability ``p``.
    """
    _require(a >= 0 and b >= 0, f"bipartite needs a, b >= 0, got {a}, {b}")
    _require(0.0 <= p <= 1.0, f"bipartite needs p in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    pairs = [(u, a + v) for u in range(a) for v in range(b)]
    keep = rng.random(len(pairs)) < p
    return Graph.from_edges(a + b, [pair for pair, kept in zip(pairs, keep) if kept])


def _pair_stubs(n: int, degree: int, rng: np.random.Generator) -> Optional[Set[Edge]]:
    stubs = np.repeat(np.arange(n), degree)
    rng.shuffle(stubs)
    edges: Set[Edge] = set()
    for s1, s2 in zip(stubs[0::2], stubs[1::2]):
        s1, s2 = int(min(s1, s2)), int(max(s1, s2))
        if s1 == s2 or (s1, s2) in edges:
            return None
        edges.add((s1, s2))
    return edges


def cubic(n: int, seed: Optional[int] = None) -> Graph:
    """
    Random simple 3-regular graph by configuration-model pairing.

    Stubs are paired uniformly at random and the pairing is rejected until
    it has no loop and no multi-edge.

    Args:
        n: Number of vertices, even and at least 4.
        seed: Seed for the generator.

    Returns:
        A simple cubic graph with edges in lexicographic order.

    Raises:
        UsageError: If n is odd or below 4, or no simple pairing was found.
    """
    _require(n >= 4 and n % 2 == 0, f"cubic needs even n >= 4, got {n}")
    rng = np.random.default_rng(seed)
    for attempt in range(1, MAX_CUBIC_ATTEMPTS + 1):
        edges = _pair_stubs(n, 3, rng)
        if edges is not None:
            logger.debug(f"Cubic pairing accepted after {attempt} attempts")
            return Graph.from_edges(n, sorted(edges))
    raise UsageError(f"no simple cubic pairing found in {MAX_CUBIC_ATTEMPTS} attempts")


GeneratorSpec = Tuple[Callable[..., Graph], List[str], bool]

FAMILIES: Dict[str, GeneratorSpec] = {
    "gnp": (gnp, ["n", "p"], True),
    "bipartite": (random_bipartite, ["a", "b", "p"], True),
    "cycle": (cycle, ["n"], False),
    "path": (path, ["n"], False),
    "complete": (complete, ["n"], False),
    "complete_bipartite": (complete_bipartite, ["a", "b"], False),
    "cubic": (cubic, ["n"], True),
    "petersen": (petersen, [], False),
}


def generate(family: str, params: Dict[str, object], seed: Optional[int] = None) -> Graph:
    """
    Generate an instance of a named family.

    Args:
        family: One of the keys of ``FAMILIES``.
        params: Family parameters by name (``n``, ``p``, ``a``, ``b``).
        seed: Seed for the random families; ignored by the deterministic ones.

    Returns:
        The generated graph.

    Raises:
        UsageError: On an unknown family or missing/invalid parameters.
    """
    if family not in FAMILIES:
        raise UsageError(f"unknown family '{family}' (choose from {', '.join(sorted(FAMILIES))})")
    builder, required, seeded = FAMILIES[family]
    missing = [name for name in required if params.get(name) is None]
    if missing:
        raise UsageError(f"family '{family}' needs parameter(s): {', '.join('--' + name for name in missing)}")
    kwargs = {name: params[name] for name in required}
    if seeded:
        kwargs["seed"] = seed
    return builder(**kwargs)
