"""Undirected graphs, DIMACS-style parsing, and brute-force clique references.

Everything in here is classical and exact; the brute-force enumerators are the
ground truth that every quantum search result is checked against.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

# Brute-force enumeration walks all C(n, k) subsets; keep it desk-scale.
BRUTE_FORCE_MAX_VERTICES = 24


class GraphFormatError(ValueError):
    """Raised for malformed graph files."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Edges are stored as sorted (u, v) pairs with u < v; no self-loops,
    no duplicates.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        """Edges in lexicographic order; the canonical iteration order."""
        return sorted(self.edges)


def graph_from_edges(n: int, edges) -> Graph:
    """Build a Graph from any iterable of (u, v) pairs (normalised, deduped)."""
    norm = frozenset((min(u, v), max(u, v)) for u, v in edges)
    return Graph(n=n, edges=norm)


def parse_graph(text: str) -> Graph:
    """Parse DIMACS-like graph text: `p edge <n> <m>` then m `e <u> <v>` lines.

    File vertices are 1-indexed and mapped to 0-indexed. Comment lines start
    with `c` and may appear anywhere. Duplicate edges and self-loops are
    rejected, as are edge counts that disagree with the header.
    """
    n = None
    declared_m = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphFormatError(f"line {lineno}: malformed header {line!r}")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed header {line!r}") from None
            if n < 0 or declared_m < 0:
                raise GraphFormatError(f"line {lineno}: negative counts in header")
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: malformed edge {line!r}")
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed edge {line!r}") from None
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop on vertex {u + 1}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"line {lineno}: endpoint out of range")
            e = (min(u, v), max(u, v))
            if e in edges:
                raise GraphFormatError(f"line {lineno}: duplicate edge {u + 1} {v + 1}")
            edges.add(e)
        else:
            raise GraphFormatError(f"line {lineno}: unrecognised line {line!r}")
    if n is None:
        raise GraphFormatError("missing `p edge` header")
    if len(edges) != declared_m:
        raise GraphFormatError(f"header declares {declared_m} edges, file has {len(edges)}")
    return Graph(n=n, edges=frozenset(edges))


def vertices_to_bits(n: int, members) -> str:
    """Encode a vertex set as a length-n binary string, vertex 0 leftmost."""
    s = set(members)
    return "".join("1" if v in s else "0" for v in range(n))


def bits_to_vertices(bits: str) -> frozenset[int]:
    """Decode a binary string (vertex 0 leftmost) into a vertex set."""
    return frozenset(i for i, b in enumerate(bits) if b == "1")


def induced_edge_count(g: Graph, members) -> int:
    s = set(members)
    return sum(1 for u, v in g.edges if u in s and v in s)


def is_clique(g: Graph, members) -> bool:
    """True iff every unordered pair in `members` is an edge of g.

    Empty and singleton sets are vacuously cliques.
    """
    s = sorted(set(members))
    if s and (s[0] < 0 or s[-1] >= g.n):
        raise ValueError("vertex out of range")
    return all(g.has_edge(u, v) for u, v in combinations(s, 2))


def _check_brute_force_size(g: Graph):
    if g.n > BRUTE_FORCE_MAX_VERTICES:
        raise ValueError(
            f"brute force capped at n <= {BRUTE_FORCE_MAX_VERTICES}, got n={g.n}"
        )


def enumerate_k_cliques(g: Graph, k: int) -> list[frozenset[int]]:
    """All k-vertex cliques of g, in lexicographic order of sorted members.

    The length of this list is the marked-state count M used for Grover
    iteration planning.
    """
    if not (0 <= k <= g.n):
        raise ValueError(f"k={k} out of range for n={g.n}")
    _check_brute_force_size(g)
    return [frozenset(c) for c in combinations(range(g.n), k) if is_clique(g, c)]


def max_clique_bruteforce(g: Graph) -> frozenset[int]:
    """A maximum clique of g; ties broken lexicographically smallest."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    _check_brute_force_size(g)
    for k in range(g.n, 0, -1):
        for c in combinations(range(g.n), k):
            if is_clique(g, c):
                return frozenset(c)
    raise AssertionError("unreachable: singletons are always cliques")


def max_count_for_clique(k: int) -> int:
    """Edge total a k-clique must reach: C(k, 2)."""
    return comb(k, 2)
