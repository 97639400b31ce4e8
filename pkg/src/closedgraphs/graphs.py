"""Simple undirected graphs, vertex labellings, and closedness tests.

Vertices are arbitrary strings; labels are distinct positive integers.
A graph is *closed with respect to a labelling* when, for every vertex,
the neighbours with smaller labels form a clique and the neighbours with
larger labels form a clique.  Graphs here never have loops, multi-edges,
or isolated vertices.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from itertools import combinations
from typing import NamedTuple, Optional

from .errors import EdgeListParseError, LabellingError, UnknownVertexError


class Graph:
    """Immutable simple graph built from its edge set.

    The vertex set is the union of all edge endpoints, so isolated vertices
    are unrepresentable.  Passing an explicit vertex set that contains a
    vertex with no incident edge is rejected.
    """

    __slots__ = ("vertices", "edges", "_adj")

    def __init__(self, edges: Iterable[tuple[str, str]], vertices: Iterable[str] | None = None):
        edge_set = set()
        for u, v in edges:
            u, v = str(u), str(v)
            if u == v:
                raise EdgeListParseError(f"loop edge on vertex {u!r}")
            edge_set.add(frozenset((u, v)))
        if not edge_set:
            raise EdgeListParseError("graph has no edges (isolated-vertex-free graphs need at least one)")
        covered = set()
        for e in edge_set:
            covered.update(e)
        if vertices is not None:
            declared = {str(v) for v in vertices}
            isolated = declared - covered
            if isolated:
                raise EdgeListParseError(f"isolated vertices rejected: {sorted(isolated)}")
            if covered - declared:
                raise UnknownVertexError(f"edges mention undeclared vertices: {sorted(covered - declared)}")
        adj: dict[str, set[str]] = {v: set() for v in covered}
        for e in edge_set:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "vertices", tuple(sorted(covered)))
        object.__setattr__(self, "edges", frozenset(edge_set))
        object.__setattr__(self, "_adj", {v: frozenset(nb) for v, nb in adj.items()})

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def neighbors(self, v: str) -> frozenset[str]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v!r}") from None

    def has_edge(self, u: str, v: str) -> bool:
        return v in self.neighbors(u)

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.edges == other.edges

    def __hash__(self) -> int:
        return hash(self.edges)

    def __repr__(self) -> str:
        pairs = sorted(tuple(sorted(e)) for e in self.edges)
        return f"Graph({pairs})"


def load_graph(text: str) -> Graph:
    """Parse an edge-list document: one "u v" pair per line.

    Lines starting with '#' and blank lines are ignored; duplicate edges
    collapse; a loop line or an empty edge set is an error.
    """
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = tokens
        if u == v:
            raise EdgeListParseError(f"line {lineno}: loop edge {u!r} {v!r}")
        edges.append((u, v))
    if not edges:
        raise EdgeListParseError("no edges found in input")
    return Graph(edges)


class Labelling(Mapping):
    """Injective map from vertex names to distinct positive integers.

    Pipeline-produced labellings always use exactly 1..n; `is_onto_range`
    reports whether that holds.  Closedness only depends on the relative
    order of labels, so gaps are tolerated by the comparison-based tests.
    """

    __slots__ = ("_map",)

    def __init__(self, mapping: Mapping[str, int]):
        m = {str(k): int(v) for k, v in mapping.items()}
        if not m:
            raise LabellingError("empty labelling")
        if any(v < 1 for v in m.values()):
            raise LabellingError("labels must be positive integers")
        if len(set(m.values())) != len(m):
            raise LabellingError("labels must be distinct")
        object.__setattr__(self, "_map", m)

    def __setattr__(self, name, value):
        raise AttributeError("Labelling is immutable")

    def __getitem__(self, v: str) -> int:
        try:
            return self._map[v]
        except KeyError:
            raise UnknownVertexError(f"vertex {v!r} has no label") from None

    def __iter__(self):
        return iter(self._map)

    def __len__(self) -> int:
        return len(self._map)

    @property
    def n(self) -> int:
        return len(self._map)

    @property
    def is_onto_range(self) -> bool:
        return set(self._map.values()) == set(range(1, self.n + 1))

    def inverse(self) -> dict[int, str]:
        return {v: k for k, v in self._map.items()}

    def by_label(self) -> list[str]:
        """Vertex names sorted by increasing label."""
        return sorted(self._map, key=self._map.__getitem__)

    @classmethod
    def from_vertex_order(cls, vertices: Iterable[str]) -> "Labelling":
        return cls({v: i for i, v in enumerate(vertices, start=1)})

    @classmethod
    def alphabetical(cls, vertices: Iterable[str]) -> "Labelling":
        return cls.from_vertex_order(sorted(vertices))

    def __repr__(self) -> str:
        inner = ", ".join(f"{v}={self._map[v]}" for v in self.by_label())
        return f"Labelling({inner})"


def _require_matching_labelling(g: Graph, lab: Labelling) -> None:
    if set(lab) != set(g.vertices):
        raise LabellingError("labelling domain does not match the vertex set")


class NeighborhoodSplit(NamedTuple):
    """Neighbourhood of a vertex split by label: below < vertex < above."""

    below: frozenset[str]
    above: frozenset[str]


def split_neighborhood(g: Graph, lab: Labelling, j: str) -> NeighborhoodSplit:
    """Partition N(j) into neighbours labelled below j and above j."""
    _require_matching_labelling(g, lab)
    lj = lab[j]
    nbrs = g.neighbors(j)
    below = frozenset(v for v in nbrs if lab[v] < lj)
    return NeighborhoodSplit(below=below, above=nbrs - below)


def is_clique(g: Graph, s: Iterable[str]) -> bool:
    """True when every pair of distinct members of s is an edge (vacuous for |s| <= 1)."""
    members = sorted({str(v) for v in s})
    for v in members:
        g.neighbors(v)  # raises UnknownVertexError for foreign vertices
    return all(g.has_edge(u, v) for u, v in combinations(members, 2))


class ClosednessWitness(NamedTuple):
    """A vertex with two same-side non-adjacent neighbours."""

    vertex: str
    pair: tuple[str, str]


def is_closed_wrt(g: Graph, lab: Labelling) -> tuple[bool, Optional[ClosednessWitness]]:
    """Decide closedness with respect to a labelling.

    Checks that both sides of every split neighbourhood are cliques.  On
    failure, returns a witness: a vertex together with two neighbours on
    the same side of it that are not adjacent.
    """
    _require_matching_labelling(g, lab)
    for j in lab.by_label():
        split = split_neighborhood(g, lab, j)
        for side in (split.below, split.above):
            members = sorted(side, key=lab.__getitem__)
            for a, b in combinations(members, 2):
                if not g.has_edge(a, b):
                    return False, ClosednessWitness(vertex=j, pair=(a, b))
    return True, None


def is_closed_wrt_pairs(g: Graph, lab: Labelling) -> bool:
    """Closedness via the edge-pair condition; independent of is_closed_wrt.

    For edges {i,j}, {k,l} written with i<j and k<l by label: sharing the
    smaller endpoint forces {j,l} to be an edge, sharing the larger endpoint
    forces {i,k} to be an edge.
    """
    _require_matching_labelling(g, lab)
    oriented = []
    for e in g.edges:
        u, v = tuple(e)
        if lab[u] > lab[v]:
            u, v = v, u
        oriented.append((u, v))
    for (i, j), (k, l) in combinations(oriented, 2):
        if i == k and j != l and not g.has_edge(j, l):
            return False
        if j == l and i != k and not g.has_edge(i, k):
            return False
    return True


def find_induced_claw(g: Graph) -> Optional[tuple[str, tuple[str, str, str]]]:
    """Find a vertex with three pairwise non-adjacent neighbours, if any.

    Returns (center, leaves) for the first claw in deterministic scan order,
    or None; absence certifies claw-freeness.
    """
    for c in g.vertices:
        nbrs = sorted(g.neighbors(c))
        if len(nbrs) < 3:
            continue
        for a, b, d in combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, d) or g.has_edge(b, d)):
                return c, (a, b, d)
    return None


def connected_components(g: Graph) -> list[Graph]:
    """Induced subgraphs on the reachability classes, sorted by smallest vertex."""
    seen: set[str] = set()
    comps = []
    for start in g.vertices:
        if start in seen:
            continue
        stack = [start]
        comp = {start}
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comp_edges = [tuple(sorted(e)) for e in g.edges if e <= comp]
        comps.append(Graph(comp_edges))
    return sorted(comps, key=lambda c: c.vertices[0])
