"""Orienting edges by a term order and recovering a compatible labelling.

Each edge {u,v} becomes the arc (u,v) exactly when x_{lab(u)}*y_{lab(v)}
is the leading monomial of the edge generator under the chosen order.
Only the degree-2 generators matter: the multigrading pins every degree-2
element of the ideal to a generator, so the degree-2 slice of the initial
ideal is read off the generator leads.  The resulting digraph is always
acyclic, and any topological labelling of it is compatible with the
orientation.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Optional

from .errors import LabellingError
from .graphs import Graph, Labelling
from .groebner import TermOrder, monomial


class OrientedGraph:
    """A digraph with exactly one arc per underlying edge."""

    __slots__ = ("vertices", "arcs", "_succ")

    def __init__(self, vertices: Iterable[str], arcs: Iterable[tuple[str, str]]):
        vertices = tuple(str(v) for v in vertices)
        arc_set = set()
        vset = set(vertices)
        for u, v in arcs:
            u, v = str(u), str(v)
            if u not in vset or v not in vset:
                raise ValueError(f"arc ({u},{v}) mentions unknown vertices")
            if u == v:
                raise ValueError(f"loop arc on {u}")
            if (v, u) in arc_set:
                raise ValueError(f"both orientations of {{{u},{v}}} present")
            arc_set.add((u, v))
        succ: dict[str, set[str]] = {v: set() for v in vertices}
        for u, v in arc_set:
            succ[u].add(v)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "arcs", frozenset(arc_set))
        object.__setattr__(self, "_succ", {v: frozenset(s) for v, s in succ.items()})

    def __setattr__(self, name, value):
        raise AttributeError("OrientedGraph is immutable")

    def successors(self, v: str) -> frozenset[str]:
        return self._succ[v]

    def __repr__(self) -> str:
        return f"OrientedGraph(arcs={sorted(self.arcs)})"


def orient(g: Graph, lab: Labelling, order: TermOrder) -> OrientedGraph:
    """Direct each edge toward the trailing variable pair of its generator.

    The vertex tuple of the result is sorted by label, so downstream
    tie-breaking ("smallest original label first") is positional.
    """
    if set(lab) != set(g.vertices):
        raise LabellingError("labelling domain does not match the vertex set")
    if not lab.is_onto_range:
        raise LabellingError("orientation needs labels exactly 1..n")
    n = g.n
    arcs = []
    for e in g.edges:
        u, v = tuple(e)
        m_uv = monomial(n, xs=[lab[u]], ys=[lab[v]])
        m_vu = monomial(n, xs=[lab[v]], ys=[lab[u]])
        arcs.append((u, v) if order.compare(m_uv, m_vu) > 0 else (v, u))
    return OrientedGraph(lab.by_label(), arcs)


def topological_labelling(og: OrientedGraph) -> tuple[Optional[Labelling], Optional[tuple[str, ...]]]:
    """Labelling increasing along every arc, or a directed-cycle witness.

    Kahn's algorithm, always removing the source earliest in the vertex
    tuple.  Returns (labelling, None) when acyclic and (None, cycle)
    otherwise.
    """
    pos = {v: i for i, v in enumerate(og.vertices)}
    indeg = {v: 0 for v in og.vertices}
    for _, v in og.arcs:
        indeg[v] += 1
    ready = [pos[v] for v in og.vertices if indeg[v] == 0]
    heapq.heapify(ready)
    out = []
    while ready:
        v = og.vertices[heapq.heappop(ready)]
        out.append(v)
        for w in sorted(og.successors(v)):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, pos[w])
    if len(out) < len(og.vertices):
        return None, find_directed_cycle(og)
    return Labelling({v: i + 1 for i, v in enumerate(out)}), None


def find_directed_cycle(og: OrientedGraph) -> Optional[tuple[str, ...]]:
    """Depth-first cycle detection, independent of the Kahn route.

    Returns the vertices of a directed cycle in order, or None.
    """
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {v: WHITE for v in og.vertices}
    parent: dict[str, Optional[str]] = {}

    for root in og.vertices:
        if color[root] != WHITE:
            continue
        color[root] = GRAY
        parent[root] = None
        stack = [(root, iter(sorted(og.successors(root))))]
        while stack:
            v, it = stack[-1]
            w = next(it, None)
            if w is None:
                color[v] = BLACK
                stack.pop()
                continue
            if color[w] == GRAY:
                # back arc v -> w closes the cycle w .. v
                cycle = [v]
                cur = v
                while cur != w:
                    cur = parent[cur]
                    cycle.append(cur)
                cycle.reverse()
                return tuple(cycle)
            if color[w] == WHITE:
                color[w] = GRAY
                parent[w] = v
                stack.append((w, iter(sorted(og.successors(w)))))
    return None


def orientation_to_json_dict(og: OrientedGraph) -> dict:
    lab, _cycle = topological_labelling(og)
    return {
        "arcs": [list(a) for a in sorted(og.arcs)],
        "acyclic": lab is not None,
        "topological_labels": dict(sorted(lab.items())) if lab is not None else None,
    }
