"""Clique complexes, leaf orders, intersection tables, and the closed-complex test.

A complex is stored by its facet list.  A *leaf* is a facet F with a branch
B (another facet whose intersection with F contains every other facet's
intersection with F).  A *linear quasi-tree* order lists the facets so that
each one is a leaf of the residual complex made of itself and its
successors, with the next facet as its only branch.  A linear quasi-tree is
*closed* when its pairwise intersection cells satisfy the incomparability
and covering conditions checked by `is_closed_complex`.
"""

from __future__ import annotations

from itertools import combinations
from typing import NamedTuple, Optional

from .errors import InternalInvariantError, UnknownVertexError
from .graphs import Graph, Labelling

LINEAR_QUASI_TREE = "linear-quasi-tree"
UNORDERED = "unordered"


class SimplicialComplex:
    """A facet list over named vertices, kept in canonical sorted order.

    Facets must be nonempty and form an antichain (no facet contained in
    another); duplicates collapse.  The vertex set is the union of facets.
    """

    __slots__ = ("facets", "vertices")

    def __init__(self, facets):
        fs = sorted({frozenset(str(v) for v in f) for f in facets}, key=lambda f: tuple(sorted(f)))
        if not fs:
            raise ValueError("a complex needs at least one facet")
        if any(not f for f in fs):
            raise ValueError("facets must be nonempty")
        for a, b in combinations(fs, 2):
            if a <= b or b <= a:
                raise ValueError(f"facet {sorted(a)} is contained in {sorted(b)}")
        verts: set[str] = set()
        for f in fs:
            verts |= f
        object.__setattr__(self, "facets", tuple(fs))
        object.__setattr__(self, "vertices", tuple(sorted(verts)))

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __repr__(self) -> str:
        return "SimplicialComplex(%s)" % ", ".join("{%s}" % ",".join(sorted(f)) for f in self.facets)

    def underlying_graph(self) -> Graph:
        """The graph whose maximal cliques are the facets (all within-facet pairs)."""
        edges = []
        for f in self.facets:
            edges.extend(combinations(sorted(f), 2))
        return Graph(edges)

    def to_json_dict(self, order: Optional[tuple[int, ...]] = None) -> dict:
        return {
            "facets": [sorted(f) for f in self.facets],
            "order": list(order) if order is not None else None,
        }


def complex_from_json(doc: dict) -> tuple[SimplicialComplex, Optional["OrderedComplex"]]:
    """Load {"facets": [...], "order": [...] | null}; order indices refer to the given list."""
    raw = [frozenset(str(v) for v in f) for f in doc["facets"]]
    sc = SimplicialComplex(raw)
    order = doc.get("order")
    if order is None:
        return sc, None
    canonical = [sc.facets.index(raw[i]) for i in order]
    return sc, OrderedComplex(sc, tuple(canonical), LINEAR_QUASI_TREE)


def _branches_within(inter, live, f) -> list[int]:
    """Indices of branches of facet f among the facet indices in `live`."""
    out = []
    for b in sorted(live):
        if b == f:
            continue
        if all(inter[h][f] <= inter[b][f] for h in live if h != f and h != b):
            out.append(b)
    return out


def _pairwise_intersections(facets):
    q = len(facets)
    return [[facets[i] & facets[j] for j in range(q)] for i in range(q)]


def _follow_leaf_chain(inter, q, start) -> Optional[list[int]]:
    """Forced order from a starting leaf: each next facet is the unique branch."""
    order = [start]
    live = set(range(q))
    cur = start
    while len(live) > 1:
        branches = _branches_within(inter, live, cur)
        if len(branches) != 1:
            return None
        nxt = branches[0]
        live.remove(cur)
        order.append(nxt)
        cur = nxt
    return order


class OrderedComplex:
    """A complex with an explicit facet order, optionally a linear quasi-tree.

    `order` holds 0-based positions into `base.facets`.  Construction with
    the linear-quasi-tree tag re-verifies the leaf-order conditions.
    """

    __slots__ = ("base", "order", "order_kind")

    def __init__(self, base: SimplicialComplex, order: tuple[int, ...], order_kind: str = LINEAR_QUASI_TREE):
        order = tuple(int(i) for i in order)
        if sorted(order) != list(range(len(base.facets))):
            raise ValueError("order must be a permutation of the facet positions")
        if order_kind not in (LINEAR_QUASI_TREE, UNORDERED):
            raise ValueError(f"unknown order kind {order_kind!r}")
        if order_kind == LINEAR_QUASI_TREE:
            facets = [base.facets[i] for i in order]
            inter = _pairwise_intersections(facets)
            chain = _follow_leaf_chain(inter, len(facets), 0)
            if chain != list(range(len(facets))):
                raise ValueError("order does not satisfy the linear quasi-tree conditions")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "order_kind", order_kind)

    def __setattr__(self, name, value):
        raise AttributeError("OrderedComplex is immutable")

    @property
    def facets(self) -> tuple[frozenset[str], ...]:
        return tuple(self.base.facets[i] for i in self.order)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.base.vertices

    def to_json_dict(self) -> dict:
        return self.base.to_json_dict(order=self.order)

    def __repr__(self) -> str:
        return f"OrderedComplex(order={list(self.order)}, kind={self.order_kind})"


def clique_complex(g: Graph) -> SimplicialComplex:
    """Maximal cliques of g (Bron–Kerbosch with pivoting), as a complex."""
    adj = {v: g.neighbors(v) for v in g.vertices}
    cliques: list[frozenset[str]] = []

    def expand(r: frozenset[str], p: set[str], x: set[str]) -> None:
        if not p and not x:
            cliques.append(r)
            return
        pivot = max(sorted(p | x), key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    expand(frozenset(), set(g.vertices), set())
    return SimplicialComplex(cliques)


def leaf_branches(c: SimplicialComplex, f: int) -> frozenset[int]:
    """Branch positions for facet f within the whole complex.

    An empty result means f is not a leaf, except in a one-facet complex,
    where the facet is a leaf by convention (see `is_leaf`).
    """
    if not 0 <= f < len(c.facets):
        raise IndexError(f"facet index {f} out of range")
    inter = _pairwise_intersections(c.facets)
    return frozenset(_branches_within(inter, set(range(len(c.facets))), f))


def is_leaf(c: SimplicialComplex, f: int) -> bool:
    return len(c.facets) == 1 or bool(leaf_branches(c, f))


def linear_quasi_tree_order(c: SimplicialComplex) -> Optional[OrderedComplex]:
    """Search for a linear quasi-tree order, or None when no such order exists.

    Starting facets are tried in canonical index order; from a start the
    rest of the order is forced (each next facet is the previous facet's
    unique branch in the residual complex), so the first completed chain is
    returned.
    """
    q = len(c.facets)
    if q == 1:
        return OrderedComplex(c, (0,), LINEAR_QUASI_TREE)
    inter = _pairwise_intersections(c.facets)
    for start in range(q):
        chain = _follow_leaf_chain(inter, q, start)
        if chain is not None:
            return OrderedComplex(c, tuple(chain), LINEAR_QUASI_TREE)
    return None


class IntersectionTable:
    """Cells F(i,j) = F_i ∩ F_j for an ordered facet list, 1-based indices.

    Out-of-range cells (i < 1 or j > r) are empty by convention.  For a
    linear quasi-tree order the pairwise intersection always equals the
    intersection of the whole chain F_i ∩ ... ∩ F_j; this is re-verified on
    construction and a failure means the order was not a valid linear
    quasi-tree order.
    """

    __slots__ = ("facets", "r", "_cells")

    def __init__(self, facets: tuple[frozenset[str], ...]):
        r = len(facets)
        cells = {}
        for i in range(1, r + 1):
            running = facets[i - 1]
            cells[(i, i)] = running
            for j in range(i + 1, r + 1):
                running = running & facets[j - 1]
                pairwise = facets[i - 1] & facets[j - 1]
                if pairwise != running:
                    raise InternalInvariantError(
                        f"chain intersection differs from pairwise at ({i},{j}); "
                        "the facet order is not a linear quasi-tree order"
                    )
                cells[(i, j)] = pairwise
        object.__setattr__(self, "facets", tuple(facets))
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "_cells", cells)

    def __setattr__(self, name, value):
        raise AttributeError("IntersectionTable is immutable")

    def cell(self, i: int, j: int) -> frozenset[str]:
        if i < 1 or j > self.r:
            return frozenset()
        if i > j:
            raise ValueError(f"cell ({i},{j}) undefined: need i <= j")
        return self._cells[(i, j)]

    @property
    def vertices(self) -> tuple[str, ...]:
        verts: set[str] = set()
        for f in self.facets:
            verts |= f
        return tuple(sorted(verts))


def intersection_table(oc: OrderedComplex) -> IntersectionTable:
    if oc.order_kind != LINEAR_QUASI_TREE:
        raise ValueError("intersection table requires a linear quasi-tree order")
    return IntersectionTable(oc.facets)


class ComplexViolation(NamedTuple):
    """Witness for a failed closed-complex condition.

    condition is "incomparability" with indices ((i,j),(k,l)), or
    "covering" with indices (i,d).
    """

    condition: str
    indices: tuple

    def describe(self) -> str:
        if self.condition == "covering":
            i, d = self.indices
            return f"covering fails at i={i}, d={d}"
        (i, j), (k, l) = self.indices
        return f"incomparability fails for cells ({i},{j}) and ({k},{l})"


def _closed_conditions(t: IntersectionTable) -> tuple[bool, Optional[ComplexViolation]]:
    r = t.r
    nonempty = [(i, j) for i in range(1, r + 1) for j in range(i, r + 1) if t.cell(i, j)]
    for (i, j) in nonempty:
        a = t.cell(i, j)
        for (k, l) in nonempty:
            if i < k and j < l:
                b = t.cell(k, l)
                if a <= b or b <= a:
                    return False, ComplexViolation("incomparability", ((i, j), (k, l)))
    for i in range(1, r + 1):
        for d in range(1, r - i):
            if not t.cell(i, i + d + 1):
                continue
            expected = t.cell(i, i + d) | t.cell(i + 1, i + d + 1)
            if t.cell(i + 1, i + d) != expected:
                return False, ComplexViolation("covering", (i, d))
    return True, None


def is_closed_complex(oc: OrderedComplex) -> tuple[bool, Optional[ComplexViolation]]:
    """Check incomparability and covering on the intersection cells.

    Incomparability: cells F(i,j) and F(k,l) with i<k and j<l, both
    nonempty, must not be comparable under inclusion.  Covering: whenever
    F(i,i+d+1) is nonempty, F(i+1,i+d) = F(i,i+d) ∪ F(i+1,i+d+1).
    """
    return _closed_conditions(intersection_table(oc))


def facets_are_intervals(c: SimplicialComplex, lab: Labelling) -> bool:
    """True when every facet's label set is a contiguous run of integers."""
    if set(lab) != set(c.vertices):
        raise UnknownVertexError("labelling domain does not match the complex vertex set")
    for f in c.facets:
        labels = sorted(lab[v] for v in f)
        if labels[-1] - labels[0] != len(labels) - 1:
            return False
    return True
