"""Constructing a closed labelling from a closed complex.

For a closed linear quasi-tree the nonempty intersection cells form a
staircase (the border chain); removing from each border cell the contents
of its upper neighbours leaves the residual blocks, which partition the
vertex set.  Reading the blocks in staircase order, and each block in name
order, yields a labelling under which the underlying graph is closed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .complexes import (
    ComplexViolation,
    IntersectionTable,
    OrderedComplex,
    SimplicialComplex,
    _closed_conditions,
    clique_complex,
    intersection_table,
    linear_quasi_tree_order,
)
from .errors import InternalInvariantError, NotClosedComplexError
from .graphs import Graph, Labelling, connected_components, is_closed_wrt


@dataclass(frozen=True)
class BorderChain:
    """Staircase of nonempty cells: rows reach n_i = max{j : F(i,j) nonempty}."""

    n_of: tuple[int, ...]
    cells: tuple[tuple[int, int], ...]

    def n(self, i: int) -> int:
        return self.n_of[i - 1]


def border_chain(t: IntersectionTable) -> BorderChain:
    """Row maxima and the staircase cell list, in row-major order.

    The row maxima must be nondecreasing and every listed cell nonempty;
    either failing means the table did not come from a linear quasi-tree.
    """
    r = t.r
    n_of = []
    for i in range(1, r + 1):
        n_of.append(max(j for j in range(i, r + 1) if t.cell(i, j)))
    for i in range(r - 1):
        if n_of[i] > n_of[i + 1]:
            raise InternalInvariantError(f"border maxima decrease at row {i + 1}: {n_of}")
    cells = [(1, j) for j in range(1, n_of[0] + 1)]
    for i in range(2, r + 1):
        start = max(i, n_of[i - 2])
        cells.extend((i, j) for j in range(start, n_of[i - 1] + 1))
    for (i, j) in cells:
        if not t.cell(i, j):
            raise InternalInvariantError(f"border cell ({i},{j}) is empty")
    return BorderChain(n_of=tuple(n_of), cells=tuple(cells))


@dataclass(frozen=True)
class ResidualBlock:
    i: int
    j: int
    vertices: frozenset[str]


@dataclass(frozen=True)
class BlockPartition:
    """Nonempty residual blocks in staircase order; their union is the vertex set."""

    blocks: tuple[ResidualBlock, ...]

    def to_json_list(self) -> list[dict]:
        return [{"i": b.i, "j": b.j, "vertices": sorted(b.vertices)} for b in self.blocks]


def residual_blocks(t: IntersectionTable, b: BorderChain) -> BlockPartition:
    """Blocks F'(i,j) = F(i,j) minus (F(i-1,j) ∪ F(i,j+1)); empty blocks dropped.

    Verifies the partition property (pairwise disjoint, covering all
    vertices) and raises NotClosedComplexError when it fails, which means
    the table did not come from a closed complex.
    """
    blocks = []
    seen: set[str] = set()
    for (i, j) in b.cells:
        block = t.cell(i, j) - (t.cell(i - 1, j) | t.cell(i, j + 1))
        if not block:
            continue
        if block & seen:
            raise NotClosedComplexError(
                f"residual blocks overlap at ({i},{j}): complex is not closed"
            )
        seen |= block
        blocks.append(ResidualBlock(i=i, j=j, vertices=block))
    missing = set(t.vertices) - seen
    if missing:
        raise NotClosedComplexError(
            f"residual blocks miss vertices {sorted(missing)}: complex is not closed"
        )
    return BlockPartition(blocks=tuple(blocks))


def _labels_from_blocks(partition: BlockPartition) -> Labelling:
    labels: dict[str, int] = {}
    counter = 1
    for block in partition.blocks:
        for v in sorted(block.vertices):
            labels[v] = counter
            counter += 1
    return Labelling(labels)


def closed_labelling(oc: OrderedComplex) -> Labelling:
    """Labelling that witnesses closedness of the complex's underlying graph.

    Vertices are numbered 1..n through the residual blocks in staircase
    order, alphabetically within a block.  The result is re-verified with
    is_closed_wrt before returning; a verification failure is a bug, not an
    input error.
    """
    t = intersection_table(oc)
    ok, violation = _closed_conditions(t)
    if not ok:
        raise NotClosedComplexError(f"complex is not closed: {violation.describe()}")
    lab = _labels_from_blocks(residual_blocks(t, border_chain(t)))
    closed, witness = is_closed_wrt(oc.base.underlying_graph(), lab)
    if not closed:
        raise InternalInvariantError(
            f"constructed labelling is not closed (witness {witness}); this is a bug"
        )
    return lab


@dataclass(frozen=True)
class StageFailure:
    """Which pipeline stage rejected a component, with the violation if any."""

    component: tuple[str, ...]
    stage: str  # "quasi-tree-order" | "closed-complex"
    violation: Optional[ComplexViolation]

    def describe(self) -> str:
        where = "{%s}" % ",".join(self.component)
        if self.stage == "quasi-tree-order":
            return f"component {where}: clique complex has no linear quasi-tree order"
        return f"component {where}: {self.violation.describe()}"


@dataclass(frozen=True)
class ComponentCertificate:
    """Evidence for one component: complex, leaf order, staircase, blocks."""

    graph: Graph
    complex: SimplicialComplex
    ordered: OrderedComplex
    border: BorderChain
    partition: BlockPartition
    local_labelling: Labelling

    def to_json_dict(self) -> dict:
        doc = self.ordered.to_json_dict()
        doc["blocks"] = self.partition.to_json_list()
        return doc


@dataclass(frozen=True)
class ClosednessResult:
    """Outcome of the end-to-end closedness decision."""

    labelling: Optional[Labelling]
    certificates: tuple[ComponentCertificate, ...]
    failure: Optional[StageFailure]

    @property
    def closed(self) -> bool:
        return self.labelling is not None


def find_closed_labelling(g: Graph) -> ClosednessResult:
    """Decide closedness of g and construct a witness labelling when closed.

    Components are processed independently (clique complex, leaf order,
    closed-complex check, block labelling) and concatenated in name order
    with label offsets.  Failure of any stage yields the stage witness.
    The final labelling is re-verified against the whole graph.
    """
    labels: dict[str, int] = {}
    offset = 0
    certificates = []
    for comp in connected_components(g):
        sc = clique_complex(comp)
        oc = linear_quasi_tree_order(sc)
        if oc is None:
            return ClosednessResult(None, (), StageFailure(comp.vertices, "quasi-tree-order", None))
        t = intersection_table(oc)
        ok, violation = _closed_conditions(t)
        if not ok:
            return ClosednessResult(None, (), StageFailure(comp.vertices, "closed-complex", violation))
        border = border_chain(t)
        partition = residual_blocks(t, border)
        local = _labels_from_blocks(partition)
        for v in local:
            labels[v] = local[v] + offset
        offset += comp.n
        certificates.append(
            ComponentCertificate(
                graph=comp,
                complex=sc,
                ordered=oc,
                border=border,
                partition=partition,
                local_labelling=local,
            )
        )
    lab = Labelling(labels)
    closed, witness = is_closed_wrt(g, lab)
    if not closed:
        raise InternalInvariantError(
            f"concatenated labelling is not closed (witness {witness}); this is a bug"
        )
    return ClosednessResult(lab, tuple(certificates), None)
