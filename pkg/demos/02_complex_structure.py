#!/usr/bin/env python3
"""Inside the clique complex: leaf orders, intersection cells, and blocks.

Two instructive complexes.  The first (four triangles sharing an apex)
admits a leaf order, but its intersection cells fail the incomparability
condition, so the graph is not closed.  The second is a chain of three
cliques that fails the covering condition instead.  A staggered-interval
family passes everything and yields the block partition that produces a
closed labelling.
"""

from closedgraphs import (
    SimplicialComplex,
    border_chain,
    closed_labelling,
    intersection_table,
    is_closed_complex,
    leaf_branches,
    linear_quasi_tree_order,
    residual_blocks,
)


def show(name, facets):
    sc = SimplicialComplex(facets)
    print(f"== {name} ==")
    for pos, f in enumerate(sc.facets, start=1):
        print(f"  F{pos} = {{{','.join(sorted(f))}}}")
    for pos in range(len(sc.facets)):
        branches = sorted(i + 1 for i in leaf_branches(sc, pos))
        print(f"  branches of F{pos + 1}: {branches or 'none (not a leaf)'}")
    oc = linear_quasi_tree_order(sc)
    if oc is None:
        print("  no linear quasi-tree order\n")
        return None
    print("  leaf order:", ", ".join(f"F{i + 1}" for i in oc.order))
    verdict, violation = is_closed_complex(oc)
    print("  closed complex:", verdict if verdict else f"no -- {violation.describe()}")
    print()
    return oc


show("four triangles sharing apex f", [{"a", "b", "f"}, {"a", "e", "f"}, {"b", "c", "f"}, {"d", "e", "f"}])
show("chain of three cliques", [{"a", "b", "c"}, {"b", "c", "d", "e"}, {"b", "e", "f"}])

oc = show("staggered intervals [1,3],[2,5],[4,6]",
          [{"1", "2", "3"}, {"2", "3", "4", "5"}, {"4", "5", "6"}])

print("== from cells to a closed labelling ==")
t = intersection_table(oc)
for i in range(1, t.r + 1):
    for j in range(i, t.r + 1):
        print(f"  F({i},{j}) = {{{','.join(sorted(t.cell(i, j)))}}}")
chain = border_chain(t)
print("  row maxima:", chain.n_of)
print("  border staircase:", list(chain.cells))
partition = residual_blocks(t, chain)
for block in partition.blocks:
    print(f"  block F'({block.i},{block.j}) = {sorted(block.vertices)}")
lab = closed_labelling(oc)
print("  closed labelling:", dict(sorted(lab.items(), key=lambda kv: kv[1])))
