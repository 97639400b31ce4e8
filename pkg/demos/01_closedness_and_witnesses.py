#!/usr/bin/env python3
"""Deciding closedness and reading the witnesses.

A graph is closed with respect to a labelling when, at every vertex, the
neighbours with smaller labels are pairwise adjacent and so are the
neighbours with larger labels.  A graph is closed outright when some
labelling does this.  This script walks through the verdicts and the
witnesses on a few small graphs.
"""

from closedgraphs import (
    Graph,
    Labelling,
    brute_force_closed,
    find_closed_labelling,
    find_induced_claw,
    is_closed_wrt,
    split_neighborhood,
)

print("== a path is closed under its natural labelling ==")
path = Graph([("a", "b"), ("b", "c"), ("c", "d")])
lab = Labelling({"a": 1, "b": 2, "c": 3, "d": 4})
for v in "abcd":
    split = split_neighborhood(path, lab, v)
    print(f"  vertex {v}: below={sorted(split.below)} above={sorted(split.above)}")
print("  closed:", is_closed_wrt(path, lab)[0])

print("\n== the same path under a scrambled labelling is not ==")
bad = Labelling({"a": 1, "b": 3, "c": 2, "d": 4})
closed, witness = is_closed_wrt(path, bad)
print(f"  closed: {closed}; witness: vertex {witness.vertex} has non-adjacent"
      f" same-side neighbours {witness.pair}")

print("\n== a star (claw) is closed under NO labelling ==")
claw = Graph([("hub", "p"), ("hub", "q"), ("hub", "r")])
print("  brute force over all 4! labellings:", brute_force_closed(claw))
print("  induced claw certificate:", find_induced_claw(claw))

print("\n== the constructive decision, with a certificate ==")
g = Graph([("1", "2"), ("2", "3"), ("1", "3"), ("3", "4"), ("2", "4"), ("4", "5")])
result = find_closed_labelling(g)
print("  closed:", result.closed)
print("  labelling:", dict(sorted(result.labelling.items(), key=lambda kv: kv[1])))
for cert in result.certificates:
    print("  component facets:", [sorted(f) for f in cert.complex.facets])
    print("  leaf order (positions):", list(cert.ordered.order))
    print("  residual blocks:", cert.partition.to_json_list())

print("\n== a four-cycle fails: its clique complex has no leaf order ==")
square = Graph([("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")])
result = find_closed_labelling(square)
print("  closed:", result.closed)
print("  failing stage:", result.failure.describe())
