"""
Minimum leaf counts and leaf spectra
====================================

Every connected graph has spanning trees; this demo asks how few leaves
one can have, and which leaf counts are achievable at all.

Run with:  python3 demos/02_leaf_reports.py
"""

from leafspan import (
    enumerate_spanning_trees,
    has_hamiltonian_path,
    leaf_report,
    named_graph,
    parse_graph6,
    spanning_tree_count,
)

# Paths and cycles are the easy cases: their spanning trees are paths,
# and a path has exactly 2 leaves.
for name in ("cycle:5", "cycle:8"):
    g = named_graph(name).graph
    rep = leaf_report(g)
    print(f"{name}: min leaves {rep.min_leaves}, spectrum {sorted(rep.spectrum)}")

# A star is the other extreme: its only spanning tree is itself.
star = parse_graph6("D?{")
rep = leaf_report(star)
print(f"K_1,4: min leaves {rep.min_leaves}, spectrum {sorted(rep.spectrum)}")

# The seven-vertex example graph sits in between.
g = named_graph("fig21").graph
rep = leaf_report(g)
print(f"fig21: min leaves {rep.min_leaves}, spectrum {sorted(rep.spectrum)}")
print("fig21 witness tree:", sorted(tuple(e) for e in rep.witness.tree_edges))

# Small graphs can be enumerated outright; the report uses enumeration
# below a size threshold and branch-and-bound above it, so the witness
# tree is exact either way.
print("fig21 spanning trees:", spanning_tree_count(g))
for t in enumerate_spanning_trees(g):
    print(f"  {t.leaf_count()} leaves: {sorted(tuple(e) for e in t.tree_edges)}")

# Minimum leaf count 2 means exactly that a Hamiltonian path exists.
print("fig21 has a Hamiltonian path:", has_hamiltonian_path(g))
print("cycle:5 has a Hamiltonian path:", has_hamiltonian_path(named_graph("cycle:5").graph))
