"""
Pulling spanning trees back through a contraction
=================================================

Contraction can destroy leaf counts: the minimum can rise.  But it never
rises by much, and under a neighborhood condition on the contracted edge
it does not rise at all.  This demo shows the witness machinery behind
both statements.

Run with:  python3 demos/04_tree_lifting.py
"""

from leafspan import (
    Edge,
    check_min_leaf_drop,
    contract,
    find_preserving_edge,
    leaf_report,
    lift_tree,
    lift_tree_relaxed,
    named_graph,
    neighborhood_condition,
)

# --- exact lifting, subdivision case --------------------------------------
g = named_graph("cycle:5").graph
e = Edge(0, 1)
res = contract(g, e)
print("C5 / 0-1 edges:", sorted(tuple(x) for x in res.contracted.edges()))
print("neighborhood condition on 0-1:", neighborhood_condition(g, e))

tp = leaf_report(res.contracted).witness
print(f"tree of C5/e ({tp.leaf_count()} leaves):", sorted(tuple(x) for x in tp.tree_edges))

w = lift_tree(g, e, res, tp)
print(f"lift case: {w.case_used}")
print(f"lifted tree ({w.tree.leaf_count()} leaves):", sorted(tuple(x) for x in w.tree.tree_edges))

# --- exact lifting, replacement case --------------------------------------
# Hand the lifter a tree in which the merged vertex is interior: the star
# of C5/e centered on the merged vertex.
from leafspan import SpanningTree

m = res.merged_vertex
star = SpanningTree(res.contracted, [(2, m), (4, m), (2, 3)])
w2 = lift_tree(g, e, res, star)
print(f"star tree lift case: {w2.case_used}, attachments {dict(sorted(w2.attachments.items()))}")
print(f"x1={w2.x1}, x2={w2.x2}, leaves {star.leaf_count()} -> {w2.tree.leaf_count()}")

# --- when the condition fails ---------------------------------------------
# fig21's branch edge violates the condition, and indeed contracting it
# raises the minimum leaf count from 3 to 4.  The relaxed lift still
# works, giving up at most one leaf.
g = named_graph("fig21").graph
e = Edge(1, 4)
print("condition on fig21's 1-4:", neighborhood_condition(g, e))
res = contract(g, e)
tp = leaf_report(res.contracted).witness
wr = lift_tree_relaxed(g, e, res, tp)
print(f"relaxed lift: {tp.leaf_count()} leaves -> {wr.tree.leaf_count()} (allowed {tp.leaf_count() + 1})")

# The general bound: no single contraction drops the minimum by 2 or more.
print("fig21 minimum never drops by 2 under any contraction:", check_min_leaf_drop(g))

# --- preserving contractions ----------------------------------------------
# In the other direction: any spanning tree with k leaves on fewer than
# n-1 vertices of branching admits an edge whose contraction keeps k.
t = leaf_report(g).witness
pw = find_preserving_edge(g, t)
print(
    f"preserving edge for the {t.leaf_count()}-leaf tree: {tuple(pw.edge)}, "
    f"contracted tree keeps {pw.tree_after.leaf_count()} leaves"
)
