"""
Trading one leaf for a chain of contractions
============================================

Given a spanning tree with k >= 3 leaves, contracting the path from a
leaf to the nearest branch vertex, edge by edge, leaves a spanning tree
of the contracted graph with exactly k-1 leaves.  This demo walks the
chain one step at a time.

Run with:  python3 demos/03_leaf_reduction_walkthrough.py
"""

from leafspan import composed_origin, leaf_report, named_graph, reduce_leaf_count

g = named_graph("fig21").graph
t = leaf_report(g).witness
print("host graph:", sorted(tuple(e) for e in g.edges()))
print(f"start tree ({t.leaf_count()} leaves):", sorted(tuple(e) for e in t.tree_edges))

tr = reduce_leaf_count(g, t)
print(f"leaf chosen: {tr.leaf} (smallest id among the tree's leaves)")
print(f"nearest branch vertex: {tr.branch_vertex}")
print("path edges in the original ids:", [tuple(e) for e in tr.edge_sequence])

# Each contraction renames the merged end of the path, so the edge actually
# contracted at each step differs from the original-id edge after step one.
for i, (e, res) in enumerate(zip(tr.edge_sequence_current, tr.graph_sequence), 1):
    h = res.contracted
    print(
        f"step {i}: contract {e.u}-{e.v} -> vertex {res.merged_vertex}, "
        f"now {h.vertex_count} vertices / {h.edge_count} edges"
    )

# The whole path collapsed to one vertex; the composed origin map says which.
origin = composed_origin(tr.graph_sequence)
final = tr.graph_sequence[-1].merged_vertex
print(f"vertex {final} stands for {sorted(origin[final])}")

print(
    f"final tree ({tr.tree_after.leaf_count()} leaves):",
    sorted(tuple(e) for e in tr.tree_after.tree_edges),
)
print(f"leaf count went {t.leaf_count()} -> {tr.tree_after.leaf_count()}")
