"""
Edge contraction, subdivision, and the neighborhood condition
=============================================================

Run with:  python3 demos/01_contraction_basics.py
"""

from leafspan import (
    Edge,
    Graph,
    contract,
    edge_private_neighbors,
    neighborhood_condition,
    subdivide,
)

# A small graph: a 4-cycle with one chord.
g = Graph(range(4), [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
print("G:", sorted(tuple(e) for e in g.edges()))

# Contracting an edge merges its endpoints into a fresh vertex (one past
# the current maximum id) and collapses any parallel edges produced.
res = contract(g, Edge(0, 1))
print("contract 0-1 -> merged vertex", res.merged_vertex)
print("G/e:", sorted(tuple(e) for e in res.contracted.edges()))

# The origin map records which input vertices each output vertex stands for,
# so a chain of contractions can always be traced back.
for v, src in sorted(res.origin.items()):
    print(f"  vertex {v} stands for {sorted(src)}")

# Subdivision is the opposite move: replace an edge by a two-edge path
# through a fresh vertex.
sub, w = subdivide(g, Edge(0, 1))
print(f"subdivide 0-1 through {w}:", sorted(tuple(e) for e in sub.edges()))

# For an edge e = uv, the private neighborhoods N_e(u) and N_e(v) are the
# neighbors of each endpoint with the other endpoint removed.
e = Edge(0, 2)
nu, nv = edge_private_neighbors(g, e)
print(f"N_e(0) = {sorted(nu)}, N_e(2) = {sorted(nv)}")

# The neighborhood condition asks that neither endpoint owns 2 or more
# private neighbors the other lacks.  It is the hypothesis under which a
# spanning tree of G/e can be pulled back with the same number of leaves
# (see demo 04).
for u, v in sorted(tuple(e) for e in g.edges()):
    print(f"condition on {u}-{v}: {neighborhood_condition(g, Edge(u, v))}")
