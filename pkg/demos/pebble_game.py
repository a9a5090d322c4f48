"""
The (k, l)-pebble game on plain multigraphs
===========================================

Everything downstream (family checks, lifts, constructions) rests on one
engine: an incremental pebble game that accepts or rejects edges so that
the accepted set stays (k, l)-sparse.  This script pokes at it directly.
"""

from gainsparse import (SparsityParams, UncoloredMultigraph, kl_basis,
                        is_kl_sparse, is_kl_spanning, fundamental_circuit)

P23 = SparsityParams(2, 3)   # generic bar-joint rigidity in the plane
P22 = SparsityParams(2, 2)   # spanning map-graphs; loops carry weight
P20 = SparsityParams(2, 0)   # two spanning forests' worth of anything

# A triangle is the smallest (2, 3)-tight graph: m = 3 = 2n - 3.
tri = UncoloredMultigraph(range(3), [(0, 0, 1), (1, 1, 2), (2, 2, 0)])
print("triangle sparse:", is_kl_sparse(tri, P23))
print("triangle spans: ", is_kl_spanning(tri, P23))

# K4 has one edge too many.  The basis the game keeps has 5 edges and the
# rejected edge closes the unique circuit, which is all of K4.
k4_edges = [(i, u, v) for i, (u, v) in enumerate(
    [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])]
k4 = UncoloredMultigraph(range(4), k4_edges)
basis = kl_basis(k4, P23)
(rejected,) = set(range(6)) - basis
print("K4 basis:", sorted(basis), "rejected:", rejected)
circuit = fundamental_circuit(k4, P23, basis, rejected)
print("fundamental circuit of edge %d: %s" % (rejected, sorted(circuit)))

# Loops need l <= 0 on their own vertex: a lone loop has m = 1 against
# 2n - l = 2 - l, so it fails (2,2) yet two of them exactly fill (2,0).
loop = UncoloredMultigraph([0], [(0, 0, 0)])
print("single loop under (2,2):", is_kl_sparse(loop, P22),
      " under (2,0):", is_kl_sparse(loop, P20))
two_loops = UncoloredMultigraph([0], [(0, 0, 0), (1, 0, 0)])
print("two loops under (2,0):", is_kl_sparse(two_loops, P20),
      "spanning:", is_kl_spanning(two_loops, P20))

# The same edge list read at the three settings.  Dropping l admits more:
# a doubled triangle edge kills (2,3) but survives (2,2).
doubled = UncoloredMultigraph(range(3), [(0, 0, 1), (1, 1, 2), (2, 2, 0),
                                         (3, 0, 1)])
for params in (P23, P22, P20):
    print("doubled triangle under (%d,%d):" % params,
          is_kl_sparse(doubled, params))
