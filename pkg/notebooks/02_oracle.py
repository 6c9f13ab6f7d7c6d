"""
The brute-force oracle
======================

The lex initial ideal of J_G is squarefree, generated by one monomial per
admissible path, and has the same regularity as J_G.  Hochster's formula
turns Betti numbers of a squarefree ideal into reduced homology of induced
subcomplexes; only unions of generator supports can contribute.

Run:  python notebooks/02_oracle.py
"""

import time

from beireg import GF2, admissible_paths, initial_ideal, jewel_tree, oracle_reg, oracle_with_table
from beireg.graph import SimpleGraph, complete_graph, path_graph, star_graph
from beireg.oracle import lcm_lattice, reduced_homology_dims

# admissible paths of the claw 2-1-3 plus 1-4: interior vertex 1 is below both endpoints
claw = star_graph(3)
for p in admissible_paths(claw):
    print(p.vertices, "->", sorted(p.monomial))
print(initial_ideal(claw).describe())

# K3: longer paths always have a chord, so only the edges survive
print("K3:", initial_ideal(complete_graph(3)).describe())

# homology of small complexes: a hollow triangle is a circle
print("hollow triangle:", reduced_homology_dims([1, 2, 3], [[1, 2, 3]]))
print("two points:     ", reduced_homology_dims([1, 2], [[1, 2]]))

# the P4 ideal is a complete intersection, so its Betti table is Koszul
reg, table = oracle_with_table(path_graph(4), full_table=True)
print("P4 reg", reg, "graded Betti", sorted(table.graded().items()))

# the lcm lattice is what keeps the jewel (20 variables) tractable
j = jewel_tree()
ideal = initial_ideal(j)
print("jewel: ", len(ideal.generators), "generators;", len(lcm_lattice(ideal.masks)), "lattice elements vs 2^20 =", 2**20)
t0 = time.perf_counter()
print("jewel reg:", oracle_reg(j), f"({time.perf_counter() - t0:.2f}s)")
t0 = time.perf_counter()
print("jewel reg over GF(2):", oracle_reg(j, GF2), f"({time.perf_counter() - t0:.2f}s)")

# regularity adds over connected components
two = SimpleGraph.from_edges([(1, 2), (2, 3), (4, 5), (5, 6), (6, 7)])
print("P3 + P4:", oracle_reg(two))
