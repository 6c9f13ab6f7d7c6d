"""
Jewels, centers and the two closed-form bounds
==============================================

Walks through the invariants on the two-center tree (centers 1 and 2, three
supports each) and on the Gamma_v family, where the upper bound pulls away
from the flat 5d bound as d grows.

Run:  python notebooks/01_jewels_and_bounds.py
"""

from beireg import analyze_tree, fig2_tree, gamma_tree, jewel_profile, thm_lower, thm_upper
from beireg.jewels import jewel_subgraph, n_geq

# The tree: centers 1, 2 adjacent; supports 3,4,5 on 1 and 6,7,8 on 2; two leaves per support.
t = fig2_tree()
print(t.n, "vertices,", len(t.edges), "edges")

# D(v) counts neighbors of degree >= 3.  Vertex 1 sees 2, 3, 4, 5.
print("N^{>=3}(1) =", sorted(n_geq(t, 1, 3)))

pr = jewel_profile(t)
print("centers (c, D):", pr.centers)
print("iv =", pr.iv, " s =", pr.s, " D_G =", pr.d_g)
print("center components:", pr.component_vertices, " e_G =", pr.e_g, " mu =", pr.mu)

# the jewel around center 1 pulls in center 2 and its supports, but not their leaves
g, labels = jewel_subgraph(t, 1)
print("jewel at 1 has", g.n, "vertices:", labels)

# both bounds land on 12, so the regularity is pinned
print("lower", thm_lower(pr), "upper", thm_upper(pr))
print()
print(analyze_tree(t).render())
print()

# Gamma_v: d copies glued at a hub.  Columns: d, iv, s, lower, upper, 5d.
print(" d  iv   s  lower  upper   5d  gap")
for d in range(3, 9):
    g = gamma_tree(d)
    p = jewel_profile(g)
    up = thm_upper(p)
    print(f"{d:>2} {p.iv:>3} {p.s:>3} {thm_lower(p):>6} {up:>6} {5 * d:>4} {5 * d - up:>4}")
