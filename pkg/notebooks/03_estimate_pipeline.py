"""
The estimate pipeline
=====================

estimate() splits a tree at degree-2 vertices, trims long caterpillars into
stars (crediting the lost length), then applies an exact rule or the bounds
to each piece and sums.  The trace records every step.

Run:  python notebooks/03_estimate_pipeline.py
"""

from beireg import SimpleGraph, caterpillar, estimate, jewel_tree, oracle_reg, trim_caterpillars, two_jewel_chain, validate_tree

# a jewel whose leaf 5 continues into a caterpillar 5-11-12-14
t = validate_tree(SimpleGraph.from_edges(
    list(jewel_tree().edges) + [(5, 11), (11, 12), (11, 13), (12, 14), (12, 15), (12, 16)]
))
est = estimate(t)
for step in est.trace:
    print(f"{step.rule:<18} {step.piece}  {step.contribution}")
print("=>", est.lower, est.upper, est.exact)
print()

# trimming on its own: a caterpillar with interior degrees 3, 4, 3
c = caterpillar([3, 4, 3])
tr = trim_caterpillars(c)
print("replaced:", tr.replaced, "credit", tr.length_credit)
print("reg(trimmed) + credit =", oracle_reg(tr.trimmed) + tr.length_credit, " reg(original) =", oracle_reg(c, max_vars=18))
print()

# where the theorems leave a gap: a degree-3 vertex between two centers
chain = two_jewel_chain()
est = estimate(chain)
print("two-jewel chain:", est.lower, "<= reg <=", est.upper, " exact:", est.exact)
