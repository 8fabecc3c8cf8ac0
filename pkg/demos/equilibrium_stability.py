"""Equilibria and local stability of the three recurrences.

Run with ``python3 demos/equilibrium_stability.py``.
"""

from holomap import MapSpec
from holomap.cli import render_tables
from holomap.stability import lemma_predicates, report

# E1 has two equilibria, +-sqrt(alpha + beta); E8 and E9 share alpha + beta.
for kind in ("E1", "E8", "E9"):
    spec = MapSpec(kind, 1j, 1)
    for rep in report(spec):
        m = ", ".join(f"{x:.4f}" for x in rep.roots.moduli)
        print(f"{kind} alpha=i beta=1  zbar={rep.equilibrium:.4f}  |roots|=({m})  {rep.stability.value}")

# The linearization only sees the ratios alpha/(alpha+beta) and beta/(alpha+beta),
# so scaling both parameters by the same factor leaves the class unchanged.
a = report(MapSpec("E1", 3 + 1j, 2))[0]
b = report(MapSpec("E1", 30 + 10j, 20))[0]
print("\nscaling invariance:", a.stability is b.stability, a.roots.moduli == b.roots.moduli)

# Root-bound predicates for a case where the chain condition is satisfiable.
print("\npredicates for E1 alpha=1 beta=3:", lemma_predicates(MapSpec("E1", 1, 3)))

# The three coefficient tables, recomputed. Rows whose printed modulus claim
# does not survive the recomputation are marked DISAGREE.
print()
print(render_tables())
