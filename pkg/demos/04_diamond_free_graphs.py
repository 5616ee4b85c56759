"""From progression-free sets to diamond-free graphs and their triple systems.

A cyclically 3-AP-free set A in Z/N yields a tripartite graph on 3N vertices
with 3|A|N edges whose triangles are exactly (x, x+a, x+2a): every edge lies
in exactly one triangle.  Reading the triangles as triples of a hypergraph
gives an extremal example where the triforce density collapses to the single
exact rational  edge_density^4 / (8 d^3).
"""

from fractions import Fraction

from cornerforge import (
    ProgressionWitness,
    behrend_3ap_free,
    diamond_free_from_ap_free,
    edge_density,
    kforce_density,
    triangle_hypergraph,
    verify_diamond_free,
)

members = {0, 1, 3, 4, 9}  # base-3 digits in {0,1}: 3-AP-free
modulus = 29  # members live below 29/3, so cyclic progressions cannot wrap
graph = diamond_free_from_ap_free(members, modulus)
print(f"A = {sorted(members)} in Z/{modulus}")
print(f"graph: 3x{modulus} vertices, {graph.edge_count()} edges (= 3|A|N)")
print(f"every edge in exactly one triangle: {verify_diamond_free(graph)}")

h = triangle_hypergraph(graph)
t = len(h.edges)
n = 3 * modulus
d = Fraction(graph.edge_count(), n**2)
print(f"\ntriangle hypergraph: {t} triples on {n} vertices")
print(f"  triple (edge) density  {edge_density(h)}")
print(f"  triforce density       {kforce_density(h)}")
print(f"  6t/n^6                 {Fraction(6 * t, n ** 6)}")
print(f"  density^4 / (8 d^3)    {edge_density(h) ** 4 / (8 * d ** 3)}")

# the builder refuses sets with progressions, naming a witness
try:
    diamond_free_from_ap_free({0, 2, 4}, 29)
except ProgressionWitness as exc:
    print(f"\nrejected {{0,2,4}}: {exc}")

# scaling up with the digit-sphere construction
lam = behrend_3ap_free(60)
graph = diamond_free_from_ap_free(lam.members, 181)
h = triangle_hypergraph(graph)
print(f"\nsphere set of size {len(lam)} at N=181: {len(h.edges)} triples, "
      f"triforce density {float(kforce_density(h)):.3e}")
