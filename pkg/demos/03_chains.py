"""
Chains of orbits
================

The Y-series pairs (Y_m x F_n)/Z_k and (Y_m x F_2n)/Z_2k agree on the
decompositions and on the torus counts, but their singular leaves split
into different chains of one- and three-dimensional orbits.
"""

from sfatlas.atom import find_named, identify, standard_series, symmetry_group
from sfatlas.model import SimpleMinimalModel, chain_invariant, chain_summary, direct_product, fingerprint, to_dot
from sfatlas.permgroup import perm_order

c1 = find_named("C1")
half_turn = next(g for g in symmetry_group(c1) if perm_order(g) == 2)
for model in (direct_product(c1, 1), SimpleMinimalModel(c1, 2, 2, half_turn)):
    fp = fingerprint(model)
    print(f"C1, n={model.n}, k={model.k}: m2={fp.m2} tori={fp.torus_pair} chains: {chain_summary(fp.chains)}")

# the same contrast one step further along the series
y4 = standard_series("Y", 4)
print(identify(y4), "symmetries by order:", sorted(perm_order(g) for g in symmetry_group(y4)))
tau = y4.tau
print("Y4 x F1:", chain_summary(chain_invariant(direct_product(y4, 1))))
print("(Y4 x F2)/Z2:", chain_summary(chain_invariant(SimpleMinimalModel(y4, 2, 2, tau))))

# the quotient incidence graph, ready for graphviz
print(to_dot(SimpleMinimalModel(c1, 2, 2, half_turn), "(C1 x F2)/Z2"))
