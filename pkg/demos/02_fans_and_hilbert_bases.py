"""The fan of a polytope, its dual cones, and their Hilbert bases."""

# %%
from toric_horo import corpus
from toric_horo.fan import dual_cone, fan_from_polytope, hilbert_basis, is_complete, locate, make_cone, validate_fan

P = corpus.polytope("simplex2")
F = fan_from_polytope(P)
print(F, " valid:", validate_fan(F).valid, " complete:", is_complete(F))
for sigma in F.cones:
    print(f"  cone {sigma.id}: dim {sigma.dim}, rays {sigma.generators}")

# %%
# Every nonzero direction lies in the relative interior of exactly one cone.
for u in [(3, 1), (1, 1), (-1, -1), (0, 5)]:
    sigma = locate(F, u)
    print(f"u = {u} lies in cone {sigma.id} with rays {sigma.generators}")

# %%
# Dual cones of the maximal cones and the semigroups of lattice points in them.
for sigma in F.maximal_cones():
    dual = dual_cone(sigma)
    hb = hilbert_basis(dual)
    print(f"cone {sigma.generators}: dual rays {dual.generators}, Hilbert basis {hb.elements}")

# %%
# A singular cone needs an interior generator: (1, 0) = 1/2 (0, 1) + 1/2 (2, -1).
print(hilbert_basis(make_cone([(0, 1), (2, -1)])).elements)
