"""A complete fan that does not come from any polytope."""

# %%
from toric_horo import corpus
from toric_horo.fan import fan_from_polytope, is_complete, is_polytopal, validate_fan

F = corpus.fulton_fan()
print("rays:", corpus.FULTON_RAYS)
print("valid:", validate_fan(F).valid, " complete:", is_complete(F))
print("cones per dimension:", [sum(c.dim == d for c in F.cones) for d in range(4)])

# %%
# No choice of points on the eight rays makes the four points of every
# maximal cone coplanar: exact elimination finds the system infeasible.
rep = is_polytopal(F)
print("coplanar heights exist:", rep.coplanarity_feasible)

# %%
# For contrast, the same combinatorics with the undeformed cube is polytopal,
# and the witness polytope built from the heights has exactly this fan.
cube_fan = fan_from_polytope(corpus.polytope("cube3"))
rep = is_polytopal(cube_fan)
print("cube fan:", rep.coplanarity_feasible, rep.strictly_convex_feasible)
print("witness vertices:", sorted(tuple(map(str, v)) for v in rep.witness.vertices))
print("witness fan equals input:", rep.witness_fan_matches)
