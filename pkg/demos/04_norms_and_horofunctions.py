"""An asymmetric polyhedral norm and the horofunctions at the end of rays."""

# %%
from fractions import Fraction

from toric_horo import corpus
from toric_horo.horo import (
    classify_limit_horo,
    dist,
    gauge,
    gauge_by_bisection,
    normalized_distance,
    pseudo_norm,
    verify_convergence,
)
from toric_horo.toric import PathSpec


def show(v):
    return "(" + ", ".join(str(a) for a in v) + ")"


P = corpus.polytope("asymquad")
x = (3, 1)
print("gauge from facets:      ", gauge(P, x))
print("pseudo-norm of polar:   ", pseudo_norm(P.polar.vertices, x))
lo, hi = gauge_by_bisection(P, x)
print("bisection bracket width:", float(hi - lo))

# The distance is not symmetric.
print("d(0, e1) =", dist(P, (0, 0), (1, 0)), "  d(e1, 0) =", dist(P, (1, 0), (0, 0)))

# %%
# Walk along t*(1, 1) + (1/2, -3).  The normalized distance d(z, x) - d(0, x)
# becomes constant in t once the path is deep enough inside its cone.
path = PathSpec.of((1, 1), (Fraction(1, 2), -3))
z = (3, 2)
for t in [1, 2, 4, 8, 16, 32]:
    print(f"t = {t:3d}:  delta = {normalized_distance(P, z, path.at(t))}")

# %%
h = classify_limit_horo(P, path)
print("limit horofunction: polar face", [show(v) for v in h.vertices], " base", show(h.base_coset))
print("h(z) =", h(z))

rep = verify_convergence(P, path, [(3, 2), (0, 0), (-5, 4), (1, 1)])
print("stabilized:", rep.stabilized, " from t =", rep.t0)
