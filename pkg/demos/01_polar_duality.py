"""Polytopes, polars and dual faces with exact rational arithmetic."""

# %%
from toric_horo import corpus
from toric_horo.polytope import dual_face, hull, normalize, polar, volume


def show(v):
    return "(" + ", ".join(str(a) for a in v) + ")"


# An asymmetric quadrilateral: the origin is inside, but the shape is not
# centrally symmetric.
P = corpus.polytope("asymquad")
print("vertices:", [show(v) for v in P.vertices])
for a, b in P.facets:
    print(f"  facet  {show(a)} . x <= {b}")

# %%
# The polar has one vertex -a/b per facet, and polarity is an involution.
Q = polar(P)
print("polar vertices:", [show(v) for v in Q.vertices])
print("polar of polar == P:", polar(Q) == P)

# %%
# Each proper face F of P pairs with a face of the polar on which every
# inner product with F is exactly -1; dimensions add up to n - 1.
for F in P.proper_faces():
    E = dual_face(P, F)
    xs = P.face_vertices(F)
    ys = Q.face_vertices(E)
    print(f"dim {F.dim} face {[show(x) for x in xs]}"
          f"  <->  dim {E.dim} face {[show(y) for y in ys]}")

# %%
# Volumes come from a triangulation; scaling to the smallest integral dilate.
print("area of P:", volume(P), " area of polar:", volume(Q))
lam, N = normalize(hull([(1, 2), (-1, 1), (0, -1)]))
print("normalizing scale:", lam, "->", [show(v) for v in N.vertices])
