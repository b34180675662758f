"""The boundary of the horofunction compactification as a cell complex
matched against the face complex of the polar polytope."""

# %%
from toric_horo import corpus
from toric_horo.correspond import boundary_complex, moment_image_complex, verify_correspondence


def show(v):
    return "(" + ", ".join(str(a) for a in v) + ")"


for name in ["square", "asymquad", "cube3", "pyramid3"]:
    P = corpus.polytope(name)
    rep = verify_correspondence(P)
    print(f"{name:9s} boundary cells {boundary_complex(P).graded_counts()}"
          f"  polar faces {moment_image_complex(P).graded_counts()}  passed: {rep.passed}")

# %%
# The explicit bijection for the square: a vertex of the square is a
# one-dimensional boundary cell and corresponds to an edge of the polar.
P = corpus.polytope("square")
rep = verify_correspondence(P)
for f, e in sorted(rep.bijection.items()):
    print(f"face {[show(v) for v in P.face_vertices(P.faces[f])]}  ->  polar face {[show(v) for v in P.polar.face_vertices(P.polar.faces[e])]}")
