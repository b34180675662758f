"""Charts, orbits and limits of affine paths in a toric variety."""

# %%
from fractions import Fraction

from toric_horo import corpus
from toric_horo.fan import fan_from_polytope
from toric_horo.toric import (
    PathSpec,
    affine_chart,
    classify_limit_complex,
    distinguished_point,
    orbit_table,
    translation_equivariance_check,
)


def show(v):
    return "(" + ", ".join(str(a) for a in v) + ")"


F = fan_from_polytope(corpus.polytope("square"))
for sigma in F.cones:
    chart = affine_chart(sigma)
    point = distinguished_point(sigma, chart)
    print(f"cone {sigma.id} {sigma.generators}: chart {chart.semigroup_generators} -> {point.coordinates}")

# %%
for row in orbit_table(F):
    print(f"cone {row.cone_id}: orbit of dimension {row.orbit_dim}{'  (dense)' if row.dense else ''}")

# %%
# The path t*u + c + i*y0 converges to a point of the orbit of the cone
# containing u; what is remembered is c modulo the span of that cone and
# y0 modulo the span and the integer lattice.
path = PathSpec.of((1, 1), (5, 0), (Fraction(1, 3), Fraction(1, 2)))
bp = classify_limit_complex(F, path)
print("cone:", F.cones[bp.cone_id].generators, " real part:", show(bp.real_coset), " angle:", show(bp.torus_coset))

# %%
# Translating the path translates the limit.
print(translation_equivariance_check(F, path, (1, -2), (Fraction(1, 4), 0)))
