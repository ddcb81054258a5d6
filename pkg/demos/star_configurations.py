"""
Double points on a star configuration
=====================================

Put a double point at every intersection of t + 1 general lines.  The
construction reproduces this shape exactly, and moving a single double point
breaks it.
"""

from fatpoints import builder, delta_hf, ideal_dimension, star_delta, star_plus_point_delta

for t in range(1, 5):
    Z = builder.star_scheme(t, seed=t)
    print(f"t={t}: {Z.doubles} doubles, delta = {delta_hf(Z.scheme)}, "
          f"expected {star_delta(t)}")

t = 3
on = builder.star_plus_point_scheme(t, seed=0, on_line=True)
off = builder.star_plus_point_scheme(t, seed=0, on_line=False)
print("extra point on a line: ", delta_hf(on.scheme), "expected", star_plus_point_delta(t))
print("extra point off lines: ", delta_hf(off.scheme))

# replace 2P_{1,2} by a double point elsewhere on l_2 and add P on l_1
Z = builder.near_star_scheme(t, seed=0)
print(f"near-star: delta = {delta_hf(Z)}, dim I_5 = {ideal_dimension(Z, 5)}")

for k in range(5):
    W = builder.perturbed_star_scheme(t, seed=t, which=k, perturb_seed=k)
    print(f"perturb point {k}: delta = {delta_hf(W)}")
