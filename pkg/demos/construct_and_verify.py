"""
Building a scheme of double and reduced points
==============================================

Start from reduced points on general lines and merge them, three at a time,
into double points at the intersections.  The brute-force oracle confirms
the Hilbert function after every merge.
"""

from fatpoints import construct, delta_hf, predicted_double_count

d = (1, 2, 3, 4, 2)


def report(Z, step, rec):
    got = delta_hf(Z.scheme)
    print(f"  merged into 2P_{{{rec.i},{rec.j}}}: delta = {got}  "
          f"({'ok' if got.values == d else 'MISMATCH'})")


Z, trace = construct(d, seed=1, on_merge=report)
for step in trace.steps:
    print(f"STEP {step.n}: h_n = {list(step.h_n)}, s_n = {step.s_n}, t_n = {step.t_n}")
print(f"{Z.doubles} double points, {Z.reduced} reduced points")
print("predicted number of doubles:", predicted_double_count(d))

# stopping early still gives the same Hilbert function
for e in range(1, predicted_double_count(d) + 1):
    W, _ = construct(d, seed=1, stop_at=e)
    print(f"stop_at={e}: {W.doubles} doubles, {W.reduced} reduced, delta = {delta_hf(W.scheme)}")

# when the criterion holds, nothing but double points is left over
d = (1, 2, 3, 4, 5, 6, 2, 2, 1, 1)
Z, _ = construct(d, seed=0)
print(f"{d}: {Z.doubles} doubles at {Z.pairs()}, {Z.reduced} reduced")
