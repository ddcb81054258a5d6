"""
How many double points for generic data?
========================================

Feed the construction the Hilbert function of t generic double points and
count how many double points come back.  The ratio s(t) / t settles near 3/4.
"""

from fatpoints import builder

print("   t     s   s/t")
for t, s, q in builder.asymptotic_table([1, 3, 4, 9, 20, 50, 100, 500, 1684, 5000]):
    print(f"{t:4d}  {s:4d}  {float(q):.4f}")

# for odd b the count has a closed form
for b in (3, 5, 7, 99):
    base = (b + 2) * (b + 1) // 2
    t = -(-base // 3)
    print(f"b={b}: t={t}, s(t)={builder.s_of_t(t)}, closed form {builder.closed_form_s(b)}")
