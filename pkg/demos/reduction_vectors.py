"""
Reduction vectors and the closed-form Hilbert function
======================================================

Coloning a fat point scheme by a sequence of lines records how much of it
sits on each line.  When the record is strictly decreasing and uses the
whole scheme, the Hilbert function can be read off without linear algebra.
"""

from fatpoints import FatPointScheme, ProjPoint, gms_hilbert, hilbert_function, reduction_vector
from fatpoints.geometry import line_through

P1, P2, P3 = ProjPoint((1, 2, 3)), ProjPoint((4, -1, 2)), ProjPoint((2, 5, -7))
Z = FatPointScheme(((P1, 3), (P2, 3), (P3, 2)))
L12, L13, L23 = line_through(P1, P2), line_through(P1, P3), line_through(P2, P3)

d = reduction_vector(Z, [L12, L12, L13, L23])
print("reduction vector:", d.entries, "full" if d.full else "not full")

closed = gms_hilbert(d)
brute = hilbert_function(Z)
print("closed form:", closed.values, "stable", closed.stable_value)
print("oracle:     ", brute.values, "stable", brute.stable_value)
print("agree:", closed.same_function(brute))

# the order of the lines matters
print("other order:", reduction_vector(Z, [L23, L13, L12, L12]).entries)
