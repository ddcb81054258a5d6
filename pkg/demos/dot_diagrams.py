"""
Valid first differences and their dot diagrams
==============================================

A first difference is valid when it climbs 1, 2, ..., alpha and never
rises again.  Its conjugate counts the dots in each row of the diagram.
"""

from fatpoints import conjugate, render_dot_diagram, validate_delta
from fatpoints.errors import InvalidDelta

d = validate_delta((1, 2, 3, 4, 4, 3, 1))
print(f"delta = {d}, alpha = {d.alpha}, sigma = {d.sigma}")
print(render_dot_diagram(d))

# rows from the bottom up
print("conjugate:", conjugate(d).parts)

# a sequence that jumps out of the staircase is rejected, with the place it breaks
try:
    validate_delta((1, 3, 2))
except InvalidDelta as exc:
    print(f"rejected: {exc} (condition {exc.condition}, index {exc.index})")
