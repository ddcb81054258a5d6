import pytest
from hypothesis import given
from hypothesis import strategies as st

from fatpoints.errors import NotFullReduction, NotStrictlyDecreasing
from fatpoints.geometry import ProjLine, ProjPoint, line_through, random_arrangement
from fatpoints.scheme import (
    FatPointScheme,
    ReductionVector,
    colon_by_line,
    gms_hilbert,
    line_intersection_degree,
    reduction_vector,
    scheme_degree,
    totally_reduces,
)

P1, P2, P3 = ProjPoint((1, 2, 3)), ProjPoint((4, -1, 2)), ProjPoint((2, 5, -7))
L12, L13, L23 = line_through(P1, P2), line_through(P1, P3), line_through(P2, P3)
TRIANGLE = FatPointScheme(((P1, 3), (P2, 3), (P3, 2)))


def test_degree():
    assert scheme_degree(TRIANGLE) == 15
    assert scheme_degree(FatPointScheme(((P1, 2),))) == 3
    assert scheme_degree(FatPointScheme()) == 0


def test_colon_by_line():
    assert colon_by_line(TRIANGLE, L12) == FatPointScheme(((P1, 2), (P2, 2), (P3, 2)))
    assert colon_by_line(FatPointScheme(((P1, 1), (P3, 2))), L12) == FatPointScheme(((P3, 2),))
    far = ProjLine((1, 1, 2))
    assert colon_by_line(TRIANGLE, far) == TRIANGLE


def test_line_intersection_degree():
    assert line_intersection_degree(L12, TRIANGLE) == 6
    assert line_intersection_degree(ProjLine((1, 1, 2)), TRIANGLE) == 0
    assert line_intersection_degree(L12, colon_by_line(TRIANGLE, L12)) == 4


def test_reduction_vector():
    d = reduction_vector(TRIANGLE, [L12, L12, L13, L23])
    assert d == ReductionVector((6, 4, 3, 2), True)
    assert d.to_json() == {"entries": [6, 4, 3, 2], "full": True}
    empty = reduction_vector(FatPointScheme(), [L12, L13])
    assert empty.entries == (0, 0) and empty.full
    one = reduction_vector(FatPointScheme(((P1, 2),)), [L12])
    assert one.entries == (2,) and not one.full


def test_reduction_vector_depends_on_order():
    other = reduction_vector(TRIANGLE, [L23, L13, L12, L12])
    assert other.full and other.entries != (6, 4, 3, 2)


def test_totally_reduces():
    assert totally_reduces(TRIANGLE, [L12, L12, L13, L23])
    assert not totally_reduces(FatPointScheme(((P1, 2),)), [L12])
    assert totally_reduces(FatPointScheme(), [])


@given(st.lists(st.integers(1, 3), min_size=1, max_size=4), st.integers(0, 50))
def test_colon_drops_degree_by_line_degree(mults, seed):
    arr = random_arrangement(3, seed)
    pts = list(arr.intersections().values()) + [ProjPoint((1, 1, 1))]
    Z = FatPointScheme(tuple(zip(pts, mults)))
    for l in arr:
        drop = scheme_degree(Z) - scheme_degree(colon_by_line(Z, l))
        assert drop == line_intersection_degree(l, Z)
    # m lines through each m P always reduce Z completely
    O = ProjPoint((0, 0, 1))
    lines = [line_through(p, O) for p, m in Z.points for _ in range(m)]
    d = reduction_vector(Z, lines)
    assert d.full and sum(d.entries) == scheme_degree(Z)


def test_gms_examples():
    H = gms_hilbert(ReductionVector((6, 4, 3, 2), True))
    assert H.values == (1, 3, 6, 10, 14, 15) and H.stable_value == 15
    assert gms_hilbert((1,)).values == (1,)
    H = gms_hilbert((3, 2, 1))
    assert H.padded(5) == (1, 3, 6, 6, 6) and H.stable_value == 6


def test_gms_refusals():
    with pytest.raises(NotStrictlyDecreasing):
        gms_hilbert((3, 3))
    with pytest.raises(NotFullReduction):
        gms_hilbert(ReductionVector((2,), False))


@given(st.lists(st.integers(1, 30), min_size=1, max_size=8, unique=True))
def test_gms_shape(entries):
    d = sorted(entries, reverse=True)
    H = gms_hilbert(d)
    assert H.stable_value == sum(d)
    assert all(a <= b for a, b in zip(H.values, H.values[1:]))
    assert H(0) == 1


def test_scheme_json_and_equality():
    assert FatPointScheme.from_json(TRIANGLE.to_json()) == TRIANGLE
    assert FatPointScheme(((P2, 3), (P1, 3), (P3, 2))) == TRIANGLE
    assert TRIANGLE.to_json()["points"][0] == {"coords": ["1", "2", "3"], "mult": 3}
    assert TRIANGLE.count(3) == 2 and TRIANGLE.multiplicity(P3) == 2
    with pytest.raises(ValueError):
        FatPointScheme(((P1, 0),))
    with pytest.raises(ValueError):
        FatPointScheme(((P1, 1), (ProjPoint((2, 4, 6)), 2)))
