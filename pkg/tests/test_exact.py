from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hqt.exact import (
    CycMatrix,
    CycNum,
    DivisionByZero,
    IncompatibleOrders,
    NotADivisor,
    RowSpace,
    Singular,
    embed,
    is_primitive_root,
    restrict,
    roots_of_unity,
    solve_power,
)

z = CycNum.zeta


def test_conjugate_roots_cancel():
    assert z(4, 1) + z(4, 3) == 0


def test_inverse_of_one_plus_zeta3():
    a = 1 + z(3, 1)
    assert a.inv() == 1 + z(3, 2)
    assert a * a.inv() == 1


def test_zeta8_to_the_eighth():
    assert z(8, 1) ** 8 == 1
    assert z(8, 1) ** 4 == -1
    assert z(8, 1) ** -1 == z(8, 7)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        CycNum.zero(8).inv()
    with pytest.raises(DivisionByZero):
        CycNum.one(8) / CycNum.zero(8)


def test_incompatible_orders():
    with pytest.raises(IncompatibleOrders):
        z(3, 1) * z(4, 1)
    # equality still compares inside a common field
    assert z(3, 0) == z(4, 0)


def test_rational_mixing():
    a = z(8, 1)
    assert a * 2 == a + a
    assert (a / 2) * Fraction(2) == a
    assert 1 - a == -(a - 1)


def test_embed_examples():
    assert embed(z(4, 1), 8) == z(8, 2)
    assert embed(CycNum.rational(2, -1), 8) == z(8, 4)
    assert embed(1 + z(3, 1), 12) == 1 + z(12, 4)
    with pytest.raises(NotADivisor):
        embed(z(3, 1), 8)


def test_restrict_roundtrip():
    v = 1 + z(12, 4)
    assert restrict(v, 3) == 1 + z(3, 1)
    with pytest.raises(NotADivisor):
        restrict(z(8, 1), 4)


def test_roots_of_unity_examples():
    assert roots_of_unity(8, 4) == [z(8, 0), z(8, 2), z(8, 4), z(8, 6)]
    assert roots_of_unity(8, 3) == [z(8, 0)]
    six = roots_of_unity(12, 6)
    assert len(six) == 6
    # brute force over mu_12
    assert sorted(six, key=CycNum.sort_key) == sorted(
        [z(12, k) for k in range(12) if z(12, k) ** 6 == 1], key=CycNum.sort_key
    )


def test_roots_of_unity_odd_order_field():
    # Q(z_3) contains the sixth roots of unity
    assert len(roots_of_unity(3, 6)) == 6
    assert all(r**6 == 1 for r in roots_of_unity(3, 6))


def test_primitive_root_examples():
    assert is_primitive_root(z(8, 2), 4)
    assert is_primitive_root(CycNum.one(8), 1)
    assert not is_primitive_root(z(8, 4), 4)


def test_solve_power_is_complete():
    M = 16
    for e in range(M):
        c = z(M, e)
        for k in (1, 2, 3, 4, 8):
            brute = sorted((x for x in range(M) if (k * x - e) % M == 0))
            assert [r.log() for r in solve_power(c, k)] == brute


def test_rank_examples():
    assert CycMatrix.from_ints(8, [[1, 0], [0, 1]]).rank() == 2
    assert CycMatrix.from_ints(8, [[1, 1], [1, 1]]).rank() == 1


def test_inverse_and_solve():
    A = CycMatrix([[z(8, 1), CycNum.one(8)], [CycNum.zero(8), z(8, 3)]])
    B = A.inverse()
    prod = [[sum((A[i, k] * B[k, j] for k in range(2)), CycNum.zero(8)) for j in range(2)] for i in range(2)]
    assert prod == [[1, 0], [0, 1]]
    x = A.solve([CycNum.one(8), CycNum.one(8)])
    assert A[0, 0] * x[0] + A[0, 1] * x[1] == 1
    with pytest.raises(Singular):
        CycMatrix.from_ints(8, [[1, 1], [1, 1]]).inverse()


def test_json_roundtrip():
    v = Fraction(1, 3) + z(8, 3)
    obj = v.to_json()
    assert obj == {"order": 8, "coeffs": ["1/3", "0", "0", "1"]}
    assert CycNum.from_json(obj) == v


# ---------------------------------------------------------------------------
# properties

ORDERS = st.sampled_from([3, 4, 5, 8, 12, 16])


@st.composite
def elements(draw, order=None):
    M = draw(ORDERS) if order is None else order
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=1, max_size=M))
    return CycNum.from_coeffs(M, coeffs)


@st.composite
def triples(draw):
    M = draw(ORDERS)
    return draw(elements(M)), draw(elements(M)), draw(elements(M))


@settings(max_examples=60, deadline=None)
@given(triples())
def test_field_axioms(t):
    a, b, c = t
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    if a:
        assert a * a.inv() == 1


@settings(max_examples=40, deadline=None)
@given(triples(), st.sampled_from([2, 3]))
def test_embed_is_ring_homomorphism(t, k):
    a, b, _ = t
    M = a.order * k
    assert embed(a * b, M) == embed(a, M) * embed(b, M)
    assert embed(a + b, M) == embed(a, M) + embed(b, M)


@settings(max_examples=40, deadline=None)
@given(elements())
def test_canonical_form_idempotent(a):
    again = CycNum.from_coeffs(a.order, a.coeffs)
    assert again.terms == a.terms
    assert hash(again) == hash(a)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_rank_nullity(r, c, data):
    M = 8
    m = CycMatrix([[data.draw(elements(M)) for _ in range(c)] for _ in range(r)])
    null = m.nullspace()
    assert m.rank() + len(null) == c
    for v in null:
        for row in m.entries:
            assert sum((x * y for x, y in zip(row, v)), CycNum.zero(M)) == 0


def test_rowspace_rank_matches_matrix_rank():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    sp = RowSpace()
    for r in rows:
        sp.add({j: CycNum.rational(4, v) for j, v in enumerate(r) if v})
    assert sp.rank == CycMatrix.from_ints(4, rows).rank() == 2
