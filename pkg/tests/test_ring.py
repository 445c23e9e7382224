import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from finring import construct
from finring.limits import ResourceLimitError, limits
from finring.ring import (
    RingAxiomError,
    center,
    is_field,
    nilpotents,
    units,
    validate,
    validate_tables,
)
from finring.spec import build

from conftest import SMALL_SPECS, naive_axioms_hold


@pytest.mark.parametrize("text", SMALL_SPECS)
def test_constructed_rings_satisfy_axioms(text):
    R = build(text)
    assert validate(R) == R
    assert naive_axioms_hold(R)


def test_cyclic_tables():
    R = construct.build_cyclic(6)
    assert R.add[4, 5] == 3 and R.mul[4, 5] == 2
    assert R.one == 1 and R.zero == 0 and R.characteristic == 6


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25])
def test_fields_are_fields(q):
    F = construct.build_field(q)
    assert F.order == q and is_field(F)
    assert len(units(F)) == q - 1


def test_field_modulus_choice():
    assert construct.field_modulus(2, 2) == (1, 1, 1)
    assert construct.field_modulus(2, 3) == (1, 0, 1, 1)
    assert construct.field_modulus(3, 2) == (1, 0, 1)


def test_gf4_multiplication():
    # x = 2, x + 1 = 3, and x^2 = x + 1
    F = construct.build_field(4)
    assert F.mul[2, 2] == 3 and F.mul[2, 3] == 1 and F.add[2, 3] == 1


def test_matrix_encoding_and_product():
    T = construct.build_matrix(2, construct.build_field(2))
    e12 = construct.matrix_index([0, 1, 0, 0], 2)
    e21 = construct.matrix_index([0, 0, 1, 0], 2)
    e11 = construct.matrix_index([1, 0, 0, 0], 2)
    assert e12 == 4 and e11 == 8
    assert T.mul[e12, e21] == e11
    assert T.mul[e21, e12] == construct.matrix_index([0, 0, 0, 1], 2)
    assert T.one == construct.matrix_index([1, 0, 0, 1], 2)


def test_matrix_ring_facts():
    T = construct.build_matrix(2, construct.build_field(2))
    assert T.order == 16 and not T.is_commutative
    assert len(center(T)) == 2
    assert len(units(T)) == 6
    # nilpotent 2x2 matrices over GF(2): zero plus the three of rank one with zero trace and determinant
    assert len(nilpotents(T)) == 4


def test_upper_triangular_and_product():
    U = construct.build_upper_triangular(2, construct.build_field(3))
    assert U.order == 27 and len(nilpotents(U)) == 3
    P = construct.build_product([construct.build_cyclic(4), construct.build_cyclic(9)])
    assert P.order == 36 and P.characteristic == 36
    assert P.one == construct.pair_index(9, 1, 1)


def test_opposite_reverses_products():
    U = construct.build_upper_triangular(2, construct.build_field(2))
    O = construct.build_opposite(U)
    assert np.array_equal(O.mul, U.mul.T) and O.label == "op(UT(2,GF(2)))"


def test_quotient_of_z12():
    R = construct.build_cyclic(12)
    I = R.subset([0, 4, 8])
    Q, proj = construct.quotient(R, I)
    assert Q.order == 4 and proj.is_homomorphism
    assert proj(5) == 1 and proj(4) == 0


def test_json_round_trip(tmp_path):
    R = build("UT(2,GF(3))")
    path = tmp_path / "ring.json"
    construct.save_ring(R, path)
    S = construct.load_ring(path)
    assert S == R


def _corrupt(R, a, b, value):
    mul = R.mul.copy()
    mul[a, b] = value
    return mul


def test_rejects_broken_associativity():
    R = construct.build_cyclic(5)
    with pytest.raises(RingAxiomError) as err:
        validate_tables(5, R.add, _corrupt(R, 2, 3, 0), R.one)
    assert err.value.axiom in {"multiplication associative", "left distributive", "right distributive"}
    assert len(err.value.witness) == 3


def test_rejects_zero_ring_and_bad_shapes():
    with pytest.raises(RingAxiomError):
        validate_tables(1, [[0]], [[0]], 0)
    with pytest.raises(RingAxiomError):
        validate_tables(2, [[0, 1]], [[0, 0], [0, 1]], 1)
    with pytest.raises(RingAxiomError) as err:
        validate_tables(2, [[0, 1], [1, 0]], [[0, 0], [0, 0]], 1)
    assert err.value.axiom == "one is a two-sided identity"


def test_rejects_noncommutative_addition():
    add = [[0, 1, 2], [1, 2, 0], [2, 1, 1]]
    with pytest.raises(RingAxiomError) as err:
        validate_tables(3, add, construct.build_cyclic(3).mul, 1)
    assert err.value.axiom == "addition commutative"


def test_order_cap():
    with limits(max_order=10):
        with pytest.raises(ResourceLimitError) as err:
            construct.build_matrix(2, construct.build_field(2))
    assert err.value.needed == 16 and err.value.limit == 10


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 30), st.data())
def test_validator_agrees_with_naive_check_on_mutations(n, data):
    R = construct.build_cyclic(n)
    a = data.draw(st.integers(0, n - 1))
    b = data.draw(st.integers(0, n - 1))
    v = data.draw(st.integers(0, n - 1))
    mul = _corrupt(R, a, b, v)
    try:
        validate_tables(n, R.add, mul, R.one)
        accepted = True
    except RingAxiomError:
        accepted = False
    if n <= 12:
        from finring.ring import FiniteRing

        naive = naive_axioms_hold(FiniteRing(n, R.add, mul, R.one, R.zero, "mutant"))
        assert accepted == naive
    assert accepted == (v == R.mul[a, b])
