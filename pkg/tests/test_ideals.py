import pytest

from finring import construct
from finring.ideals import (
    annihilator,
    colon,
    d_ideal,
    eigenring,
    eigenring_order,
    enumerate_ideals,
    idealizer,
    ideal_closure,
    is_quasi_duo,
    is_similar,
    jacobson_radical,
    max_partition_report,
    maximal_ideals,
    primitive_ideals,
    similar_to,
    similarity_classes,
    transpose_ideal,
)
from finring.ring import is_additive_subgroup, is_field, is_left_ideal_array, is_right_ideal_array
from finring.spec import build

from conftest import brute_subsets

BRUTE = ["Z(12)", "UT(2,GF(2))", "prod(GF(4),Z(2))", "M(2,GF(2))", "GF(8)"]


def brute_ideals(R, side):
    def pred(arr):
        if not is_additive_subgroup(R, arr):
            return False
        if side in ("left", "two-sided") and not is_left_ideal_array(R, arr):
            return False
        if side in ("right", "two-sided") and not is_right_ideal_array(R, arr):
            return False
        return True

    return brute_subsets(R, pred)


def proper_maximal(family, order):
    proper = [s for s in family if len(s) < order]
    return {s for s in proper if not any(s < t for t in proper)}


@pytest.mark.parametrize("text", BRUTE)
@pytest.mark.parametrize("side", ["left", "right", "two-sided"])
def test_ideal_enumeration_matches_brute_force(text, side):
    R = build(text)
    oracle = brute_ideals(R, side)
    got = {frozenset(I.members) for I in enumerate_ideals(R, side)}
    assert got == oracle
    assert {frozenset(M.members) for M in maximal_ideals(R, side)} == proper_maximal(oracle, R.order)


def brute_radical(R):
    """x is in J iff 1 - rx is a unit for every r."""
    units = R.unit_mask
    out = []
    for x in range(R.order):
        if all(units >> int(R.minus(R.one, R.times(r, x))) & 1 for r in range(R.order)):
            out.append(x)
    return out


@pytest.mark.parametrize("text, size", [
    ("Z(12)", 2), ("Z(8)", 4), ("UT(2,GF(2))", 2), ("UT(2,GF(3))", 3),
    ("M(2,GF(2))", 1), ("M(2,Z(4))", 16), ("prod(Z(4),Z(9))", 6),
])
def test_jacobson_radical(text, size):
    R = build(text)
    J = jacobson_radical(R)
    assert len(J) == size
    assert list(J.members) == brute_radical(R)


def test_known_ideal_counts():
    assert len(enumerate_ideals(build("Z(12)"), "two-sided")) == 6
    T = build("M(2,GF(2))")
    assert len(enumerate_ideals(T, "two-sided")) == 2
    assert len(enumerate_ideals(T, "left")) == 5
    assert len(enumerate_ideals(build("M(2,Z(4))"), "left")) == 15


@pytest.mark.parametrize("q", [2, 3])
def test_maximal_left_ideals_of_2x2_matrices(q):
    T = build(f"M(2,GF({q}))")
    assert len(maximal_ideals(T, "left")) == q + 1
    assert len(maximal_ideals(T, "right")) == q + 1


def test_colon_and_idealizer_facts():
    T = build("M(2,GF(3))")
    for M in maximal_ideals(T, "left"):
        I = idealizer(T, M)
        for c in range(T.order):
            N = colon(T, M, c, "left")
            if c in M:
                assert N.is_whole
            else:
                assert N in maximal_ideals(T, "left")
                assert (N == M) == (c in I)


def module_isomorphic(R, M, N):
    """R/M ≅ R/N as left modules: the image c + N of 1 + M must have annihilator M."""
    return any(c not in N and colon(R, N, c, "left") == M for c in range(R.order))


@pytest.mark.parametrize("text", ["M(2,GF(2))", "UT(2,GF(2))", "UT(2,GF(3))", "prod(GF(4),M(2,GF(2)))"])
def test_similarity_matches_module_isomorphism(text):
    R = build(text)
    maxl = maximal_ideals(R, "left")
    for M in maxl:
        cls = {N.mask for N in similar_to(R, M, "left")}
        for N in maxl:
            expected = module_isomorphic(R, M, N)
            assert (N.mask in cls) == expected
            assert is_similar(R, M, N, "left")[0] == expected


def test_similarity_classes_of_matrix_rings():
    classes = similarity_classes(build("M(2,GF(2))"), "left")
    assert [len(c) for c in classes] == [3]
    classes = similarity_classes(build("M(2,GF(3))"), "left")
    assert [len(c) for c in classes] == [4]


@pytest.mark.parametrize("text, order", [("M(2,GF(2))", 2), ("M(2,GF(3))", 3), ("M(2,GF(4))", 4)])
def test_eigenrings_of_matrix_rings(text, order):
    T = build(text)
    for M in maximal_ideals(T, "left"):
        assert eigenring_order(T, M) == order
        assert is_field(eigenring(T, M))


def test_d_ideal_examples():
    F = construct.build_field(2)
    zero = F.zero_ideal()
    D = d_ideal(F, zero, (1, 0), 2)
    T = D.parent
    assert len(D) == 4
    # X (1,0)^t = 0 means the first column vanishes
    for x in D.members:
        a, b, c, d = construct.matrix_digits(F, 2)[x]
        assert a == 0 and c == 0
    assert D in maximal_ideals(T, "left")
    assert d_ideal(F, zero, (1, 1), 2) != D


def test_transpose_maps_left_to_right():
    F = construct.build_field(3)
    T = construct.build_matrix(2, F)
    rights = {M.mask for M in maximal_ideals(T, "right")}
    images = {transpose_ideal(F, 2, M).mask for M in maximal_ideals(T, "left")}
    assert images == rights


def test_primitive_and_partition_report():
    R = build("UT(2,GF(2))")
    rep = max_partition_report(R)
    assert len(rep.maxl) == len(rep.maxr) == len(rep.max) == 2
    assert not rep.maxl_prime and not rep.max_prime
    assert is_quasi_duo(R, "left") and is_quasi_duo(R, "right")
    assert {P.mask for P in primitive_ideals(R, "left")} == {M.mask for M in rep.max}
    T = build("M(2,GF(2))")
    rep = max_partition_report(T)
    assert len(rep.maxl_prime) == 3 and len(rep.max_prime) == 1 and not rep.max_lr
    assert rep.j_prime.is_whole
    for M in rep.maxl:
        assert annihilator(T, M, "left").mask == rep.max[0].mask


def test_ideal_closure_generates_principal_ideal():
    R = build("Z(12)")
    assert list(ideal_closure(R, [8], "two-sided").members) == [0, 4, 8]
