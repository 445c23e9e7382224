import pytest

from finring import construct
from finring.iso import are_isomorphic
from finring.limits import ResourceLimitError, limits
from finring.ring import is_subring_array
from finring.spec import build
from finring.subrings import (
    catalog_maxsub_product_simple,
    delta_subring,
    diagonal,
    enumerate_subrings,
    find_maximal_subring,
    homomorphically_non_isomorphic,
    identify_simple_ring,
    is_maximal_subring,
    is_simple,
    maximal_subrings,
    parallel_classes,
    prime_subring,
    split_maxsub,
    subring_closure,
)
from finring.ideals import enumerate_ideals

from conftest import brute_subsets


def brute_subrings(R):
    return brute_subsets(R, lambda arr: bool(arr[R.one]) and is_subring_array(R, arr))


def maximal_of(family, order):
    proper = [s for s in family if len(s) < order]
    return {s for s in proper if not any(s < t for t in proper)}


@pytest.mark.parametrize("text", [
    "Z(12)", "GF(4)", "GF(8)", "prod(Z(2),Z(2))", "prod(Z(2),Z(2),Z(2))",
    "UT(2,GF(2))", "prod(GF(4),Z(2))", "M(2,GF(2))", "prod(GF(4),GF(4))",
])
def test_subring_lattice_matches_brute_force(text):
    R = build(text)
    oracle = brute_subrings(R)
    lattice = enumerate_subrings(R)
    assert {frozenset(S.members) for S in lattice.subrings} == oracle
    assert {frozenset(S.members) for S in lattice.maximal_subrings()} == maximal_of(oracle, R.order)
    for S in lattice.subrings:
        if not S.is_whole:
            assert is_maximal_subring(R, S) == (frozenset(S.members) in maximal_of(oracle, R.order))


@pytest.mark.parametrize("text, total, maximal", [
    ("M(2,GF(3))", 19, 7),
    ("prod(GF(4),M(2,GF(2)))", 42, 5),
    ("prod(Z(4),Z(9))", 1, 0),
    ("GF(9)", 2, 1),
])
def test_subring_counts(text, total, maximal):
    lattice = enumerate_subrings(build(text))
    assert len(lattice.subrings) == total and len(lattice.maximal) == maximal


def test_lists_are_sorted_by_members():
    subs = enumerate_subrings(build("M(2,GF(2))")).subrings
    keys = [S.members for S in subs]
    assert keys == sorted(keys)


def test_prime_subring_and_closure():
    R = build("M(2,Z(4))")
    assert len(prime_subring(R)) == 4
    F = build("GF(8)")
    assert subring_closure(F, [2]).is_whole


def test_find_maximal_subring_agrees_with_enumeration():
    for text in ["M(2,GF(2))", "UT(2,GF(3))", "GF(9)", "prod(Z(3),Z(3))"]:
        R = build(text)
        S = find_maximal_subring(R)
        assert S is not None and S in maximal_subrings(R)
    assert find_maximal_subring(build("Z(12)")) is None


def test_subring_cap():
    R = build("M(2,GF(3))")
    with limits(max_subrings=5):
        lattice = enumerate_subrings(R)
        assert lattice.truncated
        with pytest.raises(ResourceLimitError):
            lattice.maximal_subrings()


def test_square_of_gf4_catalog():
    F = build("GF(4)")
    cat = catalog_maxsub_product_simple(F)
    assert len(cat) == 4
    assert {S.mask for S in cat} == {S.mask for S in maximal_subrings(build("prod(GF(4),GF(4))"))}


@pytest.mark.parametrize("p", [2, 3, 5])
def test_square_of_prime_field_has_only_the_diagonal(p):
    R = construct.build_cyclic(p)
    subs = maximal_subrings(construct.build_product([R, R]))
    assert [S.mask for S in subs] == [diagonal(R).mask]


def test_delta_correspondence_for_z12():
    R = build("Z(12)")
    D = diagonal(R)
    lattice = enumerate_subrings(D.parent, base=D)
    assert len(lattice.subrings) == 6 and len(lattice.maximal) == 2
    assert {delta_subring(R, I).mask for I in enumerate_ideals(R, "two-sided")} == {S.mask for S in lattice.subrings}


def test_split_catalog_for_coprime_product():
    A, B = build("Z(4)"), build("Z(9)")
    assert homomorphically_non_isomorphic(A, B)
    assert split_maxsub(A, B) == [] == maximal_subrings(build("prod(Z(4),Z(9))"))
    A, B = build("GF(4)"), build("M(2,GF(2))")
    assert homomorphically_non_isomorphic(A, B)
    assert {S.mask for S in split_maxsub(A, B)} == {S.mask for S in maximal_subrings(build("prod(GF(4),M(2,GF(2)))"))}
    assert not homomorphically_non_isomorphic(build("Z(2)"), build("Z(4)"))


def test_simple_ring_identification():
    assert identify_simple_ring(build("M(2,GF(3))")) == (2, 3)
    assert identify_simple_ring(build("GF(8)")) == (1, 8)
    with pytest.raises(ValueError):
        identify_simple_ring(build("Z(4)"))
    assert is_simple(build("M(2,GF(2))")) and not is_simple(build("UT(2,GF(2))"))
    # a simple ring presented differently still identifies as itself
    assert are_isomorphic(build("op(M(2,GF(2)))"), build("M(2,GF(2))"))


@pytest.mark.parametrize("q, n", [(2, 2), (3, 2), (2, 3), (4, 2)])
def test_parallel_class_count(q, n):
    assert len(parallel_classes(construct.build_field(q), n)) == (q ** n - 1) // (q - 1)
