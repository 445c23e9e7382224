import itertools

import pytest

from finring import construct
from finring.iso import are_isomorphic, find_isomorphism, iter_isomorphisms
from finring.ring import check_homomorphism
from finring.spec import build
from finring.subrings import automorphisms


def brute_automorphism_count(R):
    """All bijections fixing 0 and 1 that respect both tables; tiny rings only."""
    rest = [x for x in range(R.order) if x not in (R.zero, R.one)]
    count = 0
    for perm in itertools.permutations(rest):
        image = list(range(R.order))
        for x, y in zip(rest, perm):
            image[x] = y
        if check_homomorphism(R, R, image):
            count += 1
    return count


@pytest.mark.parametrize("a, b", [
    ("Z(6)", "prod(Z(2),Z(3))"),
    ("Z(12)", "prod(Z(3),Z(4))"),
    ("M(2,GF(2))", "op(M(2,GF(2)))"),
    ("UT(2,GF(2))", "op(UT(2,GF(2)))"),
    ("prod(GF(4),Z(2))", "prod(Z(2),GF(4))"),
])
def test_isomorphic_pairs(a, b):
    R, S = build(a), build(b)
    f = find_isomorphism(R, S)
    assert f is not None and f.is_isomorphism
    assert check_homomorphism(R, S, f.image)


@pytest.mark.parametrize("a, b", [
    ("GF(4)", "Z(4)"),
    ("GF(4)", "prod(Z(2),Z(2))"),
    ("Z(8)", "prod(Z(2),Z(4))"),
    ("UT(2,GF(2))", "prod(Z(2),Z(4))"),
])
def test_non_isomorphic_pairs(a, b):
    assert not are_isomorphic(build(a), build(b))


@pytest.mark.parametrize("text", ["GF(4)", "GF(8)", "prod(Z(2),Z(2),Z(2))", "UT(2,GF(2))", "prod(GF(4),Z(2))"])
def test_automorphism_count_matches_brute_force(text):
    R = build(text)
    assert len(list(iter_isomorphisms(R, R))) == brute_automorphism_count(R)


@pytest.mark.parametrize("text, count", [
    ("M(2,GF(2))", 6),   # inner automorphisms, GL(2,2)/center
    ("M(2,GF(3))", 24),  # PGL(2,3)
    ("GF(9)", 2),
    ("GF(8)", 3),
])
def test_automorphism_group_orders(text, count):
    auts = automorphisms(build(text))
    assert len(auts.maps) == count


def test_relabelled_copy_is_found():
    R = build("UT(2,GF(3))")
    perm = [0] + list(reversed(range(1, R.order)))
    S = construct.relabel(R, perm)
    assert are_isomorphic(R, S)
