import pytest
from hypothesis import given, settings, strategies as st

from finring import construct
from finring.spec import (
    GF, Mat, Op, Prod, UT, Z, File,
    SpecRangeError, SpecSyntaxError, build, parse_spec, pretty,
)

from conftest import random_spec


def test_parse_examples():
    assert parse_spec("M(2,GF(2))") == Mat(2, GF(2))
    assert parse_spec("prod(Z(4),Z(9))") == Prod((Z(4), Z(9)))
    assert parse_spec(" op ( UT( 2 , GF(3) ) ) ") == Op(UT(2, GF(3)))


def test_range_errors():
    with pytest.raises(SpecRangeError, match="not a prime power"):
        parse_spec("GF(6)")
    for bad in ["Z(1)", "M(0,Z(2))", "UT(1,Z(2))", "prod(Z(2))", "M(2,3)", "op(2)"]:
        with pytest.raises(SpecRangeError):
            parse_spec(bad)


def test_syntax_errors_report_position():
    with pytest.raises(SpecSyntaxError) as err:
        parse_spec("M(2,GF(2)")
    assert err.value.pos == 9
    with pytest.raises(SpecSyntaxError) as err:
        parse_spec("Q(3)")
    assert "unknown constructor" in str(err.value)
    with pytest.raises(SpecSyntaxError):
        parse_spec("Z(2) extra")
    with pytest.raises(SpecSyntaxError):
        parse_spec("z(2)")


def test_file_specs(tmp_path):
    path = tmp_path / "r.json"
    construct.save_ring(build("UT(2,GF(2))"), path)
    for text in (f'file("{path}")', f"file({path})"):
        node = parse_spec(text)
        assert node == File(str(path))
        assert build(node) == build("UT(2,GF(2))")
    assert parse_spec(pretty(File("a b/c.json"))) == File("a b/c.json")


def test_fifty_seeded_round_trips(rng):
    for _ in range(50):
        node = random_spec(rng)
        assert parse_spec(pretty(node)) == node


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_round_trip_property(seed):
    import random

    node = random_spec(random.Random(seed))
    text = pretty(node)
    assert parse_spec(text) == node
    assert parse_spec(text.replace(",", " , ").replace("(", " ( ")) == node
