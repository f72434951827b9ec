from fractions import Fraction

import pytest

from quivercoalg.corpus import named_poset, named_quiver
from quivercoalg.scalars import QQ, PrimeField
from quivercoalg.textio import (
    ParseError,
    parse_algebra_text,
    parse_element,
    parse_functional,
    parse_plain_combination,
    parse_poset_text,
    parse_quiver_text,
    parse_rep_text,
    poset_to_text,
    quiver_to_text,
)

QUIVER_TEXT = """
# a commented line
quiver
vertex a
vertex b
arrow x a b
"""

FAMILY_TEXT = """
family cycle:3
truncate 9
"""

POSET_TEXT = """
poset
element p
element q
cover p q
"""

REP_TEXT = """
rep
dim a 2
dim b 1
map x 1/2 ; 3
"""

ALGEBRA_TEXT = """
algebra
basis u v x
idempotents u v
mul u u = u
mul v v = v
mul u x = x
mul x v = x
"""


def test_parse_quiver():
    parsed = parse_quiver_text(QUIVER_TEXT)
    assert not parsed.is_family
    q = parsed.quiver
    assert q.vertices == ("a", "b")
    assert len(q.arrows) == 1
    round_trip = parse_quiver_text(quiver_to_text(q)).quiver
    assert round_trip.vertices == q.vertices


def test_parse_family():
    parsed = parse_quiver_text(FAMILY_TEXT)
    assert parsed.is_family
    assert parsed.family.kind == "cycle" and parsed.family.param == 3
    assert parsed.truncation == 9
    quiver = parsed.materialize(0)
    assert len(quiver.vertices) == 3


def test_parse_quiver_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        parse_quiver_text("quiver\nvertex a\narrow x a")
    assert "line 3" in str(err.value)
    with pytest.raises(ParseError):
        parse_quiver_text("")


def test_parse_poset():
    parsed = parse_poset_text(POSET_TEXT)
    poset = parsed.poset
    assert poset.less_equal("p", "q")
    text = poset_to_text(named_poset("diamond"))
    again = parse_poset_text(text).poset
    assert len(again.intervals()) == 9


def test_parse_poset_family():
    parsed = parse_poset_text("family natchain\ntruncate 4")
    assert parsed.is_family
    assert len(parsed.materialize(0).elements) == 5


def test_parse_rep():
    q = named_quiver("single_arrow")
    rep = parse_rep_text(REP_TEXT, q)
    assert rep.dims == {"a": 2, "b": 1}
    assert rep.maps["x"] == ((Fraction(1, 2),), (Fraction(3),))


def test_parse_rep_defaults_to_zero_map():
    q = named_quiver("line3")
    rep = parse_rep_text("rep\ndim a 1\ndim b 1\ndim c 1\nmap x 1", q)
    assert rep.maps["y"] == ((QQ.zero,),)


def test_parse_algebra():
    algebra = parse_algebra_text(ALGEBRA_TEXT)
    assert algebra.basis == ("u", "v", "x")
    assert algebra.idempotents == ("u", "v")
    product = algebra.basis_product("u", "x")
    assert product.coeff("x") == QQ.one


def test_parse_algebra_rejects_non_associative():
    bad = """
algebra
basis e x
idempotents e
mul e e = e
mul e x = x
mul x x = e
"""
    with pytest.raises(ParseError):
        parse_algebra_text(bad)


def test_parse_plain_combination():
    combo = parse_plain_combination("2*u + 1/3*v - w")
    assert combo.coeff("u") == Fraction(2)
    assert combo.coeff("v") == Fraction(1, 3)
    assert combo.coeff("w") == Fraction(-1)
    assert parse_plain_combination("0").is_zero()
    with pytest.raises(ParseError):
        parse_plain_combination("u v")


def test_parse_element_expressions():
    q = named_quiver("line3")
    element = parse_element("3*[x.y] - 1/2*[a]", q)
    assert element.coeff(q.path_from_labels(["x", "y"])) == Fraction(3)
    assert element.coeff(q.vertex_path("a")) == Fraction(-1, 2)
    assert parse_element("0", q).is_zero()
    bare = parse_element("[x]", q)
    assert bare.coeff(q.arrow_path("x")) == Fraction(1)
    with pytest.raises(ParseError):
        parse_element("[nope]", q)
    with pytest.raises(ParseError):
        parse_element("[x] [y]", q)


def test_parse_element_in_prime_field():
    q = named_quiver("line3")
    field = PrimeField(7)
    element = parse_element("3*[x]", q, field)
    assert element.coeff(q.arrow_path("x")) == field.of(3)


def test_parse_functional_expressions():
    q = named_quiver("line3")
    f = parse_functional("dual{[x]:3, [a]:-1}", q, q)
    assert f(q.arrow_path("x")) == Fraction(3)
    assert f(q.vertex_path("a")) == Fraction(-1)
    gamma = parse_functional("rule:gamma", q, q)
    assert gamma(q.path_from_labels(["x", "y"])) == QQ.one
    loop = named_quiver("loop")
    ev = parse_functional("rule:eval(2)", loop, loop)
    two_steps = loop.path_from_labels(["x", "x"])
    assert ev(two_steps) == Fraction(4)
    starts = parse_functional("rule:starts-at(a)", q, q)
    assert starts(q.vertex_path("a")) == QQ.one
    assert not starts(q.vertex_path("b"))
    with pytest.raises(ParseError):
        parse_functional("rule:unknown", q, q)
