import pytest

from secsteen._exceptions import ParseError, RingError
from secsteen.d0 import d0_sq, d0_y
from secsteen.d1 import iota, left_act, mu0, normalize_u
from secsteen.parser import (
    Atom,
    ElementDoc,
    evaluate,
    format_element,
    infer_ring,
    parse,
    ring_of,
    tokenize,
)
from secsteen.secondary import EHatElt, adem_element, mu0_x_gen, x_gen
from secsteen.steenrod import Sq, TensorAA


def test_tokenize():
    """
    Make sure that tokens carry their character offsets.
    """

    tokens = tokenize("Sq^1 * Y[-1,0]")
    assert [t.value for t in tokens] == ["Sq", "^", 1, "*", "Y", "[", "-", 1, ",", 0, "]", None]
    assert tokens[3].position == 5
    assert tokens[-1].type == "END"

    with pytest.raises(ParseError) as e:
        tokenize("Sq(1)$")
    assert e.value.position == 5


def test_parse():
    """
    Make sure of the syntax tree of a small expression.
    """

    expr = parse("2*Sq(0,1) + U[-1,0]")
    assert len(expr.terms) == 2
    assert expr.terms[0].factors[0] == Atom("INT", (2,), 0)
    assert expr.terms[0].factors[1] == Atom("Sq", (0, 1), 2)
    assert expr.terms[1].factors[0] == Atom("U", (-1, 0), 12)


@pytest.mark.parametrize(
    "text, position",
    [("Sq(1", 4), ("Sq(1)+", 6), ("Sq(1) Sq(2)", 6), ("P(1)", 3), ("Y[0]", 3)],
)
def test_parse_errors(text, position):
    """
    Make sure that syntax errors report the offending position.
    """

    with pytest.raises(ParseError) as e:
        parse(text)
    assert e.value.position == position


def test_infer_ring():
    """
    Make sure that the smallest ring containing every atom is chosen.
    """

    assert infer_ring(parse("Sq(1)*Q0 + P(2,1)")) == "A"
    assert infer_ring(parse("Y[-1,0]*Sq(1)")) == "D0"
    assert infer_ring(parse("u0*Sq(2)")) == "D1"
    assert infer_ring(parse("I*Sq(2) + U[0,1]")) == "D1"
    assert infer_ring(parse("u0*X[0,0] + Y[-1,0]")) == "E0"


def test_evaluate():
    """
    Make sure that expressions evaluate in their rings.
    """

    assert evaluate("Sq(1)*Sq(2)") == Sq(3)
    assert evaluate("Q1 + P(2,1)") == Sq(0, 1) + Sq(0, 2)
    assert evaluate("Sq^1*Sq^1") == 0
    assert evaluate("Sq^1*Sq^1", "D0") == d0_sq(2, coeff=2) + d0_y(-1, 0)
    assert evaluate("3*Sq(1) + Sq(1)", "D0") == 0
    assert evaluate("Y[0,0]") == d0_sq(0, 1, coeff=2)
    assert evaluate("Sq(2)*u0") == left_act(Sq(2), mu0())
    assert evaluate("Sq(2)*u0") == mu0(Sq(2)) + iota(Sq(1))
    assert evaluate("U[1,0]") == normalize_u(1, 0)
    assert evaluate("I*Sq(2) + I*Sq(2)") == 0
    assert evaluate("u0*X[0,0]*Sq(1)") == mu0_x_gen(0, 0, (1,))
    assert evaluate("Sq^1*Sq^1", "E0") == adem_element(1, 1)
    assert evaluate("X[-1,0] + Y[-1,0]") == x_gen(-1, 0) + EHatElt.from_d0(d0_y(-1, 0))


@pytest.mark.parametrize(
    "text, ring",
    [
        ("Y[-1,0]", "A"),
        ("U[0,1]*U[0,1]", "D1"),
        ("Sq(1)", "D1"),
        ("u0*I", "D1"),
        ("u0*Sq(1)", "E0"),
        ("X[0,1]", "D0"),
    ],
)
def test_ring_errors(text, ring):
    """
    Make sure that atoms outside the ring and invalid products are rejected.
    """

    with pytest.raises(RingError):
        evaluate(text, ring)


def test_unknown_ring():
    """
    Make sure that an unknown ring tag is rejected.
    """

    with pytest.raises(ValueError):
        evaluate("Sq(1)", "E1")


@pytest.mark.parametrize(
    "element, text",
    [
        (Sq(2) * Sq(1), "Sq(0,1) + Sq(3)"),
        (Sq(), "1"),
        (d0_sq(1) * d0_sq(1), "2*Sq(2) + Y[-1,0]"),
        (mu0(Sq(2)) + iota(Sq(1)), "I*Sq(1) + u0*Sq(2)"),
        (normalize_u(0, 1, (1,)), "U[0,1]*Sq(1)"),
        (x_gen(-1, 0) + mu0_x_gen(0, 0), "X[-1,0] + u0*X[0,0]"),
    ],
)
def test_format(element, text):
    """
    Make sure that elements print into the expression grammar and read back.
    """

    assert format_element(element) == text
    assert evaluate(text, ring_of(element)) == element


def test_element_doc():
    """
    Make sure that element documents survive JSON.
    """

    for element in (
        Sq(2) * Sq(1),
        d0_sq(1) * d0_sq(1),
        mu0(Sq(5)) + normalize_u(1, 0),
        adem_element(2, 2),
    ):
        doc = ElementDoc.from_element(element, "test")
        assert doc.to_element() == element
        assert ElementDoc.from_json(doc.to_json()) == doc
        assert doc.degree == element.degree()

    doc = ElementDoc.from_element(d0_sq(2) + d0_sq(1))
    assert doc.degree is None
    assert doc.to_dict()["ring"] == "D0"

    with pytest.raises(ValueError):
        ElementDoc.from_json("{not json")
    with pytest.raises(TypeError):
        ring_of(TensorAA())
