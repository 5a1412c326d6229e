import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

from secsteen._series import (
    PairSeries,
    TruncatedSeries,
    Z4Ring,
    series_decompose,
    theta_of_composite,
)


@pytest.fixture
def ring():
    return Z4Ring("a b c", "e")


def test_quotient(ring):
    """
    Make sure that coefficients are reduced mod 4 and that J is square zero
    and 2-torsion.
    """

    a, e = ring["a"], ring["e"]
    assert ring.is_zero(4 * a)
    assert ring.is_zero(e * e)
    assert ring.is_zero(2 * e)
    assert not ring.is_zero(2 * a)
    assert ring.is_even(2 * a + 2 * e * a)
    assert not ring.is_even(a)


def test_decompose(ring):
    """
    Make sure that f(x) = x + τ_f(x^2) + xθ_f(x^2).
    """

    a, b, c = ring["a"], ring["b"], ring["c"]
    f = TruncatedSeries(ring, {1: 1, 2: a, 3: 2 * c, 4: b, 6: 2 * a}, 7)
    tau, theta, xi_1 = series_decompose(f)
    assert tau == TruncatedSeries(ring, {1: a, 2: b, 3: 2 * a}, 4)
    assert theta == TruncatedSeries(ring, {1: 2 * c}, 3)
    assert ring.is_zero(xi_1 - a)


def test_decompose_errors(ring):
    """
    Make sure that series outside the group are rejected.
    """

    a = ring["a"]
    with pytest.raises(ValueError):
        series_decompose(TruncatedSeries(ring, {1: 1, 7: 2 * a}, 8))
    with pytest.raises(ValueError):
        series_decompose(TruncatedSeries(ring, {1: 1, 3: a}, 8))
    with pytest.raises(ValueError):
        series_decompose(TruncatedSeries(ring, {1: 2}, 8))
    with pytest.raises(TypeError):
        series_decompose({1: 1})


def test_theta_composite(ring):
    """
    Make sure of the composition law for θ.
    """

    a, b, c = ring["a"], ring["b"], ring["c"]
    order = 7
    f = TruncatedSeries(ring, {1: 1, 2: a, 3: 2 * c, 4: b, 6: 2 * a}, order)
    g = TruncatedSeries(ring, {1: 1, 2: b, 4: a, 5: 2 * b}, order)
    _, theta, _ = series_decompose(f.compose(g))
    assert theta == theta_of_composite(f, g)


RING = Z4Ring("a b c", "e")

_MONOMIALS = [RING.one, RING["a"], RING["b"], RING["c"], RING["a"] * RING["b"]]


@st.composite
def group_series(draw, order):
    """
    A series x + Σ c_e x^e with e = 2^k or 2^k + 2^l, the latter with even
    coefficients.
    """
    coeffs = {1: 1}
    for e in range(2, order):
        if bin(e).count("1") > 2:
            continue
        c = draw(st.integers(0, 3)) * draw(st.sampled_from(_MONOMIALS))
        if bin(e).count("1") == 2:
            c = 2 * c
        coeffs[e] = c
    return TruncatedSeries(RING, coeffs, order)


@st.composite
def series_pairs(draw):
    order = draw(st.integers(3, 10))
    return draw(group_series(order)), draw(group_series(order))


@settings(deadline=None, max_examples=80)
@given(pair=series_pairs())
def test_theta_composite_random(pair):
    """
    Make sure that the composition law for θ holds on random pairs of
    truncated series.
    """

    f, g = pair
    _, theta, _ = series_decompose(f.compose(g))
    assert theta == theta_of_composite(f, g)


def test_bar(ring):
    """
    Make sure that the bar of a composite is f̄(g(x)) + ḡ(x).
    """

    a, b = ring["a"], ring["b"]
    f = TruncatedSeries(ring, {1: 1, 2: a, 4: b}, 9)
    g = TruncatedSeries(ring, {1: 1, 2: b, 3: 2 * a}, 9)
    assert f.compose(g).bar() == f.bar().compose(g) + g.bar()


def test_effective(ring):
    """
    Make sure that (fg)^eff = f^eff g^eff when the two variable parts lie in
    a square zero 2-torsion ideal.
    """

    a, b, c, e = ring["a"], ring["b"], ring["c"], ring["e"]
    order = 7
    f = TruncatedSeries(ring, {1: 1, 2: a, 3: 2 * c, 4: b, 6: 2 * a}, order)
    g = TruncatedSeries(ring, {1: 1, 2: b, 4: a, 5: 2 * b}, order)
    f_pair = PairSeries(f, {(1, 1): e, (2, 2): a * e})
    g_pair = PairSeries(g, {(2, 1): e})
    composite = f_pair.compose(g_pair).effective()
    assert composite == f_pair.effective().compose(g_pair.effective())


def test_compose_constant(ring):
    """
    Make sure that composing with a series that has a constant term fails.
    """

    f = TruncatedSeries.identity(ring, 5)
    with pytest.raises(ValueError):
        f.compose(TruncatedSeries(ring, {0: 1, 1: 1}, 5))
