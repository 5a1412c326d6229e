import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

from secsteen.d0 import (
    D0Elt,
    d0_product_dual,
    d0_sq,
    d0_y,
    dual_basis,
    dual_coproduct,
    pair_d0,
    phi_eff,
    is_relation,
    pi,
    relation_basis,
    sigma,
    y_degree,
    y_left_action,
)
from secsteen.steenrod import AElt, Sq, delta, milnor_basis, p_element, q_element, seq_add


def d0_basis(max_degree):
    keys = []
    for d in range(max_degree + 1):
        keys.extend(("Sq", R) for R in milnor_basis(d))
        keys.extend(key for key in relation_basis(d) if key[0] == "Y")
    return [D0Elt({key: 1}) for key in keys]


small_d0 = st.sampled_from(d0_basis(6))


def test_coefficients():
    """
    Make sure that Sq-terms are read mod 4 and Y-terms mod 2.
    """

    assert d0_sq(1, coeff=4) == 0
    assert d0_sq(1, coeff=5) == d0_sq(1)
    assert d0_y(-1, 0).scale(2) == 0
    assert d0_sq(2, coeff=2).degree() == 2
    assert d0_y(-1, 0).degree() == y_degree(-1, 0) == 2


def test_y_indices():
    """
    Make sure that Y is symmetric and that Y_{k,k} = 2Sq(Δ_{k+2}).
    """

    assert d0_y(1, -1) == d0_y(-1, 1)
    assert d0_y(0, 0) == d0_sq(0, 1, coeff=2)
    assert d0_y(-1, -1) == d0_sq(1, coeff=2)

    with pytest.raises(ValueError):
        d0_y(-2, 0)


def test_square():
    """
    Make sure that Sq^1Sq^1 = 2Sq^2 + Y_{-1,0}.
    """

    assert d0_sq(1) * d0_sq(1) == d0_sq(2, coeff=2) + d0_y(-1, 0)


def test_y_commutator():
    """
    Make sure that Sq^1 Y_{-1,0} = Y_{-1,0} Sq^1 + 2Sq(0,1).
    """

    y = d0_y(-1, 0)
    assert d0_sq(1) * y == y * d0_sq(1) + d0_sq(0, 1, coeff=2)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_q_products(k):
    """
    Make sure that Q_kQ_0 = Sq(Δ_1 + Δ_{k+1}) + Y_{-1,k}, that Q_0Q_k has no
    Y-term and that [Q_0, Q_k] = Y_{-1,k}.
    """

    q0 = sigma(q_element(0))
    qk = sigma(q_element(k))
    R = seq_add(delta(1), delta(k + 1))
    assert qk * q0 == d0_sq(*R) + d0_y(-1, k)
    assert q0 * qk == d0_sq(*R)
    assert q0 * qk - qk * q0 == d0_y(-1, k)
    assert qk * q0 - q0 * qk == d0_y(-1, k)


@pytest.mark.parametrize("t, s", [(t, s) for t in range(1, 5) for s in range(t)])
def test_p_squares(t, s):
    """
    Make sure of the squares of P_t^s in D_0.
    """

    p = sigma(p_element(t, s))
    expected = sigma(p_element(t, s + 1)).scale(2)
    if s + 1 == t:
        R = tuple(((1 << s) - 1) * r for r in delta(t))
        expected = expected + d0_y(t - 2, 2 * s, R)
    assert p * p == expected


def test_p_square_values():
    """
    Make sure of a few squares written out in full.
    """

    assert sigma(Sq(0, 2)) * sigma(Sq(0, 2)) == d0_sq(0, 4, coeff=2) + d0_y(0, 2, (0, 1))
    assert sigma(Sq(0, 0, 4)) * sigma(Sq(0, 0, 4)) == d0_sq(0, 0, 8, coeff=2) + d0_y(
        1, 4, (0, 0, 3)
    )
    assert sigma(Sq(0, 0, 1)) * sigma(Sq(0, 0, 1)) == d0_sq(0, 0, 2, coeff=2)


def test_product_dual():
    """
    Make sure that the matrix and the duality products agree up to degree 10.
    """

    basis = d0_basis(10)
    for x in basis:
        for y in basis:
            if x.degree() + y.degree() <= 10:
                assert x * y == d0_product_dual(x, y)


def test_projection():
    """
    Make sure that π(σ(a)σ(b)) = ab up to degree 10.
    """

    for d in range(11):
        for e in range(d + 1):
            for R in milnor_basis(e):
                for S in milnor_basis(d - e):
                    a, b = AElt({R: 1}), AElt({S: 1})
                    assert pi(sigma(a) * sigma(b)) == a * b


def test_relations_square_zero():
    """
    Make sure that the product of two relations vanishes.
    """

    for d in range(9):
        for e in range(d + 1):
            for k1 in relation_basis(e):
                for k2 in relation_basis(d - e):
                    x = D0Elt({k1: 2 if k1[0] == "Sq" else 1})
                    y = D0Elt({k2: 2 if k2[0] == "Sq" else 1})
                    assert is_relation(x) and is_relation(y)
                    assert x * y == 0


@settings(deadline=None, max_examples=50)
@given(x=small_d0, y=small_d0, z=small_d0)
def test_associativity(x, y, z):
    """
    Make sure that the product of D_0 is associative.
    """

    assert (x * y) * z == x * (y * z)


@pytest.mark.parametrize("k, l", [(-1, 0), (-1, 1), (0, 1)])
def test_y_left_action(k, l):
    """
    Make sure that the closed form of a Y_{k,l} agrees with the product.
    """

    for d in range(6):
        for R in milnor_basis(d):
            a = AElt({R: 1})
            assert y_left_action(a, k, l) == sigma(a) * d0_y(k, l)
            assert y_left_action(a, k, l, (1,)) == sigma(a) * d0_y(k, l, (1,))

    with pytest.raises(ValueError):
        y_left_action(Sq(1), 1, 0)


def test_dual_coproduct():
    """
    Make sure that the coproduct of D_0* is primitive on ξ_1 and that the
    index rules for 2ξ_{k,l} are enforced.
    """

    one = ("xi", ())
    xi1 = ("xi", (1,))
    assert dual_coproduct(one) == {(one, one): 1}
    assert dual_coproduct(xi1) == {(xi1, one): 1, (one, xi1): 1}

    # The counit picks out m itself in both slots.
    for m in dual_basis(5):
        table = dual_coproduct(m)
        assert table.get((m, one), 0) == 1
        assert table.get((one, m), 0) == 1

    with pytest.raises(ValueError):
        dual_coproduct(("2xi", 1, 1, ()))


def test_pairing():
    """
    Make sure that Y_{k,l} pairs to 2 with 2ξ_{k+1,l+1}.
    """

    x = d0_sq(2, coeff=2) + d0_y(-1, 0)
    assert pair_d0(x, ("xi", (2,))) == 2
    assert pair_d0(x, ("2xi", 0, 1, ())) == 2
    assert pair_d0(x, ("xi", (0, 1))) == 0


def test_phi_eff():
    """
    Make sure that φ sends U_{k,l} to Y_{k,l} and U_{k,k} to 2Q_{k+1}.
    """

    assert phi_eff(0, 2) == d0_y(0, 2)
    assert phi_eff(2, 0) == d0_y(0, 2)
    assert phi_eff(0, 0) == d0_sq(0, 1, coeff=2)
    assert phi_eff(-1, 0, (1,)) == d0_y(-1, 0, (1,))
    assert sigma(Sq(1)) * phi_eff(-1, 0) == y_left_action(Sq(1), -1, 0)
