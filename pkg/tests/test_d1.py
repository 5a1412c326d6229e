import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

from secsteen._exceptions import NonRelationError
from secsteen.d0 import D0Elt, d0_sq, d0_y, pi, relation_basis, sigma
from secsteen.d1 import (
    D1Elt,
    boundary,
    d1_basis,
    exactness_ranks,
    iota,
    left_act,
    left_act_raw,
    mu0,
    mult_map_op,
    normalize_u,
    op_closed_form,
    peiffer_defect,
    right_act,
    u_split,
)
from secsteen.steenrod import AElt, Sq, milnor_basis


def a_basis(max_degree):
    return [AElt({R: 1}) for d in range(max_degree + 1) for R in milnor_basis(d)]


def d1_elements(max_degree):
    return [D1Elt({key: 1}) for d in range(max_degree + 1) for key in d1_basis(d)]


small_a = st.sampled_from(a_basis(6))
small_d1 = st.sampled_from(d1_elements(7))


def test_normal_form():
    """
    Make sure that raw U-terms are rewritten into normal form.
    """

    assert normalize_u(0, 1) == D1Elt({("U", 0, 1, ()): 1})
    assert normalize_u(1, 0) == normalize_u(0, 1) + iota(Sq(1, 1))
    assert normalize_u(0, 0) == mu0(Sq(0, 1)) + iota(Sq(2))
    assert normalize_u(-1, 0, (1,)) == D1Elt({("U", -1, 0, (1,)): 1})

    with pytest.raises(ValueError):
        normalize_u(0, -1)
    with pytest.raises(ValueError):
        normalize_u(-1, -1)


def test_degrees():
    """
    Make sure that ι raises degrees by one.
    """

    assert iota(Sq(2)).degree() == 3
    assert mu0(Sq(2)).degree() == 2
    assert normalize_u(-1, 0).degree() == 2


def test_mu0_action():
    """
    Make sure that a μ_0 = μ_0 a + ι(κ(a)).
    """

    assert left_act(Sq(1), mu0()) == mu0(Sq(1)) + iota(AElt.unit())
    assert left_act(Sq(2), mu0()) == mu0(Sq(2)) + iota(Sq(1))
    assert right_act(mu0(), Sq(1)) == mu0(Sq(1))


@settings(deadline=None, max_examples=60)
@given(a=small_a, b=small_a, x=small_d1)
def test_bimodule(a, b, x):
    """
    Make sure that both actions are associative and commute.
    """

    assert left_act(a * b, x) == left_act(a, left_act(b, x))
    assert right_act(x, a * b) == right_act(right_act(x, a), b)
    assert right_act(left_act(a, x), b) == left_act(a, right_act(x, b))


@settings(deadline=None, max_examples=60)
@given(a=small_a, x=small_d1)
def test_boundary_linear(a, x):
    """
    Make sure that the boundary is compatible with the left action.
    """

    assert boundary(left_act(a, x)) == sigma(a) * boundary(x)


def test_splitting():
    """
    Make sure that u is a section of the boundary on relations.
    """

    for d in range(9):
        for key in relation_basis(d):
            r = D0Elt({key: 2 if key[0] == "Sq" else 1})
            assert boundary(u_split(r)) == r

    with pytest.raises(NonRelationError):
        u_split(d0_sq(1))


@pytest.mark.parametrize("d", range(21))
def test_exactness(d):
    """
    Make sure that ΣA -> D_1 -> D_0 -> A is exact in low degrees.
    """

    report = exactness_ranks(d)
    assert report["exact"]
    assert report["dim_D1"] == report["rank"] + report["nullity"]


def test_multiplication_map():
    """
    Make sure that op is defined by a u(r) = u(ar) + ι(op(a, r)) and agrees
    with its closed forms.
    """

    for e in range(7):
        for d in range(1, 8 - e):
            for key in relation_basis(d):
                r = D0Elt({key: 2 if key[0] == "Sq" else 1})
                for a in a_basis(e):
                    assert mult_map_op(a, r) == op_closed_form(a, r)


def test_op_of_two():
    """
    Make sure that op(a, 2d) = κ(a)π(d).
    """

    assert mult_map_op(Sq(2), d0_sq(2, coeff=2)) == Sq(3)
    assert mult_map_op(Sq(3), d0_sq(coeff=2)) == Sq(2)


@pytest.mark.parametrize("k, l", [(0, 0), (1, 1), (1, 0), (2, 0), (2, 1), (3, 2)])
def test_raw_generators(k, l):
    """
    Make sure that left acting then normalizing agrees with normalizing then
    left acting.
    """

    for a in a_basis(7):
        assert left_act_raw(a, k, l) == left_act(a, normalize_u(k, l))


def test_peiffer():
    """
    Make sure that the Peiffer identity holds on low degree generators,
    which comes down to π∘∂ = 0.
    """

    for x in d1_elements(8):
        assert not pi(boundary(x))

    elements = d1_elements(4)
    for x in elements:
        for y in elements:
            assert peiffer_defect(x, y) == 0


def test_type_errors():
    """
    Make sure that wrong argument types are rejected.
    """

    with pytest.raises(TypeError):
        left_act(d0_y(-1, 0), mu0())
    with pytest.raises(TypeError):
        u_split(Sq(1))
