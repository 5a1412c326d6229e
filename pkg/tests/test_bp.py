import pytest

from sympy import QQ
from sympy.polys.rings import ring

from secsteen._exceptions import DegreeBoundError, IntegralityError
from secsteen.bp import EBPAlgebroid, GammaElt, expected_dimensions, phi_pk


@pytest.fixture(scope="module")
def algebroid():
    return EBPAlgebroid(3, 2)


def test_invalid():
    """
    Make sure that non-primes and out of range indices are rejected.
    """

    with pytest.raises(ValueError):
        EBPAlgebroid(4, 2)
    with pytest.raises(ValueError):
        EBPAlgebroid(3, 0)
    with pytest.raises(DegreeBoundError):
        EBPAlgebroid(3, 1).m(2)


def test_phi():
    """
    Make sure that Φ_3(x, y) = -(x^2y + xy^2) and that non-integral input is
    detected.
    """

    _, x, y = ring("x,y", QQ)
    assert phi_pk([x, y], 1, 3) == -(x**2 * y + x * y**2)
    assert phi_pk([x], 2, 3) == 0

    with pytest.raises(IntegralityError):
        phi_pk([x * QQ(1, 3), y], 1, 3)
    with pytest.raises(ValueError):
        phi_pk([], 1, 3)


def test_exterior(algebroid):
    """
    Make sure that exterior generators anticommute and square to zero.
    """

    mu0, mu1 = algebroid.mu(0), algebroid.mu(1)
    assert mu0 * mu1 == -(mu1 * mu0)
    assert not mu0 * mu0
    assert algebroid.tau(1) * algebroid.mu(0) == -(algebroid.mu(0) * algebroid.tau(1))


def test_araki(algebroid):
    """
    Make sure that v_1 = -24m_1 at p = 3 and that v_n = pm_n mod I^2.
    """

    assert algebroid.araki_v(0) == 3
    assert algebroid.araki_v(1) == -24 * algebroid.m(1)
    assert algebroid.to_v_form(algebroid.m(1)) == -algebroid.v_gen(1) * QQ(1, 24)
    assert algebroid.h_valuation(algebroid.araki_v(1) - 3 * algebroid.m(1)) == 3
    for n in (1, 2):
        assert algebroid.v_congruence_defect(n) >= 2
        assert algebroid.to_v_form(algebroid.araki_v(n)) == algebroid.v_gen(n)


def test_right_unit(algebroid):
    """
    Make sure of η_R(m_1) and of the right unit of μ_0.
    """

    m1, t1 = algebroid.m(1), algebroid.t(1)
    assert algebroid.eta_R_m(1) == m1 + t1
    assert algebroid.eta_R_mu(0) == algebroid.mu(0) + algebroid.tau(0)


def test_coproduct(algebroid):
    """
    Make sure of the low coproducts and their coassociativity.
    """

    t = algebroid.t
    tau = algebroid.tau
    assert algebroid.t_coproduct(1) == t(1, 1) + t(1, 2)
    assert algebroid.tau_coproduct(0) == tau(0, 1) + tau(0, 2)
    assert algebroid.tau_coproduct(1) == tau(1, 2) + tau(0, 1) * t(1, 2) + tau(1, 1)

    for x in (algebroid.gamma(t(1)), tau(0), tau(1)):
        dx = algebroid.coproduct(x)
        assert algebroid.delta_tensor_id(dx) == algebroid.id_tensor_delta(dx)


def test_differential(algebroid):
    """
    Make sure that ∂(μ_0μ_1) = -w_1, ∂τ_1 = -27t_1 and ∂∂ = 0.
    """

    mu0, mu1 = algebroid.mu(0), algebroid.mu(1)
    assert algebroid.differential(mu0 * mu1) == -algebroid.w(1)
    assert algebroid.differential(algebroid.tau(1)) == -27 * algebroid.t(1)
    assert algebroid.differential(mu0) == 3

    for x in (mu0 * mu1, algebroid.tau(0) * mu1, algebroid.tau(1) * algebroid.tau(2)):
        assert not algebroid.differential(algebroid.differential(x))

    with pytest.raises(ValueError):
        algebroid.differential(algebroid.tau(1, 2))


@pytest.fixture(scope="module")
def algebroid3():
    return EBPAlgebroid(3, 3)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_structure_congruences(algebroid3, n):
    """
    Make sure that the structure maps agree with their forms mod I^2, and
    that ∂τ_n vanishes mod I^3 at odd primes.
    """

    defects = algebroid3.structure_defects(n)
    assert set(defects) == {"delta_t", "delta_tau", "eta_v", "eta_w"}
    assert all(value >= 2 for value in defects.values()), defects
    assert algebroid3.v_congruence_defect(n) >= 2
    assert algebroid3.tau_boundary_valuation(n) >= 3

    # Without w_n the right unit of w_n is only right mod I.
    assert algebroid3.structure_defects(n, strict_w=True)["eta_w"] == 1


def test_valuation(algebroid):
    """
    Make sure that the I-adic valuation counts p and the v_k.
    """

    assert algebroid.valuation(algebroid.gamma(algebroid.ring.zero)) == float("inf")
    assert algebroid.valuation(algebroid.gamma(9 * algebroid.t(1))) == 2
    assert algebroid.valuation(algebroid.araki_v(1) * algebroid.t(1)) == 1
    assert algebroid.valuation(algebroid.gamma(algebroid.t(2))) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_prime_two(n):
    """
    Make sure that ∂τ_n = t_1(Σ v_i t_j^{2^i})^2 mod I^3 at p = 2, which is
    not zero mod I^3.
    """

    algebroid = EBPAlgebroid(2, 3)
    boundary, defect = algebroid.p2_failure_witness(n)
    assert isinstance(boundary, GammaElt)
    assert algebroid.valuation(boundary) == 2
    assert defect >= 3
    if n == 1:
        assert boundary == algebroid.gamma(-4 * algebroid.t(1))
        assert algebroid.p2_congruence(1) == algebroid.gamma(4 * algebroid.t(1))

    with pytest.raises(ValueError):
        algebroid.homology_degree(1)


def test_expected_dimensions():
    """
    Make sure of the monomial counts of F_3[t_k] ⊗ E(τ_k).
    """

    assert expected_dimensions(10, 3) == [1, 1, 0, 0, 1, 2, 1, 0, 1, 2, 1]


def test_homology(algebroid):
    """
    Make sure that the homology of EBP_*EBP at p = 3 matches the dual
    Steenrod algebra in low degrees.
    """

    reports = algebroid.homology_dimensions(12)
    assert [r["degree"] for r in reports] == list(range(13))
    assert [r["dimension"] for r in reports] == expected_dimensions(12, 3)
    assert all(r["ok"] for r in reports)
    assert reports[4]["torsion"] == [1]

    with pytest.raises(DegreeBoundError):
        EBPAlgebroid(3, 1).homology_degree(16)
