import concurrent.futures
import pytest

from secsteen._exceptions import DegreeBoundError
from secsteen.d0 import d0_sq
from secsteen.d1 import mu0, normalize_u
from secsteen.massey import corollary_entry, corollary_sweep, tau, triple_massey
from secsteen.steenrod import Sq, p_element


def test_tau():
    """
    Make sure that τ(Sq(0,2), Sq(0,2)) = μ_0Sq(0,4) + U_{0,2}Sq(0,1).
    """

    a = Sq(0, 2)
    assert tau(a, a) == mu0(Sq(0, 4)) + normalize_u(0, 2, (0, 1))


def test_tau_square():
    """
    Make sure that τ(Sq^1, Sq^1) lifts the relation Sq^1Sq^1 = 2Sq^2 + Y_{-1,0}.
    """

    assert tau(Sq(1), Sq(1)) == mu0(Sq(2)) + normalize_u(-1, 0)


def test_flagship():
    """
    Make sure that <Sq(0,2), Sq(0,2), Sq(0,2)> = Sq(0,1,2).
    """

    a = Sq(0, 2)
    result = triple_massey(a, a, a)
    assert result.value == Sq(0, 1, 2)
    assert result.value.degree() == 3 * a.degree() - 1
    assert not result.defect
    assert str(result).startswith("<Sq(0,2), Sq(0,2), Sq(0,2)> = ")


def test_vanishing():
    """
    Make sure that <P_t^s, P_t^s, P_t^s> = 0 for s < t - 1.
    """

    for t, s in [(2, 0), (3, 0), (3, 1)]:
        a = p_element(t, s)
        assert triple_massey(a, a, a).value == 0


def test_corollary_entry():
    """
    Make sure of the s = t - 1 entry at t = 2, which matches the degree
    consistent candidate but not the literal one.
    """

    entry = corollary_entry(2, 1)
    assert entry["value"] == Sq(0, 1, 2)
    assert entry["degree"] == 17
    assert entry["ok"]
    assert entry["matches_consistent"]
    assert not entry["matches_literal"]
    assert entry["literal_degree"] != entry["degree"]


def test_corollary_entry_t3():
    """
    Make sure that <P_3^2, P_3^2, P_3^2> = Sq(0,0,3,0,2) in degree 83.
    """

    entry = corollary_entry(3, 2)
    assert entry["value"] == Sq(0, 0, 3, 0, 2)
    assert entry["degree"] == 83
    assert entry["consistent"] == Sq(0, 0, 3, 0, 2)
    assert entry["consistent_degree"] == 83
    assert entry["matches_consistent"]
    assert not entry["matches_literal"]
    assert entry["ok"]


def test_corollary_sweep():
    """
    Make sure that the sweep visits (t, s) in order and that the serial and
    parallel sweeps agree.
    """

    entries = corollary_sweep(3)
    assert [(e["t"], e["s"]) for e in entries] == [
        (1, 0),
        (2, 0),
        (2, 1),
        (3, 0),
        (3, 1),
        (3, 2),
    ]
    assert all(e["ok"] for e in entries)
    assert [e["value"] == 0 for e in entries[3:]] == [True, True, False]

    with concurrent.futures.ThreadPoolExecutor(max_workers=2) as executor:
        parallel = corollary_sweep(2, executor=executor)
    assert [e["value"] for e in parallel] == [e["value"] for e in entries[:3]]

    with pytest.raises(DegreeBoundError):
        corollary_sweep(2, max_degree=10)
    with pytest.raises(ValueError):
        corollary_sweep(0)


def test_invalid():
    """
    Make sure that non-composable or non-homogeneous inputs are rejected.
    """

    with pytest.raises(ValueError):
        triple_massey(Sq(1), Sq(2), Sq(1))
    with pytest.raises(ValueError):
        tau(Sq(1) + Sq(2), Sq(1))
    with pytest.raises(TypeError):
        tau(d0_sq(1), Sq(1))
