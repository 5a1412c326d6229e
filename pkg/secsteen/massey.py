######################################################################
# secsteen: https://github.com/secsteen/secsteen
#
# Copyright: 2024
#
# secsteen is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 2 of the License, or
# (at your option) any later version.
#
# secsteen is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with secsteen. If not, see <http://www.gnu.org/licenses/>.
######################################################################

"""
Triple Massey products in A computed through the crossed algebra D_•.

With the section σ: A -> D_0 lifting coefficients and the right linear
splitting u: R_D -> D_1,

    τ(a, b) = u(σ(ab) - σ(a)σ(b))
    <a, b, c> = τ(ab, c) - τ(a, b)σ(c) - τ(a, bc) + σ(a)τ(b, c)

is a ∂-cycle and so lies in ι(A). The value is a representative for the
fixed σ and u, not a coset.
"""

__author__ = "The secsteen developers"

__all__ = ["MasseyResult", "tau", "triple_massey", "corollary_entry", "corollary_sweep"]

from dataclasses import dataclass as _dataclass

from loguru import logger as _logger

from ._exceptions import DegreeBoundError as _DegreeBoundError
from ._exceptions import NonCycleError as _NonCycleError
from .d0 import d0_product as _d0_product
from .d0 import sigma as _sigma
from .d1 import D1Elt as _D1Elt
from .d1 import left_act as _left_act
from .d1 import right_act as _right_act
from .d1 import u_split as _u_split
from .steenrod import AElt as _AElt
from .steenrod import degree as _degree
from .steenrod import delta as _delta
from .steenrod import p_element as _p_element
from .steenrod import seq_add as _seq_add
from .steenrod import seq_scale as _seq_scale


@_dataclass(frozen=True)
class MasseyResult:
    """The outcome of a triple Massey product computation."""

    a: _AElt
    b: _AElt
    c: _AElt
    value: _AElt
    defect: _D1Elt

    def __str__(self):
        return f"<{self.a}, {self.b}, {self.c}> = {self.value}"


def _check_homogeneous(name, x):
    if not isinstance(x, _AElt):
        msg = f"'{name}' must be of type 'AElt'"
        _logger.error(msg)
        raise TypeError(msg)
    if not x.is_homogeneous():
        msg = f"'{name}' must be homogeneous, got '{x}'"
        _logger.error(msg)
        raise ValueError(msg)


def tau(a, b):
    """
    The defect τ(a, b) = u(σ(ab) - σ(a)σ(b)) in D_1.

    Parameters
    ----------

    a, b: AElt
        Homogeneous elements of A.

    Returns
    -------

    tau: D1Elt
    """
    _check_homogeneous("a", a)
    _check_homogeneous("b", b)
    return _u_split(_sigma(a * b) - _d0_product(_sigma(a), _sigma(b)))


def triple_massey(a, b, c):
    """
    The Massey product <a, b, c> for ab = 0 = bc.

    Parameters
    ----------

    a, b, c: AElt
        Homogeneous elements of A.

    Returns
    -------

    result: MasseyResult
    """
    for name, x in (("a", a), ("b", b), ("c", c)):
        _check_homogeneous(name, x)
    if a * b or b * c:
        msg = "The Massey product <a, b, c> needs ab = 0 and bc = 0"
        _logger.error(msg)
        raise ValueError(msg)

    # D_1 is an F_2-module, so the signs of the bracket drop out.
    bracket = (
        tau(a * b, c)
        + _right_act(tau(a, b), c)
        + tau(a, b * c)
        + _left_act(a, tau(b, c))
    )
    defect = bracket.filter(lambda key: key[0] != "I")
    if defect:
        msg = f"Massey bracket is not a cycle, non-ι part '{defect}'"
        _logger.error(msg)
        raise _NonCycleError(msg)

    value = bracket.iota_part()
    _logger.debug(f"<{a}, {b}, {c}> = {value}")
    return MasseyResult(a, b, c, value, defect)


def _literal_candidate(t):
    # Sq((2^{t-1} - 1)Δ_t + 2^t Δ_{t+1}) as stated for s = t - 1.
    return _seq_add(_seq_scale(_delta(t), (1 << (t - 1)) - 1), _seq_scale(_delta(t + 1), 1 << t))


def _consistent_candidate(t):
    # Sq((2^{t-1} - 1)Δ_t + 2Δ_{2t-1}), which matches the computed cubes at
    # t = 2 and t = 3 and has degree 3|P_t^{t-1}| - 1.
    return _seq_add(_seq_scale(_delta(t), (1 << (t - 1)) - 1), _seq_scale(_delta(2 * t - 1), 2))


def corollary_entry(t, s):
    """
    <P_t^s, P_t^s, P_t^s> with the expected value.

    Returns
    -------

    entry: dict
        The value, its expected degree 3|P_t^s| - 1, and for s = t - 1 the
        literal and the degree consistent candidates together with their
        degrees and whether either matches.
    """
    a = _p_element(t, s)
    value = triple_massey(a, a, a).value
    expected_degree = 3 * a.degree() - 1
    entry = {
        "t": t,
        "s": s,
        "value": value,
        "degree": expected_degree,
        "degree_ok": not value or value.degree() == expected_degree,
    }
    if s < t - 1:
        entry["expected"] = "0"
        entry["ok"] = not value
    else:
        literal = _literal_candidate(t)
        consistent = _consistent_candidate(t)
        entry["literal"] = _AElt({literal: 1})
        entry["literal_degree"] = _degree(literal)
        entry["consistent"] = _AElt({consistent: 1})
        entry["consistent_degree"] = _degree(consistent)
        entry["matches_literal"] = value == entry["literal"]
        entry["matches_consistent"] = value == entry["consistent"]
        entry["expected"] = "see candidates"
        # Only the degree is checked at t = 1.
        entry["ok"] = entry["degree_ok"] and (t == 1 or entry["matches_consistent"])
        if not entry["matches_literal"]:
            _logger.warning(
                f"<P_{t}^{s}>^3 = {value} differs from the literal reading Sq{literal} "
                f"of degree {entry['literal_degree']} (expected degree {expected_degree})"
            )
    return entry


def corollary_sweep(t_max, max_degree=None, executor=None):
    """
    Tabulate <P_t^s, P_t^s, P_t^s> for 1 <= t <= t_max and 0 <= s < t.

    Parameters
    ----------

    t_max: int
        The largest t.

    max_degree: int
        If given, the largest allowed degree 3|P_t^s|. Larger brackets
        raise DegreeBoundError.

    executor: concurrent.futures.Executor
        Optional executor used to evaluate the entries concurrently.

    Returns
    -------

    entries: list of dict
        In the order (t, s) lexicographic.
    """
    if not isinstance(t_max, int) or t_max < 1:
        msg = f"'t_max' must be a positive integer, got {t_max!r}"
        _logger.error(msg)
        raise ValueError(msg)
    pairs = [(t, s) for t in range(1, t_max + 1) for s in range(t)]
    if max_degree is not None:
        for t, s in pairs:
            needed = 3 * _p_element(t, s).degree()
            if needed > max_degree:
                msg = (
                    f"<P_{t}^{s}>^3 needs degree {needed}, "
                    f"above the bound {max_degree}"
                )
                _logger.error(msg)
                raise _DegreeBoundError(msg)

    if executor is None:
        return [corollary_entry(t, s) for t, s in pairs]
    futures = [executor.submit(corollary_entry, t, s) for t, s in pairs]
    return [f.result() for f in futures]
