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
Truncated power series over small Z/4 algebras.

A series f(x) = x + Σ ξ_k x^{2^k} + Σ 2ξ_{k,l} x^{2^k+2^l} is a point of
the group represented by D_0*. This module splits such series as

    f(x) = x + τ_f(x^2) + x θ_f(x^2)

and provides the composition laws used to test the represented functor
point of view.
"""

__author__ = "The secsteen developers"

__all__ = [
    "Z4Ring",
    "TruncatedSeries",
    "PairSeries",
    "series_decompose",
    "theta_of_composite",
]

from loguru import logger as _logger

from sympy import ZZ as _ZZ
from sympy.polys.rings import ring as _ring


class Z4Ring:
    """
    A quotient of Z/4[a_1, ..., a_n, e_1, ..., e_m] in which every e_i is
    2-torsion and every product e_ie_j vanishes.

    The e_i span an ideal J with J^2 = 0 and 2J = 0.
    """

    def __init__(self, names, square_zero=""):
        """
        Constructor

        names: str
            Space separated names of the free generators.

        square_zero: str
            Space separated names of the generators of J.
        """
        self._names = names.split()
        self._j_names = square_zero.split()
        all_names = self._names + self._j_names
        if not all_names:
            msg = "'Z4Ring' needs at least one generator"
            _logger.error(msg)
            raise ValueError(msg)
        poly_ring, *gens = _ring(",".join(all_names), _ZZ)
        self._ring = poly_ring
        self._gens = dict(zip(all_names, gens))
        self._j_slots = [all_names.index(n) for n in self._j_names]

    def __getitem__(self, name):
        return self._gens[name]

    @property
    def zero(self):
        return self._ring.zero

    @property
    def one(self):
        return self._ring.one

    def reduce(self, p):
        """The normal form of a polynomial in the quotient."""
        terms = {}
        for monom, coeff in p.terms():
            j_degree = sum(monom[i] for i in self._j_slots)
            if j_degree >= 2:
                continue
            c = int(coeff) % (2 if j_degree else 4)
            if c:
                terms[monom] = c
        return self._ring.from_dict(terms) if terms else self._ring.zero

    def is_zero(self, p):
        return self.reduce(p) == self._ring.zero

    def is_even(self, p):
        """Whether p lies in 2R."""
        return all(int(c) % 2 == 0 for _, c in self.reduce(p).terms())


class TruncatedSeries:
    """
    A power series Σ c_e x^e over a Z4Ring, truncated below x^order.
    """

    def __init__(self, ring, coeffs, order):
        self.ring = ring
        self.order = order
        self.coeffs = {}
        for e, c in dict(coeffs).items():
            if e < 0:
                raise ValueError(f"Negative exponent {e}")
            if e >= order:
                continue
            c = ring.reduce(ring.zero + c)
            if c != ring.zero:
                self.coeffs[e] = c

    @classmethod
    def identity(cls, ring, order):
        return cls(ring, {1: ring.one}, order)

    def coefficient(self, e):
        return self.coeffs.get(e, self.ring.zero)

    def __add__(self, other):
        coeffs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            coeffs[e] = coeffs.get(e, self.ring.zero) + c
        return TruncatedSeries(self.ring, coeffs, min(self.order, other.order))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return TruncatedSeries(
            self.ring, {e: c * v for e, v in self.coeffs.items()}, self.order
        )

    def __mul__(self, other):
        order = min(self.order, other.order)
        coeffs = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                if e1 + e2 < order:
                    coeffs[e1 + e2] = coeffs.get(e1 + e2, self.ring.zero) + c1 * c2
        return TruncatedSeries(self.ring, coeffs, order)

    def power(self, n):
        result = TruncatedSeries(self.ring, {0: self.ring.one}, self.order)
        for _ in range(n):
            result = result * self
        return result

    def compose(self, inner):
        """
        f(g(x)) for a series g without constant term.
        """
        if inner.coefficient(0) != self.ring.zero:
            msg = "Cannot compose with a series that has a constant term"
            _logger.error(msg)
            raise ValueError(msg)
        result = TruncatedSeries(self.ring, {}, min(self.order, inner.order))
        power = TruncatedSeries(self.ring, {0: self.ring.one}, inner.order)
        for e in range(max(self.coeffs, default=0) + 1):
            if e in self.coeffs:
                result = result + power.scale(self.coeffs[e])
            power = power * inner
        return result

    def bar(self):
        """f̄(x) = f(x) - x."""
        return self - TruncatedSeries.identity(self.ring, self.order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return all(
            self.ring.is_zero(self.coefficient(e) - other.coefficient(e))
            for e in range(order)
        )

    def __repr__(self):
        terms = " + ".join(f"({c})*x^{e}" for e, c in sorted(self.coeffs.items()))
        return f"TruncatedSeries({terms or '0'}, O(x^{self.order}))"


def _is_group_exponent(e):
    # 2^k with k >= 1, or 2^k + 2^l with k < l.
    return bin(e).count("1") in (1, 2) and e >= 2


def series_decompose(f):
    """
    Split f(x) = x + τ_f(x^2) + x θ_f(x^2).

    Parameters
    ----------

    f: TruncatedSeries
        A series of the group shape: no constant term, linear coefficient
        1, and further exponents 2^k or 2^k + 2^l (k < l), the latter with
        coefficients in 2R.

    Returns
    -------

    tau: TruncatedSeries
        τ_f as a series in y = x^2.

    theta: TruncatedSeries
        θ_f as a series in y = x^2.

    xi_1: polynomial
        ξ_1^f, the coefficient of x^2.
    """
    if not isinstance(f, TruncatedSeries):
        msg = "'f' must be of type 'TruncatedSeries'"
        _logger.error(msg)
        raise TypeError(msg)

    ring = f.ring
    if f.coefficient(0) != ring.zero:
        msg = "Series has a constant term"
        _logger.error(msg)
        raise ValueError(msg)
    if not ring.is_zero(f.coefficient(1) - ring.one):
        msg = "Series must have linear coefficient 1"
        _logger.error(msg)
        raise ValueError(msg)

    tau = {}
    theta = {}
    for e, c in f.coeffs.items():
        if e == 1:
            continue
        if not _is_group_exponent(e):
            msg = f"Exponent {e} is not of the form 2^k or 2^k + 2^l"
            _logger.error(msg)
            raise ValueError(msg)
        if bin(e).count("1") == 2 and not ring.is_even(c):
            msg = f"Coefficient of x^{e} must lie in 2R"
            _logger.error(msg)
            raise ValueError(msg)
        if e % 2 == 0:
            tau[e // 2] = c
        else:
            theta[(e - 1) // 2] = c

    order = (f.order + 1) // 2
    return (
        TruncatedSeries(ring, tau, order),
        TruncatedSeries(ring, theta, (f.order) // 2),
        f.coefficient(2),
    )


def theta_of_composite(f, g):
    """
    θ_{f∘g} computed from the parts of f and g:

        θ_{f∘g}(y) = θ_f(y + τ_g(y)^2) + θ_g(y) + 2ξ_1^f τ_g(y)

    This is the composition law for θ over rings with 4 = 0.
    """
    tau_f, theta_f, xi1_f = series_decompose(f)
    tau_g, theta_g, _ = series_decompose(g)
    ring = f.ring
    order = min(theta_f.order, theta_g.order)
    y = TruncatedSeries.identity(ring, order)
    shifted = y + tau_g * tau_g
    result = theta_f.compose(shifted) + theta_g + tau_g.scale(2 * xi1_f)
    return TruncatedSeries(ring, result.coeffs, order)


class PairSeries:
    """
    A pair (f_1, f_2) of a one variable series and a two variable series
    with coefficients in J. It represents the point with

        f^eff(x) = f_1(x) + f_2(x, x).
    """

    def __init__(self, f1, f2):
        """
        Constructor

        f1: TruncatedSeries
            The additive part.

        f2: dict
            (e1, e2) -> coefficient in J for the two variable part.
        """
        self.f1 = f1
        self.ring = f1.ring
        self.order = f1.order
        self.f2 = {}
        for (e1, e2), c in dict(f2).items():
            c = self.ring.reduce(self.ring.zero + c)
            if e1 + e2 < self.order and c != self.ring.zero:
                self.f2[(e1, e2)] = c

    def effective(self):
        """The one variable series f^eff(x) = f_1(x) + f_2(x, x)."""
        coeffs = {}
        for (e1, e2), c in self.f2.items():
            coeffs[e1 + e2] = coeffs.get(e1 + e2, self.ring.zero) + c
        return self.f1 + TruncatedSeries(self.ring, coeffs, self.order)

    def compose(self, other):
        """
        (f_1, f_2) ∘ (g_1, g_2) = (f_1 ∘ g_1, f_2(g_1(x), g_1(y)) + g_2).
        """
        f1 = self.f1.compose(other.f1)
        g1 = other.f1
        f2 = dict(other.f2)
        powers = [TruncatedSeries(self.ring, {0: self.ring.one}, self.order)]
        top = max((max(k) for k in self.f2), default=0)
        for _ in range(top):
            powers.append(powers[-1] * g1)
        for (e1, e2), c in self.f2.items():
            for a, ca in powers[e1].coeffs.items():
                for b, cb in powers[e2].coeffs.items():
                    if a + b < self.order:
                        f2[(a, b)] = f2.get((a, b), self.ring.zero) + c * ca * cb
        return PairSeries(f1, f2)
