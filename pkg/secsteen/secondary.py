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
The extended algebra Ê_0 = D_0 + X' + μ_0X', its subalgebra E_0 and the
secondary operators on the relation module R_E.

Ê_0 carries the product

    a∗b = ab + ψ(a)ψ(b)μ_0 + X_{-1}ψ(a)κ(b)

on D_0 factors, where ψ(a) = Σ_k X_k cont(ξ_{k+1}, a), together with
d∗m = π(d)m, m∗d = mπ(d) and mm' = 0 for m, m' in W = X' + μ_0X'. The
generators X_{k,l} are not symmetric in k and l.
"""

__author__ = "The secsteen developers"

__all__ = [
    "EHatElt",
    "VElt",
    "PsiElt",
    "MuTensorAA",
    "TensorEE",
    "E1HatElt",
    "ehat",
    "x_gen",
    "mu0_x_gen",
    "psi",
    "v_left_act",
    "v_right_act",
    "ehat_basis",
    "star_product",
    "adem_element",
    "adem_definition",
    "adem_tensor",
    "adem_pairs",
    "adem_row",
    "theta_D",
    "theta_E",
    "theta_hat_D",
    "in_E0",
    "delta0",
    "nabla",
    "coz",
    "L",
    "S",
    "mu_left_act",
    "op_sharp",
    "L_R",
    "linearity_defect_Phi",
    "phi_closed_form",
    "boundary_hat",
    "rho",
    "u_E",
    "in_E1",
]

import functools as _functools
import math as _math

from loguru import logger as _logger

from ._exceptions import NonRelationError as _NonRelationError
from ._linear import LinearCombination as _LinearCombination
from ._linear import bilinear as _bilinear
from .d0 import D0Elt as _D0Elt
from .d0 import d0_product as _d0_product
from .d0 import pi as _pi
from .d0 import relation_basis as _relation_basis
from .d0 import u_left_terms as _u_left_terms
from .d0 import y_degree as _y_degree
from .d1 import D1Elt as _D1Elt
from .d1 import boundary as _boundary_d
from .d1 import mult_map_op as _mult_map_op
from .d1 import u_split as _u_split
from .steenrod import AElt as _AElt
from .steenrod import TensorAA as _TensorAA
from .steenrod import contract as _contract
from .steenrod import coproduct as _coproduct
from .steenrod import degree as _degree
from .steenrod import delta as _delta
from .steenrod import kappa as _kappa
from .steenrod import milnor_basis as _milnor_basis
from .steenrod import seq_add as _seq_add
from .steenrod import trim as _trim
from .steenrod import xi as _xi

_KIND_ORDER = {"Sq": 0, "Y": 1, "X": 2, "MX": 3, "I": 4, "M": 5, "U": 6}


def _w_degree(key):
    if key[0] == "X":
        return _y_degree(key[1], key[2]) + _degree(key[3])
    return _y_degree(key[1], key[2]) - 1 + _degree(key[3])


def _w_symbol(key):
    x = f"X_{{{key[1]},{key[2]}}}"
    if key[-1]:
        x += _AElt._key_symbol(key[-1])
    return x if key[0] == "X" else "u0 " + x


class EHatElt(_LinearCombination):
    """
    An element of Ê_0.

    Keys are the D_0 keys ("Sq", R) and ("Y", k, l, R), together with
    ("X", k, l, R) for X_{k,l}Sq(R), k, l >= -1 and not both -1, and
    ("MX", k, l, R) for μ_0X_{k,l}Sq(R), k, l >= 0. Only the Sq-keys carry
    Z/4 coefficients.
    """

    __slots__ = ()

    @classmethod
    def _modulus(cls, key):
        return 4 if key[0] == "Sq" else 2

    @classmethod
    def _key_degree(cls, key):
        if key[0] in ("Sq", "Y"):
            return _D0Elt._key_degree(key)
        return _w_degree(key)

    @classmethod
    def _key_symbol(cls, key):
        if key[0] in ("Sq", "Y"):
            return _D0Elt._key_symbol(key)
        return _w_symbol(key)

    @classmethod
    def _key_order(cls, key):
        return (_KIND_ORDER[key[0]],) + key[1:]

    @classmethod
    def unit(cls):
        return cls({("Sq", ()): 1})

    @classmethod
    def from_d0(cls, d):
        """The inclusion D_0 -> Ê_0."""
        return cls(d.items())

    def d_part(self):
        """The D_0 component, ρ(x)."""
        return _D0Elt([(k, c) for k, c in self.items() if k[0] in ("Sq", "Y")])

    def w_part(self):
        """The component in W = X' + μ_0X'."""
        return self.filter(lambda key: key[0] in ("X", "MX"))

    def x_part(self):
        return {key[1:]: c for key, c in self.items() if key[0] == "X"}

    def mu0x_part(self):
        return {key[1:]: c for key, c in self.items() if key[0] == "MX"}

    def __mul__(self, other):
        if isinstance(other, EHatElt):
            return star_product(self, other)
        return super().__mul__(other)


def ehat(*R, coeff=1):
    """The element coeff·Sq(R) of Ê_0."""
    return EHatElt({("Sq", _trim(R)): coeff})


def _check_w_indices(k, l, mu):
    low = 0 if mu else -1
    if k < low or l < low or (k, l) == (-1, -1):
        msg = f"Invalid X-indices ({k}, {l})"
        _logger.error(msg)
        raise ValueError(msg)


def x_gen(k, l, R=()):
    """The element X_{k,l}Sq(R) of Ê_0."""
    _check_w_indices(k, l, False)
    return EHatElt({("X", k, l, _trim(R)): 1})


def mu0_x_gen(k, l, R=()):
    """The element μ_0X_{k,l}Sq(R) of Ê_0."""
    _check_w_indices(k, l, True)
    return EHatElt({("MX", k, l, _trim(R)): 1})


@_functools.cache
def ehat_basis(d):
    """
    The basis keys of Ê_0 in degree 'd': Sq(R), Y_{k,l}Sq(R),
    X_{k,l}Sq(R) and μ_0X_{k,l}Sq(R).
    """
    keys = [("Sq", R) for R in _milnor_basis(d)]
    keys.extend(key for key in _relation_basis(d) if key[0] == "Y")
    l = -1
    while _y_degree(-1, max(l, 0)) - 1 <= d:
        for k in range(-1, d + 1):
            if (k, l) == (-1, -1) or _y_degree(k, l) - 1 > d:
                continue
            if _y_degree(k, l) <= d:
                keys.extend(("X", k, l, R) for R in _milnor_basis(d - _y_degree(k, l)))
            if k >= 0 and l >= 0:
                keys.extend(("MX", k, l, R) for R in _milnor_basis(d + 1 - _y_degree(k, l)))
        l += 1
    return tuple(keys)


def _x_terms(kind, k, l, a):
    return [((kind, k, l, R), c) for R, c in a.items()]


class VElt(_LinearCombination):
    """
    An element of V + μ_0V with keys ("V", k, R) for V_kSq(R) and
    ("MV", k, R) for μ_0V_kSq(R).
    """

    __slots__ = ()

    @classmethod
    def _key_degree(cls, key):
        shift = 0 if key[0] == "V" else -1
        return (1 << (key[1] + 1)) + _degree(key[2]) + shift

    @classmethod
    def _key_symbol(cls, key):
        v = f"V_{key[1]}" + (_AElt._key_symbol(key[2]) if key[2] else "")
        return v if key[0] == "V" else "u0 " + v

    def plain(self):
        return self.filter(lambda key: key[0] == "V")

    def mu0(self):
        return self.filter(lambda key: key[0] == "MV")


class PsiElt(VElt):
    """The formal sum Σ X_k c_k returned by ψ."""

    __slots__ = ()

    @classmethod
    def _key_degree(cls, key):
        # A bare X_k has no degree, this only orders the terms.
        return _degree(key[2])

    @classmethod
    def _key_symbol(cls, key):
        return f"X_{key[1]}" + (_AElt._key_symbol(key[2]) if key[2] else "")


def _contractions(a):
    # c_k = cont(ξ_{k+1}, a) for k >= 0.
    d = max(a.degrees(), default=0)
    out = {}
    k = 0
    while (1 << (k + 1)) - 1 <= d:
        c = _contract(_xi(_delta(k + 1)), a)
        if c:
            out[k] = c
        k += 1
    return out


def psi(a):
    """
    ψ(a) = Σ_{k>=0} X_k cont(ξ_{k+1}, a).

    Parameters
    ----------

    a: AElt

    Returns
    -------

    psi: PsiElt
    """
    if not isinstance(a, _AElt):
        msg = "'a' must be of type 'AElt'"
        _logger.error(msg)
        raise TypeError(msg)
    return PsiElt(
        [(("V", k, R), 1) for k, c in _contractions(a).items() for R in c.keys()]
    )


def _single_left_terms(a, l):
    # a·V_l = Σ_j V_{l+j} cont(ξ_j^{2^{l+1}}, a), the same rule as a·X_l.
    return [(ll, c) for kk, ll, c in _u_left_terms(a, -1, l) if kk == -1]


def v_left_act(a, v):
    """
    The left action of A on V + μ_0V:

        a·V_l = Σ_j V_{l+j} cont(ξ_j^{2^{l+1}}, a),
        a·μ_0V_lc = μ_0(a·V_lc) + κ(a)·V_lc
    """
    cls = type(v)
    kappa_a = _kappa(a)
    terms = []
    for (kind, l, R), c in v.items():
        right = _AElt({R: c})
        for ll, cc in _single_left_terms(a, l):
            terms.extend(((kind, ll, S), cs) for S, cs in (cc * right).items())
        if kind == "MV":
            for ll, cc in _single_left_terms(kappa_a, l):
                terms.extend((("V", ll, S), cs) for S, cs in (cc * right).items())
    return cls(terms)


def v_right_act(v, b):
    """The right action of A on V + μ_0V, V_kc·b = V_k(cb)."""
    terms = []
    for (kind, l, R), c in v.items():
        for S, cs in (_AElt({R: c}) * b).items():
            terms.append(((kind, l, S), cs))
    return type(v)(terms)


def _w_left_act(a, key):
    # a∗m for a basis element m of W.
    kind, k, l, R = key
    right = _AElt({R: 1})
    terms = []
    for kk, ll, c in _u_left_terms(a, k, l):
        terms.extend(_x_terms(kind, kk, ll, c * right))
    if kind == "MX":
        for kk, ll, c in _u_left_terms(_kappa(a), k, l):
            terms.extend(_x_terms("X", kk, ll, c * right))
    return terms


def _w_right_act(key, b):
    kind, k, l, R = key
    return _x_terms(kind, k, l, _AElt({R: 1}) * b)


def _psi_psi_mu0(a, b):
    # ψ(a)ψ(b)μ_0 with the trailing μ_0 moved to the front.
    terms = []
    cb = _contractions(b)
    if not cb:
        return terms
    for k, c in _contractions(a).items():
        for l, f in cb.items():
            for ll, g in _single_left_terms(c, l):
                h = g * f
                terms.extend(_x_terms("MX", k, ll, h))
                terms.extend(_x_terms("X", k, ll, _kappa(h)))
    return terms


def _x_minus_one(a, b):
    # X_{-1}ψ(a)κ(b).
    kb = _kappa(b)
    if not kb:
        return []
    terms = []
    for l, c in _contractions(a).items():
        terms.extend(_x_terms("X", -1, l, c * kb))
    return terms


@_functools.cache
def _star_basis(k1, k2):
    d_keys = ("Sq", "Y")
    if k1[0] in d_keys and k2[0] in d_keys:
        x, y = _D0Elt({k1: 1}), _D0Elt({k2: 1})
        terms = list(_d0_product(x, y).items())
        if k1[0] == "Sq" and k2[0] == "Sq":
            a, b = _AElt({k1[1]: 1}), _AElt({k2[1]: 1})
            terms += _psi_psi_mu0(a, b) + _x_minus_one(a, b)
        return tuple(EHatElt(terms).items())
    if k1[0] in d_keys:
        if k1[0] == "Y":
            return ()
        return tuple(EHatElt(_w_left_act(_AElt({k1[1]: 1}), k2)).items())
    if k2[0] in d_keys:
        if k2[0] == "Y":
            return ()
        return tuple(EHatElt(_w_right_act(k1, _AElt({k2[1]: 1}))).items())
    return ()


def star_product(x, y):
    """
    The product x∗y in Ê_0.

    Parameters
    ----------

    x, y: EHatElt
        The factors.

    Returns
    -------

    product: EHatElt
    """
    if not isinstance(x, EHatElt) or not isinstance(y, EHatElt):
        msg = "'x' and 'y' must be of type 'EHatElt'"
        _logger.error(msg)
        raise TypeError(msg)
    return _bilinear(x, y, lambda k1, k2: EHatElt(_star_basis(k1, k2)), EHatElt)


def adem_pairs(max_sum):
    """
    All Adem pairs (n, m) with 0 < n < 2m and n + m <= max_sum, ordered by
    n + m and then by decreasing n.
    """
    pairs = []
    for total in range(2, max_sum + 1):
        for n in range(total - 1, 0, -1):
            m = total - n
            if n < 2 * m:
                pairs.append((n, m))
    return pairs


def _adem_terms(n, m):
    # The (i, j) with Sq^i Sq^j in the Adem relation [n, m]; j = 0 is Sq^i.
    if not isinstance(n, int) or not isinstance(m, int) or not 0 < n < 2 * m:
        msg = f"Adem pairs need 0 < n < 2m, got ({n!r}, {m!r})"
        _logger.error(msg)
        raise ValueError(msg)
    terms = [(n, m)]
    for k in range(1, n // 2 + 1):
        if _math.comb(m - k - 1, n - 2 * k) % 2:
            terms.append((m + n - k, k))
    if _math.comb(m - 1, n) % 2:
        terms.append((m + n, 0))
    return terms


def adem_definition(n, m):
    """The defining sum of [n, m] written as in '2·2 + 3·1'."""
    return " + ".join(f"{i}·{j}" if j else f"{i}" for i, j in _adem_terms(n, m))


def adem_tensor(n, m):
    """The formal sum <n, m> = Σ Sq^i ⊗ Sq^j over the terms of [n, m]."""
    return _TensorAA([((_trim((i,)), _trim((j,))), 1) for i, j in _adem_terms(n, m)])


def adem_element(n, m):
    """
    The Adem element [n, m] in Ê_0.

    The relation Sq^nSq^m + Σ binom(m-k-1, n-2k) Sq^{n+m-k}Sq^k is
    evaluated with ∗, the binomials reduced mod 2 and lifted to 1.

    Parameters
    ----------

    n, m: int
        0 < n < 2m.

    Returns
    -------

    element: EHatElt
    """
    total = EHatElt()
    for i, j in _adem_terms(n, m):
        total = total + star_product(ehat(i), ehat(j))
    return total


def adem_row(n, m):
    """
    One row of the table of Adem relations in E_0.

    Returns
    -------

    row: dict
        'pair', 'definition', the D_0 column 'd0' and the X + μ_0X column
        'w' of [n, m].
    """
    element = adem_element(n, m)
    _logger.debug(f"[{n},{m}] = {element}")
    return {
        "pair": (n, m),
        "definition": adem_definition(n, m),
        "d0": element.d_part(),
        "w": element.w_part(),
    }


def theta_D(d):
    """θ_D: D_0 -> V, extracting Y_{-1,k}a as V_ka."""
    return VElt(
        [(("V", key[2], key[3]), c) for key, c in d.items() if key[0] == "Y" and key[1] == -1]
    )


def theta_E(x):
    """θ_E: Ê_0 -> V, extracting X_{-1,k}a as V_ka."""
    return VElt(
        [(("V", key[2], key[3]), c) for key, c in x.items() if key[0] == "X" and key[1] == -1]
    )


def theta_hat_D(d):
    """
    θ̂_D(d) = θ_D(d) + ψ(d)μ_0, written in V + μ_0V as

        θ_D(d) + Σ V_kκ(c_k) + μ_0 Σ V_kc_k,   c_k = cont(ξ_{k+1}, π(d))
    """
    terms = list(theta_D(d).items())
    for k, c in _contractions(_pi(d)).items():
        terms.extend((("MV", k, R), cr) for R, cr in c.items())
        terms.extend((("V", k, R), cr) for R, cr in _kappa(c).items())
    return VElt(terms)


def in_E0(x):
    """
    Whether x lies in E_0: no X_{k,-1} with k >= 0, and θ_D(ρ(x)) = θ_E(x).
    """
    if any(key[0] == "X" and key[2] == -1 for key in x.keys()):
        return False
    return theta_D(x.d_part()) == theta_E(x)


class TensorEE(_LinearCombination):
    """An element of Ê_0 ⊗ Ê_0 keyed by pairs of EHatElt keys."""

    __slots__ = ()

    @classmethod
    def _modulus(cls, key):
        return min(EHatElt._modulus(key[0]), EHatElt._modulus(key[1]))

    @classmethod
    def _key_degree(cls, key):
        return EHatElt._key_degree(key[0]) + EHatElt._key_degree(key[1])

    @classmethod
    def _key_symbol(cls, key):
        return f"{EHatElt._key_symbol(key[0])} (x) {EHatElt._key_symbol(key[1])}"

    @classmethod
    def _key_order(cls, key):
        return (EHatElt._key_order(key[0]), EHatElt._key_order(key[1]))

    def __mul__(self, other):
        if isinstance(other, TensorEE):
            return _bilinear(self, other, _tensor_star_basis, TensorEE)
        return super().__mul__(other)

    def project(self):
        """π ⊗ π: the part in A ⊗ A."""
        return _TensorAA(
            [((k1[1], k2[1]), c) for (k1, k2), c in self.items() if k1[0] == k2[0] == "Sq"]
        )

    def counit_left(self):
        """(ε ⊗ id), with ε the coefficient of 1."""
        return EHatElt([(k2, c) for (k1, k2), c in self.items() if k1 == ("Sq", ())])


def _tensor_star_basis(k1, k2):
    left = _star_basis(k1[0], k2[0])
    right = _star_basis(k1[1], k2[1])
    return TensorEE([((a, b), ca * cb) for a, ca in left for b, cb in right])


def delta0(x):
    """
    The multiplicative coproduct Δ_0 on Ê_0.

    Sq(R) maps to Σ_{E+F=R} Sq(E) ⊗ Sq(F), and the generators
    Z = Y_{k,l}, X_{k,l}, μ_0X_{k,l} are primitive.
    """
    terms = []
    for key, c in x.items():
        for (E, F), _ in _coproduct(_AElt({key[-1]: 1})).items():
            if key[0] == "Sq":
                terms.append(((("Sq", E), ("Sq", F)), c))
            else:
                terms.append(((key[:-1] + (E,), ("Sq", F)), c))
                terms.append(((("Sq", E), key[:-1] + (F,)), c))
    return TensorEE(terms)


class MuTensorAA(_LinearCombination):
    """
    An element of A ⊗ A + μ_0(A ⊗ A), keyed by (flag, R, S) with flag 1
    for the μ_0 summand.
    """

    __slots__ = ()

    @classmethod
    def _key_degree(cls, key):
        return _degree(key[1]) + _degree(key[2])

    @classmethod
    def _key_symbol(cls, key):
        t = _TensorAA._key_symbol(key[1:])
        return "u0 " + t if key[0] else t

    @classmethod
    def from_parts(cls, plain=None, mu0=None):
        terms = []
        if plain is not None:
            terms.extend(((0,) + k, c) for k, c in plain.items())
        if mu0 is not None:
            terms.extend(((1,) + k, c) for k, c in mu0.items())
        return cls(terms)

    def plain(self):
        return _TensorAA([(key[1:], c) for key, c in self.items() if not key[0]])

    def mu0(self):
        return _TensorAA([(key[1:], c) for key, c in self.items() if key[0]])

    def right_multiply(self, b):
        """t·Δb, on both summands."""
        return MuTensorAA.from_parts(
            self.plain().right_multiply(b), self.mu0().right_multiply(b)
        )


def mu_left_act(a, t):
    """
    The left action a·t = Δa·t and a·μ_0t = μ_0(Δa·t) + Δκ(a)·t.
    """
    da = _coproduct(a)
    plain = da * t.plain() + _coproduct(_kappa(a)) * t.mu0()
    return MuTensorAA.from_parts(plain, da * t.mu0())


def _right_basis(r):
    """
    Write r in R_E ∩ E_0 over the right A-basis 2, Z_k, Y_{k<l} (k >= 0),
    X_{k,l}, μ_0X_{k,l}. Returns (kind, k, l, R) with kind one of "2", "Z",
    "Y", "X", "MX".
    """
    if not isinstance(r, EHatElt):
        msg = "'r' must be of type 'EHatElt'"
        _logger.error(msg)
        raise TypeError(msg)
    out = []
    for key, c in r.items():
        kind = key[0]
        if kind == "Sq":
            if c % 2:
                msg = f"'{r}' is not a relation: it contains {c} {EHatElt._key_symbol(key)}"
                _logger.error(msg)
                raise _NonRelationError(msg)
            out.append(("2", None, None, key[1]))
        elif kind == "Y":
            k, l, R = key[1:]
            if k == -1:
                if r.coefficient(("X", -1, l, R)) != c:
                    msg = f"'{r}' is not in E_0: unmatched Y_{{-1,{l}}}"
                    _logger.error(msg)
                    raise _NonRelationError(msg)
                out.append(("Z", -1, l, R))
            else:
                out.append(("Y", k, l, R))
        elif kind == "X":
            k, l, R = key[1:]
            if l == -1:
                msg = f"'{r}' is not in E_0: it contains X_{{{k},-1}}"
                _logger.error(msg)
                raise _NonRelationError(msg)
            if k == -1:
                if r.coefficient(("Y", -1, l, R)) != c:
                    msg = f"'{r}' is not in E_0: unmatched X_{{-1,{l}}}"
                    _logger.error(msg)
                    raise _NonRelationError(msg)
                continue
            out.append(("X", k, l, R))
        else:
            out.append(("MX",) + key[1:])
    return out


def _q_tensor(l, k, R):
    # (Q_l ⊗ Q_k)·ΔSq(R).
    t = _TensorAA({(_delta(l + 1), _delta(k + 1)): 1})
    return t.right_multiply(_AElt({R: 1})) if R else t


def nabla(r):
    """
    The right linear map ∇: R_E ∩ E_0 -> A ⊗ A + μ_0(A ⊗ A) with

        ∇X_{k,l} = Q_l ⊗ Q_k, ∇μ_0X_{k,l} = μ_0 Q_l ⊗ Q_k,
        ∇Y_{k,l} = Q_l ⊗ Q_k (0 <= k < l),

    vanishing on 2D_0 and on Z_k = X_{-1,k} + Y_{-1,k}.
    """
    plain = _TensorAA()
    mu = _TensorAA()
    for kind, k, l, R in _right_basis(r):
        if kind in ("Y", "X"):
            plain = plain + _q_tensor(l, k, R)
        elif kind == "MX":
            mu = mu + _q_tensor(l, k, R)
    return MuTensorAA.from_parts(plain, mu)


def coz(r):
    """The plain part cöz(r) of ∇(r)."""
    return nabla(r).plain()


def L(r):
    """The left action operator, the μ_0 part of ∇(r)."""
    return nabla(r).mu0()


def S(r):
    """The symmetry operator S(r) = (1 + T)cöz(r)."""
    c = coz(r)
    return c + c.twist()


def _b_tensor(kk, ll):
    b = _AElt({_seq_add(_delta(kk + 1), _delta(ll + 1)): 1})
    one = _AElt.unit()
    return _TensorAA.from_factors(b, one) + _TensorAA.from_factors(one, b)


def op_sharp(a, r):
    """
    op♯(a, Δr) for r in R_E ∩ E_0, from the closed forms

        op♯(a, Δ(2d)) = Δ(κ(a)π(d)),
        op♯(a, ΔY_{k,l}) = Σ_{k+i >= l+j} (B ⊗ 1 + 1 ⊗ B)·Δcont(ξ_i^{2^{k+1}} ξ_j^{2^{l+1}}, a)

    with B = Sq(Δ_{k+i+1} + Δ_{l+j+1}), Z_k treated as Y_{-1,k}, and 0 on
    X_{k,l} and μ_0X_{k,l}. The result is extended right linearly.
    """
    total = _TensorAA()
    kappa_a = _kappa(a)
    for kind, k, l, R in _right_basis(r):
        right = _AElt({R: 1})
        if kind == "2":
            total = total + _coproduct(kappa_a * right)
        elif kind in ("Y", "Z"):
            for kk, ll, c in _u_left_terms(a, k, l):
                if kk >= ll:
                    total = total + (_b_tensor(kk, ll) * _coproduct(c)).right_multiply(right)
    return MuTensorAA.from_parts(total)


def linearity_defect_Phi(a, r):
    """Φ(a, r) = ∇(σ(a)∗r) - a·∇(r)."""
    lifted = EHatElt([(("Sq", R), 1) for R in a.keys()])
    return nabla(star_product(lifted, r)) - mu_left_act(a, nabla(r))


def phi_closed_form(a, r):
    """Δop(a, ρ(r)) + op♯(a, Δr), which agrees with Φ(a, r)."""
    op = _mult_map_op(a, r.d_part())
    return MuTensorAA.from_parts(_coproduct(op)) + op_sharp(a, r)


def L_R(t):
    """
    L_R(Sq^n ⊗ Sq^m) = Σ Sq^{n_1}Sq^{m_1} ⊗ Sq^{n_2}Sq^{m_2} over
    n_1 + n_2 = n, m_1 + m_2 = m with m_1 and n_2 odd.

    Parameters
    ----------

    t: TensorAA
        A sum of tensors of single squares.

    Returns
    -------

    image: TensorAA
    """
    total = _TensorAA()
    for (R, S_), c in t.items():
        if len(R) > 1 or len(S_) > 1:
            msg = f"L_R needs tensors of single squares, got {_TensorAA._key_symbol((R, S_))}"
            _logger.error(msg)
            raise ValueError(msg)
        n = R[0] if R else 0
        m = S_[0] if S_ else 0
        for n2 in range(1, n + 1, 2):
            for m1 in range(1, m + 1, 2):
                left = _AElt({_trim((n - n2,)): 1}) * _AElt({(m1,): 1})
                right = _AElt({(n2,): 1}) * _AElt({_trim((m - m1,)): 1})
                total = total + _TensorAA.from_factors(left, right)
    return total


class E1HatElt(_LinearCombination):
    """
    An element of Ê_1 = D_1 + W, keyed by the D_1 keys and the W keys of
    EHatElt. All coefficients are in F_2.
    """

    __slots__ = ()

    @classmethod
    def _key_degree(cls, key):
        if key[0] in ("X", "MX"):
            return _w_degree(key)
        return _D1Elt._key_degree(key)

    @classmethod
    def _key_symbol(cls, key):
        if key[0] in ("X", "MX"):
            return _w_symbol(key)
        return _D1Elt._key_symbol(key)

    @classmethod
    def _key_order(cls, key):
        return (_KIND_ORDER[key[0]],) + key[1:]

    @classmethod
    def from_parts(cls, d1, w=None):
        terms = list(d1.items())
        if w is not None:
            terms.extend(w.items())
        return cls(terms)

    def d_part(self):
        return _D1Elt([(k, c) for k, c in self.items() if k[0] in ("I", "M", "U")])

    def w_part(self):
        return EHatElt([(k, c) for k, c in self.items() if k[0] in ("X", "MX")])


def rho(x):
    """The projection ρ: Ê_• -> D_• that forgets X and μ_0X."""
    if isinstance(x, (EHatElt, E1HatElt)):
        return x.d_part()
    msg = f"Cannot project an element of type '{type(x).__name__}'"
    _logger.error(msg)
    raise TypeError(msg)


def boundary_hat(e):
    """∂e = ∂e_D + e_X from Ê_1 to Ê_0."""
    return EHatElt.from_d0(_boundary_d(e.d_part())) + e.w_part()


def u_E(r):
    """The splitting u_E = u_D + id_W of ∂ on R_E."""
    if not isinstance(r, EHatElt):
        msg = "'r' must be of type 'EHatElt'"
        _logger.error(msg)
        raise TypeError(msg)
    return E1HatElt.from_parts(_u_split(r.d_part()), r.w_part())


def in_E1(e):
    """Whether e lies in E_1 = ∂^{-1}(E_0)."""
    return in_E0(boundary_hat(e))
