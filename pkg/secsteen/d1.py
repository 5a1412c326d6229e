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
The A-bimodule D_1 with its boundary ∂: D_1 -> D_0.

Every element is kept in the normal form

    ι(a) + μ_0 b + Σ_{-1<=k<l} U_{k,l} c_{k,l}

where ι: ΣA -> D_1 is the kernel of ∂. Raw generators U_{k,l} with k >= l
are rewritten by

    U_{k,l} = U_{l,k} + Sq(Δ_{k+1} + Δ_{l+1})      (l < k)
    U_{k,k} = μ_0 Sq(Δ_{k+2}) + Sq(2Δ_{k+1})

where the Sq-terms live in ι(A).
"""

__author__ = "The secsteen developers"

__all__ = [
    "D1Elt",
    "iota",
    "mu0",
    "normalize_u",
    "left_act",
    "right_act",
    "left_act_raw",
    "boundary",
    "u_split",
    "mult_map_op",
    "op_closed_form",
    "d1_basis",
    "exactness_ranks",
    "peiffer_defect",
]

from loguru import logger as _logger

from ._exceptions import NonCycleError as _NonCycleError
from ._exceptions import NonRelationError as _NonRelationError
from ._linear import LinearCombination as _LinearCombination
from ._linear import gf2_rank as _gf2_rank
from .d0 import D0Elt as _D0Elt
from .d0 import d0_product as _d0_product
from .d0 import pi as _pi
from .d0 import relation_basis as _relation_basis
from .d0 import sigma as _sigma
from .d0 import u_left_terms as _u_left_terms
from .d0 import y_degree as _y_degree
from .steenrod import AElt as _AElt
from .steenrod import degree as _degree
from .steenrod import delta as _delta
from .steenrod import kappa as _kappa
from .steenrod import milnor_basis as _milnor_basis
from .steenrod import seq_add as _seq_add
from .steenrod import trim as _trim


class D1Elt(_LinearCombination):
    """
    An element of D_1 in normal form.

    Keys are ("I", R) for ι(Sq(R)), ("M", R) for μ_0Sq(R) and
    ("U", k, l, R) for U_{k,l}Sq(R) with -1 <= k < l. Coefficients are
    in F_2.
    """

    __slots__ = ()

    @classmethod
    def _key_degree(cls, key):
        if key[0] == "I":
            return _degree(key[1]) + 1
        if key[0] == "M":
            return _degree(key[1])
        return _y_degree(key[1], key[2]) + _degree(key[3])

    @classmethod
    def _key_symbol(cls, key):
        sq = _AElt._key_symbol(key[-1])
        if key[0] == "I":
            return f"iota({sq})"
        if key[0] == "M":
            return "u0" if not key[1] else f"u0 {sq}"
        u = f"U_{{{key[1]},{key[2]}}}"
        return u if not key[-1] else u + sq

    def iota_part(self):
        """The A-component of the ι-summand."""
        return _AElt([(key[1], c) for key, c in self.items() if key[0] == "I"])

    def mu0_part(self):
        """The A-component of the μ_0-summand."""
        return _AElt([(key[1], c) for key, c in self.items() if key[0] == "M"])

    def u_part(self):
        """The U-summand as a table (k, l, R) -> F_2."""
        return {key[1:]: c for key, c in self.items() if key[0] == "U"}

    def __mul__(self, other):
        if isinstance(other, _AElt):
            return right_act(self, other)
        return super().__mul__(other)

    def __rmul__(self, other):
        if isinstance(other, _AElt):
            return left_act(other, self)
        return super().__rmul__(other)


def iota(a):
    """The inclusion ι: ΣA -> D_1."""
    return D1Elt([(("I", R), c) for R, c in a.items()])


def mu0(a=None):
    """The element μ_0·a of D_1, with μ_0 itself for a = None."""
    if a is None:
        a = _AElt.unit()
    return D1Elt([(("M", R), c) for R, c in a.items()])


def _u_normalized(k, l, b):
    # U_{k,l}·b for b in A, rewritten into normal form.
    if k < -1 or l < -1:
        msg = f"U-indices must be >= -1, got ({k}, {l})"
        _logger.error(msg)
        raise ValueError(msg)
    if min(k, l) == -1 and k >= l:
        msg = f"U_{{{k},{l}}} is not a generator of D_1"
        _logger.error(msg)
        raise ValueError(msg)
    if k < l:
        return D1Elt([(("U", k, l, R), c) for R, c in b.items()])
    if k > l:
        correction = _AElt({_seq_add(_delta(k + 1), _delta(l + 1)): 1}) * b
        return D1Elt([(("U", l, k, R), c) for R, c in b.items()]) + iota(correction)
    return mu0(_AElt({_delta(k + 2): 1}) * b) + iota(
        _AElt({_seq_add(_delta(k + 1), _delta(k + 1)): 1}) * b
    )


def normalize_u(k, l, R=()):
    """
    The normal form of the raw term U_{k,l}Sq(R).

    Parameters
    ----------

    k, l: int
        Indices >= -1. U_{-1,-1} and U_{k,-1} for k >= 0 are not
        generators and are rejected.

    R: tuple of int
        The right factor Sq(R).

    Returns
    -------

    element: D1Elt
    """
    return _u_normalized(k, l, _AElt({_trim(tuple(R)): 1}))


def left_act_raw(a, k, l, R=()):
    """
    a·U_{k,l}Sq(R) computed on the raw generator, normalizing only the
    terms of the result. For k >= l this is compared against
    left_act(a, normalize_u(k, l, R)).
    """
    right = _AElt({_trim(tuple(R)): 1})
    total = D1Elt()
    for kk, ll, c in _u_left_terms(a, k, l):
        total = total + _u_normalized(kk, ll, c * right)
    return total


def left_act(a, x):
    """
    The left action of A on D_1.

    a·ι(c) = ι(ac), a·μ_0c = μ_0ac + ι(κ(a)c) and
    a·U_{k,l}c = Σ U_{k+i,l+j} cont(ξ_i^{2^{k+1}} ξ_j^{2^{l+1}}, a) c.

    Parameters
    ----------

    a: AElt

    x: D1Elt

    Returns
    -------

    product: D1Elt
    """
    if not isinstance(a, _AElt):
        msg = "'a' must be of type 'AElt'"
        _logger.error(msg)
        raise TypeError(msg)
    if not isinstance(x, D1Elt):
        msg = "'x' must be of type 'D1Elt'"
        _logger.error(msg)
        raise TypeError(msg)

    total = D1Elt()
    kappa_a = _kappa(a)
    for key, c in x.items():
        right = _AElt({key[-1]: c})
        if key[0] == "I":
            total = total + iota(a * right)
        elif key[0] == "M":
            total = total + mu0(a * right) + iota(kappa_a * right)
        else:
            total = total + left_act_raw(a, key[1], key[2], key[3])
    return total


def right_act(x, b):
    """The right action of A on D_1, which is multiplication on the A-factor."""
    if not isinstance(b, _AElt):
        msg = "'b' must be of type 'AElt'"
        _logger.error(msg)
        raise TypeError(msg)
    terms = []
    for key, c in x.items():
        for R, cr in (_AElt({key[-1]: c}) * b).items():
            terms.append((key[:-1] + (R,), cr))
    return D1Elt(terms)


def boundary(x):
    """
    The boundary ∂: D_1 -> D_0 with ∂ι = 0, ∂μ_0a = 2a and
    ∂U_{k,l}a = Y_{k,l}a.
    """
    terms = []
    for key, c in x.items():
        if key[0] == "M":
            terms.append((("Sq", key[1]), 2 * c))
        elif key[0] == "U":
            terms.append((("Y",) + key[1:], c))
    return _D0Elt(terms)


def u_split(r):
    """
    The right linear splitting u: R_D -> D_1 of ∂ with
    2Sq(R) -> μ_0Sq(R) and Y_{k,l}Sq(R) -> U_{k,l}Sq(R).

    Parameters
    ----------

    r: D0Elt
        An element of R_D = ker π.

    Returns
    -------

    lift: D1Elt
    """
    if not isinstance(r, _D0Elt):
        msg = "'r' must be of type 'D0Elt'"
        _logger.error(msg)
        raise TypeError(msg)
    if _pi(r):
        msg = f"'{r}' is not a relation: its image in A is '{_pi(r)}'"
        _logger.error(msg)
        raise _NonRelationError(msg)

    terms = []
    for key, c in r.items():
        if key[0] == "Sq":
            terms.append((("M", key[1]), c // 2))
        else:
            terms.append((("U",) + key[1:], c))
    return D1Elt(terms)


def mult_map_op(a, r):
    """
    The multiplication map op: A ⊗ R_D -> A defined by

        a·u(r) = u(σ(a)·r) + ι(op(a, r))

    Parameters
    ----------

    a: AElt

    r: D0Elt
        An element of R_D.

    Returns
    -------

    op: AElt
    """
    difference = left_act(a, u_split(r)) + u_split(_d0_product(_sigma(a), r))
    rest = difference.filter(lambda key: key[0] != "I")
    if rest:
        msg = f"op({a}, {r}) leaves a non-ι part '{rest}'"
        _logger.error(msg)
        raise _NonCycleError(msg)
    return difference.iota_part()


def op_closed_form(a, r):
    """
    op(a, r) from the closed forms op(a, 2d) = κ(a)π(d) and

        op(a, Y_{k,l}) = Σ_{k+i >= l+j} Sq(Δ_{k+i+1} + Δ_{l+j+1})
                             cont(ξ_i^{2^{k+1}} ξ_j^{2^{l+1}}, a)

    extended right linearly.
    """
    total = _AElt()
    kappa_a = _kappa(a)
    for key, c in r.items():
        right = _AElt({key[-1]: 1})
        if key[0] == "Sq":
            if c % 2:
                msg = f"'{r}' is not a relation"
                _logger.error(msg)
                raise _NonRelationError(msg)
            total = total + kappa_a * right
            continue
        for kk, ll, cc in _u_left_terms(a, key[1], key[2]):
            if kk >= ll:
                head = _AElt({_seq_add(_delta(kk + 1), _delta(ll + 1)): 1})
                total = total + head * cc * right
    return total


def d1_basis(d):
    """
    The F_2 basis of D_1 in degree 'd' as a list of keys.
    """
    keys = [("I", R) for R in _milnor_basis(d - 1)] if d >= 1 else []
    keys.extend(("M", R) for R in _milnor_basis(d))
    keys.extend(
        ("U",) + key[1:] for key in _relation_basis(d) if key[0] == "Y"
    )
    return keys


def exactness_ranks(d):
    """
    Ranks certifying exactness of A -> D_1 -> D_0 -> A in degree 'd'.

    The matrix of ∂ is written in the F_2 basis {2Sq(R), Y_{k,l}Sq(R)} of
    R_D, and its rank and nullity are computed over F_2.

    Returns
    -------

    report: dict
        Basis sizes, the rank of ∂ and its nullity, and whether kernel and
        image are the expected ones.
    """
    source = d1_basis(d)
    target = _relation_basis(d)
    index = {key: i for i, key in enumerate(target)}
    matrix = [[0] * len(target) for _ in source]
    for row, key in enumerate(source):
        image = boundary(D1Elt({key: 1}))
        for tkey, c in image.items():
            if tkey[0] == "Sq":
                if c % 2:
                    msg = f"∂{key} is not a relation"
                    _logger.error(msg)
                    raise _NonRelationError(msg)
                c //= 2
            matrix[row][index[tkey]] = c
    rank = _gf2_rank(matrix) if source and target else 0
    nullity = len(source) - rank
    dim_a_shifted = len(_milnor_basis(d - 1)) if d >= 1 else 0
    report = {
        "degree": d,
        "dim_D1": len(source),
        "dim_RD": len(target),
        "rank": rank,
        "nullity": nullity,
        "dim_A_shifted": dim_a_shifted,
        "exact": rank == len(target) and nullity == dim_a_shifted,
    }
    _logger.debug(f"Exactness in degree {d}: {report}")
    return report


def peiffer_defect(x, y):
    """
    (∂x)·y - x·(∂y) with D_0 acting on D_1 through π.

    The result is identically 0, since π∘∂ = 0 makes both actions act by
    zero. The bimodule structure leaves nothing else to compare, so this is
    a consistency check of 'boundary' landing in the kernel of π.
    """
    return left_act(_pi(boundary(x)), y) - right_act(x, _pi(boundary(y)))
