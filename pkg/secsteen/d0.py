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
The Z/4 algebra D_0 and its dual Hopf algebra

    D_0* = Z/4[ξ_k, 2ξ_{k,l} | 0 <= k < l, ξ_0 = 1].

Elements of D_0 are Z/4 combinations of Sq(R) plus F_2 combinations of
Y_{k,l}Sq(R) with -1 <= k < l. The product is dual to the coproduct of
D_0*. It is computed from Milnor matrices, with the 2ξ_{k,l} factors of
the dual monomials placed by hand.
"""

__author__ = "The secsteen developers"

__all__ = [
    "D0Elt",
    "D0DualElt",
    "d0_sq",
    "d0_y",
    "y_degree",
    "dual_basis",
    "dual_coproduct",
    "d0_product",
    "d0_product_dual",
    "pair_d0",
    "pi",
    "sigma",
    "is_relation",
    "relation_basis",
    "u_left_terms",
    "y_left_action",
    "phi_eff",
]

import functools as _functools
import math as _math

from loguru import logger as _logger

from ._linear import LinearCombination as _LinearCombination
from ._linear import bilinear as _bilinear
from .steenrod import AElt as _AElt
from .steenrod import _matrix_rows
from .steenrod import contract as _contract
from .steenrod import degree as _degree
from .steenrod import delta as _delta
from .steenrod import milnor_basis as _milnor_basis
from .steenrod import seq_add as _seq_add
from .steenrod import seq_scale as _seq_scale
from .steenrod import seq_sub as _seq_sub
from .steenrod import trim as _trim
from .steenrod import xi as _xi


def y_degree(k, l):
    """The degree 2^{k+1} + 2^{l+1} - 1 of Y_{k,l}, U_{k,l} and X_{k,l}."""
    return (1 << (k + 1)) + (1 << (l + 1)) - 1


def _xi_kl_degree(k, l):
    return (1 << k) + (1 << l) - 1


class D0Elt(_LinearCombination):
    """
    An element of D_0.

    Keys are ("Sq", R) with Z/4 coefficients and ("Y", k, l, R) with F_2
    coefficients and -1 <= k < l.
    """

    __slots__ = ()

    @classmethod
    def _modulus(cls, key):
        return 4 if key[0] == "Sq" else 2

    @classmethod
    def _key_degree(cls, key):
        if key[0] == "Sq":
            return _degree(key[1])
        return y_degree(key[1], key[2]) + _degree(key[3])

    @classmethod
    def _key_symbol(cls, key):
        sq = _AElt._key_symbol(key[-1])
        if key[0] == "Sq":
            return sq
        y = f"Y_{{{key[1]},{key[2]}}}"
        return y if not key[-1] else y + sq

    @classmethod
    def unit(cls):
        return cls({("Sq", ()): 1})

    def sq_part(self):
        """The Sq-summand as a table R -> Z/4."""
        return {key[1]: c for key, c in self.items() if key[0] == "Sq"}

    def y_part(self):
        """The Y-summand as a table (k, l, R) -> F_2."""
        return {key[1:]: c for key, c in self.items() if key[0] == "Y"}

    def __mul__(self, other):
        if isinstance(other, D0Elt):
            return d0_product(self, other)
        return super().__mul__(other)


class D0DualElt(_LinearCombination):
    """
    An element of D_0*.

    Keys are ("xi", R) meaning ξ^R with Z/4 coefficients and
    ("2xi", k, l, R) meaning 2ξ_{k,l}ξ^R, 0 <= k < l, with F_2
    coefficients.
    """

    __slots__ = ()

    @classmethod
    def _modulus(cls, key):
        return 4 if key[0] == "xi" else 2

    @classmethod
    def _key_degree(cls, key):
        if key[0] == "xi":
            return _degree(key[1])
        return _xi_kl_degree(key[1], key[2]) + _degree(key[3])


def d0_sq(*R, coeff=1):
    """The element coeff·Sq(R) of D_0."""
    return D0Elt({("Sq", _trim(R)): coeff})


def d0_y(k, l, R=()):
    """
    The element Y_{k,l}Sq(R) of D_0.

    Y_{l,k} = Y_{k,l} and Y_{k,k} = 2Sq(Δ_{k+2}) are applied here, so any
    pair of indices >= -1 is accepted.
    """
    return _y_normalized(k, l, _AElt({_trim(R): 1}))


def _y_normalized(k, l, a):
    # Y_{k,l}·a for a in A, with the index rules applied.
    if k < -1 or l < -1:
        msg = f"Y-indices must be >= -1, got ({k}, {l})"
        _logger.error(msg)
        raise ValueError(msg)
    if k > l:
        k, l = l, k
    if k == l:
        return 2 * sigma(_AElt({_delta(k + 2): 1}) * a)
    return D0Elt([(("Y", k, l, R), c) for R, c in a.items()])


@_functools.cache
def dual_basis(d):
    """
    The monomial basis of D_0* in degree 'd'.

    Returns
    -------

    basis: tuple
        Keys ("xi", R) and ("2xi", k, l, R).
    """
    keys = [("xi", R) for R in _milnor_basis(d)]
    l = 1
    while _xi_kl_degree(0, l) <= d:
        for k in range(l):
            rest = d - _xi_kl_degree(k, l)
            if rest >= 0:
                keys.extend(("2xi", k, l, R) for R in _milnor_basis(rest))
        l += 1
    return tuple(keys)


def _xi_power(n, e):
    if n < 0:
        return None
    if n == 0 or e == 0:
        return ()
    return _seq_scale(_delta(n), e)


def _mono(*powers):
    # The product of ξ_n^e factors, or None if some subscript is negative.
    total = ()
    for n, e in powers:
        p = _xi_power(n, e)
        if p is None:
            return None
        total = _seq_add(total, p)
    return total


@_functools.cache
def _xi_coproduct_terms(n):
    # Δξ_n as (left R, left 2ξ, right R, right 2ξ, coefficient).
    terms = []
    for i in range(n + 1):
        j = n - i
        terms.append((_mono((i, 1 << j)), None, _mono((j, 1)), None, 1))
    for l in range(1, n):
        for k in range(l):
            left = _mono((n - 1 - k, 1 << k), (n - 1 - l, 1 << l))
            if left is not None:
                terms.append((left, None, (), (k, l), 1))
    return tuple(terms)


@_functools.cache
def _two_xi_coproduct_terms(n, m):
    # Δ(2ξ_{n,m}) for 0 <= n < m.
    terms = [((), (n, m), (), None, 1)]
    for k in range(n + 1):
        left = _mono((n - k, 1 << k), (m - k, 1 << k))
        if left is not None:
            terms.append((left, None, _mono((k + 1, 1)), None, 2))
    for l in range(1, m + 1):
        for k in range(l):
            for left in (
                _mono((n - k, 1 << k), (m - l, 1 << l)),
                _mono((m - k, 1 << k), (n - l, 1 << l)),
            ):
                if left is not None:
                    terms.append((left, None, (), (k, l), 1))
    return tuple(terms)


def _factors(key):
    # The generator coproducts whose product is Δ(key).
    factors = []
    if key[0] == "2xi":
        factors.append(_two_xi_coproduct_terms(key[1], key[2]))
    for n, t in enumerate(key[-1], 1):
        factors.extend([_xi_coproduct_terms(n)] * t)
    return factors


def _fits(R, bound):
    return bound is None or _seq_sub(bound, R) is not None


def _expand(key, bound=None):
    """
    Δ(key) as a table (left key, right key) -> coefficient.

    When 'bound' = (left key, right key) is given, partial products that
    cannot divide the bound are discarded as soon as they appear.
    """
    if bound is not None:
        lb, rb = bound
        l_r, l_2 = lb[-1], (lb[1:3] if lb[0] == "2xi" else None)
        r_r, r_2 = rb[-1], (rb[1:3] if rb[0] == "2xi" else None)
    else:
        l_r = l_2 = r_r = r_2 = None

    states = {((), None, (), None): 1}
    for factor in _factors(key):
        new = {}
        for (lr, l2, rr, r2), c in states.items():
            for fl, fl2, fr, fr2, fc in factor:
                if (l2 and fl2) or (r2 and fr2):
                    continue
                nl2 = l2 or fl2
                nr2 = r2 or fr2
                if nl2 and nr2:
                    continue
                if bound is not None and (
                    (nl2 is not None and nl2 != l_2) or (nr2 is not None and nr2 != r_2)
                ):
                    continue
                nlr = _seq_add(lr, fl)
                nrr = _seq_add(rr, fr)
                if not (_fits(nlr, l_r) and _fits(nrr, r_r)):
                    continue
                state = (nlr, nl2, nrr, nr2)
                modulus = 2 if (nl2 or nr2) else 4
                value = (new.get(state, 0) + c * fc) % modulus
                if value:
                    new[state] = value
                else:
                    new.pop(state, None)
        states = new
        if not states:
            break

    table = {}
    for (lr, l2, rr, r2), c in states.items():
        left = ("xi", lr) if l2 is None else ("2xi", l2[0], l2[1], lr)
        right = ("xi", rr) if r2 is None else ("2xi", r2[0], r2[1], rr)
        table[(left, right)] = c
    return table


def dual_coproduct(m):
    """
    The coproduct of a monomial of D_0*.

    Parameters
    ----------

    m: tuple
        A key ("xi", R) or ("2xi", k, l, R) with 0 <= k < l.

    Returns
    -------

    coproduct: dict
        (left key, right key) -> coefficient. Pairs involving a 2ξ factor
        carry F_2 coefficients, all others Z/4 coefficients.
    """
    if m[0] == "2xi" and not 0 <= m[1] < m[2]:
        msg = f"2ξ_{{k,l}} needs 0 <= k < l, got ({m[1]}, {m[2]})"
        _logger.error(msg)
        raise ValueError(msg)
    return _expand(m)


def _dual_key(key):
    # The dual monomial of a D_0 basis key and the value of their pairing.
    if key[0] == "Sq":
        return ("xi", key[1]), 1
    return ("2xi", key[1] + 1, key[2] + 1, key[3]), 2


def _multinomial(parts):
    value, total = 1, 0
    for x in parts:
        total += x
        value *= _math.comb(total, x)
    return value


@_functools.cache
def _matrices(L, R):
    # T -> coefficient of ξ^L ⊗ ξ^R in Δξ^T mod 4, for the ξ⊗ξ part of the
    # coproduct. Each Milnor matrix contributes the product of the
    # multinomials of its anti-diagonals.
    result = {}
    rows = len(L)

    def search(i, caps, chosen):
        if i == rows:
            matrix = [(0,) + caps]
            for r, row in zip(L, chosen):
                matrix.append((r - sum((1 << j) * x for j, x in enumerate(row, 1)),) + row)
            T = []
            c = 1
            for n in range(1, rows + len(R) + 1):
                diagonal = [matrix[k][n - k] for k in range(max(0, n - len(R)), min(n, rows) + 1)]
                T.append(sum(diagonal))
                c = c * _multinomial(diagonal) % 4
            if c:
                T = _trim(T)
                result[T] = (result.get(T, 0) + c) % 4
            return
        for row in _matrix_rows(L[i], caps):
            search(i + 1, tuple(c - x for c, x in zip(caps, row)), chosen + (row,))

    search(0, tuple(R), ())
    return {T: c for T, c in result.items() if c}


def _entry(T, n):
    return T[n - 1] if n <= len(T) else 0


@_functools.cache
def _basis_product(k1, k2):
    # The ξ⊗ξ part of Δ is Milnor's, so every product reduces to Milnor
    # matrices once the 2ξ factor of the dual monomial is placed.
    if k1[0] == "Y" and k2[0] == "Y":
        return ()
    terms = {}

    def add(key, c):
        modulus = 4 if key[0] == "Sq" else 2
        value = (terms.get(key, 0) + c) % modulus
        if value:
            terms[key] = value
        else:
            terms.pop(key, None)

    R1, R2 = k1[-1], k2[-1]
    if k1[0] == "Y":
        # 2ξ_{k+1,l+1} can only reach the left factor through its own
        # summand 2ξ_{k+1,l+1} ⊗ 1.
        for T, c in _matrices(R1, R2).items():
            add(("Y", k1[1], k1[2], T), c)
        return tuple(terms.items())

    if k2[0] == "Sq":
        for T, c in _matrices(R1, R2).items():
            add(("Sq", T), c)
        # 2ξ_{n,m} ⊗ ... ⊃ 2 ξ_{n-k}^{2^k}ξ_{m-k}^{2^k} ⊗ ξ_{k+1}.
        for k in range(len(R2)):
            right = _seq_sub(R2, _delta(k + 1))
            if right is None:
                continue
            for m in range(k + 1, k + len(R1) + 1):
                for n in range(k, m):
                    left = _seq_sub(R1, _mono((n - k, 1 << k), (m - k, 1 << k)))
                    if left is None:
                        continue
                    for T, c in _matrices(left, right).items():
                        add(("Y", n - 1, m - 1, T), c)
        return tuple(terms.items())

    # Sq(R1) Y_{p-1,q-1}(R2): the right factor 2ξ_{p,q} comes from a ξ_n or
    # from a 2ξ_{n,m}.
    p, q = k2[1] + 1, k2[2] + 1
    for n in range(q + 1, p + len(R1) + 2):
        left = _seq_sub(R1, _mono((n - 1 - p, 1 << p), (n - 1 - q, 1 << q)))
        if left is None:
            continue
        for T, c in _matrices(left, R2).items():
            c = c * (_entry(T, n) + 1) % 2
            if c:
                add(("Sq", _seq_add(T, _delta(n))), 2)
    for n in range(q + len(R1) + 1):
        for m in range(max(n + 1, q), q + len(R1) + 1):
            for mono in (
                _mono((n - p, 1 << p), (m - q, 1 << q)),
                _mono((m - p, 1 << p), (n - q, 1 << q)),
            ):
                left = None if mono is None else _seq_sub(R1, mono)
                if left is None:
                    continue
                for T, c in _matrices(left, R2).items():
                    add(("Y", n - 1, m - 1, T), c)
    return tuple(terms.items())


@_functools.cache
def _dual_basis_product(k1, k2):
    d = D0Elt._key_degree(k1) + D0Elt._key_degree(k2)
    m1, w1 = _dual_key(k1)
    m2, w2 = _dual_key(k2)
    weight = w1 * w2
    if weight == 4:
        return ()
    terms = []
    for m in dual_basis(d):
        c = _expand(m, (m1, m2)).get((m1, m2), 0)
        value = (c * weight) % 4
        if not value:
            continue
        if m[0] == "xi":
            terms.append((("Sq", m[1]), value))
        else:
            # <Y_{k,l}(R), 2ξ_{k+1,l+1}ξ^R> = 2.
            if value % 2:
                raise ArithmeticError(f"Odd pairing value against {m}")
            terms.append((("Y", m[1] - 1, m[2] - 1, m[3]), value // 2))
    return tuple(terms)


def d0_product(x, y):
    """
    The product in D_0.

    The coefficient of a basis element of xy is the pairing <x ⊗ y, Δm>
    with its dual monomial m. Only monomials m reachable from Milnor
    matrices are visited, so large degrees stay cheap.

    Parameters
    ----------

    x, y: D0Elt
        The factors.

    Returns
    -------

    product: D0Elt
    """
    if not isinstance(x, D0Elt) or not isinstance(y, D0Elt):
        msg = "'x' and 'y' must be of type 'D0Elt'"
        _logger.error(msg)
        raise TypeError(msg)
    return _bilinear(x, y, lambda k1, k2: D0Elt(_basis_product(k1, k2)), D0Elt)


def d0_product_dual(x, y):
    """
    The product in D_0 by expanding Δm for every monomial m of D_0* in
    the target degree.

    This is an independent implementation used to cross check
    'd0_product'.
    """
    if not isinstance(x, D0Elt) or not isinstance(y, D0Elt):
        msg = "'x' and 'y' must be of type 'D0Elt'"
        _logger.error(msg)
        raise TypeError(msg)
    return _bilinear(x, y, lambda k1, k2: D0Elt(_dual_basis_product(k1, k2)), D0Elt)


def pair_d0(x, m):
    """
    The Z/4 valued pairing of x in D_0 with a dual monomial key 'm'.
    """
    total = 0
    for key, c in x.items():
        dual, weight = _dual_key(key)
        if dual == m:
            total += c * weight
    return total % 4


def pi(x):
    """The projection π: D_0 -> A. Sq(R) reduces mod 2 and Y maps to 0."""
    return _AElt([(key[1], c) for key, c in x.items() if key[0] == "Sq"])


def sigma(a):
    """The set theoretic section σ: A -> D_0 lifting coefficients 1 to 1."""
    return D0Elt([(("Sq", R), 1) for R, c in a.items()])


def is_relation(x):
    """Whether x lies in the relation module R_D = ker π."""
    return not pi(x)


def relation_basis(d):
    """
    The F_2 basis of R_D in degree 'd': 2Sq(R) and Y_{k,l}Sq(R).
    """
    keys = [("Sq", R) for R in _milnor_basis(d)]
    l = 0
    while y_degree(-1, l) <= d:
        for k in range(-1, l):
            rest = d - y_degree(k, l)
            if rest >= 0:
                keys.extend(("Y", k, l, R) for R in _milnor_basis(rest))
        l += 1
    return keys


def u_left_terms(a, k, l):
    """
    The left action a·U_{k,l} = Σ U_{k+i,l+j} cont(ξ_i^{2^{k+1}} ξ_j^{2^{l+1}}, a)
    on the free bimodule generated by the U_{k,l}.

    Returns
    -------

    terms: list of (int, int, AElt)
        Triples (k+i, l+j, contraction) with nonzero contraction. The
        indices are not normalized.
    """
    d = max(a.degrees(), default=0)
    out = []
    ei, ej = 1 << (k + 1), 1 << (l + 1)
    i = 0
    while _degree(_mono((i, ei))) <= d:
        j = 0
        while True:
            mono = _mono((i, ei), (j, ej))
            if _degree(mono) > d:
                break
            c = _contract(_xi(mono), a)
            if c:
                out.append((k + i, l + j, c))
            j += 1
        i += 1
    return out


def y_left_action(a, k, l, R=()):
    """
    The closed form of the left action a·Y_{k,l}Sq(R).

    Parameters
    ----------

    a: AElt
        The acting element, lifted to D_0 by σ.

    k, l: int
        The Y-indices, -1 <= k < l.

    R: tuple of int
        The right factor Sq(R).

    Returns
    -------

    product: D0Elt
    """
    if not -1 <= k < l:
        msg = f"'y_left_action' needs -1 <= k < l, got ({k}, {l})"
        _logger.error(msg)
        raise ValueError(msg)
    right = _AElt({_trim(R): 1})
    total = D0Elt()
    for kk, ll, c in u_left_terms(a, k, l):
        total = total + _y_normalized(kk, ll, c * right)
    return total


def phi_eff(k, l, R=()):
    """
    The map φ: U -> D_0 with U_{k,l} -> Y_{k,l} and U_{k,k} -> 2Q_{k+1}.

    Parameters
    ----------

    k, l: int
        Indices >= -1.

    R: tuple of int
        The right factor Sq(R).

    Returns
    -------

    image: D0Elt
    """
    return d0_y(k, l, R)
