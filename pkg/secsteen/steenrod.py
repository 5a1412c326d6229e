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
Exact arithmetic in the mod 2 Steenrod algebra A and its dual A_*,
written in the Milnor basis.

Exponent sequences are tuples of non-negative integers with trailing
zeros trimmed. |Sq(R)| = Σ r_i(2^i - 1) and |ξ_n| = 2^n - 1.
"""

__author__ = "The secsteen developers"

__all__ = [
    "AElt",
    "ADualElt",
    "TensorAA",
    "Sq",
    "sq",
    "xi",
    "trim",
    "degree",
    "delta",
    "seq_add",
    "seq_sub",
    "seq_scale",
    "milnor_basis",
    "milnor_product",
    "milnor_product_matrix",
    "coproduct",
    "coproduct_coefficient",
    "contract",
    "kappa",
    "q_element",
    "p_element",
    "pair",
    "pair_tensor",
    "q_commutator",
    "p_commutator",
]

import functools as _functools
import itertools as _itertools

from loguru import logger as _logger

from ._linear import LinearCombination as _LinearCombination
from ._linear import bilinear as _bilinear


def trim(seq):
    """Drop trailing zeros from an exponent sequence."""
    seq = list(seq)
    while seq and seq[-1] == 0:
        seq.pop()
    return tuple(seq)


def degree(R):
    """
    The internal degree of an exponent sequence.

    Parameters
    ----------

    R: tuple of int
        The exponent sequence (r_1, r_2, ...).

    Returns
    -------

    degree: int
        Σ r_i(2^i - 1).
    """
    return sum(r * ((1 << i) - 1) for i, r in enumerate(R, 1))


def delta(k):
    """The unit sequence Δ_k, so that ξ^{Δ_k} = ξ_k."""
    if k < 1:
        raise ValueError(f"Δ_k needs k >= 1, got {k}")
    return (0,) * (k - 1) + (1,)


def seq_add(R, S):
    n = max(len(R), len(S))
    R = tuple(R) + (0,) * (n - len(R))
    S = tuple(S) + (0,) * (n - len(S))
    return trim(r + s for r, s in zip(R, S))


def seq_sub(R, S):
    """R - S, or None if some entry would be negative."""
    if len(S) > len(R) and any(S[len(R) :]):
        return None
    R = list(R)
    for i, s in enumerate(S):
        if s > R[i]:
            return None
        R[i] -= s
    return trim(R)


def seq_scale(R, c):
    return trim(c * r for r in R)


def _compositions(d, n):
    # Sequences of length <= n using ξ_1..ξ_n with degree exactly d.
    if n == 0:
        return [()] if d == 0 else []
    weight = (1 << n) - 1
    out = []
    for r in range(d // weight + 1):
        for head in _compositions(d - r * weight, n - 1):
            head = head + (0,) * (n - 1 - len(head))
            out.append(trim(head + (r,)))
    return out


@_functools.cache
def milnor_basis(d):
    """
    All exponent sequences of internal degree 'd', sorted.

    These index both the Milnor basis of A and the monomial basis of A_*
    in that degree.
    """
    if d < 0:
        return ()
    n = (d + 1).bit_length() - 1
    return tuple(sorted(_compositions(d, n)))


def _seq_symbol(R):
    return ",".join(str(r) for r in R)


class AElt(_LinearCombination):
    """An element of the Steenrod algebra in the Milnor basis."""

    __slots__ = ()

    @classmethod
    def _key_degree(cls, key):
        return degree(key)

    @classmethod
    def _key_symbol(cls, key):
        return f"Sq({_seq_symbol(key)})" if key else "1"

    @classmethod
    def unit(cls):
        return cls({(): 1})

    def __mul__(self, other):
        if isinstance(other, AElt):
            return milnor_product(self, other)
        return super().__mul__(other)


class ADualElt(_LinearCombination):
    """An element of the dual Steenrod algebra A_* = F_2[ξ_1, ξ_2, ...]."""

    __slots__ = ()

    @classmethod
    def _key_degree(cls, key):
        return degree(key)

    @classmethod
    def _key_symbol(cls, key):
        if not key:
            return "1"
        factors = []
        for i, r in enumerate(key, 1):
            if r == 1:
                factors.append(f"xi_{i}")
            elif r > 1:
                factors.append(f"xi_{i}^{r}")
        return " ".join(factors)

    @classmethod
    def unit(cls):
        return cls({(): 1})

    def __mul__(self, other):
        if isinstance(other, ADualElt):
            return _bilinear(
                self, other, lambda R, S: ADualElt({seq_add(R, S): 1}), ADualElt
            )
        return super().__mul__(other)


class TensorAA(_LinearCombination):
    """An element of A ⊗ A, keyed by pairs of exponent sequences."""

    __slots__ = ()

    @classmethod
    def _key_degree(cls, key):
        return degree(key[0]) + degree(key[1])

    @classmethod
    def _key_symbol(cls, key):
        return f"{AElt._key_symbol(key[0])} (x) {AElt._key_symbol(key[1])}"

    @classmethod
    def from_factors(cls, x, y):
        """The elementary tensor x ⊗ y of two elements of A."""
        return cls([((R, S), cx * cy) for R, cx in x.items() for S, cy in y.items()])

    def twist(self):
        """The symmetry T(x ⊗ y) = y ⊗ x."""
        return self.map_keys(lambda key: (key[1], key[0]))

    def left_factors(self):
        return AElt([(R, c) for (R, _), c in self.items()])

    def __mul__(self, other):
        if isinstance(other, TensorAA):
            return _bilinear(self, other, _tensor_basis_product, TensorAA)
        return super().__mul__(other)

    def right_multiply(self, a):
        """The right action (x ⊗ y)·a = Σ x a' ⊗ y a''."""
        return self * coproduct(a)


def _tensor_basis_product(k1, k2):
    left = _product_basis(k1[0], k2[0])
    right = _product_basis(k1[1], k2[1])
    return TensorAA([((R, S), 1) for R in left for S in right])


def Sq(*R):
    """The Milnor basis element Sq(r_1, r_2, ...)."""
    if any((not isinstance(r, int)) or r < 0 for r in R):
        raise ValueError(f"Invalid exponent sequence {R}")
    return AElt({trim(R): 1})


def sq(n):
    """The single square Sq^n = Sq(n)."""
    return Sq(n)


def xi(R):
    """The dual monomial ξ^R."""
    return ADualElt({trim(R): 1})


def _xi_power(n, e):
    # ξ_n^e as an exponent sequence, with ξ_0 = 1.
    if n == 0 or e == 0:
        return ()
    return seq_scale(delta(n), e)


def coproduct_coefficient(T, R, S):
    """
    The coefficient of ξ^R ⊗ ξ^S in Δξ^T, modulo 2.

    Δξ_n = Σ_{i+j=n} ξ_i^{2^j} ⊗ ξ_j. Over F_2 the power ξ_n^{t} splits
    by the binary digits of t, and each digit contributes one factor
    Σ ξ_i^{2^{j+b}} ⊗ ξ_j^{2^b}. The expansion is searched depth first,
    pruning any partial product that already exceeds R or S.
    """
    if degree(T) != degree(R) + degree(S):
        return 0

    factors = [
        (n, 1 << b)
        for n, t in enumerate(T, 1)
        for b in range(t.bit_length())
        if (t >> b) & 1
    ]

    size = max(len(T), len(R), len(S))
    left = list(R) + [0] * (size - len(R))
    right = list(S) + [0] * (size - len(S))

    def search(index):
        if index == len(factors):
            return 0 if any(left) or any(right) else 1
        n, power = factors[index]
        count = 0
        for i in range(n + 1):
            j = n - i
            lexp = (1 << j) * power
            if i and left[i - 1] < lexp:
                continue
            if j and right[j - 1] < power:
                continue
            if i:
                left[i - 1] -= lexp
            if j:
                right[j - 1] -= power
            count += search(index + 1)
            if i:
                left[i - 1] += lexp
            if j:
                right[j - 1] += power
        return count

    return search(0) % 2


@_functools.cache
def _product_basis(R, S):
    # Sq(R)Sq(S) by duality: the coefficient of Sq(T) is <Sq(R)⊗Sq(S), Δξ^T>.
    d = degree(R) + degree(S)
    return tuple(T for T in milnor_basis(d) if coproduct_coefficient(T, R, S))


def milnor_product(a, b):
    """
    The product of two elements of A.

    Parameters
    ----------

    a, b: AElt
        The factors.

    Returns
    -------

    product: AElt
    """
    if not isinstance(a, AElt) or not isinstance(b, AElt):
        msg = "'a' and 'b' must be of type 'AElt'"
        _logger.error(msg)
        raise TypeError(msg)
    return _bilinear(a, b, lambda R, S: AElt({T: 1 for T in _product_basis(R, S)}), AElt)


def _matrix_rows(r, caps, j=1):
    # Row vectors (x_1, x_2, ...) with Σ 2^j x_j <= r and x_j <= caps[j-1].
    if j > len(caps):
        yield ()
        return
    weight = 1 << j
    for x in range(min(r // weight, caps[j - 1]) + 1):
        for rest in _matrix_rows(r - x * weight, caps, j + 1):
            yield (x,) + rest


@_functools.cache
def _matrix_product_basis(R, S):
    result = {}
    rows = len(R)

    def search(i, caps, chosen):
        if i == rows:
            matrix = [[0] + [s - c for s, c in zip(S, caps_used(chosen))]]
            for r, row in zip(R, chosen):
                matrix.append([r - sum((1 << j) * x for j, x in enumerate(row, 1))] + list(row))
            T = []
            for n in range(1, rows + len(S) + 1):
                seen = 0
                total = 0
                for k in range(max(0, n - len(S)), min(n, rows) + 1):
                    entry = matrix[k][n - k]
                    if seen & entry:
                        return
                    seen |= entry
                    total += entry
                T.append(total)
            T = trim(T)
            result[T] = result.get(T, 0) ^ 1
            return
        for row in _matrix_rows(R[i], caps):
            search(i + 1, tuple(c - x for c, x in zip(caps, row)), chosen + (row,))

    def caps_used(chosen):
        return [sum(row[j] for row in chosen) for j in range(len(S))]

    search(0, tuple(S), ())
    return tuple(sorted(T for T, c in result.items() if c))


def milnor_product_matrix(a, b):
    """
    The product of two elements of A by Milnor matrices.

    This is an independent implementation used to cross check
    'milnor_product'. A matrix contributes when no two entries on an
    anti-diagonal share a binary digit.
    """
    return _bilinear(
        a, b, lambda R, S: AElt({T: 1 for T in _matrix_product_basis(R, S)}), AElt
    )


def _splittings(R):
    # All pairs (E, F) with E + F = R. Positions are kept until the end.
    for E in _itertools.product(*(range(r + 1) for r in R)):
        yield trim(E), trim(r - e for r, e in zip(R, E))


def coproduct(a):
    """
    The Milnor coproduct Δ(Sq(R)) = Σ_{E+F=R} Sq(E) ⊗ Sq(F).

    Parameters
    ----------

    a: AElt

    Returns
    -------

    coproduct: TensorAA
    """
    terms = []
    for R, c in a.items():
        for E, F in _splittings(R):
            terms.append(((E, F), c))
    return TensorAA(terms)


def contract(p, a):
    """
    The contraction cont(p, a), adjoint to multiplication by p on A_*.

    On basis elements cont(ξ^S, Sq(R)) = Sq(R - S), or 0 when R - S has
    a negative entry.
    """
    terms = []
    for S, cp in p.items():
        for R, ca in a.items():
            diff = seq_sub(R, S)
            if diff is not None:
                terms.append((diff, cp * ca))
    return AElt(terms)


def kappa(a):
    """The Kristensen derivation κ(a) = cont(ξ_1, a)."""
    return contract(xi((1,)), a)


def q_element(k):
    """The Milnor primitive Q_k = Sq(Δ_{k+1})."""
    if not isinstance(k, int) or k < 0:
        msg = f"'k' must be a non-negative integer, got {k!r}"
        _logger.error(msg)
        raise ValueError(msg)
    return AElt({delta(k + 1): 1})


def p_element(t, s):
    """The element P_t^s = Sq(2^s Δ_t)."""
    if not isinstance(t, int) or t < 1:
        msg = f"'t' must be a positive integer, got {t!r}"
        _logger.error(msg)
        raise ValueError(msg)
    if not isinstance(s, int) or s < 0:
        msg = f"'s' must be a non-negative integer, got {s!r}"
        _logger.error(msg)
        raise ValueError(msg)
    return AElt({seq_scale(delta(t), 1 << s): 1})


def pair(a, p):
    """The Kronecker pairing <a, p> with <Sq(R), ξ^S> = δ_{R,S}."""
    return sum(c * p.coefficient(R) for R, c in a.items()) % 2


def pair_tensor(t, T):
    """<t, Δξ^T> for t in A ⊗ A, the pairing that defines the product."""
    return sum(c * coproduct_coefficient(T, R, S) for (R, S), c in t.items()) % 2


def q_commutator(a, k):
    """
    The right hand side Σ_{i>=0} Q_{k+i} cont(ξ_i^{2^{k+1}}, a) of the
    commutation rule for a·Q_k.
    """
    total = AElt()
    d = max(a.degrees(), default=0)
    i = 0
    while i == 0 or degree(_xi_power(i, 1 << (k + 1))) <= d:
        c = contract(xi(_xi_power(i, 1 << (k + 1))), a)
        if c:
            total = total + q_element(k + i) * c
        i += 1
    return total


def p_commutator(a, l):
    """
    The right hand side of the commutation rule for a·P_l^1:

        Σ_i P_{l+i}^1 cont(ξ_i^{2^{l+1}}, a) + κ(a) Q_l
            + Σ_{l-1<=i<j} Q_i Q_j cont(ξ_{i-l+1}^{2^l} ξ_{j-l+1}^{2^l}, a)

    The indices of the last sum are the only ones for which every
    summand has degree |a| + 2^{l+1} - 2.
    """
    if l < 1:
        raise ValueError(f"'l' must be at least 1, got {l}")
    d = max(a.degrees(), default=0)
    total = kappa(a) * q_element(l)

    i = 0
    while i == 0 or degree(_xi_power(i, 1 << (l + 1))) <= d:
        c = contract(xi(_xi_power(i, 1 << (l + 1))), a)
        if c:
            total = total + p_element(l + i, 1) * c
        i += 1

    power = 1 << l
    i = l - 1
    while degree(_xi_power(i - l + 1, power)) <= d:
        j = i + 1
        while True:
            mono = seq_add(_xi_power(i - l + 1, power), _xi_power(j - l + 1, power))
            if degree(mono) > d:
                break
            c = contract(xi(mono), a)
            if c:
                total = total + q_element(i) * q_element(j) * c
            j += 1
        i += 1
    return total
