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

"""Sparse formal sums shared by every element type."""

__author__ = "The secsteen developers"

__all__ = ["LinearCombination", "bilinear", "gf2_rank"]

import numpy as _np


class LinearCombination:
    """
    An immutable sparse formal sum of hashable basis keys.

    Coefficients live in Z/m where the modulus may depend on the key,
    which lets a single table hold Z/4 and F_2 summands side by side.
    Zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    # Default coefficient modulus.
    _MODULUS = 2

    def __init__(self, terms=None):
        """
        Constructor

        terms: dict, iterable of (key, int)
            The summands. Repeated keys are accumulated.
        """

        acc = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, coeff in items:
                acc[key] = acc.get(key, 0) + coeff
            for key in list(acc):
                coeff = acc[key] % self._modulus(key)
                if coeff:
                    acc[key] = coeff
                else:
                    del acc[key]
        self._terms = acc
        self._hash = None

    @classmethod
    def _modulus(cls, key):
        """The coefficient modulus attached to a basis key."""
        return cls._MODULUS

    @classmethod
    def _key_degree(cls, key):
        """The internal degree of a basis key."""
        raise NotImplementedError

    @classmethod
    def _key_symbol(cls, key):
        """The printed symbol of a basis key."""
        return repr(key)

    @classmethod
    def _key_order(cls, key):
        return key

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def monomial(cls, key, coeff=1):
        return cls({key: coeff})

    def items(self):
        """Unordered (key, coefficient) pairs."""
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def sorted_items(self):
        """(key, coefficient) pairs ordered by degree, then by key."""
        return sorted(
            self._terms.items(),
            key=lambda kv: (self._key_degree(kv[0]), self._key_order(kv[0])),
        )

    def coefficient(self, key):
        return self._terms.get(key, 0)

    def degrees(self):
        return {self._key_degree(key) for key in self._terms}

    def degree(self):
        """
        The degree of a homogeneous element, or None for zero.

        Returns
        -------

        degree: int, None
        """
        degrees = self.degrees()
        if not degrees:
            return None
        if len(degrees) > 1:
            raise ValueError(f"Element is not homogeneous: degrees {sorted(degrees)}")
        return degrees.pop()

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def homogeneous_part(self, degree):
        return type(self)(
            {k: c for k, c in self._terms.items() if self._key_degree(k) == degree}
        )

    def filter(self, predicate):
        """The sub-sum of terms whose key satisfies 'predicate'."""
        return type(self)({k: c for k, c in self._terms.items() if predicate(k)})

    def map_keys(self, function):
        """Re-key every term. Collisions are accumulated."""
        return type(self)([(function(k), c) for k, c in self._terms.items()])

    def _check_compatible(self, other):
        if type(other) is not type(self):
            raise TypeError(
                f"Cannot combine '{type(self).__name__}' with '{type(other).__name__}'"
            )

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check_compatible(other)
        return type(self)(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return type(self)({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check_compatible(other)
        return self + (-other)

    def scale(self, scalar):
        return type(self)({k: scalar * c for k, c in self._terms.items()})

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for key, coeff in self.sorted_items():
            symbol = self._key_symbol(key)
            parts.append(symbol if coeff == 1 else f"{coeff} {symbol}")
        return " + ".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}({self})"


def bilinear(x, y, basis_product, result_type):
    """
    Extend a product of basis keys bilinearly.

    Parameters
    ----------

    x, y: LinearCombination
        The factors.

    basis_product: callable
        Maps a pair of keys to an element of 'result_type'.

    result_type: type
        The LinearCombination subclass of the result.

    Returns
    -------

    product: result_type
    """
    terms = []
    for kx, cx in x.items():
        for ky, cy in y.items():
            c = cx * cy
            for k, cz in basis_product(kx, ky).items():
                terms.append((k, c * cz))
    return result_type(terms)


def gf2_rank(matrix):
    """
    The rank over F_2 of an integer matrix, by row reduction.

    Parameters
    ----------

    matrix: array_like
        A two dimensional array of integers. Entries are read mod 2.

    Returns
    -------

    rank: int
    """
    m = _np.array(matrix, dtype=_np.uint8, ndmin=2) % 2
    if m.size == 0:
        return 0
    rows, cols = m.shape
    rank = 0
    for col in range(cols):
        pivots = _np.nonzero(m[rank:, col])[0]
        if len(pivots) == 0:
            continue
        pivot = rank + pivots[0]
        if pivot != rank:
            m[[rank, pivot]] = m[[pivot, rank]]
        below = _np.nonzero(m[:, col])[0]
        for row in below:
            if row != rank:
                m[row] ^= m[rank]
        rank += 1
        if rank == rows:
            break
    return rank
