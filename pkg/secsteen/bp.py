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
The cooperation Hopf algebroid EBP_*EBP = E(μ_k) ⊗ BP_*BP ⊗ E(τ_k) at a
prime p together with the differential ∂μ_k = v_k.

Everything is computed exactly in one sympy polynomial ring over QQ whose
generators are the m_k of H_*BP, the Araki generators v_k used for
v-adic rewriting, and three slots of t_k for Γ, Γ ⊗ Γ and Γ ⊗ Γ ⊗ Γ.
Coefficients from the middle of a tensor product are moved to the left
factor through the right unit, so every tensor is a polynomial in the
free generators. Exterior generators are tracked separately as sorted
label tuples: (0, k) is μ_k and (s, k) is τ_k in slot s.
"""

__author__ = "The secsteen developers"

__all__ = ["GammaElt", "EBPAlgebroid", "phi_pk", "expected_dimensions"]

import math as _math

from loguru import logger as _logger

from sympy import ZZ as _ZZ
from sympy import QQ as _QQ
from sympy import Matrix as _Matrix
from sympy import isprime as _isprime
from sympy.matrices.normalforms import invariant_factors as _invariant_factors
from sympy.polys.rings import ring as _ring

from ._exceptions import DegreeBoundError as _DegreeBoundError
from ._exceptions import IntegralityError as _IntegralityError


def _merge(l1, l2):
    # Product of two exterior monomials: (sign, labels) or None.
    if set(l1) & set(l2):
        return None
    inversions = sum(1 for a in l1 for b in l2 if a > b)
    return (-1) ** inversions, tuple(sorted(l1 + l2))


def _label_symbol(label):
    slot, k = label
    if slot == 0:
        return f"mu{k}"
    return f"tau{k}" if slot == 1 else f"tau{k}@{slot}"


class GammaElt:
    """
    An element of E(μ_k) ⊗ BP_*BP^{⊗s} ⊗ E(τ_k): a table from sorted
    tuples of exterior labels to polynomials.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        self.terms = {}
        for labels, poly in (terms or {}).items():
            if poly:
                self.terms[labels] = poly

    @classmethod
    def from_poly(cls, ring, poly):
        return cls(ring, {(): ring(poly)})

    @classmethod
    def generator(cls, ring, label):
        return cls(ring, {(label,): ring.one})

    def _coerce(self, other):
        if isinstance(other, GammaElt):
            return other
        return GammaElt.from_poly(self.ring, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for labels, poly in other.terms.items():
            terms[labels] = terms.get(labels, self.ring.zero) + poly
        return GammaElt(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return GammaElt(self.ring, {k: -p for k, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        terms = {}
        for l1, p1 in self.terms.items():
            for l2, p2 in other.terms.items():
                merged = _merge(l1, l2)
                if merged is None:
                    continue
                sign, labels = merged
                terms[labels] = terms.get(labels, self.ring.zero) + sign * p1 * p2
        return GammaElt(self.ring, terms)

    def __eq__(self, other):
        if not isinstance(other, GammaElt):
            other = self._coerce(other)
        return not (self - other).terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for labels, poly in sorted(self.terms.items()):
            ext = "*".join(_label_symbol(l) for l in labels)
            parts.append(f"({poly.as_expr()})" + (f"*{ext}" if ext else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"GammaElt({self})"


def phi_pk(xs, k, p):
    """
    Φ_{p^k}(x_1, x_2, ...) defined by Σ x_i^{p^k} - (Σ x_i)^{p^k} = pΦ_{p^k}.

    Parameters
    ----------

    xs: list
        Polynomials of a common ring.

    k: int
        The exponent of p^k.

    p: int
        The prime.

    Returns
    -------

    phi: polynomial
    """
    if not xs:
        msg = "'phi_pk' needs at least one summand"
        _logger.error(msg)
        raise ValueError(msg)
    q = p**k
    total = sum(xs[1:], xs[0])
    diff = sum((x**q for x in xs[1:]), xs[0] ** q) - total**q
    phi = diff * _QQ(1, p)
    if any(_QQ.denom(c) != 1 for c in phi.coeffs()):
        msg = f"Φ_{q} is not integral"
        _logger.error(msg)
        raise _IntegralityError(msg)
    return phi


def _p_valuation(n, p):
    n = abs(int(n))
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def expected_dimensions(max_degree, p):
    """
    Monomial counts of F_p[t_k | k >= 1] ⊗ E(τ_k | k >= 0) in degrees
    0, ..., max_degree, with |t_k| = 2(p^k - 1) and |τ_k| = 2p^k - 1.
    """
    counts = [1] + [0] * max_degree
    k = 0
    while 2 * p**k - 1 <= max_degree:
        deg = 2 * p**k - 1
        counts = [
            counts[d] + (counts[d - deg] if d >= deg else 0) for d in range(max_degree + 1)
        ]
        k += 1
    k = 1
    while 2 * (p**k - 1) <= max_degree:
        deg = 2 * (p**k - 1)
        for d in range(deg, max_degree + 1):
            counts[d] += counts[d - deg]
        k += 1
    return counts


class EBPAlgebroid:
    """
    Exact structure maps of EBP_*EBP and its differential.
    """

    def __init__(self, p=3, n_max=3):
        """
        Constructor

        p: int
            The prime.

        n_max: int
            The largest index n of m_n, v_n, t_n, μ_n and τ_n.
        """
        if not isinstance(p, int) or not _isprime(p):
            msg = f"'p' must be a prime, got {p!r}"
            _logger.error(msg)
            raise ValueError(msg)
        if not isinstance(n_max, int) or n_max < 1:
            msg = f"'n_max' must be a positive integer, got {n_max!r}"
            _logger.error(msg)
            raise ValueError(msg)
        if n_max > 3:
            _logger.warning(f"n_max = {n_max}: expansions grow like p^(p^n), expect a long run")

        self.p = p
        self.n_max = n_max

        names = [f"m{i}" for i in range(1, n_max + 1)]
        names += [f"v{i}" for i in range(1, n_max + 1)]
        for s in (1, 2, 3):
            names += [f"t{s}_{i}" for i in range(1, n_max + 1)]
        self.ring, *gens = _ring(",".join(names), _QQ)
        self._gens = dict(zip(names, gens))
        self._v_slots = [names.index(f"v{i}") for i in range(1, n_max + 1)]

        self._cache = {}

    def _check_index(self, n):
        if not isinstance(n, int) or n < 0:
            msg = f"Index must be a non-negative integer, got {n!r}"
            _logger.error(msg)
            raise ValueError(msg)
        if n > self.n_max:
            msg = f"Index {n} exceeds the bound n_max = {self.n_max}"
            _logger.error(msg)
            raise _DegreeBoundError(msg)

    def _cached(self, key, compute):
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    def gamma(self, poly=None):
        """A GammaElt with no exterior part."""
        return GammaElt.from_poly(self.ring, self.ring.one if poly is None else poly)

    def m(self, n):
        self._check_index(n)
        return self.ring.one if n == 0 else self._gens[f"m{n}"]

    def v_gen(self, n):
        """The free generator v_n used in v-adic rewriting, v_0 = p."""
        self._check_index(n)
        return self.p * self.ring.one if n == 0 else self._gens[f"v{n}"]

    def t(self, n, slot=1):
        self._check_index(n)
        return self.ring.one if n == 0 else self._gens[f"t{slot}_{n}"]

    def mu(self, k):
        self._check_index(k)
        return GammaElt.generator(self.ring, (0, k))

    def tau(self, n, slot=1):
        self._check_index(n)
        return GammaElt.generator(self.ring, (slot, n))

    def araki_v(self, n):
        """
        The Araki generator v_n as a polynomial in the m_k, from

            p·m_n = Σ_{0<=i<=n} m_i v_{n-i}^{p^i},   v_0 = p, m_0 = 1.
        """
        self._check_index(n)

        def compute():
            if n == 0:
                return self.p * self.ring.one
            v = self.p * self.m(n)
            for i in range(1, n + 1):
                v -= self.m(i) * self.araki_v(n - i) ** (self.p**i)
            return v

        return self._cached(("v", n), compute)

    def m_in_v(self, n):
        """m_n written as a polynomial in the v_k with p-local coefficients."""
        self._check_index(n)

        def compute():
            if n == 0:
                return self.ring.one
            p = self.p
            num = self.ring.zero
            for i in range(n):
                num += self.m_in_v(i) * self.v_gen(n - i) ** (p**i)
            return num * _QQ(1, p - p ** (p**n))

        return self._cached(("m_in_v", n), compute)

    def to_v_form(self, x):
        """Rewrite the m_k of a polynomial or GammaElt in terms of the v_k."""
        pairs = [(self._gens[f"m{i}"], self.m_in_v(i)) for i in range(1, self.n_max + 1)]
        if isinstance(x, GammaElt):
            return GammaElt(self.ring, {k: p.compose(pairs) for k, p in x.terms.items()})
        return self.ring(x).compose(pairs)

    def eta_R_m(self, n):
        """η_R(m_n) = Σ_{a+b=n} m_a t_b^{p^a}."""
        self._check_index(n)
        return sum(
            (self.m(a) * self.t(n - a) ** (self.p**a) for a in range(n + 1)),
            self.ring.zero,
        )

    def eta_R(self, poly):
        """The right unit on a polynomial in the m_k."""
        pairs = [(self._gens[f"m{i}"], self.eta_R_m(i)) for i in range(1, self.n_max + 1)]
        return self.ring(poly).compose(pairs)

    def eta_R_v(self, n):
        """η_R(v_n) as a polynomial in the m_k and t_k."""
        return self._cached(("eta_v", n), lambda: self.eta_R(self.araki_v(n)))

    def eta_R_mu(self, n):
        """η_R(μ_n) = Σ_k μ_k t_{n-k}^{p^k} + τ_n."""
        total = self.tau(n)
        for k in range(n + 1):
            total = total + self.mu(k) * self.t(n - k) ** (self.p**k)
        return total

    def eta_R_w(self, n):
        """η_R(w_n) for w_n = v_nμ_0 - pμ_n."""
        return self.gamma(self.eta_R_v(n)) * self.eta_R_mu(0) - self.eta_R_mu(n) * self.p

    def w(self, k):
        """w_k = v_kμ_0 - pμ_k = -∂(μ_0μ_k), with v_k in m-form."""
        return self.mu(0) * self.araki_v(k) - self.mu(k) * self.p

    def t_coproduct(self, n):
        """
        Δt_n in Γ ⊗ Γ from Σ_{a+b=n} m_a (Δt_b)^{p^a} = Σ m_i t_j^{p^i} ⊗ t_k^{p^{i+j}}.
        """
        self._check_index(n)

        def compute():
            p = self.p
            total = self.ring.zero
            for i in range(n + 1):
                for j in range(n - i + 1):
                    k = n - i - j
                    total += self.m(i) * self.t(j, 1) ** (p**i) * self.t(k, 2) ** (p ** (i + j))
            for a in range(1, n + 1):
                total -= self.m(a) * self.t_coproduct(n - a) ** (p**a)
            return total

        return self._cached(("dt", n), compute)

    def tau_coproduct(self, n):
        """
        Δτ_n = 1 ⊗ τ_n + Σ_k τ_k ⊗ t_{n-k}^{p^k}
               + Σ_a μ_a(-Δt_{n-a}^{p^a} + Σ_{b+c=n-a} t_b^{p^a} ⊗ t_c^{p^{a+b}})
        """
        self._check_index(n)

        def compute():
            p = self.p
            total = self.tau(n, 2)
            for k in range(n + 1):
                total = total + self.tau(k, 1) * self.t(n - k, 2) ** (p**k)
            for a in range(n + 1):
                inner = -self.t_coproduct(n - a) ** (p**a)
                for b in range(n - a + 1):
                    c = n - a - b
                    inner += self.t(b, 1) ** (p**a) * self.t(c, 2) ** (p ** (a + b))
                total = total + self.mu(a) * inner
            return total

        return self._cached(("dtau", n), compute)

    def _substitute(self, x, even, odd):
        # The algebra map with the given images of even and odd generators.
        total = GammaElt(self.ring)
        for labels, poly in x.terms.items():
            image = self.gamma(poly.compose(even) if even else poly)
            for label in reversed(labels):
                factor = odd.get(label)
                if factor is None:
                    factor = GammaElt.generator(self.ring, label)
                image = factor * image
            total = total + image
        return total

    def coproduct(self, x):
        """Δ: Γ -> Γ ⊗ Γ on an element of Γ (slot 1)."""
        n = range(1, self.n_max + 1)
        even = [(self.t(i, 1), self.t_coproduct(i)) for i in n]
        odd = {(1, i): self.tau_coproduct(i) for i in range(self.n_max + 1)}
        return self._substitute(self._coerce(x), even, odd)

    def _coerce(self, x):
        return x if isinstance(x, GammaElt) else self.gamma(x)

    def shift_right(self, x):
        """
        x ↦ 1 ⊗ x: slots move up by one and coefficients become right
        units in slot 1.
        """
        n = range(1, self.n_max + 1)
        even = [(self.t(i, 2), self.t(i, 3)) for i in n]
        even += [(self.t(i, 1), self.t(i, 2)) for i in n]
        even += [(self._gens[f"m{i}"], self.eta_R_m(i)) for i in n]
        odd = {}
        for i in range(self.n_max + 1):
            odd[(2, i)] = self.tau(i, 3)
            odd[(1, i)] = self.tau(i, 2)
            odd[(0, i)] = self.eta_R_mu(i)
        return self._substitute(self._coerce(x), even, odd)

    def delta_tensor_id(self, x):
        """Δ ⊗ id on Γ ⊗ Γ."""
        n = range(1, self.n_max + 1)
        even = [(self.t(i, 2), self.t(i, 3)) for i in n]
        even += [(self.t(i, 1), self.t_coproduct(i)) for i in n]
        odd = {}
        for i in range(self.n_max + 1):
            odd[(2, i)] = self.tau(i, 3)
            odd[(1, i)] = self.tau_coproduct(i)
        return self._substitute(self._coerce(x), even, odd)

    def id_tensor_delta(self, x):
        """id ⊗ Δ on Γ ⊗ Γ."""
        n = range(1, self.n_max + 1)
        even = [
            (self.t(i, 2), self.shift_right(self.t_coproduct(i)).terms.get((), self.ring.zero))
            for i in n
        ]
        odd = {(2, i): self.shift_right(self.tau_coproduct(i)) for i in range(self.n_max + 1)}
        return self._substitute(self._coerce(x), even, odd)

    def _label_boundary(self, label, v_form):
        slot, k = label
        if slot == 0:
            return self.v_gen(k) if v_form else self.araki_v(k)
        if slot != 1:
            msg = "The differential is defined on Γ only"
            _logger.error(msg)
            raise ValueError(msg)

        def compute():
            d = self.eta_R_v(k)
            for j in range(k + 1):
                d -= self.araki_v(j) * self.t(k - j) ** (self.p**j)
            return d

        d = self._cached(("dtau_boundary", k), compute)
        if v_form:
            return self._cached(("dtau_boundary_v", k), lambda: self.to_v_form(d))
        return d

    def differential(self, x, v_form=False):
        """
        The derivation ∂ with ∂μ_k = v_k, ∂τ_n = η_R(v_n) - Σ_k v_k t_{n-k}^{p^k}
        and ∂ = 0 on BP_*BP.

        Parameters
        ----------

        x: GammaElt
            An element of Γ.

        v_form: bool
            Whether x is written in the v_k rather than the m_k.

        Returns
        -------

        boundary: GammaElt
        """
        x = self._coerce(x)
        terms = {}
        for labels, poly in x.terms.items():
            for i, label in enumerate(labels):
                rest = labels[:i] + labels[i + 1 :]
                value = (-1) ** i * self._label_boundary(label, v_form) * poly
                terms[rest] = terms.get(rest, self.ring.zero) + value
        return GammaElt(self.ring, terms)

    def _coefficient_valuation(self, coeff):
        if int(_QQ.denom(coeff)) % self.p == 0:
            msg = f"Coefficient {coeff} is not {self.p}-local"
            _logger.error(msg)
            raise _IntegralityError(msg)
        return _p_valuation(_QQ.numer(coeff), self.p)

    def _poly_valuation(self, poly):
        best = _math.inf
        for monom, coeff in poly.terms():
            weight = self._coefficient_valuation(coeff)
            weight += sum(monom[i] for i in self._v_slots)
            best = min(best, weight)
        return best

    def valuation(self, x):
        """
        The I-adic valuation with v_0 = p: the least total v-weight of a
        monomial after rewriting in the v_k. Zero has valuation inf.
        """
        x = self.to_v_form(self._coerce(x))
        return min((self._poly_valuation(p) for p in x.terms.values()), default=_math.inf)

    def h_valuation(self, x):
        """
        The valuation in H_*BP = Z_(p)[m_k], where I generates the ideal
        (p): the least p-adic valuation of a coefficient in the m-form.
        """
        x = self._coerce(x)
        return min(
            (self._coefficient_valuation(c) for p in x.terms.values() for c in p.coeffs()),
            default=_math.inf,
        )

    def _phi_family(self, k, n):
        xs = [self.t(a, 1) * self.t(n - k - a, 2) ** (self.p**a) for a in range(n - k + 1)]
        return phi_pk(xs, k, self.p)

    def structure_defects(self, n, strict_w=False):
        """
        Valuations of the differences between the exact structure maps and
        their congruences mod I^2 in index n.

        The Δτ_n congruence carries -Σ w_kΦ_{p^k}: the μ_k coefficient of
        the exact coproduct is +pΦ_{p^k} while w_k = v_kμ_0 - pμ_k.

        With strict_w the η_R(w_n) congruence uses Σ_{1<=k<n} instead of
        Σ_{1<=k<=n}, which drops the term w_n of valuation 1.

        Returns
        -------

        defects: dict
            Name -> valuation of the difference. Each must be >= 2, except
            eta_w with strict_w, which is 1.
        """
        self._check_index(n)
        p = self.p

        dt = sum(
            (self.t(a, 1) * self.t(n - a, 2) ** (p**a) for a in range(n + 1)), self.ring.zero
        )
        for k in range(1, n + 1):
            dt += self.araki_v(k) * self._phi_family(k, n)

        dtau = self.tau(n, 2)
        for a in range(n + 1):
            dtau = dtau + self.tau(a, 1) * self.t(n - a, 2) ** (p**a)
        for k in range(1, n + 1):
            dtau = dtau - self.w(k) * self._phi_family(k, n)

        ev = sum(
            (self.araki_v(k) * self.t(n - k) ** (p**k) for k in range(n + 1)), self.ring.zero
        )

        top = n if strict_w else n + 1
        ew = -self.tau(n) * p + self.gamma(ev) * self.tau(0)
        for k in range(1, top):
            ew = ew + self.w(k) * self.t(n - k) ** (p**k)

        return {
            "delta_t": self.valuation(self.t_coproduct(n) - dt),
            "delta_tau": self.valuation(self.tau_coproduct(n) - dtau),
            "eta_v": self.valuation(self.eta_R_v(n) - ev),
            "eta_w": self.valuation(self.eta_R_w(n) - ew),
        }

    def v_congruence_defect(self, n):
        """
        Valuation of v_n - p·m_n in H_*BP, which is >= 2. The m_n are not
        in BP_*, so the valuation is read off the m-form.
        """
        return self.h_valuation(self.araki_v(n) - self.m(n) * self.p)

    def tau_boundary_valuation(self, n):
        """Valuation of ∂τ_n, at least 3 for odd p."""
        return self.valuation(self.differential(self.tau(n)))

    def p2_congruence(self, n):
        """
        t_1(Σ_{i+j=n-1} v_i t_j^{2^i})^2, the class of ∂τ_n mod I^3 at
        p = 2. Its leading term is v_{n-1}^2 t_1.
        """
        root = sum(
            (self.araki_v(i) * self.t(n - 1 - i) ** (1 << i) for i in range(n)), self.ring.zero
        )
        return self.gamma(self.t(1) * root**2)

    def p2_failure_witness(self, n):
        """
        ∂τ_n at p = 2, which is nonzero mod I^3 and congruent to
        'p2_congruence(n)'.

        Returns
        -------

        boundary: GammaElt

        defect: int, float
            The valuation of ∂τ_n - t_1(Σ_{i+j=n-1} v_i t_j^{2^i})^2.
        """
        if self.p != 2:
            msg = "The failure witness is defined at p = 2"
            _logger.error(msg)
            raise ValueError(msg)
        if n < 1:
            msg = f"'n' must be at least 1, got {n}"
            _logger.error(msg)
            raise ValueError(msg)
        boundary = self.differential(self.tau(n))
        return boundary, self.valuation(boundary - self.p2_congruence(n))

    def _chain_basis(self, d):
        # Keys (monomial, labels) for v^A t^R μ^δ τ^ε in degree d.
        p = self.p
        even = []
        for k in range(1, self.n_max + 1):
            deg = 2 * (p**k - 1)
            even.append((self._v_slots[k - 1], deg))
            even.append((self.ring.gens.index(self.t(k)), deg))
        odd = []
        for k in range(self.n_max + 1):
            deg = 2 * p**k - 1
            odd.extend([((0, k), deg), ((1, k), deg)])

        def even_monomials(rest, i):
            if i == len(even):
                if rest == 0:
                    yield ()
                return
            slot, deg = even[i]
            for e in range(rest // deg + 1):
                for tail in even_monomials(rest - e * deg, i + 1):
                    yield ((slot, e),) + tail

        keys = []
        ngens = self.ring.ngens
        for mask in range(1 << len(odd)):
            labels = tuple(sorted(odd[i][0] for i in range(len(odd)) if mask >> i & 1))
            odd_deg = sum(odd[i][1] for i in range(len(odd)) if mask >> i & 1)
            if odd_deg > d:
                continue
            for exps in even_monomials(d - odd_deg, 0):
                monom = [0] * ngens
                for slot, e in exps:
                    monom[slot] = e
                keys.append((tuple(monom), labels))
        return keys

    def _boundary_matrix(self, d):
        # The matrix of ∂: C_d -> C_{d-1}, columns cleared of denominators.
        source = self._chain_basis(d)
        target = self._chain_basis(d - 1) if d >= 1 else []
        index = {key: i for i, key in enumerate(target)}
        columns = []
        for monom, labels in source:
            x = GammaElt(self.ring, {labels: self.ring({monom: 1})})
            image = self.differential(x, v_form=True)
            column = [_QQ(0)] * len(target)
            for lab, poly in image.terms.items():
                for mon, coeff in poly.terms():
                    column[index[(mon, lab)]] += coeff
            scale = 1
            for c in column:
                scale = _math.lcm(scale, int(_QQ.denom(c)))
            if scale % self.p == 0:
                msg = f"Boundary in degree {d} is not {self.p}-local"
                _logger.error(msg)
                raise _IntegralityError(msg)
            columns.append(
                [int(_QQ.numer(c)) * (scale // int(_QQ.denom(c))) for c in column]
            )
        return len(source), len(target), columns

    def _invariants(self, d):
        n_source, n_target, columns = self._boundary_matrix(d)
        if not n_source or not n_target:
            return n_source, ()
        matrix = _Matrix(n_target, n_source, lambda i, j: columns[j][i])
        factors = [int(f) for f in _invariant_factors(matrix, domain=_ZZ) if f != 0]
        return n_source, tuple(factors)

    def homology_degree(self, d):
        """
        The homology of (EBP_*EBP, ∂) in degree d over Z_(p).

        Returns
        -------

        report: dict
            The dimension over F_p, the free rank, the p-adic valuations of
            the torsion, and the expected monomial count.
        """
        if self.p == 2:
            msg = "Homology is only identified with A_* for odd primes"
            _logger.error(msg)
            raise ValueError(msg)
        if 2 * (self.p ** (self.n_max + 1) - 1) <= d + 1:
            msg = f"Degree {d} needs generators beyond n_max = {self.n_max}"
            _logger.error(msg)
            raise _DegreeBoundError(msg)

        dim_d, out_factors = self._invariants(d)
        _, in_factors = self._invariants(d + 1)
        rank_out = len(out_factors)
        rank_in = len(in_factors)
        torsion = [_p_valuation(f, self.p) for f in in_factors]
        torsion = [v for v in torsion if v]
        free_rank = dim_d - rank_out - rank_in
        dimension = free_rank + len(torsion)
        report = {
            "degree": d,
            "dimension": dimension,
            "free_rank": free_rank,
            "torsion": torsion,
            "expected": expected_dimensions(d, self.p)[d],
        }
        report["ok"] = (
            free_rank == 0 and all(v == 1 for v in torsion) and dimension == report["expected"]
        )
        _logger.debug(f"Homology in degree {d}: {report}")
        return report

    def homology_dimensions(self, max_degree, executor=None):
        """F_p-dimensions of the homology in degrees 0, ..., max_degree."""
        if executor is None:
            reports = [self.homology_degree(d) for d in range(max_degree + 1)]
        else:
            futures = [executor.submit(self.homology_degree, d) for d in range(max_degree + 1)]
            reports = [f.result() for f in futures]
        return reports
