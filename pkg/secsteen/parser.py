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
The expression grammar of the command-line front end.

    expr   := term { "+" term }
    term   := factor { "*" factor }
    factor := INT | atom
    atom   := "Sq(" INT {"," INT} ")" | "Sq^" INT
            | ("Y" | "U" | "X") "[" SINT "," SINT "]"
            | "Q" INT | "P(" INT "," INT ")" | "u0" | "I"

"u0" and "I" multiply the rest of their term by μ_0 and ι from the left.
Elements print back into the same grammar, and ElementDoc is their JSON
form.
"""

__author__ = "The secsteen developers"

__all__ = [
    "RINGS",
    "Token",
    "Atom",
    "Product",
    "Sum",
    "ElementDoc",
    "tokenize",
    "parse",
    "infer_ring",
    "evaluate",
    "format_element",
    "ring_of",
]

import dataclasses as _dataclasses
import json as _json
import re as _re

from typing import NamedTuple as _NamedTuple

from loguru import logger as _logger

from ._exceptions import ParseError as _ParseError
from ._exceptions import RingError as _RingError
from .d0 import D0Elt as _D0Elt
from .d0 import d0_y as _d0_y
from .d0 import sigma as _sigma
from .d1 import D1Elt as _D1Elt
from .d1 import iota as _iota
from .d1 import left_act as _left_act
from .d1 import mu0 as _mu0
from .d1 import normalize_u as _normalize_u
from .d1 import right_act as _right_act
from .secondary import EHatElt as _EHatElt
from .secondary import mu0_x_gen as _mu0_x_gen
from .secondary import x_gen as _x_gen
from .steenrod import AElt as _AElt
from .steenrod import Sq as _Sq
from .steenrod import p_element as _p_element
from .steenrod import q_element as _q_element
from .steenrod import trim as _trim

RINGS = {"A": _AElt, "D0": _D0Elt, "D1": _D1Elt, "E0": _EHatElt}

# Atoms each ring accepts beyond Sq, Q, P and integers.
_RING_ATOMS = {
    "A": set(),
    "D0": {"Y"},
    "D1": {"U", "u0", "I"},
    "E0": {"Y", "X", "u0"},
}

_TOKEN_SPEC = [
    ("SPACE", r"\s+"),
    ("NAME", r"u0|Sq|[YUXQPI]"),
    ("NUMBER", r"\d+"),
    ("OP", r"[-+*^(),\[\]]"),
]
_TOKEN_RE = _re.compile("|".join(f"(?P<{name}>{regex})" for name, regex in _TOKEN_SPEC))


class Token(_NamedTuple):
    type: str
    value: object
    position: int


class Atom(_NamedTuple):
    """A leaf of the syntax tree: 'name' is Sq, Y, U, X, Q, P, u0, I or INT."""

    name: str
    args: tuple
    position: int


class Product(_NamedTuple):
    factors: tuple


class Sum(_NamedTuple):
    terms: tuple


def tokenize(text):
    """
    Split an expression into tokens.

    Parameters
    ----------

    text: str
        The expression.

    Returns
    -------

    tokens: list of Token
        The tokens, closed by an "END" token.
    """
    if not isinstance(text, str):
        msg = "'text' must be of type 'str'"
        _logger.error(msg)
        raise TypeError(msg)

    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        if match is None:
            msg = f"Unexpected character {text[position]!r}"
            _logger.error(msg)
            raise _ParseError(msg, position)
        kind = match.lastgroup
        if kind == "NUMBER":
            tokens.append(Token(kind, int(match.group()), position))
        elif kind != "SPACE":
            tokens.append(Token(kind, match.group(), position))
        position = match.end()
    tokens.append(Token("END", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self._tokens = tokens
        self._index = 0

    @property
    def token(self):
        return self._tokens[self._index]

    def _fail(self, expected):
        token = self.token
        found = "end of input" if token.type == "END" else repr(token.value)
        msg = f"Expected {expected}, found {found}"
        _logger.error(msg)
        raise _ParseError(msg, token.position)

    def _accept(self, value):
        if self.token.type == "OP" and self.token.value == value:
            self._index += 1
            return True
        return False

    def _expect(self, value):
        if not self._accept(value):
            self._fail(repr(value))

    def _number(self, signed=False):
        negative = signed and self._accept("-")
        if self.token.type != "NUMBER":
            self._fail("an integer")
        value = self.token.value
        self._index += 1
        return -value if negative else value

    def expr(self):
        terms = [self.term()]
        while self._accept("+"):
            terms.append(self.term())
        if self.token.type != "END":
            self._fail("'+', '*' or end of input")
        return Sum(tuple(terms))

    def term(self):
        factors = [self.factor()]
        while self._accept("*"):
            factors.append(self.factor())
        return Product(tuple(factors))

    def factor(self):
        token = self.token
        if token.type == "NUMBER":
            self._index += 1
            return Atom("INT", (token.value,), token.position)
        if token.type != "NAME":
            self._fail("an integer or a generator")
        self._index += 1
        name = token.value

        if name == "Sq":
            if self._accept("^"):
                return Atom("Sq", (self._number(),), token.position)
            self._expect("(")
            seq = [self._number()]
            while self._accept(","):
                seq.append(self._number())
            self._expect(")")
            return Atom("Sq", tuple(seq), token.position)
        if name in ("Y", "U", "X"):
            self._expect("[")
            k = self._number(signed=True)
            self._expect(",")
            l = self._number(signed=True)
            self._expect("]")
            return Atom(name, (k, l), token.position)
        if name == "Q":
            return Atom("Q", (self._number(),), token.position)
        if name == "P":
            self._expect("(")
            t = self._number()
            self._expect(",")
            s = self._number()
            self._expect(")")
            return Atom("P", (t, s), token.position)
        return Atom(name, (), token.position)


def parse(text):
    """
    Parse an expression into a syntax tree.

    Parameters
    ----------

    text: str
        The expression, for example "Sq^1*u0*Sq(2)".

    Returns
    -------

    expr: Sum
    """
    return _Parser(tokenize(text)).expr()


def _atoms(expr):
    return [atom for term in expr.terms for atom in term.factors]


def infer_ring(expr):
    """
    The smallest ring containing every atom: X selects E0, U, u0 or I
    select D1, Y selects D0 and anything else lives in A.
    """
    names = {atom.name for atom in _atoms(expr)}
    if "X" in names:
        return "E0"
    if names & {"U", "u0", "I"}:
        return "D1"
    if "Y" in names:
        return "D0"
    return "A"


def _check_ring(expr, ring):
    if ring not in RINGS:
        msg = f"Unknown ring {ring!r}. Options are: {', '.join(RINGS)}"
        _logger.error(msg)
        raise ValueError(msg)
    for atom in _atoms(expr):
        if atom.name in ("Sq", "Q", "P", "INT"):
            continue
        if atom.name not in _RING_ATOMS[ring]:
            msg = f"'{atom.name}' at position {atom.position} is not an element of {ring}"
            _logger.error(msg)
            raise _RingError(msg)


def _a_value(atom):
    if atom.name == "Sq":
        return _Sq(*atom.args)
    if atom.name == "Q":
        return _q_element(*atom.args)
    return _p_element(*atom.args)


def _lift(atom, ring):
    # The value of a non-prefix atom in the ring of the computation.
    if atom.name in ("Sq", "Q", "P"):
        a = _a_value(atom)
        if ring == "D0":
            return _sigma(a)
        if ring == "E0":
            return _EHatElt.from_d0(_sigma(a))
        return a
    k, l = atom.args
    if atom.name == "Y":
        y = _d0_y(k, l)
        return y if ring == "D0" else _EHatElt.from_d0(y)
    if atom.name == "X":
        return _x_gen(k, l)
    return _normalize_u(k, l)


def _d1_times(x, y, position):
    if isinstance(x, _AElt) and isinstance(y, _AElt):
        return x * y
    if isinstance(x, _AElt):
        return _left_act(x, y)
    if isinstance(y, _AElt):
        return _right_act(x, y)
    msg = f"D_1 is a bimodule: two D_1 factors multiplied at position {position}"
    _logger.error(msg)
    raise _RingError(msg)


def _product(atoms, ring):
    if not atoms:
        return RINGS[ring if ring != "D1" else "A"].unit()
    value = _lift(atoms[0], ring)
    for atom in atoms[1:]:
        factor = _lift(atom, ring)
        if ring == "D1":
            value = _d1_times(value, factor, atom.position)
        else:
            value = value * factor
    return value


def _mu0_of_x(w, position):
    # μ_0 applied to an element made of X-terms.
    total = _EHatElt()
    for key, c in w.items():
        if key[0] != "X":
            msg = f"'u0' at position {position} must be followed by X-terms only"
            _logger.error(msg)
            raise _RingError(msg)
        total = total + _mu0_x_gen(*key[1:]).scale(c)
    return total


def _term_value(term, ring):
    scalar = 1
    atoms = []
    for atom in term.factors:
        if atom.name == "INT":
            scalar *= atom.args[0]
        else:
            atoms.append(atom)

    prefixes = [i for i, atom in enumerate(atoms) if atom.name in ("u0", "I")]
    if len(prefixes) > 1:
        msg = f"At most one 'u0' or 'I' per term, found {len(prefixes)}"
        _logger.error(msg)
        raise _RingError(msg)

    if not prefixes:
        value = _product(atoms, ring)
    else:
        i = prefixes[0]
        prefix = atoms[i]
        left = _product(atoms[:i], ring)
        right = _product(atoms[i + 1 :], ring)
        if ring == "E0":
            value = left * _mu0_of_x(right, prefix.position)
        else:
            if not isinstance(right, _AElt):
                msg = (
                    f"'{prefix.name}' at position {prefix.position} must be "
                    "followed by Steenrod operations only"
                )
                _logger.error(msg)
                raise _RingError(msg)
            middle = _mu0(right) if prefix.name == "u0" else _iota(right)
            value = _d1_times(left, middle, prefix.position)

    value = value.scale(scalar)
    if ring == "D1" and isinstance(value, _AElt):
        if value:
            msg = f"Term at position {term.factors[0].position} lies in A, not in D_1"
            _logger.error(msg)
            raise _RingError(msg)
        value = _D1Elt()
    return value


def evaluate(expr, ring=None):
    """
    Evaluate a syntax tree to a normal form element.

    Parameters
    ----------

    expr: Sum, str
        The expression or its text.

    ring: str
        One of "A", "D0", "D1" and "E0". Inferred from the atoms if None.

    Returns
    -------

    element: AElt, D0Elt, D1Elt, EHatElt
    """
    if isinstance(expr, str):
        expr = parse(expr)
    if ring is None:
        ring = infer_ring(expr)
    _check_ring(expr, ring)

    total = RINGS[ring]()
    for term in expr.terms:
        total = total + _term_value(term, ring)
    return total


def ring_of(x):
    """The ring tag of an element."""
    for tag, cls in RINGS.items():
        if type(x) is cls:
            return tag
    msg = f"Unsupported element type '{type(x).__name__}'"
    _logger.error(msg)
    raise TypeError(msg)


def _sq_suffix(R, alone):
    if not R:
        return "1" if alone else ""
    text = "Sq(" + ",".join(str(r) for r in R) + ")"
    return text if alone else "*" + text


def _key_text(key):
    # The grammar text of a basis key, without coefficient.
    kind = key[0]
    if kind == "Sq":
        return _sq_suffix(key[1], True)
    if kind in ("Y", "U", "X"):
        return f"{kind}[{key[1]},{key[2]}]" + _sq_suffix(key[3], False)
    if kind == "MX":
        return f"u0*X[{key[1]},{key[2]}]" + _sq_suffix(key[3], False)
    if kind == "I":
        return "I" + _sq_suffix(key[1], False)
    if kind == "M":
        return "u0" + _sq_suffix(key[1], False)
    # A bare exponent sequence from AElt.
    return _sq_suffix(key, True)


def _key_of(x, key):
    return ("Sq", key) if isinstance(x, _AElt) else key


def _ordered(x):
    return sorted(
        x.items(), key=lambda kv: (x._key_degree(kv[0]), _key_text(_key_of(x, kv[0])))
    )


def format_element(x):
    """
    Print an element in the expression grammar, for example
    "2*Sq(2) + Y[-1,0]". Terms are ordered by degree, then by text.
    """
    ring_of(x)
    if not x:
        return "0"
    parts = []
    for key, c in _ordered(x):
        text = _key_text(_key_of(x, key))
        parts.append(text if c == 1 else f"{c}*{text}")
    return " + ".join(parts)


_DOC_SYMBOLS = {"Sq": "Sq", "Y": "Y", "U": "U", "X": "X", "MX": "u0X", "I": "I", "M": "u0"}
_DOC_KINDS = {sym: kind for kind, sym in _DOC_SYMBOLS.items()}


@_dataclasses.dataclass(frozen=True)
class ElementDoc:
    """
    The serialized form of an element: its ring, its degree (None when
    zero or inhomogeneous), its terms and where it came from.
    """

    ring: str
    degree: object
    terms: tuple
    provenance: str = ""

    @classmethod
    def from_element(cls, x, provenance=""):
        ring = ring_of(x)
        terms = []
        for key, c in _ordered(x):
            key = _key_of(x, key)
            record = {"sym": _DOC_SYMBOLS[key[0]]}
            if len(key) == 4:
                record["k"] = key[1]
                record["l"] = key[2]
            record["R"] = list(key[-1])
            record["c"] = c
            terms.append(record)
        degree = x.degree() if x.is_homogeneous() else None
        return cls(ring, degree, tuple(terms), provenance)

    def to_element(self):
        if self.ring not in RINGS:
            msg = f"Unknown ring tag {self.ring!r}"
            _logger.error(msg)
            raise ValueError(msg)
        items = []
        for record in self.terms:
            kind = _DOC_KINDS[record["sym"]]
            R = _trim(tuple(record["R"]))
            if self.ring == "A":
                key = R
            elif "k" in record:
                key = (kind, record["k"], record["l"], R)
            else:
                key = (kind, R)
            items.append((key, record["c"]))
        return RINGS[self.ring](items)

    def to_dict(self):
        return {
            "ring": self.ring,
            "degree": self.degree,
            "terms": [dict(t) for t in self.terms],
            "provenance": self.provenance,
        }

    def to_json(self):
        return _json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text):
        try:
            data = _json.loads(text)
        except ValueError as e:
            msg = f"Invalid element document: {e}"
            _logger.error(msg)
            raise ValueError(msg)
        return cls(
            data["ring"],
            data["degree"],
            tuple(data["terms"]),
            data.get("provenance", ""),
        )
