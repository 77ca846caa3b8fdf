"""Sparse multivariate polynomials with exact coefficients.

Variables come in three families: ``x0, x1, ...`` (index from 0),
``y1, y2, ...`` (index from 1) and named scalars such as ``t`` or ``s``.
Coefficients are Python ints (arbitrary precision); a ``Fraction`` only
appears when an operation genuinely needs one (e.g. halving during a series
square root) and is folded back to ``int`` whenever its denominator is 1.

    >>> p = Polynomial.parse("x0 + x1*y1")
    >>> str(p * x(0))
    'x0^2 + x0*x1*y1'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "Family",
    "VarId",
    "Monomial",
    "Polynomial",
    "Substitution",
    "x",
    "y",
    "var",
    "const",
    "poly_sum",
    "parse_var",
    "X_ALL",
    "Y_ALL",
]

Coeff = Union[int, Fraction]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_FAMILY_VAR = re.compile(r"([xy])(\d+)\Z")


class Family(IntEnum):
    X = 0
    Y = 1
    NAMED = 2


@dataclass(frozen=True, order=True)
class VarId:
    """A variable: ``x[k]`` (k >= 0), ``y[k]`` (k >= 1) or a named scalar."""

    family: Family
    index: int = 0
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.family is Family.X:
            if self.index < 0:
                raise ValueError(f"x-index must be >= 0, got {self.index}")
        elif self.family is Family.Y:
            if self.index < 1:
                raise ValueError(f"y-index must be >= 1, got {self.index}")
        else:
            if not _IDENT.match(self.name):
                raise ValueError(f"invalid variable name {self.name!r}")
            # `z` is the series variable; `x3`-style names would collide with
            # the indexed families in the text form.
            if self.name == "z" or _FAMILY_VAR.match(self.name):
                raise ValueError(f"reserved variable name {self.name!r}")

    def __str__(self):
        if self.family is Family.X:
            return f"x{self.index}"
        if self.family is Family.Y:
            return f"y{self.index}"
        return self.name

    def __repr__(self):
        return f"VarId({str(self)!r})"


# A monomial is a tuple of (variable, exponent) pairs sorted by variable,
# with every exponent positive.  The empty tuple is the unit monomial.
Monomial = tuple

# Wildcard keys for whole-family substitution.
X_ALL = "x*"
Y_ALL = "y*"


def parse_var(name: str) -> VarId:
    """``"x3"`` -> x[3], ``"y1"`` -> y[1], anything else -> named scalar."""
    m = _FAMILY_VAR.match(name)
    if m:
        fam = Family.X if m.group(1) == "x" else Family.Y
        return VarId(fam, int(m.group(2)))
    return VarId(Family.NAMED, 0, name)


def _norm_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_key(m: Monomial):
    # graded, then lexicographic with higher powers of earlier variables first
    return (_mono_degree(m), tuple((v, -e) for v, e in m))


def _mono_str(m: Monomial) -> str:
    return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in m)


class Polynomial:
    """Immutable sparse polynomial ``{monomial: coefficient}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coeff] | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = _norm_coeff(c)
                if c:
                    clean[tuple(mono)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: Coeff) -> "Polynomial":
        c = _norm_coeff(c)
        return cls._wrap({(): c} if c else {})

    @classmethod
    def gen(cls, v: VarId | str) -> "Polynomial":
        if isinstance(v, str):
            v = parse_var(v)
        return cls._wrap({((v, 1),): 1})

    @classmethod
    def coerce(cls, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        if isinstance(value, VarId):
            return cls.gen(value)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot convert {type(value).__name__} to Polynomial")

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Coeff]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Coeff]]:
        """Terms in canonical order."""
        for mono in sorted(self._terms, key=_mono_key):
            yield mono, self._terms[mono]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_term(self) -> Coeff:
        return self._terms.get((), 0)

    def coefficient(self, mono) -> Coeff:
        if isinstance(mono, Polynomial):
            (mono, _), = mono._terms.items()
        return self._terms.get(tuple(mono), 0)

    def variables(self) -> set[VarId]:
        return {v for mono in self._terms for v, _ in mono}

    def degree(self, v: VarId | str | None = None) -> int:
        """Total degree, or the degree in a single variable. Zero has degree -1."""
        if not self._terms:
            return -1
        if v is None:
            return max(_mono_degree(m) for m in self._terms)
        if isinstance(v, str):
            v = parse_var(v)
        return max((e for m in self._terms for w, e in m if w == v), default=0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = _norm_coeff(out.get(mono, 0) + c)
            if s:
                out[mono] = s
            else:
                del out[mono]
        return Polynomial._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._wrap({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                mono = _mono_mul(ma, mb)
                out[mono] = out.get(mono, 0) + ca * cb
        return Polynomial({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: Coeff) -> "Polynomial":
        c = _norm_coeff(c)
        if not c:
            return ZERO
        return Polynomial({m: v * c for m, v in self._terms.items()})

    def divide_by_term(self, divisor: "Polynomial") -> "Polynomial":
        """Exact division by a single term such as ``2*x0``.

        Raises ``ArithmeticError`` when some term is not divisible.
        """
        divisor = Polynomial.coerce(divisor)
        if len(divisor._terms) != 1:
            raise ValueError("divisor must be a single nonzero term")
        (dmono, dc), = divisor._terms.items()
        dexp = dict(dmono)
        out = {}
        for mono, c in self._terms.items():
            exps = dict(mono)
            for v, e in dexp.items():
                left = exps.get(v, 0) - e
                if left < 0:
                    raise ArithmeticError(f"{self} is not divisible by {divisor}")
                if left:
                    exps[v] = left
                else:
                    del exps[v]
            q = Fraction(c) / dc
            out[tuple(sorted(exps.items()))] = q
        return Polynomial(out)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitution ------------------------------------------------------

    def substitute(self, mapping: "Substitution | Mapping") -> "Polynomial":
        """Simultaneous substitution; unmapped variables are kept.

        Keys may be ``VarId`` objects, variable names (``"x2"``, ``"t"``) or
        the wildcards ``"x*"`` / ``"y*"``; a specific key beats a wildcard.
        """
        sub = mapping if isinstance(mapping, Substitution) else Substitution(mapping)
        acc: dict = {}
        powers: dict = {}
        for mono, c in self._terms.items():
            term = Polynomial.constant(c)
            for v, e in mono:
                key = (v, e)
                if key not in powers:
                    powers[key] = sub.image(v) ** e
                term = term * powers[key]
            for m2, c2 in term._terms.items():
                acc[m2] = acc.get(m2, 0) + c2
        return Polynomial(acc)

    def evaluate(self, values: Mapping) -> Coeff:
        """Evaluate to a number; every variable must be covered by ``values``."""
        p = self.substitute(values)
        if not p.is_constant():
            raise ValueError(f"unassigned variables: {sorted(map(str, p.variables()))}")
        return p.constant_term()

    # -- text / json -------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.items():
            neg = c < 0
            mag = -c if neg else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = _mono_str(mono)
            else:
                body = f"{mag}*{_mono_str(mono)}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    def to_json(self) -> list:
        return [
            {"coeff": str(c), "vars": {str(v): e for v, e in mono}}
            for mono, c in self.items()
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "Polynomial":
        out = ZERO
        for entry in data:
            coeff = Fraction(entry["coeff"])
            mono = tuple(sorted((parse_var(k), int(e)) for k, e in entry["vars"].items()))
            if any(e <= 0 for _, e in mono):
                raise ValueError("exponents must be positive")
            out = out + Polynomial({mono: coeff})
        return out

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        return _PolyParser(text).parse()


ZERO = Polynomial._wrap({})
ONE = Polynomial._wrap({(): 1})


def poly_sum(polys: Iterable) -> Polynomial:
    """Sum many polynomials without intermediate copies."""
    acc: dict = {}
    for p in polys:
        for mono, c in Polynomial.coerce(p)._terms.items():
            acc[mono] = acc.get(mono, 0) + c
    return Polynomial(acc)


def x(k: int) -> Polynomial:
    return Polynomial.gen(VarId(Family.X, k))


def y(k: int) -> Polynomial:
    return Polynomial.gen(VarId(Family.Y, k))


def var(name: str) -> Polynomial:
    return Polynomial.gen(parse_var(name))


def const(c: Coeff) -> Polynomial:
    return Polynomial.constant(c)


class Substitution:
    """Variable assignment with optional whole-family defaults."""

    def __init__(self, mapping: Mapping | None = None):
        self.specific: dict[VarId, Polynomial] = {}
        self.x_default: Polynomial | None = None
        self.y_default: Polynomial | None = None
        for key, value in (mapping or {}).items():
            value = Polynomial.coerce(value)
            if key == X_ALL:
                self.x_default = value
            elif key == Y_ALL:
                self.y_default = value
            else:
                if isinstance(key, str):
                    key = parse_var(key)
                self.specific[key] = value

    def image(self, v: VarId) -> Polynomial:
        if v in self.specific:
            return self.specific[v]
        if v.family is Family.X and self.x_default is not None:
            return self.x_default
        if v.family is Family.Y and self.y_default is not None:
            return self.y_default
        return Polynomial.gen(v)

    def __repr__(self):
        items = {str(k): str(v) for k, v in self.specific.items()}
        if self.x_default is not None:
            items[X_ALL] = str(self.x_default)
        if self.y_default is not None:
            items[Y_ALL] = str(self.y_default)
        return f"Substitution({items})"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class _PolyParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                break
            num, ident, sym = m.groups()
            if num is not None:
                self.tokens.append(("int", int(num), m.start(1)))
            elif ident is not None:
                self.tokens.append(("ident", ident, m.start(2)))
            else:
                self.tokens.append(("sym", sym, m.start(3)))
            pos = m.end()
        self.i = 0

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("eof", None, len(self.text))

    def _fail(self, what):
        kind, val, pos = self._peek()
        raise ValueError(f"cannot parse polynomial {self.text!r}: expected {what} at column {pos + 1}")

    def _accept(self, sym):
        kind, val, _ = self._peek()
        if kind == "sym" and val == sym:
            self.i += 1
            return True
        return False

    def parse(self) -> Polynomial:
        p = self._expr()
        if self._peek()[0] != "eof":
            self._fail("end of input")
        return p

    def _expr(self):
        p = self._term()
        while True:
            if self._accept("+"):
                p = p + self._term()
            elif self._accept("-"):
                p = p - self._term()
            else:
                return p

    def _term(self):
        p = self._unary()
        while self._accept("*"):
            p = p * self._unary()
        return p

    def _unary(self):
        if self._accept("-"):
            return -self._unary()
        return self._power()

    def _power(self):
        p = self._atom()
        if self._accept("^"):
            kind, val, _ = self._peek()
            if kind != "int":
                self._fail("integer exponent")
            self.i += 1
            p = p ** val
        return p

    def _atom(self):
        kind, val, _ = self._peek()
        if kind == "int":
            self.i += 1
            if self._accept("/"):
                k2, den, _ = self._peek()
                if k2 != "int" or den == 0:
                    self._fail("nonzero denominator")
                self.i += 1
                return Polynomial.constant(Fraction(val, den))
            return Polynomial.constant(val)
        if kind == "ident":
            self.i += 1
            return Polynomial.gen(parse_var(val))
        if self._accept("("):
            p = self._expr()
            if not self._accept(")"):
                self._fail("')'")
            return p
        self._fail("number, variable or '('")
