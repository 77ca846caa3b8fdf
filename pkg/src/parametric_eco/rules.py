"""Weighted succession rules: a small text DSL, simulation and compilation.

A rule file looks like::

    # Dyck paths by segments and rises
    axiom (1; x[0])
    rule (k) ->
      for l in 1..k : (l; x[k-l+1] * y[l])
      (k+1; x[0])

Productions with a literal label (``rule (2) -> ...``) take precedence over
the single symbolic production (``rule (k) -> ...``).  Label expressions are
linear in the bound symbols.  In weight expressions a bound symbol stands
for its integer value; any other identifier is a scalar variable (``t``,
``x``), and ``x3`` / ``y2`` are the indexed variables ``x[3]`` / ``y[2]``.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator, Union

from .algebra import ONE, ZERO, Polynomial, poly_sum
from .algebra.polynomial import Family, VarId, parse_var
from .prodmat import ProductionMatrix, sequence

__all__ = [
    "RuleSyntaxError",
    "RuleError",
    "LinExpr",
    "WeightExpr",
    "Successor",
    "Loop",
    "Production",
    "SuccessionRule",
    "GenTreeLevel",
    "parse_rule",
    "print_rule",
    "rule_to_matrix",
    "simulate_levels",
    "generating_tree",
    "builtin_rule",
    "BUILTIN_RULES",
]

MAX_SUCCESSORS = 100_000
_RESERVED = {"x", "y", "z", "axiom", "rule", "for", "in"}


class RuleError(ValueError):
    """A rule that parses but cannot be evaluated (bad label, missing production)."""


class RuleSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int, expected=()):
        self.line = line
        self.column = column
        self.expected = frozenset(expected)
        detail = f"line {line}, column {column}: {message}"
        if self.expected:
            detail += f" (expected one of: {', '.join(sorted(self.expected))})"
        super().__init__(detail)


# -- expressions -------------------------------------------------------------


@dataclass(frozen=True)
class LinExpr:
    """``const + sum(coeff * symbol)`` with nonzero integer coefficients."""

    const: int = 0
    coeffs: tuple[tuple[str, int], ...] = ()

    @classmethod
    def make(cls, const: int, coeffs: dict) -> "LinExpr":
        return cls(const, tuple(sorted((k, v) for k, v in coeffs.items() if v)))

    def __add__(self, other: "LinExpr") -> "LinExpr":
        acc = dict(self.coeffs)
        for k, v in other.coeffs:
            acc[k] = acc.get(k, 0) + v
        return LinExpr.make(self.const + other.const, acc)

    def __neg__(self) -> "LinExpr":
        return LinExpr(-self.const, tuple((k, -v) for k, v in self.coeffs))

    def symbols(self) -> set[str]:
        return {k for k, _ in self.coeffs}

    def is_constant(self) -> bool:
        return not self.coeffs

    def evaluate(self, env: dict[str, int]) -> int:
        return self.const + sum(v * env[k] for k, v in self.coeffs)

    def __str__(self):
        parts = []
        for k, v in self.coeffs:
            mag = abs(v)
            body = k if mag == 1 else f"{mag}*{k}"
            if not parts:
                parts.append(f"-{body}" if v < 0 else body)
            else:
                parts.append(f"- {body}" if v < 0 else f"+ {body}")
        if self.const or not parts:
            if not parts:
                parts.append(str(self.const))
            else:
                parts.append(f"- {-self.const}" if self.const < 0 else f"+ {self.const}")
        return " ".join(parts)


@dataclass(frozen=True)
class WNum:
    value: int

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class WName:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class WIndexed:
    family: str  # "x" or "y"
    index: LinExpr

    def __str__(self):
        return f"{self.family}[{self.index}]"


@dataclass(frozen=True)
class WeightExpr:
    """Sum of signed products; a nested ``WeightExpr`` factor is parenthesised."""

    terms: tuple[tuple[int, tuple], ...]

    def __str__(self):
        out = []
        for n, (sign, factors) in enumerate(self.terms):
            body = " * ".join(f"({f})" if isinstance(f, WeightExpr) else str(f) for f in factors)
            if n == 0:
                out.append(f"-{body}" if sign < 0 else body)
            else:
                out.append(f"- {body}" if sign < 0 else f"+ {body}")
        return " ".join(out)

    def evaluate(self, env: dict[str, int]) -> Polynomial:
        total = ZERO
        for sign, factors in self.terms:
            term = ONE
            for f in factors:
                term = term * _eval_factor(f, env)
            total = total + term if sign > 0 else total - term
        return total

    def free_names(self) -> set[str]:
        out = set()
        for _, factors in self.terms:
            for f in factors:
                if isinstance(f, WName):
                    out.add(f.name)
                elif isinstance(f, WeightExpr):
                    out |= f.free_names()
        return out


def _eval_factor(f, env) -> Polynomial:
    if isinstance(f, WNum):
        return Polynomial.constant(f.value)
    if isinstance(f, WName):
        if f.name in env:
            return Polynomial.constant(env[f.name])
        return Polynomial.gen(parse_var(f.name))
    if isinstance(f, WIndexed):
        k = f.index.evaluate(env)
        fam = Family.X if f.family == "x" else Family.Y
        try:
            return Polynomial.gen(VarId(fam, k))
        except ValueError as exc:
            raise RuleError(f"{f} evaluates to an invalid variable: {exc}") from None
    return f.evaluate(env)


# -- rule structure ----------------------------------------------------------


@dataclass(frozen=True)
class Successor:
    label: LinExpr
    weight: WeightExpr

    def __str__(self):
        return f"({self.label}; {self.weight})"


@dataclass(frozen=True)
class Loop:
    var: str
    lo: LinExpr
    hi: LinExpr
    label: LinExpr
    weight: WeightExpr

    def __str__(self):
        return f"for {self.var} in {self.lo}..{self.hi} : ({self.label}; {self.weight})"


Item = Union[Successor, Loop]


@dataclass(frozen=True)
class Production:
    pattern: Union[int, str]
    items: tuple[Item, ...]


@dataclass(frozen=True)
class SuccessionRule:
    axiom_label: int
    axiom_expr: WeightExpr
    productions: tuple[Production, ...]
    _literal: dict = field(default=None, compare=False, repr=False, hash=False)
    _symbolic: Production | None = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        literal = {}
        symbolic = None
        for prod in self.productions:
            if isinstance(prod.pattern, int):
                literal[prod.pattern] = prod
            else:
                symbolic = prod
        object.__setattr__(self, "_literal", literal)
        object.__setattr__(self, "_symbolic", symbolic)

    @property
    def axiom_weight(self) -> Polynomial:
        return self.axiom_expr.evaluate({})

    def production_for(self, label: int) -> tuple[Production, dict]:
        if label in self._literal:
            return self._literal[label], {}
        if self._symbolic is not None:
            return self._symbolic, {self._symbolic.pattern: label}
        raise RuleError(f"no production applies to label ({label})")

    def successors(self, label: int) -> Iterator[tuple[int, Polynomial]]:
        """Yield ``(label, weight)`` for every child of a node labelled ``label``."""
        prod, env = self.production_for(label)
        count = 0
        for item in prod.items:
            if isinstance(item, Successor):
                envs = [env]
            else:
                lo, hi = item.lo.evaluate(env), item.hi.evaluate(env)
                if hi - lo + 1 > MAX_SUCCESSORS:
                    raise RuleError(f"label ({label}) has an unbounded number of successors")
                envs = [{**env, item.var: v} for v in range(lo, hi + 1)]
            for e in envs:
                child = item.label.evaluate(e)
                if child < 1:
                    raise RuleError(f"label ({label}) produces non-positive label ({child})")
                count += 1
                if count > MAX_SUCCESSORS:
                    raise RuleError(f"label ({label}) has an unbounded number of successors")
                yield child, item.weight.evaluate(e)

    def __str__(self):
        return print_rule(self)


# -- tokenizer / parser ------------------------------------------------------

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)|(?P<int>\d+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>->|\.\.|[()\[\];:+\-*])"
)
_KEYWORDS = {"axiom", "rule", "for", "in"}


@dataclass(frozen=True)
class _Tok:
    kind: str  # int, ident, kw, sym, eof
    value: object
    line: int
    col: int

    def show(self):
        return "end of input" if self.kind == "eof" else repr(str(self.value))


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise RuleSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        col = pos - line_start + 1
        val = m.group()
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind == "int":
            toks.append(_Tok("int", int(val), line, col))
        elif kind == "ident":
            toks.append(_Tok("kw" if val in _KEYWORDS else "ident", val, line, col))
        elif kind == "sym":
            toks.append(_Tok("sym", val, line, col))
        pos = m.end()
    toks.append(_Tok("eof", None, line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, expected, tok=None, message=None):
        tok = tok or self.tok
        raise RuleSyntaxError(message or f"unexpected {tok.show()}", tok.line, tok.col, expected)

    def is_sym(self, s):
        return self.tok.kind == "sym" and self.tok.value == s

    def is_kw(self, s):
        return self.tok.kind == "kw" and self.tok.value == s

    def expect_sym(self, s):
        if not self.is_sym(s):
            self.error({f"'{s}'"})
        self.i += 1

    def expect_kw(self, s):
        if not self.is_kw(s):
            self.error({f"'{s}'"})
        self.i += 1

    def expect_int(self) -> int:
        if self.tok.kind != "int":
            self.error({"integer"})
        v = self.tok.value
        self.i += 1
        return v

    def expect_ident(self) -> _Tok:
        if self.tok.kind != "ident":
            self.error({"identifier"})
        t = self.tok
        self.i += 1
        return t

    # ruleset := axiom production+
    def ruleset(self) -> SuccessionRule:
        self.expect_kw("axiom")
        self.expect_sym("(")
        ltok = self.tok
        label = self.expect_int()
        if label < 1:
            self.error((), ltok, "labels must be positive")
        self.expect_sym(";")
        weight = self.wexpr(bound=set(), index_bound=set())
        self.expect_sym(")")
        prods = []
        literal_seen = {}
        symbolic_seen = None
        if not self.is_kw("rule"):
            self.error({"'rule'"})
        while self.is_kw("rule"):
            ptok = self.tok
            prod = self.production()
            if isinstance(prod.pattern, int):
                if prod.pattern in literal_seen:
                    self.error((), ptok, f"duplicate production for label ({prod.pattern})")
                literal_seen[prod.pattern] = prod
            else:
                if symbolic_seen is not None:
                    self.error((), ptok, "only one symbolic production is allowed")
                symbolic_seen = prod
            prods.append(prod)
        if self.tok.kind != "eof":
            self.error({"'rule'", "end of input"})
        return SuccessionRule(label, weight, tuple(prods))

    # production := "rule" "(" (INT | IDENT) ")" "->" item+
    def production(self) -> Production:
        self.expect_kw("rule")
        self.expect_sym("(")
        if self.tok.kind == "int":
            ptok = self.tok
            pattern = self.expect_int()
            if pattern < 1:
                self.error((), ptok, "labels must be positive")
            bound = set()
        elif self.tok.kind == "ident":
            ptok = self.expect_ident()
            pattern = ptok.value
            if pattern in _RESERVED:
                self.error((), ptok, f"{pattern!r} is reserved and cannot be a label symbol")
            bound = {pattern}
        else:
            self.error({"integer", "identifier"})
        self.expect_sym(")")
        self.expect_sym("->")
        items = [self.item(bound)]
        while self.is_sym("(") or self.is_kw("for"):
            items.append(self.item(bound))
        return Production(pattern, tuple(items))

    def item(self, bound: set) -> Item:
        if self.is_kw("for"):
            self.i += 1
            vtok = self.expect_ident()
            if vtok.value in _RESERVED or vtok.value in bound:
                self.error((), vtok, f"cannot use {vtok.value!r} as a loop variable")
            self.expect_kw("in")
            lo = self.iexpr(bound)
            self.expect_sym("..")
            hi = self.iexpr(bound)
            self.expect_sym(":")
            inner = bound | {vtok.value}
            label, weight = self.pair(inner)
            return Loop(vtok.value, lo, hi, label, weight)
        if self.is_sym("("):
            label, weight = self.pair(bound)
            return Successor(label, weight)
        self.error({"'('", "'for'"})

    def pair(self, bound):
        self.expect_sym("(")
        ltok = self.tok
        label = self.iexpr(bound)
        if label.is_constant() and label.const < 1:
            self.error((), ltok, "labels must be positive")
        self.expect_sym(";")
        weight = self.wexpr(bound, bound)
        self.expect_sym(")")
        return label, weight

    # iexpr: linear combination of INT, IDENT and INT "*" IDENT
    def iexpr(self, bound: set) -> LinExpr:
        sign = 1
        if self.is_sym("-"):
            self.i += 1
            sign = -1
        expr = self.iterm(bound)
        expr = -expr if sign < 0 else expr
        while self.is_sym("+") or self.is_sym("-"):
            neg = self.tok.value == "-"
            self.i += 1
            t = self.iterm(bound)
            expr = expr + (-t if neg else t)
        return expr

    def iterm(self, bound: set) -> LinExpr:
        if self.tok.kind == "int":
            n = self.expect_int()
            if self.is_sym("*"):
                self.i += 1
                name = self.bound_ident(bound)
                return LinExpr.make(0, {name: n})
            return LinExpr(n)
        if self.tok.kind == "ident":
            return LinExpr.make(0, {self.bound_ident(bound): 1})
        self.error({"integer", "identifier", "'-'"})

    def bound_ident(self, bound: set) -> str:
        tok = self.expect_ident()
        if tok.value not in bound:
            self.error((), tok, f"unbound identifier {tok.value!r} in label expression")
        return tok.value

    # wexpr := wterm (("+"|"-") wterm)*
    def wexpr(self, bound: set, index_bound: set) -> WeightExpr:
        terms = []
        sign = 1
        if self.is_sym("-"):
            self.i += 1
            sign = -1
        terms.append((sign, self.wterm(bound, index_bound)))
        while self.is_sym("+") or self.is_sym("-"):
            sign = -1 if self.tok.value == "-" else 1
            self.i += 1
            terms.append((sign, self.wterm(bound, index_bound)))
        return WeightExpr(tuple(terms))

    def wterm(self, bound, index_bound) -> tuple:
        factors = [self.wfactor(bound, index_bound)]
        while self.is_sym("*"):
            self.i += 1
            factors.append(self.wfactor(bound, index_bound))
        return tuple(factors)

    def wfactor(self, bound, index_bound):
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            return WNum(tok.value)
        if tok.kind == "ident":
            self.i += 1
            if tok.value in ("x", "y") and self.is_sym("["):
                self.i += 1
                idx = self.iexpr(index_bound)
                self.expect_sym("]")
                return WIndexed(tok.value, idx)
            if tok.value == "z":
                self.error((), tok, "'z' is reserved for the series variable")
            return WName(tok.value)
        if self.is_sym("("):
            self.i += 1
            inner = self.wexpr(bound, index_bound)
            self.expect_sym(")")
            return inner
        self.error({"integer", "identifier", "'x['", "'y['", "'('"})


def parse_rule(text: str) -> SuccessionRule:
    """Parse DSL text; raises ``RuleSyntaxError`` with line/column information."""
    return _Parser(text).ruleset()


def print_rule(rule: SuccessionRule) -> str:
    lines = [f"axiom ({rule.axiom_label}; {rule.axiom_expr})"]
    for prod in rule.productions:
        lines.append(f"rule ({prod.pattern}) ->")
        lines.extend(f"  {item}" for item in prod.items)
    return "\n".join(lines) + "\n"


# -- semantics ---------------------------------------------------------------


@dataclass(frozen=True)
class GenTreeLevel:
    level: int
    label_weights: dict

    @property
    def total(self) -> Polynomial:
        return poly_sum(self.label_weights.values())


def generating_tree(rule: SuccessionRule, depth: int) -> list[GenTreeLevel]:
    """Levels 0..depth of the generating tree, aggregated by label."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    current = {rule.axiom_label: rule.axiom_weight}
    levels = [GenTreeLevel(0, dict(current))]
    for n in range(1, depth + 1):
        nxt: dict = defaultdict(list)
        for label, w in current.items():
            for child, cw in rule.successors(label):
                nxt[child].append(w * cw)
        current = {lab: poly_sum(ws) for lab, ws in sorted(nxt.items())}
        current = {lab: w for lab, w in current.items() if w}
        levels.append(GenTreeLevel(n, dict(current)))
    return levels


def simulate_levels(rule: SuccessionRule, depth: int) -> list[Polynomial]:
    """Weighted node count of each level, axiom weight included."""
    return [lev.total for lev in generating_tree(rule, depth)]


def rule_to_matrix(rule: SuccessionRule, size: int) -> ProductionMatrix:
    """Production matrix over the ``size`` smallest reachable labels.

    Row/column i corresponds to the i-th smallest reachable label.  If the
    rule has fewer reachable labels the full (complete) matrix is returned.
    """
    if size < 1:
        raise ValueError("size must be positive")
    cap = rule.axiom_label + size
    reachable = {rule.axiom_label}
    frontier = [rule.axiom_label]
    table: dict[int, dict[int, list]] = {}
    closed = True
    while frontier:
        label = frontier.pop()
        if label > cap:
            closed = False
            continue
        row: dict = defaultdict(list)
        for child, w in rule.successors(label):
            row[child].append(w)
            if child not in reachable:
                reachable.add(child)
                frontier.append(child)
        table[label] = {c: poly_sum(ws) for c, ws in row.items()}
    labels = sorted(reachable)
    window = labels[:size]
    if window != list(range(window[0], window[0] + len(window))):
        raise RuleError(f"reachable labels are not contiguous: {window}")
    complete = closed and len(labels) <= size
    index = {lab: i for i, lab in enumerate(window, start=1)}
    if rule.axiom_label not in index:
        raise RuleError("axiom label falls outside the requested window")
    for lab in window:
        if lab not in table:
            raise RuleError(f"label ({lab}) was not expanded; increase the window")

    def entry(i, j):
        return table[window[i - 1]].get(window[j - 1], ZERO)

    return ProductionMatrix(
        entry, len(window), complete=complete, start=index[rule.axiom_label], name="rule"
    )


def rule_sequence(rule: SuccessionRule, n_max: int) -> list[Polynomial]:
    """``u P^n e`` for the compiled rule (axiom weight not included)."""
    return sequence(rule_to_matrix(rule, n_max + 1), n_max)


BUILTIN_RULES = {
    "dyck-main": """\
# Dyck paths: labels count excursions
axiom (1; x[0])
rule (k) ->
  for l in 1..k : (l; x[k-l+1] * y[l])
  (k+1; x[0])
""",
    "dyck-high-peak": """\
# Dyck paths by heights of high peaks
axiom (1; 1)
rule (k) ->
  for l in 1..k : (l; y[l])
  (k+1; 1)
""",
    "fibonacci": """\
axiom (1; 1)
rule (1) -> (2; 1)
rule (2) -> (1; 1) (2; 1)
""",
    "fibonacci-poly": """\
axiom (1; 1)
rule (1) -> (2; 1)
rule (2) -> (1; x) (2; 1)
""",
}


def builtin_rule(name: str) -> SuccessionRule:
    try:
        text = BUILTIN_RULES[name]
    except KeyError:
        raise KeyError(f"unknown rule {name!r}; choose from {sorted(BUILTIN_RULES)}") from None
    return parse_rule(text)
