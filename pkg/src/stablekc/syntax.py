"""Formulas, rules and programs: AST, text format, fragments.

Concrete syntax::

    program   := { statement }
    statement := formula "."          % a fact F is the rule top -> F
    formula   := or [ "->" formula ]   % right associative
    or        := and { "|" and }
    and       := unary { "&" unary }
    unary     := "not" unary | "(" formula ")" | "top" | "bot" | ATOM

A statement whose outermost connective is ``->`` is read as a rule
``body -> head``. ``%`` starts a comment that runs to the end of the line.

Negation is its own node. ``not p`` and ``p -> bot`` are different trees
even though they are intuitionistically equivalent; the reduct only looks
at ``Not`` nodes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

from .errors import ParseError

RESERVED = frozenset({"top", "bot", "not"})
_IDENT = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")


@dataclass(frozen=True, slots=True)
class Atom:
    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not _IDENT.match(self.name):
            raise ValueError(f"invalid atom name {self.name!r}")
        if self.name in RESERVED:
            raise ValueError(f"{self.name!r} is a reserved word")


@dataclass(frozen=True, slots=True)
class Top:
    pass


@dataclass(frozen=True, slots=True)
class Bot:
    pass


@dataclass(frozen=True, slots=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True, slots=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True, slots=True)
class Imp:
    left: "Formula"
    right: "Formula"


Formula = Union[Atom, Top, Bot, Not, And, Or, Imp]
BINARY = (And, Or, Imp)

TOP = Top()
BOT = Bot()


def _install_operators():
    # p & q, p | q, p >> q (implication), ~p
    def _and(a, b):
        return And(a, b)

    def _or(a, b):
        return Or(a, b)

    def _imp(a, b):
        return Imp(a, b)

    def _not(a):
        return Not(a)

    for cls in (Atom, Top, Bot, Not, And, Or, Imp):
        cls.__and__ = _and
        cls.__or__ = _or
        cls.__rshift__ = _imp
        cls.__invert__ = _not
        cls.__str__ = lambda self: render(self)


_install_operators()


def atoms(*names: str) -> tuple[Atom, ...]:
    """``p, q = atoms("p", "q")``"""
    return tuple(Atom(n) for n in names)


def atoms_of(x: "Formula | Rule | Program | Iterable") -> frozenset[str]:
    """Names of the atoms occurring in a formula, rule, program or collection."""
    if isinstance(x, Program):
        return x.universe
    out: set[str] = set()
    stack = [x]
    while stack:
        f = stack.pop()
        if isinstance(f, Atom):
            out.add(f.name)
        elif isinstance(f, Not):
            stack.append(f.arg)
        elif isinstance(f, BINARY):
            stack.append(f.left)
            stack.append(f.right)
        elif isinstance(f, Rule):
            stack.append(f.body)
            stack.append(f.head)
        elif isinstance(f, (Top, Bot)):
            pass
        else:
            stack.extend(f)
    return frozenset(out)


def depth(f: Formula) -> int:
    if isinstance(f, Not):
        return 1 + depth(f.arg)
    if isinstance(f, BINARY):
        return 1 + max(depth(f.left), depth(f.right))
    return 0


def size(f: Formula) -> int:
    if isinstance(f, Not):
        return 1 + size(f.arg)
    if isinstance(f, BINARY):
        return 1 + size(f.left) + size(f.right)
    return 1


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, Not):
        yield from subformulas(f.arg)
    elif isinstance(f, BINARY):
        yield from subformulas(f.left)
        yield from subformulas(f.right)


def conj(fs: Iterable[Formula]) -> Formula:
    """Left-nested conjunction; the empty conjunction is ``top``."""
    out = None
    for f in fs:
        out = f if out is None else And(out, f)
    return TOP if out is None else out


def disj(fs: Iterable[Formula]) -> Formula:
    out = None
    for f in fs:
        out = f if out is None else Or(out, f)
    return BOT if out is None else out


@dataclass(frozen=True, slots=True)
class Rule:
    """``body -> head``. A fact F is ``Rule(TOP, F)``."""

    body: Formula
    head: Formula

    @property
    def formula(self) -> Formula:
        """The rule read as a single implication."""
        return Imp(self.body, self.head)

    @property
    def is_fact(self) -> bool:
        return self.body == TOP

    def __str__(self):
        return render(self)


def as_rule(f: "Formula | Rule") -> Rule:
    if isinstance(f, Rule):
        return f
    if isinstance(f, Imp):
        return Rule(f.left, f.right)
    return Rule(TOP, f)


@dataclass(frozen=True)
class Program:
    """A finite set of rules over a universe of atoms.

    The universe always contains the atoms of the rules; extra atoms may be
    declared to widen it.
    """

    rules: frozenset[Rule] = frozenset()
    universe: frozenset[str] = field(default=frozenset())

    def __post_init__(self):
        rules = frozenset(as_rule(r) for r in self.rules)
        object.__setattr__(self, "rules", rules)
        object.__setattr__(self, "universe", frozenset(self.universe) | atoms_of(rules))

    @classmethod
    def of(cls, *rules: "Formula | Rule", universe: Iterable[str] = ()) -> "Program":
        return cls(frozenset(as_rule(r) for r in rules), frozenset(universe))

    def __iter__(self) -> Iterator[Rule]:
        return iter(sorted(self.rules, key=render))

    def __len__(self):
        return len(self.rules)

    def __or__(self, other: "Program") -> "Program":
        return Program(self.rules | other.rules, self.universe | other.universe)

    def with_universe(self, universe: Iterable[str]) -> "Program":
        return Program(self.rules, self.universe | frozenset(universe))

    def formulas(self) -> list[Formula]:
        return [r.formula for r in self]

    def __str__(self):
        return render(self)


# --- rendering ---------------------------------------------------------------

_IMP, _OR, _AND, _NOT, _ATOM = range(1, 6)


def _level(f: Formula) -> int:
    if isinstance(f, Imp):
        return _IMP
    if isinstance(f, Or):
        return _OR
    if isinstance(f, And):
        return _AND
    if isinstance(f, Not):
        return _NOT
    return _ATOM


def _fmt(f: Formula, min_level: int) -> str:
    s = _render_formula(f)
    return f"({s})" if _level(f) < min_level else s


def _render_formula(f: Formula) -> str:
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Top):
        return "top"
    if isinstance(f, Bot):
        return "bot"
    if isinstance(f, Not):
        return "not " + _fmt(f.arg, _NOT)
    if isinstance(f, Imp):
        return f"{_fmt(f.left, _OR)} -> {_fmt(f.right, _IMP)}"
    if isinstance(f, Or):
        return f"{_fmt(f.left, _OR)} | {_fmt(f.right, _AND)}"
    if isinstance(f, And):
        return f"{_fmt(f.left, _AND)} & {_fmt(f.right, _NOT)}"
    raise TypeError(f"not a formula: {f!r}")


def render(x: "Formula | Rule | Program") -> str:
    """Text form with minimal parentheses; ``parse`` inverts it."""
    if isinstance(x, Program):
        return "\n".join(sorted(render(r) for r in x.rules))
    if isinstance(x, Rule):
        if x.body == TOP and not isinstance(x.head, Imp):
            return _render_formula(x.head) + "."
        return _render_formula(Imp(x.body, x.head)) + "."
    return _render_formula(x)


# --- parsing -----------------------------------------------------------------

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>%[^\n]*)"
    r"|(?P<imp>->)|(?P<op>[&|().])|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
)
_ATOM_START = frozenset({"not", "(", "top", "bot", "ATOM"})


@dataclass(frozen=True, slots=True)
class _Tok:
    kind: str  # operator text, "ATOM", a reserved word, or "EOF"
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = pos - line_start + 1
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind == "imp":
            toks.append(_Tok("->", "->", line, col))
        elif kind == "op":
            toks.append(_Tok(m.group(), m.group(), line, col))
        elif kind == "ident":
            word = m.group()
            if word in RESERVED:
                toks.append(_Tok(word, word, line, col))
            elif _IDENT.match(word):
                toks.append(_Tok("ATOM", word, line, col))
            else:
                raise ParseError(f"invalid atom name {word!r}", line, col)
        pos = m.end()
    toks.append(_Tok("EOF", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, expected: Iterable[str]):
        tok = self.cur
        shown = "end of input" if tok.kind == "EOF" else repr(tok.text)
        msg = f"unexpected {shown}"
        if tok.kind in RESERVED and "ATOM" not in expected:
            msg = f"reserved word {tok.text!r} cannot appear here"
        raise ParseError(msg, tok.line, tok.col, frozenset(expected))

    def eat(self, kind: str) -> _Tok:
        if self.cur.kind != kind:
            self.fail({kind})
        tok = self.cur
        self.i += 1
        return tok

    def program(self) -> list[Rule]:
        rules = []
        while self.cur.kind != "EOF":
            f = self.formula()
            if self.cur.kind != ".":
                self.fail({".", "->", "|", "&"})
            self.i += 1
            rules.append(as_rule(f))
        return rules

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.cur.kind == "->":
            self.i += 1
            return Imp(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.cur.kind == "|":
            self.i += 1
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.cur.kind == "&":
            self.i += 1
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.cur
        if tok.kind == "not":
            self.i += 1
            return Not(self.unary())
        if tok.kind == "(":
            self.i += 1
            f = self.formula()
            self.eat(")")
            return f
        if tok.kind == "top":
            self.i += 1
            return TOP
        if tok.kind == "bot":
            self.i += 1
            return BOT
        if tok.kind == "ATOM":
            self.i += 1
            return Atom(tok.text)
        self.fail(_ATOM_START)


def parse_program(text: str, universe: Iterable[str] = ()) -> Program:
    return Program(frozenset(_Parser(text).program()), frozenset(universe))


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    if p.cur.kind != "EOF":
        p.fail({"EOF", "->", "|", "&"})
    return f


def parse_rule(text: str) -> Rule:
    rules = _Parser(text).program()
    if len(rules) != 1:
        raise ParseError(f"expected exactly one statement, got {len(rules)}", 1, 1)
    return rules[0]


def parse(text: str) -> "Formula | Rule | Program":
    """Parse whatever ``render`` produced: a program, a rule, or a formula."""
    stripped = text.strip()
    if not stripped.endswith("."):
        return parse_formula(text)
    rules = _Parser(text).program()
    if len(rules) == 1 and "\n" not in stripped:
        return rules[0]
    return Program(frozenset(rules))


# --- fragments ---------------------------------------------------------------

CONNECTIVES = ("and", "or", "imp", "not", "bot", "top")
_SYMBOLS = {"&": "and", "|": "or", "->": "imp", "~": "not", "not": "not",
            "top": "top", "bot": "bot", "and": "and", "or": "or", "imp": "imp"}


@dataclass(frozen=True)
class Fragment:
    """A sublanguage given by its connectives and constants.

    ``rule_form`` keeps implication at the top of a rule only; rule bodies and
    heads may then not contain ``->``. ``normal_form`` further demands a
    conjunction of literals as body and an atom as head. The empty body of a
    fact is always admitted.
    """

    connectives: frozenset[str]
    rule_form: bool = True
    normal_form: bool = False

    def __post_init__(self):
        conns = frozenset(self.connectives)
        unknown = conns - set(CONNECTIVES)
        if unknown:
            raise ValueError(f"unknown connectives: {sorted(unknown)}")
        object.__setattr__(self, "connectives", conns)

    @classmethod
    def parse(cls, spec: str, rule_form: bool = True, normal_form: bool = False) -> "Fragment":
        """``Fragment.parse("and,not")`` or ``Fragment.parse("&,|,->")``."""
        names = set()
        for part in re.split(r"[,\s]+", spec.strip()):
            if not part:
                continue
            if part not in _SYMBOLS:
                raise ValueError(f"unknown connective {part!r}")
            names.add(_SYMBOLS[part])
        return cls(frozenset(names), rule_form, normal_form)

    def __str__(self):
        sym = {"and": "∧", "or": "∨", "imp": "→", "not": "¬", "bot": "⊥", "top": "⊤"}
        inner = ",".join(sym[c] for c in CONNECTIVES if c in self.connectives)
        s = f"[{inner}]"
        if self.normal_form:
            return "normal"
        return f"{{A→B | A,B ∈ {s}}}" if self.rule_form else s

    @property
    def nested_imp(self) -> bool:
        return "imp" in self.connectives and not self.rule_form


HORN = Fragment(frozenset({"and", "bot", "top"}))
POSITIVE = Fragment(frozenset({"and", "or", "bot", "top"}))
PROGRAMS = Fragment(frozenset({"and", "or", "not"}))
PROGRAMS_WITH_CONSTANTS = Fragment(frozenset({"and", "or", "not", "bot", "top"}))
AND_NOT = Fragment(frozenset({"and", "not"}))
NORMAL = Fragment(frozenset({"and", "not"}), normal_form=True)
FULL = Fragment(frozenset(CONNECTIVES), rule_form=False)


def _uses_only(f: Formula, frag: Fragment) -> bool:
    allowed = frag.connectives
    nested_imp = frag.nested_imp
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            continue
        if isinstance(g, Top):
            if "top" not in allowed:
                return False
        elif isinstance(g, Bot):
            if "bot" not in allowed:
                return False
        elif isinstance(g, Not):
            if "not" not in allowed:
                return False
            stack.append(g.arg)
        else:
            kind = "and" if isinstance(g, And) else "or" if isinstance(g, Or) else "imp"
            if kind == "imp" and not nested_imp:
                return False
            if kind != "imp" and kind not in allowed:
                return False
            stack.append(g.left)
            stack.append(g.right)
    return True


def _is_literal(f: Formula) -> bool:
    return isinstance(f, Atom) or (isinstance(f, Not) and isinstance(f.arg, Atom))


def _literal_conjunction(f: Formula) -> bool:
    if isinstance(f, And):
        return _literal_conjunction(f.left) and _literal_conjunction(f.right)
    return _is_literal(f)


def _rule_in(rule: Rule, frag: Fragment) -> bool:
    body, head = rule.body, rule.head
    if body == TOP and isinstance(head, Imp):
        body, head = head.left, head.right
    if frag.normal_form:
        return isinstance(head, Atom) and (body == TOP or _literal_conjunction(body))
    return (body == TOP or _uses_only(body, frag)) and _uses_only(head, frag)


def fragment_check(x: "Formula | Rule | Program", frag: Fragment) -> bool:
    """Whether every connective and constant of ``x`` is admitted by ``frag``.

    A bare formula is read as a rule when the fragment is in rule form, so
    ``p & q -> r`` belongs to ``{A→B | A,B ∈ [∧]}``.
    """
    if isinstance(x, Program):
        return all(_rule_in(r, frag) for r in x.rules)
    if isinstance(x, Rule):
        return _rule_in(x, frag)
    if frag.rule_form or frag.normal_form:
        return _rule_in(as_rule(x), frag)
    return _uses_only(x, frag)
