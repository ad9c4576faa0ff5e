"""Formula and program generators: random sampling and exhaustive enumeration."""

from __future__ import annotations

import random
from typing import Callable, Hashable, Iterable, Iterator, Optional, Protocol, Sequence

from .syntax import BOT, TOP, And, Atom, Formula, Imp, Not, Or, Program, Rule

_BINARY = {"and": And, "or": Or, "imp": Imp}


def random_formula(rng: random.Random, atoms: Sequence[str], depth: int,
                   connectives: Iterable[str] = ("and", "or", "not"),
                   leaf_bias: float = 0.3) -> Formula:
    """A random formula of depth at most ``depth``.

    Leaves are atoms, plus ``top``/``bot`` when those are listed among the
    connectives.
    """
    conns = list(connectives)
    ops = [c for c in conns if c in _BINARY or c == "not"]
    leaves: list[Formula] = [Atom(a) for a in atoms]
    if "top" in conns:
        leaves.append(TOP)
    if "bot" in conns:
        leaves.append(BOT)
    if depth == 0 or not ops or rng.random() < leaf_bias:
        return rng.choice(leaves)
    op = rng.choice(ops)
    if op == "not":
        return Not(random_formula(rng, atoms, depth - 1, conns, leaf_bias))
    return _BINARY[op](random_formula(rng, atoms, depth - 1, conns, leaf_bias),
                       random_formula(rng, atoms, depth - 1, conns, leaf_bias))


def random_rule(rng: random.Random, atoms: Sequence[str], depth: int,
                connectives: Iterable[str] = ("and", "or", "not"), fact_rate: float = 0.25) -> Rule:
    head = random_formula(rng, atoms, depth, connectives)
    if rng.random() < fact_rate:
        return Rule(TOP, head)
    return Rule(random_formula(rng, atoms, depth, connectives), head)


def random_program(rng: random.Random, atoms: Sequence[str], max_rules: int, depth: int,
                   connectives: Iterable[str] = ("and", "or", "not"),
                   min_rules: int = 1) -> Program:
    n = rng.randint(min_rules, max_rules)
    conns = tuple(connectives)
    return Program(frozenset(random_rule(rng, atoms, depth, conns) for _ in range(n)), frozenset(atoms))


def random_horn_program(rng: random.Random, atoms: Sequence[str], max_rules: int) -> Program:
    """Rules in {A→B | A,B ∈ [∧,⊥,⊤]}."""
    rules = []
    for _ in range(rng.randint(1, max_rules)):
        body = random_formula(rng, atoms, 2, ("and", "top"), leaf_bias=0.5)
        head = random_formula(rng, atoms, 1, ("and", "top", "bot"), leaf_bias=0.6)
        rules.append(Rule(body, head))
    return Program(frozenset(rules), frozenset(atoms))


def enumerate_formulas(atoms: Iterable[str], connectives: Iterable[str], max_depth: int,
                       constants: bool = False) -> Iterator[Formula]:
    """Every formula up to ``max_depth`` over the given atoms and connectives,
    shallowest first. Grows quickly; intended for depth 3 or less."""
    for f, _ in enumerate_valued(None, atoms, connectives, max_depth, constants):
        yield f


def enumerate_valued(algebra: "Algebra | None", atoms: Iterable[str], connectives: Iterable[str],
                     max_depth: int, constants: bool = False) -> Iterator[tuple[Formula, object]]:
    """Like :func:`enumerate_formulas`, pairing each formula with its value
    in ``algebra`` (computed from the values of its parts)."""
    conns = set(connectives)
    alg = algebra if algebra is not None else _NullAlgebra()
    level: list[tuple] = [(Atom(a), alg.atom(a)) for a in sorted(atoms)]
    if constants or "top" in conns:
        level.append((TOP, alg.top()))
    if constants or "bot" in conns:
        level.append((BOT, alg.bot()))
    all_so_far = list(level)
    yield from level
    ops = [(alg.conj, And, "and"), (alg.disj, Or, "or"), (alg.impl, Imp, "imp")]
    for _ in range(max_depth):
        new: list[tuple] = []
        shallow_count = len(all_so_far) - len(level)
        if "not" in conns:
            for f, v in level:
                new.append((Not(f), alg.neg(v)))
        for op, cls, name in ops:
            if name not in conns:
                continue
            for i, (fa, va) in enumerate(all_so_far):
                for j, (fb, vb) in enumerate(all_so_far):
                    # at least one child must come from the previous level
                    if i >= shallow_count or j >= shallow_count:
                        new.append((cls(fa, fb), op(va, vb)))
        yield from new
        all_so_far.extend(new)
        level = new


class _NullAlgebra:
    def atom(self, name):
        return None

    def top(self):
        return None

    def bot(self):
        return None

    def neg(self, a):
        return None

    def conj(self, a, b):
        return None

    disj = impl = conj


class Algebra(Protocol):
    def atom(self, name: str) -> Hashable: ...
    def top(self) -> Hashable: ...
    def bot(self) -> Hashable: ...
    def neg(self, a: Hashable) -> Hashable: ...
    def conj(self, a: Hashable, b: Hashable) -> Hashable: ...
    def disj(self, a: Hashable, b: Hashable) -> Hashable: ...
    def impl(self, a: Hashable, b: Hashable) -> Hashable: ...


def semantic_closure(algebra: Algebra, atoms: Iterable[str], connectives: Iterable[str],
                     max_depth: int, constants: bool = False,
                     visit: Optional[Callable[[Formula, Hashable], None]] = None) -> dict:
    """Map each value reachable by a formula of depth <= ``max_depth`` to a
    shallowest formula denoting it.

    Exhaustive over all formulas up to that depth: the value of a compound
    depends only on the values of its parts, so any formula's value is
    reached from values of shallower formulas already in the table.

    ``visit`` sees every formula built along the way, duplicates included:
    each connective applied to every combination of reachable values (within
    the depth bound), with representatives as the parts.
    """
    conns = set(connectives)
    table: dict = {}

    def add(value, formula, into):
        if visit is not None:
            visit(formula, value)
        if value not in table and value not in into:
            into[value] = formula

    fresh: dict = {}
    for a in sorted(atoms):
        add(algebra.atom(a), Atom(a), fresh)
    if constants or "top" in conns:
        add(algebra.top(), TOP, fresh)
    if constants or "bot" in conns:
        add(algebra.bot(), BOT, fresh)
    table.update(fresh)
    ops: list[tuple[Callable, type]] = []
    if "and" in conns:
        ops.append((algebra.conj, And))
    if "or" in conns:
        ops.append((algebra.disj, Or))
    if "imp" in conns:
        ops.append((algebra.impl, Imp))
    for _ in range(max_depth):
        if not fresh:
            break
        new: dict = {}
        items = list(table.items())
        fresh_items = list(fresh.items())
        if "not" in conns:
            for v, f in fresh_items:
                add(algebra.neg(v), Not(f), new)
        for op, cls in ops:
            for va, fa in items:
                for vb, fb in items:
                    if va in fresh or vb in fresh:
                        add(op(va, vb), cls(fa, fb), new)
        table.update(new)
        fresh = new
    return table
