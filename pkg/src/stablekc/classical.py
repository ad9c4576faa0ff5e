"""Classical two-valued semantics over finite sets of atoms.

A classical world is just the set of atoms it makes true; worlds are passed
around as ``frozenset[str]``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Optional

from .errors import FragmentError, GuardExceeded
from .syntax import (
    HORN, And, Atom, Bot, Formula, Imp, Not, Or, Program, Rule, Top,
    fragment_check,
)

World = frozenset  # frozenset[str]

MAX_CLASSICAL_ATOMS = 20


def check_guard(n_atoms: int, limit: int, force: bool, what: str = "atoms"):
    if n_atoms > limit and not force:
        raise GuardExceeded(f"{n_atoms} {what} exceeds the enumeration guard of {limit}; use force to override")


def eval_classical(world: Iterable[str], f: "Formula | Rule") -> bool:
    if isinstance(f, Atom):
        return f.name in world
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, Not):
        return not eval_classical(world, f.arg)
    if isinstance(f, And):
        return eval_classical(world, f.left) and eval_classical(world, f.right)
    if isinstance(f, Or):
        return eval_classical(world, f.left) or eval_classical(world, f.right)
    if isinstance(f, Imp):
        return not eval_classical(world, f.left) or eval_classical(world, f.right)
    if isinstance(f, Rule):
        return not eval_classical(world, f.body) or eval_classical(world, f.head)
    raise TypeError(f"not a formula: {f!r}")


def satisfies(world: Iterable[str], program: "Program | Iterable[Rule]") -> bool:
    rules = program.rules if isinstance(program, Program) else program
    return all(eval_classical(world, r) for r in rules)


def subsets(universe: Iterable[str]) -> Iterator[World]:
    """All subsets, by size then lexicographically."""
    items = sorted(universe)
    for k in range(len(items) + 1):
        for combo in combinations(items, k):
            yield frozenset(combo)


def world_key(w: Iterable[str]) -> tuple:
    s = sorted(w)
    return (len(s), s)


def classical_models(program: Program, universe: Optional[Iterable[str]] = None,
                     force: bool = False) -> set[World]:
    universe = program.universe if universe is None else frozenset(universe)
    missing = program.universe - universe
    if missing:
        raise ValueError(f"universe misses atoms {sorted(missing)}")
    check_guard(len(universe), MAX_CLASSICAL_ATOMS, force)
    return {x for x in subsets(universe) if satisfies(x, program)}


def minimal_model(program: Program) -> Optional[World]:
    """Least model of a program in ``{A→B | A,B ∈ [∧,⊥,⊤]}``.

    Computed by forward chaining; returns ``None`` when the program has no
    classical model at all.
    """
    if not fragment_check(program, HORN):
        raise FragmentError("minimal_model needs rules in {A→B | A,B ∈ [∧,⊥,⊤]}")
    rules = [(_conjuncts(r.body), _conjuncts(r.head)) for r in program.rules]
    derived: set[str] = set()
    changed = True
    while changed:
        changed = False
        for body, head in rules:
            if body is None or not body <= derived:
                continue
            if head is None:
                return None
            if not head <= derived:
                derived |= head
                changed = True
    model = frozenset(derived)
    assert satisfies(model, program)
    return model


def _conjuncts(f: Formula) -> Optional[set[str]]:
    """Atoms of a [∧,⊥,⊤] formula, or None if it contains ⊥ (is false)."""
    if isinstance(f, Atom):
        return {f.name}
    if isinstance(f, Top):
        return set()
    if isinstance(f, Bot):
        return None
    left, right = _conjuncts(f.left), _conjuncts(f.right)
    if left is None or right is None:
        return None
    return left | right


def cpl_equivalent(p1: Program, p2: Program, force: bool = False) -> bool:
    return cpl_separating_world(p1, p2, force) is None


def cpl_separating_world(p1: Program, p2: Program, force: bool = False) -> Optional[World]:
    """A world satisfying exactly one of the programs, if any."""
    universe = p1.universe | p2.universe
    check_guard(len(universe), MAX_CLASSICAL_ATOMS, force)
    for x in subsets(universe):
        if satisfies(x, p1) != satisfies(x, p2):
            return x
    return None
