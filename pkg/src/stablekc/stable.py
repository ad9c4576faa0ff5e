"""Answer sets, computed via the reduct and via equilibrium HT models."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .classical import check_guard, eval_classical, satisfies, subsets, world_key
from .ht import MAX_HT_ATOMS, HTModel, ht_satisfies
from .syntax import BINARY, BOT, TOP, Formula, Not, Program, Rule

METHODS = ("reduct", "equilibrium")


def reduct_formula(f: Formula, x: frozenset) -> Formula:
    """Replace each ``not A`` by bot if X satisfies A, by top otherwise."""
    if isinstance(f, Not):
        return BOT if eval_classical(x, f.arg) else TOP
    if isinstance(f, BINARY):
        left, right = reduct_formula(f.left, x), reduct_formula(f.right, x)
        if left is f.left and right is f.right:
            return f
        return type(f)(left, right)
    return f


@dataclass(frozen=True)
class Reduct:
    source: Program
    witness: frozenset
    rules: Program


def reduct(program: Program, x: Iterable[str]) -> Reduct:
    x = frozenset(x)
    rules = frozenset(Rule(reduct_formula(r.body, x), reduct_formula(r.head, x)) for r in program.rules)
    return Reduct(program, x, Program(rules, program.universe))


@dataclass(frozen=True)
class AnswerSetReport:
    program: Program
    universe: frozenset
    answer_sets: tuple  # of frozenset, by size then lexicographically
    method: str

    def to_json(self) -> dict:
        return {"answer_sets": [sorted(x) for x in self.answer_sets], "method": self.method}

    def __contains__(self, x) -> bool:
        return frozenset(x) in self.answer_sets


def _universe(program: Program, universe, force: bool) -> frozenset:
    universe = program.universe if universe is None else frozenset(universe)
    missing = program.universe - universe
    if missing:
        raise ValueError(f"universe misses atoms {sorted(missing)}")
    check_guard(len(universe), MAX_HT_ATOMS, force)
    return universe


def _report(program, universe, found, method) -> AnswerSetReport:
    return AnswerSetReport(program, universe, tuple(sorted(found, key=world_key)), method)


def _reduct_condition(program: Program, x: frozenset) -> bool:
    red = reduct(program, x).rules
    if not satisfies(x, red):
        return False
    return not any(y != x and satisfies(y, red) for y in subsets(x))


def _equilibrium_condition(program: Program, x: frozenset) -> bool:
    if not satisfies(x, program):
        return False
    return not any(y != x and ht_satisfies(HTModel(y, x), program) for y in subsets(x))


def answer_sets_reduct(program: Program, universe: Optional[Iterable[str]] = None,
                       force: bool = False) -> AnswerSetReport:
    """X is an answer set iff X is the only subset of X satisfying the reduct."""
    universe = _universe(program, universe, force)
    found = [x for x in subsets(universe) if _reduct_condition(program, x)]
    return _report(program, universe, found, "reduct")


def answer_sets_ht(program: Program, universe: Optional[Iterable[str]] = None,
                   force: bool = False) -> AnswerSetReport:
    """X is an answer set iff <X, X> is the only HT model <Y, X> of the program."""
    universe = _universe(program, universe, force)
    found = [x for x in subsets(universe) if _equilibrium_condition(program, x)]
    return _report(program, universe, found, "equilibrium")


def answer_sets(program: Program, universe: Optional[Iterable[str]] = None,
                method: str = "reduct", force: bool = False) -> AnswerSetReport:
    if method == "reduct":
        return answer_sets_reduct(program, universe, force)
    if method in ("equilibrium", "ht"):
        return answer_sets_ht(program, universe, force)
    raise ValueError(f"unknown method {method!r}")


def is_answer_set(program: Program, x: Iterable[str]) -> bool:
    return _reduct_condition(program, frozenset(x))
