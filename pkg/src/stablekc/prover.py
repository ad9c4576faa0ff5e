"""Derivability in IPL, KC and G3 with three-way verdicts.

IPL is decided by Dyckhoff's contraction-free sequent calculus (G4ip).
Negation ``not A`` is read as ``A -> bot`` inside the prover. A failed proof
search is paired with a Kripke countermodel from bounded enumeration.

KC is handled in layers: on the program fragment the G3 verdict is exact;
elsewhere a proof of the goal from the premises plus instances of
``not B | not not B`` is sound, a countermodel with a single terminal node
refutes, and anything else is reported as unknown.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Optional

from .errors import GuardExceeded
from .ht import MAX_HT_ATOMS, g3_countermodel
from .kripke import (
    MAX_ATOMS, Countermodel, countermodel_search, model_to_json,
    refuting_worlds, validate,
)
from .syntax import (
    BOT, PROGRAMS_WITH_CONSTANTS, And, Atom, Bot, Formula, Imp, Not, Or, Rule, Top,
    atoms_of, fragment_check, render, size, subformulas,
)

MAX_FORMULA_SIZE = 400
DEFAULT_BOUND = 4
KC_SEARCH_BUDGET = 20000


class Status(Enum):
    PROVABLE = "provable"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Derivation:
    """A node of a sequent proof: the rule applied and its premises."""

    rule: str
    antecedents: tuple
    succedent: Formula
    premises: tuple = ()

    def sequent(self) -> str:
        left = ", ".join(render(f) for f in self.antecedents)
        return f"{left} => {render(self.succedent)}"

    def to_json(self) -> dict:
        return {"rule": self.rule, "sequent": self.sequent(),
                "premises": [p.to_json() for p in self.premises]}

    def size(self) -> int:
        return 1 + sum(p.size() for p in self.premises)

    def lines(self, indent: int = 0) -> list[str]:
        out = [" " * indent + f"{self.sequent()}   [{self.rule}]"]
        for p in self.premises:
            out.extend(p.lines(indent + 2))
        return out


@dataclass(frozen=True)
class Verdict:
    status: Status
    logic: str
    method: str
    derivation: Optional[Derivation] = None
    countermodel: Optional[Countermodel] = None
    note: str = ""

    @property
    def provable(self) -> bool:
        return self.status is Status.PROVABLE

    @property
    def refuted(self) -> bool:
        return self.status is Status.REFUTED

    def to_json(self) -> dict:
        out = {"status": self.status.value, "logic": self.logic, "method": self.method}
        if self.derivation is not None:
            out["derivation"] = self.derivation.to_json()
        if self.countermodel is not None:
            out["countermodel"] = model_to_json(*self.countermodel)
        if self.note:
            out["note"] = self.note
        return out


# --- G4ip ----------------------------------------------------------------------

def _imp_form(f: Formula) -> Formula:
    """Rewrite ``not A`` as ``A -> bot`` throughout."""
    if isinstance(f, Not):
        return Imp(_imp_form(f.arg), BOT)
    if isinstance(f, (And, Or, Imp)):
        return type(f)(_imp_form(f.left), _imp_form(f.right))
    if isinstance(f, Rule):
        return Imp(_imp_form(f.body), _imp_form(f.head))
    return f


class _OutOfBudget(Exception):
    pass


class _G4ip:
    def __init__(self, budget: Optional[int] = None):
        self.memo: dict = {}
        self.budget = budget

    def prove(self, gamma: frozenset, goal: Formula) -> Optional[Derivation]:
        key = (gamma, goal)
        if key in self.memo:
            return self.memo[key]
        if self.budget is not None:
            if len(self.memo) >= self.budget:
                raise _OutOfBudget
        self.memo[key] = None  # blocks cycles; none arise in G4ip but be safe
        result = self._prove(gamma, goal)
        self.memo[key] = result
        return result

    def _node(self, rule, gamma, goal, *premises) -> Derivation:
        return Derivation(rule, tuple(sorted(gamma, key=_order)), goal, premises)

    def _prove(self, gamma: frozenset, goal: Formula) -> Optional[Derivation]:
        if BOT in gamma:
            return self._node("bot-L", gamma, goal)
        if goal in gamma:
            return self._node("id", gamma, goal)
        if isinstance(goal, Top):
            return self._node("top-R", gamma, goal)

        # invertible left rules that do not branch
        disjunctions = []
        for a in sorted(gamma, key=_order):
            rest = gamma - {a}
            if isinstance(a, Top):
                return self._chain("top-L", gamma, goal, rest)
            if isinstance(a, And):
                return self._chain("and-L", gamma, goal, rest | {a.left, a.right})
            if isinstance(a, Or):
                disjunctions.append(a)
            elif isinstance(a, Imp):
                c, b = a.left, a.right
                if isinstance(c, Atom) and c in gamma:
                    return self._chain("atom-imp-L", gamma, goal, rest | {b})
                if isinstance(c, Bot):
                    return self._chain("bot-imp-L", gamma, goal, rest)
                if isinstance(c, Top):
                    return self._chain("top-imp-L", gamma, goal, rest | {b})
                if isinstance(c, And):
                    return self._chain("and-imp-L", gamma, goal, rest | {Imp(c.left, Imp(c.right, b))})
                if isinstance(c, Or):
                    return self._chain("or-imp-L", gamma, goal, rest | {Imp(c.left, b), Imp(c.right, b)})

        # invertible right rules
        if isinstance(goal, And):
            d1 = self.prove(gamma, goal.left)
            if d1 is None:
                return None
            d2 = self.prove(gamma, goal.right)
            if d2 is None:
                return None
            return self._node("and-R", gamma, goal, d1, d2)
        if isinstance(goal, Imp):
            return self._chain("imp-R", gamma, goal, gamma | {goal.left}, goal.right)

        # choices; tried before splitting a disjunction so that proofs not
        # needing the split stay small
        if isinstance(goal, Or):
            d = self.prove(gamma, goal.left)
            if d is not None:
                return self._node("or-R1", gamma, goal, d)
            d = self.prove(gamma, goal.right)
            if d is not None:
                return self._node("or-R2", gamma, goal, d)
        for a in sorted(gamma, key=_order):
            if isinstance(a, Imp) and isinstance(a.left, Imp):
                c, d, b = a.left.left, a.left.right, a.right
                rest = gamma - {a}
                d1 = self.prove(rest | {Imp(d, b)}, Imp(c, d))
                if d1 is None:
                    continue
                d2 = self.prove(rest | {b}, goal)
                if d2 is not None:
                    return self._node("imp-imp-L", gamma, goal, d1, d2)

        # or-L is invertible: splitting the first disjunction decides the sequent
        if disjunctions:
            a = disjunctions[0]
            rest = gamma - {a}
            d1 = self.prove(rest | {a.left}, goal)
            if d1 is None:
                return None
            d2 = self.prove(rest | {a.right}, goal)
            if d2 is None:
                return None
            return self._node("or-L", gamma, goal, d1, d2)
        return None

    def _chain(self, rule, gamma, goal, new_gamma, new_goal=None) -> Optional[Derivation]:
        sub = self.prove(frozenset(new_gamma), goal if new_goal is None else new_goal)
        if sub is None:
            return None
        return self._node(rule, gamma, goal, sub)


@lru_cache(maxsize=1 << 16)
def _order(f: Formula) -> tuple:
    return (size(f), render(f))


def _check_size(formulas, force: bool):
    total = sum(size(f) for f in formulas)
    if total > MAX_FORMULA_SIZE and not force:
        raise GuardExceeded(f"formula size {total} exceeds the guard of {MAX_FORMULA_SIZE}")


def _as_formula(f) -> Formula:
    return f.formula if isinstance(f, Rule) else f


def ipl_prove(premises: Iterable, goal) -> Optional[Derivation]:
    """A G4ip derivation of ``premises => goal``, or ``None`` if there is none."""
    gamma = frozenset(_imp_form(_as_formula(p)) for p in premises)
    return _G4ip().prove(gamma, _imp_form(_as_formula(goal)))


def _witness(premises, goal, single_top: bool, bound: int, force: bool) -> Optional[Countermodel]:
    names = atoms_of([_as_formula(p) for p in premises]) | atoms_of(_as_formula(goal))
    if len(names) > MAX_ATOMS and not force:
        return None
    found = countermodel_search(premises, goal, single_top, bound, force)
    if found is not None:
        _recheck(found, premises, goal)
    return found


def _recheck(cm: Countermodel, premises, goal):
    model, w = cm
    assert not validate(model), "countermodel is not a valid Kripke model"
    assert refuting_worlds(model, premises, goal) >> model.index(w) & 1, "countermodel does not refute"


def ipl_decide(premises: Iterable, goal, bound: int = DEFAULT_BOUND, force: bool = False) -> Verdict:
    """Provable iff the sequent search succeeds.

    Otherwise the verdict is Refuted, with the smallest countermodel of at
    most ``bound`` worlds when one exists (a larger countermodel exists in
    any case).
    """
    premises = [_as_formula(p) for p in premises]
    goal = _as_formula(goal)
    _check_size(premises + [goal], force)
    d = ipl_prove(premises, goal)
    if d is not None:
        return Verdict(Status.PROVABLE, "ipl", "g4ip", derivation=d)
    cm = _witness(premises, goal, False, bound, force)
    note = "" if cm is not None else f"no countermodel within {bound} worlds"
    return Verdict(Status.REFUTED, "ipl", "g4ip", countermodel=cm, note=note)


def wem_instances(formulas: Iterable[Formula]) -> list[Formula]:
    """``not B | not not B`` for every subformula B.

    Constants are skipped, and so is ``B = not C``: its instance is
    intuitionistically equivalent to the one for C, which is included.
    """
    seen: dict = {}
    for f in formulas:
        for b in subformulas(f):
            while isinstance(b, Not):
                b = b.arg
            if not isinstance(b, (Top, Bot)) and b not in seen:
                seen[b] = Or(Not(b), Not(Not(b)))
    return sorted(seen.values(), key=lambda f: (size(f), render(f)))


def in_program_fragment(formulas: Iterable[Formula]) -> bool:
    return all(fragment_check(f, PROGRAMS_WITH_CONSTANTS) for f in formulas)


def kc_prove_by_instances(premises: Iterable, goal, budget: Optional[int] = KC_SEARCH_BUDGET
                          ) -> Optional[Derivation]:
    """IPL proof of the goal from the premises plus weak-excluded-middle
    instances. ``None`` if there is none or the search visits more than
    ``budget`` sequents (the instances make failing searches exponential)."""
    premises = [_imp_form(_as_formula(p)) for p in premises]
    goal = _imp_form(_as_formula(goal))
    instances = [_imp_form(f) for f in wem_instances(premises + [goal])]
    # each instance is a disjunction that failing branches split on, so
    # cheaper instance sets are tried first: none, atoms only, all
    atomic = [f for f in instances if isinstance(f.left.left, Atom)]
    tiers = [[], atomic, instances] if len(atomic) < len(instances) else [[], instances]
    for extra in tiers:
        try:
            d = _G4ip(budget).prove(frozenset(premises + extra), goal)
        except _OutOfBudget:
            continue
        if d is not None:
            return d
    return None


def g3_decide(premises: Iterable, goal, force: bool = False) -> Verdict:
    premises = [_as_formula(p) for p in premises]
    goal = _as_formula(goal)
    m = g3_countermodel(premises, goal, force)
    if m is None:
        return Verdict(Status.PROVABLE, "g3", "ht-models")
    cm = Countermodel(m.to_kripke(), "h")
    _recheck(cm, premises, goal)
    return Verdict(Status.REFUTED, "g3", "ht-models", countermodel=cm)


def kc_decide(premises: Iterable, goal, model_bound: int = DEFAULT_BOUND,
              force: bool = False, trace: bool = False) -> Verdict:
    """KC derivability.

    On ``{A→B | A,B ∈ [∧,∨,¬,⊥,⊤]}`` KC and G3 prove the same consequences,
    so there the HT-model check is exact and the result is never unknown.
    With ``trace`` a sequent derivation is attached to positive answers when
    the weak-excluded-middle instances suffice to find one.
    """
    premises = [_as_formula(p) for p in premises]
    goal = _as_formula(goal)
    _check_size(premises + [goal], force)
    names = atoms_of(premises) | atoms_of(goal)
    in_fragment = in_program_fragment(premises + [goal])
    if in_fragment or len(names) <= MAX_HT_ATOMS or force:
        # KC is contained in G3, and an HT model has a single terminal node
        m = g3_countermodel(premises, goal, force)
        if m is not None:
            cm = Countermodel(m.to_kripke(), "h")
            _recheck(cm, premises, goal)
            method = "g3-fragment" if in_fragment else "ht-countermodel"
            return Verdict(Status.REFUTED, "kc", method, countermodel=cm)
        if in_fragment:
            d = kc_prove_by_instances(premises, goal) if trace else None
            return Verdict(Status.PROVABLE, "kc", "g3-fragment", derivation=d)
    cm = _witness(premises, goal, True, model_bound, force)
    if cm is not None:
        return Verdict(Status.REFUTED, "kc", "single-top-countermodel", countermodel=cm)
    d = kc_prove_by_instances(premises, goal)
    if d is not None:
        return Verdict(Status.PROVABLE, "kc", "g4ip+wem-instances", derivation=d)
    return Verdict(Status.UNKNOWN, "kc", "bounded",
                   note=f"no proof from instances and no single-top countermodel within {model_bound} worlds")


def decide(logic: str, premises: Iterable, goal, bound: int = DEFAULT_BOUND,
           force: bool = False, trace: bool = False) -> Verdict:
    if logic == "ipl":
        return ipl_decide(premises, goal, bound, force)
    if logic == "kc":
        return kc_decide(premises, goal, bound, force, trace)
    if logic == "g3":
        return g3_decide(premises, goal, force)
    raise ValueError(f"unknown logic {logic!r}")


# --- the normal-program axiom for KC ----------------------------------------------

def normkc_axiom(a: Formula, b: Formula, c: Formula, d: Formula) -> Formula:
    """``(A & C -> D) & (not A -> B) & (not C -> B) -> (not D -> B)``"""
    return Imp(And(And(Imp(And(a, c), d), Imp(Not(a), b)), Imp(Not(c), b)), Imp(Not(d), b))


def normkc_instance_checks() -> dict[str, bool]:
    """Instantiate the axiom with A = p, B = not p | not not p, C = not p,
    D = bot and confirm weak excluded middle follows in IPL."""
    p = Atom("p")
    wem = Or(Not(p), Not(Not(p)))
    a, b, c, d = p, wem, Not(p), BOT
    antecedents = [Imp(And(a, c), d), Imp(Not(a), b), Imp(Not(c), b)]
    checks = {}
    for i, f in enumerate(antecedents, 1):
        checks[f"antecedent {i} ({render(f)}) provable"] = ipl_decide((), f).provable
    checks[f"{render(Not(d))} provable"] = ipl_decide((), Not(d)).provable
    axiom = normkc_axiom(a, b, c, d)
    checks["modus ponens yields " + render(wem)] = ipl_decide(
        [axiom] + antecedents + [Not(d)], wem).provable
    checks[render(wem) + " alone is not IPL-provable"] = ipl_decide((), wem).refuted
    return checks


def check_normkc_instance() -> bool:
    return all(normkc_instance_checks().values())
