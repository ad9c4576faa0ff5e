"""Strong equivalence of logic programs.

Three independent routes:

* :func:`strongly_equivalent` compares HT models (G3 equivalence);
* :func:`negfree_strong_equiv` compares classical models, which decides the
  question for programs without negation;
* :func:`strong_equiv_oracle` tries every extension by rules ``p``/``p -> q``
  over atoms and compares answer sets computed through the reduct.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Optional

from .classical import check_guard, cpl_equivalent, eval_classical, satisfies
from .errors import FragmentError, GuardExceeded
from .ht import HTModel, all_ht_models, g3_equivalent, g3_separating_model
from .generate import semantic_closure
from .stable import answer_sets_reduct, reduct
from .syntax import (
    POSITIVE, PROGRAMS_WITH_CONSTANTS, TOP, And, Atom, Bot, Formula, Fragment, Imp, Not,
    Or, Program, Rule, Top, depth, fragment_check, size,
)

MAX_ORACLE_ATOMS = 4
MAX_SEARCH_ATOMS = 4
MAX_SEARCH_DEPTH = 4


def _require(program: Program, frag: Fragment, what: str):
    if not fragment_check(program, frag):
        raise FragmentError(f"{what} needs programs in {frag}")


class StrongEquivalence(NamedTuple):
    equivalent: bool
    witness: Optional[HTModel]


def strongly_equivalent(p1: Program, p2: Program, force: bool = False) -> StrongEquivalence:
    """Decide strong equivalence by comparing HT models.

    On a negative answer the witness is an HT model of exactly one program.
    """
    _require(p1, PROGRAMS_WITH_CONSTANTS, "strongly_equivalent")
    _require(p2, PROGRAMS_WITH_CONSTANTS, "strongly_equivalent")
    sep = g3_separating_model(p1, p2, force)
    return StrongEquivalence(sep is None, sep)


def negfree_strong_equiv(p1: Program, p2: Program, force: bool = False) -> bool:
    _require(p1, POSITIVE, "negfree_strong_equiv")
    _require(p2, POSITIVE, "negfree_strong_equiv")
    return cpl_equivalent(p1, p2, force)


# --- extension oracle ----------------------------------------------------------

def unary_rules(universe: Iterable[str]) -> list[Rule]:
    """Facts ``q`` first, then every ``p -> q``."""
    names = sorted(universe)
    facts = [Rule(TOP, Atom(q)) for q in names]
    return facts + [Rule(Atom(p), Atom(q)) for p in names for q in names]


class OracleResult(NamedTuple):
    equivalent: bool
    extension: Optional[Program]


class _ReductTable:
    """For each candidate X (as a bitmask), which subsets Y satisfy the reduct."""

    def __init__(self, program: Program, names: list[str]):
        n = len(names)
        self.sets = [frozenset(a for k, a in enumerate(names) if x >> k & 1) for x in range(1 << n)]
        self.models = []
        for x in range(1 << n):
            red = reduct(program, self.sets[x]).rules
            mask = 0
            for y in range(1 << n):
                if y & ~x == 0 and satisfies(self.sets[y], red):
                    mask |= 1 << y
            self.models.append(mask)

    def answer_sets(self, ext_models: int, proper_sub: list[int]) -> tuple:
        out = []
        for x, red in enumerate(self.models):
            both = red & ext_models
            if both >> x & 1 and not both & proper_sub[x]:
                out.append(x)
        return tuple(out)


def strong_equiv_oracle(p1: Program, p2: Program, universe: Optional[Iterable[str]] = None,
                        force: bool = False) -> OracleResult:
    """Compare answer sets of ``p1 ∪ E`` and ``p2 ∪ E`` for every set ``E`` of
    unary rules over the universe, smallest extensions first.

    Answer sets depend on ``E`` only through its set of classical models, so
    each distinct model set is evaluated once.
    """
    universe = (p1.universe | p2.universe) if universe is None else frozenset(universe)
    if not (p1.universe | p2.universe) <= universe:
        raise ValueError("universe must contain the atoms of both programs")
    check_guard(len(universe), MAX_ORACLE_ATOMS, force)
    names = sorted(universe)
    n = len(names)
    t1, t2 = _ReductTable(p1, names), _ReductTable(p2, names)
    proper_sub = []
    for x in range(1 << n):
        mask = 0
        for y in range(1 << n):
            if y != x and y & ~x == 0:
                mask |= 1 << y
        proper_sub.append(mask)
    candidates = unary_rules(names)
    sat = []
    for r in candidates:
        mask = 0
        for y in range(1 << n):
            if eval_classical(t1.sets[y], r):
                mask |= 1 << y
        sat.append(mask)
    full = (1 << (1 << n)) - 1
    verdicts: dict[int, bool] = {}
    for k in range(len(candidates) + 1):
        for combo in combinations(range(len(candidates)), k):
            models = full
            for i in combo:
                models &= sat[i]
            same = verdicts.get(models)
            if same is None:
                same = t1.answer_sets(models, proper_sub) == t2.answer_sets(models, proper_sub)
                verdicts[models] = same
            if not same:
                ext = Program(frozenset(candidates[i] for i in combo), universe)
                a1 = answer_sets_reduct(p1 | ext, universe, force=True)
                a2 = answer_sets_reduct(p2 | ext, universe, force=True)
                assert a1.answer_sets != a2.answer_sets, "oracle witness failed re-check"
                return OracleResult(False, ext)
    return OracleResult(True, None)


# --- combined report -------------------------------------------------------------

@dataclass(frozen=True)
class EquivalenceReport:
    cpl: bool
    g3: bool
    kc_on_fragment: Optional[bool]
    same_answer_sets: bool
    strongly_equivalent: Optional[bool]
    separating_extension: Optional[Program] = None
    separating_ht_model: Optional[HTModel] = None
    in_fragment: bool = True

    def to_json(self) -> dict:
        ext = self.separating_extension
        return {
            "cpl": self.cpl,
            "g3": self.g3,
            "kc_on_fragment": self.kc_on_fragment,
            "same_answer_sets": self.same_answer_sets,
            "strongly_equivalent": self.strongly_equivalent,
            "separating_extension": None if ext is None else sorted(str(r) for r in ext.rules),
            "separating_ht_model": None if self.separating_ht_model is None else self.separating_ht_model.to_json(),
            "in_fragment": self.in_fragment,
        }


def classify(p1: Program, p2: Program, force: bool = False) -> EquivalenceReport:
    """Every equivalence notion at once.

    Strong equivalence and the KC verdict are only reported for programs in
    ``{A→B | A,B ∈ [∧,∨,¬,⊥,⊤]}``; outside it they are ``None``.
    """
    universe = p1.universe | p2.universe
    cpl = cpl_equivalent(p1, p2, force)
    sep = g3_separating_model(p1, p2, force)
    g3 = sep is None
    in_frag = fragment_check(p1, PROGRAMS_WITH_CONSTANTS) and fragment_check(p2, PROGRAMS_WITH_CONSTANTS)
    same = (answer_sets_reduct(p1, universe, force).answer_sets
            == answer_sets_reduct(p2, universe, force).answer_sets)
    extension = None
    if in_frag and not g3 and (len(universe) <= MAX_ORACLE_ATOMS or force):
        extension = strong_equiv_oracle(p1, p2, universe, force).extension
    return EquivalenceReport(
        cpl=cpl,
        g3=g3,
        kc_on_fragment=g3 if in_frag else None,
        same_answer_sets=same,
        strongly_equivalent=g3 if in_frag else None,
        separating_extension=extension,
        separating_ht_model=sep,
        in_fragment=in_frag,
    )


# --- expressibility --------------------------------------------------------------

class _HTAlgebra:
    """Formula values as (here-mask, there-mask) over a fixed list of HT models."""

    def __init__(self, models: list[HTModel]):
        self.models = models
        self.full = (1 << len(models)) - 1

    def _mask(self, pred) -> int:
        m = 0
        for i, model in enumerate(self.models):
            if pred(model):
                m |= 1 << i
        return m

    def atom(self, name):
        return (self._mask(lambda m: name in m.here), self._mask(lambda m: name in m.there))

    def top(self):
        return (self.full, self.full)

    def bot(self):
        return (0, 0)

    def neg(self, a):
        t = self.full & ~a[1]
        return (t, t)

    def conj(self, a, b):
        return (a[0] & b[0], a[1] & b[1])

    def disj(self, a, b):
        return (a[0] | b[0], a[1] | b[1])

    def impl(self, a, b):
        t = self.full & (~a[1] | b[1])
        return (t & (~a[0] | b[0]), t)

    def value(self, f: Formula):
        if isinstance(f, Atom):
            return self.atom(f.name)
        if isinstance(f, Top):
            return self.top()
        if isinstance(f, Bot):
            return self.bot()
        if isinstance(f, Not):
            return self.neg(self.value(f.arg))
        op = {And: self.conj, Or: self.disj, Imp: self.impl}[type(f)]
        return op(self.value(f.left), self.value(f.right))


def expressibility_search(target: Program, frag: Fragment, max_depth: int,
                          force: bool = False) -> Optional[Program]:
    """A program with rules in ``frag`` (bodies and heads of depth at most
    ``max_depth``) that is G3-equivalent to ``target``, or ``None``.

    Rules are deduplicated by their sets of HT models. A program's models are
    the intersection of its rules' models, so the target is expressible iff
    the rules whose model sets contain the target's intersect exactly to it.
    """
    names = sorted(target.universe)
    if not force:
        if len(names) > MAX_SEARCH_ATOMS:
            raise GuardExceeded(f"{len(names)} atoms exceeds the search guard of {MAX_SEARCH_ATOMS}")
        if max_depth > MAX_SEARCH_DEPTH:
            raise GuardExceeded(f"depth {max_depth} exceeds the search guard of {MAX_SEARCH_DEPTH}")
    models = list(all_ht_models(names, force))
    alg = _HTAlgebra(models)
    goal = alg.full
    for r in target.rules:
        goal &= alg.value(r.formula)[0]
    parts = semantic_closure(alg, names, frag.connectives, max_depth)
    if frag.normal_form:
        raise FragmentError("expressibility search over normal programs is not supported; use [∧,¬]")
    bodies = [(alg.top(), TOP)] + sorted(parts.items(), key=lambda kv: _rank(kv[1]))
    heads = sorted(parts.items(), key=lambda kv: _rank(kv[1]))
    rules: dict[int, Rule] = {}
    for hv, hf in heads:
        for bv, bf in bodies:
            mask = alg.impl(bv, hv)[0]
            if mask & goal == goal and mask not in rules:
                rules[mask] = Rule(bf, hf)
    meet = alg.full
    for mask in rules:
        meet &= mask
    if meet != goal:
        return None
    # drop redundant rules, most complex first
    kept = sorted(rules.items(), key=lambda kv: _rank(kv[1].formula))
    for i in range(len(kept) - 1, -1, -1):
        rest = alg.full
        for j, (mask, _) in enumerate(kept):
            if j != i:
                rest &= mask
        if rest == goal:
            kept.pop(i)
    found = Program(frozenset(r for _, r in kept), frozenset(names))
    assert fragment_check(found, frag)
    assert g3_equivalent(found, target, force=True)
    return found


def _rank(f: Formula) -> tuple:
    return (depth(f), size(f), str(f))
