"""Here-and-there models and the three-valued Gödel matrix.

An HT model ``<Y, X>`` (``Y ⊆ X``) is the two-world Kripke model h <= t with
``atom(h) = Y`` and ``atom(t) = X``. Formulas take one of three values,
depending on the worlds forcing them: nowhere (0), only at t (1/2), at both
(1).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from itertools import combinations, product
from typing import Iterable, Iterator, Mapping, Optional

from .classical import check_guard, eval_classical, subsets
from .kripke import KripkeModel
from .syntax import And, Atom, Bot, Formula, Imp, Not, Or, Program, Rule, Top, atoms_of

MAX_HT_ATOMS = 12


@dataclass(frozen=True)
class HTModel:
    here: frozenset
    there: frozenset

    def __post_init__(self):
        object.__setattr__(self, "here", frozenset(self.here))
        object.__setattr__(self, "there", frozenset(self.there))
        if not self.here <= self.there:
            raise ValueError(f"here {sorted(self.here)} is not a subset of there {sorted(self.there)}")

    def to_kripke(self) -> KripkeModel:
        return KripkeModel.build({"h": self.here, "t": self.there}, [("h", "t")])

    def to_json(self) -> dict:
        return {"here": sorted(self.here), "there": sorted(self.there)}

    @classmethod
    def from_json(cls, data: Mapping) -> "HTModel":
        return cls(frozenset(data["here"]), frozenset(data["there"]))

    def sort_key(self) -> tuple:
        return (len(self.there), sorted(self.there), len(self.here), sorted(self.here))

    def __str__(self):
        return f"<{{{','.join(sorted(self.here))}}},{{{','.join(sorted(self.there))}}}>"


class G3Value(IntEnum):
    ZERO = 0
    HALF = 1
    ONE = 2

    def __str__(self):
        return ("0", "1/2", "1")[self]


def ht_forces(model: HTModel, at: str, f: "Formula | Rule") -> bool:
    """Forcing at world ``"h"`` or ``"t"`` of the two-world model."""
    if at == "t":
        return eval_classical(model.there, f)
    if at != "h":
        raise ValueError(f"world must be 'h' or 't', not {at!r}")
    return _here(model.here, model.there, f)


def _here(y: frozenset, x: frozenset, f) -> bool:
    if isinstance(f, Atom):
        return f.name in y
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, And):
        return _here(y, x, f.left) and _here(y, x, f.right)
    if isinstance(f, Or):
        return _here(y, x, f.left) or _here(y, x, f.right)
    if isinstance(f, Not):
        # nothing above h forces the argument; t is above h
        return not _here(y, x, f.arg) and not eval_classical(x, f.arg)
    if isinstance(f, Imp):
        body, head = f.left, f.right
    elif isinstance(f, Rule):
        body, head = f.body, f.head
    else:
        raise TypeError(f"not a formula: {f!r}")
    return ((not _here(y, x, body) or _here(y, x, head))
            and (not eval_classical(x, body) or eval_classical(x, head)))


def ht_satisfies(model: HTModel, program: "Program | Iterable") -> bool:
    rules = program.rules if isinstance(program, Program) else program
    return all(_here(model.here, model.there, r) for r in rules)


def matrix_eval(valuation: Mapping[str, G3Value], f: "Formula | Rule") -> G3Value:
    """Gödel three-valued truth tables.

    Atoms missing from the valuation take value 0.
    """
    if isinstance(f, Atom):
        return G3Value(valuation.get(f.name, G3Value.ZERO))
    if isinstance(f, Top):
        return G3Value.ONE
    if isinstance(f, Bot):
        return G3Value.ZERO
    if isinstance(f, Not):
        return G3Value.ONE if matrix_eval(valuation, f.arg) == G3Value.ZERO else G3Value.ZERO
    if isinstance(f, And):
        return min(matrix_eval(valuation, f.left), matrix_eval(valuation, f.right))
    if isinstance(f, Or):
        return max(matrix_eval(valuation, f.left), matrix_eval(valuation, f.right))
    if isinstance(f, Imp):
        a, b = matrix_eval(valuation, f.left), matrix_eval(valuation, f.right)
    elif isinstance(f, Rule):
        a, b = matrix_eval(valuation, f.body), matrix_eval(valuation, f.head)
    else:
        raise TypeError(f"not a formula: {f!r}")
    return G3Value.ONE if a <= b else b


def valuation_of(model: HTModel, universe: Iterable[str]) -> dict[str, G3Value]:
    """1 on Y, 1/2 on X \\ Y, 0 elsewhere."""
    out = {}
    for a in universe:
        if a in model.here:
            out[a] = G3Value.ONE
        elif a in model.there:
            out[a] = G3Value.HALF
        else:
            out[a] = G3Value.ZERO
    return out


def model_of(valuation: Mapping[str, G3Value]) -> HTModel:
    return HTModel(frozenset(a for a, v in valuation.items() if v == G3Value.ONE),
                   frozenset(a for a, v in valuation.items() if v >= G3Value.HALF))


def all_ht_models(universe: Iterable[str], force: bool = False) -> Iterator[HTModel]:
    """Every ``<Y, X>`` with ``Y ⊆ X ⊆ universe``, ordered by X then Y."""
    universe = frozenset(universe)
    check_guard(len(universe), MAX_HT_ATOMS, force)
    for x in subsets(universe):
        for y in subsets(x):
            yield HTModel(y, x)


def ht_models_of(program: Program, universe: Optional[Iterable[str]] = None,
                 force: bool = False) -> set[HTModel]:
    universe = program.universe if universe is None else frozenset(universe)
    missing = program.universe - universe
    if missing:
        raise ValueError(f"universe misses atoms {sorted(missing)}")
    check_guard(len(universe), MAX_HT_ATOMS, force)
    out = set()
    for x in subsets(universe):
        # <Y, X> forces P at h only if X classically satisfies P (persistence)
        if not all(eval_classical(x, r) for r in program.rules):
            continue
        for y in subsets(x):
            m = HTModel(y, x)
            if ht_satisfies(m, program):
                out.add(m)
    return out


def g3_countermodel(premises: Iterable, goal, force: bool = False) -> Optional[HTModel]:
    """An HT model forcing all premises at h but not the goal, if one exists."""
    premises = list(premises)
    universe = atoms_of(premises) | atoms_of(goal)
    for m in all_ht_models(universe, force):
        if ht_satisfies(m, premises) and not _here(m.here, m.there, goal):
            return m
    return None


def g3_entails(premises: Iterable, goal, force: bool = False) -> bool:
    return g3_countermodel(premises, goal, force) is None


def g3_valid(f, force: bool = False) -> bool:
    return g3_entails((), f, force)


def g3_separating_model(p1: Program, p2: Program, force: bool = False) -> Optional[HTModel]:
    """An HT model (over the joint universe) of exactly one program.

    Total models <X, X> are tried first, so a classical difference is
    reported as such.
    """
    universe = p1.universe | p2.universe
    check_guard(len(universe), MAX_HT_ATOMS, force)
    for x in subsets(universe):
        m = HTModel(x, x)
        if ht_satisfies(m, p1) != ht_satisfies(m, p2):
            return m
    for m in all_ht_models(universe, force):
        if m.here != m.there and ht_satisfies(m, p1) != ht_satisfies(m, p2):
            return m
    return None


def g3_equivalent(p1: Program, p2: Program, force: bool = False) -> bool:
    return g3_separating_model(p1, p2, force) is None


# --- schematic validity --------------------------------------------------------

def all_valuations(universe: Iterable[str]) -> Iterator[dict[str, G3Value]]:
    names = sorted(universe)
    for values in product(G3Value, repeat=len(names)):
        yield dict(zip(names, values))


def matrix_valid(f: "Formula | Rule") -> bool:
    """Value 1 under every three-valued assignment of its atoms.

    Instantiating a scheme's letters with distinct atoms and checking here
    decides validity of the scheme, since the logic is truth-functional.
    """
    return all(matrix_eval(v, f) == G3Value.ONE for v in all_valuations(atoms_of(f)))


def iff(a: Formula, b: Formula) -> Formula:
    return And(Imp(a, b), Imp(b, a))


def g3_axioms() -> dict[str, Formula]:
    """Four single-axiom extensions of intuitionistic logic that yield G3,
    instantiated with atoms a, b, c, d."""
    a, b, c, d = (Atom(n) for n in "abcd")
    pairs = [iff(x, y) for x, y in combinations((a, b, c, d), 2)]
    three_values = pairs[0]
    for p in pairs[1:]:
        three_values = Or(three_values, p)
    peirce_inner = Imp(Imp(Imp(b, c), b), b)
    return {
        "lukasiewicz": Imp(Imp(Not(a), b), Imp(Imp(Imp(b, a), b), b)),
        "godel-three-values": three_values,
        "hosoi-simplified": Or(Or(a, Imp(a, b)), Not(b)),
        "iterated-peirce-and-weak-em": And(
            Imp(Imp(Imp(a, peirce_inner), a), a),
            Or(Not(a), Not(Not(a)))),
    }

