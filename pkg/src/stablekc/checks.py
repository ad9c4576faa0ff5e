"""Property checks over exhaustive and seeded random inputs.

Each check returns a :class:`CheckResult`; a passing check has no
counterexamples. Exhaustive checks over "all formulas up to depth d" work on
formula values (see :func:`stablekc.generate.semantic_closure`): a property
that depends only on the value of a formula holds for every formula iff it
holds for every reachable value. Every formula the closure builds is also
evaluated through the public functions and compared with its value, so the
value algebra cannot silently drift from the implementation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .classical import (
    classical_models, cpl_equivalent, eval_classical, minimal_model, satisfies, subsets,
    world_key,
)
from .equivalence import negfree_strong_equiv, strong_equiv_oracle, strongly_equivalent
from .generate import (
    enumerate_valued, random_formula, random_horn_program, random_program, random_rule,
    semantic_closure,
)
from .ht import (
    G3Value, HTModel, all_ht_models, ht_satisfies, all_valuations, g3_axioms, g3_entails,
    g3_equivalent, ht_forces, matrix_eval, matrix_valid, model_of,
)
from .kripke import (
    KripkeModel, countermodel_search, diamond_model, enumerate_models, forces, validate,
)
from .prover import in_program_fragment, ipl_decide, kc_decide
from .stable import answer_sets_ht, answer_sets_reduct, reduct_formula
from .syntax import (
    And, Formula, Imp, Not, Or, Program, Rule, render, subformulas,
)

ATOMS3 = ("p", "q", "r")
FULL_CONNECTIVES = ("and", "or", "imp", "not", "top", "bot")
POSITIVE_CONNECTIVES = ("and", "or", "top", "bot")


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, detail):
        if len(self.counterexamples) < 5:
            self.counterexamples.append(detail)
        else:
            self.counterexamples.append("...")

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.name} ({self.cases} cases)"
        if not self.passed:
            out += ": " + "; ".join(map(str, self.counterexamples[:5]))
        return out


# --- value algebras --------------------------------------------------------------

class KripkeAlgebra:
    """Truth masks of one Kripke model."""

    def __init__(self, model: KripkeModel):
        self.m = model

    def atom(self, name):
        return self.m.atom_mask(name)

    def top(self):
        return self.m.full_mask

    def bot(self):
        return 0

    def neg(self, a):
        return self.m.neg_mask(a)

    def conj(self, a, b):
        return a & b

    def disj(self, a, b):
        return a | b

    def impl(self, a, b):
        return self.m.imp_mask(a, b)


class ForcingAndClassical:
    """(forcing mask, mask of worlds whose label classically satisfies)."""

    def __init__(self, model: KripkeModel):
        self.k = KripkeAlgebra(model)
        self.full = model.full_mask

    def atom(self, name):
        a = self.k.atom(name)
        return (a, a)

    def top(self):
        return (self.full, self.full)

    def bot(self):
        return (0, 0)

    def neg(self, a):
        return (self.k.neg(a[0]), self.full & ~a[1])

    def conj(self, a, b):
        return (a[0] & b[0], a[1] & b[1])

    def disj(self, a, b):
        return (a[0] | b[0], a[1] | b[1])

    def impl(self, a, b):
        return (self.k.impl(a[0], b[0]), self.full & (~a[1] | b[1]))


class HereThere:
    """(forced at h, forced at t) for one HT model, plus the classical value
    at Y and the here/there values of the reduct by X."""

    def __init__(self, model: HTModel):
        self.y, self.x = model.here, model.there

    # value layout: (h, t, classical_y, red_h, red_t)
    def atom(self, name):
        h, t = name in self.y, name in self.x
        return (h, t, h, h, t)

    def top(self):
        return (True, True, True, True, True)

    def bot(self):
        return (False, False, False, False, False)

    def neg(self, a):
        # the reduct of not A is a constant decided by A's value at X
        nt = not a[1]
        return (nt and not a[0], nt, not a[2], nt, nt)

    def conj(self, a, b):
        return tuple(u and v for u, v in zip(a, b))

    def disj(self, a, b):
        return tuple(u or v for u, v in zip(a, b))

    def impl(self, a, b):
        t = not a[1] or b[1]
        rt = not a[4] or b[4]
        return ((not a[0] or b[0]) and t, t, not a[2] or b[2], (not a[3] or b[3]) and rt, rt)


class MatrixAndHT:
    """(three-valued matrix value, forced at h, forced at t) for one assignment."""

    def __init__(self, valuation):
        self.v = valuation

    def atom(self, name):
        val = self.v[name]
        return (val, val == G3Value.ONE, val >= G3Value.HALF)

    def top(self):
        return (G3Value.ONE, True, True)

    def bot(self):
        return (G3Value.ZERO, False, False)

    def neg(self, a):
        val = G3Value.ONE if a[0] == G3Value.ZERO else G3Value.ZERO
        return (val, not a[1] and not a[2], not a[2])

    def conj(self, a, b):
        return (min(a[0], b[0]), a[1] and b[1], a[2] and b[2])

    def disj(self, a, b):
        return (max(a[0], b[0]), a[1] or b[1], a[2] or b[2])

    def impl(self, a, b):
        val = G3Value.ONE if a[0] <= b[0] else b[0]
        t = not a[2] or b[2]
        return (val, (not a[1] or b[1]) and t, t)


def _truth_mask(model: KripkeModel, f: Formula) -> int:
    return sum(1 << i for i, w in enumerate(model.worlds) if forces(model, w, f))


def _classical_mask(model: KripkeModel, f: Formula) -> int:
    return sum(1 << i for i, (_, lab) in enumerate(model.labels) if eval_classical(lab, f))


def _verified_closure(res: CheckResult, algebra, atoms, connectives, max_depth: int,
                      real: Callable[[Formula], object], where) -> dict:
    """:func:`semantic_closure`, comparing ``real`` (the public evaluation
    functions) with the algebra on every formula the closure builds.

    Those formulas apply each connective to every combination of reachable
    values. The evaluators are structural recursions, so agreement there
    carries over to every formula up to ``max_depth``, not only to the
    representatives kept in the table.
    """
    def visit(f, value):
        if real(f) != value:
            res.fail(f"evaluation of {render(f)} disagrees with its value {value} in {where}")

    return semantic_closure(algebra, atoms, connectives, max_depth, visit=visit)


# --- exhaustive checks -------------------------------------------------------

def check_persistence(atoms=ATOMS3, max_worlds: int = 3, max_depth: int = 4) -> CheckResult:
    """Forced formulas stay forced at every later world."""
    res = CheckResult("persistence")
    for model in enumerate_models(max_worlds, atoms):
        table = _verified_closure(res, KripkeAlgebra(model), atoms, FULL_CONNECTIVES, max_depth,
                                  lambda f: _truth_mask(model, f), model)
        for mask, f in table.items():
            res.cases += 1
            for i, up in enumerate(model.up_masks):
                if mask >> i & 1 and up & ~mask:
                    res.fail(f"{render(f)} forced at {model.worlds[i]} but not above it in {model}")
    return res


def check_one_world_agreement(atoms=ATOMS3, max_depth: int = 4) -> CheckResult:
    """On a one-world model forcing is classical truth."""
    res = CheckResult("one-world forcing is classical")
    for x in subsets(atoms):
        model = KripkeModel.build({0: x})
        table = _verified_closure(res, ForcingAndClassical(model), atoms, FULL_CONNECTIVES, max_depth,
                                  lambda f: (_truth_mask(model, f), _classical_mask(model, f)), model)
        for (k, c), f in table.items():
            res.cases += 1
            if k != c:
                res.fail(f"{render(f)} at <{sorted(x)}>")
    return res


def check_positive_forcing(atoms=ATOMS3, max_worlds: int = 3, max_depth: int = 4) -> CheckResult:
    """Positive formulas are forced exactly where classically true; a forced
    implication between positive formulas is classically true."""
    res = CheckResult("positive formulas evaluate classically at each world")
    for model in enumerate_models(max_worlds, atoms):
        table = _verified_closure(res, ForcingAndClassical(model), atoms, POSITIVE_CONNECTIVES, max_depth,
                                  lambda f: (_truth_mask(model, f), _classical_mask(model, f)), model)
        for (k, c), f in table.items():
            res.cases += 1
            if k != c:
                res.fail(f"{render(f)} in {model}")
        items = list(table.values())
        for fa in items:
            for fb in items:
                res.cases += 1
                imp = Imp(fa, fb)
                if _truth_mask(model, imp) & ~_classical_mask(model, imp):
                    res.fail(f"{render(imp)} forced but classically false in {model}")
    return res


def _ht_values(m: HTModel):
    def real(f):
        red = reduct_formula(f, m.there)
        return (ht_forces(m, "h", f), ht_forces(m, "t", f), eval_classical(m.here, f),
                ht_forces(m, "h", red), ht_forces(m, "t", red))
    return real


def check_positive_implications(atoms=ATOMS3, max_depth: int = 4) -> CheckResult:
    """<Y, X> forces A -> B (A, B positive) iff both <X> and <Y> satisfy it."""
    res = CheckResult("HT implication between positive formulas")
    for m in all_ht_models(atoms):
        table = _verified_closure(res, HereThere(m), atoms, POSITIVE_CONNECTIVES, max_depth, _ht_values(m), m)
        items = list(table.values())
        for fa in items:
            for fb in items:
                res.cases += 1
                imp = Imp(fa, fb)
                lhs = ht_forces(m, "h", imp)
                rhs = eval_classical(m.there, imp) and eval_classical(m.here, imp)
                if lhs != rhs:
                    res.fail(f"{render(imp)} in {m}")
    return res


def check_reduct_invariance(atoms=ATOMS3, max_depth: int = 4) -> CheckResult:
    """<Y, X> forces A iff it forces the reduct of A by X, and the reduct is
    free of negation."""
    res = CheckResult("HT forcing is invariant under the reduct")
    for m in all_ht_models(atoms):
        def real(f, m=m):
            red = reduct_formula(f, m.there)
            if any(isinstance(g, Not) for g in subformulas(red)):
                res.fail(f"reduct {render(red)} of {render(f)} still contains negation")
            return _ht_values(m)(f)

        table = _verified_closure(res, HereThere(m), atoms, FULL_CONNECTIVES, max_depth, real, m)
        for (h, t, _, rh, rt), f in table.items():
            res.cases += 1
            if h != rh or t != rt:
                res.fail(f"{render(f)} vs reduct {render(reduct_formula(f, m.there))} in {m}")
    return res


def check_negation_in_ht(atoms=ATOMS3, max_depth: int = 4) -> CheckResult:
    """<Y, X> forces not A iff <X> does not satisfy A."""
    res = CheckResult("HT negation is classical falsity at X")
    for m in all_ht_models(atoms):
        table = _verified_closure(res, HereThere(m), atoms, FULL_CONNECTIVES, max_depth, _ht_values(m), m)
        for _, f in table.items():
            res.cases += 1
            if ht_forces(m, "h", Not(f)) != (not eval_classical(m.there, f)):
                res.fail(f"not ({render(f)}) in {m}")
    return res


def check_ht_kripke_agreement(atoms=ATOMS3, max_depth: int = 4) -> CheckResult:
    """The dedicated HT evaluator agrees with general Kripke forcing."""
    res = CheckResult("HT evaluator equals Kripke forcing on h <= t")
    for m in all_ht_models(atoms):
        k = m.to_kripke()

        def real(f, m=m, k=k):
            pair = (ht_forces(m, "h", f), ht_forces(m, "t", f))
            if pair != (forces(k, "h", f), forces(k, "t", f)):
                res.fail(f"{render(f)} in {m}")
            return _ht_values(m)(f)

        table = _verified_closure(res, HereThere(m), atoms, FULL_CONNECTIVES, max_depth, real, m)
        res.cases += len(table)
    return res


def check_matrix_kripke(atoms=ATOMS3, max_depth: int = 4) -> CheckResult:
    """Value 1 iff forced at h; value at least 1/2 iff forced at t."""
    res = CheckResult("three-valued matrix agrees with HT forcing")
    for v in all_valuations(atoms):
        m = model_of(v)
        real = lambda f, v=v, m=m: (matrix_eval(v, f), ht_forces(m, "h", f), ht_forces(m, "t", f))
        table = _verified_closure(res, MatrixAndHT(v), atoms, FULL_CONNECTIVES, max_depth, real, m)
        for (val, h, t), f in table.items():
            res.cases += 1
            if (val == G3Value.ONE) != h or (val >= G3Value.HALF) != t:
                res.fail(f"{render(f)} = {val} under {m}")
    return res


def check_g3_axioms() -> CheckResult:
    res = CheckResult("G3 axiom schemes are matrix-valid")
    for name, f in g3_axioms().items():
        res.cases += 1
        if not matrix_valid(f):
            res.fail(name)
        res.cases += 1
        if not g3_entails((), f):
            res.fail(f"{name} (HT models)")
        res.cases += 1
        if not all(eval_classical(x, f) for x in subsets("abcd")):
            res.fail(f"{name} is not classically valid")
    return res


def check_diamond(max_depth: int = 3) -> CheckResult:
    """In the diamond model, w forces A iff u and v both force A, for every A
    in [∧,→,¬] over p, q; enumerated formula by formula."""
    res = CheckResult("diamond: w forces A iff u and v do")
    m = diamond_model()
    alg = KripkeAlgebra(m)
    conns = ("and", "imp", "not")
    _verified_closure(res, alg, ("p", "q"), conns, max_depth, lambda f: _truth_mask(m, f), m)
    w, u, v = (1 << m.index(x) for x in "wuv")
    for f, mask in enumerate_valued(alg, ("p", "q"), conns, max_depth):
        res.cases += 1
        if bool(mask & w) != (bool(mask & u) and bool(mask & v)):
            res.fail(render(f))
    return res


def check_kc_soundness(atoms=("p",), max_worlds: int = 5, max_depth: int = 3) -> CheckResult:
    """Single-top models force not A | not not A for every A."""
    res = CheckResult("single-top models force weak excluded middle")
    for model in enumerate_models(max_worlds, atoms, single_top=True):
        alg = KripkeAlgebra(model)
        table = _verified_closure(res, alg, atoms, FULL_CONNECTIVES, max_depth,
                                  lambda f: _truth_mask(model, f), model)
        for f in table.values():
            res.cases += 1
            wem = Or(Not(f), Not(Not(f)))
            if _truth_mask(model, wem) != model.full_mask:
                res.fail(f"{render(wem)} in {model}")
    return res


# --- seeded random checks -----------------------------------------------------------

def check_method_agreement(n: int = 1000, seed: int = 1, max_atoms: int = 4, max_rules: int = 4,
                           max_depth: int = 3) -> CheckResult:
    """Answer sets by the reduct equal answer sets by equilibrium models."""
    rng = random.Random(seed)
    res = CheckResult("reduct and equilibrium answer sets agree")
    for _ in range(n):
        names = tuple("pqrs"[:rng.randint(1, max_atoms)])
        prog = random_program(rng, names, max_rules, max_depth)
        res.cases += 1
        a = answer_sets_reduct(prog).answer_sets
        b = answer_sets_ht(prog).answer_sets
        if a != b:
            res.fail(f"{render(prog)!r}: {a} vs {b}")
    return res


def random_pair(rng: random.Random, names: tuple, max_rules: int = 3, max_depth: int = 2,
                connectives=("and", "or", "not")) -> tuple[Program, Program]:
    """Two programs over ``names``; often strongly equivalent by construction."""
    p1 = random_program(rng, names, max_rules, max_depth, connectives)
    kind = rng.randrange(4)
    if kind == 0:
        return p1, random_program(rng, names, max_rules, max_depth, connectives)
    if kind == 1:
        return p1, p1 | Program.of(random_rule(rng, names, max_depth, connectives))
    rules = sorted(p1.rules, key=render)
    r = rng.choice(rules)
    extra = random_formula(rng, names, 1, connectives)
    weaker = Rule(And(r.body, extra), r.head) if kind == 2 else Rule(r.body, Or(r.head, extra))
    return p1, Program(p1.rules | {weaker}, p1.universe)


def check_oracle_agreement(n: int = 500, seed: int = 2, max_atoms: int = 3) -> CheckResult:
    """HT equivalence decides strong equivalence exactly as the extension oracle."""
    rng = random.Random(seed)
    res = CheckResult("HT equivalence matches the unary-extension oracle")
    positives = 0
    for _ in range(n):
        names = tuple("pqr"[:rng.randint(1, max_atoms)])
        p1, p2 = random_pair(rng, names)
        res.cases += 1
        se = strongly_equivalent(p1, p2)
        oracle = strong_equiv_oracle(p1, p2)
        positives += se.equivalent
        if se.equivalent != oracle.equivalent:
            res.fail(f"{render(p1)!r} / {render(p2)!r}: g3={se.equivalent} oracle={oracle.equivalent}")
            continue
        if se.witness is not None:
            if ht_satisfies(se.witness, p1) == ht_satisfies(se.witness, p2):
                res.fail(f"HT witness {se.witness} does not separate")
        if oracle.extension is not None:
            a1 = answer_sets_reduct(p1 | oracle.extension, p1.universe | p2.universe).answer_sets
            a2 = answer_sets_reduct(p2 | oracle.extension, p1.universe | p2.universe).answer_sets
            if a1 == a2:
                res.fail(f"extension {render(oracle.extension)!r} does not separate")
    res.positives = positives
    return res


def check_negfree_minimal_models(n: int = 300, seed: int = 9, max_atoms: int = 4) -> CheckResult:
    """Without negation, answer sets are the minimal classical models."""
    rng = random.Random(seed)
    res = CheckResult("negation-free answer sets are minimal models")
    for _ in range(n):
        names = tuple("pqrs"[:rng.randint(1, max_atoms)])
        prog = random_program(rng, names, 4, 2, ("and", "or", "top", "bot"))
        res.cases += 1
        models = classical_models(prog)
        minimal = [x for x in models if not any(y < x for y in models)]
        direct = tuple(sorted(minimal, key=world_key))
        for method in (answer_sets_reduct, answer_sets_ht):
            if method(prog).answer_sets != direct:
                res.fail(f"{render(prog)!r} via {method.__name__}")
    return res


def check_negfree_sandwich(n: int = 300, seed: int = 3, max_atoms: int = 3) -> CheckResult:
    """Without negation, strong equivalence is classical equivalence."""
    rng = random.Random(seed)
    res = CheckResult("negation-free strong equivalence is classical equivalence")
    conns = ("and", "or", "top", "bot")
    for _ in range(n):
        names = tuple("pqr"[:rng.randint(1, max_atoms)])
        p1, p2 = random_pair(rng, names, connectives=conns)
        res.cases += 1
        verdicts = (negfree_strong_equiv(p1, p2), strongly_equivalent(p1, p2).equivalent,
                    strong_equiv_oracle(p1, p2).equivalent)
        if len(set(verdicts)) != 1:
            res.fail(f"{render(p1)!r} / {render(p2)!r}: cpl, g3, oracle = {verdicts}")
    return res


def check_horn_least_model(n: int = 500, seed: int = 4, max_atoms: int = 5, max_rules: int = 6) -> CheckResult:
    """The intersection of the classical models of a satisfiable Horn program
    is a model, and it is the least one."""
    rng = random.Random(seed)
    res = CheckResult("Horn programs have a least model")
    while res.cases < n:
        names = tuple("pqrst"[:rng.randint(1, max_atoms)])
        prog = random_horn_program(rng, names, max_rules)
        models = classical_models(prog)
        if not models:
            if minimal_model(prog) is not None:
                res.fail(f"{render(prog)!r}: unsatisfiable but a minimal model was returned")
            continue
        res.cases += 1
        meet = frozenset.intersection(*models)
        if not satisfies(meet, prog):
            res.fail(f"{render(prog)!r}: intersection {sorted(meet)} is not a model")
        if minimal_model(prog) != meet:
            res.fail(f"{render(prog)!r}: forward chaining disagrees with the intersection")
    return res


def _random_query(rng: random.Random, names, depth: int, connectives):
    premises = [random_formula(rng, names, depth - 1, connectives) for _ in range(rng.randint(0, 2))]
    return premises, random_formula(rng, names, depth, connectives)


def check_soundness_chain(n: int = 300, seed: int = 5, max_depth: int = 4) -> CheckResult:
    """IPL proves => KC proves => G3 entails => classically valid."""
    rng = random.Random(seed)
    res = CheckResult("IPL => KC => G3 => CPL")
    conns = ("and", "or", "imp", "not", "bot")
    for _ in range(n):
        names = tuple("pqr"[:rng.randint(1, 3)])
        premises, goal = _random_query(rng, names, max_depth, conns)
        res.cases += 1
        ipl = ipl_decide(premises, goal)
        kc = kc_decide(premises, goal)
        g3 = g3_entails(premises, goal)
        cpl = all(eval_classical(x, goal) for x in subsets(names)
                  if all(eval_classical(x, p) for p in premises))
        query = f"{[render(p) for p in premises]} => {render(goal)}"
        if ipl.provable and not kc.provable:
            res.fail(f"IPL but not KC: {query}")
        if kc.provable and not g3:
            res.fail(f"KC but not G3: {query}")
        if g3 and not cpl:
            res.fail(f"G3 but not CPL: {query}")
        if in_program_fragment([*premises, goal]) and kc.status.name == "UNKNOWN":
            res.fail(f"unknown on the fragment: {query}")
        for v in (ipl, kc):
            if v.provable and v.refuted:
                res.fail(f"both provable and refuted: {query}")
            if v.countermodel is not None:
                m, w = v.countermodel
                if validate(m) or not all(forces(m, w, p) for p in premises) or forces(m, w, goal):
                    res.fail(f"bad countermodel for {query}")
    return res


def check_kc_fragment(n: int = 500, seed: int = 6) -> CheckResult:
    """On program rules KC derivability is G3 entailment.

    Checked both ways against single-top Kripke models: a G3 verdict of
    "entailed" must leave no single-top countermodel of up to three worlds,
    and a KC refutation must carry a valid single-top countermodel.
    """
    rng = random.Random(seed)
    res = CheckResult("KC equals G3 on program rules")
    conns = ("and", "or", "not")
    for _ in range(n):
        names = tuple("pqr"[:rng.randint(1, 3)])
        premises = [random_rule(rng, names, 2, conns).formula for _ in range(rng.randint(0, 2))]
        goal = random_rule(rng, names, 2, conns).formula
        query = f"{[render(p) for p in premises]} => {render(goal)}"
        res.cases += 1
        verdict = kc_decide(premises, goal)
        g3 = g3_entails(premises, goal)
        if verdict.provable != g3 or verdict.status.name == "UNKNOWN":
            res.fail(f"kc={verdict.status.name} g3={g3}: {query}")
            continue
        if verdict.refuted:
            m, w = verdict.countermodel
            if not m.single_top() or validate(m) or forces(m, w, goal):
                res.fail(f"bad single-top countermodel for {query}")
        elif countermodel_search(premises, goal, single_top=True, max_worlds=3) is not None:
            res.fail(f"single-top countermodel exists but G3 entails: {query}")
    return res


def check_ipl_vs_search(n: int = 200, seed: int = 7, max_worlds: int = 4) -> CheckResult:
    """The sequent procedure agrees with bounded countermodel search."""
    rng = random.Random(seed)
    res = CheckResult("IPL prover agrees with countermodel search")
    conns = ("and", "or", "imp", "not")
    for _ in range(n):
        names = tuple("pq"[:rng.randint(1, 2)])
        premises, goal = _random_query(rng, names, 3, conns)
        res.cases += 1
        verdict = ipl_decide(premises, goal, bound=max_worlds)
        found = countermodel_search(premises, goal, max_worlds=max_worlds)
        query = f"{[render(p) for p in premises]} => {render(goal)}"
        if verdict.provable and found is not None:
            res.fail(f"provable yet refuted by {found.model}: {query}")
        if found is not None and not verdict.refuted:
            res.fail(f"countermodel exists but not refuted: {query}")
    return res


def check_fresh_atoms(n: int = 200, seed: int = 8) -> CheckResult:
    """Adding unused atoms to the universe changes no verdict, and fresh atoms
    never occur in answer sets."""
    rng = random.Random(seed)
    res = CheckResult("fresh atoms are inert")
    for _ in range(n):
        names = tuple("pq"[:rng.randint(1, 2)])
        p1, p2 = random_pair(rng, names)
        res.cases += 1
        wide1, wide2 = p1.with_universe(p1.universe | {"z"}), p2.with_universe(p2.universe | {"z"})
        a = answer_sets_reduct(p1).answer_sets
        b = answer_sets_reduct(wide1).answer_sets
        if a != b or any("z" in x for x in b):
            res.fail(f"answer sets change: {render(p1)!r}")
        if cpl_equivalent(p1, p2) != cpl_equivalent(wide1, wide2):
            res.fail(f"classical verdict changes: {render(p1)!r} / {render(p2)!r}")
        if g3_equivalent(p1, p2) != g3_equivalent(wide1, wide2):
            res.fail(f"G3 verdict changes: {render(p1)!r} / {render(p2)!r}")
    return res


EXHAUSTIVE_LEMMAS: dict[str, Callable[[], CheckResult]] = {
    "persistence": check_persistence,
    "positive-forcing": check_positive_forcing,
    "positive-implications": check_positive_implications,
    "reduct-invariance": check_reduct_invariance,
}
