"""Replays every worked example and lemma check, reporting pass/fail per anchor."""

from __future__ import annotations

import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from dataclasses import dataclass
from typing import Callable

from . import checks
from .equivalence import classify, expressibility_search, strong_equiv_oracle, strongly_equivalent
from .ht import G3Value, g3_entails, g3_equivalent, matrix_eval
from .kripke import countermodel_search, diamond_model, forces, validate
from .prover import check_normkc_instance, ipl_decide, kc_decide
from .stable import answer_sets_ht, answer_sets_reduct, is_answer_set, reduct
from .syntax import (
    AND_NOT, NORMAL, TOP, Fragment, Program, Rule, fragment_check, parse_formula,
    parse_program, render,
)

DEFAULT_SEED = 20240101


@dataclass(frozen=True)
class SuiteEntry:
    name: str
    anchor: str
    passed: bool
    elapsed: float
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "anchor": self.anchor, "passed": self.passed,
                "elapsed": round(self.elapsed, 3), "detail": self.detail}


@dataclass(frozen=True)
class PaperSuiteReport:
    entries: tuple
    seed: int

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def elapsed(self) -> float:
        return sum(e.elapsed for e in self.entries)

    def to_json(self, timings: bool = True) -> dict:
        rows = [e.to_json() for e in self.entries]
        if not timings:
            for r in rows:
                del r["elapsed"]
        return {"seed": self.seed, "passed": self.passed, "checks": rows}

    def lines(self) -> list[str]:
        out = []
        for e in self.entries:
            status = "PASS" if e.passed else "FAIL"
            tail = f"  {e.detail}" if e.detail and not e.passed else ""
            out.append(f"{status}  {e.elapsed:6.2f}s  {e.name}  [{e.anchor}]{tail}")
        total = sum(e.passed for e in self.entries)
        out.append(f"{total}/{len(self.entries)} checks passed in {self.elapsed:.1f}s")
        return out


P = parse_program
F = parse_formula


def _sets(report) -> list:
    return [sorted(x) for x in report.answer_sets]


def _same_sets(prog: str, expected: list) -> tuple[bool, str]:
    program = P(prog)
    a, b = answer_sets_reduct(program), answer_sets_ht(program)
    got = _sets(a)
    return got == expected and a.answer_sets == b.answer_sets, f"reduct {got}, equilibrium {_sets(b)}"


def _ex_parse_pair():
    got = P("not p -> q. not not p -> q.")
    want = Program.of(Rule(F("not p"), F("q")), Rule(F("not not p"), F("q")))
    return got == want, render(got)


def _ex_parse_normal():
    got = P("p & r -> s.")
    return got == Program.of(Rule(F("p & r"), F("s"))), render(got)


def _ex_fragments():
    normal = fragment_check(P("p & r -> s."), NORMAL)
    disj = fragment_check(P("p | q."), AND_NOT)
    return normal and not disj, f"normal={normal}, p|q in [and,not]={disj}"


def _ex_one_world():
    r = checks.check_one_world_agreement()
    return r.passed, str(r)


def _ex_diamond_disjunction():
    m = diamond_model()
    pq = F("p | q")
    vals = {w: forces(m, w, pq) for w in "wuv"}
    return vals == {"w": False, "u": True, "v": True}, str(vals)


def _ex_diamond_top():
    m = diamond_model()
    return m.terminal_nodes() == ["t"] and not validate(m), str(m.terminal_nodes())


def _ex_diamond_property():
    r = checks.check_diamond(3)
    return r.passed, str(r)


def _ex_wem_single_top():
    found = countermodel_search((), F("not p | not not p"), single_top=True, max_worlds=5)
    plain = countermodel_search((), F("not p | not not p"), max_worlds=3)
    return found is None and plain is not None, f"single-top: {found}, any: {plain and plain.model}"


def _ex_ht_negation():
    r = checks.check_negation_in_ht()
    return r.passed, str(r)


def _ex_matrix_value():
    v = {"p": G3Value.HALF, "q": G3Value.ZERO}
    val = matrix_eval(v, F("p | (p -> q) | not q"))
    return val == G3Value.ONE, f"value {val.name}"


def _ex_normal_consequence_g3():
    ok = g3_entails([F("a & c -> d"), F("not a -> b"), F("not c -> b")], F("not d -> b"))
    return ok, ""


def _ex_wem_g3():
    return g3_entails((), F("not p | not not p")), ""


def _ex_disjunction_g3():
    ok = g3_equivalent(P("p | q."), P("((p -> q) -> q) & ((q -> p) -> p)."))
    return ok, ""


def _ex_q_pair_g3():
    return g3_equivalent(P("q."), P("not p -> q. not not p -> q.")), ""


def _ex_reduct_negfree():
    prog = P("p | q. p & q -> r. r -> p.")
    ok = all(reduct(prog, x).rules == prog for x in [(), ("p",), ("p", "q", "r")])
    return ok, ""


def _ex_answer_sets_disj():
    return _same_sets("p | q.", [["p"], ["q"]])


def _ex_answer_sets_imps():
    a = _same_sets("p -> q.", [[]])
    b = _same_sets("q -> p.", [[]])
    return a[0] and b[0], f"{a[1]}; {b[1]}"


def _ex_answer_sets_dneg():
    a = _same_sets("not not p.", [])
    b = _same_sets("not not p. p.", [["p"]])
    return a[0] and b[0], f"{a[1]}; {b[1]}"


def _ex_negfree_minimal():
    r = checks.check_negfree_minimal_models(seed=DEFAULT_SEED)
    return r.passed, str(r)


def _ex_is_answer_set():
    return is_answer_set(P("not not p. p."), {"p"}), ""


def _ex_se_wem_top():
    return strongly_equivalent(P("not p | not not p."), Program.of(Rule(TOP, TOP))).equivalent, ""


def _ex_se_pi12():
    p1 = P("p & r -> s. not p -> q. not r -> q.")
    p2 = p1 | P("not s -> q.")
    return strongly_equivalent(p1, p2).equivalent, ""


def _ex_se_q_pair():
    p1, p2 = P("q."), P("not p -> q. not not p -> q.")
    a = strongly_equivalent(p1, p2).equivalent
    b = strong_equiv_oracle(p1, p2, {"p", "q"}).equivalent
    return a and b, f"g3={a}, oracle={b}"


def _ex_classify_imps():
    r = classify(P("p -> q."), P("q -> p."))
    ext = r.separating_extension
    ok = (not r.cpl and not r.g3 and r.same_answer_sets and r.strongly_equivalent is False
          and ext is not None and ext.rules == P("p.").rules)
    return ok, str(r.to_json())


def _ex_classify_dneg():
    r = classify(P("not not p."), P("p."))
    ok = r.cpl and not r.g3 and r.strongly_equivalent is False and r.separating_ht_model is not None
    return ok, str(r.to_json())


def _ex_classify_q_pair():
    r = classify(P("q."), P("not p -> q. not not p -> q."))
    ok = r.cpl and r.g3 and r.same_answer_sets and r.strongly_equivalent and r.kc_on_fragment
    return ok, str(r.to_json())


def _ex_inexpressible():
    found = expressibility_search(P("p | q."), AND_NOT, 2)
    return found is None, "" if found is None else render(found)


def _ex_expressible():
    frag = Fragment(frozenset({"and", "imp"}), rule_form=False)
    found = expressibility_search(P("p | q."), frag, 3)
    ok = found is not None and g3_equivalent(found, P("p | q.")) and fragment_check(found, frag)
    return ok, "" if found is None else render(found).replace("\n", " ")


def _ex_normal_consequence_kc():
    v = kc_decide([F("a & c -> d"), F("not a -> b"), F("not c -> b")], F("not d -> b"), trace=True)
    return v.provable, f"{v.method}, derivation of {v.derivation.size() if v.derivation else 0} nodes"


def _ex_alt_kc_axiom():
    v = kc_decide((), F("((not p -> q) & (not not p -> q)) -> q"))
    return v.provable, v.method


def _ex_normkc():
    return check_normkc_instance(), ""


def _ex_peirce():
    v = kc_decide((), F("((p -> q) -> p) -> p"))
    if not v.refuted or v.countermodel is None:
        return False, str(v.status)
    m, w = v.countermodel
    ok = len(m.worlds) <= 2 and m.single_top() and not validate(m) and not forces(m, w, F("((p -> q) -> p) -> p"))
    return ok, str(m)


def _ex_wem_ipl():
    v = ipl_decide((), F("not p | not not p"))
    ok = v.refuted and v.countermodel is not None and len(v.countermodel.model.worlds) <= 3
    return ok and g3_entails((), F("not p | not not p")), "" if v.countermodel is None else str(v.countermodel.model)


def _ex_g3_axioms():
    r = checks.check_g3_axioms()
    return r.passed, str(r)


def _run_check(fn: Callable[..., checks.CheckResult], kw: dict):
    r = fn(**kw)
    return r.passed, str(r)


def _lemma(fn: Callable[..., checks.CheckResult], **kw):
    return partial(_run_check, fn, kw)


def _cli_cases():
    from .cli import run_captured

    def run(argv):
        code, out, _ = run_captured(argv)
        return code, out

    with tempfile.TemporaryDirectory() as tmp:
        def write(name, text):
            path = os.path.join(tmp, name)
            with open(path, "w") as fh:
                fh.write(text)
            return path
        disj = write("disj.lp", "p | q.\n")
        q = write("q.lp", "q.\n")
        qq = write("qq.lp", "not p -> q.\nnot not p -> q.\n")
        dn = write("dn.lp", "not not p.\n")
        p = write("p.lp", "p.\n")
        code, out = run(["answersets", disj])
        yield "answersets on p | q prints {p} and {q}", code == 0 and "{p}" in out and "{q}" in out, out.strip()
        code, out = run(["strong-equiv", q, qq])
        yield "strong-equiv on the q pair exits 0", code == 0, f"exit {code}"
        c1, _ = run(["equiv", dn, p, "--logic", "cpl"])
        c2, _ = run(["equiv", dn, p, "--logic", "g3"])
        yield "equiv not not p / p: cpl exits 0, g3 exits 1", (c1, c2) == (0, 1), f"exits {c1}, {c2}"


EXAMPLES: list[tuple[str, str, Callable]] = [
    ("parse the q pair program", "syntax: negated-premise pair", _ex_parse_pair),
    ("parse a normal rule", "syntax: normal program rule", _ex_parse_normal),
    ("fragment membership of p & r -> s and p | q", "syntax: fragments", _ex_fragments),
    ("one-world models force classically", "kripke: identity ordering", _ex_one_world),
    ("diamond: p | q fails at w, holds at u and v", "kripke: diamond model", _ex_diamond_disjunction),
    ("diamond has the single terminal node t", "kripke: diamond model", _ex_diamond_top),
    ("diamond: w forces A iff u and v force A over [and,imp,not] depth <= 3", "kripke: diamond corollary", _ex_diamond_property),
    ("no single-top countermodel to not p | not not p", "kripke: KC axiom on single-top models", _ex_wem_single_top),
    ("HT: <Y,X> forces not A iff X does not satisfy A", "ht: negation lemma", _ex_ht_negation),
    ("matrix value of p | (p -> q) | not q at p=1/2, q=0", "ht: G3 axioms", _ex_matrix_value),
    ("not d -> b follows in G3 from the normal-program premises", "ht: KC consequence for normal programs", _ex_normal_consequence_g3),
    ("not p | not not p is G3-valid", "ht: KC axiom in G3", _ex_wem_g3),
    ("p | q G3-equivalent to ((p->q)->q) & ((q->p)->p)", "ht: disjunction definability", _ex_disjunction_g3),
    ("{q} G3-equivalent to {not p -> q, not not p -> q}", "ht: negated-premise pair", _ex_q_pair_g3),
    ("negation-free programs are their own reduct", "stable: reduct", _ex_reduct_negfree),
    ("answer sets of p | q are {p} and {q}", "stable: disjunctive example", _ex_answer_sets_disj),
    ("answer sets of p -> q and of q -> p are both {}", "stable: same answer sets", _ex_answer_sets_imps),
    ("not not p has none; not not p, p has {p}", "stable: double negation", _ex_answer_sets_dneg),
    ("negation-free answer sets are the minimal models (seeded)", "stable: negation-free programs", _ex_negfree_minimal),
    ("{p} is an answer set of {not not p, p}", "stable: double negation", _ex_is_answer_set),
    ("not p | not not p strongly equivalent to top", "equivalence: KC axiom", _ex_se_wem_top),
    ("Pi1 strongly equivalent to Pi1 + {not s -> q}", "equivalence: normal programs", _ex_se_pi12),
    ("q pair strongly equivalent (G3 and oracle)", "equivalence: negated-premise pair", _ex_se_q_pair),
    ("p -> q vs q -> p: same answer sets, separated by {p}", "equivalence: same answer sets", _ex_classify_imps),
    ("not not p vs p: classical but not strong equivalence", "equivalence: double negation", _ex_classify_dneg),
    ("q pair: every equivalence holds", "equivalence: negated-premise pair", _ex_classify_q_pair),
    ("p | q not expressible by [and,not] rules of depth 2", "equivalence: disjunction inexpressibility", _ex_inexpressible),
    ("p | q expressible with [and,imp]", "equivalence: disjunction definability", _ex_expressible),
    ("not d -> b provable in KC from the normal-program premises", "prover: KC consequence for normal programs", _ex_normal_consequence_kc),
    ("alternative KC axiom provable", "prover: alternative KC axiom", _ex_alt_kc_axiom),
    ("normal-program axiom instance yields not p | not not p", "prover: normal-program axiom", _ex_normkc),
    ("Peirce refuted in KC by a two-world chain", "prover: Peirce", _ex_peirce),
    ("not p | not not p refuted in IPL, valid in G3", "prover: weak excluded middle", _ex_wem_ipl),
    ("G3 axioms 1-4 all matrix-valid", "ht: G3 axiom list", _ex_g3_axioms),
]


def _lemmas(seed: int) -> list[tuple[str, str, Callable]]:
    return [
        ("persistence over <= 3 worlds, depth <= 4", "kripke: persistence", _lemma(checks.check_persistence)),
        ("positive formulas are classical at each world", "kripke: positive formulas", _lemma(checks.check_positive_forcing)),
        ("HT implications between positive formulas", "ht: positive implications", _lemma(checks.check_positive_implications)),
        ("HT forcing is invariant under the reduct", "stable: reduct and HT forcing", _lemma(checks.check_reduct_invariance)),
        ("matrix agrees with HT forcing, depth <= 4", "ht: matrix semantics", _lemma(checks.check_matrix_kripke)),
        ("HT evaluator agrees with Kripke forcing", "ht: two-world models", _lemma(checks.check_ht_kripke_agreement)),
        ("single-top models force not A | not not A", "kripke: KC completeness", _lemma(checks.check_kc_soundness)),
        ("reduct = equilibrium on 1000 random programs", "stable: equilibrium characterization",
         _lemma(checks.check_method_agreement, n=1000, seed=seed)),
        ("HT equivalence = extension oracle on 500 random pairs", "equivalence: HT characterization",
         _lemma(checks.check_oracle_agreement, n=500, seed=seed + 1)),
        ("negation-free: strong = classical equivalence", "equivalence: negation-free programs",
         _lemma(checks.check_negfree_sandwich, seed=seed + 2)),
        ("Horn programs have a least model", "classical: Horn least model", _lemma(checks.check_horn_least_model, seed=seed + 3)),
        ("KC = G3 on program rules", "prover: KC and G3 on programs", _lemma(checks.check_kc_fragment, seed=seed + 4)),
        ("IPL => KC => G3 => CPL", "prover: intermediate logics", _lemma(checks.check_soundness_chain, seed=seed + 5)),
    ]


def _timed(name: str, anchor: str, fn: Callable) -> SuiteEntry:
    start = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as exc:  # a crash is a failed entry, not a crashed suite
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return SuiteEntry(name, anchor, bool(passed), time.perf_counter() - start, detail)


def run_paper_suite(seed: int = DEFAULT_SEED, threads: int = 1) -> PaperSuiteReport:
    """Run every check; with ``threads > 1`` they are spread over worker
    processes and the entries are reported in the fixed order regardless."""
    jobs = EXAMPLES + _lemmas(seed)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            entries = list(pool.map(_timed, *zip(*jobs)))
    else:
        entries = [_timed(*job) for job in jobs]
    start = time.perf_counter()
    try:
        for name, passed, detail in _cli_cases():
            entries.append(SuiteEntry(name, "cli", passed, time.perf_counter() - start, detail))
            start = time.perf_counter()
    except Exception as exc:
        entries.append(SuiteEntry("command-line examples", "cli", False, time.perf_counter() - start,
                                  f"{type(exc).__name__}: {exc}"))
    return PaperSuiteReport(tuple(entries), seed)
