import random

import pytest
from hypothesis import given, settings

from conftest import formulas
from stablekc.errors import GuardExceeded
from stablekc.generate import random_formula
from stablekc.ht import g3_entails
from stablekc.kripke import countermodel_search, forces, validate
from stablekc.prover import (
    Status, check_normkc_instance, decide, g3_decide, ipl_decide, kc_decide, normkc_instance_checks,
    wem_instances,
)
from stablekc.syntax import Imp, Or, atoms, conj, parse_formula

F = parse_formula
p, q, r = atoms("p", "q", "r")

IPL_THEOREMS = [
    "p -> p",
    "p -> q -> p",
    "(p -> q -> r) -> (p -> q) -> p -> r",
    "p & q -> q & p",
    "p | q -> q | p",
    "not not not p -> not p",
    "p -> not not p",
    "not (p | q) -> not p & not q",
    "not p & not q -> not (p | q)",
    "not not (p | not p)",
    "((p -> q) -> q) -> ((q -> p) -> p) -> p | q -> p | q",
    "(p | q -> r) -> (p -> r) & (q -> r)",
    "bot -> p",
    "not (p & not p)",
]
NON_THEOREMS = [
    "p | not p",
    "not not p -> p",
    "((p -> q) -> p) -> p",
    "(p -> q) | (q -> p)",
    "not p | not not p",
    "not (p & q) -> not p | not q",
    "p",
]


@pytest.mark.parametrize("text", IPL_THEOREMS)
def test_ipl_theorems(text):
    v = ipl_decide((), F(text))
    assert v.status is Status.PROVABLE and v.derivation is not None


@pytest.mark.parametrize("text", NON_THEOREMS)
def test_ipl_non_theorems_refuted_with_countermodel(text):
    goal = F(text)
    v = ipl_decide((), goal)
    assert v.status is Status.REFUTED
    m, w = v.countermodel
    assert not validate(m) and not forces(m, w, goal)


def test_spec_examples():
    assert ipl_decide((), F("not p | not not p")).refuted
    assert len(ipl_decide((), F("not p | not not p")).countermodel.model.worlds) == 3
    assert ipl_decide((), F("p -> p")).provable
    assert ipl_decide([F("p & not p -> bot")], F("not bot")).provable


def test_ipl_never_unknown_even_without_small_countermodel():
    v = ipl_decide((), F("p | not p"), bound=1)
    assert v.refuted and v.countermodel is None and "1 worlds" in v.note


def _sequents(d):
    yield d
    for sub in d.premises:
        yield from _sequents(sub)


def test_derivation_nodes_are_sound():
    d = ipl_decide((), F("((p -> q) -> q) -> ((q -> p) -> p) -> p | q -> p | q")).derivation
    rules = set()
    for node in _sequents(d):
        rules.add(node.rule)
        assert countermodel_search(node.antecedents, node.succedent, max_worlds=3) is None
    assert "imp-R" in rules
    assert d.to_json()["rule"] == d.rule
    assert d.lines()[0].startswith(d.rule) or d.rule in d.lines()[0]


def test_qlem_in_kc():
    a, b, c, dd = atoms("a", "b", "c", "d")
    v = kc_decide([(a & c) >> dd, ~a >> b, ~c >> b], ~dd >> b, trace=True)
    assert v.provable and v.derivation is not None
    for node in _sequents(v.derivation):
        assert node.rule


def test_qlem_not_in_ipl():
    a, b, c, dd = atoms("a", "b", "c", "d")
    assert ipl_decide([(a & c) >> dd, ~a >> b, ~c >> b], ~dd >> b).refuted


def test_peirce_refuted_in_kc():
    goal = F("((p -> q) -> p) -> p")
    v = kc_decide((), goal)
    m, w = v.countermodel
    assert v.refuted and m.single_top() and len(m.worlds) <= 2 and not forces(m, w, goal)


def test_alternative_kc_axiom():
    v = kc_decide((), F("((not p -> q) & (not not p -> q)) -> q"))
    assert v.provable
    assert ipl_decide((), F("((not p -> q) & (not not p -> q)) -> q")).refuted


def test_wem_kc_valid_ipl_refuted_g3_valid():
    wem = F("not p | not not p")
    assert kc_decide((), wem).provable
    assert ipl_decide((), wem).refuted
    assert g3_decide((), wem).provable


def test_kc_unknown_outside_fragment():
    # G3-valid, KC-invalid, and the smallest single-top countermodel has four worlds
    goal = F("(p -> q) | (q -> p)")
    assert kc_decide((), goal, model_bound=3).status is Status.UNKNOWN
    v = kc_decide((), goal, model_bound=4)
    assert v.refuted and v.countermodel.model.single_top()


def test_normkc():
    checks = normkc_instance_checks()
    assert all(checks.values()), checks
    assert check_normkc_instance()
    assert ipl_decide((), F("p & not p -> bot")).provable
    assert ipl_decide((), F("not p | not not p")).refuted


def test_wem_instances():
    inst = wem_instances([F("not p -> q")])
    assert F("not p | not not p") in inst and F("not q | not not q") in inst
    assert all(isinstance(i, Or) for i in inst)


def test_size_guard():
    big = conj([p] * 300)
    with pytest.raises(GuardExceeded):
        ipl_decide((), big >> big)
    assert ipl_decide((), big >> big, force=True).provable


def test_decide_dispatch():
    assert decide("g3", (), F("not p | not not p")).provable
    with pytest.raises(ValueError):
        decide("s4", (), p)


def test_verdict_json():
    data = kc_decide((), F("((p -> q) -> p) -> p")).to_json()
    assert data["status"] == "refuted" and data["logic"] == "kc"
    assert data["countermodel"]["witness"] == "h"


@settings(max_examples=150)
@given(formulas(connectives=("and", "or", "imp", "not")))
def test_soundness_chain(goal):
    ipl, kc, g3 = ipl_decide((), goal), kc_decide((), goal), g3_entails((), goal)
    if ipl.provable:
        assert kc.provable
    if kc.provable:
        assert g3
    assert not (ipl.provable and ipl.refuted)
    for v in (ipl, kc):
        if v.countermodel is not None:
            m, w = v.countermodel
            assert not validate(m) and not forces(m, w, goal)


def test_ipl_agrees_with_countermodel_search():
    rng = random.Random(17)
    provable = refuted = 0
    for _ in range(150):
        goal = random_formula(rng, "pq", 3, ("and", "or", "imp", "not"))
        v = ipl_decide((), goal, bound=4)
        found = countermodel_search((), goal, max_worlds=4)
        if v.provable:
            provable += 1
            assert found is None
        else:
            refuted += 1
            if found is not None:
                assert v.countermodel is not None
    assert provable > 10 and refuted > 10


def test_kc_matches_g3_on_fragment():
    rng = random.Random(19)
    for _ in range(200):
        premises = [Imp(random_formula(rng, "pq", 2), random_formula(rng, "pq", 2))]
        goal = Imp(random_formula(rng, "pq", 2), random_formula(rng, "pq", 2))
        v = kc_decide(premises, goal)
        assert v.status is not Status.UNKNOWN
        assert v.provable == g3_entails(premises, goal)
