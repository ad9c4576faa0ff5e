import pytest
from hypothesis import given, settings

from conftest import programs
from stablekc.equivalence import (
    classify, expressibility_search, negfree_strong_equiv, strong_equiv_oracle,
    strongly_equivalent, unary_rules,
)
from stablekc.errors import FragmentError, GuardExceeded
from stablekc.ht import HTModel, g3_equivalent, ht_satisfies
from stablekc.stable import answer_sets_reduct
from stablekc.syntax import (
    AND_NOT, NORMAL, TOP, Fragment, Program, Rule, fragment_check, parse_program,
)

P = parse_program


def test_strong_equivalence_examples():
    assert strongly_equivalent(P("not p | not not p."), Program.of(Rule(TOP, TOP))).equivalent
    pi1 = P("p & r -> s. not p -> q. not r -> q.")
    assert strongly_equivalent(pi1, pi1 | P("not s -> q.")).equivalent
    assert strongly_equivalent(P("q."), P("not p -> q. not not p -> q.")).equivalent


def test_not_strongly_equivalent_with_witness():
    res = strongly_equivalent(P("not not p."), P("p."))
    assert not res.equivalent
    assert res.witness == HTModel(set(), {"p"})
    assert ht_satisfies(res.witness, P("not not p.")) != ht_satisfies(res.witness, P("p."))


def test_strong_equivalence_rejects_nested_implication():
    with pytest.raises(FragmentError):
        strongly_equivalent(P("(p -> q) -> r."), P("r."))


def test_negfree_requires_positive():
    assert negfree_strong_equiv(P("p | q. p -> q."), P("q."))
    with pytest.raises(FragmentError):
        negfree_strong_equiv(P("not p -> q."), P("q."))


def test_unary_rules():
    rules = unary_rules("pq")
    assert len(rules) == 2 + 4
    assert rules[0] == next(iter(P("p.").rules))


def test_oracle_examples():
    assert strong_equiv_oracle(P("q."), P("not p -> q. not not p -> q."), {"p", "q"}).equivalent
    res = strong_equiv_oracle(P("p -> q."), P("q -> p."))
    assert not res.equivalent and res.extension.rules == P("p.").rules
    a = answer_sets_reduct(P("p -> q.") | res.extension).answer_sets
    b = answer_sets_reduct(P("q -> p.") | res.extension).answer_sets
    assert a != b


def test_oracle_guard_and_universe():
    big = P("a. b. c. d. e.")
    with pytest.raises(GuardExceeded):
        strong_equiv_oracle(big, big)
    with pytest.raises(ValueError):
        strong_equiv_oracle(P("p."), P("q."), {"p"})


def test_classify_same_answer_sets():
    r = classify(P("p -> q."), P("q -> p."))
    assert (r.cpl, r.g3, r.same_answer_sets, r.strongly_equivalent) == (False, False, True, False)
    assert r.separating_extension.rules == P("p.").rules


def test_classify_double_negation():
    r = classify(P("not not p."), P("p."))
    assert r.cpl and not r.g3 and r.strongly_equivalent is False
    assert r.separating_ht_model is not None


def test_classify_negated_premise_pair():
    r = classify(P("q."), P("not p -> q. not not p -> q."))
    assert r.cpl and r.g3 and r.same_answer_sets and r.strongly_equivalent and r.kc_on_fragment


def test_classify_outside_fragment():
    r = classify(P("(p -> q) -> p."), P("p."))
    assert not r.in_fragment and r.strongly_equivalent is None and r.kc_on_fragment is None


def test_classify_json_is_plain():
    data = classify(P("p -> q."), P("q -> p.")).to_json()
    assert data["separating_extension"] == ["p."]
    assert data["separating_ht_model"] == {"here": ["p"], "there": ["p"]}


def test_disjunction_not_expressible_with_and_not():
    assert expressibility_search(P("p | q."), AND_NOT, 2) is None


def test_disjunction_expressible_with_nested_implication():
    frag = Fragment(frozenset({"and", "imp"}), rule_form=False)
    found = expressibility_search(P("p | q."), frag, 3)
    assert found is not None
    assert fragment_check(found, frag) and g3_equivalent(found, P("p | q."))


def test_expressibility_finds_program_for_choice():
    found = expressibility_search(P("p | not p."), AND_NOT, 2)
    assert found is not None and fragment_check(found, AND_NOT)
    assert g3_equivalent(found, P("p | not p."))


def test_expressibility_guards():
    with pytest.raises(GuardExceeded):
        expressibility_search(P("a | b | c | d | e."), AND_NOT, 1)
    with pytest.raises(GuardExceeded):
        expressibility_search(P("p | q."), AND_NOT, 5)
    with pytest.raises(FragmentError):
        expressibility_search(P("p | q."), NORMAL, 2)


@settings(max_examples=60)
@given(programs(atoms=("p", "q")), programs(atoms=("p", "q")))
def test_ht_equivalence_matches_oracle(a, b):
    se = strongly_equivalent(a, b)
    oracle = strong_equiv_oracle(a, b)
    assert se.equivalent == oracle.equivalent
    if oracle.extension is not None:
        u = a.universe | b.universe
        assert (answer_sets_reduct(a | oracle.extension, u).answer_sets
                != answer_sets_reduct(b | oracle.extension, u).answer_sets)


@given(programs())
def test_strong_equivalence_is_reflexive_and_implies_same_answer_sets(a):
    assert strongly_equivalent(a, a).equivalent
    doubled = Program(a.rules | {Rule(r.body, r.head | r.head) for r in a.rules}, a.universe)
    if strongly_equivalent(a, doubled).equivalent:
        assert answer_sets_reduct(a).answer_sets == answer_sets_reduct(doubled).answer_sets


@given(programs(connectives=("and", "or"), constants=True), programs(connectives=("and", "or"), constants=True))
def test_negation_free_sandwich(a, b):
    assert negfree_strong_equiv(a, b) == strongly_equivalent(a, b).equivalent
