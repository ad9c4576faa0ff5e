import pytest
from hypothesis import given

from conftest import programs
from stablekc.classical import classical_models, eval_classical, subsets
from stablekc.errors import GuardExceeded
from stablekc.ht import HTModel, ht_satisfies
from stablekc.stable import (
    answer_sets, answer_sets_ht, answer_sets_reduct, is_answer_set, reduct, reduct_formula,
)
from stablekc.syntax import BOT, TOP, And, Imp, Not, Or, Program, atoms, parse_formula, parse_program

p, q = atoms("p", "q")


def _reduce(f, x):
    if isinstance(f, Not):
        return BOT if eval_classical(x, f.arg) else TOP
    if isinstance(f, (And, Or, Imp)):
        return type(f)(_reduce(f.left, x), _reduce(f.right, x))
    return f


def oracle_answer_sets(prog: Program) -> list:
    """Brute force: X is the unique subset of X that satisfies the reduct."""
    out = []
    for x in subsets(prog.universe):
        red = [_reduce(r.formula, x) for r in prog.rules]
        if not all(eval_classical(x, f) for f in red):
            continue
        if any(y < x and all(eval_classical(y, f) for f in red) for y in subsets(x)):
            continue
        out.append(sorted(x))
    return out


def sets(report):
    return [sorted(x) for x in report.answer_sets]


@pytest.mark.parametrize("text,expected", [
    ("not not p.", []),
    ("not not p. p.", [["p"]]),
    ("p | q.", [["p"], ["q"]]),
    ("p -> q.", [[]]),
    ("q -> p.", [[]]),
    ("not p -> q.", [["q"]]),
    ("not p -> q. not q -> p.", [["p"], ["q"]]),
    ("not p -> p.", []),
    ("p | not p.", [[], ["p"]]),
    ("", [[]]),
])
def test_examples(text, expected):
    prog = parse_program(text)
    assert sets(answer_sets_reduct(prog)) == expected
    assert sets(answer_sets_ht(prog)) == expected
    assert oracle_answer_sets(prog) == expected


def test_methods_named():
    prog = parse_program("p.")
    assert answer_sets(prog).method == "reduct"
    assert answer_sets(prog, method="equilibrium").method == "equilibrium"
    with pytest.raises(ValueError):
        answer_sets(prog, method="magic")


def test_json_schema():
    report = answer_sets_reduct(parse_program("p | q."))
    assert report.to_json() == {"answer_sets": [["p"], ["q"]], "method": "reduct"}


def test_reduct_is_syntactic():
    # X satisfies p, so not p becomes bot; X does not satisfy q, so not q becomes top
    f = parse_formula("not p | not q -> r")
    assert reduct_formula(f, {"p"}) == Imp(Or(BOT, TOP), atoms("r")[0])
    assert reduct_formula(parse_formula("p -> bot"), {"p"}) == parse_formula("p -> bot")


def test_negation_free_reduct_unchanged():
    prog = parse_program("p | q. p & q -> r.")
    for x in subsets(prog.universe):
        assert reduct(prog, x).rules == prog


def test_bottom_implication_differs_from_negation():
    # p -> bot is a constraint, not p is negation as failure; as programs they agree here
    a = parse_program("p -> bot. q.")
    b = parse_program("not p. q.")
    assert sets(answer_sets_reduct(a)) == sets(answer_sets_reduct(b)) == [["q"]]


def test_is_answer_set():
    assert is_answer_set(parse_program("not not p. p."), {"p"})
    assert not is_answer_set(parse_program("not not p."), {"p"})


def test_fresh_atoms_never_in_answer_sets():
    prog = parse_program("not p -> q.", universe=["z"])
    assert sets(answer_sets_reduct(prog)) == [["q"]]


def test_universe_must_cover_program():
    with pytest.raises(ValueError):
        answer_sets_reduct(parse_program("p."), universe=["q"])


def test_guard():
    with pytest.raises(GuardExceeded):
        answer_sets_reduct(Program.of(universe=[f"a{i}" for i in range(13)]))


@given(programs(max_rules=4))
def test_methods_agree_with_oracle(prog):
    expected = oracle_answer_sets(prog)
    assert sets(answer_sets_reduct(prog)) == expected
    assert sets(answer_sets_ht(prog)) == expected


@given(programs(connectives=("and", "or"), constants=True))
def test_negation_free_answer_sets_are_minimal_models(prog):
    models = classical_models(prog)
    minimal = sorted(sorted(x) for x in models if not any(y < x for y in models))
    assert sorted(sets(answer_sets_reduct(prog))) == minimal


@given(programs())
def test_answer_sets_are_equilibrium_models(prog):
    for x in answer_sets_reduct(prog).answer_sets:
        assert ht_satisfies(HTModel(x, x), prog)
        assert not any(ht_satisfies(HTModel(y, x), prog) for y in subsets(x) if y != x)


def test_double_negated_body_is_a_choice():
    assert sets(answer_sets_reduct(parse_program("not not q -> q."))) == [[], ["q"]]


def test_negated_head_breaks_antichain():
    assert sets(answer_sets_reduct(parse_program("p | not p."))) == [[], ["p"]]
