import pytest
from hypothesis import given

from conftest import formulas, programs
from stablekc.classical import eval_classical, subsets
from stablekc.errors import GuardExceeded
from stablekc.ht import (
    G3Value, HTModel, all_ht_models, all_valuations, g3_axioms, g3_countermodel, g3_entails,
    g3_equivalent, g3_separating_model, g3_valid, ht_forces, ht_models_of, ht_satisfies,
    matrix_eval, matrix_valid, model_of, valuation_of,
)
from stablekc.kripke import forces
from stablekc.syntax import Program, atoms, parse_formula, parse_program

p, q = atoms("p", "q")
ZERO, HALF, ONE = G3Value.ZERO, G3Value.HALF, G3Value.ONE


def test_model_requires_inclusion():
    with pytest.raises(ValueError):
        HTModel({"p"}, set())


def test_all_models_count():
    assert len(list(all_ht_models("pq"))) == 9
    assert len(list(all_ht_models("pqr"))) == 27


def test_negation_is_classical_falsity_at_there():
    m = HTModel(set(), {"p"})
    assert not ht_forces(m, "h", ~p)
    assert ht_forces(HTModel(set(), set()), "h", ~p)


def test_matrix_tables():
    assert matrix_eval({"p": HALF, "q": ZERO}, p >> q) == ZERO
    assert matrix_eval({"p": HALF, "q": HALF}, p >> q) == ONE
    assert matrix_eval({"p": ONE, "q": HALF}, p >> q) == HALF
    assert matrix_eval({"p": HALF}, ~p) == ZERO
    assert matrix_eval({"p": ZERO}, ~p) == ONE
    assert matrix_eval({"p": HALF, "q": ONE}, p & q) == HALF
    assert matrix_eval({"p": HALF, "q": ZERO}, p | q) == HALF


def test_matrix_example_value():
    v = {"p": HALF, "q": ZERO}
    assert matrix_eval(v, parse_formula("p | (p -> q) | not q")) == ONE


def test_excluded_middle_not_g3_valid():
    assert not g3_valid(p | ~p)
    assert g3_countermodel((), p | ~p) == HTModel(set(), {"p"})


def test_weak_excluded_middle_valid():
    assert g3_entails((), parse_formula("not p | not not p"))


def test_qlem_consequence():
    a, b, c, d = atoms("a", "b", "c", "d")
    assert g3_entails([(a & c) >> d, ~a >> b, ~c >> b], ~d >> b)


def test_g3_equivalences():
    assert g3_equivalent(parse_program("p | q."), parse_program("((p -> q) -> q) & ((q -> p) -> p)."))
    assert g3_equivalent(parse_program("q."), parse_program("not p -> q. not not p -> q."))
    assert not g3_equivalent(parse_program("not not p."), parse_program("p."))


def test_separating_model_prefers_total():
    m = g3_separating_model(parse_program("p -> q."), parse_program("q -> p."))
    assert m == HTModel({"p"}, {"p"})


def test_axioms_matrix_valid():
    for name, f in g3_axioms().items():
        assert matrix_valid(f), name
        assert g3_valid(f), name


def test_peirce_fails_but_linearity_holds():
    assert g3_countermodel((), parse_formula("((p -> q) -> p) -> p")) == HTModel(set(), {"p"})
    assert g3_valid(parse_formula("(p -> q) | (q -> p)"))


def test_ht_models_of():
    models = ht_models_of(parse_program("p | q."))
    assert HTModel({"p"}, {"p", "q"}) in models
    assert HTModel(set(), {"p"}) not in models
    with pytest.raises(GuardExceeded):
        ht_models_of(Program.of(universe=[f"a{i}" for i in range(13)]))


@given(formulas())
def test_matrix_agrees_with_forcing(f):
    for v in all_valuations("pqr"):
        m = model_of(v)
        val = matrix_eval(v, f)
        assert (val == ONE) == ht_forces(m, "h", f)
        assert (val >= HALF) == ht_forces(m, "t", f)


@given(formulas())
def test_ht_forcing_agrees_with_kripke(f):
    for m in all_ht_models("pqr"):
        k = m.to_kripke()
        assert ht_forces(m, "h", f) == forces(k, "h", f)
        assert ht_forces(m, "t", f) == eval_classical(m.there, f)


@given(formulas())
def test_negation_lemma(f):
    for m in all_ht_models("pqr"):
        assert ht_forces(m, "h", ~f) == (not eval_classical(m.there, f))


@given(programs())
def test_valuation_round_trip(prog):
    for m in all_ht_models(prog.universe):
        assert model_of(valuation_of(m, prog.universe)) == m


@given(formulas())
def test_g3_between_ipl_and_cpl(f):
    if g3_valid(f):
        assert all(eval_classical(x, f) for x in subsets("pqr"))


def test_json_round_trip():
    m = HTModel({"p"}, {"p", "q"})
    assert HTModel.from_json(m.to_json()) == m
    assert m.to_json() == {"here": ["p"], "there": ["p", "q"]}


@given(programs())
def test_ht_satisfies_total_models_is_classical(prog):
    for x in subsets(prog.universe):
        assert ht_satisfies(HTModel(x, x), prog) == all(eval_classical(x, r) for r in prog.rules)
