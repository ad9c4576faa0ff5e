"""The property checks must notice when the semantics they test are broken."""

import pytest

from stablekc import checks
from stablekc.classical import eval_classical, subsets
from stablekc.equivalence import StrongEquivalence
from stablekc.kripke import KripkeModel
from stablekc.stable import AnswerSetReport


def test_small_runs_pass():
    for fn in checks.EXHAUSTIVE_LEMMAS.values():
        res = fn()
        assert res.passed and res.cases > 0, str(res)


def test_classical_ht_evaluation_is_caught(monkeypatch):
    def flat(m, at, f):
        return eval_classical(m.here if at == "h" else m.there, f)
    monkeypatch.setattr(checks, "ht_forces", flat)
    assert not checks.check_matrix_kripke().passed
    assert not checks.check_positive_implications().passed


def test_pointwise_implication_is_caught(monkeypatch):
    def pointwise(self, a, b):
        return self.full_mask & (~a | b)
    monkeypatch.setattr(KripkeModel, "imp_mask", pointwise)
    assert not checks.check_persistence(max_depth=2).passed


def test_reduct_without_negation_handling_is_caught(monkeypatch):
    monkeypatch.setattr(checks, "reduct_formula", lambda f, x: f)
    assert not checks.check_reduct_invariance(max_depth=2).passed


def test_wrong_answer_sets_are_caught(monkeypatch):
    def models_only(prog, universe=None, force=False):
        found = tuple(x for x in subsets(prog.universe) if all(eval_classical(x, r) for r in prog.rules))
        return AnswerSetReport(prog, prog.universe, found, "equilibrium")
    monkeypatch.setattr(checks, "answer_sets_ht", models_only)
    assert not checks.check_method_agreement(n=50).passed


def test_classical_strong_equivalence_is_caught(monkeypatch):
    monkeypatch.setattr(checks, "strongly_equivalent",
                        lambda a, b, force=False: StrongEquivalence(checks.cpl_equivalent(a, b), None))
    assert not checks.check_oracle_agreement(n=100).passed


def test_broken_minimal_model_is_caught(monkeypatch):
    monkeypatch.setattr(checks, "minimal_model", lambda prog: frozenset())
    assert not checks.check_horn_least_model(n=100).passed


def test_diamond_check_counts_every_formula():
    # a(0) = 2 atoms; a(d) = atoms + negations + two binary connectives
    a = 2
    for _ in range(3):
        a = 2 + a + 2 * a * a
    res = checks.check_diamond(3)
    assert res.passed and res.cases == a == 182712


@pytest.mark.parametrize("fn", [checks.check_soundness_chain, checks.check_kc_fragment,
                                checks.check_ipl_vs_search, checks.check_fresh_atoms,
                                checks.check_negfree_sandwich, checks.check_negfree_minimal_models])
def test_random_checks_pass(fn):
    res = fn(n=60)
    assert res.passed, str(res)
