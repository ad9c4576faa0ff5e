"""Answer sets, here-and-there logic and strong equivalence of logic programs.

>>> from stablekc import parse_program, answer_sets
>>> [sorted(x) for x in answer_sets(parse_program("p | q.")).answer_sets]
[['p'], ['q']]
"""

from .classical import (
    classical_models, cpl_equivalent, cpl_separating_world, eval_classical, minimal_model, satisfies,
)
from .equivalence import (
    EquivalenceReport, OracleResult, StrongEquivalence, classify, expressibility_search,
    negfree_strong_equiv, strong_equiv_oracle, strongly_equivalent,
)
from .errors import FragmentError, GuardExceeded, InvalidModelError, LogicError, ParseError
from .ht import (
    G3Value, HTModel, all_ht_models, g3_axioms, g3_countermodel, g3_entails, g3_equivalent,
    g3_separating_model, g3_valid, ht_forces, ht_models_of, ht_satisfies, matrix_eval, matrix_valid,
)
from .kripke import (
    Countermodel, KripkeModel, countermodel_search, diamond_model, enumerate_models, forces,
    model_from_json, model_to_json, validate,
)
from .prover import (
    Derivation, Status, Verdict, check_normkc_instance, decide, g3_decide, ipl_decide, kc_decide,
)
from .stable import (
    AnswerSetReport, Reduct, answer_sets, answer_sets_ht, answer_sets_reduct, is_answer_set, reduct,
)
from .suite import PaperSuiteReport, run_paper_suite
from .syntax import (
    AND_NOT, BOT, FULL, HORN, NORMAL, POSITIVE, PROGRAMS, PROGRAMS_WITH_CONSTANTS, TOP, And, Atom,
    Bot, Formula, Fragment, Imp, Not, Or, Program, Rule, Top, atoms, atoms_of, fragment_check,
    parse, parse_formula, parse_program, parse_rule, render,
)

__all__ = [
    "all_ht_models", "And", "AND_NOT", "answer_sets", "answer_sets_ht", "answer_sets_reduct",
    "AnswerSetReport", "Atom", "atoms", "atoms_of", "BOT", "Bot", "check_normkc_instance",
    "classical_models", "classify", "Countermodel", "countermodel_search", "cpl_equivalent",
    "cpl_separating_world", "decide", "Derivation", "diamond_model", "enumerate_models",
    "EquivalenceReport", "eval_classical", "expressibility_search", "forces", "Formula", "Fragment",
    "fragment_check", "FragmentError", "FULL", "g3_axioms", "g3_countermodel", "g3_decide",
    "g3_entails", "g3_equivalent", "g3_separating_model", "g3_valid", "G3Value", "GuardExceeded",
    "HORN", "ht_forces", "ht_models_of", "ht_satisfies", "HTModel", "Imp", "InvalidModelError",
    "ipl_decide", "is_answer_set", "kc_decide", "KripkeModel", "LogicError", "matrix_eval",
    "matrix_valid", "minimal_model", "model_from_json", "model_to_json", "negfree_strong_equiv",
    "NORMAL", "Not", "Or", "OracleResult", "PaperSuiteReport", "parse", "parse_formula",
    "parse_program", "parse_rule", "ParseError", "POSITIVE", "Program", "PROGRAMS",
    "PROGRAMS_WITH_CONSTANTS", "Reduct", "reduct", "render", "Rule", "run_paper_suite", "satisfies",
    "Status", "strong_equiv_oracle", "StrongEquivalence", "strongly_equivalent", "TOP", "Top",
    "validate", "Verdict",
]

__version__ = "0.1.0"
