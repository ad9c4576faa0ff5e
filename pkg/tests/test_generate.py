import random

from stablekc.checks import KripkeAlgebra
from stablekc.generate import (
    enumerate_formulas, enumerate_valued, random_formula, random_program, semantic_closure,
)
from stablekc.kripke import diamond_model
from stablekc.syntax import PROGRAMS, depth, fragment_check


def test_enumeration_counts():
    # one binary connective over n atoms: n, then a(k+1) = a(k)^2 + n formulas up to depth k+1
    by_depth = {}
    for f in enumerate_formulas("pq", ["and"], 2):
        by_depth[depth(f)] = by_depth.get(depth(f), 0) + 1
    # depth 0: 2; depth <= 1: 2 + 4; depth <= 2: 2 + 36
    assert by_depth == {0: 2, 1: 4, 2: 36 - 4}


def test_enumeration_has_no_duplicates():
    fs = list(enumerate_formulas("pq", ["and", "imp", "not"], 2))
    assert len(fs) == len(set(fs))


def test_diamond_enumeration_size():
    assert sum(1 for _ in enumerate_formulas("pq", ["and", "imp", "not"], 3)) == 182712


def test_semantic_closure_matches_syntactic_enumeration():
    m = diamond_model()
    alg = KripkeAlgebra(m)
    table = semantic_closure(alg, "pq", ["and", "imp", "not", "or"], 2)
    values = {v for _, v in enumerate_valued(alg, "pq", ["and", "imp", "not", "or"], 2)}
    assert set(table) == values
    for v, f in table.items():
        assert m.truth_mask(f) == v and depth(f) <= 2


def test_random_generators_respect_bounds():
    rng = random.Random(0)
    for _ in range(100):
        f = random_formula(rng, "pq", 3)
        assert depth(f) <= 3
        prog = random_program(rng, "pqr", 4, 2)
        assert 1 <= len(prog.rules) <= 4 and fragment_check(prog, PROGRAMS)


def test_random_generators_are_seeded():
    a = [random_formula(random.Random(5), "pq", 3) for _ in range(3)]
    b = [random_formula(random.Random(5), "pq", 3) for _ in range(3)]
    assert a == b
