import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from stablekc.syntax import BOT, TOP, And, Atom, Imp, Not, Or, Program, Rule

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ATOMS = ("p", "q", "r")


def formulas(atoms=ATOMS, connectives=("and", "or", "imp", "not"), constants=True, max_leaves=8):
    leaves = [st.sampled_from([Atom(a) for a in atoms])]
    if constants:
        leaves.append(st.sampled_from([TOP, BOT]))
    base = st.one_of(*leaves)

    def extend(children):
        opts = []
        if "not" in connectives:
            opts.append(children.map(Not))
        for name, cls in (("and", And), ("or", Or), ("imp", Imp)):
            if name in connectives:
                opts.append(st.builds(cls, children, children))
        return st.one_of(*opts)

    return st.recursive(base, extend, max_leaves=max_leaves)


def rules(atoms=ATOMS, connectives=("and", "or", "not"), constants=False, max_leaves=4):
    part = formulas(atoms, connectives, constants, max_leaves)
    return st.one_of(st.builds(Rule, st.just(TOP), part), st.builds(Rule, part, part))


def programs(atoms=ATOMS, connectives=("and", "or", "not"), constants=False, max_rules=3, max_leaves=4):
    return st.lists(rules(atoms, connectives, constants, max_leaves), min_size=1, max_size=max_rules).map(
        lambda rs: Program(frozenset(rs), frozenset(atoms)))


@pytest.fixture
def P():
    from stablekc.syntax import parse_program
    return parse_program


@pytest.fixture
def F():
    from stablekc.syntax import parse_formula
    return parse_formula
