import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import formulas, programs
from stablekc.errors import ParseError
from stablekc.syntax import (
    AND_NOT, BOT, FULL, HORN, NORMAL, POSITIVE, PROGRAMS, TOP, And, Atom, Fragment, Imp, Not, Or,
    Program, Rule, atoms, atoms_of, depth, fragment_check, parse, parse_formula, parse_program,
    parse_rule, render, size, subformulas,
)

p, q, r, s = atoms("p", "q", "r", "s")


def test_parse_negated_premise_pair():
    got = parse_program("not p -> q. not not p -> q.")
    assert got == Program.of(Rule(~p, q), Rule(~~p, q))


def test_parse_normal_rule():
    assert parse_program("p & r -> s.") == Program.of(Rule(p & r, s))


def test_fact_is_rule_with_top_body():
    prog = parse_program("p | q.")
    (rule,) = prog.rules
    assert rule.body == TOP and rule.head == p | q and rule.is_fact


def test_precedence_and_associativity():
    assert parse_formula("p | q & r") == Or(p, And(q, r))
    assert parse_formula("p -> q -> r") == Imp(p, Imp(q, r))
    assert parse_formula("not p & q") == And(Not(p), q)
    assert parse_formula("p & q & r") == And(And(p, q), r)
    assert parse_formula("p | q -> r") == Imp(Or(p, q), r)


def test_comments_and_whitespace():
    prog = parse_program("% a comment\np.   % trailing\n\n q -> r.\n")
    assert prog == Program.of(Rule(TOP, p), Rule(q, r))


def test_empty_program():
    assert parse_program("") == Program.of()
    assert parse_program("% nothing\n").rules == frozenset()


def test_universe_keeps_unused_atoms():
    prog = parse_program("p.", universe=["z"])
    assert prog.universe == {"p", "z"}
    assert atoms_of(prog) == {"p", "z"}


@pytest.mark.parametrize("text,line,column", [
    ("p & ", 1, 5),
    ("p -> q", 1, 7),
    ("p q.", 1, 3),
    ("p.\nq -> .", 2, 6),
    ("(p.", 1, 3),
])
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_program(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert info.value.expected


def test_parse_error_expected_set():
    with pytest.raises(ParseError) as info:
        parse_program("not.")
    assert "ATOM" in info.value.expected and "(" in info.value.expected


@pytest.mark.parametrize("bad", ["P.", "1p.", "p$.", "p -> -> q."])
def test_malformed_input_rejected(bad):
    with pytest.raises(ParseError):
        parse_program(bad)


def test_reserved_words_are_not_atoms():
    with pytest.raises(ValueError):
        Atom("not")
    with pytest.raises(ValueError):
        Atom("Top")
    assert parse_formula("top") == TOP and parse_formula("bot") == BOT


def test_parse_dispatch():
    assert parse("p & q") == p & q
    assert parse("p -> q.") == Rule(p, q)
    assert parse("p.\nq -> r.") == Program.of(Rule(TOP, p), Rule(q, r))
    assert parse_rule("p -> q.") == Rule(p, q)


def test_render_minimal_parentheses():
    assert render((p >> q) >> r) == "(p -> q) -> r"
    assert render(p >> (q >> r)) == "p -> q -> r"
    assert render(~(p & q)) == "not (p & q)"
    assert render(p & (q | r)) == "p & (q | r)"
    assert render(p & (q & r)) == "p & (q & r)"
    assert render(Rule(TOP, p >> q)) == "top -> p -> q."


def test_program_renders_sorted():
    prog = parse_program("q. p.")
    assert render(prog) == "p.\nq."


@given(formulas())
def test_formula_round_trip(f):
    assert parse_formula(render(f)) == f


@given(programs(constants=True))
def test_program_round_trip(prog):
    back = parse_program(render(prog))
    assert back.rules == prog.rules


def test_depth_size_subformulas():
    f = (p & ~q) >> r
    assert depth(f) == 3 and size(f) == 6
    assert set(subformulas(f)) == {f, p & ~q, p, ~q, q, r}


def test_fragment_examples():
    assert fragment_check(Rule(p & r, s), NORMAL)
    assert not fragment_check(Program.of(Rule(TOP, p | q)), AND_NOT)
    assert fragment_check(Program.of(Rule(TOP, p | q)), PROGRAMS)


def test_normal_form():
    assert fragment_check(parse_program("not p & q -> r. s."), NORMAL)
    assert not fragment_check(parse_program("not not p -> q."), NORMAL)
    assert not fragment_check(parse_program("p -> not q."), NORMAL)


def test_rule_form_excludes_nested_implication():
    nested = parse_program("(p -> q) -> r.")
    assert not fragment_check(nested, Fragment(frozenset({"imp"})))
    assert fragment_check(nested, Fragment(frozenset({"imp"}), rule_form=False))
    assert fragment_check(nested, FULL)


def test_horn_and_positive():
    assert fragment_check(parse_program("p & q -> r. s. p -> bot."), HORN)
    assert not fragment_check(parse_program("p -> q | r."), HORN)
    assert fragment_check(parse_program("p -> q | r."), POSITIVE)
    assert not fragment_check(parse_program("not p -> q."), POSITIVE)


def test_fragment_parse():
    assert Fragment.parse("and,not").connectives == {"and", "not"}
    assert Fragment.parse("&, |, ->").connectives == {"and", "or", "imp"}
    with pytest.raises(ValueError):
        Fragment.parse("and,xor")


def _wider(frag: Fragment, extra: str) -> Fragment:
    return Fragment(frag.connectives | {extra}, frag.rule_form, frag.normal_form)


@given(programs(connectives=("and", "or", "not"), constants=True),
       st.sampled_from(["and", "or", "not", "bot", "top"]),
       st.sampled_from([AND_NOT, PROGRAMS, HORN, POSITIVE]))
def test_fragment_monotone(prog, extra, frag):
    if fragment_check(prog, frag):
        assert fragment_check(prog, _wider(frag, extra))


@given(programs())
def test_program_union_and_universe(prog):
    both = prog | Program.of(Rule(TOP, p))
    assert prog.rules <= both.rules and prog.universe <= both.universe
