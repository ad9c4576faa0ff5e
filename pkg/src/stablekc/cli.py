"""Command-line interface.

Exit codes: 0 equivalent / provable / found, 1 not equivalent / refuted /
none found, 2 unknown or resource guard exceeded, 3 and up for errors
(3 usage, parse or input errors, 4 fragment errors, 5 internal errors).
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from typing import Optional, Sequence

from .classical import cpl_separating_world
from .equivalence import expressibility_search, strong_equiv_oracle, strongly_equivalent
from .errors import FragmentError, GuardExceeded, ParseError
from .ht import g3_separating_model, ht_models_of
from .kripke import countermodel_search, model_to_json
from .prover import DEFAULT_BOUND, Status, decide
from .stable import answer_sets, reduct
from .syntax import Fragment, Program, parse_formula, parse_program, render

EXIT_YES, EXIT_NO, EXIT_UNKNOWN, EXIT_USAGE, EXIT_FRAGMENT, EXIT_INTERNAL = 0, 1, 2, 3, 4, 5


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _show_set(x) -> str:
    return "{" + ", ".join(sorted(x)) + "}"


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


class _Context:
    def __init__(self, args, out):
        self.args = args
        self.out = out

    def print(self, *parts):
        print(*parts, file=self.out)

    def emit(self, obj, text: str):
        self.print(_dump(obj) if self.args.json else text)

    def program(self, source: str) -> Program:
        if self.args.inline:
            text, name = source, "<inline>"
        elif source == "-":
            text, name = sys.stdin.read(), "<stdin>"
        else:
            with open(source, encoding="utf-8") as fh:
                text, name = fh.read(), source
        try:
            prog = parse_program(text)
        except ParseError as exc:
            exc.source = name
            raise
        extra = _names(self.args.universe)
        return prog.with_universe(extra) if extra else prog


def _names(text: Optional[str]) -> list[str]:
    if not text:
        return []
    return [n.strip() for n in text.split(",") if n.strip()]


def _formula(text: str):
    return parse_formula(text)


# --- subcommands ----------------------------------------------------------------

def cmd_answersets(ctx: _Context) -> int:
    prog = ctx.program(ctx.args.program)
    report = answer_sets(prog, method=ctx.args.method, force=ctx.args.force)
    text = "\n".join(_show_set(x) for x in report.answer_sets) or "no answer sets"
    ctx.emit(report.to_json(), text)
    return EXIT_YES if report.answer_sets else EXIT_NO


def cmd_reduct(ctx: _Context) -> int:
    prog = ctx.program(ctx.args.program)
    x = frozenset(_names(ctx.args.by))
    red = reduct(prog, x)
    ctx.emit({"by": sorted(x), "rules": [str(r) for r in red.rules]}, render(red.rules))
    return EXIT_YES


def cmd_ht_models(ctx: _Context) -> int:
    prog = ctx.program(ctx.args.program)
    models = sorted(ht_models_of(prog, force=ctx.args.force), key=lambda m: m.sort_key())
    if ctx.args.total:
        models = [m for m in models if m.here == m.there]
    text = "\n".join(str(m) for m in models) or "no HT models"
    ctx.emit({"models": [m.to_json() for m in models]}, text)
    return EXIT_YES if models else EXIT_NO


def _entails_all(logic, premises: Program, goals: Program, bound, force):
    """Verdicts for ``premises |- r`` for every rule r of ``goals``."""
    return [(r, decide(logic, premises.formulas(), r.formula, bound, force)) for r in goals]


def cmd_equiv(ctx: _Context) -> int:
    a, b = ctx.program(ctx.args.a), ctx.program(ctx.args.b)
    logic, force = ctx.args.logic, ctx.args.force
    if logic == "cpl":
        world = cpl_separating_world(a, b, force)
        eq = world is None
        ctx.emit({"logic": logic, "equivalent": eq, "witness": None if eq else sorted(world)},
                 "equivalent" if eq else f"not equivalent; separating world {_show_set(world)}")
        return EXIT_YES if eq else EXIT_NO
    if logic == "g3":
        m = g3_separating_model(a, b, force)
        eq = m is None
        ctx.emit({"logic": logic, "equivalent": eq, "witness": None if eq else m.to_json()},
                 "equivalent" if eq else f"not equivalent; separating HT model {m}")
        return EXIT_YES if eq else EXIT_NO
    rows = []
    for direction, (p, q) in (("a=>b", (a, b)), ("b=>a", (b, a))):
        for rule, v in _entails_all(logic, p, q, ctx.args.bound, force):
            rows.append((direction, rule, v))
    statuses = {v.status for _, _, v in rows}
    if Status.REFUTED in statuses:
        code, verdict = EXIT_NO, "not equivalent"
    elif Status.UNKNOWN in statuses:
        code, verdict = EXIT_UNKNOWN, "unknown"
    else:
        code, verdict = EXIT_YES, "equivalent"
    data = {"logic": logic, "equivalent": {0: True, 1: False, 2: None}[code],
            "checks": [{"direction": d, "goal": str(r), "verdict": v.to_json()} for d, r, v in rows]}
    lines = [verdict] + [f"  {d}: {r}  {v.status.value}" for d, r, v in rows]
    ctx.emit(data, "\n".join(lines))
    return code


def cmd_strong_equiv(ctx: _Context) -> int:
    a, b = ctx.program(ctx.args.a), ctx.program(ctx.args.b)
    res = strongly_equivalent(a, b, ctx.args.force)
    data = {"strongly_equivalent": res.equivalent,
            "witness": None if res.witness is None else res.witness.to_json()}
    lines = ["strongly equivalent" if res.equivalent else
             f"not strongly equivalent; HT model of exactly one program: {res.witness}"]
    if ctx.args.oracle or (not res.equivalent and len(a.universe | b.universe) <= 4):
        oracle = strong_equiv_oracle(a, b, force=ctx.args.force)
        ext = oracle.extension
        data["oracle"] = {"equivalent": oracle.equivalent,
                          "extension": None if ext is None else sorted(str(r) for r in ext.rules)}
        if ext is not None:
            lines.append("separating extension: " + " ".join(str(r) for r in ext))
        if oracle.equivalent != res.equivalent:
            raise AssertionError("HT check and extension oracle disagree")
    ctx.emit(data, "\n".join(lines))
    return EXIT_YES if res.equivalent else EXIT_NO


def cmd_expressibility(ctx: _Context) -> int:
    target = ctx.program(ctx.args.program)
    frag = Fragment.parse(ctx.args.fragment, rule_form=not ctx.args.nested,
                          normal_form=ctx.args.normal)
    found = expressibility_search(target, frag, ctx.args.depth, ctx.args.force)
    data = {"fragment": str(frag), "depth": ctx.args.depth,
            "found": None if found is None else [str(r) for r in found]}
    ctx.emit(data, "none found" if found is None else render(found))
    return EXIT_YES if found is not None else EXIT_NO


def cmd_countermodel(ctx: _Context) -> int:
    premises = [_formula(p) for p in ctx.args.premise]
    goal = _formula(ctx.args.goal)
    cm = countermodel_search(premises, goal, ctx.args.single_top, ctx.args.worlds, ctx.args.force)
    if cm is None:
        ctx.emit({"countermodel": None}, f"no countermodel within {ctx.args.worlds} worlds")
        return EXIT_NO
    ctx.emit({"countermodel": model_to_json(cm.model, cm.witness)},
             f"{cm.model}\nrefuted at {cm.witness}")
    return EXIT_YES


def cmd_prove(ctx: _Context) -> int:
    premises = [_formula(p) for p in ctx.args.premise]
    goal = _formula(ctx.args.goal)
    v = decide(ctx.args.logic, premises, goal, ctx.args.bound, ctx.args.force, trace=ctx.args.trace)
    lines = [f"{v.status.value} ({v.logic}, {v.method})"]
    if v.derivation is not None and ctx.args.trace:
        lines += v.derivation.lines()
    if v.countermodel is not None:
        lines.append(f"countermodel: {v.countermodel.model}, refuted at {v.countermodel.witness}")
    if v.note:
        lines.append(v.note)
    ctx.emit(v.to_json(), "\n".join(lines))
    return {Status.PROVABLE: EXIT_YES, Status.REFUTED: EXIT_NO, Status.UNKNOWN: EXIT_UNKNOWN}[v.status]


def cmd_check_paper(ctx: _Context) -> int:
    from .suite import DEFAULT_SEED, run_paper_suite
    seed = DEFAULT_SEED if ctx.args.seed is None else ctx.args.seed
    report = run_paper_suite(seed, threads=ctx.args.threads)
    ctx.emit(report.to_json(timings=ctx.args.timings), "\n".join(report.lines()))
    return EXIT_YES if report.passed else EXIT_NO


# --- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--force", action="store_true", help="override resource guards")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized checks")
    common.add_argument("--threads", type=int, default=1, help="worker processes for check-paper")
    common.add_argument("--universe", default=None, help="extra atoms, comma separated")
    common.add_argument("--inline", action="store_true", help="program arguments are program text")

    parser = _Parser(prog="stablekc", description="Answer sets, HT logic and strong equivalence.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("answersets", parents=[common], help="list answer sets")
    p.add_argument("program")
    p.add_argument("--method", choices=("reduct", "equilibrium"), default="reduct")
    p.set_defaults(func=cmd_answersets)

    p = sub.add_parser("reduct", parents=[common], help="reduct of a program by a set of atoms")
    p.add_argument("program")
    p.add_argument("--by", default="", help="the set X, comma separated")
    p.set_defaults(func=cmd_reduct)

    p = sub.add_parser("ht-models", parents=[common], help="list HT models")
    p.add_argument("program")
    p.add_argument("--total", action="store_true", help="only models <X,X>")
    p.set_defaults(func=cmd_ht_models)

    p = sub.add_parser("equiv", parents=[common], help="equivalence of two programs in a logic")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--logic", choices=("cpl", "g3", "ipl", "kc"), default="g3")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("strong-equiv", parents=[common], help="strong equivalence of two programs")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--oracle", action="store_true", help="also run the unary-extension oracle")
    p.set_defaults(func=cmd_strong_equiv)

    p = sub.add_parser("expressibility", parents=[common], help="search a fragment for an equivalent program")
    p.add_argument("program")
    p.add_argument("--fragment", required=True, help='connectives, e.g. "and,not"')
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--nested", action="store_true", help="allow nested implication (no rule form)")
    p.add_argument("--normal", action="store_true", help="normal rules only")
    p.set_defaults(func=cmd_expressibility)

    p = sub.add_parser("countermodel", parents=[common], help="search for a Kripke countermodel")
    p.add_argument("goal")
    p.add_argument("--premise", action="append", default=[])
    p.add_argument("--single-top", action="store_true")
    p.add_argument("--worlds", type=int, default=3)
    p.set_defaults(func=cmd_countermodel)

    p = sub.add_parser("prove", parents=[common], help="decide derivability")
    p.add_argument("goal")
    p.add_argument("--premise", action="append", default=[])
    p.add_argument("--logic", choices=("ipl", "kc", "g3"), default="ipl")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="countermodel size bound")
    p.add_argument("--trace", action="store_true", help="print the derivation")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("check-paper", parents=[common], help="replay all worked examples and lemma checks")
    p.add_argument("--timings", action="store_true", help="include timings in JSON output")
    p.set_defaults(func=cmd_check_paper)
    return parser


def _validate(args):
    for name in ("bound", "depth", "worlds"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            raise _UsageError(f"--{name} must be non-negative")
    if args.threads < 1:
        raise _UsageError("--threads must be at least 1")
    for atom in _names(args.universe):
        parse_formula(atom)


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(list(argv))
    except _UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_YES if exc.code in (0, None) else EXIT_USAGE
    try:
        _validate(args)
        return args.func(_Context(args, out))
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc} (use --force to override)", file=err)
        return EXIT_UNKNOWN
    except ParseError as exc:
        source = getattr(exc, "source", None)
        print(f"{source}: {exc}" if source else str(exc), file=err)
        return EXIT_USAGE
    except (_UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except FragmentError as exc:
        print(f"fragment error: {exc}", file=err)
        return EXIT_FRAGMENT
    except Exception as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_INTERNAL


def run_captured(argv: Sequence[str]) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
