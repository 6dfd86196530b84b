"""Command-line surface.

Verbs: expand (arborification of a forest into words), zeta (exact expansion
of an arborified value into ordinary zeta values plus a certified numeric),
verify (identity suites as report tables), enumerate (canonical decorated
trees of a given size), hoffman (the exp/log isomorphism on one word), and
selftest (a fixed battery of worked examples).

Exit codes: 0 success, 1 verification or selftest failure, 2 usage, parse,
or precondition error.
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from .arborify import (
    arborify_x,
    arborify_y,
    divergence_reason_x,
    divergence_reason_y,
)
from .forests import (
    EMPTY_FOREST,
    Forest,
    ParseError,
    bplus,
    coproduct,
    enumerate_trees,
    forest_of,
    parse_forest,
    parse_tree,
    print_tree,
    vertex,
)
from .hoffman import exp_word, log_word
from .lincomb import LinComb, TensorPair, ThetaPoly
from .words import (
    Word,
    XLetter,
    YLetter,
    is_convergent_x,
    is_convergent_y,
    parse_word,
    quasi_shuffle,
    s_inverse,
    s_map,
    shuffle,
)
from . import verify as verify_mod
from . import zeta as zeta_mod


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _forest_alphabet(f: Forest) -> Optional[str]:
    # the parser guarantees a uniform alphabet, so the first root decides
    for t in f.trees:
        return "y" if isinstance(t.decoration, YLetter) else "x"
    return None


# ---------------------------------------------------------------------------
# expand

def _cmd_expand(args: argparse.Namespace) -> int:
    f = parse_forest(args.forest)
    alphabet = _forest_alphabet(f)
    if args.contracting:
        if alphabet == "x":
            return _fail("contracting arborification needs summation (y) decorations")
        print(str(arborify_y(f)))
    else:
        if alphabet == "y":
            return _fail("simple arborification needs integration (x) decorations")
        print(str(arborify_x(f)))
    return 0


# ---------------------------------------------------------------------------
# zeta

def _zeta_line(comb: LinComb, alphabet: str) -> str:
    rows = []
    for w, c in comb.items():
        if alphabet == "y":
            xw, idx = s_map(w), tuple(l.index for l in w.letters)
        else:
            xw, idx = w, tuple(l.index for l in s_inverse(w).letters)
        rows.append((str(xw), idx, c))
    rows.sort(key=lambda r: r[0])
    return " + ".join(f"{c}*zeta({','.join(map(str, idx))})" for _, idx, c in rows)


def _cmd_zeta(args: argparse.Namespace) -> int:
    if (args.forest is None) == (args.word is None):
        return _fail("give exactly one of a forest argument or --word")
    if args.word is not None:
        w = parse_word(args.word)
        alphabet = "x" if any(isinstance(l, XLetter) for l in w.letters) else "y"
        if alphabet == "y" and not is_convergent_y(w):
            return _fail(f"word {w} is divergent: it starts with y1")
        if alphabet == "x" and not is_convergent_x(w):
            return _fail(f"word {w} is divergent: it must start with x0 and end with x1")
        comb = LinComb.unit(w)
    else:
        f = parse_forest(args.forest)
        alphabet = _forest_alphabet(f) or "y"
        reason = divergence_reason_y(f) if alphabet == "y" else divergence_reason_x(f)
        if reason is not None:
            return _fail(reason)
        comb = arborify_y(f) if alphabet == "y" else arborify_x(f)
    print(_zeta_line(comb, alphabet))
    value = zeta_mod.zeta_comb_y(comb, args.tol) if alphabet == "y" else zeta_mod.zeta_comb_x(comb, args.tol)
    print(f"value = {value:.12g} (tol = {args.tol:g})")
    return 0


# ---------------------------------------------------------------------------
# verify / enumerate / hoffman

def _cmd_verify(args: argparse.Namespace) -> int:
    rows = verify_mod.run_suite(args.suite, tol=args.tol, max_weight=args.max_weight)
    print(verify_mod.format_rows(rows, args.format))
    return 0 if verify_mod.all_passed(rows) else 1


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.n < 1:
        return _fail("tree size must be >= 1")
    if args.n > args.cap:
        return _fail(f"size {args.n} exceeds the cap {args.cap}; raise it with --cap")
    if args.decorations < 1:
        return _fail("need at least one decoration")
    letters = tuple(YLetter(i) for i in range(1, args.decorations + 1))
    trees = enumerate_trees(args.n, letters)
    noun = "tree" if len(trees) == 1 else "trees"
    print(f"{len(trees)} {noun}")
    for t in trees:
        print(print_tree(t))
    return 0


def _cmd_hoffman(args: argparse.Namespace) -> int:
    w = parse_word(args.word)
    if any(not isinstance(l, YLetter) for l in w.letters):
        return _fail("the exp/log isomorphism acts on summation (y) words")
    comb = exp_word(w) if args.direction == "exp" else log_word(w)
    print(str(comb))
    return 0


# ---------------------------------------------------------------------------
# selftest

def _close(a: float, b: float, eps: float = 1e-8) -> bool:
    return abs(a - b) <= eps


def _wcomb(*pairs: Tuple[str, object]) -> LinComb:
    return LinComb((parse_word(t), Fraction(c)) for t, c in pairs)


def _selftest_checks() -> List[Tuple[str, Callable[[], bool]]]:
    half = Fraction(1, 2)
    dot = vertex(YLetter(1))
    f_dot = forest_of(dot)
    l2 = bplus(YLetter(1), f_dot)
    f_l2 = forest_of(l2)
    cherry = bplus(YLetter(1), forest_of(dot, dot))
    f_cherry = forest_of(cherry)
    f_dotdot = forest_of(dot, dot)

    def pair(a: Forest, b: Forest, c: int = 1) -> LinComb:
        return LinComb.unit(TensorPair(a, b), Fraction(c))

    checks: List[Tuple[str, Callable[[], bool]]] = [
        (
            "depth-one quasi-shuffle product",
            lambda: quasi_shuffle(parse_word("y2"), parse_word("y3"))
            == _wcomb(("y2.y3", 1), ("y3.y2", 1), ("y5", 1)),
        ),
        (
            "block substitution of a word",
            lambda: s_map(parse_word("y2.y3")) == parse_word("x0.x1.x0.x0.x1"),
        ),
        (
            "two-vertex ladder coproduct",
            lambda: coproduct(f_l2)
            == pair(f_l2, EMPTY_FOREST) + pair(EMPTY_FOREST, f_l2) + pair(f_dot, f_dot),
        ),
        (
            "cherry coproduct with multiplicity two",
            lambda: coproduct(f_cherry)
            == pair(f_cherry, EMPTY_FOREST)
            + pair(EMPTY_FOREST, f_cherry)
            + pair(f_dot, f_l2, 2)
            + pair(f_dotdot, f_dot),
        ),
        (
            "tree census through five vertices",
            lambda: [len(enumerate_trees(n, (YLetter(1),))) for n in range(1, 6)]
            == [1, 1, 2, 4, 9],
        ),
        (
            "contracting expansion of the decorated cherry",
            lambda: arborify_y(Forest((parse_tree("y3(y1,y2)"),)))
            == _wcomb(("y1.y2.y3", 1), ("y2.y1.y3", 1), ("y3.y3", 1)),
        ),
        (
            "simple expansion with distinct branches",
            lambda: arborify_x(Forest((parse_tree("x1(x0,x1(x0))"),)))
            == _wcomb(("x0.x0.x1.x1", 2), ("x0.x1.x0.x1", 1)),
        ),
        (
            "simple expansion with equal branches",
            lambda: arborify_x(Forest((parse_tree("x1(x0,x0(x0))"),)))
            == _wcomb(("x0.x0.x0.x1", 3)),
        ),
        (
            "ten-term depth-one shuffle",
            lambda: shuffle(parse_word("x0.x1"), parse_word("x0.x0.x1"))
            == _wcomb(("x0.x1.x0.x0.x1", 1), ("x0.x0.x1.x0.x1", 3), ("x0.x0.x0.x1.x1", 6)),
        ),
        (
            "exp of one letter",
            lambda: exp_word(parse_word("y1")) == _wcomb(("y1", 1)),
        ),
        (
            "log of one letter",
            lambda: log_word(parse_word("y1")) == _wcomb(("y1", 1)),
        ),
        (
            "exp of a two-letter word",
            lambda: exp_word(parse_word("y1.y2")) == _wcomb(("y1.y2", 1), ("y3", half)),
        ),
        (
            "log of a two-letter word",
            lambda: log_word(parse_word("y1.y2")) == _wcomb(("y1.y2", 1), ("y3", -half)),
        ),
        (
            "exp of a three-letter word",
            lambda: exp_word(parse_word("y1.y2.y3"))
            == _wcomb(("y1.y2.y3", 1), ("y1.y5", half), ("y3.y3", half), ("y6", Fraction(1, 6))),
        ),
        (
            "log of a three-letter word",
            lambda: log_word(parse_word("y1.y2.y3"))
            == _wcomb(("y1.y2.y3", 1), ("y1.y5", -half), ("y3.y3", -half), ("y6", Fraction(1, 3))),
        ),
        (
            "depth-one value at two",
            lambda: _close(zeta_mod.eval_mzv((2,), 1e-9), math.pi ** 2 / 6.0, 1e-9),
        ),
        (
            "depth-one value at four",
            lambda: _close(zeta_mod.eval_mzv((4,), 1e-9), math.pi ** 4 / 90.0, 1e-9),
        ),
        (
            "the first double reduces to a depth-one value",
            lambda: _close(zeta_mod.eval_mzv((2, 1), 1e-9), zeta_mod.eval_mzv((3,), 1e-9), 2e-9),
        ),
        (
            "product identity along the contracted route",
            lambda: _close(
                zeta_mod.zeta_comb_y(quasi_shuffle(parse_word("y2"), parse_word("y3")), 1e-9),
                zeta_mod.eval_mzv((2,), 1e-9) * zeta_mod.eval_mzv((3,), 1e-9),
            ),
        ),
        (
            "product identity along the simple route",
            lambda: _close(
                zeta_mod.zeta_comb_x(shuffle(parse_word("x0.x1"), parse_word("x0.x0.x1")), 1e-9),
                zeta_mod.eval_mzv((2,), 1e-9) * zeta_mod.eval_mzv((3,), 1e-9),
            ),
        ),
        (
            "regularized value of the divergent letter",
            lambda: zeta_mod.reg_qsh(parse_word("y1"))
            == ThetaPoly.theta(LinComb.unit(Word(()))),
        ),
        (
            "correction operator fixes constants and degree one",
            lambda: zeta_mod.rho(zeta_mod.NumericRegValue(ThetaPoly.constant(1.0), 1e-9)).poly
            == ThetaPoly.constant(1.0)
            and zeta_mod.rho(zeta_mod.NumericRegValue(ThetaPoly.theta(1.0), 1e-9)).poly
            == ThetaPoly.theta(1.0),
        ),
        (
            "correction operator on a quadratic",
            lambda: _selftest_rho_quadratic(),
        ),
        (
            "regularization relation at the first word",
            lambda: zeta_mod.hoffman_reg_relation(parse_word("y2"))
            == _wcomb(("x0.x1.x1", 1), ("x0.x0.x1", -1)),
        ),
        (
            "arborified value with distinct branches",
            lambda: _close(
                zeta_mod.zeta_tree_x(parse_tree("x1(x0,x1(x0))")),
                2.0 * zeta_mod.eval_mzv((3, 1), 1e-9) + zeta_mod.eval_mzv((2, 2), 1e-9),
            ),
        ),
        (
            "arborified value with equal branches",
            lambda: _close(
                zeta_mod.zeta_tree_x(parse_tree("x1(x0,x0(x0))")),
                3.0 * zeta_mod.eval_mzv((4,), 1e-9),
            ),
        ),
        (
            "single-vertex truncated sum",
            lambda: zeta_mod.brute_tree_sum(vertex(YLetter(2)), 2) == 1.25,
        ),
        (
            "cherry truncated sum at bound two",
            lambda: zeta_mod.brute_tree_sum(parse_tree("y2(y2,y2)"), 2) == 0.0625,
        ),
    ]
    return checks


def _selftest_rho_quadratic() -> bool:
    z2 = zeta_mod.eval_mzv((2,), 1e-10)
    p = ThetaPoly({2: 0.5, 0: -0.5 * z2})
    out = zeta_mod.rho(zeta_mod.NumericRegValue(p, 1e-9)).poly
    return (
        _close(out.coeff(2, 0.0), 0.5)
        and _close(out.coeff(0, 0.0), 0.0)
        and not out.coeff(1, 0.0)
    )


def _cmd_selftest(args: argparse.Namespace) -> int:
    checks = _selftest_checks()
    failures = 0
    for name, fn in checks:
        try:
            ok = fn()
        except Exception as exc:  # a crash is a failure, not a crash of the battery
            ok = False
            print(f"FAIL {name} (raised {exc!r})")
        else:
            print(("ok   " if ok else "FAIL ") + name)
        if not ok:
            failures += 1
    print(f"{len(checks) - failures}/{len(checks)} selftest checks passed")
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------------------
# parser

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arborzeta",
        description="Exact arborified zeta values: expand, evaluate, verify.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("expand", help="arborify a decorated forest into words")
    flavor = p.add_mutually_exclusive_group(required=True)
    flavor.add_argument("--contracting", action="store_true", help="quasi-shuffle flavor (y-decorations)")
    flavor.add_argument("--simple", action="store_true", help="shuffle flavor (x-decorations)")
    p.add_argument("forest", help="forest text, e.g. \"y3(y1,y2)\" or \"e\"")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("zeta", help="exact zeta expansion and certified value")
    p.add_argument("forest", nargs="?", help="forest text; alternatively use --word")
    p.add_argument("--word", help="a single word instead of a forest")
    p.add_argument("--tol", type=float, default=1e-9, help="certified absolute tolerance")
    p.set_defaults(func=_cmd_zeta)

    p = sub.add_parser("verify", help="run an identity suite and report rows")
    p.add_argument("suite", choices=verify_mod.SUITE_NAMES)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--format", choices=("text", "tsv", "json"), default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enumerate", help="list canonical decorated trees of a size")
    p.add_argument("n", type=int)
    p.add_argument("--decorations", type=int, default=1, help="number of y-decorations (default 1)")
    p.add_argument("--cap", type=int, default=8, help="largest allowed size")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("hoffman", help="exp/log isomorphism on one summation word")
    p.add_argument("direction", choices=("exp", "log"))
    p.add_argument("word")
    p.set_defaults(func=_cmd_hoffman)

    p = sub.add_parser("selftest", help="run the built-in worked-example battery")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        return _fail(str(exc))
    except ValueError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
