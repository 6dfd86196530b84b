"""Verification suites: identity checks emitted as uniform report rows.

Four suites are exposed through the command line:

* ``relations``: the classical product and regularization identities among
  low-weight zeta values, each computed through the word products on one
  side and depth-one multiplication on the other.
* ``bmz``: the regularization comparison residual on every summation word up
  to a weight cap (the empty word included).
* ``hopf``: exact structural checks (coassociativity, the grafting cocycle,
  the coalgebra-morphism property of both arborification maps, and the
  ladder section) swept over all small decorated forests.
* ``oracle``: the direct truncated tree sum against the word-expansion
  evaluator, compared within the documented truncation bound.

Every check becomes a ``CheckRow``; exact checks report instance counts
(lhs = instances checked, rhs = instances correct) with tolerance 0.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .arborify import arborify_x, arborify_y, ladder
from .forests import (
    EMPTY_FOREST,
    Forest,
    Tree,
    bplus,
    coproduct,
    enumerate_forests,
    enumerate_trees,
    print_tree,
)
from .hoffman import compositions
from .lincomb import LinComb, TensorPair
from .words import (
    Letter,
    Word,
    X0,
    X1,
    YLetter,
    deconcat,
    quasi_shuffle,
    shuffle,
    x_word,
    y_word,
)
from .zeta import (
    check_bmz,
    brute_tree_sum,
    eval_mzv,
    tree_truncation_bound,
    zeta_comb_x,
    zeta_comb_y,
    zeta_tree_y,
)


@dataclass(frozen=True)
class CheckRow:
    """One verified identity: name, both sides, residual, tolerance, verdict."""

    name: str
    lhs: float
    rhs: float
    residual: float
    tolerance: float
    passed: bool


def _row(name: str, lhs: float, rhs: float, tolerance: float) -> CheckRow:
    residual = abs(lhs - rhs)
    return CheckRow(name, lhs, rhs, residual, tolerance, residual <= tolerance)


def _count_row(name: str, checked: int, failures: int) -> CheckRow:
    return CheckRow(name, float(checked), float(checked - failures), float(failures), 0.0, failures == 0)


# ---------------------------------------------------------------------------
# relations

def suite_relations(tol: float = 1e-9, max_weight: Optional[int] = None) -> List[CheckRow]:
    """Low-weight product identities, each side computed along its own route."""
    slack = 10.0 * tol
    z2 = eval_mzv((2,), tol)
    z3 = eval_mzv((3,), tol)
    z4 = eval_mzv((4,), tol)
    rows = [
        _row(
            "zeta(2,3)+zeta(3,2)+zeta(5)=zeta(2)zeta(3)",
            zeta_comb_y(quasi_shuffle(y_word(2), y_word(3)), tol),
            z2 * z3,
            slack,
        ),
        _row(
            "zeta(2,3)+3zeta(3,2)+6zeta(4,1)=zeta(2)zeta(3)",
            zeta_comb_x(shuffle(x_word(0, 1), x_word(0, 0, 1)), tol),
            z2 * z3,
            slack,
        ),
        _row("zeta(2,1)=zeta(3)", eval_mzv((2, 1), tol), z3, slack),
        _row("2zeta(2)^2=5zeta(4)", 2.0 * z2 * z2, 5.0 * z4, slack),
    ]
    return rows


# ---------------------------------------------------------------------------
# regularization comparison sweep

def _y_words_up_to_weight(max_weight: int) -> List[Word]:
    words = [Word(())]
    for weight in range(1, max_weight + 1):
        for parts in compositions(weight):
            words.append(y_word(*parts))
    return words


def suite_bmz(tol: float = 1e-9, max_weight: Optional[int] = None) -> List[CheckRow]:
    """Residual of the regularization comparison on all words up to a weight.

    Reported lhs/rhs are the constant (theta-degree-0) coefficients of the
    two sides; the residual is the maximum over all theta powers.
    """
    if max_weight is None:
        max_weight = 4
    from .zeta import NumericRegValue, eval_reg, reg_qsh, reg_sh, rho
    from .words import s_map

    rows = []
    for w in _y_words_up_to_weight(max_weight):
        lhs_poly = eval_reg(reg_sh(s_map(w)), tol).poly
        rhs_poly = rho(eval_reg(reg_qsh(w), tol)).poly
        degrees = {k for k, _ in lhs_poly.items()} | {k for k, _ in rhs_poly.items()}
        residual = max(
            (abs(lhs_poly.coeff(k, 0.0) - rhs_poly.coeff(k, 0.0)) for k in degrees),
            default=0.0,
        )
        rows.append(
            CheckRow(
                f"bmz:{w}",
                lhs_poly.coeff(0, 0.0),
                rhs_poly.coeff(0, 0.0),
                residual,
                10.0 * tol,
                residual <= 10.0 * tol,
            )
        )
    return rows


# ---------------------------------------------------------------------------
# exact Hopf-structure checks

def _triple_split_left(f: Forest) -> LinComb:
    out = LinComb()
    for p, c in coproduct(f).items():
        for q, d in coproduct(p.left).items():
            out = out + LinComb.unit((q.left, q.right, p.right), c * d)
    return out


def _triple_split_right(f: Forest) -> LinComb:
    out = LinComb()
    for p, c in coproduct(f).items():
        for q, d in coproduct(p.right).items():
            out = out + LinComb.unit((p.left, q.left, q.right), c * d)
    return out


def _tensor_arborify(f: Forest, arborify: Callable[[Forest], LinComb]) -> LinComb:
    out = LinComb()
    for p, c in coproduct(f).items():
        for wl, cl in arborify(p.left).items():
            for wr, cr in arborify(p.right).items():
                out = out + LinComb.unit(TensorPair(wl, wr), c * cl * cr)
    return out


def _word_split(comb: LinComb) -> LinComb:
    out = LinComb()
    for w, c in comb.items():
        out = out + c * deconcat(w)
    return out


def _all_words(alphabet: Sequence[Letter], max_len: int) -> Iterable[Word]:
    for length in range(1, max_len + 1):
        for letters in itertools.product(alphabet, repeat=length):
            yield Word(letters)


def suite_hopf(tol: float = 1e-9, max_weight: Optional[int] = None) -> List[CheckRow]:
    """Exact structural identities on small forests; tolerance is zero."""
    rows = []
    decos = {"y": (YLetter(1), YLetter(2)), "x": (X0, X1)}
    arbs = {"y": arborify_y, "x": arborify_x}

    for tag, letters in decos.items():
        forests = [f for n in range(0, 5) for f in enumerate_forests(n, letters)]
        checked = failures = 0
        for f in forests:
            checked += 1
            if _triple_split_left(f) != _triple_split_right(f):
                failures += 1
        rows.append(_count_row(f"coassociativity[{tag},forests<=4]", checked, failures))

        checked = failures = 0
        for n in range(0, 4):
            for f in enumerate_forests(n, letters):
                for d in letters:
                    t = bplus(d, f)
                    lhs = coproduct(Forest((t,)))
                    rhs = LinComb.unit(TensorPair(Forest((t,)), EMPTY_FOREST)) + coproduct(f).map_basis(
                        lambda p, d=d: TensorPair(p.left, Forest((bplus(d, p.right),)))
                    )
                    checked += 1
                    if lhs != rhs:
                        failures += 1
        rows.append(_count_row(f"cocycle[{tag},trees<=4]", checked, failures))

        arb = arbs[tag]
        checked = failures = 0
        for f in forests:
            checked += 1
            if _word_split(arb(f)) != _tensor_arborify(f, arb):
                failures += 1
        name = "contracting" if tag == "y" else "simple"
        rows.append(_count_row(f"coalgebra-morphism[{name},forests<=4]", checked, failures))

        checked = failures = 0
        for w in _all_words(letters, 5):
            checked += 1
            if arb(Forest((ladder(w),))) != LinComb.unit(w):
                failures += 1
        rows.append(_count_row(f"ladder-section[{tag},words<=5]", checked, failures))

    return rows


# ---------------------------------------------------------------------------
# brute-force oracle

def suite_oracle(tol: float = 1e-9, max_weight: Optional[int] = None, N: int = 5000) -> List[CheckRow]:
    """Truncated tree sums against the accelerated word-expansion route."""
    rows = []
    decorations = (YLetter(2), YLetter(3))
    for n in range(1, 4):
        for t in enumerate_trees(n, decorations):
            lhs = brute_tree_sum(t, N)
            rhs = zeta_tree_y(t, tol)
            bound = tree_truncation_bound(t, N) + 10.0 * tol
            rows.append(_row(f"oracle:{print_tree(t)}", lhs, rhs, bound))
    return rows


# ---------------------------------------------------------------------------
# driver and formatting

SUITES: Dict[str, Callable[..., List[CheckRow]]] = {
    "relations": suite_relations,
    "bmz": suite_bmz,
    "hopf": suite_hopf,
    "oracle": suite_oracle,
}

SUITE_NAMES: Tuple[str, ...] = ("relations", "bmz", "hopf", "oracle", "all")


def run_suite(name: str, tol: float = 1e-9, max_weight: Optional[int] = None) -> List[CheckRow]:
    if name == "all":
        rows: List[CheckRow] = []
        for key in ("relations", "bmz", "hopf", "oracle"):
            rows.extend(SUITES[key](tol, max_weight))
        return rows
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    return suite(tol, max_weight)


def format_rows(rows: Sequence[CheckRow], fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps([asdict(r) for r in rows], indent=2)
    if fmt == "tsv":
        lines = ["name\tlhs\trhs\tresidual\ttolerance\tstatus"]
        for r in rows:
            status = "pass" if r.passed else "fail"
            lines.append(
                f"{r.name}\t{r.lhs:.12g}\t{r.rhs:.12g}\t{r.residual:.12g}\t{r.tolerance:.12g}\t{status}"
            )
        return "\n".join(lines)
    if fmt == "text":
        lines = []
        for r in rows:
            status = "PASS" if r.passed else "FAIL"
            lines.append(
                f"{status} {r.name}  lhs={r.lhs:.12g} rhs={r.rhs:.12g} "
                f"residual={r.residual:.3g} tol={r.tolerance:.3g}"
            )
        npass = sum(1 for r in rows if r.passed)
        lines.append(f"{npass}/{len(rows)} checks passed")
        return "\n".join(lines)
    raise ValueError(f"unknown format {fmt!r}; choose text, tsv, or json")


def all_passed(rows: Sequence[CheckRow]) -> bool:
    return all(r.passed for r in rows)
