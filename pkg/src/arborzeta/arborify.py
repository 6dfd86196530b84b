"""Arborification morphisms between forests and words.

Both maps send a decorated forest to a linear combination of words and are
the unique Hopf-algebra morphisms turning grafting into right concatenation:
arborify(B+_d(f)) appends the letter d to every word of arborify(f).  On a
product of trees the simple flavor multiplies with the shuffle and the
contracting flavor with the quasi-shuffle, so the simple expansion counts the
linear extensions of the forest order while the contracting expansion also
collects the degenerate extensions where incomparable vertices merge.

The ladder map is a section of both flavors: it turns a nonempty word into
the linear tree whose root carries the last letter and whose top vertex
carries the first, so arborify(ladder(w)) = w for every word w.

The tree-level block substitution sends a summation forest to a combination
of integration ladders by substituting blocks inside the contracting
expansion; composing it with the simple arborification recovers the word
level substitution applied to the contracting expansion.
"""

from __future__ import annotations

from typing import Callable, Optional

from .lincomb import LinComb
from .forests import EMPTY_FOREST, Forest, Tree, make_tree
from .words import (
    Letter,
    Word,
    XLetter,
    YLetter,
    X0,
    X1,
    EMPTY_WORD,
    merge_y,
    product_comb,
    s_map,
)


def _append(comb: LinComb, letter: Letter) -> LinComb:
    return comb.map_basis(lambda w: Word(w.letters + (letter,)))


def _arborify_forest(f: Forest, merge, memo: dict) -> LinComb:
    total = LinComb.unit(EMPTY_WORD)
    for t in f.trees:
        total = product_comb(total, _arborify_tree(t, merge, memo), merge)
    return total


def _arborify_tree(t: Tree, merge, memo: dict) -> LinComb:
    got = memo.get(t)
    if got is None:
        inner = _arborify_forest(Forest(t.children), merge, memo)
        got = memo[t] = _append(inner, t.decoration)
    return got


def _check_decorations(f: Forest, letter_type: type, flavor: str) -> None:
    stack = list(f.trees)
    while stack:
        t = stack.pop()
        if not isinstance(t.decoration, letter_type):
            raise ValueError(
                f"{flavor} arborification needs {letter_type.__name__} decorations, "
                f"found {t.decoration}"
            )
        stack.extend(t.children)


def arborify_x(f: Forest) -> LinComb:
    """Simple arborification: shuffle over trees, decorations from {x0, x1}."""
    _check_decorations(f, XLetter, "simple")
    return _arborify_forest(f, None, {})


def arborify_y(f: Forest) -> LinComb:
    """Contracting arborification: quasi-shuffle over trees, y-decorations."""
    _check_decorations(f, YLetter, "contracting")
    return _arborify_forest(f, merge_y, {})


def ladder(w: Word) -> Tree:
    """Linear tree for a nonempty word: root gets the last letter."""
    if not w.letters:
        raise ValueError("the empty word has no ladder tree")
    t: Optional[Tree] = None
    for letter in w.letters:
        t = make_tree(letter, () if t is None else (t,))
    return t


def s_tree(f: Forest) -> LinComb:
    """Tree-level block substitution: y-forest to combination of x-ladders."""

    def to_ladder_forest(w: Word) -> Forest:
        if not w.letters:
            return EMPTY_FOREST
        return Forest((ladder(s_map(w)),))

    return arborify_y(f).map_basis(to_ladder_forest)


def _leaves_and_roots(t: Tree):
    roots = [t]
    leaves = []
    stack = [t]
    while stack:
        node = stack.pop()
        if not node.children:
            leaves.append(node)
        stack.extend(node.children)
    return leaves, roots


def is_convergent_tree_y(f: Forest) -> bool:
    """Every leaf of every tree must carry an index >= 2 (a single vertex is
    its own leaf)."""
    return divergence_reason_y(f) is None


def is_convergent_tree_x(f: Forest) -> bool:
    """Every root must be decorated x1 and every leaf x0; a single vertex is
    both, so it is never convergent."""
    return divergence_reason_x(f) is None


def divergence_reason_y(f: Forest) -> Optional[str]:
    """None when convergent, else a message naming the offending vertex."""
    for t in f.trees:
        leaves, _ = _leaves_and_roots(t)
        for leaf in leaves:
            d = leaf.decoration
            if not isinstance(d, YLetter):
                raise ValueError(f"expected y-decorations, found {d}")
            if d.index < 2:
                return f"leaf decorated {d} makes the nested sum divergent (needs index >= 2)"
    return None


def divergence_reason_x(f: Forest) -> Optional[str]:
    """None when convergent, else a message naming the offending vertex."""
    for t in f.trees:
        d = t.decoration
        if not isinstance(d, XLetter):
            raise ValueError(f"expected x-decorations, found {d}")
        if not t.children:
            return "a single vertex is both root and leaf, so the tree cannot converge"
        if d != X1:
            return f"root decorated {d} makes the value divergent (root must be x1)"
        leaves, _ = _leaves_and_roots(t)
        for leaf in leaves:
            if leaf.decoration != X0:
                return f"leaf decorated {leaf.decoration} makes the value divergent (leaves must be x0)"
    return None
