"""Words over the two alphabets underlying multiple zeta values.

The integration alphabet has two letters x0, x1; the summation alphabet has
letters y1, y2, y3, ... indexed by positive integers.  A word is a finite
sequence of letters from one alphabet.  This module provides:

* the shuffle product (sum over all interleavings of two words),
* the quasi-shuffle product (interleavings plus contractions, where a letter
  of each factor may merge under an internal product; on the summation
  alphabet the internal product adds indices, [y_k y_l] = y_{k+l}),
* the deconcatenation coproduct,
* the block substitution s sending y_n to x0^(n-1) x1, a bijection between
  summation words and integration words ending in x1, and its inverse,
* convergence predicates: a summation word is convergent when it does not
  start with y1; an integration word is convergent when it starts with x0 and
  ends with x1.

Serialization: letters print as ``x0``, ``x1``, ``y1``, ``y2``, ...; a word
is the dot-joined sequence of its letters (``x0.x1.x1``) and the empty word
prints as ``e``.  Linear combinations print as ``c1*w1 + c2*w2`` with exact
rational coefficients, terms ordered lexicographically by word serialization.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Callable, Iterable, Optional, Tuple, Union

from .lincomb import LinComb, TensorPair, bilinear


@dataclass(frozen=True, order=True)
class XLetter:
    """Letter of the integration alphabet; value is 0 or 1."""

    value: int

    def __post_init__(self):
        if self.value not in (0, 1):
            raise ValueError(f"x-letter value must be 0 or 1, got {self.value}")

    def __str__(self) -> str:
        return f"x{self.value}"


@dataclass(frozen=True, order=True)
class YLetter:
    """Letter of the summation alphabet; index is a positive integer."""

    index: int

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 1:
            raise ValueError(f"y-letter index must be a positive integer, got {self.index}")

    def __str__(self) -> str:
        return f"y{self.index}"


X0 = XLetter(0)
X1 = XLetter(1)

Letter = Union[XLetter, YLetter]


def letter_rank(letter: Letter) -> int:
    """Total order on letters of one alphabet: x0 < x1, y_n by index."""
    return letter.value if isinstance(letter, XLetter) else letter.index


def letter_weight(letter: Letter) -> int:
    """Weight contribution: 1 for x-letters, the index for y-letters."""
    return 1 if isinstance(letter, XLetter) else letter.index


@dataclass(frozen=True)
class Word:
    """Immutable word; the empty word is the product unit of both algebras."""

    letters: Tuple[Letter, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        return ".".join(str(l) for l in self.letters)

    def __repr__(self) -> str:
        return f"Word({self})"


EMPTY_WORD = Word()


def x_word(*values: int) -> Word:
    """Integration word from a sequence of 0/1 values."""
    return Word(tuple(XLetter(v) for v in values))


def y_word(*indices: int) -> Word:
    """Summation word from a sequence of positive indices."""
    return Word(tuple(YLetter(n) for n in indices))


def weight(w: Word) -> int:
    """Length for integration words, index sum for summation words."""
    return sum(letter_weight(l) for l in w.letters)


def concat(u: Word, v: Word) -> Word:
    return Word(u.letters + v.letters)


def merge_y(a: YLetter, b: YLetter) -> YLetter:
    """Internal product of the summation alphabet: indices add."""
    return YLetter(a.index + b.index)


@lru_cache(maxsize=None)
def _interleave(u: Tuple[Letter, ...], v: Tuple[Letter, ...],
                merge: Optional[Callable[[Letter, Letter], Letter]]) -> LinComb:
    # Recursive expansion; merge=None gives the plain shuffle, otherwise the
    # extra branch contracts the two leading letters under the internal product.
    if not u:
        return LinComb.unit(Word(v))
    if not v:
        return LinComb.unit(Word(u))
    acc: dict = {}

    def prepend(letter: Letter, comb: LinComb) -> None:
        for w, c in comb._terms.items():
            key = Word((letter,) + w.letters)
            acc[key] = acc.get(key, 0) + c

    prepend(u[0], _interleave(u[1:], v, merge))
    prepend(v[0], _interleave(u, v[1:], merge))
    if merge is not None:
        prepend(merge(u[0], v[0]), _interleave(u[1:], v[1:], merge))
    return LinComb(acc.items())


def shuffle(u: Word, v: Word) -> LinComb:
    """Shuffle product: sum over all interleavings of u and v."""
    return _interleave(u.letters, v.letters, None)


def quasi_shuffle(u: Word, v: Word,
                  merge: Optional[Callable[[Letter, Letter], Letter]] = merge_y) -> LinComb:
    """Quasi-shuffle product; the internal product is a parameter.

    The default merges summation letters by adding indices.  Passing
    ``merge=None`` drops every contraction term and recovers the shuffle,
    which is the correct specialization for the integration alphabet.
    """
    return _interleave(u.letters, v.letters, merge)


def product_comb(a: LinComb, b: LinComb,
                 merge: Optional[Callable[[Letter, Letter], Letter]] = None) -> LinComb:
    """Bilinear extension of shuffle (merge=None) or quasi-shuffle to combinations."""
    return bilinear(lambda u, v: _interleave(u.letters, v.letters, merge), a, b)


def deconcat(w: Word) -> LinComb:
    """Deconcatenation coproduct: sum of all two-part splits of w."""
    ls = w.letters
    return LinComb(
        (TensorPair(Word(ls[:r]), Word(ls[r:])), 1) for r in range(len(ls) + 1)
    )


def s_map(w: Word) -> Word:
    """Block substitution y_n -> x0^(n-1) x1, extended as a monoid morphism."""
    out = []
    for l in w.letters:
        if not isinstance(l, YLetter):
            raise ValueError(f"s_map expects a summation word, found letter {l}")
        out.extend([X0] * (l.index - 1))
        out.append(X1)
    return Word(tuple(out))


def s_inverse(v: Word) -> Word:
    """Inverse block substitution; v must be empty or end with x1."""
    if v.letters and v.letters[-1] != X1:
        raise ValueError(f"s_inverse needs a word ending in x1, got {v}")
    out = []
    run = 0
    for l in v.letters:
        if not isinstance(l, XLetter):
            raise ValueError(f"s_inverse expects an integration word, found letter {l}")
        if l == X0:
            run += 1
        else:
            out.append(YLetter(run + 1))
            run = 0
    return Word(tuple(out))


def is_convergent_y(w: Word) -> bool:
    """A summation word is convergent when it does not start with y1."""
    return not w.letters or w.letters[0] != YLetter(1)


def is_convergent_x(v: Word) -> bool:
    """An integration word is convergent when it starts with x0 and ends with x1."""
    if not v.letters:
        return True
    return v.letters[0] == X0 and v.letters[-1] == X1


class ParseError(ValueError):
    """Syntax error in the word or tree grammar, with a character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_LETTER_RE = re.compile(r"x[01]|y[1-9][0-9]*")


def parse_letter_at(text: str, pos: int) -> Tuple[Letter, int]:
    """Parse one letter token at pos; returns the letter and the next position."""
    m = _LETTER_RE.match(text, pos)
    if not m:
        raise ParseError(f"expected a letter token (x0, x1, or y<n>), found {text[pos:pos + 8]!r}", pos)
    tok = m.group(0)
    letter: Letter = XLetter(int(tok[1])) if tok[0] == "x" else YLetter(int(tok[1:]))
    return letter, m.end()


def parse_word(text: str) -> Word:
    """Parse ``letter ('.' letter)* | 'e'``; whitespace at the ends is ignored."""
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if s == "e":
        return EMPTY_WORD
    if not s:
        raise ParseError("empty input, expected a word", 0)
    letters = []
    pos = 0
    while True:
        letter, pos = parse_letter_at(s, pos)
        letters.append(letter)
        if pos == len(s):
            break
        if s[pos] != ".":
            raise ParseError(f"expected '.' between letters, found {s[pos]!r}", offset + pos)
        pos += 1
    kinds = {type(l) for l in letters}
    if len(kinds) > 1:
        raise ParseError("word mixes the x and y alphabets", offset)
    return Word(tuple(letters))


def format_comb(comb: LinComb) -> str:
    """Serialize a combination as ``c1*w1 + c2*w2`` in deterministic order."""
    return str(comb)
