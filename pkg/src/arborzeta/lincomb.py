"""Exact coefficient substrate for the symbolic layer.

Three building blocks live here: rational scalars (stdlib ``Fraction``, kept
in lowest terms with positive denominator by construction), formal linear
combinations over an arbitrary hashable basis, and polynomials in the
regularization variable theta with coefficients in any additive type.

Every symbolic coefficient is a ``Fraction``; floats enter only when a value
is explicitly evaluated numerically.  Basis elements are ordered by the
lexicographic order of their string serialization, which fixes deterministic
iteration and printing everywhere.  The zero combination (empty support) is
distinct from the unit basis element of any algebra built on top, such as the
empty word or the empty forest.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Tuple, Union

Rational = Fraction

Scalar = Union[Fraction, int]

NEG_INF = float("-inf")


def _coerce(c: Scalar) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected an exact rational coefficient, got {type(c).__name__}")


@dataclass(frozen=True)
class TensorPair:
    """Elementary tensor with a left and a right component."""

    left: object
    right: object

    def __str__(self) -> str:
        return f"[{self.left} (x) {self.right}]"


class LinComb:
    """Formal rational linear combination of hashable basis elements.

    Immutable after construction.  Zero coefficients are never stored, so the
    zero combination has empty support and is falsy.  Construction accepts a
    mapping or an iterable of (element, coefficient) pairs; repeated elements
    accumulate.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping, Iterable[Tuple[object, Scalar]]] = ()):
        data: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for elem, c in items:
            c = _coerce(c)
            if not c:
                continue
            acc = data.get(elem)
            s = c if acc is None else acc + c
            if s:
                data[elem] = s
            elif acc is not None:
                del data[elem]
        self._terms = data

    @classmethod
    def unit(cls, elem: object, coeff: Scalar = 1) -> "LinComb":
        return cls(((elem, coeff),))

    def items(self) -> list:
        """Terms as (element, coefficient) pairs, ordered by serialization."""
        return sorted(self._terms.items(), key=lambda kv: str(kv[0]))

    def support(self) -> list:
        return [elem for elem, _ in self.items()]

    def coeff(self, elem: object) -> Fraction:
        return self._terms.get(elem, Fraction(0))

    def __contains__(self, elem: object) -> bool:
        return elem in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        if not other:
            return self
        if not self:
            return other
        data = dict(self._terms)
        for elem, c in other._terms.items():
            s = data.get(elem, Fraction(0)) + c
            if s:
                data[elem] = s
            elif elem in data:
                del data[elem]
        out = LinComb()
        out._terms = data
        return out

    def __neg__(self) -> "LinComb":
        return self * Fraction(-1)

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __mul__(self, c: Scalar) -> "LinComb":
        c = _coerce(c)
        if not c:
            return LinComb()
        out = LinComb()
        out._terms = {elem: c * v for elem, v in self._terms.items()}
        return out

    __rmul__ = __mul__

    def map_basis(self, f: Callable[[object], "LinComb"]) -> "LinComb":
        """Linear extension of a basis map; f may return an element or a LinComb."""
        total = LinComb()
        for elem, c in self._terms.items():
            image = f(elem)
            if not isinstance(image, LinComb):
                image = LinComb.unit(image)
            total = total + image * c
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{elem}" for elem, c in self.items())

    def __repr__(self) -> str:
        return f"LinComb({self})"


def bilinear(f: Callable[[object, object], LinComb], a: LinComb, b: LinComb) -> LinComb:
    """Bilinear extension of a basis-pair map f to combinations a, b."""
    total = LinComb()
    for u, cu in a._terms.items():
        for v, cv in b._terms.items():
            image = f(u, v)
            if not isinstance(image, LinComb):
                image = LinComb.unit(image)
            total = total + image * (cu * cv)
    return total


class ThetaPoly:
    """Polynomial in theta with coefficients in an additive type C.

    C needs addition, multiplication by the scalars used, and truthiness as
    the zero test.  In practice C is Fraction, float, or LinComb.  Falsy
    coefficients are dropped, so the zero polynomial has empty support and
    degree() returns -inf as the distinguished marker.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Union[Mapping, Iterable[Tuple[int, object]]] = ()):
        data: dict = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for k, c in items:
            if not isinstance(k, int) or k < 0:
                raise ValueError(f"theta exponent must be a nonnegative integer, got {k!r}")
            if k in data:
                data[k] = data[k] + c
            else:
                data[k] = c
        self._c = {k: c for k, c in data.items() if c}

    @classmethod
    def constant(cls, c: object) -> "ThetaPoly":
        return cls(((0, c),))

    @classmethod
    def theta(cls, c: object = Fraction(1)) -> "ThetaPoly":
        return cls(((1, c),))

    def items(self) -> list:
        return sorted(self._c.items())

    def coeff(self, k: int, zero: object = None) -> object:
        return self._c.get(k, zero)

    def degree(self):
        return max(self._c) if self._c else NEG_INF

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ThetaPoly):
            return NotImplemented
        return self._c == other._c

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "ThetaPoly") -> "ThetaPoly":
        if not isinstance(other, ThetaPoly):
            return NotImplemented
        data = dict(self._c)
        for k, c in other._c.items():
            data[k] = data[k] + c if k in data else c
        return ThetaPoly(data)

    def scale(self, c: object) -> "ThetaPoly":
        return ThetaPoly({k: c * v for k, v in self._c.items()})

    def __neg__(self) -> "ThetaPoly":
        return self.scale(-1)

    def __sub__(self, other: "ThetaPoly") -> "ThetaPoly":
        return self + other.scale(-1)

    def shift(self, n: int = 1) -> "ThetaPoly":
        """Multiplication by theta^n."""
        if n < 0:
            raise ValueError("shift must be nonnegative")
        return ThetaPoly({k + n: c for k, c in self._c.items()})

    def derive(self, n: int = 1) -> "ThetaPoly":
        """n-th formal derivative d^n/dtheta^n, n >= 1."""
        if not isinstance(n, int) or n < 1:
            raise ValueError("derivative order must be an integer >= 1")
        data = {}
        for k, c in self._c.items():
            if k >= n:
                m = 1
                for i in range(k, k - n, -1):  # falling factorial k!/(k-n)!
                    m *= i
                data[k - n] = m * c
        return ThetaPoly(data)

    def map_coeffs(self, f: Callable[[object], object]) -> "ThetaPoly":
        return ThetaPoly({k: f(c) for k, c in self._c.items()})

    def mul_with(self, other: "ThetaPoly", coeff_mul: Callable[[object, object], object]) -> "ThetaPoly":
        """Polynomial product with an explicit coefficient multiplication."""
        data: dict = {}
        for i, a in self._c.items():
            for j, b in other._c.items():
                p = coeff_mul(a, b)
                k = i + j
                data[k] = data[k] + p if k in data else p
        return ThetaPoly(data)

    def format(self, coeff_fmt: Callable[[object], str] = str) -> str:
        if not self._c:
            return "0"
        parts = []
        for k, c in sorted(self._c.items(), reverse=True):
            if k == 0:
                parts.append(f"({coeff_fmt(c)})")
            elif k == 1:
                parts.append(f"({coeff_fmt(c)})*theta")
            else:
                parts.append(f"({coeff_fmt(c)})*theta^{k}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"ThetaPoly({self})"
