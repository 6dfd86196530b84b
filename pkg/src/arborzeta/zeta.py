"""Multiple zeta values: certified numerics and regularized characters.

Numerical evaluation
--------------------

zeta(n1, ..., nr) is the nested sum over k1 > k2 > ... > kr >= 1 of
1/(k1^n1 ... kr^nr), convergent exactly when n1 >= 2.  Direct truncation
converges far too slowly near the weight-2 boundary, so the evaluator sums
the region k1 < K exactly and corrects the tail with Euler-Maclaurin,
recursing on depth:

* One ascending pass computes the exact partial sums F_j(K) of every suffix,
  where F_j(k) = sum over k > m_j > ... > m_r >= 1 of the suffix factors.
* Walking suffixes from the innermost outwards, each F_j is given an
  asymptotic expansion in the basis x^(-a) ln(x)^b.  If F_{j+1} has expansion
  E(x), then g(x) = x^(-n_j) E(x) and Euler-Maclaurin gives

      F_j(k) = C + Phi(k) + remainder,   Phi = integral(g) - g/2 + g'/12 - g'''/720,

  with the constant extracted exactly as C = F_j(K) - Phi(K).  All three
  correction terms stay inside the same log-power basis, so the recursion is
  closed.  The remainder after the B4 term is bounded rigorously by
  2*zeta(5)/(2*pi)^5 * integral from K of |g^(5)|, and the inner expansion
  defects propagate outwards through explicit log-power majorants.
* At the top level n1 >= 2 forces Phi to vanish at infinity, so the value is
  the extracted constant and the certified bound is the accumulated remainder
  plus a fixed double-precision allowance.

The naive double truncation survives in ``naive_mzv`` as the independent
cross-check oracle, with the documented tail bound::

    zeta(n) - naive_mzv(n, N) <= B * (h(N+1) + integral from N+1 of h),
    h(x) = x^(-n1) (1 + ln x)^c,

where c counts the inner exponents equal to 1 and B is the product of
1 + 1/(n_j - 1) over the inner exponents n_j >= 2 (each factor dominates the
corresponding one-variable sum).

Regularization
--------------

Both products extend to characters on all words once zeta(y1) = zeta(x1) is
given the formal value theta.  The implementation eliminates divergent words
triangularly: if w has a > 0 leading y1 letters and v = w minus one leading
y1, the quasi-shuffle y1 * v contains w with coefficient a plus words with
fewer leading y1 letters, so

    reg(w) = (theta * reg(v) - reg(y1 * v - a*w)) / a

terminates by induction on (length, leading count).  The shuffle side is
identical with x1 in place of y1, and stores its convergent coefficients as
summation words through the inverse block substitution.  The two characters
are intertwined by the exponential differential operator ``rho`` built from
the depth-one values zeta(n), n >= 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Optional, Tuple, Union

from .arborify import (
    arborify_x,
    arborify_y,
    divergence_reason_x,
    divergence_reason_y,
)
from .forests import Forest, Tree
from .lincomb import NEG_INF, LinComb, ThetaPoly
from .words import (
    Word,
    X1,
    YLetter,
    is_convergent_x,
    is_convergent_y,
    quasi_shuffle,
    s_inverse,
    s_map,
    shuffle,
    y_word,
)

MzvIndex = Tuple[int, ...]

# ---------------------------------------------------------------------------
# log-power expansions: dict (a, b) -> float meaning sum c * x^-a * ln(x)^b

_LogPow = Dict[Tuple[int, int], float]

_EM_REMAINDER = 2.2e-4   # >= 2*zeta(5)/(2*pi)^5, remainder factor after the B4 term
_A_MAX = 12              # expansion order kept in x^-a
_ROUNDING_SLOP = 2.0e-13 # double-precision allowance folded into every bound


def _lp_add(dst: _LogPow, src: _LogPow, scale: float = 1.0) -> None:
    for key, c in src.items():
        v = dst.get(key, 0.0) + scale * c
        if v:
            dst[key] = v
        elif key in dst:
            del dst[key]


def _lp_shift(p: _LogPow, n: int) -> _LogPow:
    return {(a + n, b): c for (a, b), c in p.items()}


def _lp_deriv(p: _LogPow) -> _LogPow:
    out: _LogPow = {}
    for (a, b), c in p.items():
        if a:
            _lp_add(out, {(a + 1, b): -a * c})
        if b:
            _lp_add(out, {(a + 1, b - 1): b * c})
    return out


def _lp_antideriv(p: _LogPow) -> _LogPow:
    """Antiderivative without constant; every term needs a >= 1."""
    out: _LogPow = {}
    for (a, b), c in p.items():
        if a < 1:
            raise ValueError("antiderivative needs strictly decaying terms")
        if a == 1:
            _lp_add(out, {(0, b + 1): c / (b + 1)})
        else:
            coef = 1.0 / (1 - a)
            for j in range(b, -1, -1):
                _lp_add(out, {(a - 1, j): c * coef})
                coef *= -j / (1 - a)
    return out


def _lp_eval(p: _LogPow, x: float) -> float:
    lx = math.log(x)
    return sum(c * x ** (-a) * lx ** b for (a, b), c in p.items())


def _int_tail(a: int, b: int, K: float) -> float:
    """integral from K to infinity of x^-a ln(x)^b dx, for a >= 2."""
    if a < 2:
        raise ValueError("tail integral needs a >= 2")
    lk = math.log(K)
    total = 0.0
    fact = 1.0
    for i in range(b + 1):
        if i:
            fact *= i
        total += math.comb(b, i) * lk ** (b - i) * fact / (a - 1) ** (i + 1)
    return K ** (1 - a) * total


def _max_term(a: int, b: int, K: float) -> float:
    """max over [K, inf) of x^-a ln(x)^b."""
    if b == 0:
        return K ** (-a)
    if math.log(K) >= b / a:
        return K ** (-a) * math.log(K) ** b
    return math.exp(-b) * (b / a) ** b


def _sum_tail(a: int, b: int, K: int) -> float:
    """Upper bound for sum over m >= K of m^-a ln(m)^b, a >= 2."""
    return _max_term(a, b, K) + _int_tail(a, b, K)


def _lp_prune(g: _LogPow, K: int) -> Tuple[_LogPow, float]:
    """Drop terms beyond the kept expansion order; returns a bound on the
    total partial-sum contribution of everything dropped."""
    kept: _LogPow = {}
    dropped = 0.0
    for (a, b), c in g.items():
        if a <= _A_MAX:
            kept[(a, b)] = c
        else:
            dropped += abs(c) * _sum_tail(a, b, K)
    return kept, dropped


def _build_phi(g: _LogPow) -> _LogPow:
    phi = _lp_antideriv(g)
    _lp_add(phi, g, -0.5)
    g1 = _lp_deriv(g)
    _lp_add(phi, g1, 1.0 / 12.0)
    g3 = _lp_deriv(_lp_deriv(g1))
    _lp_add(phi, g3, -1.0 / 720.0)
    return phi


def _em_remainder(g: _LogPow, K: int) -> float:
    g5 = g
    for _ in range(5):
        g5 = _lp_deriv(g5)
    return _EM_REMAINDER * sum(abs(c) * _int_tail(a, b, K) for (a, b), c in g5.items())


def _stray_terms(err: _LogPow, n: int, K: int) -> Tuple[_LogPow, Optional[float]]:
    """Majorant for k -> sum_{m=K}^{k-1} m^-n err(m), plus its limit when finite.

    err is a log-power majorant with nonnegative coefficients and terms
    (a, b); each term contributes with s = n + a either a constant (s >= 2)
    or a growing log power (s == 1), in which case the limit is infinite.
    """
    out: _LogPow = {}
    at_inf: Optional[float] = 0.0
    for (a, b), e in err.items():
        s = n + a
        if s >= 2:
            const = e * _sum_tail(s, b, K)
            _lp_add(out, {(0, 0): const})
            if at_inf is not None:
                at_inf += const
        else:
            _lp_add(out, {(0, b + 1): e / (b + 1), (0, 0): e * _max_term(1, b, K)})
            at_inf = None
    return out, at_inf


def _mzv_em(exponents: MzvIndex, K: int) -> Tuple[float, float]:
    """Accelerated value and certified mathematical tail bound at cutoff K."""
    r = len(exponents)
    # exact suffix partial sums F_j(K), one ascending Kahan-compensated pass
    F = [0.0] * (r + 2)
    F[r + 1] = 1.0
    comp = [0.0] * (r + 1)
    powers = [-n for n in exponents]
    for m in range(1, K):
        fm = float(m)
        for j in range(1, r + 1):
            term = F[j + 1] * fm ** powers[j - 1]
            y = term - comp[j - 1]
            t = F[j] + y
            comp[j - 1] = (t - F[j]) - y
            F[j] = t

    expn: _LogPow = {(0, 0): 1.0}
    err: _LogPow = {}
    for j in range(r, 0, -1):
        n = exponents[j - 1]
        g, drop = _lp_prune(_lp_shift(expn, n), K)
        phi = _build_phi(g)
        Cj = F[j] - _lp_eval(phi, K)
        R = _em_remainder(g, K) + drop
        stray, at_inf = _stray_terms(err, n, K)
        if j > 1:
            expn = dict(phi)
            _lp_add(expn, {(0, 0): Cj})
            err = {(0, 0): R}
            _lp_add(err, stray)
        else:
            if any(a < 1 for (a, b) in phi):
                raise AssertionError("outer expansion must decay; got a growing term")
            if at_inf is None:
                raise AssertionError("outer stray bound must be finite for n1 >= 2")
            return Cj, R + at_inf
    return 1.0, 0.0  # r == 0: the empty product


_EVAL_CACHE: Dict[Tuple[MzvIndex, float], Tuple[float, float]] = {}


def eval_mzv_bounded(exponents: MzvIndex, tol: float = 1e-9) -> Tuple[float, float]:
    """Value and certified absolute error bound; raises if tol is unreachable."""
    exponents = tuple(exponents)
    for n in exponents:
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"exponents must be positive integers, got {exponents}")
    if not (isinstance(tol, float) or isinstance(tol, int)) or tol < 1e-12:
        raise ValueError("tolerance below supported precision (min 1e-12)")
    if not exponents:
        return 1.0, 0.0
    if exponents[0] < 2:
        raise ValueError(f"zeta{exponents} diverges: leading exponent must be >= 2")
    key = (exponents, float(tol))
    got = _EVAL_CACHE.get(key)
    if got is not None:
        return got
    K = 1000
    while True:
        value, tail = _mzv_em(exponents, K)
        bound = tail + _ROUNDING_SLOP
        if bound <= tol:
            break
        if K >= 64000:
            raise ArithmeticError(
                f"cannot certify zeta{exponents} to {tol:g}: best bound {bound:g}"
            )
        K *= 2
    _EVAL_CACHE[key] = (value, bound)  # atomic insert; concurrent reads are safe
    return value, bound


def eval_mzv(exponents: MzvIndex, tol: float = 1e-9) -> float:
    """Certified numerical multiple zeta value (absolute error <= tol)."""
    return eval_mzv_bounded(exponents, tol)[0]


def naive_mzv(exponents: MzvIndex, N: int) -> float:
    """Oracle: plain truncation of the nested sum with every index <= N."""
    exponents = tuple(exponents)
    r = len(exponents)
    inner = [1.0] * (N + 1)  # inner[k] = truncated suffix sum with indices <= k
    for j in range(r - 1, -1, -1):
        n = exponents[j]
        new = [0.0] * (N + 1)
        run = 0.0
        for k in range(1, N + 1):
            run += float(k) ** (-n) * inner[k - 1]
            new[k] = run
        inner = new
    return inner[N]


def mzv_truncation_bound(exponents: MzvIndex, N: int) -> float:
    """Upper bound for zeta(exponents) - naive_mzv(exponents, N).

    Documented derivation: the missing terms have k1 > N, and the inner
    partial sums are bounded by B * (1 + ln k1)^c with B and c as in the
    module docstring; summing k1^(-n1) (1 + ln k1)^c over k1 > N is bounded
    by the first term plus the integral, both in closed form.
    """
    exponents = tuple(exponents)
    if not exponents:
        return 0.0
    n1 = exponents[0]
    if n1 < 2:
        raise ValueError("tail bound needs a convergent index")
    if N < 50:
        raise ValueError("tail bound derivation assumes N >= 50")
    B = 1.0
    c = 0
    for n in exponents[1:]:
        if n >= 2:
            B *= 1.0 + 1.0 / (n - 1)
        else:
            c += 1
    A = float(N + 1)
    la = 1.0 + math.log(A)
    first = A ** (-n1) * la ** c
    integral = 0.0
    fact = 1.0
    for i in range(c + 1):
        if i:
            fact *= i
        integral += math.comb(c, i) * la ** (c - i) * fact / (n1 - 1) ** (i + 1)
    integral *= A ** (1 - n1)
    return B * (first + integral)


# ---------------------------------------------------------------------------
# word-level values

def _split_tol(comb: LinComb, tol: float) -> float:
    mass = sum(abs(float(c)) for _, c in comb.items())
    return tol / max(1.0, math.ceil(mass))


def zeta_word_y(w: Word, tol: float = 1e-9) -> float:
    """Value of a convergent summation word; the empty word evaluates to 1."""
    if not is_convergent_y(w):
        raise ValueError(f"summation word {w} is divergent (starts with y1)")
    return eval_mzv(tuple(l.index for l in w.letters), tol)


def zeta_comb_y(comb: LinComb, tol: float = 1e-9) -> float:
    per = _split_tol(comb, tol)
    return sum(float(c) * zeta_word_y(w, per) for w, c in comb.items())


def zeta_word_x(v: Word, tol: float = 1e-9) -> float:
    """Value of a convergent integration word via the block substitution."""
    if not is_convergent_x(v):
        raise ValueError(f"integration word {v} is divergent")
    return zeta_word_y(s_inverse(v), tol)


def zeta_comb_x(comb: LinComb, tol: float = 1e-9) -> float:
    per = _split_tol(comb, tol)
    return sum(float(c) * zeta_word_x(w, per) for w, c in comb.items())


# ---------------------------------------------------------------------------
# regularized characters

_Y1 = y_word(1)
_X1W = Word((X1,))


@lru_cache(maxsize=None)
def reg_qsh(w: Word) -> ThetaPoly:
    """Quasi-shuffle regularization of a summation word.

    Returns a polynomial in theta whose coefficients are exact rational
    combinations of convergent words; on convergent words it is the word
    itself and reg_qsh(y1) = theta.
    """
    if is_convergent_y(w):
        return ThetaPoly.constant(LinComb.unit(w))
    v = Word(w.letters[1:])
    prod = quasi_shuffle(_Y1, v)
    a = prod.coeff(w)
    acc = reg_qsh(v).shift(1)
    for u, c in (prod - LinComb.unit(w, a)).items():
        acc = acc - reg_qsh(u).scale(c)
    return acc.scale(Fraction(1, int(a)))


@lru_cache(maxsize=None)
def reg_sh(v: Word) -> ThetaPoly:
    """Shuffle regularization of an integration word ending in x1 (or empty).

    Coefficients are stored as convergent summation words through the inverse
    block substitution; reg_sh(x1) = theta.
    """
    if v.letters and v.letters[-1] != X1:
        raise ValueError(f"shuffle regularization needs a word ending in x1, got {v}")
    if is_convergent_x(v):
        return ThetaPoly.constant(LinComb.unit(s_inverse(v)))
    u = Word(v.letters[1:])
    prod = shuffle(_X1W, u)
    a = prod.coeff(v)
    acc = reg_sh(u).shift(1)
    for t, c in (prod - LinComb.unit(v, a)).items():
        acc = acc - reg_sh(t).scale(c)
    return acc.scale(Fraction(1, int(a)))


@dataclass(frozen=True)
class NumericRegValue:
    """Numerically evaluated theta-polynomial plus its evaluation tolerance."""

    poly: ThetaPoly
    tol: float

    def __str__(self) -> str:
        return self.poly.format(lambda c: f"{c:.12g}")


def eval_reg(sym: ThetaPoly, tol: float = 1e-9) -> NumericRegValue:
    """Replace every convergent-word coefficient by its numerical value."""
    return NumericRegValue(sym.map_coeffs(lambda comb: zeta_comb_y(comb, tol)), tol)


class ZetaProvider:
    """Cached depth-one values zeta(n) at a fixed tolerance."""

    def __init__(self, tol: float):
        self.tol = tol
        self._cache: Dict[int, float] = {}

    def __call__(self, n: int) -> float:
        got = self._cache.get(n)
        if got is None:
            got = self._cache[n] = eval_mzv((n,), self.tol)
        return got


def rho(val: NumericRegValue, zeta_at: Optional[Callable[[int], float]] = None) -> NumericRegValue:
    """The correction operator exp(sum_{n>=2} (-1)^n zeta(n)/n d^n/dtheta^n).

    Acts on numeric theta-polynomials; each application of the generator
    lowers the degree by at least 2, so the exponential series terminates and
    rho(p) - p has degree at most deg(p) - 2.  Depth-one values come from the
    provider, by default a cache evaluating at a tenth of the tolerance.
    """
    if zeta_at is None:
        zeta_at = ZetaProvider(val.tol / 10.0)

    def generator(q: ThetaPoly) -> ThetaPoly:
        d = q.degree()
        out = ThetaPoly()
        if d is NEG_INF:
            return out
        for n in range(2, int(d) + 1):
            sign = 1.0 if n % 2 == 0 else -1.0
            out = out + q.derive(n).scale(sign * zeta_at(n) / n)
        return out

    out = val.poly
    term = val.poly
    k = 1
    while True:
        term = generator(term).scale(1.0 / k)
        if not term:
            break
        out = out + term
        k += 1
    return NumericRegValue(out, val.tol)


def check_bmz(w: Word, tol: float = 1e-9) -> float:
    """Residual of the regularization comparison on one summation word.

    Evaluates the shuffle character on the substituted word and the corrected
    quasi-shuffle character on w, and returns the largest absolute difference
    between coefficients of matching theta powers.
    """
    lhs = eval_reg(reg_sh(s_map(w)), tol).poly
    rhs = rho(eval_reg(reg_qsh(w), tol)).poly
    degrees = {k for k, _ in lhs.items()} | {k for k, _ in rhs.items()}
    if not degrees:
        return 0.0
    return max(abs(lhs.coeff(k, 0.0) - rhs.coeff(k, 0.0)) for k in degrees)


def hoffman_reg_relation(w: Word) -> LinComb:
    """x1 shuffled into s(w), minus s applied to y1 quasi-shuffled into w.

    Defined for convergent summation words; the divergent boundary words
    cancel, so the result is an exact combination of convergent integration
    words whose value is zero.
    """
    if not is_convergent_y(w):
        raise ValueError(f"needs a convergent summation word, got {w}")
    left = shuffle(_X1W, s_map(w))
    right = quasi_shuffle(_Y1, w).map_basis(s_map)
    out = left - right
    bad = [word for word in out.support() if not is_convergent_x(word)]
    if bad:
        raise AssertionError(f"divergent words failed to cancel: {bad}")
    return out


# ---------------------------------------------------------------------------
# tree-level values

def zeta_tree_y(f: Union[Forest, Tree], tol: float = 1e-9) -> float:
    """Contracted arborified value of a convergent y-decorated forest."""
    if isinstance(f, Tree):
        f = Forest((f,))
    reason = divergence_reason_y(f)
    if reason is not None:
        raise ValueError(reason)
    return zeta_comb_y(arborify_y(f), tol)


def zeta_tree_x(f: Union[Forest, Tree], tol: float = 1e-9) -> float:
    """Simple arborified value of a convergent x-decorated forest."""
    if isinstance(f, Tree):
        f = Forest((f,))
    reason = divergence_reason_x(f)
    if reason is not None:
        raise ValueError(reason)
    return zeta_comb_x(arborify_x(f), tol)


def brute_tree_sum(t: Tree, N: int) -> float:
    """Direct truncation of the tree sum with every vertex value <= N.

    Sums over all assignments of integers in [1, N] to vertices that strictly
    increase away from the root, using suffix arrays: for each subtree,
    g[m] = sum of the subtree contribution over assignments whose root value
    is at least m, and child subtrees are independent given the root value.
    Monotone nondecreasing in N; the defect against the exact value is
    bounded by ``tree_truncation_bound``.
    """
    if N < 1:
        raise ValueError("truncation bound N must be >= 1")

    def suffix(t: Tree) -> list:
        kids = [suffix(c) for c in t.children]
        d = t.decoration
        if not isinstance(d, YLetter):
            raise ValueError(f"expected y-decorations, found {d}")
        g = [0.0] * (N + 2)
        for m in range(N, 0, -1):
            prod = float(m) ** (-d.index)
            for arr in kids:
                prod *= arr[m + 1]
            g[m] = g[m + 1] + prod
        return g

    return suffix(t)[1]


def tree_truncation_bound(t: Union[Forest, Tree], N: int) -> float:
    """Bound for zeta_tree_y(t) - brute_tree_sum(t, N), through the expansion.

    The truncated tree sum equals the word expansion with every truncated
    word sum cut at the same N, so the defect is at most the sum of
    |coefficient| * mzv_truncation_bound(word) over the expansion.
    """
    if isinstance(t, Tree):
        t = Forest((t,))
    total = 0.0
    for w, c in arborify_y(t).items():
        total += abs(float(c)) * mzv_truncation_bound(tuple(l.index for l in w.letters), N)
    return total
