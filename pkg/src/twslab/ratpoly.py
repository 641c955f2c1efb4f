"""Exact rational polynomial kernel.

Everything in this module is exact: coefficients are `fractions.Fraction`,
no floating point is ever introduced.  It provides

* `UniPoly`   -- dense univariate polynomials over the rationals,
* `BiPoly`    -- sparse polynomials in two variables,
* Sturm sequences, real-root counting and isolation, sign-preserving
  bisection refinement,
* resultants via a fraction-free subresultant pseudo-remainder sequence
  (also over polynomial coefficient rings), and discriminants with the
  standard sign convention

    Dis(p, x) = (-1)^(n(n-1)/2) * Res(p, dp/dx, x) / lc(p).

The resultant convention is the determinant of the Sylvester matrix with
the p-block first, so Res(x - a, x - b, x) = a - b.

All values are immutable; every function is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Optional, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]


class RatPolyError(ValueError):
    pass


class NotSquarefree(RatPolyError):
    """gcd(p, p') has a root inside the queried interval."""


class NoSignChange(RatPolyError):
    """Bisection bracket endpoints agree in sign."""


class ZeroPolynomial(RatPolyError):
    """Operation undefined for the zero polynomial."""


class DegreeTooLow(RatPolyError):
    """Discriminant needs degree >= 2 in the eliminated variable."""


def rat(x: RationalLike) -> Fraction:
    """Parse an exact rational from int, Fraction, 'p/q' or a finite decimal."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass a string or Fraction")
    return Fraction(str(x).strip())


# ---------------------------------------------------------------------------
# intervals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Interval:
    """Rational interval; `None` endpoints mean -oo / +oo (always open).

    The default is an open interval.  A degenerate point [a, a] must be
    closed on both sides.
    """

    lower: Optional[Fraction]
    upper: Optional[Fraction]
    lower_open: bool = True
    upper_open: bool = True

    def __post_init__(self):
        lo, hi = self.lower, self.upper
        if lo is not None and hi is not None:
            if lo > hi:
                raise ValueError("empty interval: lower > upper")
            if lo == hi and (self.lower_open or self.upper_open):
                raise ValueError("degenerate interval must be closed")

    @staticmethod
    def open(lo: RationalLike, hi: RationalLike) -> "Interval":
        return Interval(rat(lo), rat(hi))

    @staticmethod
    def closed(lo: RationalLike, hi: RationalLike) -> "Interval":
        return Interval(rat(lo), rat(hi), False, False)

    @staticmethod
    def point(x: RationalLike) -> "Interval":
        x = rat(x)
        return Interval(x, x, False, False)

    @staticmethod
    def real_line() -> "Interval":
        return Interval(None, None)

    def is_point(self) -> bool:
        return self.lower is not None and self.lower == self.upper

    def width(self) -> Optional[Fraction]:
        if self.lower is None or self.upper is None:
            return None
        return self.upper - self.lower

    def midpoint(self) -> Fraction:
        if self.lower is None or self.upper is None:
            raise ValueError("midpoint of an unbounded interval")
        return (self.lower + self.upper) / 2

    def contains(self, x: Fraction) -> bool:
        if self.lower is not None:
            if x < self.lower or (self.lower_open and x == self.lower):
                return False
        if self.upper is not None:
            if x > self.upper or (self.upper_open and x == self.upper):
                return False
        return True

    def __repr__(self):
        lo = "-oo" if self.lower is None else str(self.lower)
        hi = "+oo" if self.upper is None else str(self.upper)
        lb = "(" if self.lower_open or self.lower is None else "["
        rb = ")" if self.upper_open or self.upper is None else "]"
        return f"{lb}{lo}, {hi}{rb}"


# ---------------------------------------------------------------------------
# univariate polynomials
# ---------------------------------------------------------------------------

def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class UniPoly:
    """Dense univariate polynomial over Q, coefficients low degree first."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Sequence[RationalLike], var: str = "x"):
        object.__setattr__(self, "coeffs", tuple(_strip(rat(a) for a in coeffs)))
        object.__setattr__(self, "var", var)

    def __setattr__(self, *a):
        raise AttributeError("UniPoly is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(var: str = "x") -> "UniPoly":
        return UniPoly((), var)

    @staticmethod
    def const(a: RationalLike, var: str = "x") -> "UniPoly":
        return UniPoly((rat(a),), var)

    @staticmethod
    def gen(var: str = "x") -> "UniPoly":
        return UniPoly((0, 1), var)

    # -- basic queries -------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.const(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(k) + other.coeff(k) for k in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-a for a in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = rat(other)
            return UniPoly([a * q for a in self.coeffs], self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = UniPoly.const(1, self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.const(other, self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x: RationalLike) -> Fraction:
        x = rat(x)
        v = Fraction(0)
        for a in reversed(self.coeffs):
            v = v * x + a
        return v

    def eval_float(self, x: float) -> float:
        """Horner in double precision (numeric layers only)."""
        v = 0.0
        for a in reversed(self.coeffs):
            v = v * x + a.numerator / a.denominator
        return v

    def derivative(self) -> "UniPoly":
        return UniPoly([k * a for k, a in enumerate(self.coeffs)][1:], self.var)

    def compose(self, inner: "UniPoly") -> "UniPoly":
        out = UniPoly.zero(inner.var)
        for a in reversed(self.coeffs):
            out = out * inner + a
        return out

    def divmod(self, other: "UniPoly"):
        """Exact rational division with remainder."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = UniPoly.zero(self.var)
        r = self
        d = other.degree
        inv = 1 / other.lc
        while not r.is_zero() and r.degree >= d:
            k = r.degree - d
            t = r.lc * inv
            mono = UniPoly([0] * k + [t], self.var)
            q = q + mono
            r = r - mono * other
        return q, r

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            q = rat(other)
            if q == 0:
                raise ZeroDivisionError
            return UniPoly([a / q for a in self.coeffs], self.var)
        q, r = self.divmod(other)
        if not r.is_zero():
            raise RatPolyError("division is not exact")
        return q

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd via the Euclidean algorithm (exact over Q)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        if a.is_zero():
            return a
        return a * (1 / a.lc)

    def squarefree_part(self) -> "UniPoly":
        if self.is_zero():
            raise ZeroPolynomial("squarefree part of zero")
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self
        return self.exact_div(g)

    def primitive(self) -> "UniPoly":
        """Sign-preserving content normalization: integer coefficients, gcd 1."""
        if self.is_zero():
            return self
        den = 1
        for a in self.coeffs:
            den = den * a.denominator // int_gcd(den, a.denominator)
        ints = [a.numerator * (den // a.denominator) for a in self.coeffs]
        g = 0
        for n in ints:
            g = int_gcd(g, abs(n))
        return UniPoly([Fraction(n, g) for n in ints], self.var)

    def bounds_on(self, lo: Fraction, hi: Fraction):
        """Rational interval enclosure of p([lo, hi]) by interval Horner."""
        blo, bhi = Fraction(0), Fraction(0)
        for a in reversed(self.coeffs):
            cands = (blo * lo, blo * hi, bhi * lo, bhi * hi)
            blo, bhi = min(cands) + a, max(cands) + a
        return blo, bhi

    def __repr__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if k == 0:
                terms.append(str(a))
            elif k == 1:
                terms.append(f"{a}*{self.var}")
            else:
                terms.append(f"{a}*{self.var}^{k}")
        return " + ".join(terms).replace("+ -", "- ")


def poly(coeffs: Sequence[RationalLike], var: str = "x") -> UniPoly:
    return UniPoly(coeffs, var)


def eval_poly(p: UniPoly, x: RationalLike) -> Fraction:
    """Exact value p(x)."""
    return p(x)


def cauchy_root_bound(p: UniPoly) -> Fraction:
    """All real roots of p lie strictly inside [-B, B]."""
    if p.is_zero():
        raise ZeroPolynomial("root bound of zero polynomial")
    if p.degree == 0:
        return Fraction(1)
    m = max(abs(a) for a in p.coeffs[:-1])
    return 1 + m / abs(p.lc)


# ---------------------------------------------------------------------------
# Sturm sequences, counting, isolation
# ---------------------------------------------------------------------------

def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


class SturmSequence:
    """Canonical Sturm chain of (p, p'), remainders normalized by content."""

    __slots__ = ("chain",)

    def __init__(self, p: UniPoly):
        if p.is_zero():
            raise ZeroPolynomial("Sturm sequence of zero polynomial")
        chain = [p]
        if p.degree >= 1:
            chain.append(p.derivative())
            while chain[-1].degree >= 1:
                r = chain[-2] % chain[-1]
                if r.is_zero():
                    break
                # content normalization is positive, hence sign-preserving
                chain.append(-r.primitive())
        object.__setattr__(self, "chain", tuple(chain))

    def __setattr__(self, *a):
        raise AttributeError("SturmSequence is immutable")

    def _variations(self, signs) -> int:
        signs = [s for s in signs if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def variations_at(self, x: Optional[Fraction], at_upper_inf: bool = False) -> int:
        """Sign variations at x; x=None means -oo (or +oo with at_upper_inf)."""
        if x is None:
            if at_upper_inf:
                signs = [_sign(q.lc) for q in self.chain]
            else:
                signs = [_sign(q.lc) * (-1 if q.degree % 2 else 1) for q in self.chain]
        else:
            signs = [_sign(q(x)) for q in self.chain]
        return self._variations(signs)

    def count_half_open(self, a: Optional[Fraction], b: Optional[Fraction]) -> int:
        """Number of distinct real roots in (a, b] (infinite ends allowed)."""
        va = self.variations_at(a, at_upper_inf=False)
        vb = self.variations_at(b, at_upper_inf=True)
        return va - vb


def _has_root_in(p: UniPoly, iv: Interval) -> bool:
    """True iff p (any multiplicities) has a real root in iv."""
    if p.is_zero():
        return True
    if p.degree == 0:
        return False
    return sturm_count(p.squarefree_part(), iv, _checked=True) > 0


def sturm_count(p: UniPoly, iv: Interval, _checked: bool = False) -> int:
    """Exact number of distinct real roots of p in iv.

    Requires p squarefree on iv; raises NotSquarefree when gcd(p, p') has a
    root there (callers deflate repeated roots first).
    """
    if p.is_zero():
        raise ZeroPolynomial("sturm_count of zero polynomial")
    if p.degree == 0:
        return 0
    if not _checked:
        g = p.gcd(p.derivative())
        if g.degree >= 1 and _has_root_in(g, iv):
            raise NotSquarefree(f"repeated root inside {iv}")
        p = p.squarefree_part()
    if iv.is_point():
        return 1 if p(iv.lower) == 0 else 0
    seq = SturmSequence(p)
    n = seq.count_half_open(iv.lower, iv.upper)
    # (a, b] semantics: adjust the two finite endpoints for openness
    if iv.upper is not None and iv.upper_open and p(iv.upper) == 0:
        n -= 1
    if iv.lower is not None and not iv.lower_open and p(iv.lower) == 0:
        n += 1
    return n


def isolate_roots(p: UniPoly, iv: Interval) -> list:
    """Disjoint rational-endpoint intervals, each holding exactly one root.

    The union covers every real root of p in iv; the polynomial must be
    squarefree there.  Exact rational roots come back as closed point
    intervals, all others as open intervals with dyadic-refined endpoints.
    """
    if p.is_zero():
        raise ZeroPolynomial("isolate_roots of zero polynomial")
    g = p.gcd(p.derivative())
    if g.degree >= 1 and _has_root_in(g, iv):
        raise NotSquarefree(f"repeated root inside {iv}")
    p = p.squarefree_part()
    if p.degree == 0:
        return []
    seq = SturmSequence(p)

    bound = cauchy_root_bound(p)
    lo = -bound if iv.lower is None else max(iv.lower, -bound)
    hi = bound if iv.upper is None else min(iv.upper, bound)
    if lo > hi:
        return []

    out = []
    # roots sitting exactly on closed finite endpoints
    if iv.lower is not None and not iv.lower_open and p(iv.lower) == 0:
        out.append(Interval.point(iv.lower))
    if iv.upper is not None and not iv.upper_open and p(iv.upper) == 0 and iv.upper != iv.lower:
        out.append(Interval.point(iv.upper))
    if lo >= hi:
        return sorted(out, key=lambda j: j.lower)

    def open_count(a: Fraction, b: Fraction) -> int:
        n = seq.count_half_open(a, b)
        if p(b) == 0:
            n -= 1
        return n

    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = open_count(a, b)
        if n == 0:
            continue
        if n == 1:
            out.append(Interval(a, b))
            continue
        m = (a + b) / 2
        if p(m) == 0:
            out.append(Interval.point(m))
        stack.append((a, m))
        stack.append((m, b))
    out.sort(key=lambda j: j.lower)
    return out


def refine_root(p: UniPoly, iv: Interval, tol: RationalLike) -> Fraction:
    """Rational x within tol of the unique simple root in iv, by bisection."""
    tol = rat(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if iv.is_point():
        return iv.lower
    if iv.lower is None or iv.upper is None:
        raise ValueError("refine_root needs a bounded isolating interval")
    a, b = iv.lower, iv.upper
    sa, sb = _sign(p(a)), _sign(p(b))
    if sa == 0:
        return a
    if sb == 0:
        return b
    if sa == sb:
        # endpoints agree in sign: legal only if a root still lies inside
        # (even local geometry); shrink by Sturm bisection until a sign
        # change appears, or report the bracket as root-free.
        psf = p.squarefree_part()
        seq = SturmSequence(psf)
        for _ in range(4 * 64):
            inside = seq.count_half_open(a, b) - (1 if psf(b) == 0 else 0)
            if inside == 0:
                raise NoSignChange(f"no sign change of {p} across {iv}")
            m = (a + b) / 2
            sm = _sign(p(m))
            if sm == 0:
                return m
            if sm != sa:
                b, sb = m, sm
                break
            # keep the half that still contains the root
            if seq.count_half_open(a, m) - (1 if psf(m) == 0 else 0) > 0:
                b, sb = m, sm
            else:
                a, sa = m, sm
        if sa == sb:
            raise NoSignChange(f"no sign change of {p} across {iv}")
    while b - a > 2 * tol:
        m = (a + b) / 2
        sm = _sign(p(m))
        if sm == 0:
            return m
        if sm == sa:
            a = m
        else:
            b = m
    return (a + b) / 2


# ---------------------------------------------------------------------------
# two-variable polynomials (sparse)
# ---------------------------------------------------------------------------

class BiPoly:
    """Sparse polynomial in two variables over Q.

    Coefficients are keyed by exponent pairs (i, j) for vars (a, b); zero
    coefficients are never stored.
    """

    __slots__ = ("coeffs", "vars")

    def __init__(self, coeffs: dict, vars: tuple = ("a", "b")):
        clean = {}
        for (i, j), v in coeffs.items():
            v = rat(v)
            if v != 0:
                clean[(int(i), int(j))] = v
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "vars", tuple(vars))

    def __setattr__(self, *a):
        raise AttributeError("BiPoly is immutable")

    @staticmethod
    def const(v: RationalLike, vars: tuple = ("a", "b")) -> "BiPoly":
        return BiPoly({(0, 0): rat(v)}, vars)

    @staticmethod
    def gens(vars: tuple = ("a", "b")):
        return (BiPoly({(1, 0): 1}, vars), BiPoly({(0, 1): 1}, vars))

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self.coeffs)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise RatPolyError("not a constant")
        return self.coeffs.get((0, 0), Fraction(0))

    def degree(self, var: str) -> int:
        if not self.coeffs:
            return -1
        k = self.vars.index(var)
        return max(key[k] for key in self.coeffs)

    def total_degree(self) -> int:
        if not self.coeffs:
            return -1
        return max(i + j for i, j in self.coeffs)

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.const(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return BiPoly(out, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.coeffs.items()}, self.vars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = rat(other)
            return BiPoly({k: v * q for k, v in self.coeffs.items()}, self.vars)
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = {}
        for (i1, j1), v1 in self.coeffs.items():
            for (i2, j2), v2 in other.coeffs.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, Fraction(0)) + v1 * v2
        return BiPoly(out, self.vars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = BiPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other, self.vars)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def eval(self, a_val: RationalLike, b_val: RationalLike) -> Fraction:
        a_val, b_val = rat(a_val), rat(b_val)
        total = Fraction(0)
        for (i, j), v in self.coeffs.items():
            total += v * a_val**i * b_val**j
        return total

    def eval_partial(self, var: str, value: RationalLike) -> UniPoly:
        """Substitute one variable by a rational; UniPoly in the other."""
        value = rat(value)
        k = self.vars.index(var)
        other_var = self.vars[1 - k]
        acc = {}
        for key, v in self.coeffs.items():
            e_sub, e_keep = key[k], key[1 - k]
            acc[e_keep] = acc.get(e_keep, Fraction(0)) + v * value**e_sub
        n = max(acc) + 1 if acc else 0
        return UniPoly([acc.get(d, Fraction(0)) for d in range(n)], other_var)

    def substitute(self, var: str, replacement: UniPoly) -> UniPoly:
        """Substitute `var` by a polynomial in the *other* variable."""
        k = self.vars.index(var)
        other_var = self.vars[1 - k]
        out = UniPoly.zero(other_var)
        for key, v in self.coeffs.items():
            e_sub, e_keep = key[k], key[1 - k]
            term = replacement**e_sub * v
            out = out + term * UniPoly.gen(other_var) ** e_keep
        return out

    def derivative(self, var: str) -> "BiPoly":
        k = self.vars.index(var)
        out = {}
        for key, v in self.coeffs.items():
            e = key[k]
            if e == 0:
                continue
            nk = (key[0] - 1, key[1]) if k == 0 else (key[0], key[1] - 1)
            out[nk] = out.get(nk, Fraction(0)) + v * e
        return BiPoly(out, self.vars)

    def as_coeff_list(self, var: str) -> list:
        """Coefficient list in `var` (low first); entries are UniPoly."""
        k = self.vars.index(var)
        other_var = self.vars[1 - k]
        if not self.coeffs:
            return []
        n = self.degree(var)
        buckets = [dict() for _ in range(n + 1)]
        for key, v in self.coeffs.items():
            buckets[key[k]][key[1 - k]] = v
        out = []
        for d in range(n + 1):
            acc = buckets[d]
            m = max(acc) + 1 if acc else 0
            out.append(UniPoly([acc.get(t, Fraction(0)) for t in range(m)], other_var))
        return out

    @staticmethod
    def from_coeff_list(coeffs: Sequence[UniPoly], var: str, other_var: str) -> "BiPoly":
        """Inverse of as_coeff_list; result vars are ordered (var, other_var)."""
        out = {}
        for d, p in enumerate(coeffs):
            for t, v in enumerate(p.coeffs):
                if v:
                    out[(d, t)] = v
        return BiPoly(out, (var, other_var))

    def exact_div(self, other) -> "BiPoly":
        """Exact division by repeated lex leading-term cancellation."""
        if isinstance(other, (int, Fraction)):
            q = rat(other)
            if q == 0:
                raise ZeroDivisionError
            return BiPoly({k: v / q for k, v in self.coeffs.items()}, self.vars)
        if other.is_zero():
            raise ZeroDivisionError
        rem = dict(self.coeffs)
        ok = max(other.coeffs)  # lex-leading key of the divisor
        ov = other.coeffs[ok]
        quot = {}
        while rem:
            rk = max(rem)
            if rk[0] < ok[0] or rk[1] < ok[1]:
                raise RatPolyError("division is not exact")
            qk = (rk[0] - ok[0], rk[1] - ok[1])
            qv = rem[rk] / ov
            quot[qk] = qv
            for k2, v2 in other.coeffs.items():
                tk = (qk[0] + k2[0], qk[1] + k2[1])
                nv = rem.get(tk, Fraction(0)) - qv * v2
                if nv == 0:
                    rem.pop(tk, None)
                else:
                    rem[tk] = nv
        return BiPoly(quot, self.vars)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        a, b = self.vars
        parts = []
        for (i, j), v in sorted(self.coeffs.items()):
            t = str(v)
            if i:
                t += f"*{a}^{i}" if i > 1 else f"*{a}"
            if j:
                t += f"*{b}^{j}" if j > 1 else f"*{b}"
            parts.append(t)
        return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# resultants and discriminants (generic over Fraction / UniPoly / BiPoly)
# ---------------------------------------------------------------------------

def _e_is_zero(e) -> bool:
    if isinstance(e, (int, Fraction)):
        return e == 0
    return e.is_zero()


def _e_divexact(a, b):
    if isinstance(a, (int, Fraction)):
        if isinstance(b, (int, Fraction)):
            return Fraction(a) / Fraction(b)
        raise RatPolyError("cannot divide scalar by polynomial")
    return a.exact_div(b)


def _lp_strip(A):
    A = list(A)
    while A and _e_is_zero(A[-1]):
        A.pop()
    return A


def _lp_sub(A, B):
    n = max(len(A), len(B))
    out = []
    for k in range(n):
        a = A[k] if k < len(A) else 0
        b = B[k] if k < len(B) else 0
        if isinstance(a, int) and not isinstance(b, int):
            a = b * 0
        if isinstance(b, int) and not isinstance(a, int):
            b = a * 0
        out.append(a - b)
    return _lp_strip(out)


def _lp_scale(A, e):
    return [a * e for a in A]


def _prem(A, B):
    """Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A  mod  B."""
    dA, dB = len(A) - 1, len(B) - 1
    lcB = B[-1]
    r = list(A)
    e = dA - dB + 1
    while r and (len(r) - 1) >= dB:
        shift = len(r) - 1 - dB
        lr = r[-1]
        r = _lp_sub(_lp_scale(r, lcB), [0] * shift + _lp_scale(B, lr))
        e -= 1
    # pad the deficit so the result equals lcB^(dA-dB+1) * A mod B exactly
    for _ in range(e):
        r = _lp_scale(r, lcB)
    return _lp_strip(r)


def resultant_coeff_lists(A, B):
    """Resultant of two polynomials given as coefficient lists (low first).

    Entries may be Fraction/int, UniPoly, or BiPoly (one consistent ring).
    Computed with the fraction-free subresultant PRS; matches the Sylvester
    determinant with the A-block first.
    """
    A = _lp_strip(list(A))
    B = _lp_strip(list(B))
    if not A or not B:
        raise ZeroPolynomial("resultant of the zero polynomial")

    def one_like(e):
        if isinstance(e, (int, Fraction)):
            return Fraction(1)
        if isinstance(e, UniPoly):
            return UniPoly.const(1, e.var)
        return BiPoly.const(1, e.vars)

    def zero_like(e):
        return one_like(e) * 0

    sample = next((e for e in A + B if not isinstance(e, (int, Fraction))), Fraction(1))
    one = one_like(sample)
    if not isinstance(sample, Fraction):
        A = [one * e if isinstance(e, (int, Fraction)) else e for e in A]
        B = [one * e if isinstance(e, (int, Fraction)) else e for e in B]
    dA, dB = len(A) - 1, len(B) - 1
    if dA == 0 and dB == 0:
        return one
    if dA == 0:
        return A[0] ** dB if not isinstance(A[0], int) else Fraction(A[0]) ** dB
    if dB == 0:
        return B[0] ** dA if not isinstance(B[0], int) else Fraction(B[0]) ** dA

    sign = 1
    if dA < dB:
        A, B = B, A
        dA, dB = dB, dA
        if (dA * dB) % 2:
            sign = -sign

    num = one
    den = one
    g = one
    h = one
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        delta = dA - dB
        Rhat = _prem(A, B)
        if not Rhat:
            return zero_like(one)
        k = len(Rhat) - 1
        lcB = B[-1]
        if (dA * dB) % 2:
            sign = -sign
        num = num * lcB ** (dA - k)
        den = den * lcB ** ((delta + 1) * dB)
        divisor = g * h**delta
        Rtilde = [_e_divexact(r, divisor) for r in Rhat]
        num = num * divisor**dB
        A, B = B, Rtilde
        g = lcB
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = _e_divexact(g**delta, h ** (delta - 1))
        if len(B) - 1 == 0:
            dA = len(A) - 1
            total = num * B[0] ** dA
            res = _e_divexact(total, den)
            return res * sign if sign < 0 else res


def resultant(p: UniPoly, q: UniPoly) -> Fraction:
    """Res(p, q) over Q (Sylvester convention, p-block first)."""
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial")
    out = resultant_coeff_lists(list(p.coeffs), list(q.coeffs))
    return out if isinstance(out, Fraction) else Fraction(out)


def resultant_bivariate(p: BiPoly, q: BiPoly, var: str) -> UniPoly:
    """Res_var(p, q) for BiPoly inputs; result is a UniPoly in the other var."""
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial")
    A = p.as_coeff_list(var)
    B = q.as_coeff_list(var)
    out = resultant_coeff_lists(A, B)
    if isinstance(out, UniPoly):
        return out
    other = p.vars[1 - p.vars.index(var)]
    return UniPoly.const(out, other)


def _disc_sign(n: int) -> int:
    return -1 if (n * (n - 1) // 2) % 2 else 1


def discriminant(p: UniPoly) -> Fraction:
    """Dis(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p); needs deg >= 2."""
    n = p.degree
    if n < 2:
        raise DegreeTooLow("discriminant needs degree >= 2")
    r = resultant(p, p.derivative())
    return _disc_sign(n) * r / p.lc


def discriminant_bivariate(p: BiPoly, var: str) -> UniPoly:
    n = p.degree(var)
    if n < 2:
        raise DegreeTooLow("discriminant needs degree >= 2")
    A = p.as_coeff_list(var)
    r = resultant_coeff_lists(A, _lp_strip([q * e for e, q in enumerate(A)][1:]))
    lc = A[-1]
    if isinstance(r, Fraction):
        other = p.vars[1 - p.vars.index(var)]
        r = UniPoly.const(r, other)
    out = r.exact_div(lc)
    return out * _disc_sign(n)


def discriminant_coeff_lists(A):
    """Discriminant of a coefficient-list polynomial over a polynomial ring."""
    A = _lp_strip(list(A))
    n = len(A) - 1
    if n < 2:
        raise DegreeTooLow("discriminant needs degree >= 2")
    dA = _lp_strip([a * e for e, a in enumerate(A)][1:])
    r = resultant_coeff_lists(A, dA)
    out = _e_divexact(r, A[-1])
    return out * _disc_sign(n)
