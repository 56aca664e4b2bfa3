"""Exact integer Laurent polynomials in one variable t.

This is the universal value type of the package: disk polynomials, knot
polynomials, half-polynomials and Alexander matrix entries are all
``LaurentPoly`` values.  Everything is integer arithmetic; there is no
floating point anywhere.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence


@dataclass(frozen=True)
class LaurentPoly:
    """An integer Laurent polynomial, stored as (min_deg, dense coefficients).

    ``coeffs[i]`` is the coefficient of ``t**(min_deg + i)``.  The first and
    last coefficients are nonzero except for the zero polynomial, which is
    canonically ``LaurentPoly(0, ())``.
    """

    min_deg: int = 0
    coeffs: tuple[int, ...] = field(default=())

    def __init__(self, min_deg: int = 0, coeffs: Sequence[int] = ()):
        lo, hi = 0, len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
            min_deg += 1
        while lo < hi and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            min_deg = 0
        object.__setattr__(self, "min_deg", min_deg)
        object.__setattr__(self, "coeffs", tuple(coeffs[lo:hi]))

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        """True for +-t**k."""
        return len(self.coeffs) == 1 and self.coeffs[0] in (1, -1)

    @property
    def max_deg(self) -> int:
        if self.is_zero():
            return 0
        return self.min_deg + len(self.coeffs) - 1

    def degree_span(self) -> int:
        """max_deg - min_deg; the degree of the canonical representative."""
        return 0 if self.is_zero() else len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        """Coefficient of t**k."""
        i = k - self.min_deg
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_deg, other.min_deg)
        hi = max(self.max_deg, other.max_deg)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.min_deg + i - lo] += c
        for i, c in enumerate(other.coeffs):
            out[other.min_deg + i - lo] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.min_deg, tuple(-c for c in self.coeffs))

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return _coerce(other) + (-self)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for j, d in enumerate(other.coeffs):
                out[i + j] += c * d
        return LaurentPoly(self.min_deg + other.min_deg, out)

    __rmul__ = __mul__

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t**k."""
        if self.is_zero():
            return self
        return LaurentPoly(self.min_deg + k, self.coeffs)

    # -- display -----------------------------------------------------------

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


ZERO = LaurentPoly(0, ())
ONE = LaurentPoly(0, (1,))
T = LaurentPoly(1, (1,))


def _coerce(x: LaurentPoly | int) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly(0, (x,))
    raise TypeError(f"cannot coerce {x!r} to LaurentPoly")


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def reciprocal(p: LaurentPoly) -> LaurentPoly:
    """Substitute t**-1 for t; an involution."""
    if p.is_zero():
        return p
    return LaurentPoly(-p.max_deg, tuple(reversed(p.coeffs)))


def canonicalize(p: LaurentPoly) -> LaurentPoly:
    """The canonical representative of p modulo units +-t**k.

    The representative has min_deg 0, nonzero constant coefficient and a
    positive leading coefficient.  Note the value at 1 is *not* normalized;
    for instance 2 - 5t + 2t^2 is canonical despite evaluating to -1 at 1.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no canonical representative")
    coeffs = p.coeffs
    if coeffs[-1] < 0:
        coeffs = tuple(-c for c in coeffs)
    return LaurentPoly(0, coeffs)


def is_canonical(p: LaurentPoly) -> bool:
    return not p.is_zero() and p.min_deg == 0 and p.coeffs[-1] > 0


def mul_reciprocal(f: LaurentPoly) -> LaurentPoly:
    """canonicalize(f(t) * f(t^-1)); always palindromic."""
    if f.is_zero():
        raise ValueError("mul_reciprocal requires a nonzero polynomial")
    return canonicalize(f * reciprocal(f))


def is_palindromic(p: LaurentPoly) -> bool:
    """True when p equals its reciprocal up to a unit."""
    if p.is_zero():
        return False
    return canonicalize(p) == canonicalize(reciprocal(p))


def evaluate(p: LaurentPoly, x: int) -> Fraction | int:
    """Exact value of p at the integer x.

    x = 0 is only rejected when p genuinely involves negative powers of t.
    """
    if x == 0:
        if p.min_deg < 0:
            raise ZeroDivisionError("cannot evaluate negative powers of t at 0")
        return p.coeff(0)
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    val = Fraction(acc) * Fraction(x) ** p.min_deg if p.min_deg else Fraction(acc)
    return int(val) if val.denominator == 1 else val


def determinant(p: LaurentPoly) -> int:
    """|p(-1)|, the knot determinant when p is an Alexander polynomial."""
    return abs(int(evaluate(p, -1)))


# -- gcd over Z[t] up to units ----------------------------------------------


def _content(coeffs: Sequence[int]) -> int:
    return math.gcd(*coeffs) if coeffs else 0


def _primitive(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    c = _content(coeffs)
    return tuple(a // c for a in coeffs)


def _pseudo_rem(f: list[int], g: list[int]) -> list[int]:
    """Pseudo-remainder lc(g)^(deg f - deg g + 1) * f mod g.

    Coefficient lists are dense, low degree first.  The full power of lc(g)
    is applied even when intermediate leading terms vanish, as required for
    the exact divisions of the subresultant sequence.
    """
    f = list(f)
    dg = len(g) - 1
    lg = g[-1]
    steps = len(f) - len(g) + 1
    while len(f) - 1 >= dg:
        shift = len(f) - 1 - dg
        lf = f[-1]
        f = [lg * c for c in f]
        steps -= 1
        for i, c in enumerate(g):
            f[shift + i] -= lf * c
        f.pop()
        while f and f[-1] == 0:
            f.pop()
    return [c * lg**steps for c in f] if steps > 0 else f


def gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Canonical gcd of p and q in Z[t, t^-1], via the subresultant
    pseudo-remainder sequence on primitive parts.

    The result divides both inputs exactly and is canonical; gcd with 0
    returns the canonical form of the other argument.
    """
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if p.is_zero():
        return canonicalize(q)
    if q.is_zero():
        return canonicalize(p)

    cont = math.gcd(_content(p.coeffs), _content(q.coeffs))
    a = list(_primitive(p.coeffs))
    b = list(_primitive(q.coeffs))
    if len(a) < len(b):
        a, b = b, a

    g_, h_ = 1, 1
    while True:
        if not b:
            result = a
            break
        if len(b) == 1:
            result = [1]
            break
        d = len(a) - len(b)
        r = _pseudo_rem(a, b)
        a, b = b, [c // (g_ * h_**d) for c in r]
        g_ = a[-1]
        h_ = g_**d // h_ ** (d - 1) if d > 0 else h_
    result = list(_primitive(tuple(result)))
    return canonicalize(LaurentPoly(0, [cont * c for c in result]))


def divides(d: LaurentPoly, p: LaurentPoly) -> bool:
    """Exact divisibility in Z[t, t^-1] (up to units)."""
    if p.is_zero():
        return True
    if d.is_zero():
        return False
    try:
        div_exact(p, d)
        return True
    except ArithmeticError:
        return False


def div_exact(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Exact quotient p / d in Z[t, t^-1]; raises ArithmeticError otherwise."""
    if d.is_zero():
        raise ArithmeticError("division by zero polynomial")
    if p.is_zero():
        return ZERO
    rem = list(p.coeffs)
    div = d.coeffs
    if len(rem) < len(div):
        raise ArithmeticError("not divisible")
    out = [0] * (len(rem) - len(div) + 1)
    for k in range(len(out) - 1, -1, -1):
        head = rem[k + len(div) - 1]
        if head % div[-1] != 0:
            raise ArithmeticError("not divisible")
        q = head // div[-1]
        out[k] = q
        for i, c in enumerate(div):
            rem[k + i] -= q * c
    if any(rem):
        raise ArithmeticError("not divisible")
    return LaurentPoly(p.min_deg - d.min_deg, out)


# -- half-polynomial search ---------------------------------------------------


def half_polynomials(delta: LaurentPoly) -> set[LaurentPoly]:
    """All half-polynomials of a palindromic Alexander polynomial.

    Finds every degree-d integer polynomial f with f(1) = 1 and
    canonicalize(f(t) f(1/t)) = canonicalize(delta), where 2d is the degree
    of delta.  Results are deduplicated modulo the substitution t -> 1/t by
    keeping the lexicographically smaller coefficient vector of f versus its
    degree-d reciprocal.  Returns the empty set when delta does not factor.

    The search is a bounded exhaustive sweep over coefficient vectors: the
    extreme coefficients run over divisor pairs of the constant term, f(1)
    pins one linear relation, and the convolution equations of f * rev(f)
    determine the rest outside-in; every candidate is verified by an exact
    product before being accepted.
    """
    if delta.is_zero():
        raise ValueError("zero polynomial has no half-polynomials")
    delta = canonicalize(delta)
    if not is_palindromic(delta):
        raise ValueError("half_polynomials requires a palindromic polynomial")
    span = delta.degree_span()
    if span % 2 != 0:
        raise ValueError("palindromic Alexander polynomials have even degree")
    eps = int(evaluate(delta, 1))
    if abs(eps) != 1:
        raise ValueError("expected |delta(1)| = 1")
    d = span // 2

    # f(t) f(1/t) = eps * t^-d * delta(t) =: q, a palindromic Laurent
    # polynomial with q(1) = 1.  q[k] below is the coefficient of t^k.
    q = [eps * c for c in delta.coeffs]  # index k+d

    if d == 0:
        return {ONE}

    bound = 1 + max(abs(c) for c in delta.coeffs)
    found: set[LaurentPoly] = set()

    def finish(f: list[int]) -> None:
        if f[0] == 0 or f[d] == 0:
            return
        if sum(f) not in (1, -1):
            return
        cand = LaurentPoly(0, f)
        if canonicalize(cand * reciprocal(cand)) == delta:
            found.add(_half_canonical(cand))

    def place(f: list[int], j: int) -> None:
        # Coefficients f[0..j-1] and f[d-j+1..d] are already chosen.
        lo, hi = j, d - j
        known = q[d - j + d] - sum(f[i + (d - j)] * f[i] for i in range(1, j))
        # known = f[0]*f[d-j] + f[d]*f[j] must hold.
        if lo > hi:
            finish(f)
            return
        if lo == hi:
            # Single middle coefficient, determined by the f(1) constraint.
            rest = sum(f) - f[lo]
            for s in (1, -1):
                f[lo] = s - rest
                if abs(f[lo]) <= bound:
                    finish(f)
            f[lo] = 0
            return
        if hi - lo == 1:
            # Two unknowns; solve {convolution, f(1) = +-1} exactly.
            rest = sum(f) - f[lo] - f[hi]
            for s in (1, -1):
                pair_sum = s - rest
                denom = f[0] - f[d]
                if denom != 0:
                    num = known - f[d] * pair_sum
                    if num % denom:
                        continue
                    f[hi] = num // denom
                    f[lo] = pair_sum - f[hi]
                    if abs(f[lo]) <= bound and abs(f[hi]) <= bound:
                        finish(f)
                    f[lo] = f[hi] = 0
                else:
                    for v in range(-bound, bound + 1):
                        rem = known - f[d] * v
                        if rem % f[0]:
                            continue
                        f[lo], f[hi] = v, rem // f[0]
                        if abs(f[hi]) <= bound and f[lo] + f[hi] == pair_sum:
                            finish(f)
                    f[lo] = f[hi] = 0
            return
        # Enumerate f[lo], solve f[hi] from the convolution equation.
        for v in range(-bound, bound + 1):
            rem = known - f[d] * v
            if rem % f[0]:
                continue
            w = rem // f[0]
            if abs(w) > bound:
                continue
            f[lo], f[hi] = v, w
            place(f, j + 1)
        f[lo] = f[hi] = 0

    corner = q[2 * d]  # = f[0] * f[d]
    for f0 in _divisors(abs(corner)):
        for s0 in (1, -1):
            a = s0 * f0
            if corner % a:
                continue
            f = [0] * (d + 1)
            f[0], f[d] = a, corner // a
            place(f, 1)
    return found


def _half_canonical(f: LaurentPoly) -> LaurentPoly:
    """Canonical half-polynomial: min_deg 0, f(1) = +1, and the
    lexicographically smaller of f versus its degree-reversed form."""
    coeffs = f.coeffs
    if sum(coeffs) == -1:
        coeffs = tuple(-c for c in coeffs)
    rev = tuple(reversed(coeffs))
    return LaurentPoly(0, min(coeffs, rev))


def half_canonical(f: LaurentPoly) -> LaurentPoly:
    """Public canonicalizer for half-polynomials (f(1) must be +-1)."""
    if f.is_zero() or sum(f.coeffs) not in (1, -1):
        raise ValueError("half-polynomials evaluate to +-1 at t = 1")
    return _half_canonical(f)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    if n == 0:
        return []
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


# -- text and JSON forms ------------------------------------------------------

_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<coeff>\d+)?\s*(?P<var>t)?\s*(?:\^\s*(?P<exp>-?\d+))?\s*"
)


def parse_poly(text: str) -> LaurentPoly:
    """Parse the human polynomial form, e.g. "4 - 20t + 33t^2 - 20t^3 + 4t^4".

    Coefficients may be implicit (t^2 means 1t^2), exponents may be negative
    (2t^-1), and whitespace is insignificant.  A lone "0" is the zero
    polynomial.
    """
    s = text.replace("−", "-").replace("–", "-").strip()
    if not s:
        raise ValueError("empty polynomial string")
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
        sign, coeff, var, exp = m.group("sign", "coeff", "var", "exp")
        if coeff is None and var is None:
            raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
        if sign is None and not first:
            raise ValueError(f"missing +/- before {s[m.start():]!r}")
        if exp is not None and var is None:
            raise ValueError("exponent without variable")
        c = int(coeff) if coeff is not None else 1
        if sign == "-":
            c = -c
        k = 0 if var is None else (1 if exp is None else int(exp))
        terms[k] = terms.get(k, 0) + c
        pos = m.end()
        first = False
    if not terms:
        raise ValueError("empty polynomial string")
    lo, hi = min(terms), max(terms)
    return LaurentPoly(lo, [terms.get(k, 0) for k in range(lo, hi + 1)])


def format_poly(p: LaurentPoly) -> str:
    """Human form matching parse_poly; round-trips exactly."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        k = p.min_deg + i
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = "t" if k == 1 else f"t^{k}"
            body = var if mag == 1 else f"{mag}{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def to_json(p: LaurentPoly) -> dict:
    """Machine form: {"min_deg": int, "coeffs": [int, ...]}."""
    return {"min_deg": p.min_deg, "coeffs": list(p.coeffs)}


def from_json(obj: dict) -> LaurentPoly:
    return LaurentPoly(int(obj["min_deg"]), [int(c) for c in obj["coeffs"]])
