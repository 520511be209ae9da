"""Exact arithmetic in the rational function field Q(q).

A value is a quotient num/den of integer-coefficient polynomials in q, kept in
canonical form: den nonzero with positive leading coefficient, gcd(num, den) = 1
(polynomial gcd and integer content both trivial), and 0 represented as 0/1.
Equality is canonical-form equality, so values hash and compare reliably.

Laurent polynomials are not a separate type; they are the values whose canonical
denominator is a power of q.  Subring membership is decided through valuations:
f lies in A_0 (regular at q = 0) iff ord0(f) >= 0, in A_inf iff ordinf(f) >= 0,
and in A_Q = Q[q, q^-1] iff the denominator is a monomial.

Polynomials are dense integer tuples indexed by exponent with a nonzero last
entry; () is the zero polynomial.  All helpers below that start with _p operate
on that representation.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

INF = float("inf")  # sentinel for the valuation of 0


class NotInA0(ArithmeticError):
    """Raised when ev0 is applied to a function with a pole at q = 0."""


# ---------------------------------------------------------------------------
# integer polynomial helpers
# ---------------------------------------------------------------------------

def _pstrip(cs):
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _pstrip(out)


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _pstrip(out)


def _pshift(a, k):
    # multiply by q^k, k >= 0
    if not a or k == 0:
        return a
    return (0,) * k + a


def _pval(a):
    for i, c in enumerate(a):
        if c:
            return i
    return None


def _pcontent(a):
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def _pdiv_exact(a, b):
    """Exact division in Z[q]; b must divide a."""
    if not a:
        return ()
    q = [0] * (len(a) - len(b) + 1)
    rem = list(a)
    lb = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = rem[i + len(b) - 1]
        if c % lb:
            raise ArithmeticError("inexact polynomial division")
        c //= lb
        q[i] = c
        if c:
            for j, cb in enumerate(b):
                rem[i + j] -= c * cb
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return _pstrip(q)


def _prem(a, b):
    """Pseudo-remainder of a by b (both nonzero, deg a >= deg b allowed arbitrary)."""
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return a
    lb = b[-1]
    rem = list(a)
    for i in range(da - db, -1, -1):
        lead = rem[i + db]
        if lead:
            for k in range(len(rem)):
                rem[k] *= lb
            for j, cb in enumerate(b):
                rem[i + j] -= lead * cb
        # after this step rem has degree < i + db in position i+db
    return _pstrip(rem)


def _pprimitive(a):
    c = _pcontent(a)
    if c in (0, 1):
        return a
    return tuple(x // c for x in a)


def _pgcd(a, b):
    """Primitive-PRS gcd in Z[q]: q-power, integer content and primitive part."""
    if not a:
        g = b
    elif not b:
        g = a
    else:
        va, vb = _pval(a), _pval(b)
        v = min(va, vb)
        c = math.gcd(_pcontent(a), _pcontent(b))
        a = _pprimitive(a[va:])
        b = _pprimitive(b[vb:])
        while b:
            r = _prem(a, b)
            a, b = b, _pprimitive(r)
        if a[-1] < 0:
            a = _pneg(a)
        g = _pshift(tuple(x * c for x in a), v)
    if g and g[-1] < 0:
        g = _pneg(g)
    return g


def _pmonomial(a):
    """Return (c, k) if a = c*q^k with c != 0, else None."""
    v = _pval(a)
    if v is not None and v == len(a) - 1:
        return a[-1], v
    return None


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coef>\d+)\s*\*?\s*)?(?:(?P<q>q)(?:\^(?P<exp>-?\d+))?)?"
)


def _parse_laurent(text):
    """Parse a sum of integer-coefficient q-terms into {exponent: int}."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1].strip()
    if not text:
        raise ValueError("empty polynomial text")
    out: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at offset {pos}")
        sign, coef, qpart, exp = m.group("sign"), m.group("coef"), m.group("q"), m.group("exp")
        if sign is None and not first:
            raise ValueError(f"missing sign in {text!r} at offset {pos}")
        if coef is None and qpart is None:
            raise ValueError(f"empty term in {text!r} at offset {pos}")
        c = int(coef) if coef is not None else 1
        if sign == "-":
            c = -c
        e = 0
        if qpart is not None:
            e = int(exp) if exp is not None else 1
        out[e] = out.get(e, 0) + c
        pos = m.end()
        first = False
    return out


class RatFunc:
    """An element of Q(q) in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        if isinstance(num, int):
            num = (num,) if num else ()
        if isinstance(den, int):
            den = (den,) if den else ()
        num = _pstrip(num)
        den = _pstrip(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = (), (1,)
            return
        # strip the common power of q
        vn, vd = _pval(num), _pval(den)
        v = min(vn, vd)
        if v:
            num = num[v:]
            den = den[v:]
            vn -= v
            vd -= v
        mono = _pmonomial(den)
        if mono is not None:
            c, _ = mono
            g = math.gcd(_pcontent(num), abs(c))
            if c < 0:
                g = -g
            if g != 1:
                num = tuple(x // g for x in num)
                den = _pshift((c // g,), vd)
        else:
            g = _pgcd(num, den)
            if g != (1,):
                num = _pdiv_exact(num, g)
                den = _pdiv_exact(den, g)
            if den[-1] < 0:
                num = _pneg(num)
                den = _pneg(den)
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_fraction(fr):
        fr = Fraction(fr)
        return RatFunc((fr.numerator,), (fr.denominator,))

    @staticmethod
    def q_power(k):
        """The monomial q^k for any integer k."""
        if k >= 0:
            return RatFunc(_pshift((1,), k))
        return RatFunc((1,), _pshift((1,), -k))

    @staticmethod
    def from_laurent(terms):
        """Build from {exponent: coefficient}, coefficients int or Fraction."""
        out = ZERO
        for e, c in terms.items():
            out = out + RatFunc.from_fraction(c) * RatFunc.q_power(e)
        return out

    @staticmethod
    def parse(text):
        """Inverse of render(); accepts 'p(q)' or '(p(q))/(r(q))' forms."""
        text = text.strip()
        depth = 0
        split = None
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "/" and depth == 0:
                split = i
                break
        if split is None:
            terms = _parse_laurent(text)
            return RatFunc.from_laurent(terms)
        numt = _parse_laurent(text[:split])
        dent = _parse_laurent(text[split + 1:])
        return RatFunc.from_laurent(numt) / RatFunc.from_laurent(dent)

    # -- arithmetic --------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        out = object.__new__(RatFunc)
        out.num = _pneg(self.num)
        out.den = self.den
        return out

    def __add__(self, other):
        if isinstance(other, int):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            return RatFunc(_padd(self.num, other.num), self.den)
        return RatFunc(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RatFunc(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        return RatFunc(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero in Q(q)")
        if not self.num:
            return ZERO
        return RatFunc(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        return RatFunc(other) / self

    def __pow__(self, n):
        if n < 0:
            return (ONE / self) ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inv(self):
        return ONE / self

    # -- structure ---------------------------------------------------------

    def bar(self):
        """Substitute q -> q^-1 and renormalize."""
        if not self.num:
            return ZERO
        dn, dd = len(self.num) - 1, len(self.den) - 1
        rn = tuple(reversed(self.num))
        rd = tuple(reversed(self.den))
        if dd >= dn:
            return RatFunc(_pshift(rn, dd - dn), rd)
        return RatFunc(rn, _pshift(rd, dn - dd))

    def ord0(self):
        """Order of vanishing at q = 0 (+inf for 0)."""
        if not self.num:
            return INF
        return _pval(self.num) - _pval(self.den)

    def ordinf(self):
        """Order of vanishing at q = inf (+inf for 0)."""
        if not self.num:
            return INF
        return (len(self.den) - 1) - (len(self.num) - 1)

    def ev0(self):
        """Value at q = 0 as a Fraction; requires ord0 >= 0."""
        o = self.ord0()
        if o is INF or o > 0:
            return Fraction(0)
        if o < 0:
            raise NotInA0(f"{self} has a pole at q = 0")
        v = _pval(self.num)
        return Fraction(self.num[v], self.den[v])

    def is_bar_invariant(self):
        return self == self.bar()

    def laurent(self):
        """Return {exponent: Fraction} if this is a Laurent polynomial, else None."""
        mono = _pmonomial(self.den)
        if mono is None:
            return None
        c, k = mono
        return {i - k: Fraction(x, c) for i, x in enumerate(self.num) if x}

    def positive_part(self):
        """For a Laurent polynomial, the part with strictly positive exponents."""
        terms = self.laurent()
        if terms is None:
            raise ValueError("positive_part requires a Laurent polynomial")
        return RatFunc.from_laurent({e: c for e, c in terms.items() if e > 0})

    # -- rendering ---------------------------------------------------------

    def render(self):
        """Textual form 'p(q)' (Laurent, monic q-power denominator) or '(p)/(r)'."""
        mono = _pmonomial(self.den)
        if mono is not None and mono[0] == 1:
            k = mono[1]
            return _render_terms(
                [(i - k, c) for i, c in enumerate(self.num) if c]
            )
        return "({})/({})".format(
            _render_terms([(i, c) for i, c in enumerate(self.num) if c]),
            _render_terms([(i, c) for i, c in enumerate(self.den) if c]),
        )

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"RatFunc({self.render()!r})"


def _render_terms(terms):
    if not terms:
        return "0"
    terms.sort(key=lambda t: -t[0])
    parts = []
    for e, c in terms:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            qs = "q" if e == 1 else f"q^{e}"
            body = qs if mag == 1 else f"{mag}*{qs}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


ZERO = RatFunc(0)
ONE = RatFunc(1)
Q = RatFunc.q_power(1)


# ---------------------------------------------------------------------------
# q-combinatorics
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def qint(n, s=1):
    """The balanced q-integer [n]_i with q_i = q^s.

    [n] = (q_i^n - q_i^-n)/(q_i - q_i^-1) = q_i^(n-1) + q_i^(n-3) + ... + q_i^(1-n).
    """
    if n < 0 or s < 1:
        raise ValueError("qint requires n >= 0, s >= 1")
    return RatFunc.from_laurent({s * (2 * j - (n - 1)): 1 for j in range(n)})


@lru_cache(maxsize=None)
def qfact(n, s=1):
    """The q-factorial [n]_i!."""
    if n < 0:
        raise ValueError("qfact requires n >= 0")
    out = ONE
    for k in range(2, n + 1):
        out = out * qint(k, s)
    return out


def divided_power_coeff(n, s=1):
    """1/[n]_i!, the coefficient turning x^n into the divided power x^(n)."""
    return ONE / qfact(n, s)


@lru_cache(maxsize=None)
def tau(s, l):
    """tau_il = (1 - q_i^{2l})^{-1} with q_i = q^s."""
    if s < 1 or l < 1:
        raise ValueError("tau requires s, l >= 1")
    return ONE / (ONE - RatFunc.q_power(2 * s * l))


# module-level functional forms of the methods, matching the operation names

def bar(f: RatFunc) -> RatFunc:
    return f.bar()


def ord0(f: RatFunc):
    return f.ord0()


def ordinf(f: RatFunc):
    return f.ordinf()


def ev0(f: RatFunc) -> Fraction:
    return f.ev0()
