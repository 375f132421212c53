"""Exact rational functions in one variable s, where p = s**2.

Polynomials are tuples of Python ints in ascending powers of s with no
trailing zeros; the zero polynomial is the empty tuple.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd

ZERO_POLY: tuple = ()
ONE_POLY: tuple = (1,)


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def pscale(a, c):
    if c == 0:
        return ZERO_POLY
    return tuple(c * x for x in a)


def psub(a, b):
    return padd(a, pscale(b, -1))


def pmul(a, b):
    if not a or not b:
        return ZERO_POLY
    if len(a) == 1:
        return pscale(b, a[0])
    if len(b) == 1:
        return pscale(a, b[0])
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            k = i
            for y in b:
                out[k] += x * y
                k += 1
    return tuple(out)


def pshift(a, k):
    """Multiply by s**k (k >= 0)."""
    if not a:
        return a
    return (0,) * k + a


def pval(a):
    """s-adic valuation."""
    for i, x in enumerate(a):
        if x:
            return i
    raise ZeroDivisionError("valuation of zero polynomial")


def pcontent(a):
    return reduce(gcd, a, 0)


def pprimitive(a):
    """Return (content, primitive part) with the primitive part's leading coefficient positive."""
    c = pcontent(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return 1, a
    return c, tuple(x // c for x in a)


def pderiv(a):
    return _trim(i * a[i] for i in range(1, len(a)))


def _prem(a, b):
    # pseudo-remainder of a by b over the integers
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for i, y in enumerate(b):
            r[i + shift] -= lr * y
        while r and r[-1] == 0:
            r.pop()
    return tuple(r)


def pexactdiv(a, b):
    """Quotient of integer polynomials when b divides a with integral quotient."""
    if not a:
        return ZERO_POLY
    if len(b) == 1:
        if b[0] == 1:
            return a
        out = []
        for x in a:
            q, r = divmod(x, b[0])
            if r:
                raise ArithmeticError("inexact polynomial division")
            out.append(q)
        return tuple(out)
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c, rem = divmod(r[k + db], lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[k] = c
        if c:
            for i, y in enumerate(b):
                r[k + i] -= c * y
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def _synthetic_div(a, r):
    """Quotient of a by (s - r), assuming a(r) == 0."""
    out = [0] * (len(a) - 1)
    acc = 0
    for i in range(len(a) - 1, 0, -1):
        acc = acc * r + a[i]
        out[i - 1] = acc
    return tuple(out)


def _value_at_unit(a, r):
    return sum(a) if r == 1 else sum(a[0::2]) - sum(a[1::2])


def _root_multiplicity(a, r, cap):
    k = 0
    while k < cap and len(a) > 1 and _value_at_unit(a, r) == 0:
        a = _synthetic_div(a, r)
        k += 1
    return k


@lru_cache(maxsize=65536)
def _unit_root_factorization(a):
    """(m1, m-1) when a = c (s-1)^m1 (s+1)^m-1 with a(0) != 0, else None."""
    m1 = _root_multiplicity(a, 1, len(a))
    b = a
    for _ in range(m1):
        b = _synthetic_div(b, 1)
    mm1 = _root_multiplicity(b, -1, len(b))
    for _ in range(mm1):
        b = _synthetic_div(b, -1)
    return (m1, mm1) if len(b) == 1 else None


@lru_cache(maxsize=4096)
def _unit_root_poly(m1, mm1):
    out = ONE_POLY
    for _ in range(m1):
        out = pmul(out, (-1, 1))
    for _ in range(mm1):
        out = pmul(out, (1, 1))
    return out


def pgcd(a, b):
    """Primitive gcd of two integer polynomials, leading coefficient positive."""
    if not a:
        return pprimitive(b)[1] if b else ONE_POLY
    if not b:
        return pprimitive(a)[1]
    va, vb = pval(a), pval(b)
    v = min(va, vb)
    a, b = a[va:], b[vb:]
    if len(a) == 1 or len(b) == 1:
        return pshift(ONE_POLY, v)
    # fast path: denominators here are almost always products of s - 1 and s + 1
    if len(b) > len(a):
        a, b = b, a
    fb = _unit_root_factorization(b)
    if fb is not None:
        m1 = _root_multiplicity(a, 1, fb[0])
        mm1 = _root_multiplicity(a, -1, fb[1])
        return pshift(_unit_root_poly(m1, mm1), v)
    a = pprimitive(a)[1]
    b = pprimitive(b)[1]
    if a == b:
        return pshift(a, v)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a = b
        b = pprimitive(r)[1] if r else ZERO_POLY
        if len(b) == 1:
            return pshift(ONE_POLY, v)
    return pshift(a, v)


def _fraction_poly_to_int(coeffs):
    """Fraction-coefficient polynomial -> (scale, integer primitive polynomial)."""
    coeffs = [Fraction(x) for x in coeffs]
    den = 1
    for x in coeffs:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = _trim(int(x * den) for x in coeffs)
    if not ints:
        return Fraction(0), ZERO_POLY
    c, prim = pprimitive(ints)
    return Fraction(c, den), prim


class RationalFunction:
    """scale * num(s) / den(s) in canonical form.

    num and den are coprime primitive integer polynomials with positive
    leading coefficients; the sign and rational content live in scale.
    Zero is scale 0, num (), den (1,).
    """

    __slots__ = ("scale", "num", "den", "_hash")

    def __init__(self, scale, num, den=ONE_POLY, *, _canonical=False):
        scale = Fraction(scale)
        num = tuple(num)
        den = tuple(den)
        if not _canonical:
            scale, num, den = _canonicalize(scale, num, den)
        self.scale = scale
        self.num = num
        self.den = den
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c):
        c = Fraction(c)
        if c == 0:
            return ZERO
        return cls(c, ONE_POLY, ONE_POLY, _canonical=True)

    @classmethod
    def laurent(cls, terms):
        """From a mapping {power of s: coefficient}; negative powers allowed."""
        terms = {k: Fraction(v) for k, v in terms.items() if v != 0}
        if not terms:
            return ZERO
        lo = min(min(terms), 0)
        hi = max(terms)
        coeffs = [Fraction(0)] * (hi - lo + 1)
        for k, v in terms.items():
            coeffs[k - lo] = v
        scale, num = _fraction_poly_to_int(coeffs)
        return cls(scale, num, pshift(ONE_POLY, -lo))

    @classmethod
    def from_polys(cls, num, den=(1,)):
        """From Fraction-coefficient polynomials (ascending powers of s)."""
        sn, pn = _fraction_poly_to_int(num)
        sd, pd = _fraction_poly_to_int(den)
        if not pd:
            raise ZeroDivisionError("zero denominator")
        return cls(sn / sd, pn, pd)

    # predicates
    def is_zero(self):
        return self.scale == 0

    def __bool__(self):
        return self.scale != 0

    def is_laurent(self):
        return len(self.den) == 0 or all(x == 0 for x in self.den[:-1])

    def key(self):
        return (self.scale, self.num, self.den)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.const(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    # arithmetic
    def __neg__(self):
        if not self:
            return self
        return RationalFunction(-self.scale, self.num, self.den, _canonical=True)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self:
            return other
        if not other:
            return self
        if self.den == other.den:
            n = _combine(self.scale, self.num, other.scale, other.num)
            return RationalFunction(n[0], n[1], self.den)
        g = pgcd(self.den, other.den)
        da = pexactdiv(self.den, g)
        db = pexactdiv(other.den, g)
        s, n = _combine(self.scale, pmul(self.num, db), other.scale, pmul(other.num, da))
        return RationalFunction(s, n, pmul(self.den, db))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0 or not self:
                return ZERO
            return RationalFunction(self.scale * other, self.num, self.den, _canonical=True)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if not self or not other:
            return ZERO
        an, ad, bn, bd = self.num, self.den, other.num, other.den
        if len(bd) > 1 or bd != ONE_POLY:
            g = pgcd(an, bd)
            if g != ONE_POLY:
                an, bd = pexactdiv(an, g), pexactdiv(bd, g)
        if len(ad) > 1 or ad != ONE_POLY:
            g = pgcd(bn, ad)
            if g != ONE_POLY:
                bn, ad = pexactdiv(bn, g), pexactdiv(ad, g)
        return RationalFunction(self.scale * other.scale, pmul(an, bn), pmul(ad, bd), _canonical=True)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero rational function")
        c, den = pprimitive(self.num)
        return RationalFunction(1 / (self.scale * c), self.den, den, _canonical=True)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # calculus
    def d_ds(self):
        if not self:
            return ZERO
        n, d = self.num, self.den
        top = psub(pmul(pderiv(n), d), pmul(n, pderiv(d)))
        return RationalFunction(self.scale, top, pmul(d, d))

    def d_p(self):
        """p d/dp = (s/2) d/ds."""
        return self.d_ds() * RationalFunction(Fraction(1, 2), (0, 1))

    def swap(self):
        """Substitute s -> 1/s."""
        if not self:
            return self
        dn, dd = len(self.num) - 1, len(self.den) - 1
        num = tuple(reversed(self.num))
        den = tuple(reversed(self.den))
        if dn > dd:
            den = pshift(den, dn - dd)
        else:
            num = pshift(num, dd - dn)
        return RationalFunction(self.scale, num, den)

    def subs_s_power(self, k):
        """Substitute s -> s**k for k >= 1."""
        def spread(a):
            out = [0] * ((len(a) - 1) * k + 1)
            for i, x in enumerate(a):
                out[i * k] = x
            return tuple(out)
        if not self:
            return self
        return RationalFunction(self.scale, spread(self.num), spread(self.den))

    def eval(self, s):
        s = Fraction(s)
        n = sum(c * s ** i for i, c in enumerate(self.num))
        d = sum(c * s ** i for i, c in enumerate(self.den))
        return self.scale * n / d

    def laurent_terms(self):
        """{power: Fraction} when the denominator is a power of s."""
        if not self.is_laurent():
            raise ValueError("not a Laurent polynomial")
        v = len(self.den) - 1
        return {i - v: self.scale * c for i, c in enumerate(self.num) if c}

    def taylor(self, n):
        """Coefficients of s^0..s^n for a function regular at s = 0."""
        if not self:
            return [Fraction(0)] * (n + 1)
        if self.den[0] == 0:
            raise ValueError("pole at s = 0")
        d0 = Fraction(self.den[0])
        out = []
        for m in range(n + 1):
            acc = Fraction(self.num[m]) if m < len(self.num) else Fraction(0)
            acc -= sum(self.den[j] * out[m - j] for j in range(1, min(m, len(self.den) - 1) + 1))
            out.append(acc / d0)
        return [self.scale * c for c in out]

    # serialization
    def to_json(self):
        return {"num": list(self.num), "den": list(self.den), "scale": str(self.scale)}

    @classmethod
    def from_json(cls, obj):
        return cls(Fraction(obj["scale"]), obj["num"], obj["den"])

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if not self:
            return "0"
        if self.num == ONE_POLY and self.den == ONE_POLY:
            return str(self.scale)
        n = _poly_str(self.num)
        sc = "" if self.scale == 1 else f"{self.scale}*"
        if self.den == ONE_POLY:
            return f"{sc}({n})" if sc else n
        return f"{sc}({n})/({_poly_str(self.den)})"


def _poly_str(a):
    parts = []
    for i, c in enumerate(a):
        if not c:
            continue
        mon = "" if i == 0 else ("s" if i == 1 else f"s^{i}")
        if mon and abs(c) == 1:
            term = ("-" if c < 0 else "+") + mon
        else:
            term = f"{c:+d}" + (f"*{mon}" if mon else "")
        parts.append(term)
    out = "".join(parts) or "0"
    return out[1:] if out.startswith("+") else out


def _combine(sa, a, sb, b):
    """sa*a + sb*b for integer polynomials a, b; returns (scale, int poly)."""
    if sa.denominator == 1 and sb.denominator == 1:
        n = padd(pscale(a, sa.numerator), pscale(b, sb.numerator))
        return Fraction(1), n
    m = sa.denominator * sb.denominator // gcd(sa.denominator, sb.denominator)
    ca = sa.numerator * (m // sa.denominator)
    cb = sb.numerator * (m // sb.denominator)
    return Fraction(1, m), padd(pscale(a, ca), pscale(b, cb))


def _canonicalize(scale, num, den):
    num = _trim(num)
    den = _trim(den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if scale == 0 or not num:
        return Fraction(0), ZERO_POLY, ONE_POLY
    cn, num = pprimitive(num)
    cd, den = pprimitive(den)
    scale = scale * cn / cd
    g = pgcd(num, den)
    if g != ONE_POLY:
        num = pexactdiv(num, g)
        den = pexactdiv(den, g)
    return scale, num, den


def _coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalFunction.const(x)
    return NotImplemented


ZERO = RationalFunction(Fraction(0), ZERO_POLY, ONE_POLY, _canonical=True)
ONE = RationalFunction(Fraction(1), ONE_POLY, ONE_POLY, _canonical=True)
S = RationalFunction(Fraction(1), (0, 1), ONE_POLY, _canonical=True)
P = RationalFunction(Fraction(1), (0, 0, 1), ONE_POLY, _canonical=True)
