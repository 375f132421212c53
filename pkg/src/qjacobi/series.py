"""Truncated q-series over rational functions in s, product builders, and z-jets."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .rational import ONE, ZERO, RationalFunction


class TruncationError(ValueError):
    pass


def _rf(x):
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction.const(x)


class FourierSeries:
    """sum_{n=qshift}^{trunc} coeffs[n - qshift] q^n, known up to and including q^trunc."""

    __slots__ = ("qshift", "trunc", "coeffs")

    def __init__(self, qshift, trunc, coeffs):
        coeffs = [_rf(c) for c in coeffs]
        n = trunc - qshift + 1
        if n < 0:
            raise TruncationError(f"trunc {trunc} below qshift {qshift}")
        coeffs = coeffs[:n] + [ZERO] * (n - len(coeffs))
        self.qshift = qshift
        self.trunc = trunc
        self.coeffs = tuple(coeffs)

    @classmethod
    def const(cls, c, trunc):
        return cls(0, trunc, [_rf(c)])

    @classmethod
    def from_dict(cls, terms, trunc, qshift=None):
        """From {q power: coefficient}."""
        if qshift is None:
            qshift = min(terms, default=0)
        coeffs = [ZERO] * (trunc - qshift + 1)
        for n, c in terms.items():
            if qshift <= n <= trunc:
                coeffs[n - qshift] = _rf(c)
        return cls(qshift, trunc, coeffs)

    def __getitem__(self, n):
        if n > self.trunc:
            raise TruncationError(f"q^{n} beyond truncation q^{self.trunc}")
        if n < self.qshift:
            return ZERO
        return self.coeffs[n - self.qshift]

    def valuation(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return self.qshift + i
        return None

    def is_zero(self):
        return all(not c for c in self.coeffs)

    def truncate(self, trunc):
        if trunc > self.trunc:
            raise TruncationError(f"cannot extend q^{self.trunc} to q^{trunc}")
        return FourierSeries(self.qshift, trunc, self.coeffs)

    def normalized(self):
        """Drop leading zero coefficients (raises qshift)."""
        v = self.valuation()
        if v is None or v == self.qshift:
            return self
        return FourierSeries(v, self.trunc, self.coeffs[v - self.qshift:])

    def __eq__(self, other):
        if not isinstance(other, FourierSeries):
            return NotImplemented
        t = min(self.trunc, other.trunc)
        lo = min(self.qshift, other.qshift)
        return all(self[n] == other[n] for n in range(lo, t + 1))

    def __hash__(self):
        return hash((self.trunc, self.normalized().coeffs))

    def __neg__(self):
        return FourierSeries(self.qshift, self.trunc, [-c for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, FourierSeries):
            other = FourierSeries.const(other, self.trunc)
        lo = min(self.qshift, other.qshift)
        t = min(self.trunc, other.trunc)
        return FourierSeries(lo, t, [self[n] + other[n] for n in range(lo, t + 1)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = _rf(c)
        return FourierSeries(self.qshift, self.trunc, [c * x for x in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, FourierSeries):
            return self.scale(other)
        a, b = self, other
        lo = a.qshift + b.qshift
        t = min(a.trunc + b.qshift, b.trunc + a.qshift)
        n = t - lo + 1
        out = [ZERO] * max(n, 0)
        bc = b.coeffs
        for i, x in enumerate(a.coeffs[:n]):
            if not x:
                continue
            for j in range(min(len(bc), n - i)):
                y = bc[j]
                if y:
                    out[i + j] = out[i + j] + x * y
        return FourierSeries(lo, t, out)

    __rmul__ = __mul__

    def inverse(self):
        f = self.normalized()
        lead = f.coeffs[0] if f.coeffs else ZERO
        if not lead:
            raise ZeroDivisionError("leading coefficient is zero; series not invertible")
        inv_lead = lead.inverse()
        n = len(f.coeffs)
        out = [inv_lead]
        for k in range(1, n):
            acc = ZERO
            for j in range(1, k + 1):
                c = f.coeffs[j]
                if c:
                    acc = acc + c * out[k - j]
            out.append(-(acc * inv_lead))
        return FourierSeries(-f.qshift, -f.qshift + n - 1, out)

    def __truediv__(self, other):
        if not isinstance(other, FourierSeries):
            return self.scale(_rf(other).inverse())
        return self * other.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return FourierSeries.const(1, self.trunc - self.qshift)
        out = None
        base = self
        while k:
            if k & 1:
                out = base if out is None else out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def d_q(self):
        return FourierSeries(self.qshift, self.trunc,
                             [c * (self.qshift + i) for i, c in enumerate(self.coeffs)])

    def d_p(self):
        return FourierSeries(self.qshift, self.trunc, [c.d_p() for c in self.coeffs])

    def swap(self):
        """s -> 1/s on every coefficient."""
        return FourierSeries(self.qshift, self.trunc, [c.swap() for c in self.coeffs])

    def to_json(self):
        return {"qshift": self.qshift, "trunc": self.trunc,
                "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["qshift"], obj["trunc"],
                   [RationalFunction.from_json(c) for c in obj["coeffs"]])

    def __repr__(self):
        terms = [f"({c})*q^{self.qshift + i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms or ["0"]) + f" + O(q^{self.trunc + 1})"


def series_arith(a, b, kind):
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "invert_b_then_mul":
        return a * b.inverse()
    raise ValueError(f"unknown kind {kind!r}")


def series_derive(a, which):
    if which in ("D_q", "D_tau"):
        return a.d_q()
    if which == "D_p":
        return a.d_p()
    raise ValueError(f"unknown derivative {which!r}")


def _binomial_power(c, m, e, n_terms):
    """Coefficients of (1 - c q^m)^e as {q power: coefficient} up to q^(n_terms)."""
    out = {}
    j = 0
    cj = ONE
    while m * j <= n_terms:
        b = Fraction(1)
        for i in range(j):
            b = b * (e - i) / (i + 1)
        if b:
            out[m * j] = cj * (b * (-1) ** j)
        elif e >= 0 and j > e:
            break
        j += 1
        cj = cj * c
    return out


def _mul_sparse(coeffs, factor, n):
    """coeffs (list indexed from q^0) times sparse {power: rf}, truncated to length n."""
    out = [ZERO] * n
    for i, x in enumerate(coeffs):
        if not x:
            continue
        for k, y in factor.items():
            if i + k < n:
                out[i + k] = out[i + k] + x * y
    return out


def product_builder(exponent, qorder, porder=0, qshift=0):
    """q^qshift * prod_{m>=1} (1-q^m)^{e(0,m)} * prod_{1<=l<=porder, m>=1} (1-p^l q^m)^{e(l,m)}.

    Factors with p^l for l > porder are omitted.
    """
    n = qorder - qshift + 1
    if n <= 0:
        return FourierSeries(qshift, qorder, [])
    coeffs = [ONE] + [ZERO] * (n - 1)
    for m in range(1, n):
        for ell in range(0, porder + 1):
            e = exponent(ell, m)
            if not e:
                continue
            c = ONE if ell == 0 else RationalFunction(1, (0,) * (2 * ell) + (1,))
            coeffs = _mul_sparse(coeffs, _binomial_power(c, m, e, n - 1), n)
    return FourierSeries(qshift, qorder, coeffs)


# ---------------------------------------------------------------- jets


def _qmul(a, b, n):
    out = [0] * n
    for i, x in enumerate(a):
        if x:
            for j in range(n - i):
                y = b[j]
                if y:
                    out[i + j] += x * y
    return out


def _is_zero_q(c):
    return all(not x for x in c)


@dataclass(frozen=True)
class JetSeries:
    """Truncated Laurent series in jet variables with truncated q-series coefficients.

    terms maps exponent tuples to q-coefficient tuples (q^0 .. q^qtrunc).
    A term is known when every exponent lies in [lowpow, trunc].
    """

    variables: tuple
    lowpow: tuple
    trunc: tuple
    qtrunc: int
    terms: dict

    def __post_init__(self):
        for e in self.terms:
            for v, lo, hi in zip(e, self.lowpow, self.trunc):
                if not lo <= v <= hi:
                    raise TruncationError(f"exponent {e} outside [{self.lowpow}, {self.trunc}]")

    @classmethod
    def make(cls, variables, lowpow, trunc, qtrunc, terms):
        clean = {}
        for e, c in terms.items():
            c = tuple(c[: qtrunc + 1]) + (0,) * max(0, qtrunc + 1 - len(c))
            if not _is_zero_q(c) and all(lo <= v <= hi for v, lo, hi in zip(e, lowpow, trunc)):
                clean[tuple(e)] = c
        return cls(tuple(variables), tuple(lowpow), tuple(trunc), qtrunc, clean)

    @classmethod
    def constant(cls, variables, trunc, qtrunc, value=1):
        k = len(variables)
        return cls.make(variables, (0,) * k, trunc, qtrunc, {(0,) * k: (value,)})

    @classmethod
    def monomial(cls, variables, exps, trunc, qtrunc, value=1):
        low = tuple(min(0, e) for e in exps)
        return cls.make(variables, low, trunc, qtrunc, {tuple(exps): (value,)})

    def coeff(self, exps):
        for v, lo, hi in zip(exps, self.lowpow, self.trunc):
            if v > hi:
                raise TruncationError(f"exponent {exps} beyond truncation {self.trunc}")
        return self.terms.get(tuple(exps), (0,) * (self.qtrunc + 1))

    def _check(self, other):
        if self.variables != other.variables:
            raise ValueError("jet variables differ")

    def __add__(self, other):
        if not isinstance(other, JetSeries):
            other = JetSeries.constant(self.variables, self.trunc, self.qtrunc, other)
        self._check(other)
        lo = tuple(map(min, self.lowpow, other.lowpow))
        hi = tuple(map(min, self.trunc, other.trunc))
        qt = min(self.qtrunc, other.qtrunc)
        terms = {}
        for src in (self.terms, other.terms):
            for e, c in src.items():
                if e in terms:
                    terms[e] = tuple(x + y for x, y in zip(terms[e], c))
                else:
                    terms[e] = c
        return JetSeries.make(self.variables, lo, hi, qt, terms)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        return JetSeries.make(self.variables, self.lowpow, self.trunc, self.qtrunc,
                              {e: tuple(c * x for x in v) for e, v in self.terms.items()})

    def qscale(self, series):
        """Multiply by a q-series given as a coefficient sequence."""
        n = self.qtrunc + 1
        series = list(series[:n]) + [0] * (n - len(series))
        return JetSeries.make(self.variables, self.lowpow, self.trunc, self.qtrunc,
                              {e: _qmul(v, series, n) for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, JetSeries):
            return self.scale(other)
        self._check(other)
        lo = tuple(a + b for a, b in zip(self.lowpow, other.lowpow))
        hi = tuple(min(ta + lb, tb + la) for ta, tb, la, lb
                   in zip(self.trunc, other.trunc, self.lowpow, other.lowpow))
        qt = min(self.qtrunc, other.qtrunc)
        n = qt + 1
        terms = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                if any(v > h for v, h in zip(e, hi)):
                    continue
                prod = _qmul(ca, cb, n)
                if e in terms:
                    terms[e] = [x + y for x, y in zip(terms[e], prod)]
                else:
                    terms[e] = prod
        return JetSeries.make(self.variables, lo, hi, qt, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k == 0:
            return JetSeries.constant(self.variables, self.trunc, self.qtrunc)
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def with_trunc(self, trunc=None, qtrunc=None):
        trunc = self.trunc if trunc is None else tuple(trunc)
        qtrunc = self.qtrunc if qtrunc is None else qtrunc
        if any(a > b for a, b in zip(trunc, self.trunc)) or qtrunc > self.qtrunc:
            raise TruncationError("cannot extend truncation")
        return JetSeries.make(self.variables, self.lowpow, trunc, qtrunc, self.terms)

    def derivative(self, i=0):
        """d/d(variable i)."""
        terms = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = e[:i] + (e[i] - 1,) + e[i + 1:]
            terms[ne] = tuple(e[i] * x for x in c)
        lo = self.lowpow[:i] + (self.lowpow[i] - 1 if self.lowpow[i] < 0 else 0,) + self.lowpow[i + 1:]
        hi = self.trunc[:i] + (self.trunc[i] - 1,) + self.trunc[i + 1:]
        return JetSeries.make(self.variables, lo, hi, self.qtrunc, terms)

    def equals(self, other):
        """Equality on the common range of known coefficients."""
        self._check(other)
        hi = tuple(map(min, self.trunc, other.trunc))
        qt = min(self.qtrunc, other.qtrunc)
        keys = set(self.terms) | set(other.terms)
        zero = (0,) * (qt + 1)
        for e in keys:
            if any(v > h for v, h in zip(e, hi)):
                continue
            a = tuple(self.terms.get(e, zero)[: qt + 1])
            b = tuple(other.terms.get(e, zero)[: qt + 1])
            if any(x != y for x, y in zip(a, b)):
                return False
        return True

    def differences(self, other):
        """Exponent tuples on the common range where the two jets disagree."""
        hi = tuple(map(min, self.trunc, other.trunc))
        qt = min(self.qtrunc, other.qtrunc)
        zero = (0,) * (qt + 1)
        bad = []
        for e in sorted(set(self.terms) | set(other.terms)):
            if any(v > h for v, h in zip(e, hi)):
                continue
            a = self.terms.get(e, zero)[: qt + 1]
            b = other.terms.get(e, zero)[: qt + 1]
            if any(x != y for x, y in zip(a, b)):
                bad.append(e)
        return bad


def laurent_in_z(f, zorder):
    """Laurent expansion of a RationalFunction under s = e^{z/2}, as {power: Fraction}."""
    if not f:
        return {}

    def exp_series(poly, n):
        # sum_j c_j e^{j z / 2} up to z^(n-1)
        out = []
        for m in range(n):
            acc = sum(Fraction(c) * Fraction(j, 2) ** m for j, c in enumerate(poly) if c)
            out.append(acc / factorial(m))
        return out

    # valuation of the denominator is at most its degree
    dlen = len(f.den)
    dser = exp_series(f.den, dlen + 1)
    v = next(i for i, x in enumerate(dser) if x)
    need = zorder + v + 1
    nser = exp_series(f.num, need)
    dser = exp_series(f.den, need + v)[v:]
    # quotient nser / dser
    inv0 = 1 / dser[0]
    quo = []
    for k in range(need):
        acc = nser[k] - sum(dser[j] * quo[k - j] for j in range(1, k + 1) if j < len(dser))
        quo.append(acc * inv0)
    return {k - v: f.scale * c for k, c in enumerate(quo) if c and k - v <= zorder}


def to_jet(a, zorder, var="z"):
    """Coefficientwise substitution p = e^z (s = e^{z/2})."""
    if a.qshift < 0:
        raise TruncationError("to_jet needs a series without negative q-powers")
    qt = a.trunc
    terms = {}
    low = 0
    for n in range(a.qshift, a.trunc + 1):
        for k, c in laurent_in_z(a[n], zorder).items():
            low = min(low, k)
            terms.setdefault((k,), [0] * (qt + 1))[n] = c
    return JetSeries.make((var,), (low,), (zorder,), qt, terms)


def binomial(n, k):
    return comb(n, k) if 0 <= k <= n else 0
