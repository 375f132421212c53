"""The bigraded polynomial ring on Theta, A, G2, P (wp), Pp (wp'), G4.

Polynomials are formal: the six generators are independent variables. The
evaluation map sends them to their Fourier expansions.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .linalg import LinearSystem
from .rational import ONE, ONE_POLY, RationalFunction, pexactdiv, pgcd, pmul
from .series import FourierSeries, TruncationError, product_builder

GENERATORS = ("Theta", "A", "G2", "P", "Pp", "G4")
WEIGHTS = (-1, 1, 2, 2, 3, 4)
INDICES = (Fraction(1, 2), 0, 0, 0, 0, 0)
SYMBOLS = ("Θ", "A", "G2", "℘", "℘'", "G4")
THETA, A_, G2_, P_, PP_, G4_ = range(6)


# ---------------------------------------------------------------- expansions


@lru_cache(maxsize=None)
def bernoulli(n):
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum(Fraction(_binom(m + 1, k)) * b[k] for k in range(m)) / (m + 1))
    return b[n]


def _binom(n, k):
    from math import comb
    return comb(n, k)


def sigma(k, n):
    return sum(d ** k for d in range(1, n + 1) if n % d == 0)


@lru_cache(maxsize=None)
def eisenstein(k, qorder):
    if k < 2 or k % 2:
        raise ValueError(f"G_k needs even k >= 2, got {k}")
    c = [-bernoulli(k) / (2 * k)] + [Fraction(sigma(k - 1, n)) for n in range(1, qorder + 1)]
    return FourierSeries(0, qorder, c)


def _sparse_times(coeffs, power_of_s, m, n):
    # coeffs * (1 - s^power q^m), length n
    out = list(coeffs)
    c = RationalFunction.laurent({power_of_s: -1})
    for i in range(n - 1 - m, -1, -1):
        if coeffs[i]:
            out[i + m] = out[i + m] + coeffs[i] * c
    return out


@lru_cache(maxsize=None)
def theta(qorder):
    n = qorder + 1
    base = product_builder(lambda ell, m: -2 if ell == 0 else 0, qorder)
    coeffs = list(base.coeffs)
    for m in range(1, n):
        coeffs = _sparse_times(coeffs, 2, m, n)
        coeffs = _sparse_times(coeffs, -2, m, n)
    lead = RationalFunction.laurent({1: 1, -1: -1})
    return FourierSeries(0, qorder, [c * lead for c in coeffs])


@lru_cache(maxsize=None)
def series_A(qorder):
    # D_p log of the defining product of Theta, summed factor by factor
    p = RationalFunction.laurent({2: 1})
    terms = [-(1 + p) / (2 * (1 - p))]
    for n in range(1, qorder + 1):
        t = {}
        for d in range(1, n + 1):
            if n % d == 0:
                t[2 * d] = t.get(2 * d, 0) - 1
                t[-2 * d] = t.get(-2 * d, 0) + 1
        terms.append(RationalFunction.laurent(t))
    return FourierSeries(0, qorder, terms)


@lru_cache(maxsize=None)
def series_P(qorder):
    return -series_A(qorder).d_p() - eisenstein(2, qorder) * 2


@lru_cache(maxsize=None)
def series_Pp(qorder):
    return series_P(qorder).d_p()


@lru_cache(maxsize=None)
def delta(qorder):
    return product_builder(lambda ell, m: 24 if ell == 0 else 0, qorder, qshift=1)


@lru_cache(maxsize=None)
def delta_inverse(qorder):
    return product_builder(lambda ell, m: -24 if ell == 0 else 0, qorder, qshift=-1)


def generator_expansion(name, qorder):
    """Fourier expansion of a generator or auxiliary series (G6, Gk, Delta)."""
    if name == "Theta":
        return theta(qorder)
    if name == "A":
        return series_A(qorder)
    if name == "G2":
        return eisenstein(2, qorder)
    if name == "P":
        return series_P(qorder)
    if name == "Pp":
        return series_Pp(qorder)
    if name == "G4":
        return eisenstein(4, qorder)
    if name == "Delta":
        return delta(qorder)
    if name.startswith("G") and name[1:].isdigit():
        return eisenstein(int(name[1:]), qorder)
    raise KeyError(f"unknown series {name!r}")


# ---------------------------------------------------------------- polynomials


def _exp_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def unit(i, k=1):
    e = [0] * 6
    e[i] = k
    return tuple(e)


class QJacPoly:
    """Polynomial in the six generators with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {tuple(e): Fraction(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, c):
        return cls({(0,) * 6: c})

    @classmethod
    def gen(cls, name):
        return cls({unit(GENERATORS.index(name)): 1})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QJacPoly.const(other)
        if not isinstance(other, QJacPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, QJacPoly):
            other = QJacPoly.const(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return QJacPoly(t)

    __radd__ = __add__

    def __neg__(self):
        return QJacPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QJacPoly):
            other = Fraction(other)
            return QJacPoly({e: c * other for e, c in self.terms.items()})
        t = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = _exp_add(ea, eb)
                t[e] = t.get(e, 0) + ca * cb
        return QJacPoly(t)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Fraction(c))

    def __pow__(self, k):
        out = QJacPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def partial(self, i):
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                t[ne] = t.get(ne, 0) + c * e[i]
        return QJacPoly(t)

    def d_G2(self):
        return self.partial(G2_)

    def d_A(self):
        return self.partial(A_)

    def gradings(self):
        return {monomial_grading(e) for e in self.terms}

    def grading(self):
        """(weight, index) of a homogeneous polynomial; None for zero."""
        g = self.gradings()
        if not g:
            return None
        if len(g) > 1:
            raise ValueError(f"inhomogeneous polynomial with gradings {sorted(g)}")
        return g.pop()

    def is_homogeneous(self):
        return len(self.gradings()) <= 1

    def to_json(self):
        return {"terms": [{"exp": list(e), "coef": str(c)} for e, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, obj):
        return cls({tuple(t["exp"]): Fraction(t["coef"]) for t in obj["terms"]})

    def __repr__(self):
        return f"QJacPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda t: (tuple(-x for x in t[0]))):
            mon = "*".join(SYMBOLS[i] + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            if not mon:
                parts.append(f"{'+' if c > 0 else '-'}{abs(c)}")
            elif c == 1:
                parts.append("+" + mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{'+' if c > 0 else '-'}{abs(c)}*{mon}")
        out = " ".join(parts)
        return out[1:] if out.startswith("+") else out


def monomial_grading(e):
    w = sum(k * wt for k, wt in zip(e, WEIGHTS))
    return (w, Fraction(e[THETA], 2))


def monomials(weight, index):
    """All exponent tuples of the given (weight, index), in a fixed order."""
    eth = Fraction(index) * 2
    if eth.denominator != 1 or eth < 0:
        return []
    eth = int(eth)
    rest = weight + eth  # weight carried by A, G2, P, Pp, G4
    out = []
    if rest < 0:
        return out
    for e4 in range(rest // 4 + 1):
        for e3 in range((rest - 4 * e4) // 3 + 1):
            r = rest - 4 * e4 - 3 * e3
            for eg in range(r // 2 + 1):
                for ep in range((r - 2 * eg) // 2 + 1):
                    ea = r - 2 * eg - 2 * ep
                    out.append((eth, ea, eg, ep, e3, e4))
    out.sort()
    return out


G = {name: QJacPoly.gen(name) for name in GENERATORS}


class MeroQJac:
    """numerator / (Theta^theta_pow * Delta^delta_pow)."""

    __slots__ = ("numerator", "theta_pow", "delta_pow")

    def __init__(self, numerator, theta_pow=0, delta_pow=0):
        if not isinstance(numerator, QJacPoly):
            numerator = QJacPoly.const(numerator)
        if theta_pow < 0 or delta_pow < 0:
            raise ValueError("denominator powers must be nonnegative")
        self.numerator = numerator
        self.theta_pow = theta_pow
        self.delta_pow = delta_pow

    @classmethod
    def of(cls, x):
        if isinstance(x, MeroQJac):
            return x
        return cls(x)

    def grading(self):
        g = self.numerator.grading()
        if g is None:
            return None
        w, i = g
        return (w + self.theta_pow - 12 * self.delta_pow, i - Fraction(self.theta_pow, 2))

    def is_zero(self):
        return self.numerator.is_zero()

    def _lift(self, a, b):
        """Same value written over Theta^a Delta^b (a, b at least the current powers)."""
        num = self.numerator * QJacPoly({unit(THETA, a - self.theta_pow): 1})
        if b > self.delta_pow:
            num = num * delta_poly() ** (b - self.delta_pow)
        return num

    def __add__(self, other):
        other = MeroQJac.of(other)
        if (self.theta_pow, self.delta_pow) == (other.theta_pow, other.delta_pow):
            return MeroQJac(self.numerator + other.numerator, self.theta_pow, self.delta_pow)
        a = max(self.theta_pow, other.theta_pow)
        b = max(self.delta_pow, other.delta_pow)
        return MeroQJac(self._lift(a, b) + other._lift(a, b), a, b).reduced()

    __radd__ = __add__

    def __neg__(self):
        return MeroQJac(-self.numerator, self.theta_pow, self.delta_pow)

    def __sub__(self, other):
        return self + (-MeroQJac.of(other))

    def __rsub__(self, other):
        return MeroQJac.of(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MeroQJac(self.numerator * other, self.theta_pow, self.delta_pow)
        other = MeroQJac.of(other)
        return MeroQJac(self.numerator * other.numerator, self.theta_pow + other.theta_pow,
                        self.delta_pow + other.delta_pow).reduced()

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Fraction(c))

    def reduced(self):
        """Cancel common Theta powers between numerator and denominator."""
        if not self.theta_pow or not self.numerator.terms:
            return self
        k = min(min(e[THETA] for e in self.numerator.terms), self.theta_pow)
        if not k:
            return self
        num = QJacPoly({e[:THETA] + (e[THETA] - k,) + e[THETA + 1:]: c
                        for e, c in self.numerator.terms.items()})
        return MeroQJac(num, self.theta_pow - k, self.delta_pow)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QJacPoly)):
            other = MeroQJac.of(other)
        if not isinstance(other, MeroQJac):
            return NotImplemented
        a = max(self.theta_pow, other.theta_pow)
        b = max(self.delta_pow, other.delta_pow)
        return self._lift(a, b) == other._lift(a, b)

    def __hash__(self):
        r = self.reduced()
        return hash((r.numerator, r.theta_pow, r.delta_pow))

    def partial(self, which):
        # both formal partials kill Theta and Delta
        i = {"dG2": G2_, "dA": A_}[which]
        return MeroQJac(self.numerator.partial(i), self.theta_pow, self.delta_pow)

    def to_json(self):
        d = self.numerator.to_json()
        d["theta_pow"] = self.theta_pow
        d["delta_pow"] = self.delta_pow
        return d

    @classmethod
    def from_json(cls, obj):
        return cls(QJacPoly.from_json(obj), obj.get("theta_pow", 0), obj.get("delta_pow", 0))

    def __repr__(self):
        return f"MeroQJac({self})"

    def __str__(self):
        den = []
        if self.theta_pow:
            den.append("Θ" + (f"^{self.theta_pow}" if self.theta_pow > 1 else ""))
        if self.delta_pow:
            den.append("Δ" + (f"^{self.delta_pow}" if self.delta_pow > 1 else ""))
        if not den:
            return str(self.numerator)
        return f"({self.numerator})/({'*'.join(den)})"


# ---------------------------------------------------------------- evaluation


class _Evaluator:
    """Caches generator powers and monomial expansions per truncation order."""

    def __init__(self, qorder):
        self.qorder = qorder
        self.gens = [generator_expansion(name, qorder) for name in GENERATORS]
        self.mono = {(0,) * 6: FourierSeries.const(1, qorder)}

    def monomial(self, e):
        e = tuple(e)
        hit = self.mono.get(e)
        if hit is not None:
            return hit
        i = max(j for j in range(6) if e[j])
        prev = e[:i] + (e[i] - 1,) + e[i + 1:]
        out = self.monomial(prev) * self.gens[i]
        self.mono[e] = out
        return out

    def poly(self, f):
        out = FourierSeries(0, self.qorder, [])
        # accumulate coefficientwise to avoid re-building series objects
        acc = list(out.coeffs)
        for e, c in f.terms.items():
            m = self.monomial(e)
            for n, x in enumerate(m.coeffs):
                if x:
                    acc[n] = acc[n] + x * c
        return FourierSeries(0, self.qorder, acc)


@lru_cache(maxsize=8)
def _evaluator(qorder):
    return _Evaluator(qorder)


def evaluate(f, qorder):
    """Fourier expansion of a QJacPoly or MeroQJac up to and including q^qorder."""
    f = MeroQJac.of(f)
    b = f.delta_pow
    work = qorder + 2 * b
    num = _evaluator(work).poly(f.numerator)
    if f.theta_pow:
        num = num * theta(work).inverse() ** f.theta_pow
    if b:
        num = num * delta_inverse(work) ** b
    if num.trunc < qorder:
        raise TruncationError("internal truncation too small")
    return num.truncate(qorder)


# ---------------------------------------------------------------- fitting


class FitError(ValueError):
    pass


class NoSolution(FitError):
    pass


class Underdetermined(FitError):
    def __init__(self, msg, kernel_dim):
        super().__init__(msg)
        self.kernel_dim = kernel_dim


class InsufficientData(FitError):
    pass


def _common_den(rfs):
    d = ONE_POLY
    for r in rfs:
        if r and r.den != ONE_POLY and r.den != d:
            g = pgcd(d, r.den)
            d = pmul(d, pexactdiv(r.den, g))
    return d


def _scaled_coeffs(r, d):
    """Coefficients of the polynomial r * d (d a multiple of r.den), as Fractions by s-power."""
    if not r:
        return {}
    q = pexactdiv(d, r.den)
    poly = pmul(r.num, q)
    return {i: r.scale * c for i, c in enumerate(poly) if c}


def linear_conditions(columns, target):
    """Yield (row, rhs) pairs expressing sum_j c_j columns[j] = target coefficientwise.

    columns and target are sequences of RationalFunctions indexed alike (one per q-power).
    """
    for n in range(len(target)):
        rfs = [col[n] for col in columns] + [target[n]]
        if not any(rfs):
            # a compared q-power with nothing on either side still counts as a check
            yield {}, 0
            continue
        d = _common_den(rfs)
        expanded = [_scaled_coeffs(r, d) for r in rfs]
        powers = set()
        for x in expanded:
            powers.update(x)
        for k in sorted(powers):
            row = {j: x.get(k, 0) for j, x in enumerate(expanded[:-1])}
            yield row, expanded[-1].get(k, 0)


def fit(target, weight, index, theta_pow=0, delta_pow=0, margin=10, basis=None):
    """The unique MeroQJac of the given grading and denominator whose expansion is target."""
    index = Fraction(index)
    nweight = weight - theta_pow + 12 * delta_pow
    nindex = index + Fraction(theta_pow, 2)
    mons = basis if basis is not None else monomials(nweight, nindex)
    qorder = target.trunc
    t = target
    if theta_pow:
        t = t * theta(qorder) ** theta_pow
    if delta_pow:
        t = t * delta(qorder + delta_pow) ** delta_pow
    lo = min(t.qshift, 0)
    if t.trunc < 0:
        raise InsufficientData("target has no coefficients at nonnegative q-powers")
    tcoeffs = [t[n] for n in range(lo, t.trunc + 1)]
    if lo < 0 and any(tcoeffs[: -lo]):
        raise NoSolution("target times denominator has negative q-powers")
    if not mons:
        if any(tcoeffs):
            raise NoSolution("empty monomial slice but nonzero target")
        return MeroQJac(QJacPoly(), theta_pow, delta_pow)
    ev = _evaluator(t.trunc)
    cols = [[ZERO_RF] * (-lo) + list(ev.monomial(e).coeffs) for e in mons]
    system = LinearSystem(len(mons))
    for row, rhs in linear_conditions(cols, tcoeffs):
        system.add(row, rhs)
        if system.inconsistent:
            raise NoSolution(f"no polynomial of weight {weight}, index {index} matches the target")
    if system.rows_seen < len(mons) + margin:
        raise InsufficientData(
            f"{system.rows_seen} conditions for {len(mons)} unknowns; need margin {margin}")
    if system.rank < len(mons):
        raise Underdetermined(f"kernel of dimension {len(mons) - system.rank}",
                              len(mons) - system.rank)
    sol = system.solution()
    return MeroQJac(QJacPoly(dict(zip(mons, sol))), theta_pow, delta_pow)


ZERO_RF = RationalFunction.const(0)


# ---------------------------------------------------------------- derived operators


class ImageTable:
    """Images of the generators under D_p and D_tau, plus logarithmic derivatives of Delta."""

    def __init__(self, qorder=14, margin=10):
        self.qorder = qorder
        th, a, g2, p, pp, g4 = (G[n] for n in GENERATORS)
        self.D_p = {
            THETA: th * a,
            A_: -p - g2 * 2,
            G2_: QJacPoly(),
            P_: pp,
            G4_: QJacPoly(),
        }
        self.D_tau = {G2_: g2 * g2 * (-2) + g4 * Fraction(5, 6)}
        self.fitted = {}
        exp = {name: generator_expansion(name, qorder) for name in GENERATORS}
        for op, gi, name in (("D_p", PP_, "Pp"), ("D_tau", THETA, "Theta"), ("D_tau", A_, "A"),
                             ("D_tau", P_, "P"), ("D_tau", PP_, "Pp"), ("D_tau", G4_, "G4")):
            s = exp[name].d_p() if op == "D_p" else exp[name].d_q()
            w, i = monomial_grading(unit(gi))
            w += 1 if op == "D_p" else 2
            img = fit(s, w, i, margin=margin).numerator
            getattr(self, op)[gi] = img
            self.fitted[(op, name)] = img
        # D_tau Delta / Delta, a weight-2 form
        dl = delta(qorder).d_q() / delta(qorder)
        self.log_delta = {"D_p": QJacPoly(), "D_tau": fit(dl.truncate(qorder - 2), 2, 0,
                                                              margin=margin).numerator}

    def log_theta(self, op):
        img = getattr(self, op)[THETA]
        # the image has Theta-exponent 1 in every term
        return QJacPoly({e[:THETA] + (e[THETA] - 1,) + e[THETA + 1:]: c for e, c in img.terms.items()})


_TABLE = None


def image_table():
    global _TABLE
    if _TABLE is None:
        _TABLE = ImageTable()
    return _TABLE


def _apply(f, images):
    out = {}
    for e, c in f.terms.items():
        for i, k in enumerate(e):
            if not k:
                continue
            img = images[i]
            if not img.terms:
                continue
            rest = e[:i] + (k - 1,) + e[i + 1:]
            for ei, ci in img.terms.items():
                ne = _exp_add(rest, ei)
                out[ne] = out.get(ne, 0) + c * k * ci
    return QJacPoly(out)


def derived_derivative(f, which, table=None):
    """D_p or D_tau of a QJacPoly or MeroQJac, via the generator image table."""
    table = table or image_table()
    key = {"D_p": "D_p", "D_tau": "D_tau", "D_q": "D_tau"}[which]
    images = getattr(table, key)
    if isinstance(f, QJacPoly):
        return _apply(f, images)
    f = MeroQJac.of(f)
    num = _apply(f.numerator, images)
    if f.theta_pow:
        num = num - f.numerator * table.log_theta(key) * f.theta_pow
    if f.delta_pow:
        num = num - f.numerator * table.log_delta[key] * f.delta_pow
    return MeroQJac(num, f.theta_pow, f.delta_pow)


def commutator_check(f, table=None):
    """Check the four commutation relations on a homogeneous polynomial."""
    if not isinstance(f, QJacPoly):
        raise TypeError("commutator_check takes a QJacPoly")
    g = f.grading()
    if g is None:
        w, ind = 0, 0
    else:
        w, ind = g
    Dp = lambda x: derived_derivative(x, "D_p", table)  # noqa: E731
    Dt = lambda x: derived_derivative(x, "D_tau", table)  # noqa: E731
    return {
        "[dG2,D_tau]=-2wt": Dt(f).d_G2() - Dt(f.d_G2()) == f * (-2 * w),
        "[dA,D_p]=2ind": Dp(f).d_A() - Dp(f.d_A()) == f * (2 * ind),
        "[dG2,D_p]=-2dA": Dp(f).d_G2() - Dp(f.d_G2()) == f.d_A() * (-2),
        "[dA,D_tau]=D_p": Dt(f).d_A() - Dt(f.d_A()) == Dp(f),
    }


@lru_cache(maxsize=None)
def delta_poly(qorder=16):
    """Delta as a polynomial in the generators."""
    return fit(delta(qorder), 12, 0).numerator


@lru_cache(maxsize=None)
def eisenstein_poly(k, qorder=16):
    """G_k (even k) as a polynomial in the generators."""
    return fit(eisenstein(k, qorder), k, 0).numerator


def parse_poly(text, extra=None):
    """Parse a polynomial written with Theta, A, G2, P, Pp, G4 and + - * / ^ (or **).

    `extra` maps further names (e.g. G6) to polynomials.
    """
    import ast

    names = dict(G)
    names.update({"Θ": G["Theta"], "Th": G["Theta"], "Pprime": G["Pp"]})
    names.update(extra or {})
    text = text.replace("^", "**").replace("℘'", "Pp").replace("℘", "P").replace("Θ", "Theta")
    tree = ast.parse(text, mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.BinOp):
            l, r = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return l + r
            if isinstance(node.op, ast.Sub):
                return l - r
            if isinstance(node.op, ast.Mult):
                return l * r if isinstance(l, QJacPoly) else r * l
            if isinstance(node.op, ast.Div):
                if isinstance(r, QJacPoly):
                    raise ValueError("division by a polynomial")
                return l / r if isinstance(l, QJacPoly) else Fraction(l) / r
            if isinstance(node.op, ast.Pow):
                return l ** int(r)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Fraction(node.value)
        if isinstance(node, ast.Name) and node.id in names:
            return names[node.id]
        raise ValueError(f"cannot parse {ast.dump(node)}")

    out = ev(tree)
    return out if isinstance(out, QJacPoly) else QJacPoly.const(out)


__all__ = [
    "GENERATORS", "WEIGHTS", "INDICES", "G", "QJacPoly", "MeroQJac", "generator_expansion",
    "evaluate", "fit", "derived_derivative", "commutator_check", "image_table", "monomials",
    "FitError", "NoSolution", "Underdetermined", "InsufficientData", "delta_poly",
    "eisenstein_poly", "parse_poly", "ONE",
]
