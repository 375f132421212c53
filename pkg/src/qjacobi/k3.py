"""Reduced K3 x C series A_k, B_k, C_kl: anomaly equations, solver, residue formulas."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from pathlib import Path

from .linalg import LinearSystem
from .rational import RationalFunction
from .ring import (A_, G2_, G, MeroQJac, QJacPoly, Underdetermined, NoSolution, _evaluator,
                   derived_derivative, eisenstein, eisenstein_poly, linear_conditions, monomials,
                   parse_poly)
from .series import JetSeries, TruncationError

ONE = QJacPoly.const(1)


class MissingEntry(KeyError):
    pass


@dataclass
class SeriesTable:
    A: dict = field(default_factory=dict)
    B: dict = field(default_factory=dict)
    C: dict = field(default_factory=dict)

    def get(self, family, k, l=None):
        if k < 0 or (l is not None and l < 0):
            return QJacPoly()
        if family == "C":
            if k == 0 or l == 0:
                return QJacPoly()
            key = (k, l) if (k, l) in self.C else (l, k)
            if key not in self.C:
                raise MissingEntry(f"C[{k},{l}] not in table")
            return self.C[key]
        store = self.A if family == "A" else self.B
        if k not in store:
            raise MissingEntry(f"{family}[{k}] not in table")
        return store[k]

    def to_json(self):
        return {
            "A": {str(k): v.to_json() for k, v in sorted(self.A.items())},
            "B": {str(k): v.to_json() for k, v in sorted(self.B.items())},
            "C": {f"{k},{l}": v.to_json() for (k, l), v in sorted(self.C.items())},
        }


def _weight(family, k, l=None):
    if family == "C":
        return k + l + 2
    if family == "B" and k == 0:
        return 0
    return k


def rhs_dA(family, k, l=None, table=None):
    t = table
    if family == "A":
        return t.get("A", k - 1)
    if family == "B":
        return t.get("B", k - 1) + t.get("A", k - 1)
    if family == "C":
        return t.get("C", k - 1, l) + t.get("C", k, l - 1)
    raise ValueError(family)


def _fact(n):
    # terms whose factorials have negative argument are dropped by the caller
    return factorial(n)


def rhs_dG2(family, k, l=None, table=None):
    t = table
    out = QJacPoly()
    if family == "A":
        for m1 in range(0, k - 1):
            m2 = k - 2 - m1
            c = Fraction(_fact(m1) * _fact(m2), _fact(k - 1))
            out = out - t.get("A", m1) * t.get("A", m2) * c
        return out
    if family == "B":
        if k < 1:
            return out
        for m1 in range(2, k + 1):
            m2 = k - m1
            c = Fraction(-2 * _fact(m1 - 2) * _fact(m2), _fact(k - 1))
            out = out + t.get("A", m1 - 2) * t.get("B", m2) * c
        return out
    if family == "C":
        for m1 in range(1, k + 1):
            m2 = k - m1
            c = Fraction(-2 * _fact(m1 - 1) * _fact(m2), _fact(k))
            out = out + t.get("A", m1 - 1) * t.get("C", m2 - 1, l) * c
        for m1 in range(1, l + 1):
            m2 = l - m1
            c = Fraction(-2 * _fact(m1 - 1) * _fact(m2), _fact(l))
            out = out + t.get("A", m1 - 1) * t.get("C", k, m2 - 1) * c
        multinom = comb(k + l, k)
        out = out + t.get("A", k + l) * (2 * multinom) - t.get("A", k) * t.get("A", l) * 2
        return out
    raise ValueError(family)


def leading_A(k):
    """((-1)^k/(k+1)!) (1-p^{k+1})/(1-p)^{k+1} as a RationalFunction of s."""
    p = RationalFunction.laurent({2: 1})
    return (1 - p ** (k + 1)) / (1 - p) ** (k + 1) * Fraction((-1) ** k, factorial(k + 1))


def leading_brute(n, k):
    sign = -1 if (n - 1 + k) % 2 else 1
    return sum(Fraction(sign, factorial(k + 1 - l) * factorial(l)) * comb(n, l + 1)
               for l in range(k + 1))


def leading_series_coeffs(k, nmax):
    """p^0..p^nmax coefficients of -p/(1-p)^2 * leading_A(k)."""
    p = RationalFunction.laurent({2: 1})
    rf = leading_A(k) * p * (-1) / (1 - p) ** 2
    return rf.taylor(2 * nmax)[::2]


def leading_identity(nmax=10, kmax=6):
    """Pairs (n, k) where sum_n leading_brute(n, k) (-p)^n disagrees with the closed form."""
    bad = []
    for k in range(kmax + 1):
        coeffs = leading_series_coeffs(k, nmax)
        for n in range(nmax + 1):
            if (-1) ** n * leading_brute(n, k) != coeffs[n]:
                bad.append((n, k))
    return bad


def boundary(family, k, l=None):
    if family == "A":
        return leading_A(k)
    return RationalFunction.const(0)


def _q0_column(e):
    return _evaluator(0).monomial(e)[0]


def solve_series(family, k, l=None, table=None, extra_coeffs=None):
    """The unique homogeneous index-0 polynomial satisfying both anomaly equations and the boundary data."""
    if family == "B" and k == 0:
        return QJacPoly.const(-1)
    if family == "C" and (k == 0 or l == 0):
        return QJacPoly()
    table = table if table is not None else SeriesTable()
    w = _weight(family, k, l)
    mons = monomials(w, 0)
    index = {e: j for j, e in enumerate(mons)}
    system = LinearSystem(len(mons))

    def add_operator_rows(i, rhs):
        rows = {}
        for j, e in enumerate(mons):
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                rows.setdefault(ne, {})[j] = e[i]
        for ne in set(rows) | set(rhs.terms):
            system.add(rows.get(ne, {}), rhs.terms.get(ne, 0))

    add_operator_rows(A_, rhs_dA(family, k, l, table))
    add_operator_rows(G2_, rhs_dG2(family, k, l, table))
    cols = [[_q0_column(e)] for e in mons]
    for row, rhs in linear_conditions(cols, [boundary(family, k, l)]):
        system.add(row, rhs)
    if extra_coeffs is not None:
        ev = _evaluator(extra_coeffs.trunc)
        cols = [list(ev.monomial(e).coeffs)[1:] for e in mons]
        target = [extra_coeffs[n] for n in range(1, extra_coeffs.trunc + 1)]
        for row, rhs in linear_conditions(cols, target):
            system.add(row, rhs)
    if system.inconsistent:
        raise NoSolution(f"{family}{k}{'' if l is None else l}: anomaly equations inconsistent")
    if system.rank < len(mons):
        raise Underdetermined(f"{family}{k}{'' if l is None else l}: kernel of dimension "
                              f"{len(mons) - system.rank}; supply extra coefficients",
                              len(mons) - system.rank)
    return QJacPoly(dict(zip(mons, system.solution())))


def build_table(max_a=5, max_b=4, c_pairs=((1, 1), (2, 1), (3, 1), (4, 1), (2, 2), (3, 2))):
    """Solve A_0..A_max_a, B_0..B_max_b and the requested C_kl in dependency order."""
    t = SeriesTable()
    need_a = max(max_a, max((k + l for k, l in c_pairs), default=0), max_b)
    for k in range(need_a + 1):
        t.A[k] = solve_series("A", k, table=t)
    for k in range(max_b + 1):
        t.B[k] = solve_series("B", k, table=t)
    for k, l in sorted(c_pairs, key=lambda kl: (kl[0] + kl[1], kl)):
        for kk in range(1, k + 1):
            for ll in range(1, l + 1):
                if (kk, ll) not in t.C and (ll, kk) not in t.C:
                    t.C[(kk, ll)] = solve_series("C", kk, ll, table=t)
    return t


# ---------------------------------------------------------------- residue formulas


def a_jet(var, order, qorder):
    """A(var) = 1/var - 2 sum_{k even} G_k var^{k-1}/(k-1)!; odd k contribute nothing."""
    terms = {(-1,): (1,)}
    for k in range(2, order + 2, 2):
        g = eisenstein(k, qorder).coeffs
        c = Fraction(-2, factorial(k - 1))
        terms[(k - 1,)] = tuple(c * x.scale if x else 0 for x in g)
    return JetSeries.make((var,), (-1,), (order,), qorder, terms)


def _res(jet):
    """x^{-1} coefficient as a q-coefficient tuple."""
    return jet.coeff((-1,))


def _zjet_power(base, n, trunc):
    if n == 0:
        return JetSeries.constant(base.variables, (trunc,), base.qtrunc)
    return base ** n


def residue_eval(family, k, l=None, zorder=8, qorder=8):
    """The residue expression for A_k, B_k or C_kl as a z-jet."""
    depth = k + (l or 0) + 3
    zt = zorder + depth + 2
    xt = depth + 4
    Az = a_jet("z", zt, qorder)
    Ax = a_jet("x", xt, qorder)
    xpow = [JetSeries.constant(("x",), (xt,), qorder)]
    for _ in range(depth + 2):
        xpow.append(xpow[-1] * Ax)
    zpow = [JetSeries.constant(("z",), (zt,), qorder)]
    for _ in range(depth + 2):
        zpow.append(zpow[-1] * Az)

    def rz(qs):
        return qs  # q-coefficient tuple acting as a scalar q-series

    def out_trunc(j):
        return j.with_trunc((zorder,)) if j.trunc[0] >= zorder else _too_short(j, zorder)

    if family == "A":
        n = k + 1
        total = None
        for j in range(n + 1):
            r = _res(xpow[j])
            term = zpow[n - j].qscale(rz(r)).scale(Fraction(comb(n, j), factorial(n)))
            total = term if total is None else total + term
        return out_trunc(total)

    if family == "B":
        derivs = [Az]
        for _ in range(k + 1):
            derivs.append(derivs[-1].derivative(0))
        total = None
        for j in range(k + 1):
            shift = None
            for n in range(j):
                c = xpow[j].coeff((-1 - n,))
                piece = derivs[n].qscale(c).scale(Fraction(1, factorial(n)))
                shift = piece if shift is None else shift + piece
            r = _res(xpow[j + 1])
            inner = JetSeries.constant(("z",), (zt,), qorder).qscale(r).scale(-1)
            if shift is not None:
                inner = inner + shift
            term = (zpow[k - j] * inner).scale(Fraction(comb(k, j), factorial(k)))
            total = term if total is None else total + term
        return out_trunc(total)

    if family == "C":
        # A'(x1 - x2) = sum_n (-x2)^n / n! A^{(n+1)}(x1), valid for |x2| < |x1|
        Ader = [Ax.derivative(0)]
        for _ in range(l + 1):
            Ader.append(Ader[-1].derivative(0))
        n1, n2 = k + 1, l + 1
        total = None
        for i in range(n1 + 1):
            for j in range(n2 + 1):
                coef = Fraction(comb(n1, i) * comb(n2, j), factorial(n1) * factorial(n2))
                acc = None
                for n in range(j):
                    # [x2^{-1}] A(x2)^j (-x2)^n / n!  =  (-1)^n/n! [x2^{-1-n}] A(x2)^j
                    c2 = xpow[j].coeff((-1 - n,))
                    c1 = _res(xpow[i] * Ader[n])
                    sc = Fraction((-1) ** n, factorial(n))
                    q = _qprod(c1, c2, qorder)
                    q = tuple(sc * x for x in q)
                    acc = q if acc is None else tuple(a + b for a, b in zip(acc, q))
                if acc is None:
                    continue
                term = (zpow[n1 - i] * zpow[n2 - j]).qscale(acc).scale(coef)
                total = term if total is None else total + term
        if total is None:
            return JetSeries.make(("z",), (0,), (zorder,), qorder, {})
        return out_trunc(total)
    raise ValueError(family)


def _qprod(a, b, qorder):
    n = qorder + 1
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j in range(n - i):
                if b[j]:
                    out[i + j] += x * b[j]
    return tuple(out)


def _too_short(j, zorder):
    raise TruncationError(f"residue jet known only to z^{j.trunc[0]}; raise the working order "
                          f"above z^{zorder}")


# ---------------------------------------------------------------- stationary partition function


@dataclass(frozen=True)
class Insertion:
    """A formal class gamma_i inserted as chtilde_{2+k}; pairings with W, F and 1."""

    k: int
    w: Fraction = Fraction(0)
    f: Fraction = Fraction(0)
    u: Fraction = Fraction(0)


def _tpoly_mul(a, b, order):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if sum(e) > order:
                continue
            out[e] = out[e] + ca * cb if e in out else ca * cb
    return out


def _tpoly_add(a, b):
    out = dict(a)
    for e, c in b.items():
        out[e] = out[e] + c if e in out else c
    return out


def _tpoly_exp(x, n_vars, order):
    one = {(0,) * n_vars: MeroQJac(ONE)}
    out = dict(one)
    power = dict(one)
    for m in range(1, order + 1):
        power = _tpoly_mul(power, x, order)
        out = _tpoly_add(out, {e: c * Fraction(1, factorial(m)) for e, c in power.items()})
    return out


def stationary_Z(insertions, pairing, table, order=2):
    """Coefficients of prod t_i^{n_i} in the stationary partition function.

    insertions: list of Insertion; pairing[i][j] is the intersection number of gamma_i, gamma_j.
    Each gamma_i carries a formal parameter t_i. D_tau-decorated terms are moved to the left
    and applied to everything else. Returns {exponent tuple: MeroQJac}.
    """
    n = len(insertions)
    kkv = MeroQJac(QJacPoly.const(-1), 2, 1)
    unit = lambda i: tuple(1 if j == i else 0 for j in range(n))  # noqa: E731
    x = {}
    dvec = {}
    for i, ins in enumerate(insertions):
        # B_m is the ch_m(point) series, so chtilde_{2+k} pairs with B_{k+2}
        val = MeroQJac(QJacPoly())
        if ins.w:
            val = val + MeroQJac(table.get("A", ins.k) * ins.w)
        if ins.u:
            val = val + MeroQJac(table.get("B", ins.k + 2) * ins.u)
        if not val.is_zero():
            x = _tpoly_add(x, {unit(i): val})
        if ins.f:
            dvec = _tpoly_add(dvec, {unit(i): MeroQJac(table.get("A", ins.k) * ins.f)})
    for i, a in enumerate(insertions):
        for j, b in enumerate(insertions):
            c = Fraction(pairing[i][j]) if pairing else 0
            if c:
                e = tuple(unit(i)[m] + unit(j)[m] for m in range(n))
                x = _tpoly_add(x, {e: MeroQJac(table.get("C", a.k, b.k) * (c / 2))})
    body = _tpoly_mul(_tpoly_exp(x, n, order), {(0,) * n: kkv}, order)
    out = {}
    dpow = {(0,) * n: MeroQJac(ONE)}
    for m in range(order + 1):
        if m:
            dpow = _tpoly_mul(dpow, dvec, order)
            if not dpow:
                break
        term = _tpoly_mul(dpow, body, order)
        for e, c in term.items():
            for _ in range(m):
                c = derived_derivative(c, "D_tau")
            c = c * Fraction(1, factorial(m))
            out[e] = out[e] + c if e in out else c
    return {e: c for e, c in out.items() if not c.is_zero()}


# ---------------------------------------------------------------- published table


def dtau_g2():
    return G["G2"] * G["G2"] * (-2) + G["G4"] * Fraction(5, 6)


def published_table():
    """The tabulated A, B, C series shipped with the package, G6 through its fitted polynomial."""
    raw = json.loads((Path(__file__).with_name("data") / "k3_abc.json").read_text())
    extra = {"G6": eisenstein_poly(6), "DtauG2": dtau_g2()}
    t = SeriesTable()
    for k, v in raw["A"].items():
        t.A[int(k)] = parse_poly(v, extra)
    for k, v in raw["B"].items():
        t.B[int(k)] = parse_poly(v, extra)
    for k, v in raw["C"].items():
        a, b = map(int, k.split(","))
        t.C[(a, b)] = parse_poly(v, extra)
    return t


__all__ = [
    "SeriesTable", "rhs_dA", "rhs_dG2", "leading_A", "leading_brute", "solve_series",
    "build_table", "residue_eval", "leading_series_coeffs", "leading_identity", "a_jet", "stationary_Z", "Insertion", "MissingEntry",
    "dtau_g2", "published_table",
]
