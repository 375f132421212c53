from fractions import Fraction

import pytest
import sympy as sp
from sympy.functions.combinatorial.numbers import partition as partition_count
from hypothesis import given, settings, strategies as st

from qjacobi.partitions import (T1, T2, TPoly, bloch_okounkov, bo_fit, c2e_pipt_closed_form, c2e_pt_series,
                                c2e_pt_stationary, euler_product, g_twisted, heine_product, partitions,
                                pixton_check, pixton_rhs, qaverage_columns)
from qjacobi.ring import G
from qjacobi.series import JetSeries

x, q, t1, t2 = sp.symbols("x q t1 t2")


def _frac(v):
    return Fraction(str(sp.nsimplify(v)))


def _tpoly_to_sympy(p):
    p = TPoly._lift(p)
    return sum((sp.Rational(c.numerator, c.denominator) * t1**a * t2**b for (a, b), c in p.terms.items()),
               sp.Integer(0))


def _double_series(expr, qorder, xlow, xtop):
    """{(x power, q power): coefficient} of a sympy expression, q first, then Laurent in x."""
    out = {}
    qs = sp.series(expr, q, 0, qorder + 1).removeO()
    for m in range(qorder + 1):
        cq = sp.simplify(qs.coeff(q, m))
        if cq == 0:
            continue
        xs = sp.series(cq, x, 0, xtop + 1).removeO()
        xs = sp.expand(xs)
        for k in range(xlow, xtop + 1):
            v = xs.coeff(x, k)
            if v != 0:
                out[(k, m)] = v
    return out


@pytest.mark.parametrize("n", range(16))
def test_partition_counts(n):
    parts = list(partitions(n))
    assert len(parts) == partition_count(n)
    assert len(set(parts)) == len(parts)
    assert all(sum(p) == n and list(p) == sorted(p, reverse=True) for p in parts)


def test_euler_product():
    N = 20
    poly = sp.expand(sp.prod([1 - q**m for m in range(1, N + 1)]))
    assert euler_product(N) == [poly.coeff(q, m) for m in range(N + 1)]


def test_f1_empty_partition_tail():
    f = bloch_okounkov(1, 0, 4)
    assert {e[0]: c[0] for e, c in f.terms.items()} == {-1: 1, 1: Fraction(-1, 24), 3: Fraction(7, 5760)}


def test_f1_matches_inverse_theta():
    # 1/(w - 1/w) prod (1-q^m)^2 / ((1 - q^m w^2)(1 - q^m w^-2)) with w = e^{x/2}
    qorder, xtop = 3, 3
    w = sp.Symbol("w")

    def trunc(e):
        return sp.Add(*[t for t in sp.Add.make_args(sp.expand(e)) if sp.degree(t, q) <= qorder])

    body = sp.Integer(1)
    for m in range(1, qorder + 1):
        geo_a = sum((q**m * w**2) ** j for j in range(qorder // m + 1))
        geo_b = sum((q**m / w**2) ** j for j in range(qorder // m + 1))
        body = trunc(body * (1 - q**m) ** 2 * geo_a * geo_b)
    got = bloch_okounkov(1, qorder, xtop)
    for m in range(qorder + 1):
        cm = (body.coeff(q, m) / (w - 1 / w)).subs(w, sp.exp(x / 2))
        ser = sp.series(cm, x, 0, xtop + 1).removeO()
        for k in range(-1, xtop + 1):
            assert got.coeff((k,))[m] == _frac(ser.coeff(x, k)), (k, m)


def test_f1_first_q_coefficient():
    got = bloch_okounkov(1, 1, 6)
    want = sp.series(2 * sp.sinh(x / 2), x, 0, 7).removeO()
    for k in range(-1, 7):
        assert got.coeff((k,))[1] == _frac(want.coeff(x, k))


def test_f1_low_coefficients():
    polys, errors = bo_fit(1, 12, 3)
    assert not errors
    g2, g4 = G["G2"], G["G4"]
    assert polys[(1,)] == g2
    assert polys[(3,)] == g2 * g2 * Fraction(1, 2) + g4 * Fraction(1, 12)
    assert polys[(-1,)] == 1
    assert polys[(0,)].is_zero()


def test_f2_fits():
    _, errors = bo_fit(2, 12, 3)
    assert not errors


@pytest.mark.parametrize("n", [2, 3])
def test_bo_symmetric(n):
    f = bloch_okounkov(n, 3, 2)
    for e, c in f.terms.items():
        assert f.coeff(tuple(reversed(e))) == c
        assert f.coeff(e[1:] + e[:1]) == c


def test_cutoff_invariance():
    a = bloch_okounkov(1, 6, 5)
    b = bloch_okounkov(1, 8, 5)
    assert a.equals(b.with_trunc(qtrunc=6))


def test_pixton_n1():
    rep = pixton_check(1, 6, 4)
    assert rep.ok, rep.failures()


def test_pixton_n1_is_x_squared_shift():
    f = bloch_okounkov(1, 4, 4)
    rhs = pixton_rhs(1, 4, 4, f)
    for e, c in rhs.terms.items():
        assert c == f.coeff((e[0] - 2,)) if e[0] >= 1 else not any(c)


def test_pixton_n2():
    rep = pixton_check(2, 4, 3)
    assert rep.ok, rep.failures()


def test_c2e_box_and_column_forms_agree():
    a = c2e_pt_series(1, 3, 3, form="columns")
    b = c2e_pt_series(1, 3, 3, form="boxes")
    assert not a.differences(b)
    a = c2e_pt_series(2, 2, 2, form="columns")
    b = c2e_pt_series(2, 2, 2, form="boxes")
    assert not a.differences(b)


@pytest.mark.parametrize("n", [0, 1, 2])
def test_c2e_stationary(n):
    assert c2e_pt_stationary(n, 4, 3).ok


def test_c2e_n0_is_one():
    j = c2e_pt_series(0, 5, ())
    assert j.coeff(()) == (1, 0, 0, 0, 0, 0)


def test_heine_product_matches_sympy():
    qorder, xtop = 2, 1
    expr = sp.exp(-t1 * x) / (1 - sp.exp(-t1 * x))
    for m in range(1, qorder + 1):
        expr *= (1 - q**m) * (1 - q**m * sp.exp(-(t1 + t2) * x))
        expr /= (1 - q**m * sp.exp(-t2 * x)) * (1 - q**m * sp.exp(-t1 * x))
    want = _double_series(expr, qorder, -1, xtop)
    got = heine_product(qorder, xtop)
    for k in range(-1, xtop + 1):
        for m in range(qorder + 1):
            diff = _tpoly_to_sympy(got.coeff((k,))[m]) - want.get((k, m), 0)
            assert sp.simplify(diff) == 0, (k, m)


def test_heine_identity():
    assert not qaverage_columns(4, 3).differences(heine_product(4, 3))


def test_pipt_closed_form_small():
    rep = c2e_pipt_closed_form(3, 3)
    assert rep.ok
    assert rep.details["exponential_form_q_ok"]


def test_antidiagonal_reduces_to_stationary():
    # at t2 = -t1 the column average is e^{-t1 x/2} F_1(t1 x)
    qorder, top = 3, 3
    avg = qaverage_columns(qorder, top)
    f1 = bloch_okounkov(1, qorder, top)
    shift = [TPoly.mono(j, 0, Fraction((-1) ** j, 2 ** j * sp.factorial(j))) for j in range(top + 2)]
    for k in range(-1, top + 1):
        for m in range(qorder + 1):
            want = TPoly()
            for j in range(k + 2):
                c = f1.coeff((k - j,))[m]
                if c:
                    want = want + shift[j] * TPoly.mono(k - j, 0, c)
            assert TPoly._lift(avg.coeff((k,))[m]).antidiagonal() == want, (k, m)


def test_g_twisted():
    g = g_twisted(2, 1, 4)
    assert g[0] == Fraction(-1, 12)
    assert [g[n] for n in range(1, 5)] == [1, 3, 4, 7]
    assert g_twisted(6, 0, 3)[0] == 0
    assert g_twisted(4, 1, 2)[1] == 1
    with pytest.raises(ValueError):
        g_twisted(0, 1, 2)


tpolys = st.dictionaries(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), st.integers(-4, 4), max_size=4).map(TPoly)


@given(tpolys, tpolys, tpolys)
def test_tpoly_ring(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).antidiagonal() == a.antidiagonal() * b.antidiagonal()


@given(tpolys)
def test_tpoly_matches_sympy(a):
    assert sp.expand(_tpoly_to_sympy(a * a) - _tpoly_to_sympy(a) ** 2) == 0
    assert sp.expand(_tpoly_to_sympy(a.antidiagonal()) - _tpoly_to_sympy(a).subs(t2, -t1)) == 0
