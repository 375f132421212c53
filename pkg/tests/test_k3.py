from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from oracles import S, from_sympy
from qjacobi.k3 import (Insertion, MissingEntry, SeriesTable, leading_A, leading_brute, published_table,
                        residue_eval, rhs_dA, rhs_dG2, solve_series, stationary_Z)
from qjacobi.ring import G, MeroQJac, QJacPoly, derived_derivative, eisenstein_poly, evaluate, parse_poly
from qjacobi.series import to_jet

Th, A, G2, P, Pp, G4 = (G[n] for n in ("Theta", "A", "G2", "P", "Pp", "G4"))
DTG2 = G2 * G2 * -2 + G4 * Fraction(5, 6)
G6 = eisenstein_poly(6)
KKV = MeroQJac(QJacPoly.const(-1), 2, 1)


def test_solved_entries_match_stated_polynomials(k3_table):
    assert k3_table.get("A", 4) == parse_poly("A^4/24 - A^2*G2/2 + G2^2/3 - G4/72")
    assert k3_table.get("B", 3) == parse_poly("A^3/3 + A*G2 - A*P/2 - Pp/12")
    want = DTG2 * A * A * Fraction(1, 2) + G2 ** 3 * Fraction(4, 3) - G2 * G4 * Fraction(2, 3) + G6 * Fraction(7, 720)
    assert k3_table.get("C", 3, 1) == want


def test_table_matches_published(k3_table):
    ref = published_table()
    for fam in "ABC":
        store = getattr(ref, fam)
        for key in store:
            args = key if isinstance(key, tuple) else (key,)
            assert k3_table.get(fam, *args) == store[key], (fam, key)


def test_table_invariants(k3_table):
    for k, f in k3_table.A.items():
        assert f.is_zero() or f.grading() == (k, 0)
    for k, f in k3_table.B.items():
        assert f.is_zero() or f.grading() == (k, 0)
    for (k, l), f in k3_table.C.items():
        assert f.grading() == (k + l + 2, 0)
        assert k3_table.get("C", l, k) == f
        assert k3_table.get("C", k, 0).is_zero()


def test_anomaly_equations_hold(k3_table):
    for fam, keys in (("A", k3_table.A), ("B", k3_table.B), ("C", k3_table.C)):
        for key in keys:
            args = key if isinstance(key, tuple) else (key,)
            if fam == "B" and args[0] == 0:
                continue
            f = k3_table.get(fam, *args)
            assert f.d_A() == rhs_dA(fam, *args, table=k3_table)
            assert f.d_G2() == rhs_dG2(fam, *args, table=k3_table)


def test_rhs_examples(k3_table):
    assert rhs_dA("A", 3, table=k3_table) == -G2 + A * A * Fraction(1, 2)
    assert rhs_dA("C", 1, 1, table=k3_table).is_zero()
    assert rhs_dA("B", 1, table=k3_table).is_zero()
    assert rhs_dG2("A", 2, table=k3_table) == QJacPoly.const(-1)
    assert rhs_dG2("B", 2, table=k3_table) == QJacPoly.const(2)
    assert rhs_dG2("C", 1, 1, table=k3_table) == G2 * -4


def test_missing_entry():
    with pytest.raises(MissingEntry):
        rhs_dA("A", 3, table=SeriesTable())


def test_order_independence(k3_table):
    t = SeriesTable()
    for k in range(6):
        t.A[k] = solve_series("A", k, table=t)
    t.C[(1, 1)] = solve_series("C", 1, 1, table=t)
    for k in range(5):
        t.B[k] = solve_series("B", k, table=t)
    t.C[(2, 1)] = solve_series("C", 2, 1, table=t)
    assert t.B == k3_table.B
    assert t.C[(2, 1)] == k3_table.get("C", 2, 1)


def test_leading_a_examples():
    assert leading_A(0) == 1
    assert leading_A(2) == from_sympy((1 + S**2 + S**4) / (6 * (1 - S**2) ** 2))
    assert leading_A(1) == evaluate(A, 0)[0]


def test_leading_brute_examples():
    assert all(leading_brute(0, k) == 0 for k in range(7))
    assert leading_brute(1, 0) == 1


@pytest.mark.parametrize("k", range(7))
def test_leading_brute_matches_closed_form(k):
    p = sp.Symbol("p")
    closed = -p / (1 - p) ** 2 * sp.Integer(-1) ** k / sp.factorial(k + 1) * (1 - p ** (k + 1)) / (1 - p) ** (k + 1)
    ser = sp.series(closed, p, 0, 11).removeO()
    for n in range(11):
        want = ser.coeff(p, n)
        assert (-1) ** n * leading_brute(n, k) == Fraction(str(want))


def test_q0_rows_match_leading(k3_table):
    for k, f in k3_table.A.items():
        assert evaluate(f, 0)[0] == leading_A(k)
    for k, f in k3_table.B.items():
        if k:
            assert not evaluate(f, 0)[0]


def _jet(poly, z=6, q=4):
    return to_jet(evaluate(poly, q), z)


def test_residue_a1():
    assert residue_eval("A", 1, zorder=6, qorder=4).equals(_jet(A))


def test_residue_c11():
    assert residue_eval("C", 1, 1, zorder=6, qorder=4).equals(_jet(DTG2))


def test_residue_c_k0_vanishes():
    assert not residue_eval("C", 2, 0, zorder=6, qorder=4).terms


@pytest.mark.parametrize("fam,k,l", [("A", 3, None), ("B", 2, None), ("B", 4, None), ("C", 2, 1)])
def test_residue_matches_table(k3_table, fam, k, l):
    assert residue_eval(fam, k, l, zorder=6, qorder=4).equals(_jet(k3_table.get(fam, k, l)))


def test_kkv_expansion():
    e = evaluate(KKV, 2)
    assert e[-1] == from_sympy(-1 / (S - 1 / S) ** 2)
    assert stationary_Z([], [], SeriesTable(), order=0) == {(): KKV}


def test_stationary_single_w(k3_table):
    z = stationary_Z([Insertion(0, w=1)], [[0]], k3_table, order=2)
    assert z[(1,)] == KKV
    assert z[(2,)] == KKV * Fraction(1, 2)


def test_stationary_single_point(k3_table):
    # chtilde_{2+k}(point) pairs with the ch_{k+2}(point) series
    z = stationary_Z([Insertion(0, u=1)], [[0]], k3_table, order=1)
    assert z[(1,)] == MeroQJac(k3_table.get("B", 2)) * KKV


def test_stationary_descendant_of_fiber(k3_table):
    z = stationary_Z([Insertion(1, f=1)], [[0]], k3_table, order=1)
    assert z[(1,)] == derived_derivative(KKV * MeroQJac(A), "D_tau")


def test_stationary_pair(k3_table):
    z = stationary_Z([Insertion(1), Insertion(1)], [[0, 1], [1, 0]], k3_table, order=2)
    assert z[(1, 1)] == MeroQJac(k3_table.get("C", 1, 1)) * KKV


@given(st.integers(0, 3), st.fractions(-3, 3, max_denominator=3))
def test_stationary_linear_in_w(k, w):
    t = published_table()
    z = stationary_Z([Insertion(k, w=w)], [[0]], t, order=1)
    got = z.get((1,), MeroQJac(QJacPoly()))
    assert got == MeroQJac(t.get("A", k) * w) * KKV
