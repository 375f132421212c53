from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from qjacobi.cohomology import build_p2xe
from qjacobi.hae import (CorrelatorDB, Insertion, canonical, check_system, comb_add, comb_op, comb_scale,
                         evaluate_comb, hae_instance, k3_database, k3_instances, load_table,
                         p2xe_instances, reduce)
from qjacobi.k3 import published_table, rhs_dA, rhs_dG2
from qjacobi.ring import G, MeroQJac, QJacPoly, derived_derivative

g = build_p2xe()
c = g.cls
Th, A, G2 = G["Theta"], G["A"], G["G2"]
ONE = MeroQJac(QJacPoly.const(1))


def test_ch1_vanishes():
    assert reduce([(1, c("H*p")), (2, c("H^2*p"))], 1, g) == {}


def test_ch0_is_integral():
    rest = [(2, c("H*p")), (2, c("H^2*p"))]
    assert reduce([(0, c("H^2*p"))] + rest, 1, g) == comb_scale(reduce(rest, 1, g), -1)


def test_divisor_rule():
    rest = [(2, c("H*p")), (2, c("H^2*p"))]
    assert reduce([(2, c("H"))] + rest, 1, g) == reduce(rest, 1, g)
    assert reduce([(2, c("H"))] + rest, 2, g) == comb_scale(reduce(rest, 2, g), 2)


def test_string_rule():
    rest = [(2, c("H*p")), (2, c("H^2*p"))]
    assert reduce([(3, g.X.one())] + rest, 1, g) == comb_op(reduce(rest, 1, g), "D_p")


def test_w_divisor_rule():
    rest = [(2, c("H*p")), (2, c("H^2*p"))]
    r = reduce(rest, 1, g)
    want = comb_add(comb_op(r, "D_tau"), comb_scale(r, MeroQJac(G2 * 3)))
    assert reduce([(2, g.W)] + rest, 1, g) == want


def test_ch_expands_to_chtilde():
    x = c("H*p")
    got = reduce([Insertion("ch", 4, x), (2, c("H^2*p"))], 1, g)
    want = comb_add(reduce([(4, x), (2, c("H^2*p"))], 1, g),
                    reduce([(2, x * g.c2X), (2, c("H^2*p"))], 1, g), Fraction(-1, 24))
    assert got == want


def test_koszul_sign_on_swap():
    a, b = c("H*alpha"), c("H*beta")
    r1 = reduce([(2, a), (2, b), (2, c("H^2*p"))], 1, g)
    r2 = reduce([(2, b), (2, a), (2, c("H^2*p"))], 1, g)
    assert r1 == comb_scale(r2, -1)
    odd = g.X.index("H*alpha")
    assert canonical(((2, odd), (2, odd)), g) == (0, None)


ORDERINGS = [
    [(2, c("H*alpha")), (2, c("H*beta")), (2, c("H^2*p"))],
    [(2, c("H*p")), (2, c("H*alpha")), (3, c("H*beta")), (2, c("H^2"))],
]


@pytest.mark.parametrize("ins", ORDERINGS)
@pytest.mark.parametrize("eq", ["dA", "dG2"])
def test_permutation_invariance(ins, eq):
    base = hae_instance(eq, ins, 1, g)
    par = [x.parity() for _, x in ins]
    for perm in permutations(range(len(ins))):
        # sign of the permutation restricted to odd entries
        odd = [p for p in perm if par[p]]
        inv = sum(1 for i in range(len(odd)) for j in range(i + 1, len(odd)) if odd[i] > odd[j])
        sign = -1 if inv % 2 else 1
        inst = hae_instance(eq, [ins[p] for p in perm], 1, g)
        assert inst.lhs == comb_scale(base.lhs, sign)
        assert inst.rhs == comb_scale(base.rhs, sign)


def test_empty_instance():
    inst = hae_instance("dA", [], 0, g)
    assert inst.rhs == {} and inst.row() == inst.lhs


def test_non_eigenvector_rejected():
    with pytest.raises(ValueError):
        hae_instance("dA", [(2, c("H") + c("p"))], 1, g)


def test_unknown_equation():
    with pytest.raises(ValueError):
        hae_instance("dP", [(2, c("H"))], 1, g)


CLASSES = ["H^2*p", "H*p", "p", "H^2", "H*alpha", "H*beta", "H^2*alpha"]


@settings(max_examples=25)
@given(st.lists(st.tuples(st.integers(2, 3), st.sampled_from(CLASSES)), min_size=1, max_size=3),
       st.sampled_from(["dA", "dG2"]), st.integers(1, 2),
       st.sampled_from([((2, "H"), None), ((1, "H^2*p"), 0), ((0, "H^2*p"), -1), ((0, "H*p"), 0)]))
def test_compatible_with_reduction_rules(rest, eq, beta, extra):
    (k, name), coef = extra
    rest = [(kk, c(n)) for kk, n in rest]
    if coef is None:
        coef = beta
    base = hae_instance(eq, rest, beta, g).row()
    row = hae_instance(eq, [(k, c(name))] + rest, beta, g).row()
    want = comb_scale(base, coef) if coef else {}
    assert row == want


# ---------------------------------------------------------------- P^2 x E table


@pytest.fixture(scope="module")
def p2_report():
    db = load_table("p2xe")
    insts = p2xe_instances(db)
    return db, insts, check_system(db, insts)


def test_p2xe_consistent(p2_report):
    db, insts, rep = p2_report
    assert rep.ok
    assert len(insts) == 2 * len(db.entries)
    assert len(rep.verified) >= len(insts) - 2


def test_p2xe_required_instances(p2_report):
    _, insts, rep = p2_report
    names = {i.name for i in insts}
    for req in ("dA Z_1(ch~3(H^2*p))", "dG2 Z_1(ch~2(H*p)ch~2(H^2*p))"):
        assert req in names
        assert not any(m.startswith(req) for m in rep.inconsistencies)


def test_p2xe_prediction(p2_report):
    _, _, rep = p2_report
    assert rep.predictions["Z_1(ch~4(H^2))"].is_zero()


def test_table_entry_is_three_dtau_theta():
    db = load_table("p2xe")
    key = [k for k in db.entries if k[0] == 1 and k[1] == ((2, g.X.index("H*p")), (2, g.X.index("H^2*p")))]
    assert db.values[key[0]] == derived_derivative(MeroQJac(Th), "D_tau") * 3


@pytest.mark.parametrize("n", [1, 5])
def test_mutation_detected(n):
    db = load_table("p2xe")
    entry = db.entries[n]
    db.values[entry] = db.values[entry] * 2
    rep = check_system(db, p2xe_instances(db))
    assert rep.inconsistencies


def test_single_unknown_gives_prediction():
    db = CorrelatorDB(g)
    inst = hae_instance("dA", [(3, c("H^2*p"))], 1, g)
    db.set([Insertion("chtilde", 3, c("H^2*p"))], 1, MeroQJac(Th * A))
    db.set([Insertion("chtilde", 2, c("H^2*p")), Insertion("chtilde", 2, c("H^2"))], 1, MeroQJac(Th))
    rep = check_system(db, [inst])
    assert list(rep.predictions) == ["Z_1(ch~4(H^2))"]
    assert rep.predictions["Z_1(ch~4(H^2))"].is_zero()


def test_dump_round_trip():
    db = load_table("p2xe")
    again = CorrelatorDB(db.g).load(db.dump())
    assert again.values == db.values


# ---------------------------------------------------------------- K3 x C


def test_k3_all_verified():
    db = k3_database(published_table())
    insts = k3_instances()
    rep = check_system(db, insts)
    assert rep.ok and not rep.predictions
    assert sorted(rep.verified) == sorted(i.name for i in insts)


def test_k3_rhs_matches_series_equations():
    table = published_table()
    db = k3_database(table)
    for inst in k3_instances(max_a=3, max_b=3, c_pairs=((1, 1), (2, 1))):
        fam = inst.name.split()[1]
        args = [int(x) for x in fam[1:].split(",")]
        ref = (rhs_dA if inst.eq == "dA" else rhs_dG2)(fam[0], *args, table=table)
        assert evaluate_comb(inst.rhs, db) == MeroQJac(ref), inst.name
