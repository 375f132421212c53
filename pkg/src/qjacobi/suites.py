"""Named verification suites shared by the command line and the test-suite."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .series import FourierSeries, product_builder, to_jet


@dataclass(frozen=True)
class Config:
    qorder: int = 12
    zorder: int = 8
    xorder: int = 5
    margin: int = 10
    fmt: str = "text"

    def __post_init__(self):
        for name in ("qorder", "zorder", "xorder"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")
        if self.margin < 0:
            raise ValueError("margin must be nonnegative")
        if self.fmt not in ("text", "json"):
            raise ValueError(f"unknown output format {self.fmt!r}")


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self):
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


# ---------------------------------------------------------------- ring


def random_polynomials(count=50, max_weight=8, max_index=2, seed=0):
    """Homogeneous polynomials with random small rational coefficients."""
    from .ring import QJacPoly, monomials

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        w = rng.randint(-1, max_weight)
        ind = Fraction(rng.randint(0, 2 * max_index), 2)
        mons = monomials(w, ind)
        if not mons:
            continue
        pick = rng.sample(mons, min(len(mons), rng.randint(1, 4)))
        terms = {e: Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 6)) for e in pick}
        out.append(QJacPoly(terms))
    return out


def bootstrap_checks(qorder=20):
    from .ring import GENERATORS, G, derived_derivative, evaluate, generator_expansion
    from .series import series_derive

    out = []
    for g in GENERATORS:
        for op in ("D_p", "D_tau"):
            lhs = evaluate(derived_derivative(G[g], op), qorder)
            rhs = series_derive(generator_expansion(g, qorder), op)
            out.append(Check(f"bootstrap {op}({g})", lhs == rhs))
    return out


def commutator_checks(polys):
    from .ring import commutator_check

    out = []
    for i, f in enumerate(polys):
        res = commutator_check(f)
        bad = sorted(k for k, v in res.items() if not v)
        out.append(Check(f"commutators poly{i:02d}", not bad, ", ".join(bad)))
    return out


def ramanujan_check(qorder=20):
    from .ring import G, eisenstein, fit

    got = fit(eisenstein(2, qorder).d_q(), 4, 0).numerator
    want = G["G2"] * G["G2"] * (-2) + G["G4"] * Fraction(5, 6)
    return Check("ramanujan D_q G2", got == want, str(got))


def suite_ring(cfg):
    out = bootstrap_checks(20)
    out += commutator_checks(random_polynomials())
    out.append(ramanujan_check())
    from .ring import eisenstein

    g2 = eisenstein(2, 4)
    out.append(Check("G2 coefficients", [g2[n] for n in range(5)] == [Fraction(-1, 24), 1, 3, 4, 7]))
    return out


# ---------------------------------------------------------------- K3 x C


def table_checks(table=None):
    from .k3 import build_table, published_table

    built = table or build_table()
    ref = published_table()
    out = []
    for fam in ("A", "B", "C"):
        store = getattr(ref, fam)
        for key in sorted(store):
            args = key if isinstance(key, tuple) else (key,)
            got = built.get(fam, *args)
            label = fam + ",".join(map(str, args))
            out.append(Check(f"table {label}", got == store[key]))
    return out


def leading_checks(nmax=10, kmax=6, table=None):
    from .k3 import build_table, leading_A, leading_identity
    from .ring import evaluate

    bad = leading_identity(nmax, kmax)
    out = [Check("leading identity", not bad, str(bad[:5]))]
    table = table or build_table()
    for k in sorted(table.A):
        out.append(Check(f"leading q0 A{k}", evaluate(table.A[k], 0)[0] == leading_A(k)))
    return out


def kkv_checks():
    from .k3 import SeriesTable, stationary_Z
    from .rational import RationalFunction
    from .ring import MeroQJac, QJacPoly, evaluate

    kkv = MeroQJac(QJacPoly.const(-1), 2, 1)
    e = evaluate(kkv, 2)
    s = RationalFunction.laurent({1: 1, -1: -1})
    want = RationalFunction.const(-1) / (s * s)
    z = stationary_Z([], [], SeriesTable(), order=0)
    return [Check("kkv q^-1 coefficient", e.qshift == -1 and e[-1] == want, str(e[-1])),
            Check("kkv stationary empty", z.get(()) == kkv)]


def k3_hae_checks():
    from .hae import check_system, evaluate_comb, k3_database, k3_instances
    from .k3 import published_table, rhs_dA, rhs_dG2
    from .ring import MeroQJac

    table = published_table()
    db = k3_database(table)
    insts = k3_instances()
    rep = check_system(db, insts)
    out = [Check("k3 hae consistency", not rep.inconsistencies, "; ".join(rep.inconsistencies[:3]))]
    for inst in insts:
        fam = inst.name.split()[1]
        args = [int(x) for x in fam[1:].split(",")]
        ref = (rhs_dA if inst.eq == "dA" else rhs_dG2)(fam[0], *args, table=table)
        got = evaluate_comb(inst.rhs, db)
        out.append(Check(f"k3 rhs {inst.name}", got is not None and got == MeroQJac(ref)))
    return out


def suite_k3(cfg):
    from .k3 import build_table

    table = build_table()
    return table_checks(table) + leading_checks(table=table) + kkv_checks() + k3_hae_checks()


def residue_checks(zorder=8, qorder=8, table=None):
    from .k3 import build_table, residue_eval
    from .ring import evaluate

    table = table or build_table()
    out = []
    for fam in ("A", "B", "C"):
        for key in sorted(getattr(table, fam)):
            k, l = key if isinstance(key, tuple) else (key, None)
            got = residue_eval(fam, k, l, zorder, qorder)
            want = to_jet(evaluate(table.get(fam, k, l), qorder), zorder)
            bad = got.differences(want)
            label = fam + (f"{k},{l}" if l is not None else str(k))
            out.append(Check(f"residue {label}", not bad, str(bad[:3]) if bad else ""))
    return out


def suite_residue(cfg):
    return residue_checks(cfg.zorder, min(cfg.qorder, 8))


# ---------------------------------------------------------------- P^2 x E


REQUIRED_P2XE = ("dA Z_1(ch~3(H^2*p))", "dG2 Z_1(ch~2(H*p)ch~2(H^2*p))")


def p2xe_checks():
    from .hae import check_system, load_table, p2xe_instances

    db = load_table("p2xe")
    insts = p2xe_instances(db)
    rep = check_system(db, insts)
    out = [Check("p2xe inconsistencies", not rep.inconsistencies, "; ".join(rep.inconsistencies[:3]))]
    names = {i.name for i in insts}
    for req in REQUIRED_P2XE:
        present = req in names
        clash = any(msg.startswith(req + ":") for msg in rep.inconsistencies)
        status = ("verified" if req in rep.verified else "prediction") if present else "missing"
        out.append(Check(f"p2xe instance {req}", present and not clash, status))
    out.append(Check("p2xe instance count", len(insts) > 0, f"{len(insts)} instances, "
                     f"{len(rep.verified)} verified, {len(rep.predictions)} predictions"))
    return out


def e_unit_checks(g=None):
    from .cohomology import Tensor, build_p2xe

    g = g or build_p2xe()
    X = g.X
    out = [Check("E(1) = Delta_B", g.e_single(X.one()) == g.delta_B),
           Check("E(W) = Delta_X", g.e_single(g.W) == g.delta_X)]
    for i in range(X.dim):
        a = X.basis(i)
        out.append(Check(f"E(W x {X.names[i]})", g.e_tensor(Tensor.box(g.W, a)) == a))
        out.append(Check(f"E({X.names[i]} x 1)", g.e_tensor(Tensor.box(a, X.one())) == g.pp(a)))
    return out


def suite_p2e(cfg):
    return p2xe_checks() + e_unit_checks()


# ---------------------------------------------------------------- partitions and C^2 x E


def suite_partitions(cfg):
    from .partitions import bo_fit, partitions, pixton_check

    counts = [sum(1 for _ in partitions(n)) for n in range(11)]
    out = [Check("partition counts", counts == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42])]
    for n in (1, 2):
        polys, errors = bo_fit(n, cfg.qorder, cfg.xorder + 1, cfg.margin)
        out.append(Check(f"bloch-okounkov fit n={n}", not errors,
                         "; ".join(f"{k}: {v}" for k, v in sorted(errors.items())[:3])))
    for n in (1, 2):
        rep = pixton_check(n, min(cfg.qorder, 8), cfg.xorder, cfg.margin)
        out.append(Check(f"pixton n={n}", rep.ok, ", ".join(rep.failures()[:5])))
    return out


def suite_c2e(cfg):
    from .partitions import c2e_pipt_closed_form, c2e_pt_stationary

    q = min(cfg.qorder, 6)
    out = []
    for n in (1, 2, 3):
        rep = c2e_pt_stationary(n, q, cfg.xorder)
        out.append(Check(f"c2e_pt n={n}", rep.ok, str(rep.details) if not rep.ok else ""))
    rep = c2e_pipt_closed_form(q, cfg.xorder + 1)
    for label in sorted(rep.checks):
        out.append(Check(f"c2e_pipt {label}", rep.checks[label], rep.details.get(label, "")))
    out.append(Check("c2e_pipt exponential form q-dependence", rep.details["exponential_form_q_ok"],
                     rep.details["exponential_form_q_dependence"]))
    return out


# ---------------------------------------------------------------- normalization


def normalization_checks(qorder=20):
    from .cohomology import build_p2xe, normalization_product
    from .partitions import partitions
    from .ring import eisenstein

    g = build_p2xe()
    got = normalization_product(g, qorder)
    counts = [sum(1 for _ in partitions(n)) for n in range(qorder + 1)]
    cube = FourierSeries(0, qorder, counts) ** 3
    out = [Check("p2xe normalization = prod(1-q^m)^-3", got == cube)]
    eta = product_builder(lambda ell, m: 1 if ell == 0 else 0, qorder)
    g2 = eisenstein(2, qorder)
    shift = g2 + FourierSeries.const(Fraction(1, 24), qorder)
    out.append(Check("D_q prod(1-q^n) = (-G2 - 1/24) prod", eta.d_q() == (shift * eta).scale(-1)))
    e = -g.pack.q_exponent
    out.append(Check("D_q normalization = e (G2 + 1/24) normalization",
                     got.d_q() == (shift * got).scale(e)))
    return out


def suite_normalization(cfg):
    return normalization_checks(20) + kkv_checks()


SUITES = {
    "ring": suite_ring,
    "k3": suite_k3,
    "residue": suite_residue,
    "p2e": suite_p2e,
    "partitions": suite_partitions,
    "c2e": suite_c2e,
    "normalization": suite_normalization,
}


def run_suite(name, cfg=None):
    cfg = cfg or Config()
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return sorted(SUITES[name](cfg), key=lambda c: c.name)


__all__ = ["Config", "Check", "SUITES", "run_suite", "random_polynomials"]
