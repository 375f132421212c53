"""Correlator database, reduction rules and holomorphic anomaly equation instances.

Correlators Z_beta(chtilde_{k_1}(gamma_1) ... ) are keyed by beta and a sorted tuple
of (k, basis index) pairs. Linear combinations carry MeroQJac coefficients on atoms
(ops, beta, key), where ops is a word in D_tau, D_p, dA, dG2 applied to the correlator.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from pathlib import Path

from .cohomology import CohClass, Geometry, PRESETS
from .ring import G, THETA, MeroQJac, QJacPoly, delta_poly, derived_derivative, unit

DATA = Path(__file__).with_name("data")

OPS = ("D_tau", "D_p", "dA", "dG2")


# ---------------------------------------------------------------- insertions


@dataclass(frozen=True)
class Insertion:
    kind: str  # "ch" or "chtilde"
    k: int
    cls: CohClass

    def __post_init__(self):
        if self.kind not in ("ch", "chtilde"):
            raise ValueError(f"unknown insertion kind {self.kind!r}")


def _expand_tilde(ins, g):
    """chtilde expansion of one insertion: list of (coef, k, class)."""
    if ins.kind == "chtilde":
        return [(Fraction(1), ins.k, ins.cls)]
    # ch_k(x) = sum_j (-1/24)^j chtilde_{k-2j}(x c2^j)
    out, x, j = [], ins.cls, 0
    while ins.k - 2 * j >= 0 and not x.is_zero():
        out.append((Fraction(-1, 24) ** j, ins.k - 2 * j, x))
        x = x * g.c2X
        j += 1
    return out


def expand(insertions, g):
    """Multilinear expansion into basic insertions: {tuple of (k, index): coef}."""
    out = {(): Fraction(1)}
    for ins in insertions:
        if isinstance(ins, tuple):
            ins = Insertion("chtilde", ins[0], ins[1])
        if ins.k < 0:
            return {}
        new = {}
        for c, k, x in _expand_tilde(ins, g):
            for i, a in x.coords.items():
                for key, v in out.items():
                    nk = key + ((k, i),)
                    new[nk] = new.get(nk, 0) + v * c * a
        out = {k: v for k, v in new.items() if v}
    return out


def canonical(basic, g):
    """Sort basic insertions with the Koszul sign; (0, None) if an odd one repeats."""
    items = list(basic)
    sign = 1
    par = lambda t: g.X.parity(t[1])  # noqa: E731
    for a in range(len(items)):
        for b in range(len(items) - 1 - a):
            if items[b] > items[b + 1]:
                if par(items[b]) and par(items[b + 1]):
                    sign = -sign
                items[b], items[b + 1] = items[b + 1], items[b]
    for a in range(len(items) - 1):
        if items[a] == items[a + 1] and par(items[a]):
            return 0, None
    return sign, tuple(items)


def front_sign(parities, idx):
    """Sign of moving the entries at positions idx (in order) to the front."""
    sign = 0
    moved = set()
    for pos in idx:
        if parities[pos]:
            sign += sum(parities[q] for q in range(pos) if q not in moved)
        moved.add(pos)
    return -1 if sign % 2 else 1


def label(beta, key, g, ops=()):
    body = "".join(f"ch~{k}({g.X.names[i]})" for k, i in key)
    z = f"Z_{beta}({body})"
    for op in reversed(ops):
        z = f"{op}[{z}]"
    return z


# ---------------------------------------------------------------- combinations


def _apply_op(v, op):
    if op in ("dA", "dG2"):
        return MeroQJac.of(v).partial(op)
    return derived_derivative(MeroQJac.of(v), op)


def comb_add(a, b, scale=1):
    out = dict(a)
    for atom, c in b.items():
        c = c * scale if scale != 1 else c
        if atom in out:
            s = out[atom] + c
            if s.is_zero():
                del out[atom]
            else:
                out[atom] = s
        elif not MeroQJac.of(c).is_zero():
            out[atom] = MeroQJac.of(c)
    return out


def comb_scale(a, c):
    if isinstance(c, (int, Fraction)) and c == 0:
        return {}
    out = {}
    for atom, v in a.items():
        w = v * c
        if not w.is_zero():
            out[atom] = w
    return out


def comb_op(a, op):
    """Apply a derivation to sum c_j Z_j: D(c_j) Z_j + c_j D(Z_j)."""
    out = {}
    for atom, c in a.items():
        ops, beta, key = atom
        dc = _apply_op(c, op)
        if not dc.is_zero():
            out = comb_add(out, {atom: dc})
        out = comb_add(out, {((op,) + ops, beta, key): c})
    return out


# ---------------------------------------------------------------- reduction


def _degree(key, g):
    return sum(2 * k + g.X.degrees[i] - 6 for k, i in key)


def reduce_basic(basic, beta, g, _memo=None):
    """Reduce one product of basic insertions to a combination of irreducible atoms."""
    memo = _memo if _memo is not None else {}
    sign, key = canonical(basic, g)
    if not sign:
        return {}
    if (beta, key) in memo:
        return comb_scale(memo[(beta, key)], sign)
    res = _reduce_sorted(key, beta, g, memo)
    memo[(beta, key)] = res
    return comb_scale(res, sign)


def _reduce_sorted(key, beta, g, memo):
    if g.vdim is not None and _degree(key, g) != 2 * g.vdim(beta):
        return {}
    pars = [g.X.parity(i) for _, i in key]
    for pos, (k, i) in enumerate(key):
        rest = key[:pos] + key[pos + 1:]
        s = front_sign(pars, [pos])
        e = g.X.basis(i)
        if k == 0:
            c = -e.integral()
            return comb_scale(reduce_basic(rest, beta, g, memo), c * s) if c else {}
        if k == 1:
            return {}
        if k == 2 and i in g.base_divisors:
            c = g.base_pairing(g.base_divisors[i], g.beta_class(beta))
            return comb_scale(reduce_basic(rest, beta, g, memo), c * s) if c else {}
        if not g.reduced:
            if k == 2 and e == g.W:
                r = reduce_basic(rest, beta, g, memo)
                out = comb_op(r, "D_tau")
                shift = g.pack.w_shift
                if shift:
                    out = comb_add(out, comb_scale(r, MeroQJac(G["G2"] * shift)))
                return comb_scale(out, s)
            if k == 3 and i == g.X.unit:
                return comb_scale(comb_op(reduce_basic(rest, beta, g, memo), "D_p"), s)
    return {((), beta, key): MeroQJac(QJacPoly.const(1))}


def reduce(insertions, beta, g, memo=None):
    """Reduce a product of insertions (Insertion or (k, CohClass) pairs) for curve class beta."""
    out = {}
    memo = memo if memo is not None else {}
    for basic, c in expand(insertions, g).items():
        out = comb_add(out, reduce_basic(basic, beta, g, memo), c)
    return out


# ---------------------------------------------------------------- database


class CorrelatorDB:
    """Known correlator values and named unknowns for one geometry."""

    def __init__(self, geometry, oracle=None):
        self.g = geometry
        self.values = {}
        self.names = {}
        self.relations = []  # (combination, constant): combination + constant = 0
        self.oracle = oracle
        self.entries = []  # (beta, canonical key) in load order

    def set(self, insertions, beta, value, name=None):
        comb = reduce(insertions, beta, self.g)
        value = MeroQJac.of(value) if value is not None else None
        if len(comb) == 1:
            (atom, c), = comb.items()
            ops, b, key = atom
            if not ops and c == MeroQJac(QJacPoly.const(1)) and value is not None:
                self.values[(b, key)] = value
                self.entries.append((b, key))
                return key
            if not ops and c == MeroQJac(QJacPoly.const(-1)) and value is not None:
                self.values[(b, key)] = -value
                self.entries.append((b, key))
                return key
        if value is None:
            for atom in comb:
                if name:
                    self.names[atom[1:]] = name
            return None
        self.relations.append((comb, -value))
        return None

    def lookup(self, beta, key):
        hit = self.values.get((beta, key))
        if hit is None and self.oracle is not None:
            hit = self.oracle(beta, key)
            if hit is not None:
                self.values[(beta, key)] = hit
        return hit

    def value(self, atom):
        ops, beta, key = atom
        v = self.lookup(beta, key)
        if v is None:
            return None
        for op in reversed(ops):
            v = _apply_op(v, op)
        return v

    def atom_name(self, atom):
        ops, beta, key = atom
        base = self.names.get((beta, key))
        if base is None:
            return label(beta, key, self.g, ops)
        for op in reversed(ops):
            base = f"{op}[{base}]"
        return base

    # -- JSON

    def load(self, obj):
        if isinstance(obj, (str, Path)):
            obj = json.loads(Path(obj).read_text())
        entries = obj["entries"] if isinstance(obj, dict) else obj
        for e in entries:
            ins = [Insertion(x.get("kind", "chtilde"), int(x["k"]), self.g.parse(x["class"]))
                   for x in e["insertions"]]
            val = e["value"]
            if "unknown" in val:
                self.set(ins, int(e["beta"]), None, name=val["unknown"])
            else:
                self.set(ins, int(e["beta"]), MeroQJac.from_json(val))
        return self

    def dump(self):
        out = []
        for beta, key in self.entries:
            out.append({
                "beta": beta,
                "insertions": [{"kind": "chtilde", "k": k, "class": self.g.X.names[i]}
                               for k, i in key],
                "value": self.values[(beta, key)].to_json(),
            })
        return out


def load_table(name, geometry=None):
    """Load a shipped correlator table (e.g. 'p2xe')."""
    path = DATA / f"{name}.json"
    obj = json.loads(path.read_text())
    g = geometry or PRESETS[obj["geometry"]]()
    return CorrelatorDB(g).load(obj)


# ---------------------------------------------------------------- anomaly equations


@dataclass
class Instance:
    eq: str
    beta: int
    key: tuple
    lhs: dict
    rhs: dict
    name: str = ""

    def row(self):
        return comb_add(self.lhs, self.rhs, -1)


def _class_list(insertions, g):
    out = []
    for x in insertions:
        if isinstance(x, Insertion):
            if x.kind != "chtilde":
                raise ValueError("anomaly equations take chtilde insertions")
            out.append((x.k, x.cls))
        else:
            out.append((x[0], x[1]))
    return out


def _fact_ok(*ns):
    return all(n >= 0 for n in ns)


def hae_instance(eq, insertions, beta, g, memo=None):
    """Both sides of the dA or dG2 anomaly equation for Z_beta(insertions)."""
    if eq not in ("dA", "dG2"):
        raise ValueError(f"unknown equation {eq!r}")
    memo = memo if memo is not None else {}
    ins = _class_list(insertions, g)
    for _, x in ins:
        g.wt(x)  # raises on non-eigenvectors
    par = [x.parity() for _, x in ins]
    lhs = comb_op(reduce(ins, beta, g, memo), eq)
    rhs = {}

    def add(items, coef):
        nonlocal rhs
        if coef:
            rhs = comb_add(rhs, reduce(items, beta, g, memo), coef)

    n = len(ins)
    pull = g.pi_pull
    if eq == "dA":
        for i, (k, x) in enumerate(ins):
            s = front_sign(par, [i])
            rest = ins[:i] + ins[i + 1:]
            for c, bl, br in g.delta_B_pairs:
                add([(k - 1, x * pull(bl)), (2, pull(br))] + rest, s * c)
            add([(k + 1, g.pp(x))] + rest, s)
    else:
        for i in range(n):
            for j in range(i + 1, n):
                s = front_sign(par, [i, j])
                (ki, xi), (kj, xj) = ins[i], ins[j]
                rest = [ins[m] for m in range(n) if m not in (i, j)]
                for c, bl, br in g.delta_B_pairs:
                    add([(ki - 1, xi * pull(bl)), (kj - 1, xj * pull(br))] + rest, -2 * s * c)
                wi, wj = g.wt(xi), g.wt(xj)
                top, a, b = ki + kj - 4 + wi + wj, ki - 2 + wi, kj - 2 + wj
                if _fact_ok(top, a, b):
                    sgn = -1 if ((1 + wi) * (1 + wj)) % 2 else 1
                    coef = Fraction(factorial(top), factorial(a) * factorial(b))
                    add([(ki + kj - 2, g.e_pair(xi, xj))] + rest, -2 * s * sgn * coef)
        for i, (k, x) in enumerate(ins):
            s = front_sign(par, [i])
            rest = ins[:i] + ins[i + 1:]
            add([(k - 2, x * g.c2B)] + rest, -s)
            w = g.wt(x)
            d = k - 2 + w
            if d < 0:
                continue
            ex = g.e_single(g.K * x)
            for (l, r), c in ex.pieces():
                wl, wr = g.weights[l], g.weights[r]
                sgn = -1 if ((1 + wl) * (1 + wr)) % 2 else 1
                for m1 in range(k + 1):
                    m2 = k - m1
                    if not _fact_ok(m1 - 1 + wl, m2 - 1 + wr):
                        continue
                    coef = Fraction(factorial(m1 - 1 + wl) * factorial(m2 - 1 + wr), factorial(d))
                    add([(m1, g.X.basis(l)), (m2, g.X.basis(r))] + rest, s * c * sgn * coef)
        if g.lattice_rank:
            for items, c in _sigma_terms(ins, g):
                add(items, -c)
    sign, key = canonical(tuple(ins_key(ins, g)), g) if _is_basic(ins) else (1, None)
    inst = Instance(eq, beta, key, lhs, rhs)
    inst.name = f"{eq} {label(beta, key, g) if key else _ins_label(ins, beta)}"
    return inst


def _is_basic(ins):
    return all(len(x.coords) == 1 for _, x in ins)


def ins_key(ins, g):
    return [(k, next(iter(x.coords))) for k, x in ins]


def _ins_label(ins, beta):
    return f"Z_{beta}(" + "".join(f"ch~{k}({x})" for k, x in ins) + ")"


# -- the reduced correction term for the K3 x C specialisation


def _perp(x, g):
    """Component of x in the span of the modelled directions orthogonal to F and B."""
    alg = g.X
    idx = g.perp
    sub = [[alg.pairing[a][b] for b in idx] for a in idx]
    from .cohomology import _inverse
    inv = _inverse(sub)
    out = alg.zero()
    for ia, a in enumerate(idx):
        for ib, b in enumerate(idx):
            c = inv[ia][ib] * (alg.basis(b) * x).integral()
            if c:
                out = out + alg.basis(a) * c
    return out


def _sigma_terms(ins, g):
    """sum_{a,b} g^{ab} T_{e_a} T_{e_b} applied to a product, as (insertions, coef) pairs."""
    F = g.symbols["F"]
    rank = g.lattice_rank
    out = []
    for i, (k, x) in enumerate(ins):
        c = (F * x).integral()
        if c:
            out.append((ins[:i] + [(k, F)] + ins[i + 1:], -rank * c))
    for i in range(len(ins)):
        for j in range(i + 1, len(ins)):
            (ki, xi), (kj, xj) = ins[i], ins[j]
            fi, fj = (F * xi).integral(), (F * xj).integral()
            pi, pj = _perp(xi, g), _perp(xj, g)
            if fi and fj:
                raise NotImplementedError("the full lattice pair sum needs an explicit basis")

            def swap(a, b):
                new = list(ins)
                new[i], new[j] = (ki, a), (kj, b)
                return new

            if fi and not pj.is_zero():
                out.append((swap(pj, F), -2 * fi))
            if fj and not pi.is_zero():
                out.append((swap(F, pi), -2 * fj))
            pp = (pi * pj).integral()
            if pp:
                out.append((swap(F, F), 2 * pp))
    return out


# ---------------------------------------------------------------- checking


def _mero_div(k, c):
    """-k / c when c is a rational multiple of a Theta power over Theta^a Delta^b, else None."""
    c = MeroQJac.of(c)
    if len(c.numerator.terms) != 1:
        return None
    (e, q), = c.numerator.terms.items()
    if any(e[m] for m in range(6) if m != THETA):
        return None
    k = MeroQJac.of(k)
    num = k.numerator * QJacPoly({unit(THETA, c.theta_pow): Fraction(-1) / q})
    if c.delta_pow:
        num = num * delta_poly() ** c.delta_pow
    return MeroQJac(num, k.theta_pow + e[THETA], k.delta_pow).reduced()


@dataclass
class Report:
    verified: list = field(default_factory=list)
    predictions: dict = field(default_factory=dict)
    relations: list = field(default_factory=list)
    inconsistencies: list = field(default_factory=list)
    instances: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.inconsistencies

    def to_json(self):
        return {
            "verified": sorted(self.verified),
            "predictions": {k: v.to_json() for k, v in sorted(self.predictions.items())},
            "relations": sorted(self.relations),
            "inconsistencies": sorted(self.inconsistencies),
            "instances": sorted(self.instances),
        }


def _split(row, db, known):
    const = MeroQJac(QJacPoly())
    unknown = {}
    for atom, c in row.items():
        v = known.get(atom[1:])
        if v is not None:
            for op in reversed(atom[0]):
                v = _apply_op(v, op)
        else:
            v = db.value(atom)
        if v is None:
            unknown[atom] = c
        else:
            const = const + c * v
    return unknown, const


def check_system(db, instances):
    """Verify instances against the database; solve for unknowns where possible."""
    rep = Report()
    rows0 = [(inst.row(), inst.name) for inst in instances]
    rows0 += [(comb, f"table relation {n}") for n, (comb, _) in enumerate(db.relations)]
    consts = [MeroQJac(QJacPoly())] * len(instances) + [k for _, k in db.relations]
    rep.instances = [name for _, name in rows0]
    known = {}
    while True:
        rows = []
        for (row, name), extra in zip(rows0, consts):
            unknown, const = _split(row, db, known)
            const = const + extra
            if not unknown:
                if const.is_zero():
                    if name not in rep.verified:
                        rep.verified.append(name)
                else:
                    msg = f"{name}: residual {const}"
                    if msg not in rep.inconsistencies:
                        rep.inconsistencies.append(msg)
                continue
            rows.append((unknown, const, name))
        new = _eliminate(rows, db, rep)
        fresh = {k: v for k, v in new.items() if k not in known}
        if not fresh:
            break
        known.update(fresh)
    for key, v in known.items():
        rep.predictions[db.atom_name(((),) + key)] = v
    return rep


def _eliminate(rows, db, rep):
    """Fraction-free elimination; returns solved plain atoms {(beta, key): value}."""
    rows = [(dict(u), c, n) for u, c, n in rows]
    done = []
    while rows:
        u, c, n = rows.pop(0)
        if not u:
            if not c.is_zero():
                rep.inconsistencies.append(f"{n}: residual {c} after elimination")
            continue
        piv = min(u, key=lambda a: (len(a[0]), db.atom_name(a)))
        p = u[piv]
        new_rows = []
        for u2, c2, n2 in rows:
            d = u2.get(piv)
            if d is None:
                new_rows.append((u2, c2, n2))
                continue
            nu = comb_add(comb_scale(u2, p), comb_scale(u, d), -1)
            new_rows.append((nu, c2 * p - c * d, f"{n2}"))
        rows = new_rows
        done = [(comb_add(comb_scale(u3, p), comb_scale(u, u3[piv]), -1) if piv in u3 else u3,
                 (c3 * p - c * u3[piv]) if piv in u3 else c3, n3) for u3, c3, n3 in done]
        done.append((u, c, n))
    solved = {}
    rep.relations = []
    for u, c, n in done:
        if len(u) == 1:
            (atom, coef), = u.items()
            v = _mero_div(c, coef)
            if v is not None and not atom[0]:
                solved[atom[1:]] = v
                continue
        if u:
            terms = " + ".join(f"({coef})*{db.atom_name(a)}" for a, coef in sorted(
                u.items(), key=lambda t: db.atom_name(t[0])))
            rep.relations.append(f"{terms} + ({c}) = 0")
    return solved


def p2xe_instances(db, eqs=("dA", "dG2")):
    """Both anomaly equations for every tabulated entry."""
    memo = {}
    out = []
    for beta, key in db.entries:
        ins = [(k, db.g.X.basis(i)) for k, i in key]
        for eq in eqs:
            out.append(hae_instance(eq, ins, beta, db.g, memo))
    return out


# ---------------------------------------------------------------- K3 x C specialisation


def _divide_kkv(v):
    """v / (-1/(Theta^2 Delta)) for a value carrying at least one Delta in its denominator."""
    v = MeroQJac.of(v)
    if v.delta_pow < 1:
        raise ValueError("expected a Delta in the denominator")
    num = v.numerator * QJacPoly({unit(THETA, 2): Fraction(-1)})
    return MeroQJac(num, v.theta_pow, v.delta_pow - 1).reduced()


def k3_database(table=None, geometry=None):
    """Correlators of K3 x C normalised by <1>, evaluated through the stationary formula."""
    from .cohomology import build_k3xc
    from .k3 import Insertion as FormalClass, MissingEntry, published_table, stationary_Z

    g = geometry or build_k3xc()
    table = table or published_table()
    W, F = g.W, g.symbols["F"]

    def oracle(beta, key):
        if beta != 1 or any(k < 2 or g.X.degrees[i] == 0 for k, i in key):
            return None
        cls = [g.X.basis(i) for _, i in key]
        ins = [FormalClass(k - 2, (x * W).integral(), (x * F).integral(), x.integral())
               for (k, _), x in zip(key, cls)]
        pairing = [[(a * b).integral() for b in cls] for a in cls]
        n = len(key)
        try:
            z = stationary_Z(ins, pairing, table, order=n)
        except MissingEntry:
            return None
        v = z.get((1,) * n)
        return MeroQJac(QJacPoly()) if v is None else _divide_kkv(v)

    return CorrelatorDB(g, oracle=oracle)


def k3_instance(eq, family, k, l=None, g=None, memo=None):
    """The anomaly equation for A_k = Z(chtilde_{2+k}(F)), B_k = Z(chtilde_k(p)) or
    C_kl = Z(chtilde_{2+k}(a1) chtilde_{2+l}(a2))."""
    from .cohomology import build_k3xc

    g = g or build_k3xc()
    s = g.symbols
    ins = {"A": lambda: [(2 + k, s["F"])], "B": lambda: [(k, s["p"])],
           "C": lambda: [(2 + k, s["a1"]), (2 + l, s["a2"])]}[family]()
    inst = hae_instance(eq, ins, 1, g, memo)
    inst.name = f"{eq} {family}{k}" + (f",{l}" if l is not None else "")
    return inst


def k3_instances(max_a=5, max_b=4, c_pairs=((1, 1), (2, 1), (3, 1), (4, 1), (2, 2), (3, 2)), g=None):
    from .cohomology import build_k3xc

    g = g or build_k3xc()
    memo = {}
    out = []
    for eq in ("dA", "dG2"):
        out += [k3_instance(eq, "A", k, g=g, memo=memo) for k in range(max_a + 1)]
        out += [k3_instance(eq, "B", k, g=g, memo=memo) for k in range(max_b + 1)]
        out += [k3_instance(eq, "C", a, b, g=g, memo=memo) for a, b in c_pairs]
    return out


def evaluate_comb(comb, db):
    """Value of a combination whose atoms are all known; None if any is unknown."""
    total = MeroQJac(QJacPoly())
    for atom, c in comb.items():
        v = db.value(atom)
        if v is None:
            return None
        total = total + c * v
    return total


__all__ = [
    "Insertion", "CorrelatorDB", "Instance", "Report", "reduce", "hae_instance",
    "check_system", "load_table", "expand", "canonical", "p2xe_instances", "k3_database",
    "k3_instance", "k3_instances", "evaluate_comb",
]
