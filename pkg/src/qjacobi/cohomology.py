"""Finite graded-commutative cohomology models of elliptic fibrations.

A model carries the cup product on a fixed basis, integration, the fibration
maps pi_* and pi^*, Kunneth diagonals, the divisor W, the weight operator
[W, pi^* pi_*] and the correspondence E acting on one or two classes.
Odd classes carry Koszul signs everywhere a swap happens.
"""
from __future__ import annotations

import ast
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .linalg import LinearSystem
from .series import product_builder


# ---------------------------------------------------------------- algebras


@dataclass(frozen=True)
class Algebra:
    """Basis names, real degrees, parities, structure constants and the integral."""

    names: tuple
    degrees: tuple
    table: dict  # (i, j) -> {k: Fraction}, e_i * e_j in that order
    integral: dict  # i -> Fraction
    unit: int = 0

    @property
    def dim(self):
        return len(self.names)

    def parity(self, i):
        return self.degrees[i] % 2

    def index(self, name):
        return self.names.index(name)

    def basis(self, i):
        return CohClass(self, {i: Fraction(1)})

    def one(self):
        return self.basis(self.unit)

    def zero(self):
        return CohClass(self, {})

    @cached_property
    def pairing(self):
        """g[i][j] = integral of e_i e_j."""
        n = self.dim
        g = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), prod in self.table.items():
            g[i][j] = sum((c * self.integral.get(k, 0) for k, c in prod.items()), Fraction(0))
        return g

    @cached_property
    def diagonal(self):
        """Kunneth class of the diagonal, normalised so that pr_2*(Delta . pr_1^* g) = g."""
        n = self.dim
        g = self.pairing
        inv = _inverse(g)
        terms = {}
        for i in range(n):
            for j in range(n):
                # D = (g^{-1})^T S with S the parity signs
                c = inv[j][i] * (-1 if self.parity(j) else 1)
                if c:
                    terms[(i, j)] = c
        return Tensor(self, 2, terms)


def _inverse(m):
    n = len(m)
    cols = []
    for k in range(n):
        sys = LinearSystem(n)
        for i in range(n):
            sys.add({j: m[i][j] for j in range(n) if m[i][j]}, 1 if i == k else 0)
        cols.append(sys.solution())
    return [[cols[j][i] for j in range(n)] for i in range(n)]


class CohClass:
    """A class as rational coordinates on the basis of an Algebra."""

    __slots__ = ("alg", "coords")

    def __init__(self, alg, coords):
        self.alg = alg
        self.coords = {i: Fraction(c) for i, c in coords.items() if c}

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coords)
        for i, c in other.coords.items():
            out[i] = out.get(i, 0) + c
        return CohClass(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return CohClass(self.alg, {i: -c for i, c in self.coords.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CohClass(self.alg, {i: c * other for i, c in self.coords.items()})
        out = {}
        for i, a in self.coords.items():
            for j, b in other.coords.items():
                for k, c in self.alg.table.get((i, j), {}).items():
                    out[k] = out.get(k, 0) + a * b * c
        return CohClass(self.alg, out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n):
        out = self.alg.one()
        for _ in range(n):
            out = out * self
        return out

    def _coerce(self, x):
        if isinstance(x, CohClass):
            return x
        return self.alg.one() * Fraction(x)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        return isinstance(other, CohClass) and self.coords == other.coords

    def __hash__(self):
        return hash(tuple(sorted(self.coords.items())))

    def is_zero(self):
        return not self.coords

    def integral(self):
        return sum((c * self.alg.integral.get(i, 0) for i, c in self.coords.items()), Fraction(0))

    def parity(self):
        ps = {self.alg.parity(i) for i in self.coords}
        if len(ps) > 1:
            raise ValueError("class of mixed parity")
        return ps.pop() if ps else 0

    def __repr__(self):
        return f"CohClass({self})"

    def __str__(self):
        if not self.coords:
            return "0"
        parts = []
        for i, c in sorted(self.coords.items()):
            name = self.alg.names[i]
            parts.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(parts)


class Tensor:
    """An element of H*(Y^n) written in the Kunneth basis of an Algebra for Y."""

    __slots__ = ("alg", "n", "terms")

    def __init__(self, alg, n, terms):
        self.alg = alg
        self.n = n
        self.terms = {k: Fraction(c) for k, c in terms.items() if c}

    @classmethod
    def box(cls, *classes):
        alg = classes[0].alg
        terms = {(): Fraction(1)}
        for x in classes:
            terms = {k + (i,): c * a for k, c in terms.items() for i, a in x.coords.items()}
        return cls(alg, len(classes), terms)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Tensor(self.alg, self.n, out)

    def __neg__(self):
        return Tensor(self.alg, self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return Tensor(self.alg, self.n, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        alg = self.alg
        out = {}
        for ka, ca in self.terms.items():
            pa = [alg.parity(i) for i in ka]
            for kb, cb in other.terms.items():
                # moving b_j to the left past a_k for k > j
                sign = 0
                for j, ib in enumerate(kb):
                    if alg.parity(ib):
                        sign += sum(pa[j + 1:])
                parts = {(): ca * cb * (-1 if sign % 2 else 1)}
                for ia, ib in zip(ka, kb):
                    p = alg.table.get((ia, ib))
                    if not p:
                        parts = {}
                        break
                    parts = {k + (m,): v * c for k, v in parts.items() for m, c in p.items()}
                for k, v in parts.items():
                    out[k] = out.get(k, 0) + v
        return Tensor(alg, self.n, out)

    def embed(self, slots, n):
        """Place the factors at the given increasing slots of Y^n, units elsewhere."""
        u = self.alg.unit
        out = {}
        for k, c in self.terms.items():
            key = [u] * n
            for s, i in zip(slots, k):
                key[s] = i
            out[tuple(key)] = c
        return Tensor(self.alg, n, out)

    def push(self, keep):
        """Integrate out every slot not in `keep` (kept in increasing order)."""
        alg = self.alg
        out = {}
        for k, c in self.terms.items():
            val = c
            for s, i in enumerate(k):
                if s not in keep:
                    val *= alg.integral.get(i, 0)
                    if not val:
                        break
            if val:
                key = tuple(k[s] for s in keep)
                out[key] = out.get(key, 0) + val
        return Tensor(alg, len(keep), out)

    def as_class(self):
        assert self.n == 1
        return CohClass(self.alg, {k[0]: c for k, c in self.terms.items()})

    def map(self, f, alg):
        """Apply a linear map f: basis index -> {index: coef} factorwise."""
        res = {}
        for k, c in self.terms.items():
            parts = {(): c}
            for i in k:
                parts = {p + (j,): v * a for p, v in parts.items() for j, a in f(i).items()}
            for p, v in parts.items():
                res[p] = res.get(p, 0) + v
        return Tensor(alg, self.n, res)

    def pieces(self):
        """Yield (coef, factor indices) over the Kunneth basis."""
        return sorted(self.terms.items())

    def __eq__(self, other):
        return isinstance(other, Tensor) and self.n == other.n and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*" + "⊠".join(self.alg.names[i] for i in k)
                          for k, c in sorted(self.terms.items()))


# ---------------------------------------------------------------- numeric data


@dataclass(frozen=True)
class NumericPack:
    """Chern numbers entering the normalisation factor and the W-divisor equation."""

    eB: int = 0
    c1N_c1TB: int = 0
    c1N_sq: int = 0

    @property
    def c3(self):
        # integral of c_3(T_X (x) omega_X) for a Weierstrass fibration
        return -60 * self.c1N_sq

    @property
    def q_exponent(self):
        return -self.eB - self.c1N_c1TB - self.c1N_sq

    @property
    def w_shift(self):
        return self.eB + self.c1N_c1TB

    def to_json(self):
        return {"eB": self.eB, "c1N_c1TB": self.c1N_c1TB, "c1N_sq": self.c1N_sq}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(obj["eB"]), int(obj["c1N_c1TB"]), int(obj["c1N_sq"]))


def normalization_product(pack, qorder, porder=0, pi_stable=False):
    """prod (1-q^m)^(-e(B) - c1N.(c1TB + c1N)) * prod (1-p^l q^m)^(-l c3).

    The pi-stable variant drops the p-dependent factor.
    """
    if isinstance(pack, Geometry):
        pack = pack.pack
    out = product_builder(lambda l, m: pack.q_exponent if l == 0 else 0, qorder)
    if pack.c3 and not pi_stable:
        out = out * product_builder(lambda l, m: -l * pack.c3, qorder, porder=porder)
    return out


# ---------------------------------------------------------------- geometry


@dataclass
class Geometry:
    """Cohomology model of an elliptic fibration pi: X -> B with a section."""

    name: str
    X: Algebra
    B: Algebra
    push: dict  # X index -> {B index: coef}
    pull: dict  # B index -> {X index: coef}
    W: CohClass
    K: CohClass
    c2X: CohClass
    c2B: CohClass  # pulled back to X
    c1N: CohClass  # on B
    pack: NumericPack
    complete: bool = True  # whether the basis spans all of H*(X)
    reduced: bool = False  # reduced theory: no W-divisor or string rule
    vdim: object = None  # beta -> complex virtual dimension, or None
    beta_class: object = None  # beta -> curve class as a base cohomology class
    lattice_rank: int = 0  # rank of the lattice behind the reduced correction term
    perp: tuple = ()  # basis indices of modelled classes orthogonal to F and B
    symbols: dict = field(default_factory=dict)

    # -- fibration maps

    def pi_push(self, x):
        out = {}
        for i, c in x.coords.items():
            for j, a in self.push.get(i, {}).items():
                out[j] = out.get(j, 0) + c * a
        return CohClass(self.B, out)

    def pi_pull(self, a):
        out = {}
        for i, c in a.coords.items():
            for j, v in self.pull.get(i, {}).items():
                out[j] = out.get(j, 0) + c * v
        return CohClass(self.X, out)

    def pp(self, x):
        return self.pi_pull(self.pi_push(x))

    def cls(self, name):
        return self.X.basis(self.X.index(name))

    def parse(self, text):
        return parse_class(text, self.symbols, self.X)

    # -- weight operator

    def wt_operator(self, x):
        return self.W * self.pp(x) - self.pp(self.W * x)

    @cached_property
    def weights(self):
        """Eigenvalue of [W, pi^* pi_*] on every basis element; raises if not diagonal."""
        out = []
        for i in range(self.X.dim):
            e = self.X.basis(i)
            img = self.wt_operator(e)
            lam = img.coords.get(i, Fraction(0))
            if img != e * lam or lam not in (-1, 0, 1):
                raise ValueError(f"basis element {self.X.names[i]} is not a weight eigenvector")
            out.append(int(lam))
        return tuple(out)

    def wt(self, x):
        ws = {self.weights[i] for i in x.coords}
        if len(ws) != 1:
            raise ValueError(f"{x} is not a weight eigenvector")
        return ws.pop()

    # -- diagonals

    @cached_property
    def delta_X(self):
        return self.X.diagonal

    @cached_property
    def delta_B(self):
        """Diagonal of the base, pulled back to X x X."""
        return self.B.diagonal.map(lambda i: self.pull.get(i, {}), self.X)

    @cached_property
    def delta_B_pairs(self):
        """Kunneth pieces (coef, left, right) of Delta_B on the base."""
        return [(c, self.B.basis(i), self.B.basis(j)) for (i, j), c in self.B.diagonal.pieces()]

    # -- the correspondence E

    def e_pair(self, g1, g2):
        """E(g1 [x] g2) via the six-term expansion in cup products, pi_* and pi^*."""
        pp, push, pull, W = self.pp, self.pi_push, self.pi_pull, self.W
        return (pp(g1 * g2) + g1 * pp(g2) + pp(g1) * g2
                - pull(push(W * g1) * push(g2)) - pull(push(g1) * push(g2 * W))
                - pull(push(g1) * push(g2)) * W)

    def e_tensor(self, gamma):
        """E applied to a Kunneth class on X x X, linear extension of e_pair."""
        out = self.X.zero()
        for (i, j), c in gamma.pieces():
            out = out + self.e_pair(self.X.basis(i), self.X.basis(j)) * c
        return out

    @cached_property
    def e_class(self):
        """The class E on X^3 built from the diagonals."""
        X = self.X
        dX, dB = self.delta_X, self.delta_B
        w = Tensor.box(self.W)
        dB123 = (dB.embed((0, 1), 3) * dB.embed((1, 2), 3))
        return (dX.embed((0, 1), 3) * dB.embed((0, 2), 3)
                + dX.embed((0, 2), 3) * dB.embed((0, 1), 3)
                + dX.embed((1, 2), 3) * dB.embed((0, 1), 3)
                - dB123 * (w.embed((0,), 3) + w.embed((1,), 3) + w.embed((2,), 3)))

    def e_single(self, gamma):
        """E(gamma) = pr_23*(pr_1^* gamma . E) as a Kunneth class on X x X."""
        if not self.complete and not self.pi_push(gamma).coords.keys() <= set(self._positive_base()):
            raise ValueError("E of a class with a fundamental-class component needs the full diagonal")
        g = Tensor.box(gamma).embed((0,), 3)
        return (g * self.e_class).push((1, 2))

    def e_tensor_from_class(self, gamma):
        """E(Gamma) = pr_3*(pr_12^* Gamma . E), the definition on X^3."""
        return (gamma.embed((0, 1), 3) * self.e_class).push((2,)).as_class()

    def _positive_base(self):
        return [i for i in range(self.B.dim) if self.B.degrees[i] > 0]

    def e_corr(self, *args):
        """E(gamma) for one class, E(gamma [x] gamma') for a pair or a Tensor."""
        if len(args) == 1 and isinstance(args[0], Tensor):
            return self.e_tensor(args[0])
        if len(args) == 1:
            return self.e_single(args[0])
        return self.e_pair(*args)

    # -- pulled-back divisors

    @cached_property
    def base_divisors(self):
        """X basis index -> base class, for basis elements that are pullbacks of H^2(B)."""
        out = {}
        for j in range(self.B.dim):
            if self.B.degrees[j] != 2:
                continue
            img = self.pi_pull(self.B.basis(j))
            if len(img.coords) == 1:
                (i, c), = img.coords.items()
                out[i] = self.B.basis(j) * (1 / c)
        return out

    def integral_X(self, x):
        return x.integral()

    def base_pairing(self, lam, beta):
        """lam . (beta + c1(N)/2) for a base divisor lam and base curve class beta."""
        return (lam * (beta + self.c1N * Fraction(1, 2))).integral()


# ---------------------------------------------------------------- builders


def _product_algebra(names_a, deg_a, table_a, names_b, deg_b, table_b, integral, unit=0):
    names, degrees = [], []
    for i, na in enumerate(names_a):
        for j, nb in enumerate(names_b):
            names.append(_join(na, nb))
            degrees.append(deg_a[i] + deg_b[j])
    nb = len(names_b)
    table = {}
    for i1 in range(len(names_a)):
        for j1 in range(nb):
            for i2 in range(len(names_a)):
                for j2 in range(nb):
                    pa = table_a.get((i1, i2))
                    pb = table_b.get((j1, j2))
                    if not pa or not pb:
                        continue
                    # (a1 b1)(a2 b2) = (-1)^{|b1||a2|} a1 a2 b1 b2
                    sign = -1 if (deg_b[j1] % 2 and deg_a[i2] % 2) else 1
                    out = {}
                    for ka, ca in pa.items():
                        for kb, cb in pb.items():
                            out[ka * nb + kb] = out.get(ka * nb + kb, 0) + sign * ca * cb
                    table[(i1 * nb + j1, i2 * nb + j2)] = {k: Fraction(c) for k, c in out.items() if c}
    integ = {i * nb + j: Fraction(c) for (i, j), c in integral.items()}
    return Algebra(tuple(names), tuple(degrees), table, integ, unit)


def _join(a, b):
    if a == "1":
        return b
    if b == "1":
        return a
    return f"{a}*{b}"


def _truncated_poly_table(n):
    """H*(P^{n-1}) style ring 1, h, ..., h^{n-1}."""
    return {(i, j): {i + j: Fraction(1)} for i in range(n) for j in range(n) if i + j < n}


def build_p2xe():
    """P^2 x E over P^2: basis {1, H, H^2} x {1, alpha, beta, p} with alpha beta = p."""
    names_b = ("1", "H", "H^2")
    deg_b = (0, 2, 4)
    tb = _truncated_poly_table(3)
    names_e = ("1", "alpha", "beta", "p")
    deg_e = (0, 1, 1, 2)
    te = {(0, 0): {0: 1}, (0, 1): {1: 1}, (0, 2): {2: 1}, (0, 3): {3: 1},
          (1, 0): {1: 1}, (2, 0): {2: 1}, (3, 0): {3: 1},
          (1, 2): {3: 1}, (2, 1): {3: -1}}
    te = {k: {i: Fraction(c) for i, c in v.items()} for k, v in te.items()}
    X = _product_algebra(names_b, deg_b, tb, names_e, deg_e, te, {(2, 3): 1})
    B = Algebra(names_b, deg_b, tb, {2: Fraction(1)})
    push = {a * 4 + 3: {a: Fraction(1)} for a in range(3)}
    pull = {a: {a * 4: Fraction(1)} for a in range(3)}
    H = X.basis(X.index("H"))
    symbols = {"H": H, "p": X.basis(X.index("p")), "alpha": X.basis(X.index("alpha")),
               "beta": X.basis(X.index("beta")), "W": X.basis(X.index("p"))}
    g = Geometry(
        name="P2xE", X=X, B=B, push=push, pull=pull,
        W=symbols["W"], K=H * -3, c2X=H * H * 3, c2B=H * H * 3, c1N=B.zero(),
        pack=NumericPack(eB=3, c1N_c1TB=0, c1N_sq=0),
        vdim=lambda beta: 3 * beta, beta_class=lambda beta: B.basis(1) * beta, symbols=symbols,
    )
    return g


def build_k3xc():
    """K3 x C over P^1 x C at t = 1, on the span of 1, F, W, a1, a2, p.

    W = B + F with B the section, a1 and a2 span a hyperbolic plane orthogonal to F and B.
    The remaining 18 directions of H^2 enter only through the reduced correction term.
    """
    names = ("1", "F", "W", "a1", "a2", "p")
    degrees = (0, 2, 2, 2, 2, 4)
    one, F, Wi, a1, a2, p = range(6)
    table = {}
    for i in range(6):
        table[(one, i)] = {i: Fraction(1)}
        table[(i, one)] = {i: Fraction(1)}
    for x, y in ((F, Wi), (Wi, F), (a1, a2), (a2, a1)):
        table[(x, y)] = {p: Fraction(1)}
    X = Algebra(names, degrees, table, {p: Fraction(1)})
    B = Algebra(("1", "pt"), (0, 2), {(0, 0): {0: Fraction(1)}, (0, 1): {1: Fraction(1)},
                                      (1, 0): {1: Fraction(1)}}, {1: Fraction(1)})
    push = {p: {1: Fraction(1)}, Wi: {0: Fraction(1)}}
    pull = {0: {one: Fraction(1)}, 1: {F: Fraction(1)}}
    symbols = {n: X.basis(i) for i, n in enumerate(names) if n != "1"}
    symbols["B"] = symbols["W"] - symbols["F"]
    return Geometry(
        name="K3xC", X=X, B=B, push=push, pull=pull,
        W=symbols["W"], K=X.one() * -1, c2X=symbols["p"] * 24, c2B=symbols["F"] * 2,
        c1N=B.basis(1) * -2, pack=NumericPack(eB=2, c1N_c1TB=-2, c1N_sq=0),
        complete=False, reduced=True, beta_class=lambda beta: B.one() * beta,
        lattice_rank=20, perp=(a1, a2), symbols=symbols,
    )


PRESETS = {"P2xE": build_p2xe, "K3xC": build_k3xc}


# ---------------------------------------------------------------- class expressions


def parse_class(text, symbols, alg):
    """Evaluate an expression such as 'H^2*p' or '3*H + W' over named classes."""
    tree = ast.parse(text.replace("^", "**").replace("𝗉", "p"), mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                if isinstance(a, CohClass) or isinstance(b, CohClass):
                    return a * b if isinstance(a, CohClass) else b * a
                return a * b
            if isinstance(node.op, ast.Div) and not isinstance(b, CohClass):
                return a * (1 / Fraction(b)) if isinstance(a, CohClass) else Fraction(a) / b
            if isinstance(node.op, ast.Pow) and isinstance(b, int):
                return a ** b
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            if node.value == 1:
                return alg.one()
            return node.value
        if isinstance(node, ast.Name) and node.id in symbols:
            return symbols[node.id]
        raise ValueError(f"cannot parse class expression {text!r}")

    out = ev(tree)
    if not isinstance(out, CohClass):
        out = alg.one() * Fraction(out)
    return out


def class_label(x):
    return str(x)


__all__ = [
    "Algebra", "CohClass", "Tensor", "NumericPack", "Geometry", "build_p2xe", "build_k3xc",
    "normalization_product", "parse_class", "PRESETS",
]
