from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qjacobi.cohomology import NumericPack, Tensor, build_k3xc, build_p2xe, normalization_product
from qjacobi.partitions import partitions
from qjacobi.series import FourierSeries

G = build_p2xe()
X = G.X
idx = st.integers(0, X.dim - 1)


@st.composite
def classes(draw):
    coords = {draw(idx): Fraction(draw(st.integers(-3, 3)), draw(st.integers(1, 3))) for _ in range(draw(st.integers(0, 3)))}
    from qjacobi.cohomology import CohClass

    return CohClass(X, coords)


def _basis():
    return [X.basis(i) for i in range(X.dim)]


def test_model_shape():
    assert X.dim == 12
    assert G.W == G.cls("p")
    assert G.K == G.cls("H") * -3
    assert G.c2X == G.cls("H^2") * 3


@given(idx, idx)
def test_graded_commutativity(i, j):
    a, b = X.basis(i), X.basis(j)
    sign = -1 if X.parity(i) and X.parity(j) else 1
    assert a * b == b * a * sign


@given(classes(), classes(), classes())
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


def test_odd_product():
    assert G.cls("alpha") * G.cls("beta") == G.cls("p")
    assert G.cls("beta") * G.cls("alpha") == -G.cls("p")


def test_weights():
    assert set(G.weights) <= {-1, 0, 1}
    assert G.wt(G.cls("p")) == 1
    assert G.wt(G.pi_pull(G.B.basis(1))) == -1
    assert G.wt(G.cls("H*alpha")) == 0
    with pytest.raises(ValueError):
        G.wt(G.cls("p") + G.cls("H"))


def test_weight_decomposition_spans():
    counts = {w: G.weights.count(w) for w in (-1, 0, 1)}
    assert sum(counts.values()) == X.dim
    assert counts[1] == 3 and counts[-1] == 3


def test_push_and_pull():
    for a, name in enumerate(("p", "H*p", "H^2*p")):
        assert G.pi_push(G.cls(name)) == G.B.basis(a)
    for name in ("1", "H", "H^2", "alpha"):
        assert not G.pi_push(X.one() if name == "1" else G.cls(name)).coords


@given(st.integers(0, 2), classes())
def test_projection_formula(a, x):
    alpha = G.B.basis(a)
    assert G.pi_push(G.pi_pull(alpha) * x) == alpha * G.pi_push(x)


@given(classes())
def test_diagonal_reproduces_classes(x):
    d = G.delta_X
    got = (d * Tensor.box(x, X.one())).push((1,)).as_class()
    assert got == x


def test_c3_vanishes_for_product():
    assert G.pack.c3 == 0


def test_e_unit_vectors():
    assert G.e_single(X.one()) == G.delta_B
    assert G.e_single(G.W) == G.delta_X
    for x in _basis():
        assert G.e_tensor(Tensor.box(G.W, x)) == x
        assert G.e_tensor(Tensor.box(x, X.one())) == G.pp(x)


@given(idx, idx)
def test_e_symmetry(i, j):
    a, b = X.basis(i), X.basis(j)
    sign = -1 if X.parity(i) and X.parity(j) else 1
    assert G.e_pair(a, b) == G.e_pair(b, a) * sign


@given(idx, idx)
def test_e_expansion_matches_triple_class(i, j):
    box = Tensor.box(X.basis(i), X.basis(j))
    assert G.e_tensor_from_class(box) == G.e_pair(X.basis(i), X.basis(j))


@given(st.integers(0, 2), st.integers(0, 2), idx, idx)
def test_e_base_linearity_pair(a, b, i, j):
    la, lb = G.B.basis(a), G.B.basis(b)
    x, y = X.basis(i), X.basis(j)
    lhs = G.e_pair(G.pi_pull(la) * x, G.pi_pull(lb) * y)
    assert lhs == G.pi_pull(la * lb) * G.e_pair(x, y)


@given(st.integers(0, 2), idx)
def test_e_base_linearity_single(a, i):
    la, x = G.B.basis(a), X.basis(i)
    lhs = G.e_single(G.pi_pull(la) * x)
    rhs = Tensor.box(G.pi_pull(la)).embed((0,), 2) * G.e_single(x)
    assert lhs == rhs


def test_e_weight_zero_part():
    for i, w in enumerate(G.weights):
        if w:
            continue
        a = X.basis(i)
        both = Tensor.box(a).embed((0,), 2) + Tensor.box(a).embed((1,), 2)
        assert G.e_single(a) == both * G.delta_B


def test_normalization_p2xe():
    n = 20
    counts = [sum(1 for _ in partitions(m)) for m in range(n + 1)]
    assert normalization_product(G, n) == FourierSeries(0, n, counts) ** 3


def test_normalization_trivial_pack():
    assert normalization_product(NumericPack(), 8) == FourierSeries.const(1, 8)


@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-2, 2))
def test_normalization_log_derivative(e, c, c2):
    from qjacobi.ring import eisenstein

    pack = NumericPack(e, c, c2)
    n = 10
    f = normalization_product(pack, n, pi_stable=True)
    g2 = eisenstein(2, n) + FourierSeries.const(Fraction(1, 24), n)
    assert f.d_q() == (g2 * f).scale(-pack.q_exponent)


def test_pack_json():
    p = NumericPack(3, 1, -2)
    assert NumericPack.from_json(p.to_json()) == p


def test_k3_model():
    k = build_k3xc()
    assert k.wt(k.symbols["W"]) == 1
    assert k.wt(k.symbols["F"]) == -1
    assert k.wt(k.symbols["a1"]) == 0
    assert k.pi_push(k.symbols["p"]) == k.B.basis(1)


def test_parse_class():
    assert G.parse("H^2*p") == G.cls("H^2*p")
    assert G.parse("3*H + W") == G.cls("H") * 3 + G.W
    with pytest.raises(ValueError):
        G.parse("Q")
