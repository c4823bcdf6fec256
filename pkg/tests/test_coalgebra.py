import pytest

from conftest import built
from hopfkit.assoc import Algebra, central_idempotents
from hopfkit.coalgebra import (classify_matrix2_image, coideal_projection, comatrix_coalgebra, coradical,
                               direct_sum, dual_algebra, filtration, group_coalgebra, grouplikes, is_coideal,
                               new_coalgebra, nichols_layers, simple_decomposition, skew_primitives,
                               wedge_filtration)
from hopfkit.errors import CounitFails, NotCoalgebraMap, NotCoassociative, NotGrouplike, NotSplit
from hopfkit.exact_linalg.matrix import ExactMatrix, SubspaceBasis, kernel
from hopfkit.hopf import tensor_hopf


def e(C, i):
    return C.basis_vector(i)


# ---------------------------------------------------------------- construction

def test_group_and_comatrix_coalgebras_are_valid():
    assert group_coalgebra(3).dim == 3
    M2 = comatrix_coalgebra(2)
    assert M2.labels == ("e11", "e12", "e21", "e22")


def test_missing_counit_term_is_rejected():
    # Delta(x) = x (x) 1 only, eps(x) = 0: (id (x) eps) Delta(x) = 0 != x
    with pytest.raises(CounitFails):
        new_coalgebra({(0, 0, 0): 1, (1, 1, 0): 1}, [1, 0])


def test_non_coassociative_is_rejected_with_witness():
    M2 = comatrix_coalgebra(2)
    delta = {k: 1 for k in M2.delta}
    delta[(0, 1, 2)] = 2                      # Delta(e11) with 2 e12 (x) e21
    with pytest.raises(NotCoassociative) as info:
        new_coalgebra(delta, [1, 0, 0, 1])
    assert info.value.witness is not None


# ---------------------------------------------------------------- grouplikes and skew-primitives

def test_grouplikes():
    assert len(grouplikes(group_coalgebra(3))) == 3
    assert grouplikes(comatrix_coalgebra(2)) == []


def test_taft_grouplikes_are_powers_of_g(taft3):
    C = taft3.coalgebra
    found = {C.labels[next(iter(g.nonzero_raw()))[0]] for g in grouplikes(C)}
    assert found == {"1", "g", "g^2"}


def test_skew_primitives_group_coalgebra():
    C = group_coalgebra(3)
    P = skew_primitives(C, e(C, 1), e(C, 0))
    assert P == SubspaceBasis.span(ExactMatrix.from_rows([[1, -1, 0]]), 3)


def test_skew_primitives_taft(taft3):
    # skew_primitives(C, g, h) = {y : Delta y = g (x) y + y (x) h}; Delta x = x (x) 1 + g (x) x
    C = taft3.coalgebra
    one, g, g2 = e(C, 0), e(C, 3), e(C, 6)
    P = skew_primitives(C, g, one)
    assert P.dim == 2 and P.contains_vectors(e(C, 1))
    assert skew_primitives(C, g2, one).dim == 1


def test_skew_primitives_need_grouplikes(taft3):
    C = taft3.coalgebra
    with pytest.raises(NotGrouplike):
        skew_primitives(C, e(C, 1), e(C, 0))


# ---------------------------------------------------------------- dual algebra, coradical, blocks

def test_dual_algebras():
    mu, u = dual_algebra(group_coalgebra(3))
    A = Algebra(mu, u)
    for i in range(3):
        for j in range(3):
            assert A.mul(A.basis_vector(i), A.basis_vector(j)) == (A.basis_vector(i) if i == j else
                                                                    ExactMatrix.zeros(3, 1))
    mu, u = dual_algebra(comatrix_coalgebra(2))
    A = Algebra(mu, u)
    idx = lambda i, j: 2 * i + j  # noqa: E731
    for i, j, k, l in [(0, 1, 1, 0), (0, 1, 0, 1), (1, 0, 0, 1), (1, 1, 1, 0)]:
        prod = A.mul(A.basis_vector(idx(i, j)), A.basis_vector(idx(k, l)))
        # e_ij^* e_kl^* = delta_jk e_il^*: the dual of M*(2) is the matrix algebra
        want = A.basis_vector(idx(i, l)) if j == k else ExactMatrix.zeros(4, 1)
        assert prod == want


def test_taft_dual_radical(taft3):
    mu, u = dual_algebra(taft3.coalgebra)
    assert Algebra(mu, u).radical().dim == 6


def test_coradicals(taft3):
    assert coradical(group_coalgebra(3)).dim == 3
    assert coradical(taft3.coalgebra).dim == 3
    assert coradical(direct_sum(comatrix_coalgebra(2), group_coalgebra(1))).dim == 5


def test_simple_decomposition_sizes():
    assert [b.comodule_dim for b in simple_decomposition(group_coalgebra(3, m=3))] == [1, 1, 1]
    blocks = simple_decomposition(direct_sum(comatrix_coalgebra(3), comatrix_coalgebra(2)))
    assert sorted(b.comodule_dim for b in blocks) == [2, 3]
    assert all(b.split for b in blocks)


def test_taft_tensor_c3_coradical_has_nine_grouplikes():
    H = built("taft_x_c3")
    blocks = simple_decomposition(H.coalgebra)
    assert len(blocks) == 9 and {b.comodule_dim for b in blocks} == {1}


def test_uq_dual_blocks():
    # observed: |G| = 1 and comodules of dimensions 1, 2, 3 (the simple u_q-modules)
    H = built("uq_sl2_dual")
    assert sorted(b.comodule_dim for b in simple_decomposition(H.coalgebra)) == [1, 2, 3]


def test_multiplicative_matrices_are_multiplicative():
    H = built("r_q_dual")
    for b in simple_decomposition(H.coalgebra):
        X = b.multiplicative_matrix
        d = b.comodule_dim
        for i in range(d):
            for j in range(d):
                want = sum((X[i][k] @ X[k][j].T for k in range(1, d)), X[i][0] @ X[0][j].T)
                assert H.coalgebra.comul(X[i][j]) == want


def test_not_split_reports_an_order():
    H = built("group_dual", group="Heisenberg27", m=1)
    with pytest.raises(NotSplit) as info:
        simple_decomposition(H.coalgebra)
    assert info.value.suggested_order == 3


def test_central_idempotents_of_kc3_over_q():
    mu, u = dual_algebra(group_coalgebra(3))
    # k^{C3} is split; the group algebra kC3 over Q is Q x Q(zeta_3)
    H = built("group_algebra", group="C3", m=1)
    A = H.algebra
    found = central_idempotents(A, A.center())
    assert sorted(ok for _, ok in found) == [False, True]


# ---------------------------------------------------------------- filtrations

def test_cosemisimple_filtration():
    C = group_coalgebra(3)
    f = filtration(C)
    assert f.stage_dims == (3,) and f.layer_dims == (0,)
    assert coideal_projection(C) == ExactMatrix.identity(3)
    assert f.isotypic == {}


@pytest.mark.parametrize("N", [2, 3, 4])
def test_taft_filtration(N):
    # H_n = span{g^i x^j : j <= n}, so dim H_n = N (n + 1)
    C = built("taft", N=N).coalgebra
    f = filtration(C, isotypic=False)
    assert f.stage_dims == tuple(N * (n + 1) for n in range(N))
    assert f.layer_dims == tuple(N * n for n in range(N))


def test_taft_projection(taft3):
    C = taft3.coalgebra
    pi = coideal_projection(C)
    I = kernel(pi)
    # kills x g^i and x^2 g^i
    killed = SubspaceBasis.span(ExactMatrix.from_rows(
        [[1 if k == i else 0 for k in range(9)] for i in range(9) if "x" in C.labels[i]]), 9)
    assert I == killed
    assert is_coideal(C, I)
    assert pi @ pi == pi


def test_book_projection_is_valid():
    C = built("book", m=1).coalgebra
    pi = coideal_projection(C)       # internal identities are re-checked on construction
    assert pi @ pi == pi and is_coideal(C, kernel(pi))


def test_layers_agree_with_wedge_on_uq():
    C = built("uq_sl2").coalgebra
    w = wedge_filtration(C)
    f = nichols_layers(C, coideal_projection(C), w)
    I = kernel(f.projection)
    assert all((D & I) == P for D, P in zip(f.stages, f.layers))
    assert f.layer_dims == (0, 6, 15, 21, 24)


def test_isotypic_table_sums_to_layers(taft3):
    f = filtration(taft3.coalgebra)
    for n, table in f.isotypic.items():
        assert sum(table.values()) == f.layer_dims[n]
    assert set(f.isotypic[1].values()) == {1}


# ---------------------------------------------------------------- images of M*(2)

def test_matrix2_image_identity():
    M2 = comatrix_coalgebra(2)
    img = classify_matrix2_image(ExactMatrix.identity(4), M2)
    assert img.dim == 4 and img.structure == "comatrix"


def test_matrix2_image_grouplike():
    C = group_coalgebra(2)
    f = ExactMatrix.from_rows([[1, 0, 0, 1], [0, 0, 0, 0]])       # e_ij -> delta_ij g
    img = classify_matrix2_image(f, C)
    assert img.dim == 1 and img.structure == "grouplikes"


def test_matrix2_image_in_taft(taft3):
    # e11 -> g, e12 -> x, e21 -> 0, e22 -> 1: the 3-dim coalgebra spanned by 1, g, x
    C = taft3.coalgebra
    cols = [e(C, 3), e(C, 1), ExactMatrix.zeros(9, 1, C.m), e(C, 0)]
    f = ExactMatrix.from_rows([[c[i, 0] for c in cols] for i in range(9)], C.m)
    img = classify_matrix2_image(f, C)
    assert img.dim == 3 and img.structure == "g,h,u"
    assert img.basis["u"] == e(C, 1)


def test_matrix2_image_rejects_non_maps(taft3):
    C = taft3.coalgebra
    f = ExactMatrix.from_rows([[1 if (i, j) == (1, 1) else 0 for j in range(4)] for i in range(9)], C.m)
    with pytest.raises(NotCoalgebraMap):
        classify_matrix2_image(f, C)


def test_tensor_coradical_is_product():
    H = tensor_hopf(built("group_algebra", group="C3"), built("group_algebra", group="C3"))
    assert len(grouplikes(H.coalgebra)) == 9
