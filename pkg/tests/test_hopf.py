import pytest

from conftest import built
from hopfkit.coalgebra import simple_decomposition
from hopfkit.errors import AntipodeAxiomFails, BadParameter, ExceedsCap, NotHopfMap, NotSubcoalgebra
from hopfkit.exact_linalg.cyclotomic import CycNumber
from hopfkit.exact_linalg.matrix import ExactMatrix, SubspaceBasis
from hopfkit.hopf import (adjoint_action, antipode_order, check_exact_sequence, coinvariants, dual_hopf,
                          embed_hopf, grouplike_group, hopf_type, is_hopf_map, is_pointed,
                          is_pointed_nontrivial, is_semisimple, new_hopf, subalgebra_generated, tensor_hopf)


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_taft_invariants(N):
    # dim N^2, G = C_N, S^2 = conjugation by g so ord S = 2N, self-dual so type (N, N)
    H = built("taft", N=N)
    assert H.dim == N * N
    G = grouplike_group(H)
    assert G.order == N and G.abelian and G.invariants == (N,)
    assert antipode_order(H) == 2 * N
    assert not is_semisimple(H)
    assert tuple(hopf_type(H)) == (N, N)
    assert is_pointed(H) and is_pointed_nontrivial(H)


def test_sweedler_antipode_order_is_four(sweedler):
    assert antipode_order(sweedler) == 4


def test_antipode_order_cap(taft3):
    with pytest.raises(ExceedsCap):
        antipode_order(taft3, cap=5)


def test_group_algebra_is_semisimple_and_pointed():
    H = built("group_algebra", group="C3")
    assert is_semisimple(H) and is_pointed(H) and not is_pointed_nontrivial(H)
    assert antipode_order(H) == 2


def test_dual_swaps_type():
    H = built("uq_sl2")
    a, b = hopf_type(H)
    assert tuple(hopf_type(dual_hopf(H))) == (b, a)


def test_dual_of_dual_is_the_original(taft3):
    DD = dual_hopf(dual_hopf(taft3))
    assert DD.mu == taft3.mu and DD.delta == taft3.delta and DD.S == taft3.S


def test_group_dual_of_nonabelian_group_is_not_pointed():
    H = built("group_dual", group="Heisenberg27")
    # grouplikes of k^G are the characters of G, i.e. of G/[G,G] = C3 x C3
    assert grouplike_group(H).describe() == "C3 x C3"
    assert not is_pointed(H)
    assert grouplike_group(dual_hopf(H)).order == 27


@pytest.mark.parametrize("name, want", [
    ("taft_x_c3", "C3 x C3"),
    ("r_q", "C9"),
    ("uq_sl2", "C3"),
])
def test_grouplike_groups(name, want):
    assert grouplike_group(built(name)).describe() == want


def test_nonabelian_group_structure():
    G = grouplike_group(built("group_algebra", group="Heisenberg27"))
    assert G.order == 27 and not G.abelian
    assert G.describe() == "nonabelian of order 27, exponent 3"


def test_tensor_dimensions_and_group(taft3):
    C3 = built("group_algebra", group="C3")
    T = tensor_hopf(taft3, C3)
    assert T.dim == 27 and antipode_order(T) == 6
    assert grouplike_group(T).describe() == "C3 x C3"


def test_embed_hopf():
    H = built("group_algebra", group="C3", m=1)
    E = embed_hopf(H, 3)
    assert E.m == 3 and E.dim == 3
    with pytest.raises(BadParameter):
        embed_hopf(built("taft", N=3), 4)


def test_wrong_antipode_sign_is_rejected():
    # kC2 with S(g) = -g
    mu = {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): 1}
    delta = {(0, 0, 0): 1, (1, 1, 1): 1}
    good = new_hopf(mu, [1, 0], delta, [1, 1], ExactMatrix.identity(2))
    assert good.dim == 2
    with pytest.raises(AntipodeAxiomFails):
        new_hopf(mu, [1, 0], delta, [1, 1], ExactMatrix.from_rows([[1, 0], [0, -1]]))


def test_adjoint_action_of_g_on_x(taft3):
    # g x g^-1 = q x
    H = taft3
    g, x = H.basis_vector(3), H.basis_vector(1)
    q = CycNumber.zeta(3)
    assert adjoint_action(H, g) @ x == x.scale(q)
    assert adjoint_action(H, g, "right") @ x == x.scale(q.inverse())


def test_adjoint_action_of_unit_is_identity(taft3):
    assert adjoint_action(taft3, taft3.unit_vector) == ExactMatrix.identity(9, taft3.m)


def test_subalgebra_generated_by_grouplike(taft3):
    g = taft3.basis_vector(3)
    W = subalgebra_generated(taft3, SubspaceBasis.span(g.T, 9))
    assert W.dim == 3


def test_subalgebra_generated_by_skew_primitives(taft3):
    # span{1, g, x} is a subcoalgebra; it generates everything
    cols = [taft3.basis_vector(i) for i in (0, 1, 3)]
    seed = SubspaceBasis.span(ExactMatrix.from_rows([[c[j, 0] for j in range(9)] for c in cols], taft3.m), 9)
    assert subalgebra_generated(taft3, seed).dim == 9


def test_subalgebra_needs_subcoalgebra(taft3):
    with pytest.raises(NotSubcoalgebra):
        subalgebra_generated(taft3, SubspaceBasis.span(taft3.basis_vector(1).T, 9))


def _c9_to_c3():
    C9 = built("group_algebra", group="C9")
    C3 = built("group_algebra", group="C3", m=9)
    # g^k -> h^(k mod 3); both bases are listed by exponent
    pi = ExactMatrix.from_raw_dict(3, 9, {(k % 3, k): 1 for k in range(9)}, 9)
    return C9, C3, pi


def test_coinvariants_of_quotient():
    C9, C3, pi = _c9_to_c3()
    assert is_hopf_map(C9, C3, pi) is None
    co = coinvariants(C9, pi, C3)
    # {1, g^3, g^6}
    assert co.dim == 3
    assert co.contains_vectors(C9.basis_vector(3))


def test_exact_sequence_c3_c9_c3():
    C9, C3, pi = _c9_to_c3()
    A = built("group_algebra", group="C3", m=9)
    iota = ExactMatrix.from_raw_dict(9, 3, {(3 * k, k): 1 for k in range(3)}, 9)
    rep = check_exact_sequence(A, iota, C9, pi, C3)
    assert rep.exact and rep.dim_identity


def test_exact_sequence_rejects_identity_after_unit():
    C9, C3, pi = _c9_to_c3()
    one = built("group_algebra", group="C3", m=9)
    # iota = unit after counit is a Hopf map but not injective
    iota = ExactMatrix.from_raw_dict(9, 3, {(0, k): 1 for k in range(3)}, 9)
    rep = check_exact_sequence(one, iota, C9, pi, C3)
    assert not rep.exact
    assert not rep.injective and not rep.coinvariants_match
    assert rep.witnesses["coinvariants"] == (3, 1)


def test_exact_sequence_needs_hopf_maps():
    C9, C3, pi = _c9_to_c3()
    A = built("group_algebra", group="C3", m=9)
    iota = ExactMatrix.from_raw_dict(9, 3, {(k, k): 1 for k in range(3)}, 9)   # h -> g is not multiplicative
    with pytest.raises(NotHopfMap):
        check_exact_sequence(A, iota, C9, pi, C3)


def test_is_hopf_map_names_the_failure():
    C9, C3, pi = _c9_to_c3()
    trivial = ExactMatrix.from_raw_dict(3, 9, {(0, k): 1 for k in range(9)}, 9)
    assert is_hopf_map(C9, C3, trivial) is None
    assert is_hopf_map(C9, C3, pi.scale(CycNumber.rational(2, 9))) == "multiplication"
    assert is_hopf_map(C9, C3, ExactMatrix.zeros(2, 9, 9)) == "shape"


def test_dual_of_abelian_group_algebra_is_a_group_algebra():
    # k^{C3} over Q(zeta_3) is isomorphic to kC3
    D = dual_hopf(built("group_algebra", group="C3"))
    assert is_semisimple(D) and grouplike_group(D).describe() == "C3"


def test_four_dim_block_generates_uq_dual():
    H = built("uq_sl2_dual")
    D = next(b for b in simple_decomposition(H.coalgebra) if b.comodule_dim == 2)
    assert subalgebra_generated(H, D.basis).dim == 27
