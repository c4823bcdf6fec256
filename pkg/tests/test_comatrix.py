import pytest
from hypothesis import given, strategies as st

from conftest import built
from hopfkit.coalgebra import simple_decomposition
from hopfkit.comatrix import (ANTI, AUTO, ComatrixMap, anti_map, automorphism_normal_form,
                              antiautomorphism_normal_form, conditions_abc, conjugation_map, detect_kind,
                              normal_form, recover_conjugator, verify_antipode_on_block)
from hopfkit.errors import NotCoalgebraMap, NotStable, OrderOne
from hopfkit.exact_linalg.cyclotomic import CycNumber
from hopfkit.exact_linalg.matrix import ExactMatrix, inverse, rank


def z(m, k=1):
    return CycNumber.zeta(m, k)


def diag(vals, m):
    return ExactMatrix.from_rows([[vals[i] if i == j else 0 for j in range(len(vals))]
                                  for i in range(len(vals))], m)


# ---------------------------------------------------------------- conjugators

def test_recover_identity():
    f = ComatrixMap(2, AUTO, ExactMatrix.identity(4))
    assert recover_conjugator(f) == ExactMatrix.identity(2)


def test_recover_diagonal():
    U = diag([1, z(3)], 3)
    assert recover_conjugator(ComatrixMap(2, AUTO, conjugation_map(U))) == U
    # scalar multiples give the same map; the first nonzero entry is normalized to 1
    assert recover_conjugator(ComatrixMap(2, AUTO, conjugation_map(U.scale(z(3))))) == U


def test_transpose_is_afforded_by_identity():
    T = anti_map(ExactMatrix.identity(2))
    # e_ij -> e_ji
    assert T == ExactMatrix.from_raw_dict(4, 4, {(0, 0): 1, (2, 1): 1, (1, 2): 1, (3, 3): 1}, 1)
    assert recover_conjugator(ComatrixMap(2, ANTI, T)) == ExactMatrix.identity(2)


def test_detect_kind():
    U = ExactMatrix.from_rows([[1, 1], [0, 1]])
    assert detect_kind(conjugation_map(U), 2) == AUTO
    assert detect_kind(anti_map(U), 2) == ANTI
    with pytest.raises(NotCoalgebraMap):
        detect_kind(diag([1, 2, 1, 1], 1), 2)


def test_non_map_is_rejected():
    with pytest.raises(NotCoalgebraMap):
        recover_conjugator(ComatrixMap(2, AUTO, diag([1, 1, 1, 2], 1)))


def test_shape_is_checked():
    with pytest.raises(ValueError):
        ComatrixMap(2, AUTO, ExactMatrix.identity(3))


# ---------------------------------------------------------------- automorphisms

def test_swap_automorphism():
    U = ExactMatrix.from_rows([[0, 1], [1, 0]])
    res = automorphism_normal_form(ComatrixMap(2, AUTO, conjugation_map(U)))
    assert res.order == 2
    assert sorted(str(w) for w in res.omegas) == sorted(["1", "-1"])


@st.composite
def planted_auto(draw):
    m = draw(st.sampled_from([3, 4]))
    d = draw(st.integers(2, 3))
    exps = draw(st.lists(st.integers(0, m - 1), min_size=d, max_size=d))
    P = ExactMatrix.from_rows(draw(st.lists(st.lists(st.integers(-2, 2), min_size=d, max_size=d),
                                            min_size=d, max_size=d)), m)
    return m, d, exps, P


@given(planted_auto())
def test_planted_automorphism_ratios(data):
    m, d, exps, P = data
    if rank(P) < d:
        return
    D = diag([z(m, k) for k in exps], m)
    U = P @ D @ inverse(P)
    res = automorphism_normal_form(ComatrixMap(d, AUTO, conjugation_map(U)))
    want = sorted((z(m, a) / z(m, b)).sort_key() for a in exps for b in exps)
    assert res.ratio_multiset() == want
    assert all(res.ratio(i, j) ** res.order == 1 for i in range(d) for j in range(d))


# ---------------------------------------------------------------- anti-automorphisms

def test_transpose_has_order_one():
    with pytest.raises(OrderOne):
        antiautomorphism_normal_form(ComatrixMap(2, ANTI, anti_map(ExactMatrix.identity(2))))


def test_stefan_shape():
    # A = [[0, lam], [1, 0]] gives B = diag(lam, 1/lam), so ord f^2 = ord lam^2
    lam = z(3)
    A = ExactMatrix.from_rows([[0, lam], [1, 0]], 3)
    res = normal_form(ComatrixMap(2, ANTI, anti_map(A)))
    assert res.order == 3 and res.a_plus == res.a_minus == 0
    assert len(res.blocks) == 1 and res.blocks[0][0] == 1
    assert {str(res.lam), str(res.lam.inverse())} == {str(lam), str(lam.inverse())}
    assert res.stefan_omega == res.lam.inverse()
    assert res.A_blocks[0] == ExactMatrix.identity(1, 3)


def test_antisymmetric_part_with_blocks():
    # d = 4: an antisymmetric pair plus one lambda block; A_- must come out antisymmetric
    lam = z(4)
    A = ExactMatrix.from_rows([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, lam], [0, 0, 1, 0]], 4)
    res = antiautomorphism_normal_form(ComatrixMap(4, ANTI, anti_map(A)))
    assert res.a_minus == 2 and res.a_plus == 0
    assert res.A_minus == -res.A_minus.T


def test_conditions_abc():
    assert conditions_abc([z(3)], 3, 1, 0) == {"a": True, "b": True, "c": True}
    # (-zeta_3)^3 = -1
    assert conditions_abc([z(3)], 3, 0, 1)["c"] is False
    assert conditions_abc([], 2, 1, 1) == {"a": True, "b": True, "c": True}


# ---------------------------------------------------------------- antipode on blocks

def test_antipode_on_uq_dual_blocks():
    H = built("uq_sl2_dual")
    for b in simple_decomposition(H.coalgebra):
        rep = verify_antipode_on_block(H, b)
        assert rep.d == b.comodule_dim
        if rep.d == 1:
            assert rep.anti is None and rep.order_S == 1
        if rep.anti is not None:
            assert rep.anti.order == rep.square.order


def test_non_involutive_grouplike_block_is_not_stable(taft3):
    # S(g) = g^2 != g, so the block spanned by g is not S-stable
    blocks = simple_decomposition(taft3.coalgebra)
    g_block = next(b for b in blocks if b.basis.contains_vectors(taft3.basis_vector(3)))
    with pytest.raises(NotStable):
        verify_antipode_on_block(taft3, g_block)


def test_heisenberg_dual_swaps_blocks():
    H = built("group_dual", group="Heisenberg27")
    big = [b for b in simple_decomposition(H.coalgebra) if b.comodule_dim == 3]
    assert len(big) == 2
    with pytest.raises(NotStable):
        verify_antipode_on_block(H, big[0])
