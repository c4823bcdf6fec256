import pytest
from hypothesis import given, strategies as st

from conftest import built
from hopfkit import census
from hopfkit.census import (ELIMINATED, INAPPLICABLE, SURVIVES, CensusContext, CoradicalCandidate,
                            enumerate_candidates, evaluate, fukuda_chain_check, run_census, run_scenario)
from hopfkit.coalgebra import filtration
from hopfkit.errors import BadDivisibility, BadParameter, HypothesisMissing

STD = CensusContext()
BOTH_TAFT = CensusContext(taft_sub="yes", taft_quotient="yes")


def cand(N, g, **blocks):
    """cand(27, 1, d2=2, d3=1) -> k1 + M*(2)^2 + M*(3)."""
    return CoradicalCandidate(N, g, tuple(sorted((int(k[1:]), t) for k, t in blocks.items())))


# ---------------------------------------------------------------- enumeration

def test_enumerate_27_trivial_grouplikes():
    cands = enumerate_candidates(27, 1)
    by_case: dict = {}
    for c in cands:
        by_case.setdefault(c.case(), []).append(c.shape())
    # rows (i)-(vi): 6 + 2 + 1 + 1 + 5 + 3
    assert {k: len(v) for k, v in by_case.items()} == {
        "(i)": 6, "(ii)": 2, "(iii)": 1, "(iv)": 1, "(v)": 5, "(vi)": 3}
    assert sorted(c.dim_H0 for c in cands if c.case() == "(i)") == [1 + 4 * n for n in range(1, 7)]
    assert all(c.dim_H0 < 27 for c in cands)


def test_enumerate_27_three_grouplikes():
    got = {c.blocks for c in enumerate_candidates(27, 3)}
    assert got == {((2, 3),), ((3, 1),), ((3, 2),), ((2, 3), (3, 1))}


def test_enumerate_excludes_cosemisimple():
    assert enumerate_candidates(8, 8) == []


def test_enumerate_divisibility():
    with pytest.raises(BadDivisibility):
        enumerate_candidates(27, 2)
    with pytest.raises(BadParameter):
        enumerate_candidates(1, 1)


def test_enumerate_pointed_allowed_without_hypothesis():
    ctx = CensusContext(assume_nonpointed=False)
    assert CoradicalCandidate(27, 1, ()) in enumerate_candidates(27, 1, ctx)


# ---------------------------------------------------------------- rules

def test_rule_NZ():
    assert census.rule_NZ(cand(27, 3, d2=1), STD).status == ELIMINATED
    assert census.rule_NZ(cand(27, 3, d2=3), STD).status == SURVIVES
    assert census.rule_NZ(cand(27, 1, d3=2), STD).status == SURVIVES


@pytest.mark.parametrize("c, bound, status", [
    (cand(27, 1, d4=1), 42, ELIMINATED),
    (cand(27, 1, d5=1), 62, ELIMINATED),
    (cand(27, 1, d2=2, d3=1), 27, SURVIVES),        # equality never eliminates
])
def test_rule_skewfree(c, bound, status):
    v = census.rule_skewfree_bound(c, STD)
    assert (v.bound_computed, v.status) == (bound, status)
    assert "auxiliary" in v.note


def test_rule_skewfree_with_grouplikes_is_a_branch():
    c = cand(27, 3, d3=1)
    v = census.rule_skewfree_bound(c, STD)
    assert v.status == INAPPLICABLE and census.TAFT_FACT in v.facts
    v = census.rule_skewfree_bound(c, CensusContext(assume_skewfree=True))
    assert v.status == ELIMINATED


@pytest.mark.parametrize("c, bound", [
    (cand(27, 1, d3=1), 42),
    (cand(27, 1, d3=2), 51),
])
def test_rule_one_plus_E(c, bound):
    v = census.rule_one_plus_E(c, STD)
    assert v.status == ELIMINATED and v.bound_computed == bound
    assert "e = 2" in v.note


def test_rule_one_plus_E_at_125():
    assert census.rule_one_plus_E(cand(125, 1, d5=3), STD).status == ELIMINATED
    assert census.rule_one_plus_E(cand(27, 1, d2=1), STD).status == INAPPLICABLE


def test_rule_dim4():
    assert census.rule_dim4_pcube(cand(27, 1, d2=1, d3=1), STD).status == ELIMINATED
    for t in range(2, 7):
        v = census.rule_dim4_pcube(cand(27, 1, d2=t), STD)
        assert v.status == ELIMINATED and v.bound_computed == 1 + 4 * t + 22
    v = census.rule_dim4_pcube(cand(125, 1, d2=2), STD)
    assert v.status == SURVIVES and v.bound_computed == 33
    assert census.rule_dim4_pcube(cand(27, 1, d2=2), CensusContext(assume_noncopointed=False)).status == INAPPLICABLE


def test_rule_27_final():
    v = census.rule_27_final_case(cand(27, 1, d2=2, d3=1), STD)
    assert v.status == ELIMINATED and v.bound_computed == 35
    assert census.rule_27_final_case(cand(27, 1, d2=1, d3=1), STD).status == INAPPLICABLE
    assert census.rule_27_final_case(cand(125, 1, d2=2, d3=1), STD).status == INAPPLICABLE


def test_rule_type_pp_taft():
    assert census.rule_type_pp_taft(cand(27, 3, d2=3), BOTH_TAFT).status == ELIMINATED
    for t in (1, 2):
        assert census.rule_type_pp_taft(cand(27, 3, d3=t), BOTH_TAFT).status == ELIMINATED
    v = census.rule_type_pp_taft(CoradicalCandidate(27, 3, ()), BOTH_TAFT)
    assert v.status == SURVIVES and "pointed" in v.note
    with pytest.raises(HypothesisMissing):
        census.rule_type_pp_taft(cand(27, 3, d3=1), CensusContext(taft_sub="no"))


def test_missing_hypothesis_is_reported_not_raised():
    res = evaluate(cand(27, 3, d3=1), CensusContext(taft_sub="no", taft_quotient="no"))
    v = next(v for v in res.verdicts if v.rule_id == "type_pp_taft")
    assert v.status == INAPPLICABLE and "HypothesisMissing" in v.note


def test_rules_Mp():
    assert census.rule_Mp_minus_1(cand(125, 5, d4=5), STD).status == ELIMINATED
    assert census.rule_Mp_minus_2(cand(343, 7, d5=7), STD).status == ELIMINATED
    for rule in (census.rule_Mp_minus_1, census.rule_Mp_minus_2):
        assert rule(cand(125, 5, d3=5), STD).status == INAPPLICABLE


def test_verdicts_echo_hypotheses():
    res = evaluate(cand(27, 1, d4=1), STD)
    assert all(v.hypotheses == STD.hypotheses() for v in res.verdicts)
    assert all(v.citation for v in res.verdicts)


@st.composite
def grown(draw):
    d0 = draw(st.integers(2, 4))
    t0 = draw(st.integers(1, 3))
    d1 = draw(st.integers(d0, 6))
    t1 = draw(st.integers(1, 3))
    base = CoradicalCandidate(1000, 1, ((d0, t0),))
    blocks = dict(base.blocks)
    blocks[d1] = blocks.get(d1, 0) + t1
    return base, CoradicalCandidate(1000, 1, tuple(sorted(blocks.items())))


@given(grown())
def test_bounds_monotone_when_adding_blocks(pair):
    # blocks no smaller than the current least one; a smaller block lowers n in the skew-free bound
    small, big = pair
    assert census.skewfree_bound(big) >= census.skewfree_bound(small)


# ---------------------------------------------------------------- census runs

def test_census_27_trivial_grouplikes():
    rep = run_census(27, grouplikes=[1], workers=1)
    assert rep.all_eliminated
    rules = {}
    for r in rep.sections[0].results:
        rules.setdefault(r.candidate.case(), set()).add(r.attributed.rule_id)
    assert rules["(ii)"] == {"one_plus_E"}
    assert rules["(iii)"] == rules["(iv)"] == {"skewfree_bound"}
    assert rules["(i)"] == {"dim4"}


def test_census_order_independent_of_workers(monkeypatch):
    monkeypatch.setattr(census, "PARALLEL_THRESHOLD", 1)
    a = run_census(64, workers=1).to_json()
    b = run_census(64, workers=3).to_json()
    assert a == b


def test_census_125_has_survivors():
    rep = run_census(125, workers=1)
    assert not rep.all_eliminated
    shapes = {r.candidate.shape() for r in rep.survivors}
    assert "kC5 + M*(2)^5" in shapes


def test_scenario_dim27_closes():
    rep = run_scenario("dim27", workers=1)
    assert rep.all_eliminated
    assert rep.conclusion() == "all eliminated; conclusion: semisimple, pointed or copointed"
    mutated = run_scenario("dim27", workers=1, disabled=["27_final"])
    assert [r.candidate.shape() for r in mutated.survivors] == ["k1 + M*(2)^2 + M*(3)"]


def test_scenario_both_taft_at_125():
    rep = run_scenario("both-taft", N=125, workers=1)
    shapes = {r.candidate.shape(): r.status for s in rep.sections for r in s.results}
    assert shapes["kC5 + M*(2)^5"] == ELIMINATED


def test_unknown_scenario():
    with pytest.raises(BadParameter):
        run_scenario("nope")
    with pytest.raises(BadParameter):
        run_scenario("both-taft")          # needs N


@pytest.mark.parametrize("raw, want", [("1", 1), ("4", 4)])
def test_workers_from_env(monkeypatch, raw, want):
    monkeypatch.setenv("HOPFKIT_WORKERS", raw)
    assert census.workers_from_env() == want


@pytest.mark.parametrize("raw", ["0", "-2", "many"])
def test_workers_from_env_rejects(monkeypatch, raw):
    monkeypatch.setenv("HOPFKIT_WORKERS", raw)
    with pytest.raises(BadParameter):
        census.workers_from_env()


# ---------------------------------------------------------------- Fukuda audits

def test_chain_check_on_taft(taft3):
    f = filtration(taft3.coalgebra)
    rep = fukuda_chain_check(f.nondegenerate)
    assert rep.consistent and rep.checked > 0


def test_chain_check_cosemisimple_is_vacuous():
    f = filtration(built("group_algebra", group="C3").coalgebra)
    rep = fukuda_chain_check(f.nondegenerate)
    assert rep.consistent and rep.checked == 0


def test_chain_check_reports_gaps():
    rep = fukuda_chain_check({1: set(), 2: {(0, 1)}})
    assert not rep.consistent and rep.missing == [(2, 0, 1, 1)]


def test_chain_check_on_uq():
    f = filtration(built("uq_sl2").coalgebra)
    assert fukuda_chain_check(f.nondegenerate).consistent
