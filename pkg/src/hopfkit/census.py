"""Coradical census: enumerate coradical shapes for a Hopf algebra of dimension N
and eliminate them with dimension bounds and structural exclusions.

A candidate is k G(H) (+) sum_d M*(d)^{t_d}, recorded as g = |G(H)| and the
multiset {(d, t_d)}.  Rules are data: an id, a citation, and a function
returning a verdict.  Every verdict carries the context hypotheses verbatim.
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from importlib import resources
from math import gcd, isqrt
from typing import Callable, Iterable

from .errors import BadDivisibility, BadParameter, HypothesisMissing

ELIMINATED = "Eliminated"
SURVIVES = "Survives"
INAPPLICABLE = "Inapplicable"

AUX_SKEWFREE = ("auxiliary fact: with trivial grouplikes (char 0, finite dimension) there are "
                "no nontrivial skew-primitives")
TAFT_FACT = "H contains a Taft sub-Hopf algebra"


# ---------------------------------------------------------------- types

@dataclass(frozen=True)
class CoradicalCandidate:
    N: int
    g: int
    blocks: tuple            # sorted ((d, t_d), ...), d >= 2, t_d >= 1

    @property
    def dim_H0(self) -> int:
        return self.g + sum(t * d * d for d, t in self.blocks)

    def t(self, d: int) -> int:
        return dict(self.blocks).get(d, 0)

    @property
    def dims(self) -> tuple:
        return tuple(d for d, _ in self.blocks)

    @property
    def min_d(self) -> int | None:
        return self.blocks[0][0] if self.blocks else None

    def shape(self) -> str:
        head = "k1" if self.g == 1 else (f"kC{self.g}" if _is_prime(self.g) else f"kG[{self.g}]")
        parts = [head]
        for d, t in self.blocks:
            parts.append(f"M*({d})" + (f"^{t}" if t > 1 else ""))
        return " + ".join(parts)

    def case(self) -> str:
        """Row label of the dimension-27 trivial-grouplike table, else ''."""
        if self.N != 27 or self.g != 1:
            return ""
        ds = set(self.dims)
        if 5 in ds:
            return "(iv)"
        if 4 in ds:
            return "(iii)" if ds == {4} else "(vi)"
        if ds == {2}:
            return "(i)"
        if ds == {3}:
            return "(ii)"
        return "(v)" if ds == {2, 3} else ""

    def sort_key(self):
        return (self.g, self.case(), self.dim_H0, self.blocks)


@dataclass(frozen=True)
class CensusContext:
    assume_nonsemisimple: bool = True
    assume_nonpointed: bool = True
    assume_noncopointed: bool = True
    taft_sub: str = "derived"          # yes | no | derived
    taft_quotient: str = "derived"
    dual_grouplikes: int | None = None  # |G(H*)| when the type is fixed
    assume_skewfree: bool = False       # branch hypothesis for g > 1
    disabled: frozenset = frozenset()

    def __post_init__(self):
        for name in ("taft_sub", "taft_quotient"):
            if getattr(self, name) not in ("yes", "no", "derived"):
                raise BadParameter(f"{name} must be yes, no or derived")

    def hypotheses(self) -> tuple:
        h = []
        if self.assume_nonsemisimple:
            h.append("nonsemisimple")
        if self.assume_nonpointed:
            h.append("nonpointed")
        if self.assume_noncopointed:
            h.append("non-copointed")
        h.append(f"taft_sub={self.taft_sub}")
        h.append(f"taft_quotient={self.taft_quotient}")
        if self.dual_grouplikes is not None:
            h.append(f"|G(H*)|={self.dual_grouplikes}")
        if self.assume_skewfree:
            h.append("no nontrivial skew-primitives (branch)")
        return tuple(h)


@dataclass(frozen=True)
class RuleVerdict:
    rule_id: str
    status: str
    bound_computed: int | None
    citation: str
    note: str = ""
    facts: tuple = ()
    hypotheses: tuple = ()


@dataclass(frozen=True)
class Rule:
    id: str
    citation: str
    fn: Callable


# ---------------------------------------------------------------- arithmetic helpers

def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, isqrt(n) + 1))


def prime_cube_root(N: int) -> int | None:
    p = round(N ** (1 / 3))
    for q in (p - 1, p, p + 1):
        if q >= 2 and q ** 3 == N and _is_prime(q):
            return q
    return None


def _cube_root(N: int) -> int | None:
    p = round(N ** (1 / 3))
    for q in (p - 1, p, p + 1):
        if q >= 2 and q ** 3 == N:
            return q
    return None


def divisors(N: int) -> list[int]:
    return [k for k in range(1, N + 1) if N % k == 0]


# ---------------------------------------------------------------- enumeration

def enumerate_candidates(N: int, g: int, ctx: CensusContext | None = None) -> list[CoradicalCandidate]:
    ctx = ctx or CensusContext()
    if N < 2:
        raise BadParameter("N must be at least 2")
    if g < 1 or N % g:
        raise BadDivisibility(f"|G| = {g} does not divide {N}")
    limit = N - g if not ctx.assume_nonsemisimple else N - g - 1
    out = []

    def rec(d: int, room: int, acc: list):
        if d * d > room:
            if acc or not ctx.assume_nonpointed:
                out.append(CoradicalCandidate(N, g, tuple(acc)))
            return
        rec(d + 1, room, acc)
        t = 1
        while t * d * d <= room:
            if (t * d * d) % g == 0:
                rec(d + 1, room - t * d * d, acc + [(d, t)])
            t += 1

    if limit >= 0:
        rec(2, limit, [])
    return sorted(out, key=CoradicalCandidate.sort_key)


# ---------------------------------------------------------------- rules

def _v(rule: str, status: str, bound, ctx: CensusContext, note: str = "", facts=()) -> RuleVerdict:
    return RuleVerdict(rule, status, bound, CITATIONS[rule], note, tuple(facts), ctx.hypotheses())


def rule_NZ(c: CoradicalCandidate, ctx: CensusContext) -> RuleVerdict:
    for d, t in c.blocks:
        if (t * d * d) % c.g:
            return _v("NZ", ELIMINATED, None, ctx, f"{c.g} does not divide dim H_0,{d} = {t * d * d}")
    return _v("NZ", SURVIVES, None, ctx)


def skewfree_bound(c: CoradicalCandidate) -> int | None:
    n = c.min_d
    if n is None:
        return None
    return c.dim_H0 + (2 * n + 1) * c.g + n * n


def rule_skewfree_bound(c: CoradicalCandidate, ctx: CensusContext) -> RuleVerdict:
    b = skewfree_bound(c)
    if b is None:
        return _v("skewfree_bound", INAPPLICABLE, None, ctx, "no simple block of dimension > 1")
    if c.g == 1 or ctx.assume_skewfree:
        note = AUX_SKEWFREE if c.g == 1 else "skew-free branch hypothesis"
        status = ELIMINATED if b > c.N else SURVIVES
        return _v("skewfree_bound", status, b, ctx, note)
    # g > 1: the bound only rules out the skew-free branch
    facts = (TAFT_FACT,) if b > c.N and _is_prime(c.g) else ()
    note = ("bound exceeds N, so H has a nontrivial skew-primitive" if b > c.N
            else "skew-free branch not excluded")
    return _v("skewfree_bound", INAPPLICABLE, b, ctx, note, facts)


def one_plus_E_bound(c: CoradicalCandidate) -> tuple[int | None, int | None, int | None]:
    """(bound, N', e) or Nones when the rule does not apply."""
    if c.g != 1 or not c.blocks:
        return None, None, None
    common = 0
    for d in c.dims:
        common = gcd(common, d)
    # N'^2 divides d^2 for every block iff N' divides every d
    options = [k for k in range(2, common + 1) if common % k == 0]
    r = _cube_root(c.N)
    if r is not None:
        options = [r] if r in options else []
    best = (None, None, None)
    for Np in options:
        dd = c.N % Np
        e = (dd - 1) % Np or Np
        if e == 1:
            continue
        b = c.dim_H0 + 4 * Np + 2 * Np * Np + e
        if best[0] is None or b > best[0]:
            best = (b, Np, e)
    return best


def rule_one_plus_E(c: CoradicalCandidate, ctx: CensusContext) -> RuleVerdict:
    b, Np, e = one_plus_E_bound(c)
    if b is None:
        return _v("one_plus_E", INAPPLICABLE, None, ctx,
                  "needs |G| = 1 and a common N' > 1 with e != 1")
    status = ELIMINATED if b > c.N else SURVIVES
    return _v("one_plus_E", status, b, ctx, f"N' = {Np}, e = {e}")


def rule_dim4_pcube(c: CoradicalCandidate, ctx: CensusContext) -> RuleVerdict:
    p = prime_cube_root(c.N)
    if p is None or p == 2 or not ctx.assume_noncopointed or c.g != 1 or c.t(2) == 0:
        return _v("dim4", INAPPLICABLE, None, ctx, "needs N = p^3 (p odd), non-copointed, |G| = 1, t_2 >= 1")
    if c.t(2) == 1:
        return _v("dim4", ELIMINATED, None, ctx,
                  "the unique 4-dimensional simple subcoalgebra would be S-stable")
    if c.dims != (2,):
        return _v("dim4", INAPPLICABLE, None, ctx, "bound stated only for k1 + M*(2)^t")
    b = c.dim_H0 + (24 if p % 4 == 1 else 22)
    return _v("dim4", ELIMINATED if b > c.N else SURVIVES, b, ctx)


def rule_27_final_case(c: CoradicalCandidate, ctx: CensusContext) -> RuleVerdict:
    if c.N != 27 or c.g != 1 or c.blocks != ((2, 2), (3, 1)):
        return _v("27_final", INAPPLICABLE, None, ctx)
    # 18 = dim H_0, 1 from P^{1,1}, 8 + 8 from the M*(2) components
    return _v("27_final", ELIMINATED, 18 + 1 + 8 + 8, ctx)


def resolve_taft(c: CoradicalCandidate, ctx: CensusContext) -> tuple[str, str]:
    """(taft_sub, taft_quotient) with 'derived' replaced by yes/no."""
    sub, quo = ctx.taft_sub, ctx.taft_quotient
    if sub == "derived":
        b = skewfree_bound(c)
        sub = "yes" if _is_prime(c.g) and b is not None and b > c.N else "no"
    if quo == "derived":
        quo = "yes" if _dual_forced_taft(c.N, ctx) else "no"
    return sub, quo


def _dual_forced_taft(N: int, ctx: CensusContext) -> bool:
    gs = ctx.dual_grouplikes
    if gs is None or not _is_prime(gs):
        return False
    # H* is again nonsemisimple, nonpointed and non-copointed
    dual = enumerate_candidates(N, gs, ctx)
    return bool(dual) and all((skewfree_bound(d) or 0) > N for d in dual)


def rule_type_pp_taft(c: CoradicalCandidate, ctx: CensusContext) -> RuleVerdict:
    p = prime_cube_root(c.N)
    if p is None or c.g != p:
        return _v("type_pp_taft", INAPPLICABLE, None, ctx, "needs N = p^3 and |G| = p")
    sub, quo = resolve_taft(c, ctx)
    if sub != "yes" or quo != "yes":
        raise HypothesisMissing(f"Taft sub-Hopf algebra: {sub}, Taft quotient: {quo}")
    facts = (f"taft_sub={sub}", f"taft_quotient={quo}")
    ds = set(c.dims)
    if 2 in ds:
        return _v("type_pp_taft", ELIMINATED, None, ctx, "no simple subcoalgebra of dimension 4", facts)
    if p in ds:
        return _v("type_pp_taft", ELIMINATED, None, ctx, f"no simple subcoalgebra of dimension {p * p}", facts)
    if 3 in ds and p in (5, 7):
        return _v("type_pp_taft", ELIMINATED, None, ctx, "no simple subcoalgebra of dimension 9", facts)
    if not ds:
        return _v("type_pp_taft", SURVIVES, None, ctx, "H_0 = kG(H) forces H pointed, a contradiction", facts)
    return _v("type_pp_taft", SURVIVES, None, ctx, "", facts)


def _standing(ctx: CensusContext) -> bool:
    return ctx.assume_nonsemisimple and ctx.assume_nonpointed and ctx.assume_noncopointed


def rule_Mp_minus_1(c: CoradicalCandidate, ctx: CensusContext) -> RuleVerdict:
    p = prime_cube_root(c.N)
    if p is None or c.g != p or not _standing(ctx) or p - 1 < 2:
        return _v("Mp_minus_1", INAPPLICABLE, None, ctx)
    t = c.t(p - 1)
    rest = {d for d in c.dims if d not in (p - 1, p)}
    if t and t % p == 0 and not rest:
        return _v("Mp_minus_1", ELIMINATED, None, ctx, f"shape kC{p} + M*({p - 1})^(sp) [+ M*({p})^t]")
    return _v("Mp_minus_1", INAPPLICABLE, None, ctx, "shape mismatch")


def rule_Mp_minus_2(c: CoradicalCandidate, ctx: CensusContext) -> RuleVerdict:
    p = prime_cube_root(c.N)
    if p is None or p < 7 or c.g != p or not _standing(ctx):
        return _v("Mp_minus_2", INAPPLICABLE, None, ctx)
    t = c.t(p - 2)
    if t and t % p == 0 and c.dims == (p - 2,):
        return _v("Mp_minus_2", ELIMINATED, None, ctx, f"shape kC{p} + M*({p - 2})^(sp)")
    return _v("Mp_minus_2", INAPPLICABLE, None, ctx, "shape mismatch")


CITATIONS = {
    "NZ": "Nichols-Zoeller: |G(H)| divides dim H_n, dim P_n and dim H_0,d",
    "dim4": "non-copointed, dim p^3: no S-stable simple 4-dim subcoalgebra; for H_0 = k1 + M*(2)^t, "
            "t > 1: dim H >= dim H_0 + 24 (p = 1 mod 4) or + 22 (p = 3 mod 4)",
    "one_plus_E": "H_0 = k1 + E, all simple summands of E of dimension divisible by N'^2: "
                  "dim H >= dim H_0 + 4N' + 2N'^2 + e",
    "skewfree_bound": "no nontrivial skew-primitives: dim H >= dim H_0 + (2n+1)|G| + n^2, "
                      "n the least comodule dimension > 1",
    "27_final": "dimension 27, H_0 = k1 + M*(2)^2 + M*(3): Fukuda counting forces dim H >= 35",
    "type_pp_taft": "dim p^3 with a Taft sub-Hopf algebra and a Taft quotient: no simple subcoalgebra "
                    "of dimension 4, 9 (p = 5, 7) or p^2",
    "Mp_minus_1": "G(H) = C_p: H_0 is not kC_p + M*(p-1)^(sp) (+ M*(p)^t)",
    "Mp_minus_2": "p >= 7, G(H) = C_p: H_0 is not kC_p + M*(p-2)^(sp)",
}

RULES: tuple[Rule, ...] = (
    Rule("NZ", CITATIONS["NZ"], rule_NZ),
    Rule("dim4", CITATIONS["dim4"], rule_dim4_pcube),
    Rule("one_plus_E", CITATIONS["one_plus_E"], rule_one_plus_E),
    Rule("skewfree_bound", CITATIONS["skewfree_bound"], rule_skewfree_bound),
    Rule("27_final", CITATIONS["27_final"], rule_27_final_case),
    Rule("type_pp_taft", CITATIONS["type_pp_taft"], rule_type_pp_taft),
    Rule("Mp_minus_1", CITATIONS["Mp_minus_1"], rule_Mp_minus_1),
    Rule("Mp_minus_2", CITATIONS["Mp_minus_2"], rule_Mp_minus_2),
)
RULE_IDS = tuple(r.id for r in RULES)


# ---------------------------------------------------------------- running

@dataclass
class CandidateResult:
    candidate: CoradicalCandidate
    verdicts: tuple
    attributed: RuleVerdict | None      # first eliminating rule in rule order

    @property
    def status(self) -> str:
        return ELIMINATED if self.attributed is not None else SURVIVES

    @property
    def eliminating_rules(self) -> tuple:
        return tuple(v.rule_id for v in self.verdicts if v.status == ELIMINATED)


def evaluate(c: CoradicalCandidate, ctx: CensusContext) -> CandidateResult:
    out = []
    for r in RULES:
        if r.id in ctx.disabled:
            continue
        try:
            v = r.fn(c, ctx)
        except HypothesisMissing as exc:
            v = _v(r.id, INAPPLICABLE, None, ctx, f"HypothesisMissing: {exc}")
        out.append(v)
    first = next((v for v in out if v.status == ELIMINATED), None)
    return CandidateResult(c, tuple(out), first)


def _eval_star(args):
    return evaluate(*args)


def workers_from_env() -> int:
    raw = os.environ.get("HOPFKIT_WORKERS")
    if raw is None or raw == "":
        return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError:
        raise BadParameter(f"HOPFKIT_WORKERS must be an integer, got {raw!r}") from None
    if n < 1:
        raise BadParameter("HOPFKIT_WORKERS must be >= 1")
    return n


PARALLEL_THRESHOLD = 4000


def _evaluate_all(cands: list, ctx: CensusContext, workers: int) -> list:
    if workers > 1 and len(cands) >= PARALLEL_THRESHOLD:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(_eval_star, [(c, ctx) for c in cands], chunksize=256))
    return [evaluate(c, ctx) for c in cands]


@dataclass
class CensusSection:
    title: str
    N: int
    g: int
    context: CensusContext
    results: list
    citation: str = ""

    @property
    def survivors(self) -> list:
        return [r for r in self.results if r.status == SURVIVES]


@dataclass
class CensusReport:
    N: int
    sections: list
    scenario: str | None = None
    closed_conclusion: str = ""

    @property
    def survivors(self) -> list:
        return [r for s in self.sections for r in s.survivors]

    @property
    def all_eliminated(self) -> bool:
        return not self.survivors

    def conclusion(self) -> str:
        if self.all_eliminated:
            tail = f"; conclusion: {self.closed_conclusion}" if self.closed_conclusion else ""
            return "all eliminated" + tail
        return f"{len(self.survivors)} candidate(s) survive"

    def to_json(self) -> dict:
        return {
            "format_version": "hopfkit/1",
            "kind": "census",
            "N": self.N,
            "scenario": self.scenario,
            "conclusion": self.conclusion(),
            "all_eliminated": self.all_eliminated,
            "sections": [_section_json(s) for s in self.sections],
        }

    def to_text(self) -> str:
        lines, used = [], []
        for s in self.sections:
            lines.append(f"== {s.title}")
            if s.citation:
                lines.append(f"   [{s.citation}]")
            lines.append("   hypotheses: " + ", ".join(s.context.hypotheses()))
            rows = [("case", "shape", "dim H_0", "verdict", "rule", "bound", "citation")]
            for r in s.results:
                a = r.attributed
                if a is not None and a.rule_id not in used:
                    used.append(a.rule_id)
                rows.append((r.candidate.case() or "-", r.candidate.shape(), str(r.candidate.dim_H0),
                             r.status, a.rule_id if a else "-",
                             "-" if a is None or a.bound_computed is None else str(a.bound_computed),
                             f"[{RULE_IDS.index(a.rule_id) + 1}]" if a else "-"))
            if len(rows) == 1:
                lines.append("   (no candidates)")
            else:
                w = [max(len(row[k]) for row in rows) for k in range(7)]
                for row in rows:
                    lines.append(("   " + "  ".join(row[k].ljust(w[k]) for k in range(7))).rstrip())
            lines.append(f"   survivors: {len(s.survivors)}")
        if used:
            lines.append("citations:")
            for rid in sorted(used, key=RULE_IDS.index):
                lines.append(f"  [{RULE_IDS.index(rid) + 1}] {rid}: {CITATIONS[rid]}")
        lines.append(self.conclusion())
        return "\n".join(lines) + "\n"


def _section_json(s: CensusSection) -> dict:
    return {
        "title": s.title,
        "N": s.N,
        "grouplikes": s.g,
        "citation": s.citation,
        "hypotheses": list(s.context.hypotheses()),
        "candidates": [{
            "case": r.candidate.case(),
            "shape": r.candidate.shape(),
            "blocks": [list(b) for b in r.candidate.blocks],
            "dim_H0": r.candidate.dim_H0,
            "verdict": r.status,
            "rule": r.attributed.rule_id if r.attributed else None,
            "bound": r.attributed.bound_computed if r.attributed else None,
            "citation": r.attributed.citation if r.attributed else None,
            "verdicts": [_verdict_json(v) for v in r.verdicts],
        } for r in s.results],
    }


def _verdict_json(v: RuleVerdict) -> dict:
    d = asdict(v)
    d["facts"] = list(v.facts)
    d["hypotheses"] = list(v.hypotheses)
    return d


def run_census(N: int, ctx: CensusContext | None = None, grouplikes: Iterable[int] | None = None,
               workers: int | None = None) -> CensusReport:
    ctx = ctx or CensusContext()
    if N < 2:
        raise BadParameter("N must be at least 2")
    workers = workers_from_env() if workers is None else workers
    gs = divisors(N) if grouplikes is None else list(grouplikes)
    sections = []
    for g in gs:
        cands = enumerate_candidates(N, g, ctx)
        sections.append(CensusSection(f"dim H = {N}, |G(H)| = {g}", N, g, ctx,
                                      _evaluate_all(cands, ctx, workers)))
    return CensusReport(N, sections)


# ---------------------------------------------------------------- scenarios

def load_scenarios() -> dict:
    text = resources.files("hopfkit").joinpath("data/scenarios.json").read_text(encoding="utf-8")
    data = json.loads(text)
    if data.get("version") != 1:
        raise BadParameter("unsupported scenario file version")
    return data["scenarios"]


def run_scenario(name: str, N: int | None = None, workers: int | None = None,
                 disabled: Iterable[str] = ()) -> CensusReport:
    scen = load_scenarios()
    if name not in scen:
        raise BadParameter(f"unknown scenario {name!r}; known: {', '.join(sorted(scen))}")
    sc = scen[name]
    N = sc.get("N", N)
    if N is None:
        raise BadParameter(f"scenario {name!r} needs --dim")
    p = prime_cube_root(N)
    workers = workers_from_env() if workers is None else workers
    sections = []
    for step in sc["steps"]:
        g = step["grouplikes"]
        if g == "p":
            if p is None:
                raise BadParameter(f"scenario {name!r} needs N = p^3")
            g = p
        dual = step.get("dual_grouplikes")
        if dual == "p":
            dual = p
        ctx = CensusContext(taft_sub=step.get("taft_sub", "derived"),
                            taft_quotient=step.get("taft_quotient", "derived"),
                            dual_grouplikes=dual, disabled=frozenset(disabled))
        cands = enumerate_candidates(N, g, ctx)
        sections.append(CensusSection(step["title"], N, g, ctx, _evaluate_all(cands, ctx, workers),
                                      step.get("citation", "")))
    return CensusReport(N, sections, name, sc.get("conclusion", ""))


# ---------------------------------------------------------------- Fukuda audits

@dataclass
class ChainReport:
    checked: int
    missing: list          # (n, tau, gamma, i) with no admissible D_i

    @property
    def consistent(self) -> bool:
        return not self.missing


def fukuda_chain_check(nondegenerate: dict) -> ChainReport:
    """For each nondegenerate P_n^{tau,gamma}, n > 1, and each 1 <= i < n, look for D_i with
    P_i^{tau,D_i} and P_{n-i}^{D_i,gamma} both nondegenerate.

    `nondegenerate` maps n to the set of (tau, gamma) with P_n^{tau,gamma} nondegenerate."""
    missing, checked = [], 0
    for n, pairs in sorted(nondegenerate.items()):
        if n <= 1:
            continue
        for tau, gam in sorted(pairs):
            checked += 1
            for i in range(1, n):
                left = {b for (a, b) in nondegenerate.get(i, ()) if a == tau}
                right = {a for (a, b) in nondegenerate.get(n - i, ()) if b == gam}
                if not left & right:
                    missing.append((n, tau, gam, i))
    return ChainReport(checked, missing)


@dataclass
class SymmetryReport:
    checked: int
    failures: list          # (n, relation, (tau, gamma), expected, found)

    @property
    def consistent(self) -> bool:
        return not self.failures


def fukuda_symmetry_check(H, filt) -> SymmetryReport:
    """dim P_n^{tau,gamma} = dim P_n^{S gamma, S tau} = dim P_n^{g tau, g gamma}
    = dim P_n^{tau g, gamma g} for every n and every grouplike g."""
    from .coalgebra import grouplikes
    from .hopf import block_permutation, left_multiplication, right_multiplication

    nb = len(H.coalgebra._decomposition.blocks)
    perms = [("S", block_permutation(H, H.S), True)]
    for k, g in enumerate(grouplikes(H.coalgebra)):
        perms.append((f"g{k}.", block_permutation(H, left_multiplication(H, g)), False))
        perms.append((f".g{k}", block_permutation(H, right_multiplication(H, g)), False))
    failures, checked = [], 0
    for n, table in sorted(filt.isotypic.items()):
        for tau in range(nb):
            for gam in range(nb):
                dim = table.get((tau, gam), 0)
                for name, pm, swap in perms:
                    key = (pm[gam], pm[tau]) if swap else (pm[tau], pm[gam])
                    other = table.get(key, 0)
                    checked += 1
                    if other != dim:
                        failures.append((n, name, (tau, gam), dim, other))
    return SymmetryReport(checked, failures)
