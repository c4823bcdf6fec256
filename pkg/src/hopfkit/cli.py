"""Command-line front end.

Exit codes: 0 success, 1 a verification found a failing axiom or check,
2 bad parameter, 3 I/O error, 4 parse error, 5 not split over the field,
6 not a coalgebra map.
"""
from __future__ import annotations

import json
import math
import sys
from pathlib import Path

import click

from . import axioms, catalog, census, comatrix
from .coalgebra import filtration, simple_decomposition
from .errors import (BadParameter, HopfkitError, NotCoalgebraMap, NotSplit, OrderOne, ParseError)
from .exact_linalg.cyclotomic import CycNumber, format_coeff
from .exact_linalg.matrix import ExactMatrix
from .hopf import HopfAlgebraSC, dual_hopf, embed_hopf, hopf_type
from .serialize import FORMAT_VERSION, dumps, matrix_document, parse_algebra, parse_matrix, validate

EXIT_OK, EXIT_FAILED, EXIT_PARAM, EXIT_IO, EXIT_PARSE, EXIT_NOT_SPLIT, EXIT_NOT_COALGEBRA_MAP = range(7)


class Failure(Exception):
    """Carries an exit code and a message to stderr."""

    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _code_for(exc: Exception) -> int:
    if isinstance(exc, ParseError):
        return EXIT_PARSE
    if isinstance(exc, NotSplit):
        return EXIT_NOT_SPLIT
    if isinstance(exc, NotCoalgebraMap):
        return EXIT_NOT_COALGEBRA_MAP
    if isinstance(exc, (BadParameter, ValueError)):
        return EXIT_PARAM
    if isinstance(exc, OSError):
        return EXIT_IO
    return EXIT_FAILED


def _message(exc: Exception) -> str:
    msg = f"{type(exc).__name__}: {exc}"
    if isinstance(exc, NotSplit) and exc.suggested_order:
        msg += f" (retry with --field-order {exc.suggested_order})"
    return msg


# ---------------------------------------------------------------- plumbing

class Options:
    def __init__(self, as_json: bool, out: str | None, field_order: int | None):
        self.as_json = as_json
        self.out = out
        self.field_order = field_order

    def emit(self, text: str) -> None:
        if not text.endswith("\n"):
            text += "\n"
        if self.out is None:
            click.echo(text, nl=False)
            return
        try:
            Path(self.out).write_text(text, encoding="utf-8", newline="\n")
        except OSError as exc:
            raise Failure(EXIT_IO, f"cannot write {self.out}: {exc.strerror or exc}") from None

    def report(self, doc: dict, text: str) -> None:
        if self.as_json:
            validate(doc)
            self.emit(json.dumps(doc, indent=2, ensure_ascii=False))
        else:
            self.emit(text)

    def embed(self, H: HopfAlgebraSC) -> HopfAlgebraSC:
        if self.field_order is None:
            return H
        if self.field_order % H.m:
            raise BadParameter(f"--field-order {self.field_order} is not a multiple of {H.m}")
        return embed_hopf(H, self.field_order)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise Failure(EXIT_IO, f"cannot read {path}: {exc.strerror or exc}") from None
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not UTF-8: {exc}") from None


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, CycNumber):
        return format_coeff(x)
    return str(x)


def _c(x: CycNumber) -> str:
    return format_coeff(x)


def _table(rows: list[tuple], indent: str = "  ") -> list[str]:
    rows = [tuple(str(c) for c in r) for r in rows]
    w = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    return [indent + "  ".join(c.ljust(w[k]) for k, c in enumerate(r)).rstrip() for r in rows]


def _envelope(kind: str, **body) -> dict:
    return {"format_version": FORMAT_VERSION, "kind": kind, **body}


# ---------------------------------------------------------------- main group

class _Main(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except Failure as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(exc.code)
        except (HopfkitError, OSError) as exc:
            click.echo(f"error: {_message(exc)}", err=True)
            ctx.exit(_code_for(exc))


@click.group(cls=_Main)
@click.option("--json", "as_json", is_flag=True, help="Emit a hopfkit/1 JSON report instead of text.")
@click.option("--out", type=click.Path(dir_okay=False), help="Write the output to this file.")
@click.option("--field-order", type=click.IntRange(min=1),
              help="Work over Q(zeta_M); M must be a multiple of the document's order.")
@click.version_option(package_name="artifact", prog_name="hopfkit")
@click.pass_context
def main(ctx, as_json, out, field_order):
    """Exact Hopf algebra toolkit and coradical census."""
    ctx.obj = Options(as_json, out, field_order)


# ---------------------------------------------------------------- construct

def _param_value(text: str):
    try:
        return int(text)
    except ValueError:
        return text


def _parse_params(args: list[str]) -> dict:
    out, k = {}, 0
    while k < len(args):
        key = args[k]
        if not key.startswith("--") or len(key) < 3:
            raise BadParameter(f"expected --name value, got {key!r}")
        key = key[2:].replace("-", "_")
        if key.split("=")[0] in ("json", "out", "field_order"):
            raise BadParameter(f"--{key.split('=')[0].replace('_', '-')} is a global flag; put it before the command")
        if "=" in key:
            key, val = key.split("=", 1)
            k += 1
        elif k + 1 < len(args):
            val = args[k + 1]
            k += 2
        else:
            raise BadParameter(f"--{key} needs a value")
        out[key] = _param_value(val)
    return out


@main.command(context_settings={"ignore_unknown_options": True, "allow_extra_args": True})
@click.argument("name")
@click.pass_context
def construct(ctx, name):
    """Build catalog entry NAME; extra --key value pairs are builder parameters.

    \b
    Examples:
      hopfkit construct taft --N 3 --q z3
      hopfkit --out uq.json construct uq_sl2 --q z3
      hopfkit construct group_algebra --group C9xC3
    """
    opts: Options = ctx.obj
    H = opts.embed(catalog.build(name, _parse_params(ctx.args)))
    opts.emit(dumps(H))


# ---------------------------------------------------------------- verify

AXIOM_CHECKS = (
    ("coassociativity", "NotCoassociative"),
    ("counit", "CounitFails"),
    ("associativity", "NotAssociative"),
    ("unit", "UnitFails"),
    ("bialgebra", "NotBialgebra"),
    ("antipode", "AntipodeAxiomFails"),
)


def axiom_report(data) -> list[dict]:
    """Run every axiom check independently (no short circuit)."""
    n, m = data.dim, data.m
    Sd = data.S.nonzero_raw()
    found = {
        "coassociativity": axioms.coassoc_defect(data.delta, n, m),
        "counit": axioms.counit_defect(data.delta, data.eps, n, m),
        "associativity": axioms.assoc_defect(data.mu, n, m),
        "unit": axioms.unit_defect(data.mu, data.unit, n, m),
        "bialgebra": axioms.bialgebra_defect(data.mu, data.delta, data.eps, data.unit, n, m),
        "antipode": axioms.antipode_defect(data.mu, data.delta, data.eps, data.unit, Sd, n, m),
    }
    out = []
    for name, error in AXIOM_CHECKS:
        w = found[name]
        out.append({"name": name, "ok": w is None, "witness": _jsonable(w),
                    "message": "" if w is None else f"{error} at {_jsonable(w)}"})
    return out


@main.command()
@click.argument("path", type=click.Path(dir_okay=False))
@click.pass_obj
def verify(opts: Options, path):
    """Check every Hopf axiom of the document at PATH exactly."""
    data = parse_algebra(_read(path))
    if opts.field_order is not None:
        H = opts.embed(data.unchecked())
        data = parse_algebra(dumps(H))
    rows = axiom_report(data)
    ok = all(r["ok"] for r in rows)
    text = [f"{path}: dim {data.dim} over Q(zeta_{data.m})"]
    text += _table([("axiom", "result", "witness")] +
                   [(r["name"], "pass" if r["ok"] else "FAIL", r["message"] or "-") for r in rows])
    text.append("all axioms hold" if ok else "axiom failures found")
    opts.report(_envelope("verify", path=path, dim=data.dim, field={"cyclotomic_order": data.m},
                          ok=ok, axioms=rows), "\n".join(text))
    if not ok:
        sys.exit(EXIT_FAILED)


# ---------------------------------------------------------------- analyze

def _filtration_section(H: HopfAlgebraSC, isotypic: bool):
    f = filtration(H.coalgebra, isotypic=isotypic)
    sec = {"stage_dims": list(f.stage_dims), "layer_dims": list(f.layer_dims)}
    return f, sec


def _isotypic_rows(H: HopfAlgebraSC, f) -> list[dict]:
    blocks = simple_decomposition(H.coalgebra)
    rows = []
    for n in sorted(f.isotypic):
        for (t, g), dim in sorted(f.isotypic[n].items()):
            rows.append({"n": n, "left": blocks[t].label or f"D{t}", "right": blocks[g].label or f"D{g}",
                         "left_dim": blocks[t].comodule_dim, "right_dim": blocks[g].comodule_dim,
                         "dim": dim, "nondegenerate": (t, g) in f.nondegenerate.get(n, set())})
    return rows


def _invariants(H: HopfAlgebraSC) -> dict:
    inv = catalog.invariants(H)
    inv["type"] = list(hopf_type(H))
    return _jsonable(inv)


def _inv_lines(inv: dict) -> list[str]:
    return _table([(k, v if not isinstance(v, list) else ", ".join(map(str, v)) or "-")
                   for k, v in inv.items()])


@main.command()
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--filtration", "want_filt", is_flag=True, help="Coradical filtration stages and layers.")
@click.option("--isotypic", "want_iso", is_flag=True, help="Table of nonzero dim P_n^{tau,gamma}.")
@click.option("--invariants", "want_inv", is_flag=True, help="The invariant tuple used for separation.")
@click.option("--dual", "want_dual", is_flag=True, help="Invariants of the dual Hopf algebra.")
@click.pass_obj
def analyze(opts: Options, path, want_filt, want_iso, want_inv, want_dual):
    """Structure report for the document at PATH (all sections if no flag is given)."""
    if not (want_filt or want_iso or want_inv or want_dual):
        want_filt = want_iso = want_inv = want_dual = True
    H = opts.embed(parse_algebra(_read(path)).build())
    sections, text = {}, [f"{path}: dim {H.dim} over Q(zeta_{H.m})"]
    if want_filt or want_iso:
        f, sec = _filtration_section(H, want_iso)
        if want_filt:
            sections["filtration"] = sec
            text += ["filtration:",
                     f"  stage dims  {', '.join(map(str, sec['stage_dims']))}",
                     f"  layer dims  {', '.join(map(str, sec['layer_dims']))}"]
        if want_iso:
            rows = _isotypic_rows(H, f)
            sections["isotypic"] = rows
            text.append("isotypic components of P_n (nonzero only):")
            if rows:
                text += _table([("n", "left", "right", "dim", "nondegenerate")] +
                               [(r["n"], r["left"], r["right"], r["dim"], "yes" if r["nondegenerate"] else "no")
                                for r in rows])
            else:
                text.append("  (empty)")
    if want_inv:
        sections["invariants"] = _invariants(H)
        text += ["invariants:"] + _inv_lines(sections["invariants"])
    if want_dual:
        sections["dual"] = _invariants(dual_hopf(H, check=False))
        text += ["dual invariants:"] + _inv_lines(sections["dual"])
    opts.report(_envelope("analyze", path=path, dim=H.dim, field={"cyclotomic_order": H.m},
                          sections=sections), "\n".join(text))


# ---------------------------------------------------------------- census

ASSUMPTIONS = ("nonsemisimple", "nonpointed", "noncopointed", "skewfree")


@main.command("census")
@click.option("--dim", "N", type=int, help="Dimension N of H (N >= 2).")
@click.option("--grouplikes", default="all", show_default=True,
              help="|G(H)|, a comma list of values, or 'all' divisors of N.")
@click.option("--scenario", help="Run a named scenario pipeline instead (e.g. dim27).")
@click.option("--assume", multiple=True, type=click.Choice(ASSUMPTIONS),
              help="Add a hypothesis (default set: nonsemisimple, nonpointed, noncopointed).")
@click.option("--drop", multiple=True, type=click.Choice(ASSUMPTIONS), help="Remove a hypothesis.")
@click.option("--taft-sub", type=click.Choice(["derived", "yes", "no"]), default="derived", show_default=True)
@click.option("--taft-quotient", type=click.Choice(["derived", "yes", "no"]), default="derived",
              show_default=True)
@click.option("--dual-grouplikes", type=int, help="|G(H*)| when the type is fixed.")
@click.option("--without-rule", multiple=True, type=click.Choice(census.RULE_IDS),
              help="Disable a rule (mutation testing).")
@click.option("--list-scenarios", is_flag=True, help="List scenario names and exit.")
@click.pass_obj
def census_cmd(opts: Options, N, grouplikes, scenario, assume, drop, taft_sub, taft_quotient,
               dual_grouplikes, without_rule, list_scenarios):
    """Coradical census: enumerate candidate coradicals and apply every rule."""
    if list_scenarios:
        scen = census.load_scenarios()
        opts.emit("\n".join(f"{k}: {v.get('description', '')}" for k, v in sorted(scen.items())))
        return
    workers = census.workers_from_env()
    if scenario:
        report = census.run_scenario(scenario, N, workers, without_rule)
    else:
        if N is None:
            raise BadParameter("--dim is required without --scenario")
        on = {"nonsemisimple", "nonpointed", "noncopointed"} | set(assume)
        on -= set(drop)
        ctx = census.CensusContext(
            assume_nonsemisimple="nonsemisimple" in on, assume_nonpointed="nonpointed" in on,
            assume_noncopointed="noncopointed" in on, assume_skewfree="skewfree" in on,
            taft_sub=taft_sub, taft_quotient=taft_quotient, dual_grouplikes=dual_grouplikes,
            disabled=frozenset(without_rule))
        gs = None
        if grouplikes != "all":
            try:
                gs = [int(x) for x in grouplikes.split(",")]
            except ValueError:
                raise BadParameter(f"--grouplikes must be 'all' or integers, got {grouplikes!r}") from None
        report = census.run_census(N, ctx, gs, workers)
    opts.report(report.to_json(), report.to_text())


# ---------------------------------------------------------------- normal-form

def _mat_doc(M: ExactMatrix) -> dict:
    return matrix_document(M)


def _mat_lines(M: ExactMatrix, indent: str = "    ") -> list[str]:
    rows = [tuple(_c(M[i, j]) for j in range(M.cols)) for i in range(M.rows)]
    return _table(rows, indent)


def _degenerate_anti(f: comatrix.ComatrixMap) -> tuple[dict, list[str]]:
    At = comatrix.recover_conjugator(f)
    sym = At.T == At
    anti = At.T == At.scale(CycNumber.rational(-1, At.m))
    shape = "symmetric" if sym else ("antisymmetric" if anti else "neither")
    data = {"note": "f^2 = id; the normal form needs ord(f^2) > 1", "conjugator": _mat_doc(At),
            "conjugator_shape": shape}
    text = ["  f^2 = id, so the normal form hypothesis ord(f^2) > 1 fails",
            f"  f(E) = A E^T A^-1 with A {shape}:"] + _mat_lines(At)
    return data, text


@main.command("normal-form")
@click.option("--matrix", "path", required=True, type=click.Path(dir_okay=False),
              help="Matrix document: the map on M*(d) in the basis e_ij (index i*d + j).")
@click.option("--kind", type=click.Choice(["auto", "anti", "detect"]), default="detect", show_default=True)
@click.option("--cap", type=click.IntRange(min=1), help="Cap on the order search.")
@click.pass_obj
def normal_form_cmd(opts: Options, path, kind, cap):
    """Normal form of a finite-order (anti-)automorphism of M*(d)."""
    M = parse_matrix(_read(path))
    if opts.field_order is not None:
        if opts.field_order % M.m:
            raise BadParameter(f"--field-order {opts.field_order} is not a multiple of {M.m}")
        M = M.embed(opts.field_order)
    d = math.isqrt(M.rows)
    if M.rows != M.cols or d * d != M.rows:
        raise BadParameter(f"matrix must be d^2 x d^2, got {M.rows} x {M.cols}")
    k = comatrix.detect_kind(M, d) if kind == "detect" else {"auto": comatrix.AUTO, "anti": comatrix.ANTI}[kind]
    f = comatrix.ComatrixMap(d, k, M, cap)
    text = [f"{path}: {k} of M*({d}) over Q(zeta_{M.m})"]
    try:
        res = comatrix.normal_form(f, cap)
    except OrderOne:
        data, lines = _degenerate_anti(f)
        doc = _envelope("normal-form", map_kind=k, d=d, order=1,
                        basis_change=_mat_doc(ExactMatrix.identity(d, M.m)), data=data)
        opts.report(doc, "\n".join(text + lines))
        return
    data: dict = {"omegas": [_c(w) for w in res.omegas], "notes": list(res.notes)}
    text.append(f"  order {'of f^2 ' if k == comatrix.ANTI else ''}{res.order}")
    text.append("  new basis e'_ij = P e P^-1 with P =")
    text += _mat_lines(res.basis_change)
    if k == comatrix.AUTO:
        data["ratios"] = [[_c(res.ratio(i, j)) for j in range(d)] for i in range(d)]
        text.append("  f(e'_ij) = (w_i / w_j) e'_ij with w = " + ", ".join(data["omegas"]))
    else:
        data.update(
            A=_mat_doc(res.A), a_plus=res.a_plus, a_minus=res.a_minus,
            blocks=[{"size": a, "lambda": _c(lam)} for a, lam in res.blocks],
            conditions=comatrix.conditions_abc([lam for _, lam in res.blocks], res.order,
                                               res.a_plus, res.a_minus))
        text.append(f"  f(E) = A E^T A^-1, a_+ = {res.a_plus}, a_- = {res.a_minus}, blocks: " +
                    (", ".join(f"{a} x (lambda = {_c(lam)})" for a, lam in res.blocks) or "none"))
        text.append("  A =")
        text += _mat_lines(res.A)
        text.append("  eigenvalues of f^2 conjugator: " + ", ".join(data["omegas"]))
        if res.stefan_omega is not None:
            data["stefan_omega"] = _c(res.stefan_omega)
            text.append(f"  d = 2: f(e'_12) = w^-1 e'_12 with w = {data['stefan_omega']}")
        text.append("  conditions (a)(b)(c): " + ", ".join(f"{k2}={'ok' if v else 'FAIL'}"
                                                             for k2, v in data["conditions"].items()))
    doc = _envelope("normal-form", map_kind=k, d=d, order=res.order, basis_change=_mat_doc(res.basis_change),
                    data=data)
    opts.report(doc, "\n".join(text + [f"  note: {n}" for n in res.notes]))


# ---------------------------------------------------------------- catalog

def _entry_json(r) -> dict:
    return {"key": r.entry.key, "builder": r.entry.name, "params": _jsonable(r.entry.params),
            "constructed": r.entry.constructed, "ok": r.ok, "error": r.error,
            "checks": {k: {"expected": _jsonable(w), "actual": _jsonable(a), "ok": p}
                       for k, (w, a, p) in r.checks.items()},
            "invariants": _jsonable(r.invariants)}


@main.command("catalog")
@click.option("--export", "export_dir", type=click.Path(file_okay=False),
              help="Also write each constructed entry as an algebra document into this directory.")
@click.pass_obj
def catalog_cmd(opts: Options, export_dir):
    """Build and verify every dimension-27 catalog entry."""
    reports = catalog.catalog27(census.workers_from_env())
    sep = catalog.invariant_separation(reports)
    keys = [r.entry.key for r in reports if r.invariants is not None]
    unsep = [[a, b] for i, a in enumerate(keys) for b in keys[i + 1:] if not sep[(a, b)]]
    ok = all(r.ok for r in reports)
    rows = [("entry", "status", "G", "pointed", "copointed", "ord S", "coradical blocks")]
    for r in reports:
        inv = r.invariants or {}
        status = "ok" if r.ok else "FAIL"
        if not r.entry.constructed:
            status = "not constructed"
        blocks = inv.get("coradical_blocks", "-")
        rows.append((r.entry.key, status, inv.get("G", "-"), inv.get("pointed", "-"), inv.get("copointed", "-"),
                     inv.get("ord_S", "-"),
                     ",".join(map(str, blocks)) if isinstance(blocks, tuple) else blocks))
    text = ["dimension 27 catalog"] + _table(rows)
    for r in reports:
        bad = [k for k, (_, _, p) in r.checks.items() if not p]
        if r.error and r.entry.constructed:
            text.append(f"  {r.entry.key}: {r.error}")
        for k in bad:
            w, a, _ = r.checks[k]
            text.append(f"  {r.entry.key}: {k} expected {w}, got {a}")
    text.append("pairs not separated by the invariant tuple: " +
                ("; ".join(f"{a} / {b}" for a, b in unsep) if unsep else "none"))
    if export_dir:
        out = Path(export_dir)
        try:
            out.mkdir(parents=True, exist_ok=True)
            for r in reports:
                if r.entry.constructed and r.error is None:
                    H = r.algebra or catalog.build(r.entry.name, r.entry.params)
                    slug = r.entry.key.split(" ", 1)[1].replace(":", "_").replace(" ", "_")
                    (out / f"{slug}.json").write_text(dumps(H), encoding="utf-8", newline="\n")
        except OSError as exc:
            raise Failure(EXIT_IO, f"cannot export to {export_dir}: {exc.strerror or exc}") from None
        text.append(f"documents written to {export_dir}")
    opts.report(_envelope("catalog", ok=ok, entries=[_entry_json(r) for r in reports], unseparated=unsep),
                "\n".join(text))
    if not ok:
        sys.exit(EXIT_FAILED)


if __name__ == "__main__":  # pragma: no cover
    main()
