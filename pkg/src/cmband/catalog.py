"""Catalog records and the verification suites behind the command line."""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .bunch import (
    BandDatum, Periodic, StringDatum, WordError, _fmt_frac, canonical_band, canonical_band_bunch,
    enumerate_bands, enumerate_data, enumerate_full_words, enumerate_strings, equivalent_bands,
    equivalent_strings, module_to_bunch, opposite_word, parse_datum, parse_word, validate_band,
    validate_string,
)
from .canon import canonical_form, essential_image_predicate, regularity_check
from .golden import CANONICAL_EXAMPLES, PRESENTATION_EXAMPLES, check_canonical_example, check_presentation_example
from .linalg import Equal, Member, Unequal, Unknown, submodules_equal
from .mf import (
    MF_ROW_IDS, golden_mf, knorrer_double, mf_for_ideal_row, parameter_grid, syzygy_check,
    table_ideal, verify_mf, verify_mf_up_to_unit,
)
from .modpres import (
    IDEAL_ROW_IDS, ExceptionalWord, band_rotation_transform, build, compact_form_P, ideal_presentations,
    ideal_table_row, induce_to_T, involution_tau, is_locally_free, merge_rows, reconstruct_datum,
    restrict_to_P, reversal_permutation, same_submodule, verify_ideal_row,
)
from .ring import T_RING, format_elem


def verdict_name(v) -> str:
    return type(v).__name__


def verdict_digest(v) -> str | None:
    """Short hash over all certificates of an Equal verdict."""
    if not isinstance(v, Equal):
        return None
    h = hashlib.sha256()
    for m in v.forward + v.backward:
        h.update(m.digest().encode())
    return h.hexdigest()[:16]


def verdict_obj(v):
    out = {"verdict": verdict_name(v)}
    d = verdict_digest(v)
    if d:
        out["digest"] = d
    if isinstance(v, Unequal):
        out["witness"] = {"side": v.side, "index": v.index, "degree": v.witness.degree}
    return out


# ---------------------------------------------------------------- matching the tables

def _row_instance(row_id, i, j, lam):
    try:
        return ideal_table_row(row_id, i, j, lam)
    except WordError:
        return None


def match_ideal_row(d):
    """(row id, i, j, lambda, via_tau) when d is a tabulated ideal up to equivalence and tau."""
    if isinstance(d, BandDatum) and d.m != 1:
        return None
    if len(d.word) > 2:
        return None
    idx = [l.index for l in d.word if isinstance(l.index, int) and l.index > 0]
    for via_tau, dd in ((False, d), (True, involution_tau(d))):
        for row_id in IDEAL_ROW_IDS:
            band_row = row_id.startswith("band")
            if band_row != isinstance(dd, BandDatum):
                continue
            for i in sorted(set(idx)) or [1]:
                for j in sorted(set(idx)) or [1]:
                    lam = dd.lam if band_row else 1
                    row = _row_instance(row_id, i, j, lam)
                    if row is None:
                        continue
                    if band_row:
                        if equivalent_bands(row.datum, dd):
                            return row_id, i, j, lam, via_tau
                    elif equivalent_strings(row.datum, dd):
                        return row_id, i, j, lam, via_tau
    return None


# ---------------------------------------------------------------- records

def datum_kind(d) -> str:
    if isinstance(d, BandDatum):
        return "band"
    return "exceptional" if d.exceptional else "string"


def build_record(text: str, search_degree=None) -> dict:
    """Everything about one datum; depends on the datum text only."""
    if text == "P":
        return {
            "datum": "P", "kind": "regular-module-P", "locally_free": True,
            "presentations": {"P": {"ring": "P", "frame": ["P"], "exceptional": False, "generators": [["1"]]}},
            "verification": {},
        }
    d = parse_datum(text)
    w = module_to_bunch(d)
    cf = canonical_form(w, d.m, d.lam) if isinstance(d, BandDatum) else canonical_form(w)
    a = build(d)
    am = merge_rows(a)
    p = restrict_to_P(am, d, exceptional="adjoin")
    pc = compact_form_P(p, d)
    t = induce_to_T(am, d)
    sx, sy = cf.stripe_dims()
    rec = {
        "datum": str(d),
        "kind": datum_kind(d),
        "symbol_word": str(w),
        "canonical_form": {"stripes_x": [list(s) for s in sx], "stripes_y": [list(s) for s in sy],
                           "t": cf.t, "m": cf.m},
        "regular": regularity_check(cf),
        "locally_free": is_locally_free(d),
        "presentations": {
            "A": a.to_json_obj(), "A_merged": am.to_json_obj(), "P": p.to_json_obj(),
            "P_compact": pc.to_json_obj() if pc is not None else None, "T": t.to_json_obj(),
        },
    }
    ver = {}
    ver["reconstruction"] = reconstruct_datum(d).gens == a.gens
    ver["merge"] = verdict_obj(_merge_check(a, am))
    if isinstance(d, StringDatum):
        o = build(validate_string(opposite_word(d.word)))
        ver["reversal"] = verdict_obj(same_submodule(a, o, reversal_permutation(o), search_degree))
    else:
        checks = {}
        for s in range(2, len(d.word), 2):
            rb = validate_band(d.word[s:] + d.word[:s], d.m, d.lam)
            checks[str(s)] = verdict_obj(same_submodule(band_rotation_transform(a, s, d.m, d.lam), build(rb),
                                                        search_degree=search_degree))
        ver["rotation"] = checks
    match = match_ideal_row(d)
    if match:
        row_id, i, j, lam, via_tau = match
        rec["ideal_row"] = {"row": row_id, "i": i, "j": j, "lambda": _fmt_frac(lam), "via_tau": via_tau}
        if not via_tau:
            res = verify_ideal_row(row_id, i, j, lam, search_degree)
            ver["ideal_table"] = {k: verdict_obj(v) for k, v in res.items()}
        pair = mf_for_ideal_row(row_id, i, j, lam)
        if pair:
            mrow, mi, mj, ml, rel = pair
            m = golden_mf(mrow, mi, mj, ml)
            rec["mf"] = {"row": mrow, "i": mi, "j": mj, "lambda": None if ml is None else _fmt_frac(ml),
                         "relation": rel, "factorization": m.to_json_obj()}
            unit = verify_mf_up_to_unit(m)
            # over k[[a,b]] a factorization up to a unit is as good as an exact one
            ver["mf"] = {"exact": verify_mf(m), "power_series": unit.exact or unit.invertible}
            ver["mf_syzygy"] = syzygy_check(mrow, mi, mj, ml)
    rec["verification"] = ver
    return rec


def _merge_check(a, am, search_degree=None):
    """Merged span equals the image of the unmerged span under the row-pair sum."""
    image = [tuple(col) for col in am.gens.columns()]
    summed = []
    for col in a.gens.columns():
        out = []
        for org in am.origin:
            acc = a.ring.zero()
            for k, row_org in enumerate(a.origin):
                if row_org[0] in org:
                    acc = acc + col[k]
            out.append(acc)
        summed.append(tuple(out))
    return submodules_equal(summed, image, a.ring, search_degree)


def record_passes(rec: dict) -> bool:
    def ok(v):
        if isinstance(v, bool):
            return v
        if isinstance(v, dict):
            if "power_series" in v:
                return v["power_series"]
            if "verdict" in v:
                return v["verdict"] == "Equal"
            return all(ok(x) for x in v.values())
        return True

    return ok(rec.get("verification", {}))


def catalog_data(max_letters: int, max_index: int, max_m: int, lambdas) -> list:
    if max_letters < 1 or max_index < 1 or max_m < 1:
        raise ValueError("catalog bounds must be at least 1")
    data = enumerate_data(max_letters, max_index, "all", max_m, tuple(Fraction(l) for l in lambdas))
    return ["P"] + [str(d) for d in data]


def _pool_map(fn, items, jobs: int):
    if jobs <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (jobs * 8) or 1)))


def build_catalog(max_letters=2, max_index=1, max_m=1, lambdas=(1,), jobs=1) -> list:
    return _pool_map(build_record, catalog_data(max_letters, max_index, max_m, lambdas), jobs)


def catalog_json(records) -> str:
    return json.dumps(records, sort_keys=True, indent=1) + "\n"


def catalog_latex(records) -> str:
    from .bunch import parse_datum as _pd
    from .modpres import Presentation, presentation_latex

    lines = [
        "\\documentclass{article}",
        "\\usepackage{amsmath}",
        "\\begin{document}",
    ]
    for rec in records:
        title = rec["datum"].replace("_", "\\_").replace("[", "{[}").replace("]", "{]}")
        lines.append(f"\\paragraph{{{title}}} ({rec['kind']})")
        if rec["datum"] == "P":
            lines.append("The regular module $P$.")
            continue
        d = _pd(rec["datum"])
        am = merge_rows(build(d))
        lines.append("\\[" + presentation_latex(am) + "\\]")
    lines.append("\\end{document}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- verification suites

@dataclass
class Report:
    lines: list = field(default_factory=list)
    failures: int = 0

    def check(self, name: str, ok: bool, detail: str = ""):
        self.lines.append(f"{'PASS' if ok else 'FAIL'} {name}" + (f"  {detail}" if detail else ""))
        if not ok:
            self.failures += 1

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def suite_ideals(report: Report, indices=(1, 2, 3), lambdas=(1, 2), search_degree=None):
    for row_id in IDEAL_ROW_IDS:
        band = row_id.startswith("band")
        uses_i = "[i]" in row_id
        uses_j = "[j]" in row_id
        for i in indices if uses_i else (1,):
            for j in indices if uses_j else (1,):
                for lam in lambdas if band else (1,):
                    res = verify_ideal_row(row_id, i, j, lam, search_degree)
                    ok = all(isinstance(v, Equal) for v in res.values())
                    detail = " ".join(f"{k}={verdict_name(v)}:{verdict_digest(v) or '-'}" for k, v in res.items())
                    report.check(f"ideal {row_id} i={i} j={j} lambda={lam}", ok, detail)


def suite_mf(report: Report, indices=(1, 2, 3, 4), lambdas=(1, 2, 3)):
    for row_id in MF_ROW_IDS:
        for i, j, lam in parameter_grid(row_id, indices, lambdas):
            m = golden_mf(row_id, i, j, lam)
            ok = verify_mf(m)
            detail = ""
            if not ok:
                u = verify_mf_up_to_unit(m)
                detail = (f"phi*psi = ({format_elem(u.unit)})*f*I, unit over power series: {u.invertible}"
                          if u.unit is not None else "product is not a multiple of f*I")
            report.check(f"mf {row_id} i={i} j={j} lambda={lam}", ok, detail)
            report.check(f"knorrer {row_id} i={i} j={j} lambda={lam}", verify_mf(knorrer_double(m)))
            report.check(f"syzygy {row_id} i={i} j={j} lambda={lam}", syzygy_check(row_id, i, j, lam))


def suite_examples(report: Report):
    for name in CANONICAL_EXAMPLES:
        report.check(f"canonical {name}", check_canonical_example(name))
    for name in PRESENTATION_EXAMPLES:
        res = check_presentation_example(name)
        for k, ok in res.items():
            report.check(f"presentation {name} {k}", ok)


def suite_properties(report: Report, max_letters=4, max_index=2, max_m=2, lambdas=(1, 2), search_degree=None):
    strings = enumerate_strings(max_letters, max_index)
    bands = enumerate_bands(max_letters, max_index, max_m, tuple(Fraction(l) for l in lambdas))
    bad_tau = [d for d in strings if involution_tau(involution_tau(d)) != d]
    bad_tau += [b for b in bands if not equivalent_bands(involution_tau(involution_tau(b)), b)]
    report.check("tau is an involution on data", not bad_tau, f"{len(bad_tau)} exceptions" if bad_tau else "")
    bad_lf = [d for d in strings + bands
              if is_locally_free(d) != (isinstance(d, BandDatum) or not d.has_inf)]
    report.check("locally free iff no inf-letter", not bad_lf)
    bad_rec = [d for d in strings + bands if reconstruct_datum(d).gens != build(d).gens]
    report.check("reconstruction from canonical forms", not bad_rec, f"{len(bad_rec)} mismatches" if bad_rec else "")
    words = enumerate_full_words(8, max_index)
    bad_reg = [w for w in words if regularity_check(canonical_form(w)) != essential_image_predicate(w)]
    report.check("regularity matches the essential image predicate", not bad_reg)
    bad_eq = []
    for d in strings:
        a = build(d)
        if not isinstance(same_submodule(involution_tau(a), build(involution_tau(d)), search_degree=search_degree),
                          Equal):
            bad_eq.append(d)
    report.check("tau-equivariance of build on strings", not bad_eq)
    bad_m = [d for d in strings + bands if not isinstance(_merge_check(build(d), merge_rows(build(d))), Equal)]
    report.check("merging preserves the generated submodule", not bad_m)
    try:
        validate_band(parse_word("x[1]- y[1]- x[1]- y[1]-"))
        report.check("periodic band words rejected", False)
    except Periodic:
        report.check("periodic band words rejected", True)


SUITES = ("ideals", "mf", "examples", "properties")


def run_suite(name: str, search_degree=None) -> Report:
    report = Report()
    names = SUITES if name == "all" else (name,)
    for n in names:
        t0 = time.perf_counter()
        if n == "ideals":
            suite_ideals(report, search_degree=search_degree)
        elif n == "mf":
            suite_mf(report)
        elif n == "examples":
            suite_examples(report)
        elif n == "properties":
            suite_properties(report, search_degree=search_degree)
        else:
            raise ValueError(f"unknown suite {n!r}")
        report.lines.append(f"# {n}: {time.perf_counter() - t0:.2f}s")
    return report


# ---------------------------------------------------------------- band modes

def band_mode_diagnostic(max_letters=2, max_index=1, lambdas=(1, 2, Fraction(1, 2))) -> dict:
    """Compare band equivalence up to rotation (module level) with the symbol-word equivalence."""
    bands = enumerate_bands(max_letters, max_index, 1, tuple(Fraction(l) for l in lambdas))
    module_classes = {}
    bunch_classes = {}
    for b in bands:
        module_classes.setdefault(str(canonical_band(b)), []).append(str(b))
        bunch_classes.setdefault(str(canonical_band_bunch(b)), []).append(str(b))
    merged = [sorted(v) for v in bunch_classes.values() if len(v) > 1]
    witnesses = []
    for group in merged:
        b1, b2 = parse_datum(group[0]), parse_datum(group[1])
        p1, p2 = build(b1), build(b2)
        verdict = same_submodule(p1, p2) if p1.frame == p2.frame else None
        witnesses.append({"pair": group[:2], "same_frame_submodule": None if verdict is None else verdict_name(verdict)})
    return {
        "bands": len(bands),
        "module_classes": len(module_classes),
        "symbol_word_classes": len(bunch_classes),
        "identified_only_by_symbol_words": witnesses,
    }
