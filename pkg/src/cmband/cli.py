"""Command line front end: catalog, verify, show, equiv, band-modes."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .bunch import BandDatum, WordError, equivalent_bands, equivalent_strings, parse_datum
from .linalg import SEARCH_DEGREE_ENV

DEFAULTS = {"max_letters": 4, "max_index": 3, "max_m": 2, "lambdas": "1,2", "jobs": 1, "format": "json"}
CONFIG_NAME = "cmband.conf"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def read_config(path: Path | None) -> dict:
    """key = value lines; '#' starts a comment."""
    if path is None:
        path = Path(CONFIG_NAME)
        if not path.exists():
            return {}
    elif not path.exists():
        raise UsageError(f"config file {path} not found")
    out = {}
    for n, line in enumerate(path.read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"{path}:{n}: expected key=value")
        key = key.strip().replace("-", "_")
        if key not in DEFAULTS:
            raise UsageError(f"{path}:{n}: unknown key {key!r}")
        out[key] = value.strip()
    return out


def resolve_settings(args, config: dict) -> dict:
    """Flags over config file over built-in defaults."""
    out = {}
    for key, default in DEFAULTS.items():
        flag = getattr(args, key, None)
        out[key] = flag if flag is not None else config.get(key, default)
    try:
        for key in ("max_letters", "max_index", "max_m", "jobs"):
            out[key] = int(out[key])
        lams = out["lambdas"]
        if isinstance(lams, str):
            lams = [Fraction(x) for x in lams.split(",") if x.strip()]
        out["lambdas"] = [Fraction(x) for x in lams]
    except ValueError as e:
        raise UsageError(str(e)) from e
    if any(out[k] < 1 for k in ("max_letters", "max_index", "max_m", "jobs")):
        raise UsageError("bounds and job counts must be positive")
    if not out["lambdas"] or any(l == 0 for l in out["lambdas"]):
        raise UsageError("lambda values must be nonzero")
    if out["format"] not in ("json", "latex"):
        raise UsageError(f"unknown format {out['format']!r}")
    return out


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cmband", description="Strings, bands and their modules over A, P and T.")
    p.add_argument("--config", type=Path, help=f"key=value settings file (default ./{CONFIG_NAME})")
    p.add_argument("--search-degree", type=int, help=f"membership search bound (also ${SEARCH_DEGREE_ENV})")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", help="write one record per equivalence class")
    c.add_argument("--max-letters", dest="max_letters", type=int)
    c.add_argument("--max-index", dest="max_index", type=int)
    c.add_argument("--max-m", dest="max_m", type=int)
    c.add_argument("--lambdas", help="comma separated, e.g. 1,2,1/2")
    c.add_argument("--format", choices=["json", "latex"])
    c.add_argument("--jobs", type=int)
    c.add_argument("-o", "--out", type=Path, help="output path (default stdout)")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=["ideals", "mf", "examples", "properties", "all"])

    s = sub.add_parser("show", help="full record of one datum")
    s.add_argument("datum", help='e.g. "x[1]- y[2]+" or "band(x[1]- y[1]-; m=2; lambda=3)"')
    s.add_argument("--format", choices=["json", "latex"])

    e = sub.add_parser("equiv", help="decide whether two data are equivalent")
    e.add_argument("first")
    e.add_argument("second")

    b = sub.add_parser("band-modes", help="compare rotation equivalence of bands with the symbol-word one")
    b.add_argument("--max-letters", dest="max_letters", type=int)
    b.add_argument("--max-index", dest="max_index", type=int)
    b.add_argument("--lambdas")
    return p


def _parse(text: str):
    try:
        return parse_datum(text)
    except WordError as e:
        raise UsageError(f"{text!r}: {e}") from e


def cmd_catalog(args, settings) -> int:
    from .catalog import build_catalog, catalog_json, catalog_latex, record_passes

    records = build_catalog(settings["max_letters"], settings["max_index"], settings["max_m"],
                            settings["lambdas"], settings["jobs"])
    text = catalog_json(records) if settings["format"] == "json" else catalog_latex(records)
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    failed = [r["datum"] for r in records if not record_passes(r)]
    for d in failed:
        print(f"FAIL {d}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_verify(args, settings) -> int:
    from .catalog import run_suite

    report = run_suite(args.suite, args.search_degree)
    sys.stdout.write(report.text())
    print(f"{len(report.lines)} lines, {report.failures} failures")
    return EXIT_FAIL if report.failures else EXIT_OK


def cmd_show(args, settings) -> int:
    from .catalog import build_record
    from .modpres import build, merge_rows

    d = _parse(args.datum) if args.datum != "P" else None
    rec = build_record(str(d) if d is not None else "P", args.search_degree)
    if (args.format or "json") == "latex":
        if d is None:
            print("P")
        else:
            print(merge_rows(build(d)).to_latex())
    else:
        print(json.dumps(rec, sort_keys=True, indent=1))
    return EXIT_OK


def cmd_equiv(args, settings) -> int:
    d1, d2 = _parse(args.first), _parse(args.second)
    if isinstance(d1, BandDatum) != isinstance(d2, BandDatum):
        result = {"equivalent": False}
    elif isinstance(d1, BandDatum):
        result = {"equivalent": equivalent_bands(d1, d2, "module"),
                  "symbol_word_equivalent": equivalent_bands(d1, d2, "bunch")}
    else:
        result = {"equivalent": equivalent_strings(d1, d2)}
    print(json.dumps(result, sort_keys=True))
    return EXIT_OK if result["equivalent"] else EXIT_FAIL


def cmd_band_modes(args, settings) -> int:
    from .catalog import band_mode_diagnostic

    lams = settings["lambdas"] if args.lambdas else [Fraction(1), Fraction(2), Fraction(1, 2)]
    out = band_mode_diagnostic(min(settings["max_letters"], 4) if args.max_letters is None else args.max_letters,
                               1 if args.max_index is None else args.max_index, lams)
    print(json.dumps(out, sort_keys=True, indent=1))
    return EXIT_OK


COMMANDS = {"catalog": cmd_catalog, "verify": cmd_verify, "show": cmd_show, "equiv": cmd_equiv,
            "band-modes": cmd_band_modes}


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        settings = resolve_settings(args, read_config(args.config))
        if args.search_degree is not None:
            os.environ[SEARCH_DEGREE_ENV] = str(args.search_degree)
        return COMMANDS[args.command](args, settings)
    except UsageError as e:
        print(f"cmband: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"cmband: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
