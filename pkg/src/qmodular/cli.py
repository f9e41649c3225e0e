"""Command-line front end: ``qmodular {qrat,group,certify,scan}``.

Exit codes: 0 success, 1 a checked property failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from datetime import datetime, timezone

from . import cert
from .grp import DEFAULT_CAP, group_closure, group_table_document
from .qrat import Frac, qrat_document

SCAN_PROPERTIES = ("s-tables", "div-laws", "value-sets", "aux-laws", "trace-zeta6")
DEFAULT_MAX_DEN = 100
DEFAULT_BUDGET = 200
DIV_LAW_WORDS = 500
AUX_LAW_WORDS = 300


_NEGATIVE_FRACTION = re.compile(r"^-\d+(/\d+)?$")


class InputError(ValueError):
    pass


def _conductor(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("conductor must be >= 1")
    return n


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--no-timestamp", action="store_true", help="omit the timestamp field")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--seed", type=int, default=cert.DEFAULT_SEED)

    p = argparse.ArgumentParser(prog="qmodular", description="q-deformed rationals and the groups G_q(zeta_n)")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("qrat", parents=[common], help="q-deformed rational r/s")
    q.add_argument("fraction", help="r/s, optionally signed; 1/0 allowed")
    q.add_argument("--jones", action="store_true", help="emit only the normalized Jones polynomial")
    q.add_argument("--eval", type=_conductor, action="append", default=[], metavar="N",
                   help="also evaluate at zeta_N (repeatable)")

    g = sub.add_parser("group", parents=[common], help="enumerate G_q(zeta_n)")
    g.add_argument("--zeta", type=_conductor, required=True, metavar="N")
    g.add_argument("--cap", type=_positive, default=DEFAULT_CAP)

    c = sub.add_parser("certify", parents=[common], help="finite/infinite certificate for G_q(zeta_n)")
    c.add_argument("--zeta", type=_conductor, required=True, metavar="N")
    c.add_argument("--cap", type=_positive, default=DEFAULT_CAP)

    s = sub.add_parser("scan", parents=[common], help="sweep a law over fractions or seeded words")
    s.add_argument("--property", required=True, choices=SCAN_PROPERTIES)
    s.add_argument("--max-den", type=_positive, default=DEFAULT_MAX_DEN)
    s.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET,
                   help="denominator bound for value-sets")
    return p


def cmd_qrat(args) -> tuple[dict, int]:
    try:
        frac = Frac.parse(args.fraction)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    doc = qrat_document(frac, eval_at=args.eval)
    if args.jones:
        if doc["jones"] is None:
            raise InputError("the Jones polynomial is only defined here for r/s > 1")
        keep = {"r": doc["r"], "s": doc["s"], "jones": doc["jones"]}
        if "evaluations" in doc:
            keep["evaluations"] = [{"n": e["n"], "jones": e["jones"]} for e in doc["evaluations"]]
        doc = keep
    return doc, 0


def cmd_group(args) -> tuple[dict, int]:
    return group_table_document(group_closure(args.zeta, args.cap)), 0


def cmd_certify(args) -> tuple[dict, int]:
    c = cert.finiteness_certificate(args.zeta, args.cap)
    doc = c.to_json()
    decided = c.verdict in ("Finite", "Infinite")
    if decided:
        replay = cert.verify_certificate(doc)
        doc["checks"].append({"name": "certificate replays from its own payload",
                              "status": cert.PASS if replay.ok else cert.FAIL,
                              "details": {"replayed": len(replay.checks)}})
    ok = decided and all(ch["status"] != cert.FAIL for ch in doc["checks"])
    return doc, 0 if ok else 1


def _scan_reports(args) -> list[cert.Report]:
    prop = args.property
    if prop == "s-tables":
        return [cert.vanishing_tables(args.max_den)]
    if prop == "div-laws":
        return [cert.divisibility_laws(cert.random_words(DIV_LAW_WORDS, args.seed))]
    if prop == "aux-laws":
        words = cert.random_words(AUX_LAW_WORDS, args.seed)
        return [cert.auxiliary_laws(words, cert.random_cf_samples(AUX_LAW_WORDS, args.seed))]
    if prop == "trace-zeta6":
        return [cert.trace_set_zeta6(seed=args.seed)]
    reports = [cert.value_set_saturation(n, args.budget) for n in range(2, 8)]
    reports += [cert.trace_collection_growth(n, seed=args.seed) for n in range(2, 8)]
    return reports


def cmd_scan(args) -> tuple[dict, int]:
    reports = _scan_reports(args)
    totals = {cert.PASS: 0, cert.FAIL: 0, cert.SKIP: 0}
    first_failure = None
    for r in reports:
        for k, v in r.counts().items():
            totals[k] += v
        if first_failure is None and r.failures():
            bad = r.failures()[0]
            first_failure = {"report": r.title, **bad.to_json()}
    doc = {
        "property": args.property,
        "ok": totals[cert.FAIL] == 0,
        "counts": totals,
        "first_failure": first_failure,
        "reports": [r.to_json() for r in reports],
    }
    return doc, 0 if doc["ok"] else 1


COMMANDS = {"qrat": cmd_qrat, "group": cmd_group, "certify": cmd_certify, "scan": cmd_scan}


def _config(args) -> dict:
    return {k: v.strip() if isinstance(v, str) else v
            for k, v in sorted(vars(args).items()) if k not in ("out", "format", "no_timestamp")}


def render_text(doc: dict, indent: int = 0) -> str:
    """Indented key: value rendering of a JSON document."""
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for k, v in doc.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v) if not isinstance(v, str) else v}")
    elif isinstance(doc, list):
        for item in doc:
            if isinstance(item, dict):
                lines.append(f"{pad}-")
                lines.append(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {item if isinstance(item, str) else json.dumps(item)}")
    else:
        lines.append(f"{pad}{doc}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    # a leading space keeps argparse from reading "-7/3" as an option
    argv = [" " + a if _NEGATIVE_FRACTION.match(a) else a for a in argv]
    args = parser.parse_args(argv)  # exits with status 2 on bad input
    try:
        result, code = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"qmodular: error: {exc}", file=sys.stderr)
        return 2
    doc = {"command": args.command, "config": _config(args)}
    if not args.no_timestamp:
        doc["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    doc["result"] = result
    text = json.dumps(doc, indent=2, sort_keys=False) if args.format == "json" else render_text(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
