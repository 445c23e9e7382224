"""Command-line front end.

Every command prints sorted JSON. Subsets are listed as sorted element
index arrays. Verification reports are a JSON array with one object per
ring::

    [{"ring": "M(2,GF(2))",
      "checks": [{"id": ..., "status": "pass|fail|skipped-cap|not-applicable",
                  "detail": ..., "witness": ..., "elapsed": seconds}, ...]}]

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Sequence

from .ideals import is_quasi_duo, jacobson_radical, maximal_ideals
from .limits import ResourceLimitError, limits
from .ring import RingAxiomError, center
from .spec import SpecError, build, parse_spec
from .subrings import maximal_subrings
from .theorems import CHECK_GROUPS, FAIL, SKIPPED_CAP, ZooConfig, run_zoo, verify_spec

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

SIDES = {"left": "left", "right": "right", "two": "two-sided"}


class InputError(Exception):
    pass


def _ring(text: str):
    try:
        return build(parse_spec(text))
    except (SpecError, RingAxiomError, OSError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def cmd_show(text: str) -> dict[str, Any]:
    R = _ring(text)
    try:
        rg_max: int | None = len(maximal_subrings(R))
    except ResourceLimitError:
        rg_max = None
    return {
        "spec": text,
        "label": R.label,
        "order": R.order,
        "char": R.characteristic,
        "commutative": R.is_commutative,
        "center": len(center(R)),
        "jacobson_radical": len(jacobson_radical(R)),
        "quasi_duo_left": is_quasi_duo(R, "left"),
        "quasi_duo_right": is_quasi_duo(R, "right"),
        "max_left": len(maximal_ideals(R, "left")),
        "max_right": len(maximal_ideals(R, "right")),
        "max_two_sided": len(maximal_ideals(R, "two-sided")),
        "max_subrings": rg_max,
    }


def cmd_maxsub(text: str) -> dict[str, Any]:
    R = _ring(text)
    subs = maximal_subrings(R)
    return {"spec": text, "order": R.order, "count": len(subs), "subrings": [list(S.members) for S in subs]}


def cmd_maxideals(text: str, side: str) -> dict[str, Any]:
    R = _ring(text)
    ideals = maximal_ideals(R, SIDES[side])
    return {"spec": text, "side": side, "count": len(ideals), "ideals": [list(I.members) for I in ideals]}


def _groups(checks: str) -> list[str] | None:
    if checks == "all":
        return None
    wanted = [c.strip() for c in checks.split(",") if c.strip()]
    unknown = sorted(set(wanted) - set(CHECK_GROUPS))
    if unknown:
        raise InputError(f"unknown checks {unknown}; choose from {list(CHECK_GROUPS)} or 'all'")
    return wanted


def _report_exit(reports) -> int:
    statuses = [c.status for r in reports for c in r.checks]
    if FAIL in statuses:
        return EXIT_FAILED
    return EXIT_OK


def cmd_verify(text: str, checks: str = "all") -> tuple[list[dict], int]:
    report = verify_spec(text, _groups(checks))
    first = report.checks[0] if report.checks else None
    if first is not None and first.check_id == "parse":
        raise InputError(first.detail)
    if first is not None and first.check_id == "build" and first.status == SKIPPED_CAP:
        raise ResourceLimitError(**first.witness)
    return [report.to_dict()], _report_exit([report])


def cmd_zoo(config_path: str | None) -> tuple[list[dict], int]:
    if config_path is None:
        config = ZooConfig()
    else:
        try:
            with open(config_path) as fh:
                config = ZooConfig.from_dict(json.load(fh))
        except (OSError, json.JSONDecodeError, AttributeError, TypeError) as exc:
            raise InputError(f"bad zoo config: {exc}") from exc
    reports = run_zoo(config)
    return [r.to_dict() for r in reports], _report_exit(reports)


def counts_csv(payload: Any) -> str:
    """Flat projection of the integer and boolean fields of a JSON result."""
    rows = payload if isinstance(payload, list) else [payload]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "value"])
    for i, row in enumerate(rows):
        prefix = f"{i}." if len(rows) > 1 else ""
        if "checks" in row:
            tally: dict[str, int] = {}
            for c in row["checks"]:
                tally[c["status"]] = tally.get(c["status"], 0) + 1
            for status in sorted(tally):
                writer.writerow([f"{prefix}{row['ring']}.{status}", tally[status]])
            continue
        for key in sorted(row):
            value = row[key]
            if isinstance(value, (bool, int)) or value is None:
                writer.writerow([prefix + key, "" if value is None else value])
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="finring", description="Finite-ring workbench.")
    parser.add_argument("--max-order", type=int, help="largest ring order to build")
    parser.add_argument("--max-ideals", type=int, help="cap on distinct ideals enumerated")
    parser.add_argument("--max-subrings", type=int, help="cap on distinct subrings enumerated")
    parser.add_argument("--csv", action="store_true", help="emit counts as CSV instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("show", help="summary of a ring")
    p.add_argument("spec")
    p = sub.add_parser("maxsub", help="maximal subrings")
    p.add_argument("spec")
    p = sub.add_parser("maxideals", help="maximal ideals of one side")
    p.add_argument("spec")
    p.add_argument("--side", choices=sorted(SIDES), default="left")
    p = sub.add_parser("verify", help="run checks on one ring")
    p.add_argument("spec")
    p.add_argument("--checks", default="all", help=f"comma list of {', '.join(CHECK_GROUPS)} or 'all'")
    p = sub.add_parser("zoo", help="run checks over a list of rings")
    p.add_argument("--config", help="JSON file with 'rings', optional 'checks' and 'caps'")
    p.add_argument("--json", dest="json_out", help="write the report here instead of stdout")
    return parser


def _dispatch(args: argparse.Namespace) -> tuple[Any, int]:
    if args.command == "show":
        return cmd_show(args.spec), EXIT_OK
    if args.command == "maxsub":
        return cmd_maxsub(args.spec), EXIT_OK
    if args.command == "maxideals":
        return cmd_maxideals(args.spec, args.side), EXIT_OK
    if args.command == "verify":
        return cmd_verify(args.spec, args.checks)
    return cmd_zoo(args.config)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        with limits(max_order=args.max_order, max_ideals=args.max_ideals, max_subrings=args.max_subrings):
            payload, code = _dispatch(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    text = counts_csv(payload) if args.csv else json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if getattr(args, "json_out", None):
        with open(args.json_out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
