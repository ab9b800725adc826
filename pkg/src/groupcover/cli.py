"""Command-line surface: analyze presentations, decide finite-group
covering properties, search for annihilation witnesses, and run the
theorem-verification harness over the catalog.

Exit codes: 0 success (whatever the verdict), 1 theorem mismatch in
verify-all, 2 parse error, 3 cap or search budget exceeded, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .catalog import (
    build_catalog,
    default_catalog_spec,
    group_from_spec,
    load_group,
    parse_catalog_spec,
)
from .classify import HINTS, classify_fa, classify_nfa, rho_annihilated_checks
from .config import DEFAULT_CAPS, Caps
from .covering import is_fa_finite, is_nfa_finite, verify_finite_theorems
from .errors import (
    ClosureExceedsCap,
    EmptyGeneratorList,
    GroupCoverError,
    OrderCapExceeded,
    ParseError,
    PresentationSyntaxError,
    SearchBudgetExceeded,
    UnknownGenerator,
)
from .fingroup import weight_bruteforce
from .presentation import abelian_invariants, parse_presentation, parse_word_text
from .witness import fa_scan, find_annihilator
from .words import render_word

_PARSE_ERRORS = (PresentationSyntaxError, UnknownGenerator, EmptyGeneratorList, ParseError)
_CAP_ERRORS = (OrderCapExceeded, ClosureExceedsCap, SearchBudgetExceeded)


@dataclass
class RunConfig:
    command: str
    output_format: str = "text"
    caps: Caps = DEFAULT_CAPS
    jobs: int = 1
    options: dict = field(default_factory=dict)


def _parse_caps(tokens, base: Caps) -> Caps:
    values = {"order": base.order, "normal": base.normal, "weight": base.weight}
    for token in tokens or ():
        key, _, raw = token.partition("=")
        if key not in values or not raw:
            raise ParseError(f"bad --caps token {token!r}; use order=N normal=N weight=N")
        try:
            values[key] = int(raw)
        except ValueError:
            raise ParseError(f"bad --caps value {token!r}") from None
    return Caps(**values)


def _load_config_file(path) -> dict:
    if path is None:
        return {}
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict):
        raise ParseError(f"config file {path} must hold a JSON object")
    return data


def _build_run_config(args) -> RunConfig:
    file_conf = _load_config_file(getattr(args, "config", None))
    output_format = args.format or file_conf.get("format") or "text"
    caps_conf = file_conf.get("caps", {})
    base = Caps(
        order=caps_conf.get("order", DEFAULT_CAPS.order),
        normal=caps_conf.get("normal", DEFAULT_CAPS.normal),
        weight=caps_conf.get("weight", DEFAULT_CAPS.weight),
    )
    caps = _parse_caps(getattr(args, "caps", None), base)
    jobs = getattr(args, "jobs", None) or file_conf.get("jobs", 1)
    return RunConfig(args.command, output_format, caps, jobs)


def _emit(payload: dict, conf: RunConfig, text_lines) -> None:
    if conf.output_format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _read_presentation(path):
    return parse_presentation(Path(path).read_text())


# ---------------------------------------------------------------------------
# subcommands

def cmd_analyze(args) -> int:
    conf = _build_run_config(args)
    pres = _read_presentation(args.presentation)
    verdict = classify_fa(pres, args.hint)
    inv = abelian_invariants(pres)
    rho = rho_annihilated_checks(pres)
    payload = {
        "presentation": pres.render(),
        "hint": args.hint,
        "property": "F-A",
        "verdict": verdict.status,
        "reason": f"{verdict.rule}: {verdict.reason}",
        "invariants": {"free_rank": inv.free_rank, "factors": list(inv.factors)},
        "easily_fa": verdict.easily_fa,
        "perfect": inv.is_trivial,
        "rho": rho.as_dict(),
    }
    if args.nfa is not None:
        nfa = classify_nfa(pres, args.nfa, args.hint)
        payload["nfa"] = {"n": args.nfa, **nfa.as_dict()}
    lines = [
        f"presentation: {pres.render()}",
        f"abelianisation: {inv.describe()} (free_rank={inv.free_rank}, factors={list(inv.factors)})",
        f"F-A verdict: {verdict.status} [{verdict.rule}] easily_fa={verdict.easily_fa}",
        f"perfect: {inv.is_trivial}",
        f"abelian-A: {rho.abelian_annihilated.status}",
        f"free-A (Z allowed): {rho.free_annihilated_including_z.status}",
    ]
    if args.nfa is not None:
        lines.append(f"{args.nfa}-F-A verdict: {payload['nfa']['verdict']}")
    _emit(payload, conf, lines)
    return 0


def _resolve_group(args, conf: RunConfig):
    if args.from_format:
        return load_group(args.group, args.from_format, cap=conf.caps.order)
    return group_from_spec(args.group, cap=conf.caps.order)


def cmd_finite(args) -> int:
    conf = _build_run_config(args)
    group = _resolve_group(args, conf)
    reports = []
    lines = [f"group: {group.name} (order {group.order})"]
    fa = is_fa_finite(group, conf.caps.normal)
    reports.append(fa.as_dict())
    lines.append(_cover_line(fa))
    if args.nfa is not None:
        nfa = is_nfa_finite(group, args.nfa, conf.caps.normal)
        reports.append(nfa.as_dict())
        lines.append(_cover_line(nfa))
    if args.weight:
        w = weight_bruteforce(group, conf.caps.weight)
        reports.append({"group": group.name, "weight": w})
        lines.append(f"weight: {w}")
    if args.verify:
        report = verify_finite_theorems(
            group, cap=conf.caps.normal, weight_cap=conf.caps.weight
        )
        reports.append(report.as_dict())
        status = "pass" if report.passed else f"FAIL ({', '.join(report.failing())})"
        lines.append(f"theorem checks: {status}")
    _emit({"group": group.name, "order": group.order, "reports": reports}, conf, lines)
    return 0


def _cover_line(report) -> str:
    if report.verdict:
        size = len(report.subcover or ())
        return (
            f"{report.property_name}: true "
            f"(cover by {len(report.cover)} maximal normal subgroups, greedy subcover {size})"
        )
    return f"{report.property_name}: false (uncovered: {list(report.uncovered)})"


def cmd_witness(args) -> int:
    conf = _build_run_config(args)
    pres = _read_presentation(args.presentation)
    word = parse_word_text(args.word, pres)
    witness = find_annihilator(pres, word, args.bound)
    if witness is None:
        payload = {"witness": None, "bound": args.bound}
        _emit(payload, conf, [f"none <= {args.bound}"])
    else:
        payload = {"witness": witness.as_dict(), "bound": args.bound}
        target = witness.as_dict()["target"]
        _emit(
            payload,
            conf,
            [
                f"target: {target['name']} (order {target['order']})",
                f"images: {witness.as_dict()['images']}",
            ],
        )
    return 0


def cmd_scan(args) -> int:
    conf = _build_run_config(args)
    pres = _read_presentation(args.presentation)
    report = fa_scan(pres, args.max_length, args.bound, hint=args.hint)
    unwitnessed = report.unwitnessed
    lines = [
        f"scanned {len(report.entries)} words of length <= {args.max_length} "
        f"against targets of order <= {args.bound}",
        f"witnessed: {len(report.witnessed)}, other: {len(unwitnessed)}",
    ]
    for entry in unwitnessed:
        lines.append(
            f"  {render_word(entry.word, pres.generators)}: {entry.status}"
        )
    _emit(report.as_dict(), conf, lines)
    return 0


def cmd_verify_all(args) -> int:
    conf = _build_run_config(args)
    if args.catalog:
        spec = parse_catalog_spec(Path(args.catalog).read_text())
    else:
        spec = default_catalog_spec()
    groups = [
        g for g in build_catalog(spec, cap=conf.caps.order) if g.order <= args.max_order
    ]
    for path in args.include or ():
        fmt = args.from_format or "cayley"
        groups.append(
            load_group(path, fmt, cap=conf.caps.order, validate=not args.no_validate)
        )
    nfa_range = tuple(range(1, args.nfa_max + 1))

    def run(group):
        return verify_finite_theorems(
            group, nfa_range=nfa_range, cap=conf.caps.normal, weight_cap=conf.caps.weight
        )

    if conf.jobs > 1:
        with ThreadPoolExecutor(max_workers=conf.jobs) as pool:
            reports = list(pool.map(run, groups))
    else:
        reports = [run(g) for g in groups]

    mismatches = []
    lines = []
    for report in reports:
        if report.passed:
            lines.append(f"{report.group_name}: ok")
        else:
            failing = ", ".join(report.failing())
            lines.append(f"{report.group_name}: FAIL [{failing}]")
            mismatches.append((report.group_name, failing))
    summary = f"{len(reports)} groups checked, {len(mismatches)} with mismatches"
    lines.append(summary)
    payload = {
        "groups_checked": len(reports),
        "mismatches": [
            {"group": name, "checks": checks} for name, checks in mismatches
        ],
        "reports": [r.as_dict() for r in reports],
    }
    _emit(payload, conf, lines)
    if mismatches:
        for name, checks in mismatches:
            print(f"mismatch: {name}: {checks}", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------
# argument parsing

def _add_common(sub):
    sub.add_argument("--format", choices=("text", "json"), default=None)
    sub.add_argument(
        "--caps",
        nargs="*",
        metavar="KEY=N",
        help="override caps, e.g. --caps order=256 normal=64 weight=64",
    )
    sub.add_argument("--config", help="JSON config file (flags win)")
    sub.add_argument("--jobs", type=int, default=None)


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupcover",
        description="Decide, witness and brute-force-verify finite-annihilation properties of groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify a presentation")
    p.add_argument("presentation", help="presentation file")
    p.add_argument("--hint", choices=HINTS, default=None)
    p.add_argument("--nfa", type=int, default=None, metavar="N")
    _add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("finite", help="covering checks on a finite group")
    p.add_argument("group", help="group spec (e.g. 'C 15', 'prod(C 2, C 2)') or file path")
    p.add_argument(
        "--from",
        dest="from_format",
        choices=("permutations", "cayley", "matrix"),
        default=None,
        help="treat the group argument as a file of this format",
    )
    p.add_argument("--nfa", type=int, default=None, metavar="N")
    p.add_argument("--weight", action="store_true")
    p.add_argument("--verify", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_finite)

    p = sub.add_parser("witness", help="find an annihilation witness for a word")
    p.add_argument("presentation", help="presentation file")
    p.add_argument("word", help="word over the presentation's generators")
    p.add_argument("--bound", type=int, required=True, metavar="B")
    _add_common(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("scan", help="witness-scan all short words of a presentation")
    p.add_argument("presentation", help="presentation file")
    p.add_argument("--max-length", type=int, default=3)
    p.add_argument("--bound", type=int, required=True, metavar="B")
    p.add_argument("--hint", choices=HINTS, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify-all", help="run the theorem harness over the catalog")
    p.add_argument("--max-order", type=int, default=32)
    p.add_argument("--nfa-max", type=int, default=3)
    p.add_argument("--catalog", help="catalog spec file (default: built-in catalog)")
    p.add_argument("--include", nargs="*", help="extra group files to check")
    p.add_argument(
        "--from",
        dest="from_format",
        choices=("permutations", "cayley", "matrix"),
        default=None,
    )
    p.add_argument(
        "--no-validate",
        action="store_true",
        help="skip load-time validation of included files (fault injection aid)",
    )
    _add_common(p)
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _PARSE_ERRORS as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except _CAP_ERRORS as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4
    except GroupCoverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
