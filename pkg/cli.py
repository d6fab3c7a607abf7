"""
Command-line interface: ``fujiki <command> [options]``.

Exit status: 0 on success, 1 when a verification or reference comparison
fails, 2 on usage or input errors.
"""

import argparse
import logging
import sys
from fractions import Fraction
from typing import Dict, List, Optional

from config import Settings, configure_logging, load_settings
from errors import FujikiError
from invariants.fujiki import historical_surds
from invariants.rational import format_rational, parse_rational
from invariants.series import series_report
from invariants.topology import verify_custom
from pipeline.orchestrator import FujikiTableRunner, TableReport
from singularities.profile import SingularityProfile
from utils.formatting import FORMATS, TABLE_COLUMNS, render_json_document, render_records

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _emit(records: List[Dict], fmt: str, columns: Optional[List[str]] = None) -> None:
    sys.stdout.write(render_records(records, fmt, columns))


def _runner(settings: Settings) -> FujikiTableRunner:
    return FujikiTableRunner(settings=settings)


def cmd_table(args, settings: Settings) -> int:
    report: TableReport = _runner(settings).run(golden=args.golden, dedup=args.dedup)
    rows = report.dedup.rows if report.dedup is not None else report.rows
    records = [row.to_record() for row in rows]

    if args.format == "json":
        sections = {"rows": records}
        if report.dedup is not None:
            sections["candidate_equivalent"] = [couple.members for couple in report.dedup.couples]
            sections["dimension_six"] = report.dimension_six
            sections["headline"] = report.headline
        sys.stdout.write(render_json_document(sections, {"rows": TABLE_COLUMNS}))
    else:
        _emit(records, args.format, TABLE_COLUMNS)
    if report.dedup is not None and args.format != "json":
        print()
        for couple in report.dedup.couples:
            print(f"candidate-equivalent: {' ~ '.join(couple.members)}")
        print()
        _emit(report.dimension_six, args.format)
        print()
        print(f"deformation classes: at least {report.headline}")
    for key, fields in report.mismatches.items():
        print(f"reference mismatch {key}: {', '.join(fields)}", file=sys.stderr)
    if not report.all_verified:
        failing = [row.key for row in report.rows if not row.verified]
        print(f"verification failed for: {', '.join(failing)}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_list(args, settings: Settings) -> int:
    runner = _runner(settings)
    records = []
    for entry in runner.catalog:
        resolved = runner.catalog.resolved(entry.name)
        records.append({
            "group": entry.name,
            "name": entry.display,
            "small_group": f"({entry.small_group_id[0]},{entry.small_group_id[1]})",
            "degree": entry.degree,
            "rank": resolved.rank,
            "classes": ";".join(label or "-" for label in entry.class_labels()),
            "tabulated": entry.tabulated,
        })
    _emit(records, args.format)
    return EXIT_OK


def cmd_involutions(args, settings: Settings) -> int:
    classes = _runner(settings).classify(args.group, method=args.method, bridge=args.bridge)
    records = [
        {
            "class": i,
            "members": len(cls.members),
            "contains_identity": cls.contains_identity,
            "representative": cls.representative.describe(),
        }
        for i, cls in enumerate(classes, start=1)
    ]
    _emit(records, args.format)
    return EXIT_OK


def cmd_profile(args, settings: Settings) -> int:
    row = _runner(settings).compute_row(args.group, args.involution_class)
    record = {"group": row.group, "class": row.involution_class, "b2": row.b2}
    record.update(row.profile.model_dump())
    _emit([record], args.format)
    return EXIT_OK


def cmd_verify(args, settings: Settings) -> int:
    row = _runner(settings).compute_row(args.group, args.involution_class)
    _emit([row.to_record()], args.format, TABLE_COLUMNS)
    return EXIT_OK if row.verified else EXIT_FAILED


def cmd_verify_custom(args, settings: Settings) -> int:
    profile = SingularityProfile.parse(args.profile)
    factor: Fraction = parse_rational(args.order_factor)
    invariants, root = verify_custom(profile, args.b2, factor, b3=args.b3)
    record = {
        "b2": invariants.b2, "b3": invariants.b3, "b4": invariants.b4, "chi": invariants.chi,
        "c4": format_rational(invariants.c4), "S0": format_rational(invariants.S0_value),
        "c2sq": format_rational(invariants.c2_squared), "radicand": format_rational(root.radicand),
        "root": format_rational(root.value) if root.is_rational else "",
        "squarefree": root.squarefree if root.squarefree is not None else "",
        "verified": root.is_rational,
    }
    _emit([record], args.format)
    return EXIT_OK if root.is_rational else EXIT_FAILED


def cmd_series(args, settings: Settings) -> int:
    report = series_report(args.max_n)
    pairs = [
        {"first": p["first"], "second": p["second"], "b2": p["b2"],
         "ratio": format_rational(p["ratio"]), "distinct": p["distinct"]}
        for p in report["pairs"]
    ]
    if args.format == "json":
        sys.stdout.write(render_json_document({"rows": report["rows"], "pairs": pairs}))
    else:
        _emit(report["rows"], args.format)
        print()
        _emit(pairs, args.format)
    return EXIT_OK if all(p["distinct"] for p in pairs) else EXIT_FAILED


def cmd_surds(args, settings: Settings) -> int:
    _emit(historical_surds(), args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fujiki", description="Invariants of Fujiki orbifolds S(G)^[n]")
    parser.add_argument("--catalog", help="Catalog JSON file (overrides FUJIKI_CATALOG)")
    parser.add_argument("--workers", type=int, help="Worker threads for row computation")
    parser.add_argument("--no-cache", action="store_true", help="Disable the persistent result cache")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    sub = parser.add_subparsers(dest="cmd", required=True)

    def with_format(p):
        p.add_argument("--format", choices=FORMATS, default="csv")
        return p

    p_table = with_format(sub.add_parser("table", help="Compute the full orbifold table"))
    p_table.add_argument("--golden", action="store_true", help="Compare with the reference table")
    p_table.add_argument("--dedup", action="store_true", help="Collapse deformation-equivalent rows")
    p_table.set_defaults(func=cmd_table)

    with_format(sub.add_parser("list", help="List catalog groups")).set_defaults(func=cmd_list)

    p_inv = with_format(sub.add_parser("involutions", help="Classify valid involutions of a group"))
    p_inv.add_argument("group")
    p_inv.add_argument("--method", choices=["bases", "ambient"])
    p_inv.add_argument("--bridge", help="Named overgroup used as the only extra bridge")
    p_inv.set_defaults(func=cmd_involutions)

    for name, func, help_text in (("profile", cmd_profile, "Singularities and b2 of one orbifold"),
                                  ("verify", cmd_verify, "Full row with the rationality check")):
        p = with_format(sub.add_parser(name, help=help_text))
        p.add_argument("group")
        p.add_argument("--class", dest="involution_class", default="", help="Involution class label")
        p.set_defaults(func=func)

    p_custom = with_format(sub.add_parser("verify-custom", help="Rationality criterion on arbitrary data"))
    p_custom.add_argument("--order-factor", required=True, help="Fujiki factor C, e.g. 9 or 3|G|")
    p_custom.add_argument("--b2", type=int, required=True)
    p_custom.add_argument("--b3", type=int, default=0)
    p_custom.add_argument("--profile", required=True, help="e.g. a2=45,a4=2")
    p_custom.set_defaults(func=cmd_verify_custom)

    p_series = with_format(sub.add_parser("series", help="b2 of the abelian series S(G)^[n], n >= 3"))
    p_series.add_argument("--max-n", type=int, default=10)
    p_series.set_defaults(func=cmd_series)

    with_format(sub.add_parser("surds", help="Surds from earlier singularity data")).set_defaults(func=cmd_surds)
    return parser


def _settings_from_args(args) -> Settings:
    settings = load_settings()
    update = {}
    if args.catalog:
        update["catalog_path"] = args.catalog
    if args.workers:
        update["max_workers"] = args.workers
    if args.no_cache:
        update["cache_enabled"] = False
    if args.log_level:
        update["log_level"] = args.log_level
    return settings.model_copy(update=update)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    settings = _settings_from_args(args)
    configure_logging(settings)
    try:
        return args.func(args, settings)
    except (FujikiError, ValueError) as e:
        # ValueError covers malformed profile or rational text
        logger.error(f"{args.cmd} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
