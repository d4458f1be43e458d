"""Command-line entry points: ingest (parse + pipeline -> cache file),
serve (cache -> HTTP API), gen (synthetic corpora).

Exit codes: 0 ok, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .datagen import GenConfig, GenConfigError, generate, scenario_corpus
from .ingest import IngestError, parse_dataset
from .pipeline import PipelineError, build_snapshot, load_snapshot, save_snapshot

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

PORT_ENV_VAR = "RECRUITLENS_PORT"


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the CLI contract reserves 2 for
    # data errors, so remap.
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="recruitlens", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    ingest = sub.add_parser("ingest", help="parse a dataset and write a snapshot cache")
    ingest.add_argument("--input", required=True, help="CSV or JSONL dataset path")
    ingest.add_argument("--cache", required=True, help="snapshot cache output path")
    ingest.add_argument("--fraction", type=float, default=0.01,
                        help="top position fraction to keep (default 0.01)")
    ingest.add_argument("--format", choices=("csv", "jsonl"),
                        help="input format (default: by file extension)")
    ingest.add_argument("--rejects", help="optional path for the reject report CSV")

    serve = sub.add_parser("serve", help="serve a snapshot cache over HTTP")
    serve.add_argument("--cache", required=True, help="snapshot cache path")
    serve.add_argument("--port", type=int, default=8000,
                       help=f"port (default 8000; {PORT_ENV_VAR} overrides)")
    serve.add_argument("--host", default="127.0.0.1")

    gen = sub.add_parser("gen", help="generate a synthetic corpus")
    gen.add_argument("--records", type=int, help="record count override")
    gen.add_argument("--seed", type=int, help="seed override")
    gen.add_argument("--output", required=True, help="CSV output path")
    gen.add_argument("--config", help="key=value config file")
    gen.add_argument("--scenario", choices=("CASE1", "CASE2"),
                     help="emit a planted scenario corpus instead")

    return parser


def _cmd_ingest(args: argparse.Namespace) -> int:
    path = Path(args.input)
    fmt = args.format or ("jsonl" if path.suffix.lower() == ".jsonl" else "csv")
    try:
        data = path.read_bytes()
    except OSError as exc:
        print(f"recruitlens: cannot read {path}: {exc}", file=sys.stderr)
        return EXIT_DATA
    try:
        records, report = parse_dataset(data, fmt)
    except IngestError as exc:
        print(f"recruitlens: ingest failed: {exc}", file=sys.stderr)
        return EXIT_DATA
    print(
        f"parsed {report.total_lines} lines: {report.accepted} accepted,"
        f" {len(report.rejects)} rejected"
    )
    if args.rejects:
        Path(args.rejects).write_bytes(report.to_csv())
    try:
        snapshot = build_snapshot(records, args.fraction)
    except (ValueError, PipelineError) as exc:
        print(f"recruitlens: pipeline failed: {exc}", file=sys.stderr)
        return EXIT_DATA
    save_snapshot(snapshot, args.cache)
    p = snapshot.provenance
    print(
        f"snapshot written to {args.cache}: {p.ingested} -> {p.after_position_filter}"
        f" (top positions) -> {p.after_outlier_removal} (outliers removed)"
    )
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    try:
        snapshot = load_snapshot(args.cache)
    except OSError as exc:
        print(f"recruitlens: cannot read {args.cache}: {exc}", file=sys.stderr)
        return EXIT_DATA
    except PipelineError as exc:
        print(f"recruitlens: {exc}", file=sys.stderr)
        return EXIT_DATA
    port = args.port
    env_port = os.environ.get(PORT_ENV_VAR)
    if env_port:
        try:
            port = int(env_port)
        except ValueError:
            print(f"recruitlens: bad {PORT_ENV_VAR}: {env_port!r}", file=sys.stderr)
            return EXIT_USAGE
    from .service import serve

    serve(snapshot, port=port, host=args.host)
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        if args.scenario:
            data = scenario_corpus(args.scenario)
        else:
            config = GenConfig.from_file(args.config) if args.config else GenConfig()
            overrides = {}
            if args.records is not None:
                overrides["record_count"] = args.records
            if args.seed is not None:
                overrides["seed"] = args.seed
            if overrides:
                from dataclasses import replace

                config = replace(config, **overrides)
            data = generate(config)
    except (GenConfigError, OSError) as exc:
        print(f"recruitlens: gen failed: {exc}", file=sys.stderr)
        return EXIT_DATA
    Path(args.output).write_bytes(data)
    print(f"wrote {args.output}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "ingest":
        return _cmd_ingest(args)
    if args.command == "serve":
        return _cmd_serve(args)
    if args.command == "gen":
        return _cmd_gen(args)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
