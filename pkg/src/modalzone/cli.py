"""Command line entry point."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .pipeline import RunConfig, StageError, run_pipeline, write_artifacts


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="modalzone",
                                description="Label sentences of scientific text as epistemic, deontic or non-modal.")
    p.add_argument("--input", nargs="+", type=Path, required=True, metavar="PATH", help="plain-text documents")
    p.add_argument("--lexicons", type=Path, help="lexicon directory (default: bundled data)")
    p.add_argument("--out", type=Path, help="annotated text (default: stdout)")
    p.add_argument("--records", type=Path, help="JSON-lines sentence records")
    p.add_argument("--report", type=Path, help="plain-text report")
    p.add_argument("--report-json", type=Path, help="JSON report")
    p.add_argument("--gold", type=Path, help="gold labels, id<TAB>label with id = <doc>:<sentence>")
    p.add_argument("--interactive", action=argparse.BooleanOptionalAction, default=False,
                   help="ask for name and H/notH decisions on stdin")
    p.add_argument("--names-transcript", type=Path)
    p.add_argument("--attitude-transcript", type=Path)
    p.add_argument("--debug-tags", action="store_true", help="render tokens as (word, TAG)")
    p.add_argument("--no-attitude", dest="attitude", action="store_false", help="skip the attitude stage")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _prompt(message: str) -> str:
    sys.stderr.write(message)
    sys.stderr.flush()
    line = sys.stdin.readline()
    return line.rstrip("\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.interactive and not (args.names_transcript and (args.attitude_transcript or not args.attitude)):
        parser.error("--interactive needs --names-transcript and --attitude-transcript to persist decisions")
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    config = RunConfig(
        inputs=args.input, lexicons=args.lexicons, out=args.out, records=args.records,
        report=args.report, report_json=args.report_json, gold=args.gold,
        interactive=args.interactive, names_transcript=args.names_transcript,
        attitude_transcript=args.attitude_transcript, debug_tags=args.debug_tags,
        attitude=args.attitude,
    )
    try:
        result = run_pipeline(config, _prompt if config.interactive else None)
        write_artifacts(config, result, sys.stdout)
    except StageError as exc:
        print(f"error in stage {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
