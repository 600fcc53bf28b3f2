"""JSON-lines decision transcripts for the manual steps of the pipeline.

Two transcript kinds exist:

* names: ``{"candidate": str, "sentence": int, "decision": "accept"|"reject", "canonicalName"?: str}``
* attitude: ``{"sentence": int, "proposition": "H"|"notH", "modal"?: "M"|"notM"}``

Interactive runs ask on a text stream and record every answer so the run
can be replayed with ``--no-interactive``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Callable, TextIO


class TranscriptError(ValueError):
    pass


def read_jsonl(path: str | Path) -> list[tuple[int, dict]]:
    rows = []
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise TranscriptError(f"cannot read transcript {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            row = json.loads(line)
        except json.JSONDecodeError as exc:
            raise TranscriptError(f"{path}: row {lineno}: invalid JSON ({exc.msg})") from None
        if not isinstance(row, dict):
            raise TranscriptError(f"{path}: row {lineno}: expected a JSON object")
        rows.append((lineno, row))
    return rows


def write_jsonl(rows: list[dict], path: str | Path) -> None:
    text = "".join(json.dumps(r, ensure_ascii=False, sort_keys=True) + "\n" for r in rows)
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def rows_for_doc(rows: list[tuple[int, dict]], doc: str | None) -> list[tuple[int, dict]]:
    """Rows tagged with ``doc``; untagged rows apply to every document."""
    return [(n, r) for n, r in rows if doc is None or r.get("doc", doc) == doc]


def load_name_decisions(path: str | Path, doc: str | None = None) -> dict[tuple[int, str], dict]:
    decisions = {}
    for lineno, row in rows_for_doc(read_jsonl(path), doc):
        cand, sent, decision = row.get("candidate"), row.get("sentence"), row.get("decision")
        if not isinstance(cand, str) or not isinstance(sent, int) or decision not in ("accept", "reject"):
            raise TranscriptError(f"{path}: row {lineno}: malformed name decision {row!r}")
        decisions[(sent, cand)] = row
    return decisions


class NameDecider:
    """Answers queued name candidates from a transcript, then optionally a prompt."""

    def __init__(self, decisions: dict[tuple[int, str], dict] | None = None,
                 ask: Callable[[str], str] | None = None, out: TextIO | None = None):
        self.decisions = decisions or {}
        self.ask = ask
        self.out = out
        self.gathered: list[dict] = []

    def __call__(self, candidate) -> dict | None:
        key = (candidate.sentence, candidate.candidate)
        row = self.decisions.get(key)
        if row is None and self.ask is not None:
            answer = self.ask(f"Person name? [{candidate.candidate}] (sentence {candidate.sentence}) "
                              "y=accept, n=reject, or type the surname: ").strip()
            if answer.lower() in ("", "n", "no"):
                row = {"candidate": candidate.candidate, "sentence": candidate.sentence, "decision": "reject"}
            else:
                row = {"candidate": candidate.candidate, "sentence": candidate.sentence, "decision": "accept"}
                if answer.lower() not in ("y", "yes"):
                    row["canonicalName"] = answer
        if row is not None:
            self.gathered.append(row)
        return row
