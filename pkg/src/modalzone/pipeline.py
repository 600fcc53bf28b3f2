"""End-to-end run: preprocess, tag, persons, modality, attitude, report."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, TextIO

from . import attitude as att
from .lexica import LexiconError, Lexica, load_lexica
from .modality import AnnotatedDocument, SentenceLabel, analyze_sentence, annotate_document, classify_sentence
from .persons import PersonEntity, PronounLink, extract_reference_names, link_pronouns, mark_persons
from .postag import tag_tokens
from .preprocess import Document, Sentence, preprocess
from .report import AccuracyReport, DistributionReport, distribution, dump_json, evaluate, read_gold
from .transcripts import NameDecider, TranscriptError, load_name_decisions, write_jsonl


class StageError(RuntimeError):
    def __init__(self, stage: str, message: str):
        super().__init__(f"{stage}: {message}")
        self.stage = stage


@dataclass
class RunConfig:
    inputs: list[Path]
    lexicons: Path | None = None
    out: Path | None = None
    records: Path | None = None
    report: Path | None = None
    report_json: Path | None = None
    gold: Path | None = None
    interactive: bool = False
    names_transcript: Path | None = None
    attitude_transcript: Path | None = None
    debug_tags: bool = False
    attitude: bool = True


@dataclass
class DocumentResult:
    doc_id: str
    document: Document
    persons: list[PersonEntity]
    links: list[PronounLink]
    labels: dict[int, SentenceLabel]
    occurrences: dict[int, list]
    attitudes: list[att.AttitudeRecord]
    annotated: AnnotatedDocument


@dataclass
class RunResult:
    documents: list[DocumentResult] = field(default_factory=list)
    distributions: dict[str, DistributionReport] = field(default_factory=dict)
    accuracy: AccuracyReport | None = None
    graph: att.AttitudeGraph | None = None
    name_rows: list[dict] = field(default_factory=list)
    attitude_rows: list[dict] = field(default_factory=list)

    @property
    def annotated_text(self) -> str:
        if len(self.documents) == 1:
            return self.documents[0].annotated.text
        return "".join(f"# {d.doc_id}\n{d.annotated.text}" for d in self.documents)

    @property
    def records_text(self) -> str:
        lines = []
        for d in self.documents:
            for rec in d.annotated.records:
                lines.append(json.dumps({"doc": d.doc_id, **rec}, ensure_ascii=False, sort_keys=True))
        return "".join(line + "\n" for line in lines)

    def report_dict(self) -> dict:
        out = {"distribution": {k: v.as_dict() for k, v in self.distributions.items()}}
        if self.accuracy is not None:
            out["accuracy"] = self.accuracy.as_dict()
        if self.graph is not None:
            out["attitude_graph"] = {
                "Pro": sorted(self.graph.pro), "Contra": sorted(self.graph.contra),
                "Neutral": sorted(self.graph.neutral),
            }
        return out

    def report_text(self) -> str:
        parts = [rep.to_text(name) for name, rep in self.distributions.items()]
        if self.accuracy is not None:
            parts.append(self.accuracy.to_text())
        if self.graph is not None:
            parts.append("attitude graph\n" + "".join(
                f"  {name:<8} {', '.join(sorted(members)) or '-'}\n"
                for name, members in (("Pro", self.graph.pro), ("Contra", self.graph.contra),
                                      ("Neutral", self.graph.neutral))))
        return "\n".join(parts)


def sentence_id(doc_id: str, index: int) -> str:
    return f"{doc_id}:{index}"


def _attitude_asker(document: Document, persons, read: Callable[[str], str]):
    names = {p.id: p.canonical_name for p in persons}

    def ask(rec: att.AttitudeRecord) -> dict | None:
        holder = names.get(rec.holder, rec.holder)
        answer = read(f"[{rec.sentence}] {document.sentence_text(rec.sentence)}\n"
                      f"holder={holder} modal={rec.modal}; proposition h=H, n=notH, blank=undecided: ").strip().lower()
        if answer in ("h", "n"):
            return {"sentence": rec.sentence, "proposition": att.H if answer == "h" else att.NOT_H}
        return None

    return ask


def _existing(path: Path | None, interactive: bool) -> Path | None:
    """Transcript to replay; an interactive run may start a new one."""
    if path is None or (interactive and not Path(path).exists()):
        return None
    return path


def analyze_document(doc_id: str, raw: str, lexica: Lexica, config: RunConfig,
                     read: Callable[[str], str] | None = None) -> tuple[DocumentResult, list[dict], list[dict]]:
    doc = preprocess(raw, lexica.abbreviations)
    doc = replace(doc, sentences=tuple(
        Sentence(s.index, tuple(tag_tokens(s.tokens, lexica.pos, lexica.suffix_rules))) for s in doc.sentences))

    names_path = _existing(config.names_transcript, config.interactive)
    attitude_path = _existing(config.attitude_transcript, config.interactive)
    try:
        decisions = load_name_decisions(names_path, doc_id) if names_path else {}
    except TranscriptError as exc:
        raise StageError("persons", str(exc)) from None
    decider = NameDecider(decisions, read if config.interactive else None)
    persons, _queue = mark_persons(doc, lexica.names, extract_reference_names(doc), decider)
    links = link_pronouns(doc, persons)

    occurrences, labels = {}, {}
    try:
        for s in doc.sentences:
            occurrences[s.index] = analyze_sentence(s.tokens, lexica.modality, lexica.pos, s.index)
            labels[s.index] = classify_sentence(occurrences[s.index])
    except ValueError as exc:
        raise StageError("modality", str(exc)) from None

    attitudes, used = [], []
    holders: dict[int, str] = {}
    if config.attitude:
        try:
            decisions = att.load_attitude_decisions(attitude_path, doc_id) if attitude_path else {}
            proposals = att.propose_records(doc.sentences, occurrences, labels, persons, links, lexica.downtoners)
            ask = _attitude_asker(doc, persons, read) if config.interactive and read else None
            attitudes, used = att.collect_proposition_polarity(proposals, decisions, ask)
        except TranscriptError as exc:
            raise StageError("attitude", str(exc)) from None
        names = {p.id: p.canonical_name for p in persons}
        holders = {r.sentence: names.get(r.holder, r.holder) for r in attitudes}

    annotated = annotate_document(doc, persons, links, labels, occurrences, holders, config.debug_tags)
    if attitudes:
        by_sentence = {r.sentence: r for r in attitudes}
        annotated = AnnotatedDocument(annotated.text, tuple(
            {**rec, "attitude": {k: v for k, v in by_sentence[rec["sentence"]].as_record().items()
                                 if k in ("modal", "proposition", "group")}}
            if rec["sentence"] in by_sentence else rec
            for rec in annotated.records))
    result = DocumentResult(doc_id, doc, persons, links, labels, occurrences, attitudes, annotated)
    return result, [{**r, "doc": doc_id} for r in decider.gathered], [{**r, "doc": doc_id} for r in used]


def _doc_ids(paths: list[Path]) -> list[str]:
    ids = [p.stem for p in paths]
    if len(set(ids)) != len(ids):
        ids = [str(p) for p in paths]
    return ids


def run_pipeline(config: RunConfig, read: Callable[[str], str] | None = None) -> RunResult:
    """Run every stage over all inputs and return the in-memory artifacts.

    Raises StageError naming the failing stage.
    """
    try:
        lexica = load_lexica(config.lexicons)
    except (LexiconError, OSError) as exc:
        raise StageError("lexica", str(exc)) from None

    result = RunResult()
    for doc_id, path in zip(_doc_ids(config.inputs), config.inputs):
        try:
            raw = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise StageError("preprocess", f"cannot read {path}: {exc}") from None
        doc_result, names_used, att_used = analyze_document(doc_id, raw, lexica, config, read)
        result.documents.append(doc_result)
        result.name_rows += names_used
        result.attitude_rows += att_used

    all_labels = []
    for d in result.documents:
        rendered = [d.labels[s.index].rendered for s in d.document.sentences]
        result.distributions[d.doc_id] = distribution(rendered)
        all_labels += rendered
    if len(result.documents) > 1:
        result.distributions["all"] = distribution(all_labels)

    if config.gold is not None:
        predictions, lemmas = {}, {}
        for d in result.documents:
            for s in d.document.sentences:
                sid = sentence_id(d.doc_id, s.index)
                predictions[sid] = d.labels[s.index].rendered
                lemmas[sid] = [o.lemma for o in d.occurrences[s.index] if o.resolved_class is not None]
        try:
            result.accuracy = evaluate(predictions, read_gold(config.gold), lemmas)
        except (ValueError, OSError) as exc:
            raise StageError("report", str(exc)) from None

    if config.attitude:
        records = []
        for d in result.documents:
            names = {p.id: p.canonical_name for p in d.persons}
            records += [replace(r, holder=names.get(r.holder, r.holder)) for r in d.attitudes]
        result.graph = att.build_attitude_graph(records)
    return result


def _write(path: Path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def write_artifacts(config: RunConfig, result: RunResult, stdout: TextIO | None = None) -> None:
    try:
        if config.out is not None:
            _write(config.out, result.annotated_text)
        elif stdout is not None:
            stdout.write(result.annotated_text)
        if config.records is not None:
            _write(config.records, result.records_text)
        if config.report is not None:
            _write(config.report, result.report_text())
        if config.report_json is not None:
            _write(config.report_json, dump_json(result.report_dict()))
        if config.interactive:
            # interactive runs always persist what was decided
            if config.names_transcript is not None:
                write_jsonl(result.name_rows, config.names_transcript)
            if config.attitude_transcript is not None and config.attitude:
                write_jsonl(result.attitude_rows, config.attitude_transcript)
    except OSError as exc:
        raise StageError("output", str(exc)) from None
