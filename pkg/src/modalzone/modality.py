"""Modality triggers, modal-verb disambiguation and sentence labels.

Modal verbs are resolved by a small automaton over the tags that follow
them: after the verb, up to two adverbs and one negator may intervene, then
one of four auxiliary collocations selects the epistemic reading::

    MV [RB|NEG]* HAVE BEEN VPR  -> MV_HAVE_BEEN_VPR
    MV [RB|NEG]* HAVE BEEN      -> MV_HAVE_BEEN
    MV [RB|NEG]* HAVE VPA       -> MV_HAVE_VPA
    MV [RB|NEG]* BE VPR         -> MV_BE_VPR

A negator in the skip window prefixes the pattern name with ``neg``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Sequence

from .lexica import ModalityEntry, ModalityLexicon, PosLexicon
from .preprocess import Token
from .tags import Tag

log = logging.getLogger(__name__)

EPISTEMIC = "epistemic"
DEONTIC = "deontic"

MAX_SKIPPED_ADVERBS = 2

# Longest first, so HAVE BEEN VPR wins over HAVE BEEN.
COLLOCATIONS: tuple[tuple[str, tuple[Tag, ...]], ...] = (
    ("MV_HAVE_BEEN_VPR", (Tag.HAVE, Tag.BEEN, Tag.VPR)),
    ("MV_HAVE_BEEN", (Tag.HAVE, Tag.BEEN)),
    ("MV_HAVE_VPA", (Tag.HAVE, Tag.VPA)),
    ("MV_BE_VPR", (Tag.BE, Tag.VPR)),
)


class PatternId(str, Enum):
    MV_HAVE_BEEN = "MV_HAVE_BEEN"
    MV_BE_VPR = "MV_BE_VPR"
    MV_HAVE_VPA = "MV_HAVE_VPA"
    MV_HAVE_BEEN_VPR = "MV_HAVE_BEEN_VPR"
    negMV_HAVE_BEEN = "negMV_HAVE_BEEN"
    negMV_BE_VPR = "negMV_BE_VPR"
    negMV_HAVE_VPA = "negMV_HAVE_VPA"
    negMV_HAVE_BEEN_VPR = "negMV_HAVE_BEEN_VPR"
    UNCOND_EPISTEMIC = "UNCOND_EPISTEMIC"
    UNCOND_DEONTIC = "UNCOND_DEONTIC"
    FALLBACK_DEONTIC = "FALLBACK_DEONTIC"
    negUNCOND_EPISTEMIC = "negUNCOND_EPISTEMIC"
    negUNCOND_DEONTIC = "negUNCOND_DEONTIC"
    negFALLBACK_DEONTIC = "negFALLBACK_DEONTIC"
    # negated "can" outside every collocation: no modal reading
    negMV = "negMV"
    LEX_MARKER = "LEX_MARKER"

    @classmethod
    def build(cls, name: str, negated: bool) -> "PatternId":
        return cls("neg" + name if negated else name)


# lemma -> (rule kind, class). "collocation" rules fall back to the class
# given when no collocation matches; None means the verb carries no modality.
MODAL_VERB_RULES: dict[str, tuple[str, str | None]] = {
    "must": ("collocation", DEONTIC),
    "should": ("collocation", DEONTIC),
    "can": ("unconditional", DEONTIC),
    "could": ("unconditional", EPISTEMIC),
    "may": ("unconditional", EPISTEMIC),
    "might": ("unconditional", EPISTEMIC),
    "will": ("unconditional", EPISTEMIC),
    "would": ("unconditional", EPISTEMIC),
    "shall": ("unconditional", DEONTIC),
}
NEGATED_RULES: dict[str, tuple[str, str | None]] = {
    "can": ("collocation", None),
}


@dataclass(frozen=True)
class ModalOccurrence:
    sentence: int
    token_index: int
    lemma: str
    category: str
    negated: bool = False
    pattern: PatternId | None = None
    resolved_class: str | None = None
    flagged: bool = False

    @property
    def is_modal_verb(self) -> bool:
        return self.category == "modal-verb"

    def as_record(self) -> dict:
        return {
            "lemma": self.lemma,
            "pattern": self.pattern.value if self.pattern else None,
            "negated": self.negated,
            "class": self.resolved_class,
        }


_CATEGORY_TAGS = {
    "modal-verb": {Tag.MV},
    "cognitive-verb": {Tag.VB, Tag.VPA, Tag.VPR},
    "adverb": {Tag.RB},
    "adjective": {Tag.ADJ},
    "noun": {Tag.NN, Tag.NNS},
}


def _select_entry(token: Token, entries: Sequence[ModalityEntry], pos: PosLexicon | None) -> ModalityEntry | None:
    for entry in entries:
        if token.tag in _CATEGORY_TAGS[entry.category]:
            return entry
    if pos is not None:
        for entry in entries:
            if entry.category == "cognitive-verb" and pos.has_verbal_reading(token.surface):
                return entry
    return None


def find_modal_occurrences(
    tokens: Sequence[Token],
    lexicon: ModalityLexicon,
    pos: PosLexicon | None = None,
    sentence: int = 0,
) -> list[ModalOccurrence]:
    """One occurrence per token matching a lexicon entry of compatible tag.

    Modal verbs are returned unresolved; everything else is a lexical marker
    carrying its lexicon class.
    """
    found = []
    for i, tok in enumerate(tokens):
        entries = lexicon.candidates(tok.surface)
        if not entries:
            continue
        entry = _select_entry(tok, entries, pos)
        if entry is None:
            continue
        if entry.category == "modal-verb":
            found.append(ModalOccurrence(sentence, i, entry.lemma, entry.category))
        else:
            found.append(ModalOccurrence(sentence, i, entry.lemma, entry.category,
                                         pattern=PatternId.LEX_MARKER, resolved_class=entry.cls))
    return found


def scan_window(tags: Sequence[Tag]) -> tuple[bool, str | None]:
    """Run the collocation automaton on the tags following a modal verb.

    Returns (negated, collocation name or None).
    """
    i = adverbs = 0
    negated = False
    while i < len(tags):
        if tags[i] is Tag.RB and adverbs < MAX_SKIPPED_ADVERBS:
            adverbs += 1
        elif tags[i] is Tag.NEG and not negated:
            negated = True
        else:
            break
        i += 1
    rest = tuple(tags[i:])
    for name, seq in COLLOCATIONS:
        if rest[: len(seq)] == seq:
            return negated, name
    return negated, None


def resolve_modal(lemma: str, tags_after: Sequence[Tag]) -> tuple[PatternId, str | None, bool, bool]:
    """Classify one modal verb from the tags that follow it.

    Returns (pattern, class, negated, flagged); ``flagged`` marks a lemma
    missing from the rule table.
    """
    negated, colloc = scan_window(tags_after)
    rule = MODAL_VERB_RULES.get(lemma)
    flagged = rule is None
    if negated and lemma in NEGATED_RULES:
        rule = NEGATED_RULES[lemma]
    if rule is None:
        rule = ("collocation", DEONTIC)
    kind, cls = rule
    if kind == "unconditional":
        if colloc is not None and cls == EPISTEMIC:
            return PatternId.build(colloc, negated), EPISTEMIC, negated, flagged
        name = "UNCOND_EPISTEMIC" if cls == EPISTEMIC else "UNCOND_DEONTIC"
        return PatternId.build(name, negated), cls, negated, flagged
    if colloc is not None:
        return PatternId.build(colloc, negated), EPISTEMIC, negated, flagged
    if cls is None:
        return PatternId.negMV, None, negated, flagged
    return PatternId.build("FALLBACK_DEONTIC", negated), cls, negated, flagged


def disambiguate_modal(tokens: Sequence[Token], occurrence: ModalOccurrence) -> ModalOccurrence:
    if tokens[occurrence.token_index].tag is not Tag.MV:
        raise ValueError("occurrence does not point at a modal verb")
    tags_after = [t.tag for t in tokens[occurrence.token_index + 1:]]
    pattern, cls, negated, flagged = resolve_modal(occurrence.lemma, tags_after)
    if flagged:
        log.warning("modal verb %r has no disambiguation rule; treated as deontic", occurrence.lemma)
    return replace(occurrence, pattern=pattern, resolved_class=cls, negated=negated, flagged=flagged)


def analyze_sentence(tokens: Sequence[Token], lexicon: ModalityLexicon,
                     pos: PosLexicon | None = None, sentence: int = 0) -> list[ModalOccurrence]:
    """find_modal_occurrences followed by disambiguation of every modal verb."""
    return [disambiguate_modal(tokens, occ) if occ.is_modal_verb else occ
            for occ in find_modal_occurrences(tokens, lexicon, pos, sentence)]


@dataclass(frozen=True)
class SentenceLabel:
    labels: frozenset[str] = field(default_factory=frozenset)

    @property
    def rendered(self) -> str:
        if self.labels == {"EPISTEMIC", "DEONTIC"}:
            return "EPISTEMIC-DEONTIC"
        if self.labels:
            return next(iter(self.labels))
        return "NON-MODAL"

    @property
    def is_epistemic(self) -> bool:
        return "EPISTEMIC" in self.labels

    def sorted_labels(self) -> list[str]:
        return sorted(self.labels, key=["EPISTEMIC", "DEONTIC"].index)


def classify_sentence(occurrences: Iterable[ModalOccurrence]) -> SentenceLabel:
    labels = set()
    for occ in occurrences:
        if occ.is_modal_verb and occ.pattern is None:
            raise ValueError(f"unresolved modal verb {occ.lemma!r}")
        if occ.resolved_class is not None:
            labels.add(occ.resolved_class.upper())
    return SentenceLabel(frozenset(labels))


# --------------------------------------------------------------------------
# rendering


@dataclass(frozen=True)
class AnnotatedDocument:
    text: str
    records: tuple[dict, ...]

    def records_jsonl(self) -> str:
        import json

        return "".join(json.dumps(r, ensure_ascii=False, sort_keys=True) + "\n" for r in self.records)


def _render_sentence(doc, sentence, spans, debug: bool) -> str:
    """Sentence text with ``<Person Name=X>`` wrappers around mention spans.

    ``spans`` maps a first token index to (end token index, canonical name).
    """
    parts = []
    tokens = sentence.tokens
    i = 0
    while i < len(tokens):
        if i in spans:
            end, name = spans[i]
            inner = _render_tokens(doc, tokens[i:end], debug)
            parts.append((tokens[i].start, f"<Person Name={name}>{inner}</Person>", tokens[end - 1].end))
            i = end
        else:
            parts.append((tokens[i].start, _render_tokens(doc, tokens[i:i + 1], debug), tokens[i].end))
            i += 1
    if debug:
        return ", ".join(p[1] for p in parts)
    out = []
    for k, (start, piece, _end) in enumerate(parts):
        if k and parts[k - 1][2] < start:
            out.append(" ")
        out.append(piece)
    return "".join(out)


def _render_tokens(doc, tokens, debug: bool) -> str:
    if debug:
        return ", ".join(f"({t.surface}, {t.tag.rendered})" for t in tokens)
    return doc.normalized_text[tokens[0].start:tokens[-1].end]


def annotate_document(document, persons, links, labels: dict[int, SentenceLabel],
                      occurrences: dict[int, list[ModalOccurrence]],
                      holders: dict[int, str] | None = None, debug: bool = False) -> AnnotatedDocument:
    """Render inline modality/person tags plus one structured record per sentence."""
    by_id = {p.id: p for p in persons}
    spans: dict[int, dict[int, tuple[int, str]]] = {}
    for p in persons:
        for m in p.mentions:
            spans.setdefault(m.sentence, {})[m.start] = (m.end, p.canonical_name)
    for link in links:
        spans.setdefault(link.sentence, {})[link.token_index] = (
            link.token_index + 1, by_id[link.antecedent].canonical_name)

    lines, records = [], []
    for s in document.sentences:
        label = labels[s.index]
        body = _render_sentence(document, s, spans.get(s.index, {}), debug)
        tag = label.rendered
        lines.append(body if tag == "NON-MODAL" else f"<{tag}> {body} </{tag}>")
        record = {
            "sentence": s.index,
            "text": document.sentence_text(s.index),
            "labels": label.sorted_labels(),
            "occurrences": [o.as_record() for o in occurrences.get(s.index, [])],
        }
        if holders and s.index in holders:
            record["holder"] = holders[s.index]
        records.append(record)
    return AnnotatedDocument("\n".join(lines) + ("\n" if lines else ""), tuple(records))
