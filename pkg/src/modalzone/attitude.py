"""Attitude records for epistemic sentences and the Pro/Contra/Neutral graph.

The modal part (M / notM) is proposed automatically from negations and
downtoners; the propositional part (H / notH) always comes from a human
decision, either typed interactively or replayed from a transcript.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .modality import EPISTEMIC, ModalOccurrence
from .persons import PersonEntity, PronounLink, sentence_mentions
from .preprocess import Sentence
from .tags import Tag
from .transcripts import TranscriptError, read_jsonl, rows_for_doc

AUTHOR = "AUTHOR"
M, NOT_M = "M", "notM"
H, NOT_H, UNDECIDED = "H", "notH", "UNDECIDED"
PRO, CONTRA, NEUTRAL = "Pro", "Contra", "Neutral"

DEFAULT_DOWNTONERS = frozenset({"less", "hardly", "scarcely", "rarely", "never", "none", "not"})
DOWNTONER_WINDOW = 2


@dataclass(frozen=True)
class AttitudeRecord:
    sentence: int
    holder: int | str
    modal: str
    proposition: str = UNDECIDED

    @property
    def group(self) -> str:
        return assign_group(self.modal, self.proposition)

    def as_record(self) -> dict:
        return {"sentence": self.sentence, "holder": self.holder, "modal": self.modal,
                "proposition": self.proposition, "group": self.group}


def assign_group(modal: str, proposition: str) -> str:
    if proposition == UNDECIDED:
        return NEUTRAL
    table = {(M, H): PRO, (NOT_M, NOT_H): PRO, (M, NOT_H): CONTRA, (NOT_M, H): CONTRA}
    try:
        return table[(modal, proposition)]
    except KeyError:
        raise ValueError(f"bad polarity pair ({modal!r}, {proposition!r})") from None


def propose_modal_polarity(tokens: Sequence, occurrences: Iterable[ModalOccurrence],
                           downtoners: Iterable[str] = DEFAULT_DOWNTONERS) -> str:
    """notM if an epistemic trigger is negated or has a downtoner next to it.

    "Next to" means within two words on either side; punctuation does not count.
    """
    downtoners = {d.casefold() for d in downtoners}
    words = [i for i, t in enumerate(tokens) if t.tag is not Tag.PUNCT]
    position = {tok_index: w for w, tok_index in enumerate(words)}
    for occ in occurrences:
        if occ.resolved_class != EPISTEMIC:
            continue
        if occ.negated:
            return NOT_M
        here = position.get(occ.token_index)
        if here is None:
            continue
        lo, hi = max(0, here - DOWNTONER_WINDOW), min(len(words), here + DOWNTONER_WINDOW + 1)
        if any(tokens[words[w]].lemma in downtoners for w in range(lo, hi) if w != here):
            return NOT_M
    return M


def resolve_holder(sentence: Sentence, occurrences: Sequence[ModalOccurrence],
                   persons: Sequence[PersonEntity], links: Sequence[PronounLink]) -> int | str:
    """Person nearest to the first epistemic trigger, or AUTHOR."""
    anchors = [o.token_index for o in occurrences if o.resolved_class == EPISTEMIC]
    anchor = anchors[0] if anchors else 0
    spots = [(m.start, m.end, p.id) for m, p in sentence_mentions(sentence, persons)]
    spots += [(l.token_index, l.token_index + 1, l.antecedent) for l in links if l.sentence == sentence.index]
    if not spots:
        return AUTHOR

    def distance(spot):
        start, end, _ = spot
        gap = 0 if start <= anchor < end else min(abs(anchor - start), abs(anchor - (end - 1)))
        return (gap, start)

    return min(spots, key=distance)[2]


def propose_records(sentences: Sequence[Sentence], occurrences: dict[int, list[ModalOccurrence]],
                    labels: dict[int, "object"], persons: Sequence[PersonEntity],
                    links: Sequence[PronounLink],
                    downtoners: Iterable[str] = DEFAULT_DOWNTONERS) -> list[AttitudeRecord]:
    """Attitude proposals for every sentence labelled EPISTEMIC."""
    records = []
    for s in sentences:
        if not labels[s.index].is_epistemic:
            continue
        occ = occurrences.get(s.index, [])
        records.append(AttitudeRecord(
            sentence=s.index,
            holder=resolve_holder(s, occ, persons, links),
            modal=propose_modal_polarity(s.tokens, occ, downtoners),
        ))
    return records


def load_attitude_decisions(path: str | Path, doc: str | None = None) -> dict[int, dict]:
    decisions = {}
    for lineno, row in rows_for_doc(read_jsonl(path), doc):
        sent, prop, modal = row.get("sentence"), row.get("proposition"), row.get("modal", None)
        if (not isinstance(sent, int) or isinstance(sent, bool) or prop not in (H, NOT_H)
                or modal not in (None, M, NOT_M)):
            raise TranscriptError(f"{path}: row {lineno}: malformed attitude decision {row!r}")
        decisions[sent] = row
    return decisions


Asker = Callable[[AttitudeRecord], "dict | None"]


def collect_proposition_polarity(records: Sequence[AttitudeRecord], decisions: dict[int, dict] | None = None,
                                 ask: Asker | None = None) -> tuple[list[AttitudeRecord], list[dict]]:
    """Fill in H/notH (and optional M overrides) in sentence order.

    Returns the updated records and the decisions actually used, which is
    the transcript an interactive run should persist.
    """
    decisions = dict(decisions or {})
    known = {r.sentence for r in records}
    unknown = sorted(set(decisions) - known)
    if unknown:
        raise TranscriptError(f"decisions for sentences without an epistemic record: {unknown}")
    out, used = [], []
    for rec in sorted(records, key=lambda r: r.sentence):
        row = decisions.get(rec.sentence)
        if row is None and ask is not None:
            row = ask(rec)
        if row is None:
            out.append(rec)
            continue
        used.append(row)
        out.append(replace(rec, proposition=row["proposition"], modal=row.get("modal") or rec.modal))
    return out, used


@dataclass
class AttitudeGraph:
    pro: set = field(default_factory=set)
    contra: set = field(default_factory=set)
    neutral: set = field(default_factory=set)

    def group_of(self, holder) -> str | None:
        for name, members in ((PRO, self.pro), (CONTRA, self.contra), (NEUTRAL, self.neutral)):
            if holder in members:
                return name
        return None


def build_attitude_graph(records: Iterable[AttitudeRecord]) -> AttitudeGraph:
    """Place each holder in the group most of its records fall into.

    Ties go to Neutral. The author always ends up in exactly one group.
    """
    tallies: dict = {}
    for rec in records:
        tallies.setdefault(rec.holder, Counter())[rec.group] += 1
    tallies.setdefault(AUTHOR, Counter())
    graph = AttitudeGraph()
    for holder, counts in tallies.items():
        ranked = counts.most_common()
        if not ranked or (len(ranked) > 1 and ranked[0][1] == ranked[1][1]):
            group = NEUTRAL
        else:
            group = ranked[0][0]
        {PRO: graph.pro, CONTRA: graph.contra, NEUTRAL: graph.neutral}[group].add(holder)
    return graph
