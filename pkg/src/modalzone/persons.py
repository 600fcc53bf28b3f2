"""Person-name detection and he/she/who pronoun linking."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Sequence

from .lexica import NameLexicon
from .preprocess import Document, Sentence, Token
from .tags import Tag

MAX_RUN = 4
_OPEN_CLASS = frozenset({Tag.NN, Tag.NNS, Tag.NP, Tag.VB, Tag.VPA, Tag.VPR, Tag.ADJ, Tag.OTHER})

_ABBREV = re.compile(r"^(?:[A-Z]\.)+$")
_REF_HEADING = re.compile(r"^\s*(?:#+\s*|\\section\*?\{)?(references|bibliography)\}?\s*:?\s*$", re.I | re.M)
_REF_NAME = re.compile(
    r"(?<![\w'’-])([A-Z][A-Za-z'’-]*[a-z][A-Za-z'’-]*)"
    r"(?=,?\s+(?:(?:[A-Z]\.\s*)+|\(?\d{4}))"
)


class NamePattern(str, Enum):
    FN_LN = "FN_LN"
    ABB_LN = "ABB_LN"
    FN_ABB_LN = "FN_ABB_LN"
    FN = "FN"
    LN = "LN"
    ABB_ABB_LN = "ABB_ABB_LN"


@dataclass(frozen=True)
class Mention:
    sentence: int
    start: int  # token index, inclusive
    end: int  # token index, exclusive


@dataclass
class PersonEntity:
    id: int
    canonical_name: str
    pattern: NamePattern
    source: str  # reference-list | name-lexicon | manual
    mentions: list[Mention] = field(default_factory=list)
    gender: str | None = None


@dataclass(frozen=True)
class PronounLink:
    sentence: int
    token_index: int
    pronoun: str
    antecedent: int
    antecedent_mention: Mention


@dataclass(frozen=True)
class ManualCandidate:
    """A candidate the automaton could not settle, queued for a human."""

    candidate: str
    sentence: int
    start: int
    end: int


# decide(candidate) -> {"decision": "accept"|"reject", "canonicalName": ...} or None
Decider = Callable[[ManualCandidate], "dict | None"]


def extract_reference_names(text: str | Document) -> set[str]:
    """Harvest surnames from a trailing References/Bibliography section."""
    if isinstance(text, Document):
        text = text.normalized_text
    headings = list(_REF_HEADING.finditer(text))
    if not headings:
        return set()
    section = text[headings[-1].end():]
    names = set()
    for line in section.splitlines():
        names.update(_REF_NAME.findall(line))
    return names


def _is_capitalized(tok: Token) -> bool:
    s = tok.surface
    if not s[:1].isupper() or not any(c.isalpha() for c in s):
        return False
    # acronyms and placeholders (DNA, FIG, MATH) and the pronoun "I"
    return not (s.isupper() and (len(s) > 1 or s == "I")) or bool(_ABBREV.match(s))


def detect_name_candidates(tokens: Sequence[Token], names: NameLexicon | None = None) -> list[tuple[int, int]]:
    """Token ranges of capitalised runs that may be person names.

    The sentence-initial word only qualifies when tagged NP or when it is a
    known first name (sentence-initial "Peter" looks up as the verb).
    """
    first_word = next((i for i, t in enumerate(tokens) if t.tag is not Tag.PUNCT), None)
    runs: list[tuple[int, int]] = []
    start = None
    for i, tok in enumerate([*tokens, None]):
        ok = False
        if tok is not None:
            if _ABBREV.match(tok.surface):
                ok = True
            elif _is_capitalized(tok):
                ok = (i != first_word or tok.tag is Tag.NP
                      or (names is not None and tok.tag in _OPEN_CLASS and names.contains(tok.surface)))
        if ok and start is None:
            start = i
        elif not ok and start is not None:
            if i - start <= MAX_RUN:
                runs.append((start, i))
            start = None
    return runs


def token_shape(word: str, names: NameLexicon, reference_names: Iterable[str] = ()) -> str:
    if _ABBREV.match(word):
        return "ABB"
    if word in reference_names:
        return "LN"
    if names.contains(word):
        return "FN"
    return "LN"


# state -> {symbol: next state}; accepting states map to a pattern
_TRANSITIONS = {
    "start": {"FN": "fn", "ABB": "abb", "LN": "ln"},
    "fn": {"LN": "fn_ln", "ABB": "fn_abb"},
    "fn_abb": {"LN": "fn_abb_ln"},
    "abb": {"LN": "abb_ln", "ABB": "abb_abb"},
    "abb_abb": {"LN": "abb_abb_ln"},
}
_ACCEPTING = {
    "fn": NamePattern.FN,
    "ln": NamePattern.LN,
    "fn_ln": NamePattern.FN_LN,
    "abb_ln": NamePattern.ABB_LN,
    "fn_abb_ln": NamePattern.FN_ABB_LN,
    "abb_abb_ln": NamePattern.ABB_ABB_LN,
}


def run_name_automaton(run: Sequence[str], names: NameLexicon,
                       reference_names: Iterable[str] = ()) -> NamePattern | None:
    """Classify a candidate run; None means reject.

    A lone last name is accepted only when it is a known reference name.
    """
    reference_names = set(reference_names)
    if not run:
        return None
    state = "start"
    for word in run:
        state = _TRANSITIONS.get(state, {}).get(token_shape(word, names, reference_names))
        if state is None:
            return None
    pattern = _ACCEPTING.get(state)
    if pattern is NamePattern.LN and run[0] not in reference_names:
        return None
    return pattern


def _canonical(run: Sequence[str], pattern: NamePattern) -> str:
    if pattern is NamePattern.FN:
        return " ".join(run)
    return run[-1]


class _Registry:
    def __init__(self, names: NameLexicon):
        self.names = names
        self.entities: dict[str, PersonEntity] = {}

    def add(self, canonical: str, pattern: NamePattern, source: str, mention: Mention, first: str | None) -> None:
        entity = self.entities.get(canonical)
        if entity is None:
            entity = PersonEntity(len(self.entities), canonical, pattern, source)
            self.entities[canonical] = entity
        entity.mentions.append(mention)
        if entity.gender is None and first is not None:
            entity.gender = self.names.gender(first)


def mark_persons(
    document: Document,
    names: NameLexicon,
    reference_names: Iterable[str] = (),
    decide: Decider | None = None,
) -> tuple[list[PersonEntity], list[ManualCandidate]]:
    """Detect persons in a tagged document.

    Returns the entities (ordered by first mention) and the candidates that
    were queued for manual decision. ``decide`` answers queued candidates;
    without it they stay rejected.
    """
    references = set(reference_names)
    runs = [(s.index, a, b, [t.surface for t in s.tokens[a:b]])
            for s in document.sentences for a, b in detect_name_candidates(s.tokens, names)]

    # Names accepted anywhere count as known surnames for later bare mentions.
    known = set(references)
    for _, _, _, words in runs:
        pattern = run_name_automaton(words, names, references)
        if pattern is not None and pattern is not NamePattern.FN:
            known.add(_canonical(words, pattern))

    registry = _Registry(names)
    queue: list[ManualCandidate] = []
    for sent, a, b, words in runs:
        pattern = run_name_automaton(words, names, known)
        if pattern is not None:
            canonical = _canonical(words, pattern)
            source = "reference-list" if canonical in references else "name-lexicon"
            first = words[0] if token_shape(words[0], names, known) == "FN" else None
            registry.add(canonical, pattern, source, Mention(sent, a, b), first)
            continue
        hits = [i for i, w in enumerate(words) if w in references]
        if hits:
            i = hits[-1]
            registry.add(words[i], NamePattern.LN, "reference-list", Mention(sent, a + i, a + i + 1), None)
            continue
        if any(token_shape(w, names, known) == "FN" for w in words):
            cand = ManualCandidate(" ".join(words), sent, a, b)
            queue.append(cand)
            answer = decide(cand) if decide is not None else None
            if answer and answer.get("decision") == "accept":
                canonical = answer.get("canonicalName") or words[-1]
                pattern = run_name_automaton(words, names, known | {canonical})
                if pattern is None:
                    pattern = run_name_automaton([canonical], names, {canonical}) or NamePattern.LN
                first = next((w for w in words if token_shape(w, names, {canonical}) == "FN"), None)
                registry.add(canonical, pattern, "manual", Mention(sent, a, b), first)
    return sorted(registry.entities.values(), key=lambda e: e.id), queue


_PRONOUN_GENDER = {"he": "male", "she": "female"}


def _mention_index(persons: Sequence[PersonEntity]) -> dict[int, list[tuple[Mention, PersonEntity]]]:
    by_sentence: dict[int, list[tuple[Mention, PersonEntity]]] = {}
    for person in persons:
        for m in person.mentions:
            by_sentence.setdefault(m.sentence, []).append((m, person))
    for items in by_sentence.values():
        items.sort(key=lambda mp: (mp[0].start, mp[0].end))
    return by_sentence


def link_pronouns(document: Document, persons: Sequence[PersonEntity]) -> list[PronounLink]:
    """Link ``who`` within its sentence and he/she within a two-sentence window."""
    by_sentence = _mention_index(persons)
    links = []
    for sent in document.sentences:
        for i, tok in enumerate(sent.tokens):
            low = tok.lemma
            if tok.tag is Tag.WPS and low == "who":
                scope = [mp for mp in by_sentence.get(sent.index, []) if mp[0].end <= i]
            elif tok.tag is Tag.PPS and low in _PRONOUN_GENDER:
                scope = by_sentence.get(sent.index - 1, []) + [
                    mp for mp in by_sentence.get(sent.index, []) if mp[0].end <= i
                ]
            else:
                continue
            if not scope:
                continue
            nearest_first = scope[::-1]
            choice = nearest_first[0]
            wanted = _PRONOUN_GENDER.get(low)
            if wanted is not None:
                matching = [mp for mp in nearest_first if mp[1].gender == wanted]
                unknown = [mp for mp in nearest_first if mp[1].gender is None]
                choice = (matching or unknown or nearest_first)[0]
            mention, person = choice
            links.append(PronounLink(sent.index, i, tok.surface, person.id, mention))
    return links


def mention_owner(persons: Sequence[PersonEntity]) -> dict[tuple[int, int], PersonEntity]:
    """(sentence, token index) -> entity, for every token inside a mention."""
    owner = {}
    for p in persons:
        for m in p.mentions:
            for i in range(m.start, m.end):
                owner[(m.sentence, i)] = p
    return owner


def sentence_mentions(sentence: Sentence, persons: Sequence[PersonEntity]) -> list[tuple[Mention, PersonEntity]]:
    return _mention_index(persons).get(sentence.index, [])
