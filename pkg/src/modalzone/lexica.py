"""Lexical resources: POS lexicon, first-name lists and the modality lexicon.

All three are plain UTF-8 text files. Lines starting with ``#`` and blank
lines are ignored. Loaded objects are immutable and safe to share.
"""

from __future__ import annotations

import logging
from collections import defaultdict, deque
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable, Iterator, Mapping

from .tags import TAG_ORDER, VERBAL_TAGS, Tag, map_tag

log = logging.getLogger(__name__)

MODALITY_CATEGORIES = ("modal-verb", "cognitive-verb", "adverb", "adjective", "noun")
MODALITY_CLASSES = ("epistemic", "deontic", "contextual")
MAX_EXPANSION_DEPTH = 3


class LexiconError(ValueError):
    """Raised when a lexicon file cannot be read or fails validation."""


def default_lexicon_dir() -> Path:
    return Path(str(resources.files("modalzone") / "data"))


def _data_lines(path: Path) -> Iterator[tuple[int, str]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise LexiconError(f"cannot read {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield lineno, line


# --------------------------------------------------------------------------
# POS lexicon


@dataclass(frozen=True)
class PosLexicon:
    """word form -> tags ordered by descending count.

    Keys are case-folded, except proper-noun-only rows (tag NP), which keep
    their original casing so they do not shadow common lowercase words.
    """

    entries: Mapping[str, tuple[tuple[Tag, int], ...]]

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, word: str) -> tuple[tuple[Tag, int], ...] | None:
        return self.entries.get(word)

    def lookup(self, word: str) -> tuple[tuple[Tag, int], ...]:
        return self.entries.get(word.casefold(), ())

    def has_verbal_reading(self, word: str) -> bool:
        readings = self.entries.get(word.casefold()) or self.entries.get(word) or ()
        return any(tag in VERBAL_TAGS for tag, _ in readings)

    def dumps(self) -> str:
        rows = []
        for word in sorted(self.entries):
            for tag, count in self.entries[word]:
                rows.append(f"{word}\t{tag.value}\t{count}\n")
        return "".join(rows)

    @classmethod
    def from_counts(cls, counts: Mapping[str, Mapping[Tag, int]]) -> "PosLexicon":
        entries = {}
        for word, by_tag in counts.items():
            ordered = sorted(by_tag.items(), key=lambda tc: (-tc[1], TAG_ORDER[tc[0]]))
            entries[word] = tuple(ordered)
        return cls(entries)


def _lexicon_key(word: str, tag: Tag) -> str:
    return word if tag is Tag.NP and word[:1].isupper() else word.casefold()


def load_pos_lexicon(path: str | Path) -> PosLexicon:
    """Read ``word<TAB>TAG<TAB>count`` rows.

    Brown tags are reduced through :func:`modalzone.tags.map_tag`; rows that
    collapse onto the same reduced tag have their counts summed.
    """
    counts: dict[str, dict[Tag, int]] = defaultdict(dict)
    for lineno, line in _data_lines(Path(path)):
        parts = line.split("\t")
        if len(parts) != 3 or not parts[0] or not parts[1]:
            raise LexiconError(f"{path}:{lineno}: expected word<TAB>TAG<TAB>count")
        word, raw_tag, raw_count = parts
        try:
            count = int(raw_count)
        except ValueError:
            raise LexiconError(f"{path}:{lineno}: count {raw_count!r} is not an integer") from None
        if count < 0:
            raise LexiconError(f"{path}:{lineno}: negative count")
        tag = map_tag(raw_tag)
        key = _lexicon_key(word, tag)
        counts[key][tag] = counts[key].get(tag, 0) + count
    if not counts:
        raise LexiconError("empty lexicon")
    return PosLexicon.from_counts(counts)


def count_brown_tokens(lines: Iterable[str]) -> dict[str, dict[Tag, int]]:
    """Tally ``word/tag`` tokens in Brown-corpus format.

    Feed the result to :meth:`PosLexicon.from_counts` or write it out with
    :func:`write_pos_counts` to regenerate the bundled lexicon from the corpus.
    """
    counts: dict[str, dict[Tag, int]] = defaultdict(dict)
    for line in lines:
        for item in line.split():
            word, sep, raw_tag = item.rpartition("/")
            if not sep or not word or not raw_tag:
                continue
            tag = map_tag(raw_tag)
            key = _lexicon_key(word, tag)
            counts[key][tag] = counts[key].get(tag, 0) + 1
    return counts


def write_pos_counts(counts: Mapping[str, Mapping[Tag, int]], path: str | Path, header: str = "") -> None:
    text = PosLexicon.from_counts(counts).dumps()
    if header:
        text = "".join(f"# {h}\n" for h in header.splitlines()) + text
    Path(path).write_text(text, encoding="utf-8", newline="\n")


# --------------------------------------------------------------------------
# Names


@dataclass(frozen=True)
class NameLexicon:
    female: frozenset[str]
    male: frozenset[str]

    def contains(self, name: str) -> bool:
        key = name.casefold()
        return bool(key) and (key in self.female or key in self.male)

    def gender(self, name: str) -> str | None:
        """'female', 'male', or None when unknown or ambiguous."""
        key = name.casefold()
        f, m = key in self.female, key in self.male
        if f and not m:
            return "female"
        if m and not f:
            return "male"
        return None

    def dumps(self) -> str:
        return "".join(f"F\t{n}\n" for n in sorted(self.female)) + "".join(
            f"M\t{n}\n" for n in sorted(self.male)
        )


def _read_names(path: Path) -> frozenset[str]:
    return frozenset(line.strip().casefold() for _, line in _data_lines(path) if line.strip())


def load_names(female_path: str | Path, male_path: str | Path) -> NameLexicon:
    return NameLexicon(_read_names(Path(female_path)), _read_names(Path(male_path)))


# --------------------------------------------------------------------------
# Modality lexicon

_IRREGULAR_VERBS = {
    "think": ("thinks", "thought", "thinking"),
    "show": ("shows", "showed", "shown", "showing"),
    "prove": ("proves", "proved", "proven", "proving"),
    "know": ("knows", "knew", "known", "knowing"),
    "feel": ("feels", "felt", "feeling"),
}


def verb_forms(lemma: str) -> set[str]:
    if lemma in _IRREGULAR_VERBS:
        return {lemma, *_IRREGULAR_VERBS[lemma]}
    if lemma.endswith("e"):
        return {lemma, lemma + "s", lemma + "d", lemma[:-1] + "ing"}
    if lemma.endswith("y") and len(lemma) > 1 and lemma[-2] not in "aeiou":
        return {lemma, lemma[:-1] + "ies", lemma[:-1] + "ied", lemma + "ing"}
    third = lemma + "es" if lemma.endswith(("s", "sh", "ch", "x", "z")) else lemma + "s"
    return {lemma, third, lemma + "ed", lemma + "ing"}


def noun_forms(lemma: str) -> set[str]:
    if lemma.endswith("sis"):
        return {lemma, lemma[:-2] + "es"}
    if lemma.endswith("y") and len(lemma) > 1 and lemma[-2] not in "aeiou":
        return {lemma, lemma[:-1] + "ies"}
    if lemma.endswith(("s", "sh", "ch", "x", "z")):
        return {lemma, lemma + "es"}
    return {lemma, lemma + "s"}


@dataclass(frozen=True)
class ModalityEntry:
    lemma: str
    category: str
    cls: str

    def forms(self) -> set[str]:
        if self.category == "cognitive-verb":
            return verb_forms(self.lemma)
        if self.category == "noun":
            return noun_forms(self.lemma)
        return {self.lemma}


@dataclass(frozen=True)
class ModalityLexicon:
    entries: tuple[ModalityEntry, ...]
    _index: Mapping[str, tuple[ModalityEntry, ...]] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        index: dict[str, list[ModalityEntry]] = defaultdict(list)
        for entry in self.entries:
            for form in sorted(entry.forms()):
                index[form].append(entry)
        object.__setattr__(self, "_index", {k: tuple(v) for k, v in index.items()})

    def candidates(self, word: str) -> tuple[ModalityEntry, ...]:
        """Entries whose lemma or an inflected form equals ``word``."""
        return self._index.get(word.casefold(), ())

    def lemmas(self, category: str | None = None) -> list[str]:
        return [e.lemma for e in self.entries if category is None or e.category == category]

    def dumps(self) -> str:
        return "".join(f"{e.lemma}\t{e.category}\t{e.cls}\n" for e in self.entries)


def load_modality_lexicon(path: str | Path) -> ModalityLexicon:
    from .modality import MODAL_VERB_RULES

    entries: list[ModalityEntry] = []
    seen: dict[tuple[str, str], int] = {}
    for lineno, line in _data_lines(Path(path)):
        parts = line.split("\t")
        if len(parts) != 3:
            raise LexiconError(f"{path}:{lineno}: expected lemma<TAB>category<TAB>class")
        lemma, category, cls = (p.strip() for p in parts)
        lemma = lemma.casefold()
        if not lemma:
            raise LexiconError(f"{path}:{lineno}: empty lemma")
        if category not in MODALITY_CATEGORIES:
            raise LexiconError(f"{path}:{lineno}: unknown category {category!r}")
        if cls not in MODALITY_CLASSES:
            raise LexiconError(f"{path}:{lineno}: unknown class {cls!r}")
        if category == "modal-verb" and cls != "contextual":
            rule = MODAL_VERB_RULES.get(lemma)
            if rule is None or rule[0] != "unconditional" or rule[1] != cls:
                raise LexiconError(
                    f"{path}:{lineno}: modal verb {lemma!r} must be contextual "
                    f"unless it is unconditionally {cls}"
                )
        if category != "modal-verb" and cls == "contextual":
            raise LexiconError(f"{path}:{lineno}: only modal verbs may be contextual")
        key = (lemma, category)
        if key in seen:
            raise LexiconError(f"{path}:{lineno}: duplicate entry {lemma!r}/{category} (first at line {seen[key]})")
        seen[key] = lineno
        entries.append(ModalityEntry(lemma, category, cls))
    if not entries:
        raise LexiconError("empty lexicon")
    return ModalityLexicon(tuple(entries))


def expand_modality_seeds(
    seeds: Iterable[str],
    synonyms: Callable[[str], Iterable[str]],
    depth: int,
) -> list[str]:
    """Close ``seeds`` under ``synonyms`` for at most ``depth`` steps.

    Intended as an offline helper for growing the modality lexicon from a
    thesaurus. A synonym function that raises is treated as returning nothing.
    """
    if depth < 0 or depth > MAX_EXPANSION_DEPTH:
        raise ValueError(f"depth must be in [0, {MAX_EXPANSION_DEPTH}]")
    found = {s.casefold() for s in seeds if s}
    frontier = deque((s, 0) for s in sorted(found))
    while frontier:
        word, level = frontier.popleft()
        if level >= depth:
            continue
        try:
            neighbours = list(synonyms(word))
        except Exception:  # noqa: BLE001 - caller-supplied thesaurus
            log.debug("synonym lookup failed for %r", word, exc_info=True)
            neighbours = []
        for other in sorted({n.casefold() for n in neighbours if n}):
            if other not in found:
                found.add(other)
                frontier.append((other, level + 1))
    return sorted(found)


# --------------------------------------------------------------------------
# Bundle


def read_word_list(path: str | Path) -> tuple[str, ...]:
    return tuple(line.strip() for _, line in _data_lines(Path(path)))


@dataclass(frozen=True)
class Lexica:
    pos: PosLexicon
    names: NameLexicon
    modality: ModalityLexicon
    abbreviations: tuple[str, ...]
    suffix_rules: tuple[tuple[str, Tag], ...]
    downtoners: frozenset[str]


def load_suffix_rules(path: str | Path) -> tuple[tuple[str, Tag], ...]:
    """``pattern<TAB>TAG`` rows; see :func:`modalzone.postag.morph_guess`."""
    rules = []
    for lineno, line in _data_lines(Path(path)):
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconError(f"{path}:{lineno}: expected pattern<TAB>TAG")
        try:
            tag = Tag[parts[1].strip()]
        except KeyError:
            raise LexiconError(f"{path}:{lineno}: unknown tag {parts[1]!r}") from None
        rules.append((parts[0].strip(), tag))
    return tuple(rules)


def load_lexica(directory: str | Path | None = None) -> Lexica:
    """Load every resource from a lexicon directory (default: bundled data)."""
    root = Path(directory) if directory is not None else default_lexicon_dir()
    if not root.is_dir():
        raise LexiconError(f"lexicon directory not found: {root}")
    return Lexica(
        pos=load_pos_lexicon(root / "pos_lexicon.tsv"),
        names=load_names(root / "names" / "female.txt", root / "names" / "male.txt"),
        modality=load_modality_lexicon(root / "modality.tsv"),
        abbreviations=read_word_list(root / "abbreviations.txt"),
        suffix_rules=load_suffix_rules(root / "suffix_rules.tsv"),
        downtoners=frozenset(w.casefold() for w in read_word_list(root / "downtoners.txt")),
    )
