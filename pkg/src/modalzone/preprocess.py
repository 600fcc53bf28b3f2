"""Text normalisation, sentence splitting and tokenisation.

Spans are half-open character offsets into ``Document.normalized_text``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .tags import Tag

DEFAULT_ABBREVIATIONS = ("Dr.", "Prof.", "Fig.", "et al.", "e.g.", "i.e.", "vs.")

_DISPLAY_MATH = re.compile(
    r"\$\$.+?\$\$|\\\[.+?\\\]"
    r"|\\begin\{(equation|align|eqnarray|gather|multline)(\*?)\}.*?\\end\{\1\2\}",
    re.S,
)
_INLINE_MATH = re.compile(r"\$[^$\n]+\$|\\\(.+?\\\)")
_FIGURE = re.compile(
    r"\\begin\{(figure|table)(\*?)\}.*?\\end\{\1\2\}|\\includegraphics(\[[^\]]*\])?\{[^}]*\}",
    re.S,
)
_MIN_SYMBOL_LINE = 4


def _is_symbol_line(line: str) -> bool:
    chars = [c for c in line if not c.isspace()]
    if len(chars) < _MIN_SYMBOL_LINE:
        return False
    non_alpha = sum(1 for c in chars if not c.isalpha())
    return non_alpha * 2 > len(chars)


def substitute_placeholders(raw: str) -> str:
    """Replace figures with ``FIG`` and formulas with ``MATH``.

    Formulas are TeX display/inline math and lines that are more than half
    non-alphabetic; consecutive such lines collapse into one placeholder.
    """
    text = _FIGURE.sub("FIG", raw)
    text = _DISPLAY_MATH.sub("MATH", text)
    text = _INLINE_MATH.sub("MATH", text)

    out: list[str] = []
    in_run = False
    for line in text.splitlines(keepends=True):
        body = line.rstrip("\r\n")
        if _is_symbol_line(body):
            if not in_run:
                indent = body[: len(body) - len(body.lstrip())]
                out.append(indent + "MATH" + line[len(body):])
            elif out and not out[-1].endswith(("\n", "\r")):
                out[-1] += line[len(body):]
            in_run = True
        else:
            out.append(line)
            in_run = False
    return "".join(out)


@dataclass(frozen=True)
class Token:
    surface: str
    start: int
    end: int
    tag: Tag = Tag.NONE

    @property
    def span(self) -> tuple[int, int]:
        return (self.start, self.end)

    @property
    def lemma(self) -> str:
        return self.surface.casefold()


@dataclass(frozen=True)
class Sentence:
    index: int
    tokens: tuple[Token, ...]

    @property
    def start(self) -> int:
        return self.tokens[0].start

    @property
    def end(self) -> int:
        return self.tokens[-1].end

    @property
    def text(self) -> str:
        return " ".join(t.surface for t in self.tokens)


@dataclass(frozen=True)
class Document:
    source_text: str
    normalized_text: str
    sentences: tuple[Sentence, ...] = field(default_factory=tuple)

    def sentence_text(self, index: int) -> str:
        s = self.sentences[index]
        return self.normalized_text[s.start:s.end]


# --------------------------------------------------------------------------
# sentence splitting

_QUOTES = "\"'“”‘’«»"
_OPENERS = _QUOTES + "([{"
_CLOSERS = _QUOTES + ")]}"
_TERMINALS = ".!?"
_INITIAL = re.compile(r"^[A-Z]\.$")


class _AbbrevMatcher:
    def __init__(self, abbreviations: Iterable[str]):
        self.single = {a for a in abbreviations if " " not in a}
        self.multi = [tuple(a.split()) for a in abbreviations if " " in a]

    def keeps_period(self, word: str, previous: Sequence[str] = ()) -> bool:
        """True if ``word`` (ending in '.') is an abbreviation or an initial."""
        if word in self.single or _INITIAL.match(word):
            return True
        for parts in self.multi:
            if word == parts[-1] and tuple(previous[-(len(parts) - 1):]) == parts[:-1]:
                return True
        return False


def split_sentences(normalized: str, abbreviations: Iterable[str] = DEFAULT_ABBREVIATIONS) -> list[tuple[int, int]]:
    """Return (start, end) spans of sentences, covering all non-whitespace.

    A sentence ends at ``.``, ``!`` or ``?`` (plus trailing closing quotes
    and brackets) when followed by whitespace, optional opening quotes or
    brackets, and an uppercase letter. Periods of abbreviations and single
    capital initials do not end a sentence.
    """
    matcher = _AbbrevMatcher(abbreviations)
    spans: list[tuple[int, int]] = []
    n = len(normalized)
    start = None
    i = 0
    while i < n:
        ch = normalized[i]
        if start is None:
            if ch.isspace():
                i += 1
                continue
            start = i
        if ch in _TERMINALS:
            j = i + 1
            while j < n and normalized[j] in _TERMINALS:
                j += 1
            while j < n and normalized[j] in _CLOSERS:
                j += 1
            k = j
            while k < n and normalized[k].isspace():
                k += 1
            m = k
            while m < n and normalized[m] in _OPENERS:
                m += 1
            boundary = k > j and m < n and normalized[m].isupper()
            if boundary and ch == "." and j == i + 1:
                words = normalized[start:i + 1].split()
                if words and matcher.keeps_period(words[-1].lstrip(_OPENERS), words[:-1]):
                    boundary = False
            if boundary:
                spans.append((start, j))
                start = None
                i = k
                continue
            i = j
            continue
        i += 1
    if start is not None:
        end = n
        while end > start and normalized[end - 1].isspace():
            end -= 1
        spans.append((start, end))
    return spans


# --------------------------------------------------------------------------
# tokenisation

_LEADING = set(_OPENERS) | {"-", "*", "`"}
_TRAILING = set(_CLOSERS) | set(".,;:!?") | {"*", "`"}
_APOSTROPHES = "'’‘`"
_NEG_CONTRACTION = re.compile(r"^(?P<stem>[A-Za-z]+)(?P<neg>n[" + _APOSTROPHES + r"]t)$", re.I)
_SHORT_NEG = re.compile(r"^(?P<stem>can|Can|CAN)(?P<neg>[" + _APOSTROPHES + r"]t)$")
_IRREGULAR_STEMS = {"wo": "will", "sha": "shall", "ca": "can"}


def _split_contraction(word: str, start: int) -> list[Token]:
    low = word.casefold()
    if low == "cannot":
        return [Token(word[:3], start, start + 3), Token("not", start + 3, start + 6)]
    m = _SHORT_NEG.match(word)
    if m:
        stem_end = start + len(m["stem"])
        return [Token(m["stem"], start, stem_end), Token("not", stem_end, start + len(word))]
    m = _NEG_CONTRACTION.match(word)
    if m:
        stem = m["stem"]
        stem_end = start + len(stem)
        surface = _IRREGULAR_STEMS.get(stem.casefold(), stem)
        if surface != stem and stem[:1].isupper():
            surface = surface.capitalize()
        return [Token(surface, start, stem_end), Token("not", stem_end, start + len(word))]
    return [Token(word, start, start + len(word))]


def tokenize(text: str, span: tuple[int, int] | None = None,
             abbreviations: Iterable[str] = DEFAULT_ABBREVIATIONS) -> list[Token]:
    """Tokenise ``text[span]``; offsets refer to ``text``.

    Punctuation is detached from words, ``cannot``/``can't`` become
    ``can`` + ``not`` and ``n't`` becomes ``not``.
    """
    matcher = _AbbrevMatcher(abbreviations)
    lo, hi = span if span is not None else (0, len(text))
    tokens: list[Token] = []
    words_so_far: list[str] = []
    for chunk in re.finditer(r"\S+", text[lo:hi]):
        word, pos = chunk.group(), lo + chunk.start()
        head: list[Token] = []
        tail: list[Token] = []
        while word and word[0] in _LEADING and len(word) > 1:
            head.append(Token(word[0], pos, pos + 1))
            word, pos = word[1:], pos + 1
        while len(word) > 1 and word[-1] in _TRAILING:
            if word[-1] == "." and matcher.keeps_period(word, words_so_far):
                break
            tail.insert(0, Token(word[-1], pos + len(word) - 1, pos + len(word)))
            word = word[:-1]
        body = _split_contraction(word, pos) if word else []
        tokens.extend(head + body + tail)
        words_so_far.append(word)
    return tokens


def preprocess(raw: str, abbreviations: Iterable[str] = DEFAULT_ABBREVIATIONS) -> Document:
    abbreviations = tuple(abbreviations)
    normalized = substitute_placeholders(raw)
    sentences = []
    for span in split_sentences(normalized, abbreviations):
        toks = tokenize(normalized, span, abbreviations)
        if toks:
            sentences.append(Sentence(len(sentences), tuple(toks)))
    return Document(raw, normalized, tuple(sentences))
