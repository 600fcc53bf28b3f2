"""Two-pass unigram tagger: lexicon lookup, then suffix guessing."""

from __future__ import annotations

import re
from dataclasses import replace
from typing import Iterable, Sequence

from .lexica import PosLexicon
from .preprocess import Token
from .tags import Tag

DEFAULT_SUFFIX_RULES: tuple[tuple[str, Tag], ...] = (
    ("tion", Tag.NN), ("sion", Tag.NN), ("ment", Tag.NN), ("ness", Tag.NN), ("ity", Tag.NN),
    ("tions", Tag.NNS), ("sions", Tag.NNS), ("ments", Tag.NNS), ("nesses", Tag.NNS), ("ities", Tag.NNS),
    ("ed", Tag.VPA), ("ing", Tag.VPR), ("ly", Tag.RB),
    ("ous", Tag.ADJ), ("ive", Tag.ADJ), ("al", Tag.ADJ), ("ic", Tag.ADJ),
    ("<upper>", Tag.NP), ("<default>", Tag.NN),
)

NEGATORS = frozenset({"not", "n't"})
_PUNCT = re.compile(r"^[^\w\s]+$")


def morph_guess(surface: str, rules: Sequence[tuple[str, Tag]] = DEFAULT_SUFFIX_RULES) -> Tag:
    """Guess a tag for a word missing from the lexicon; first matching rule wins."""
    low = surface.casefold()
    for pattern, tag in rules:
        if pattern == "<upper>":
            if surface[:1].isupper():
                return tag
        elif pattern == "<default>":
            return tag
        elif low.endswith(pattern) and len(low) > len(pattern):
            return tag
    return Tag.NN


def lexicon_tag(token: Token, lexicon: PosLexicon) -> Tag:
    """Pass-one tag for a single token (NONE if the lexicon has no reading)."""
    if token.lemma in NEGATORS:
        return Tag.NEG
    readings = lexicon.lookup(token.surface)
    if not readings and token.surface[:1].isupper():
        readings = lexicon.get(token.surface) or ()
    if readings:
        return readings[0][0]
    if _PUNCT.match(token.surface):
        return Tag.PUNCT
    return Tag.NONE


def tag_tokens(tokens: Iterable[Token], lexicon: PosLexicon,
               rules: Sequence[tuple[str, Tag]] = DEFAULT_SUFFIX_RULES) -> list[Token]:
    first = [replace(t, tag=lexicon_tag(t, lexicon)) for t in tokens]
    return [replace(t, tag=morph_guess(t.surface, rules)) if t.tag is Tag.NONE else t for t in first]


def debug_lines(tokens: Iterable[Token], lexicon: PosLexicon | None = None) -> list[str]:
    """``surface<TAB>TAG`` lines; runner-up lexicon readings follow as a third column."""
    lines = []
    for t in tokens:
        line = f"{t.surface}\t{t.tag.rendered}"
        if lexicon is not None:
            others = [tag.value for tag, _ in lexicon.lookup(t.surface)[1:]]
            if others:
                line += "\t" + ",".join(others)
        lines.append(line)
    return lines
