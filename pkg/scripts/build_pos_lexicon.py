#!/usr/bin/env python
"""Build the bundled POS lexicon (word<TAB>TAG<TAB>count).

Two sources are supported:

  brown  tagged Brown corpus files (``word/tag`` tokens, as distributed with
         NLTK under corpora/brown/c??); counts are real token counts.

  brill  Brill's tagger lexicon as shipped by the ``pattern3`` sdist
         (en-lexicon.txt, Penn tags, one tag per word), plus its verb
         inflection table (en-verbs.txt) for secondary verbal readings and
         en-spelling.txt word frequencies as counts.  This is what the bundled
         file was generated from.

Usage:
  python scripts/build_pos_lexicon.py brown ~/nltk_data/corpora/brown/c?? -o out.tsv
  python scripts/build_pos_lexicon.py brill path/to/pattern3/text/en -o out.tsv
"""

from __future__ import annotations

import argparse
from collections import defaultdict
from pathlib import Path

from modalzone.lexica import count_brown_tokens, write_pos_counts
from modalzone.tags import Tag

PENN_TO_REDUCED = {
    "DT": Tag.OTHER, "PDT": Tag.OTHER, "WDT": Tag.OTHER, "CD": Tag.OTHER, "EX": Tag.OTHER,
    "FW": Tag.OTHER, "LS": Tag.OTHER, "POS": Tag.OTHER, "PRP$": Tag.OTHER, "WP$": Tag.OTHER,
    "SYM": Tag.OTHER, "TO": Tag.OTHER, "UH": Tag.OTHER, "WRB": Tag.OTHER, "WP": Tag.OTHER,
    "JJ": Tag.ADJ, "JJR": Tag.ADJ, "JJS": Tag.ADJ,
    "NN": Tag.NN, "NNS": Tag.NNS, "NNP": Tag.NP, "NNPS": Tag.NP,
    "IN": Tag.IN, "CC": Tag.CONJ,
    "RB": Tag.RB, "RBR": Tag.RB, "RBS": Tag.RB, "RP": Tag.RB,
    "MD": Tag.MV,
    "VB": Tag.VB, "VBD": Tag.VB, "VBP": Tag.VB, "VBZ": Tag.VB,
    "VBN": Tag.VPA, "VBG": Tag.VPR,
    "PRP": Tag.PPS,
}
PUNCT_TAGS = {".", ",", ":", "(", ")", "``", "''", "#", "$", '"'}

ARTICLES = {"the", "a", "an", "no", "every"}
SUBJECT_PRONOUNS = {"i", "he", "she", "it", "we", "they", "you"}
OBJECT_PRONOUNS = {"me", "him", "her", "us", "them"}
WORD_OVERRIDES = {
    **{w: Tag.HAVE for w in ("have", "has", "had", "having", "'ve", "'d")},
    **{w: Tag.BE for w in ("be", "am", "is", "are", "was", "were", "being", "'m", "'re")},
    "been": Tag.BEEN,
    "not": Tag.NEG, "n't": Tag.NEG,
    "who": Tag.WPS,
}


def reduce_penn(word: str, penn: str) -> Tag:
    key = word.casefold()
    if key in WORD_OVERRIDES:
        return WORD_OVERRIDES[key]
    if penn in PUNCT_TAGS:
        return Tag.PUNCT
    if penn == "DT" and key in ARTICLES:
        return Tag.ART
    if penn == "PRP":
        if key in OBJECT_PRONOUNS:
            return Tag.PPO
        return Tag.PPS if key in SUBJECT_PRONOUNS else Tag.OTHER
    return PENN_TO_REDUCED.get(penn, Tag.OTHER)


def _read_pairs(path: Path):
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith(";;;"):
            continue
        yield line.rsplit(" ", 1)


def build_from_brill(en_dir: Path) -> dict[str, dict[Tag, int]]:
    freq = {w.casefold(): int(c) for w, c in _read_pairs(en_dir / "en-spelling.txt")}
    counts: dict[str, dict[Tag, int]] = defaultdict(dict)

    def add(word: str, tag: Tag, count: int) -> None:
        key = word if tag is Tag.NP and word[:1].isupper() else word.casefold()
        counts[key][tag] = max(counts[key].get(tag, 0), count)

    rows = [(w, reduce_penn(w, penn)) for w, penn in _read_pairs(en_dir / "en-lexicon.txt")]
    # lowercase and proper-noun rows carry the frequency; other capitalised
    # rows are sentence-initial copies and only add a reading when new
    primary = [(w, t) for w, t in rows if w == w.casefold() or t is Tag.NP]
    secondary = [(w, t) for w, t in rows if not (w == w.casefold() or t is Tag.NP)]
    for word, tag in primary:
        add(word, tag, freq.get(word.casefold(), 1))
    for word, tag in secondary:
        add(word, tag, 0 if word.casefold() in counts else freq.get(word.casefold(), 1))

    for line in (en_dir / "en-verbs.txt").read_text(encoding="utf-8").splitlines():
        if not line or line.startswith(";;;"):
            continue
        cols = line.split(",")
        if cols[0] in WORD_OVERRIDES or cols[0] in ("be", "have"):
            continue
        forms = {Tag.VB: cols[0:5] + cols[6:11], Tag.VPR: cols[5:6], Tag.VPA: cols[11:12]}
        for tag, words in forms.items():
            for form in filter(None, words):
                if form.casefold() in WORD_OVERRIDES or Tag.MV in counts.get(form.casefold(), {}):
                    continue
                known = form.casefold() in counts
                add(form, tag, 0 if known else freq.get(form.casefold(), 1))
    return counts


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("source", choices=("brown", "brill"))
    parser.add_argument("paths", nargs="+", type=Path)
    parser.add_argument("-o", "--out", type=Path, required=True)
    args = parser.parse_args()

    if args.source == "brown":
        lines = (line for p in args.paths for line in p.read_text(encoding="utf-8").splitlines())
        counts = count_brown_tokens(lines)
        header = "Token counts from the tagged Brown corpus, reduced tagset."
    else:
        counts = build_from_brill(args.paths[0])
        header = (
            "Generated by scripts/build_pos_lexicon.py brill.\n"
            "Tags: Brill tagger lexicon v1.14 (trained on Brown + Penn Treebank;\n"
            "Copyright 1992, 1993 University of Pennsylvania), reduced tagset.\n"
            "Counts: word frequency from pattern's en-spelling.txt on the primary tag;\n"
            "0 marks a secondary reading taken from the verb inflection table."
        )
    write_pos_counts(counts, args.out, header=header)


if __name__ == "__main__":
    main()
