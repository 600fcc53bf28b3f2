"""Reduced Brown-style tagset and the Brown -> reduced mapping."""

from __future__ import annotations

from enum import Enum


class Tag(str, Enum):
    ART = "ART"
    ADJ = "ADJ"
    NN = "NN"
    NNS = "NNS"
    NP = "NP"
    IN = "IN"
    PPO = "PPO"
    PPS = "PPS"
    WPS = "WPS"
    RB = "RB"
    MV = "MV"
    NEG = "NEG"
    HAVE = "HAVE"
    BE = "BE"
    BEEN = "BEEN"
    VB = "VB"
    VPA = "VPA"
    VPR = "VPR"
    CONJ = "CONJ"
    PUNCT = "PUNCT"
    OTHER = "OTHER"
    NONE = "NONE"

    @property
    def rendered(self) -> str:
        """Surface form used in annotated output; negation prints as ``*``."""
        return "*" if self is Tag.NEG else self.value


TAG_ORDER = {tag: i for i, tag in enumerate(Tag)}

VERBAL_TAGS = frozenset({Tag.VB, Tag.VPA, Tag.VPR, Tag.HAVE, Tag.BE, Tag.BEEN, Tag.MV})

# Brown base tags after suffix stripping (-TL, -HL, -NC, FW-, $).
BROWN_TO_REDUCED: dict[str, Tag] = {
    "AT": Tag.ART,
    "JJ": Tag.ADJ, "JJR": Tag.ADJ, "JJS": Tag.ADJ, "JJT": Tag.ADJ,
    "NN": Tag.NN, "NR": Tag.NN,
    "NNS": Tag.NNS, "NRS": Tag.NNS,
    "NP": Tag.NP, "NPS": Tag.NP,
    "IN": Tag.IN,
    "PPO": Tag.PPO,
    "PPS": Tag.PPS, "PPSS": Tag.PPS,
    "WPS": Tag.WPS,
    "RB": Tag.RB, "RBR": Tag.RB, "RBT": Tag.RB, "RN": Tag.RB, "RP": Tag.RB,
    "MD": Tag.MV,
    "*": Tag.NEG,
    "HV": Tag.HAVE, "HVD": Tag.HAVE, "HVZ": Tag.HAVE, "HVG": Tag.HAVE, "HVN": Tag.HAVE,
    "BE": Tag.BE, "BED": Tag.BE, "BEDZ": Tag.BE, "BEG": Tag.BE, "BEM": Tag.BE,
    "BER": Tag.BE, "BEZ": Tag.BE,
    "BEN": Tag.BEEN,
    "VBN": Tag.VPA,
    "VBG": Tag.VPR,
    "VB": Tag.VB, "VBD": Tag.VB, "VBZ": Tag.VB, "DO": Tag.VB, "DOD": Tag.VB, "DOZ": Tag.VB,
    "CC": Tag.CONJ, "CS": Tag.CONJ,
    ".": Tag.PUNCT, ",": Tag.PUNCT, ":": Tag.PUNCT, "(": Tag.PUNCT, ")": Tag.PUNCT,
    "--": Tag.PUNCT, "'": Tag.PUNCT, "''": Tag.PUNCT, "`": Tag.PUNCT, "``": Tag.PUNCT,
}


def map_tag(raw: str) -> Tag:
    """Map a reduced or Brown tag string to a :class:`Tag`.

    Compound Brown tags (``MD*``, ``BEZ*``, ``PPS+BEZ``) take their first
    component; anything not covered by the table is ``OTHER``.
    """
    token = raw.strip().upper()
    if token in Tag.__members__ and token != "NONE":
        return Tag[token]
    if token in BROWN_TO_REDUCED:
        return BROWN_TO_REDUCED[token]
    if token.startswith("FW-"):
        token = token[3:]
    token = token.split("+")[0]
    for suffix in ("-TL", "-HL", "-NC"):
        while token.endswith(suffix):
            token = token[: -len(suffix)]
    if len(token) > 1 and token.endswith("*"):
        token = token[:-1]
    if len(token) > 1:
        token = token.rstrip("$")
    return BROWN_TO_REDUCED.get(token, Tag.OTHER)
