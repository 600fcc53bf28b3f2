import json
import random

import pytest

from modalzone.modality import (
    AnnotatedDocument, ModalOccurrence, PatternId, SentenceLabel, analyze_sentence, annotate_document,
    classify_sentence, disambiguate_modal, find_modal_occurrences, resolve_modal, scan_window,
)
from modalzone.persons import link_pronouns, mark_persons
from modalzone.preprocess import Token
from modalzone.tags import Tag

from sample_texts import AWRAMIK
from oracle import brute_force_collocation, expected_resolution

MODALS = ["must", "can", "could", "may", "might", "will", "would", "shall", "should"]


def tokens_for(tags, lemma="must"):
    toks = [Token(lemma, 0, len(lemma), Tag.MV)]
    for i, tag in enumerate(tags):
        toks.append(Token(f"w{i}", 0, 1, tag))
    return toks


def labels_of(tagged, lexica, text):
    doc = tagged(text)
    out = []
    for s in doc.sentences:
        occ = analyze_sentence(s.tokens, lexica.modality, lexica.pos, s.index)
        out.append((classify_sentence(occ).rendered, occ))
    return out


@pytest.mark.parametrize("tags, pattern, cls", [
    ([Tag.HAVE, Tag.BEEN, Tag.ADJ], PatternId.MV_HAVE_BEEN, "epistemic"),
    ([Tag.VB], PatternId.FALLBACK_DEONTIC, "deontic"),
    ([Tag.HAVE, Tag.BEEN, Tag.VPR], PatternId.MV_HAVE_BEEN_VPR, "epistemic"),
    ([Tag.RB, Tag.RB, Tag.BE, Tag.VPR], PatternId.MV_BE_VPR, "epistemic"),
    ([Tag.RB, Tag.RB, Tag.RB, Tag.BE, Tag.VPR], PatternId.FALLBACK_DEONTIC, "deontic"),
    ([Tag.NEG, Tag.HAVE, Tag.VPA], PatternId.negMV_HAVE_VPA, "epistemic"),
])
def test_must_rules(tags, pattern, cls):
    p, c, _, flagged = resolve_modal("must", tags)
    assert (p, c, flagged) == (pattern, cls, False)


def test_spec_examples():
    assert resolve_modal("could", [Tag.NEG, Tag.HAVE, Tag.VPA])[:3] == (PatternId.negMV_HAVE_VPA, "epistemic", True)
    assert resolve_modal("shall", [Tag.VB])[:2] == (PatternId.UNCOND_DEONTIC, "deontic")
    assert resolve_modal("can", [Tag.VB])[:2] == (PatternId.UNCOND_DEONTIC, "deontic")
    assert resolve_modal("can", [Tag.NEG, Tag.BE, Tag.VPA])[:2] == (PatternId.negMV, None)


def test_unknown_lemma_flagged(caplog):
    occ = ModalOccurrence(0, 0, "ought", "modal-verb")
    res = disambiguate_modal(tokens_for([Tag.VB], "ought"), occ)
    assert res.flagged and res.resolved_class == "deontic" and res.pattern is PatternId.FALLBACK_DEONTIC
    assert "ought" in caplog.text


def test_disambiguate_requires_mv():
    with pytest.raises(ValueError):
        disambiguate_modal([Token("x", 0, 1, Tag.NN)], ModalOccurrence(0, 0, "must", "modal-verb"))


WINDOW_ALPHABET = [Tag.RB, Tag.NEG, Tag.HAVE, Tag.BEEN, Tag.BE, Tag.VPA, Tag.VPR, Tag.VB, Tag.ADJ, Tag.NN, Tag.PUNCT]


def test_automaton_matches_brute_force_10000():
    rng = random.Random(20240611)
    disagreements = []
    for _ in range(10_000):
        tags = [rng.choice(WINDOW_ALPHABET) for _ in range(rng.randint(0, 7))]
        lemma = rng.choice(MODALS + ["ought"])
        occ = disambiguate_modal(tokens_for(tags, lemma), ModalOccurrence(0, 0, lemma, "modal-verb"))
        got = (occ.pattern.value, occ.resolved_class)
        if got != expected_resolution(lemma, tags) or (occ.negated, ) != (brute_force_collocation(tags)[0], ):
            disagreements.append((lemma, tags, got))
    assert disagreements == []


def test_scan_window_negation_only_in_prefix():
    assert scan_window([Tag.HAVE, Tag.NEG]) == (False, None)
    assert scan_window([Tag.RB, Tag.NEG, Tag.RB, Tag.HAVE, Tag.BEEN]) == (True, "MV_HAVE_BEEN")


def test_find_occurrences(tagged, lexica):
    s = tagged("They must have been alive.").sentences[0]
    occ = find_modal_occurrences(s.tokens, lexica.modality, lexica.pos)
    assert [(o.lemma, s.tokens[o.token_index].tag) for o in occ] == [("must", Tag.MV)]
    s = tagged("First perhaps the best-known work concerns fish.").sentences[0]
    occ = find_modal_occurrences(s.tokens, lexica.modality, lexica.pos)
    assert [(o.lemma, o.pattern, o.resolved_class) for o in occ] == [("perhaps", PatternId.LEX_MARKER, "epistemic")]
    s = tagged("The cell divides.").sentences[0]
    assert find_modal_occurrences(s.tokens, lexica.modality, lexica.pos) == []


def test_classify():
    ep = ModalOccurrence(0, 0, "perhaps", "adverb", pattern=PatternId.LEX_MARKER, resolved_class="epistemic")
    de = ModalOccurrence(0, 1, "can", "modal-verb", pattern=PatternId.UNCOND_DEONTIC, resolved_class="deontic")
    assert classify_sentence([ep]).rendered == "EPISTEMIC"
    assert classify_sentence([ep, de]).rendered == "EPISTEMIC-DEONTIC"
    assert classify_sentence([]).rendered == "NON-MODAL"
    with pytest.raises(ValueError):
        classify_sentence([ModalOccurrence(0, 0, "must", "modal-verb")])


@pytest.mark.parametrize("text, label", [
    ("They must have been alive.", "EPISTEMIC"),
    ("I must go, she is already waiting for me.", "DEONTIC"),
    ("This uncertainty may relate to the fact that genes have undergone rapid sequence evolution, "
     "which can either cause artifactual groupings.", "EPISTEMIC-DEONTIC"),
    ("Authors shall submit the revised manuscript within four weeks.", "DEONTIC"),
    ("The cell divides.", "NON-MODAL"),
])
def test_sentence_labels(tagged, lexica, text, label):
    assert labels_of(tagged, lexica, text)[0][0] == label


def test_annotate_awramik(tagged, lexica):
    doc = tagged(AWRAMIK)
    persons, _ = mark_persons(doc, lexica.names)
    links = link_pronouns(doc, persons)
    occ = {s.index: analyze_sentence(s.tokens, lexica.modality, lexica.pos, s.index) for s in doc.sentences}
    labels = {i: classify_sentence(o) for i, o in occ.items()}
    plain = annotate_document(doc, persons, links, labels, occ)
    assert plain.text.startswith("<EPISTEMIC> ") and plain.text.endswith(" </EPISTEMIC>\n")
    assert "<Person Name=Awramik>Stanley Awramik</Person>" in plain.text
    assert "<Person Name=Awramik>who</Person>" in plain.text
    debug = annotate_document(doc, persons, links, labels, occ, debug=True)
    assert "(could, MV), (not, *), (have, HAVE), (accumulated, VPA)" in debug.text
    assert "<Person Name=Awramik>(Stanley, NP), (Awramik, NP)</Person>" in debug.text
    record = json.loads(plain.records_jsonl())
    assert record["labels"] == ["EPISTEMIC"]
    assert record["occurrences"] == [{"lemma": "could", "pattern": "negMV_HAVE_VPA", "negated": True,
                                      "class": "epistemic"}]
    again = annotate_document(doc, persons, links, labels, occ)
    assert again == plain


def test_annotate_neutral_document(tagged, lexica):
    doc = tagged("The cell divides. It grows.")
    labels = {s.index: SentenceLabel() for s in doc.sentences}
    out = annotate_document(doc, [], [], labels, {})
    assert out == AnnotatedDocument("The cell divides.\nIt grows.\n", out.records)
    assert "EPISTEMIC" not in out.text and "DEONTIC" not in out.text
