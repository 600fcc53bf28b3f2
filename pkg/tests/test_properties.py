"""Property-based checks with hypothesis."""

from hypothesis import given, settings
from hypothesis import strategies as st

from modalzone import attitude as att
from modalzone.modality import ModalOccurrence, disambiguate_modal
from modalzone.preprocess import Token, preprocess, split_sentences, substitute_placeholders, tokenize
from modalzone.report import LABELS, distribution, evaluate
from modalzone.tags import Tag

from oracle import brute_force_collocation, expected_resolution, majority_group

WORDS = st.sampled_from(["the", "Cell", "can't", "cannot", "Dr.", "P.", "Green", "(it)", '"so"', "x,", "end.",
                         "Why?", "$x$", "‘quote’", "e.g.", "grows", "MATH", "n't", "-", "..."])
TEXT = st.lists(st.one_of(WORDS, st.text(min_size=1, max_size=8)), max_size=30).map(" ".join)


@given(TEXT)
def test_placeholders_idempotent(text):
    once = substitute_placeholders(text)
    assert substitute_placeholders(once) == once


@given(TEXT)
def test_token_spans(text):
    tokens = tokenize(text)
    last = 0
    for tok in tokens:
        assert tok.surface
        assert last <= tok.start < tok.end <= len(text)
        last = tok.end
        raw = text[tok.start:tok.end]
        # only contraction parts are rewritten (n't -> not, wo -> will, ...)
        assert raw == tok.surface or tok.surface.casefold() in ("not", "will", "shall", "can")


@given(TEXT)
def test_sentences_cover_all_non_whitespace(text):
    spans = split_sentences(text)
    covered = set()
    last = 0
    for a, b in spans:
        assert last <= a < b
        last = b
        covered.update(range(a, b))
    assert all(i in covered for i, c in enumerate(text) if not c.isspace())


@given(TEXT)
def test_preprocess_deterministic(text):
    assert preprocess(text) == preprocess(text)


TAGS = st.lists(st.sampled_from([Tag.RB, Tag.NEG, Tag.HAVE, Tag.BEEN, Tag.BE, Tag.VPA, Tag.VPR, Tag.VB, Tag.NN]),
                max_size=8)
LEMMAS = st.sampled_from(["must", "can", "could", "may", "might", "will", "would", "shall", "should", "ought"])


@settings(max_examples=500)
@given(LEMMAS, TAGS)
def test_automaton_vs_oracle(lemma, tags):
    toks = [Token(lemma, 0, 1, Tag.MV)] + [Token("w", 0, 1, t) for t in tags]
    occ = disambiguate_modal(toks, ModalOccurrence(0, 0, lemma, "modal-verb"))
    assert (occ.pattern.value, occ.resolved_class) == expected_resolution(lemma, tags)
    assert occ.negated == brute_force_collocation(tags)[0]


RECORDS = st.lists(st.builds(att.AttitudeRecord, st.integers(0, 50), st.sampled_from([att.AUTHOR, 0, 1, 2]),
                             st.sampled_from([att.M, att.NOT_M]),
                             st.sampled_from([att.H, att.NOT_H, att.UNDECIDED])), max_size=15)


@given(RECORDS)
def test_graph_partition(records):
    g = att.build_attitude_graph(records)
    members = [g.pro, g.contra, g.neutral]
    assert sum(len(m) for m in members) == len(set().union(*members))
    assert {r.holder for r in records} | {att.AUTHOR} == set().union(*members)
    for holder in {r.holder for r in records}:
        assert g.group_of(holder) == majority_group([r.group for r in records if r.holder == holder])


@given(st.lists(st.sampled_from(LABELS)), st.randoms())
def test_distribution_permutation_invariant(labels, rnd):
    shuffled = labels[:]
    rnd.shuffle(shuffled)
    a, b = distribution(labels), distribution(shuffled)
    assert a.counts == b.counts
    if labels:
        assert abs(sum(a.percentages.values()) - 100) <= 0.1


@given(st.dictionaries(st.text(min_size=1, max_size=5), st.sampled_from(LABELS)),
       st.dictionaries(st.text(min_size=1, max_size=5), st.sampled_from(LABELS)))
def test_evaluate_bounds(pred, noise):
    gold = {k: noise.get(k, v) for k, v in pred.items()}
    rep = evaluate(pred, gold)
    assert 0 <= rep.correct <= rep.total == len(pred)
    assert evaluate(pred, pred).correct == len(pred)
