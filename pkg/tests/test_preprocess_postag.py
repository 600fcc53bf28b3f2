import pytest

from modalzone.postag import debug_lines, morph_guess, tag_tokens
from modalzone.preprocess import preprocess, split_sentences, substitute_placeholders, tokenize
from modalzone.tags import Tag

from sample_texts import AWRAMIK



def surfaces(text):
    return [t.surface for t in tokenize(text)]


def test_inline_math():
    assert substitute_placeholders("see $x^2+y$") == "see MATH"


def test_clean_text_unchanged():
    assert substitute_placeholders("plain prose.") == "plain prose."


@pytest.mark.parametrize("raw, expected", [
    ("a \\(x\\) b", "a MATH b"),
    ("before\n$$\\sum_i x_i$$\nafter", "before\nMATH\nafter"),
    ("x \\begin{figure}\\caption{c}\\end{figure} y", "x FIG y"),
    ("see \\includegraphics[width=3cm]{a.png} now", "see FIG now"),
    ("Text.\n= = = + + 1 2\n(* * *)\nMore.", "Text.\nMATH\nMore."),
])
def test_placeholders(raw, expected):
    assert substitute_placeholders(raw) == expected


def test_sentence_split():
    assert len(split_sentences("A b. C d.")) == 2
    assert len(split_sentences("Dr. Green left.")) == 1
    assert split_sentences("") == []


def test_sentence_split_quotes_attach():
    text = '"It works." She left.'
    spans = split_sentences(text)
    assert [text[a:b] for a, b in spans] == ['"It works."', "She left."]


def test_tokenize_examples():
    assert surfaces("could not have") == ["could", "not", "have"]
    assert surfaces("cannot") == ["can", "not"]
    assert surfaces('"You can‘t use"') == ['"', "You", "can", "not", "use", '"']
    assert surfaces("don't won't") == ["do", "not", "will", "not"]


def test_tokenize_spans():
    text = "Hi (there), P. Green."
    toks = tokenize(text)
    assert [t.surface for t in toks] == ["Hi", "(", "there", ")", ",", "P.", "Green", "."]
    for t in toks:
        assert text[t.start:t.end] == t.surface


def test_morph_guess():
    assert morph_guess("flobbulation") is Tag.NN
    assert morph_guess("flobbulations") is Tag.NNS
    assert morph_guess("glorping") is Tag.VPR
    assert morph_guess("glorped") is Tag.VPA
    assert morph_guess("glorply") is Tag.RB
    assert morph_guess("glorpous") is Tag.ADJ
    assert morph_guess("Awramik") is Tag.NP
    assert morph_guess("glorp") is Tag.NN


def test_awramik_trace(tagged):
    sent = tagged(AWRAMIK).sentences[0]
    pairs = [(t.surface, t.tag.rendered) for t in sent.tokens if t.tag is not Tag.PUNCT][:10]
    assert pairs == [("The", "ART"), ("individual", "ADJ"), ("grains", "NNS"), ("in", "IN"), ("them", "PPO"),
                     ("could", "MV"), ("not", "*"), ("have", "HAVE"), ("accumulated", "VPA"),
                     ("mechanically", "RB")]


def test_tagging_leaves_no_none(tagged):
    doc = tagged("Flobbulation must glorp. " + AWRAMIK)
    tags = [t.tag for s in doc.sentences for t in s.tokens]
    assert Tag.NONE not in tags
    assert tags[:2] == [Tag.NN, Tag.MV]


def test_unknown_capitalized_is_np(tagged):
    toks = tagged("It was Awramik.").sentences[0].tokens
    assert toks[2].tag is Tag.NP


def test_debug_lines(lexica):
    toks = tag_tokens(tokenize("can not"), lexica.pos, lexica.suffix_rules)
    lines = debug_lines(toks, lexica.pos)
    assert lines[0].startswith("can\tMV")
    assert lines[1] == "not\t*"


def test_preprocess_document_shape():
    doc = preprocess("One here. Two $x$ there.")
    assert [s.index for s in doc.sentences] == [0, 1]
    assert doc.sentence_text(1) == "Two MATH there."
