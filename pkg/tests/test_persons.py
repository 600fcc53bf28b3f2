from modalzone.lexica import NameLexicon
from modalzone.persons import (
    NamePattern, detect_name_candidates, extract_reference_names, link_pronouns, mark_persons, run_name_automaton,
)
from modalzone.transcripts import NameDecider

from sample_texts import AWRAMIK, BRASIER


def runs(doc, names):
    return [[t.surface for t in s.tokens[a:b]] for s in doc.sentences for a, b in detect_name_candidates(s.tokens, names)]


def test_reference_names():
    assert extract_reference_names("No references here.\nPalmer, S.E. (1999)") == set()
    text = "Body.\n\nReferences\nPalmer, S.E. (1999) Vision.\nPalmer, A. (2001) Again.\nLowe, D.R. 1980. Stromatolites."
    assert extract_reference_names(text) == {"Palmer", "Lowe"}


def test_candidate_runs(tagged, lexica):
    assert ["Stanley", "Awramik"] in runs(tagged(AWRAMIK), lexica.names)
    assert runs(tagged("The cell divides."), lexica.names) == []
    assert runs(tagged("Then P. Green spoke."), lexica.names) == [["P.", "Green"]]


def test_automaton_examples(lexica):
    assert run_name_automaton(["Peter", "Green"], lexica.names) is NamePattern.FN_LN
    assert run_name_automaton(["P.", "Green"], lexica.names) is NamePattern.ABB_LN
    assert run_name_automaton(["Peter", "P.", "Green"], lexica.names) is NamePattern.FN_ABB_LN
    assert run_name_automaton(["P.", "Q.", "Green"], lexica.names) is NamePattern.ABB_ABB_LN
    assert run_name_automaton(["Peter"], lexica.names) is NamePattern.FN
    assert run_name_automaton(["Max-Planck", "Institute"], lexica.names) is None
    assert run_name_automaton(["Green"], lexica.names) is None
    assert run_name_automaton(["Green"], lexica.names, {"Green"}) is NamePattern.LN


def test_awramik_entity_and_who(tagged, lexica):
    doc = tagged(AWRAMIK)
    persons, _ = mark_persons(doc, lexica.names)
    awramik = [p for p in persons if p.canonical_name == "Awramik"]
    assert len(awramik) == 1 and awramik[0].pattern is NamePattern.FN_LN
    links = link_pronouns(doc, persons)
    who = [l for l in links if l.pronoun == "who"]
    assert len(who) == 1 and who[0].antecedent == awramik[0].id


def test_institution_is_not_a_person(tagged, lexica):
    persons, _ = mark_persons(tagged("They work at the Max-Planck Institute in Berlin."), lexica.names)
    assert persons == []


def test_reference_name_lone_mention(tagged, lexica):
    doc = tagged("Lowe pointed out their resemblance to modern forms but later had doubts.")
    persons, _ = mark_persons(doc, lexica.names, {"Lowe"})
    assert [(p.canonical_name, p.pattern, p.source) for p in persons] == [("Lowe", NamePattern.LN, "reference-list")]


def test_empty_document(tagged, lexica):
    assert mark_persons(tagged(""), lexica.names) == ([], [])


def test_he_links_to_previous_sentence(tagged, lexica):
    doc = tagged(BRASIER)
    persons, _ = mark_persons(doc, lexica.names)
    links = link_pronouns(doc, persons)
    assert [(l.pronoun, persons[l.antecedent].canonical_name) for l in links] == [("He", "Brasier")]


def test_they_never_linked(tagged, lexica):
    doc = tagged("Peter Green spoke. They argue about it.")
    persons, _ = mark_persons(doc, lexica.names)
    assert link_pronouns(doc, persons) == []


def test_gender_filter(tagged, lexica):
    doc = tagged("Mary Awramik met John Brasier. She smiled.")
    persons, _ = mark_persons(doc, lexica.names)
    links = link_pronouns(doc, persons)
    assert persons[links[0].antecedent].canonical_name == "Awramik"


def test_mentions_merge_by_last_name(tagged, lexica):
    doc = tagged("Peter Green spoke. Later P. Green wrote.")
    persons, _ = mark_persons(doc, lexica.names)
    assert len(persons) == 1 and len(persons[0].mentions) == 2


def test_manual_queue_and_decider(tagged, lexica):
    doc = tagged(AWRAMIK)
    _, queue = mark_persons(doc, lexica.names)
    assert any(c.candidate == "Santa Barbara" for c in queue)
    decider = NameDecider({(0, "Santa Barbara"): {"candidate": "Santa Barbara", "sentence": 0,
                                                   "decision": "accept", "canonicalName": "Barbara"}})
    persons, _ = mark_persons(doc, lexica.names, decide=decider)
    manual = [p for p in persons if p.source == "manual"]
    assert [p.canonical_name for p in manual] == ["Barbara"]
    assert decider.gathered[0]["decision"] == "accept"


def test_interactive_decider_records_answers():
    answers = iter(["n", "Green"])
    decider = NameDecider(ask=lambda prompt: next(answers))

    class C:
        candidate, sentence = "Foo Bar", 3

    assert decider(C())["decision"] == "reject"
    row = decider(C())
    assert row == {"candidate": "Foo Bar", "sentence": 3, "decision": "accept", "canonicalName": "Green"}
    assert len(decider.gathered) == 2


def test_custom_name_lexicon(tagged):
    names = NameLexicon(frozenset({"zork"}), frozenset())
    persons, _ = mark_persons(tagged("Then Zork Quux arrived."), names)
    assert persons[0].canonical_name == "Quux" and persons[0].gender == "female"
