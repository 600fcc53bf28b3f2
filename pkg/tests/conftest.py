from dataclasses import replace

import pytest

from modalzone.lexica import load_lexica
from modalzone.postag import tag_tokens
from modalzone.preprocess import Sentence, preprocess

# (criterion, passed) lines collected by test_acceptance.py
ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def lexica():
    return load_lexica()


@pytest.fixture(scope="session")
def tagged(lexica):
    """Preprocess and tag a raw text with the bundled lexica."""

    def run(text):
        doc = preprocess(text, lexica.abbreviations)
        return replace(doc, sentences=tuple(
            Sentence(s.index, tuple(tag_tokens(s.tokens, lexica.pos, lexica.suffix_rules)))
            for s in doc.sentences))

    return run


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))
