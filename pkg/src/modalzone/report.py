"""Label distribution and accuracy against a gold file."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

LABELS = ("EPISTEMIC", "DEONTIC", "NON-MODAL", "EPISTEMIC-DEONTIC")


class GoldError(ValueError):
    pass


@dataclass
class DistributionReport:
    counts: dict[str, int]
    total: int

    @property
    def percentages(self) -> dict[str, float]:
        if not self.total:
            return {label: 0.0 for label in LABELS}
        return {label: 100.0 * self.counts[label] / self.total for label in LABELS}

    def as_dict(self) -> dict:
        return {"total": self.total, "counts": dict(self.counts),
                "percentages": {k: round(v, 2) for k, v in self.percentages.items()}}

    def to_text(self, title: str = "distribution") -> str:
        pct = self.percentages
        lines = [f"{title} ({self.total} sentences)"]
        lines += [f"  {label:<18} {self.counts[label]:>6} {pct[label]:>6.1f}%" for label in LABELS]
        return "\n".join(lines) + "\n"


def distribution(labels: Iterable[str]) -> DistributionReport:
    """Count rendered labels (EPISTEMIC, DEONTIC, NON-MODAL, EPISTEMIC-DEONTIC)."""
    counts = Counter()
    for label in labels:
        if label not in LABELS:
            raise ValueError(f"unknown label {label!r}")
        counts[label] += 1
    return DistributionReport({label: counts[label] for label in LABELS}, sum(counts.values()))


@dataclass
class AccuracyReport:
    correct: int
    total: int
    lemma_errors: dict[str, int] = field(default_factory=dict)
    confusion: dict[str, dict[str, int]] = field(default_factory=dict)
    misclassified: list[str] = field(default_factory=list)

    @property
    def percentage(self) -> float:
        return 100.0 * self.correct / self.total if self.total else 0.0

    def as_dict(self) -> dict:
        return {
            "correct": self.correct,
            "total": self.total,
            "percentage": round(self.percentage, 2),
            "lemma_errors": dict(sorted(self.lemma_errors.items())),
            "confusion": self.confusion,
            "misclassified": self.misclassified,
        }

    def to_text(self) -> str:
        lines = [f"accuracy {self.correct}/{self.total} = {self.percentage:.1f}%"]
        if self.lemma_errors:
            lines.append("errors by modal word:")
            for lemma, n in sorted(self.lemma_errors.items(), key=lambda kv: (-kv[1], kv[0])):
                lines.append(f"  {lemma:<14} {n}")
        lines.append("confusion (gold -> predicted):")
        for gold in LABELS:
            row = self.confusion.get(gold, {})
            lines.append(f"  {gold:<18} " + " ".join(f"{row.get(p, 0):>5}" for p in LABELS))
        return "\n".join(lines) + "\n"


def read_gold(path: str | Path) -> dict[str, str]:
    gold = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or parts[1].strip() not in LABELS:
            raise GoldError(f"{path}:{lineno}: expected id<TAB>label")
        gold[parts[0].strip()] = parts[1].strip()
    return gold


def evaluate(predictions: Mapping[str, str], gold: Mapping[str, str],
             occurrences: Mapping[str, Iterable[str]] | None = None) -> AccuracyReport:
    """Exact-match accuracy of rendered labels.

    ``occurrences`` maps a sentence id to the modal lemmas found in it; the
    lemmas of misclassified sentences are tallied in ``lemma_errors``.
    """
    missing = sorted(set(gold) - set(predictions))
    extra = sorted(set(predictions) - set(gold))
    if missing or extra:
        raise GoldError(f"id mismatch: missing predictions for {missing}, unknown ids {extra}")
    correct = 0
    lemma_errors: Counter = Counter()
    confusion: dict[str, dict[str, int]] = {}
    misclassified = []
    for sid in sorted(gold):
        g, p = gold[sid], predictions[sid]
        row = confusion.setdefault(g, {})
        row[p] = row.get(p, 0) + 1
        if g == p:
            correct += 1
        else:
            misclassified.append(sid)
            for lemma in (occurrences or {}).get(sid, ()):
                lemma_errors[lemma] += 1
    return AccuracyReport(correct, len(gold), dict(lemma_errors), confusion, misclassified)


def dump_json(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, indent=2) + "\n"
