"""SARI over whole-article token sequences, single reference.

Counting follows the reference ``SARI.py`` released with the metric exactly, restricted to one
reference (where its reference-count replication is the identity). For each
order n = 1..4, with ``S``, ``C`` and ``R`` the n-gram multisets of source,
candidate output and reference:

keep
    ``K = S & C`` (multiset min), ``G = K & R``, ``A = S & R``.
    precision is the mean over the distinct grams of ``K`` of ``G[g] / K[g]``,
    recall the mean over the distinct grams of ``A`` of ``G[g] / A[g]``
    (grams outside ``G`` contribute 0). The order score is their F1.
delete
    ``D = S - C`` (positive part), ``DG = D - R``. The order score is the
    precision: the mean over the distinct grams of ``D`` of ``DG[g] / D[g]``.
add
    Set semantics. ``A+ = set(C) - set(S)``, ``good = A+ & set(R)``,
    ``all = set(R) - set(S)``; F1 of ``|good|/|A+|`` and ``|good|/|all|``.

Any ratio with an empty denominator set is 0, and so is an F1 whose precision
and recall are both 0. Each component is the uniform mean over the four
orders. Scores are computed in [0, 1] and stored scaled to [0, 100].
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import EmptyInput, EmptyReference
from .textcore import Document, ngrams, tokenize

MAX_ORDER = 4


@dataclass(frozen=True)
class EvalTriple:
    source: Document
    output: Document
    reference: Document

    @classmethod
    def from_text(cls, source: str, output: str, reference: str, lowercase: bool = False):
        return cls(
            tokenize(source, lowercase),
            tokenize(output, lowercase),
            tokenize(reference, lowercase),
        )


@dataclass(frozen=True)
class SariComponents:
    """Component scores on the 0-100 scale, unrounded."""

    f_keep: float
    p_del: float
    f_add: float
    sari: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "sari", (self.f_keep + self.p_del + self.f_add) / 3)


def _f1(precision, recall):
    if precision > 0 or recall > 0:
        return 2 * precision * recall / (precision + recall)
    return 0.0


def keep_score(s: Counter, c: Counter, r: Counter) -> float:
    kept = s & c
    kept_good = kept & r
    kept_all = s & r
    precision = sum(kept_good[g] / kept[g] for g in kept_good) / len(kept) if kept else 0.0
    recall = sum(kept_good[g] / kept_all[g] for g in kept_good) / len(kept_all) if kept_all else 0.0
    return _f1(precision, recall)


def delete_score(s: Counter, c: Counter, r: Counter) -> float:
    deleted = s - c
    if not deleted:
        return 0.0
    deleted_good = deleted - r
    return sum(deleted_good[g] / deleted[g] for g in deleted_good) / len(deleted)


def add_score(s: Counter, c: Counter, r: Counter) -> float:
    added = c.keys() - s.keys()
    added_all = r.keys() - s.keys()
    good = len(added & r.keys())
    precision = good / len(added) if added else 0.0
    recall = good / len(added_all) if added_all else 0.0
    return _f1(precision, recall)


def sari_per_order(triple: EvalTriple) -> list[tuple[float, float, float]]:
    """Raw (keep, delete, add) scores in [0, 1] for orders 1..4."""
    _check(triple)
    out = []
    for n in range(1, MAX_ORDER + 1):
        s = ngrams(triple.source.tokens, n).counter()
        c = ngrams(triple.output.tokens, n).counter()
        r = ngrams(triple.reference.tokens, n).counter()
        out.append((keep_score(s, c, r), delete_score(s, c, r), add_score(s, c, r)))
    return out


def compute_sari(triple: EvalTriple) -> SariComponents:
    per_order = sari_per_order(triple)
    keep, delete, add = (sum(o[k] for o in per_order) / MAX_ORDER for k in range(3))
    return SariComponents(f_keep=100 * keep, p_del=100 * delete, f_add=100 * add)


def _check(triple):
    if not triple.source.tokens:
        raise EmptyInput("source document is empty")
    if not triple.reference.tokens:
        raise EmptyReference("reference document is empty")
