"""BLEU and Flesch-Kincaid grade level.

BLEU treats a whole article as one segment with a single reference: clipped
n-gram precisions for n = 1..4, uniform weights and the brevity penalty
``exp(1 - r / c)`` when the output is shorter than the reference. Without
smoothing any zero precision makes the score 0. The smoothing switch adds one
to numerator and denominator of the orders n >= 2 (Lin and Och, 2004), in the
same way as NLTK's ``SmoothingFunction().method2``.

FKGL counts as words only tokens that contain an alphanumeric character, so
it disagrees on purpose with :func:`simpeval.textcore.word_count`.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyDocument, EmptyReference
from .textcore import Document, ngrams

MAX_ORDER = 4

_VOWEL_GROUP = re.compile(r"[aeiouy]+")


@dataclass(frozen=True)
class BleuScore:
    score: float
    precisions: tuple[float, ...]
    brevity_penalty: float
    output_length: int
    reference_length: int


@dataclass(frozen=True)
class ReadabilityScore:
    fkgl: float
    words: int
    sentences: int
    syllables: int


def clipped_counts(output: Sequence[str], reference: Sequence[str]) -> tuple[list[int], list[int]]:
    """Per-order clipped match counts and candidate n-gram totals."""
    matches, totals = [], []
    for n in range(1, MAX_ORDER + 1):
        hyp = ngrams(output, n).counter()
        ref = ngrams(reference, n).counter()
        matches.append(sum((hyp & ref).values()))
        # NLTK floors each segment's denominator at 1, also when pooling a corpus
        totals.append(max(sum(hyp.values()), 1))
    return matches, totals


def brevity_penalty(output_length: int, reference_length: int) -> float:
    if output_length > reference_length:
        return 1.0
    if output_length == 0:
        return 0.0
    return math.exp(1 - reference_length / output_length)


def bleu_from_counts(matches, totals, out_len: int, ref_len: int, smoothing: bool = False) -> BleuScore:
    precisions = []
    for n, (m, t) in enumerate(zip(matches, totals), start=1):
        if smoothing and n > 1:
            precisions.append((m + 1) / (t + 1))
        else:
            precisions.append(m / t)
    bp = brevity_penalty(out_len, ref_len)
    if min(precisions) == 0:
        score = 0.0
    else:
        score = bp * math.exp(sum(math.log(p) for p in precisions) / MAX_ORDER)
    return BleuScore(100 * score, tuple(precisions), bp, out_len, ref_len)


def compute_bleu(output: Document, reference: Document, smoothing: bool = False) -> BleuScore:
    if not reference.tokens:
        raise EmptyReference("reference document is empty")
    matches, totals = clipped_counts(output.tokens, reference.tokens)
    return bleu_from_counts(matches, totals, len(output), len(reference), smoothing)


def corpus_bleu(pairs: Iterable[tuple[Document, Document]], smoothing: bool = False) -> BleuScore:
    """Micro-averaged BLEU: counts and lengths are pooled before scoring."""
    matches = [0] * MAX_ORDER
    totals = [0] * MAX_ORDER
    out_len = ref_len = 0
    for output, reference in pairs:
        if not reference.tokens:
            raise EmptyReference("reference document is empty")
        m, t = clipped_counts(output.tokens, reference.tokens)
        matches = [a + b for a, b in zip(matches, m)]
        totals = [a + b for a, b in zip(totals, t)]
        out_len += len(output)
        ref_len += len(reference)
    if ref_len == 0:
        raise EmptyReference("no reference documents")
    return bleu_from_counts(matches, totals, out_len, ref_len, smoothing)


def count_syllables(word: str) -> int:
    """Vowel-group heuristic, minus one for a silent final "e". Never below 1."""
    word = word.lower()
    groups = len(_VOWEL_GROUP.findall(word))
    if groups > 1 and word.endswith("e"):
        groups -= 1
    return max(groups, 1)


def is_word(token: str) -> bool:
    return any(ch.isalnum() for ch in token)


def fkgl_from_counts(words: int, sentences: int, syllables: int) -> float:
    return 0.39 * (words / sentences) + 11.8 * (syllables / words) - 15.59


def compute_fkgl(doc: Document) -> ReadabilityScore:
    words = [t for t in doc.tokens if is_word(t)]
    if not words or not doc.sentences:
        raise EmptyDocument("FKGL needs at least one word and one sentence")
    syllables = sum(count_syllables(w) for w in words)
    fkgl = fkgl_from_counts(len(words), doc.n_sentences, syllables)
    return ReadabilityScore(fkgl, len(words), doc.n_sentences, syllables)
