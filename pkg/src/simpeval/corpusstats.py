"""Corpus-level analysis: odds ratios, corpus statistics and Spearman's rho.

The odds ratio of token ``t`` between corpus ``i`` and corpus ``j`` is the
ratio of its relative frequencies,
``r = (y_t^i / y_t^j) / (n^i / n^j)``, where ``y`` are token counts and ``n``
corpus sizes in tokens. Its significance comes from a chi-square test of
independence on the 2x2 table ``[[y_i, n_i - y_i], [y_j, n_j - y_j]]``
(1 degree of freedom, Yates continuity correction by default, as in
``scipy.stats.chi2_contingency``).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.stats import chi2_contingency

from .errors import DegenerateInput, LengthMismatch, ZeroDenominator
from .textcore import Document

DEFAULT_MIN_COUNT = 20


@dataclass(frozen=True)
class TokenCounts:
    token: str
    count_i: int
    count_j: int
    size_i: int
    size_j: int

    def __post_init__(self):
        if self.size_i < 1 or self.size_j < 1:
            raise ValueError("corpus sizes must be positive")
        if not (0 <= self.count_i <= self.size_i and 0 <= self.count_j <= self.size_j):
            raise ValueError(f"counts for {self.token!r} exceed corpus sizes")

    def swapped(self) -> "TokenCounts":
        return TokenCounts(self.token, self.count_j, self.count_i, self.size_j, self.size_i)


@dataclass(frozen=True)
class OddsRatioResult:
    """``ratio`` is ``None`` when the token never occurs in corpus ``j``."""

    counts: TokenCounts
    ratio: float | None
    p_value: float
    rank_i: int | None = None
    rank_j: int | None = None

    @property
    def token(self) -> str:
        return self.counts.token


def chi_square_p_value(table, yates: bool = True) -> float:
    table = np.asarray(table, dtype=float)
    # a zero row/column margin means both corpora agree trivially
    if (table.sum(axis=0) == 0).any() or (table.sum(axis=1) == 0).any():
        return 1.0
    return float(chi2_contingency(table, correction=yates)[1])


def odds_ratio(counts: TokenCounts, yates: bool = True) -> OddsRatioResult:
    if counts.count_j == 0:
        raise ZeroDenominator(f"{counts.token!r} does not occur in corpus j")
    return _odds_ratio(counts, yates)


def _odds_ratio(counts, yates, rank_i=None, rank_j=None):
    ratio = None
    if counts.count_j:
        ratio = (counts.count_i / counts.count_j) / (counts.size_i / counts.size_j)
    table = [
        [counts.count_i, counts.size_i - counts.count_i],
        [counts.count_j, counts.size_j - counts.count_j],
    ]
    return OddsRatioResult(counts, ratio, chi_square_p_value(table, yates), rank_i, rank_j)


def count_tokens(docs: Iterable[Document]) -> Counter:
    counts = Counter()
    for doc in docs:
        counts.update(doc.tokens)
    return counts


def merge_counts(parts: Iterable[Counter]) -> Counter:
    """Additive, order-independent merge of sharded token counts."""
    total = Counter()
    for part in parts:
        total.update(part)
    return total


def occurrence_ranks(counts: Counter) -> dict[str, int]:
    """1-based rank by descending count; ties broken by token for determinism."""
    ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return {tok: rank for rank, (tok, _) in enumerate(ordered, start=1)}


def batch_odds_ratios(
    corpus_i: Iterable[Document] | Counter,
    corpus_j: Iterable[Document] | Counter,
    min_count: int = DEFAULT_MIN_COUNT,
    tokens: Sequence[str] | None = None,
    yates: bool = True,
) -> list[OddsRatioResult]:
    """Odds ratios for every sufficiently frequent token, ascending by ratio.

    With an explicit ``tokens`` list, exactly those tokens are reported and
    ``min_count`` is ignored. Tokens absent from corpus ``j`` get
    ``ratio=None`` and sort last.
    """
    counts_i = corpus_i if isinstance(corpus_i, Counter) else count_tokens(corpus_i)
    counts_j = corpus_j if isinstance(corpus_j, Counter) else count_tokens(corpus_j)
    size_i, size_j = sum(counts_i.values()), sum(counts_j.values())
    if size_i == 0 or size_j == 0:
        raise ValueError("both corpora must contain tokens")

    if tokens is None:
        vocab = [t for t in counts_i.keys() | counts_j.keys()
                 if max(counts_i[t], counts_j[t]) >= min_count]
    else:
        vocab = list(dict.fromkeys(tokens))

    ranks_i, ranks_j = occurrence_ranks(counts_i), occurrence_ranks(counts_j)
    results = [
        _odds_ratio(
            TokenCounts(t, counts_i[t], counts_j[t], size_i, size_j),
            yates,
            ranks_i.get(t),
            ranks_j.get(t),
        )
        for t in vocab
    ]
    results.sort(key=lambda r: (r.ratio is None, r.ratio if r.ratio is not None else 0.0, r.token))
    return results


@dataclass(frozen=True)
class CorpusReport:
    total_articles: int
    original_sentences: int
    simple_sentences: int
    original_words: int
    simple_words: int

    @property
    def avg_words_per_article(self) -> tuple[float, float]:
        n = self.total_articles
        return self.original_words / n, self.simple_words / n

    @property
    def avg_words_per_sentence(self) -> tuple[float, float]:
        return (
            self.original_words / self.original_sentences if self.original_sentences else 0.0,
            self.simple_words / self.simple_sentences if self.simple_sentences else 0.0,
        )

    @property
    def article_compression_ratio(self) -> float:
        orig, simple = self.avg_words_per_article
        return simple / orig if orig else float("nan")

    @property
    def sentence_compression_ratio(self) -> float:
        orig, simple = self.avg_words_per_sentence
        return simple / orig if orig else float("nan")

    def rows(self) -> list[tuple[str, str, str]]:
        """(label, original, simple) rows in the layout of the usual statistics table."""
        awa, aws = self.avg_words_per_article, self.avg_words_per_sentence
        return [
            ("Total articles", f"{self.total_articles:,}", f"{self.total_articles:,}"),
            ("Total sentences", f"{self.original_sentences:,}", f"{self.simple_sentences:,}"),
            ("Total words", f"{self.original_words:,}", f"{self.simple_words:,}"),
            ("Avg words per article", f"{awa[0]:.2f}", f"{awa[1]:.2f}"),
            ("-Compression ratio", "", f"{self.article_compression_ratio:.2f}"),
            ("Avg words per sent", f"{aws[0]:.2f}", f"{aws[1]:.2f}"),
            ("-Compression ratio", "", f"{self.sentence_compression_ratio:.2f}"),
        ]

    def to_dict(self) -> dict:
        awa, aws = self.avg_words_per_article, self.avg_words_per_sentence
        return {
            "total_articles": self.total_articles,
            "total_sentences": {"original": self.original_sentences, "simple": self.simple_sentences},
            "total_words": {"original": self.original_words, "simple": self.simple_words},
            "avg_words_per_article": {"original": awa[0], "simple": awa[1]},
            "avg_words_per_sentence": {"original": aws[0], "simple": aws[1]},
            "article_compression_ratio": self.article_compression_ratio,
            "sentence_compression_ratio": self.sentence_compression_ratio,
        }


def corpus_statistics(pairs: Iterable) -> CorpusReport:
    """Totals and averages over aligned ``(original, simple)`` pairs.

    Accepts plain 2-tuples of :class:`Document` or objects with ``original``
    and ``simple`` attributes. Words are tokens, punctuation included.
    """
    n = o_sents = s_sents = o_words = s_words = 0
    for pair in pairs:
        original, simple = (pair.original, pair.simple) if hasattr(pair, "original") else pair
        n += 1
        o_sents += original.n_sentences
        s_sents += simple.n_sentences
        o_words += len(original)
        s_words += len(simple)
    if n == 0:
        raise ValueError("no article pairs")
    return CorpusReport(n, o_sents, s_sents, o_words, s_words)


def average_ranks(values: Sequence[float]) -> np.ndarray:
    """Ranks 1..n with ties assigned the mean of the positions they span."""
    values = np.asarray(values, dtype=float)
    order = np.argsort(values, kind="mergesort")
    ranks = np.empty(len(values))
    sorted_vals = values[order]
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and sorted_vals[j + 1] == sorted_vals[i]:
            j += 1
        ranks[order[i:j + 1]] = (i + j) / 2 + 1
        i = j + 1
    return ranks


def spearman(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Spearman's rho: Pearson correlation of average-tie ranks."""
    if len(xs) != len(ys):
        raise LengthMismatch(f"sequences differ in length ({len(xs)} vs {len(ys)})")
    if len(xs) < 3:
        raise DegenerateInput("need at least 3 paired observations")
    rx, ry = average_ranks(xs), average_ranks(ys)
    dx, dy = rx - rx.mean(), ry - ry.mean()
    sxx, syy = float(dx @ dx), float(dy @ dy)
    if sxx == 0 or syy == 0:
        raise DegenerateInput("a sequence is constant")
    rho = float(dx @ dy) / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, rho))
