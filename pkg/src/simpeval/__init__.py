"""Evaluation tools for document-level text simplification."""

__version__ = "0.1.0"

from .corpusstats import (
    CorpusReport,
    OddsRatioResult,
    TokenCounts,
    batch_odds_ratios,
    corpus_statistics,
    odds_ratio,
    spearman,
)
from .dataset import ArticlePair, DatasetSplit, filter_by_length, load_pairs, split_dataset
from .dsari import DsariComponents, LengthProfile, compute_dsari, dsari_score, lp1, lp2, slp
from .refmetrics import BleuScore, ReadabilityScore, compute_bleu, compute_fkgl, count_syllables
from .sari import EvalTriple, SariComponents, compute_sari
from .textcore import Document, NGramMultiset, ngrams, segment_sentences, tokenize, word_count

__all__ = [
    "ArticlePair", "BleuScore", "CorpusReport", "DatasetSplit", "Document",
    "DsariComponents", "EvalTriple", "LengthProfile", "NGramMultiset", "OddsRatioResult",
    "ReadabilityScore", "SariComponents", "TokenCounts", "batch_odds_ratios",
    "compute_bleu", "compute_dsari", "compute_fkgl", "compute_sari", "corpus_statistics",
    "count_syllables", "dsari_score", "filter_by_length", "load_pairs", "lp1", "lp2",
    "ngrams", "odds_ratio", "segment_sentences", "slp", "spearman", "split_dataset",
    "tokenize", "word_count",
]
