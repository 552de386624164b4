"""Whitespace tokenization, sentence segmentation and n-gram multisets.

Input text is assumed to be pre-tokenized: tokens are maximal runs of
non-whitespace characters, so punctuation must already be split off
(``"iowa , united states ."``). A sentence closes immediately after a
standalone ``"."``, ``"!"`` or ``"?"`` token; abbreviations are not special
cased. This rule was recovered from the sentence counts needed to reproduce
the published D-SARI worked example and is the only segmentation the
metrics use.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

SENTENCE_TERMINALS = frozenset({".", "!", "?"})

Span = tuple[int, int]


def segment_sentences(tokens: Sequence[str]) -> tuple[Span, ...]:
    """Split ``tokens`` into half-open ``(start, stop)`` sentence spans.

    Trailing tokens after the last terminal form a final sentence.
    """
    spans = []
    start = 0
    for i, tok in enumerate(tokens):
        if tok in SENTENCE_TERMINALS:
            spans.append((start, i + 1))
            start = i + 1
    if start < len(tokens):
        spans.append((start, len(tokens)))
    return tuple(spans)


@dataclass(frozen=True)
class Document:
    """A tokenized article with derived sentence boundaries."""

    tokens: tuple[str, ...]
    sentences: tuple[Span, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        object.__setattr__(self, "sentences", segment_sentences(self.tokens))

    def __len__(self):
        return len(self.tokens)

    @property
    def n_sentences(self) -> int:
        return len(self.sentences)

    def sentence_tokens(self) -> list[tuple[str, ...]]:
        return [self.tokens[a:b] for a, b in self.sentences]

    def text(self) -> str:
        """Canonical single-space serialization."""
        return " ".join(self.tokens)


def tokenize(text: str, lowercase: bool = False) -> Document:
    if lowercase:
        text = text.lower()
    return Document(tuple(text.split()))


def word_count(doc: Document) -> int:
    """Number of tokens, punctuation included (the D-SARI length basis)."""
    return len(doc.tokens)


@dataclass(frozen=True)
class NGramMultiset:
    """Multiset of contiguous n-token windows."""

    order: int
    counts: Mapping[tuple[str, ...], int]

    def __len__(self):
        return len(self.counts)

    def __contains__(self, gram):
        return gram in self.counts

    def __getitem__(self, gram):
        return self.counts.get(gram, 0)

    def __iter__(self):
        return iter(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def counter(self) -> Counter:
        return Counter(self.counts)


def ngrams(tokens: Sequence[str], n: int) -> NGramMultiset:
    if n < 1:
        raise ValueError(f"n-gram order must be >= 1, got {n}")
    tokens = tuple(tokens)
    windows: Iterable[tuple[str, ...]] = (
        tokens[i:i + n] for i in range(len(tokens) - n + 1)
    )
    return NGramMultiset(n, Counter(windows))
