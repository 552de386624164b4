"""D-SARI: SARI components scaled by length and sentence-count penalties.

With I, O, R the word counts (punctuation included) of input, output and
reference, and O_S, R_S the output and reference sentence counts::

    LP1 = 1                         if O >= R else exp((O - R) / O)
    LP2 = 1                         if O <= R else exp((R - O) / max(I - R, 1))
    SLP = exp(-|R_S - O_S| / max(R_S, O_S))

    D_keep = F_keep * LP2 * SLP
    D_del  = P_del  * LP2
    D_add  = F_add  * LP1
    D-SARI = (D_keep + D_del + D_add) / 3

An empty output gets LP1 = 0, the limit of the formula as O -> 0+.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .sari import EvalTriple, SariComponents, compute_sari
from .textcore import Document, word_count


@dataclass(frozen=True)
class LengthProfile:
    input_words: int
    output_words: int
    reference_words: int
    output_sentences: int
    reference_sentences: int

    @classmethod
    def from_triple(cls, triple: EvalTriple) -> "LengthProfile":
        return cls(
            input_words=word_count(triple.source),
            output_words=word_count(triple.output),
            reference_words=word_count(triple.reference),
            output_sentences=triple.output.n_sentences,
            reference_sentences=triple.reference.n_sentences,
        )


@dataclass(frozen=True)
class DsariComponents:
    lp1: float
    lp2: float
    slp: float
    d_keep: float
    d_del: float
    d_add: float
    d_sari: float = field(init=False)
    sari: SariComponents | None = field(default=None, compare=False)
    profile: LengthProfile | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "d_sari", (self.d_keep + self.d_del + self.d_add) / 3)


def lp1(output_words: int, reference_words: int) -> float:
    """Penalty on the add score for outputs shorter than the reference."""
    if output_words >= reference_words:
        return 1.0
    if output_words <= 0:
        return 0.0
    return math.exp((output_words - reference_words) / output_words)


def lp2(input_words: int, output_words: int, reference_words: int) -> float:
    """Penalty on keep and delete for outputs longer than the reference."""
    if output_words <= reference_words:
        return 1.0
    return math.exp((reference_words - output_words) / max(input_words - reference_words, 1))


def slp(output_sentences: int, reference_sentences: int) -> float:
    longest = max(output_sentences, reference_sentences)
    if longest < 1:
        raise ValueError("sentence penalty needs at least one sentence on either side")
    return math.exp(-abs(reference_sentences - output_sentences) / longest)


def apply_penalties(components: SariComponents, profile: LengthProfile) -> DsariComponents:
    p1 = lp1(profile.output_words, profile.reference_words)
    p2 = lp2(profile.input_words, profile.output_words, profile.reference_words)
    ps = slp(profile.output_sentences, profile.reference_sentences)
    return DsariComponents(
        lp1=p1,
        lp2=p2,
        slp=ps,
        d_keep=components.f_keep * p2 * ps,
        d_del=components.p_del * p2,
        d_add=components.f_add * p1,
        sari=components,
        profile=profile,
    )


def compute_dsari(triple: EvalTriple) -> DsariComponents:
    return apply_penalties(compute_sari(triple), LengthProfile.from_triple(triple))


def dsari_score(source: str, output: str, reference: str, lowercase: bool = False) -> float:
    """D-SARI of raw pre-tokenized strings, on the 0-100 scale."""
    return compute_dsari(EvalTriple.from_text(source, output, reference, lowercase)).d_sari


def corpus_dsari(triples: Iterable[EvalTriple]) -> float:
    """Unweighted mean of per-article D-SARI."""
    scores = [compute_dsari(t).d_sari for t in triples]
    if not scores:
        raise ValueError("no triples to evaluate")
    return math.fsum(scores) / len(scores)
