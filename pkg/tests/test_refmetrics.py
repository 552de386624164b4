import pytest
from hypothesis import given, strategies as st

from simpeval.errors import EmptyDocument, EmptyReference
from simpeval.refmetrics import (
    compute_bleu,
    compute_fkgl,
    corpus_bleu,
    count_syllables,
    fkgl_from_counts,
)
from simpeval.textcore import Document, tokenize

from conftest import load_fixture

VOCAB = ["a", "b", "c", "d", "e", "."]
SEQ = st.lists(st.sampled_from(VOCAB), min_size=1, max_size=30)

# The textstat/CMUdict oracle counts this article's "india", "indian" and
# "-ia" words as one syllable more than the vowel-group heuristic does.
FKGL_KNOWN_MISS = {"atal bihari vajpayee"}


def test_bleu_identity():
    doc = tokenize("the cat sat on the mat .")
    b = compute_bleu(doc, doc)
    assert b.score == pytest.approx(100)
    assert b.precisions == (1, 1, 1, 1)
    assert b.brevity_penalty == 1


def test_bleu_disjoint():
    assert compute_bleu(tokenize("x y z w"), tokenize("a b c d")).score == 0


def test_bleu_short_example_matches_oracle():
    case = load_fixture("bleu_oracle.json")["sentence"][0]
    assert case["hypothesis"] == "the cat sat ."
    b = compute_bleu(tokenize(case["hypothesis"]), tokenize(case["reference"]))
    assert b.score / 100 == pytest.approx(case["bleu"], abs=1e-6)
    assert b.precisions == pytest.approx((1, 2 / 3, 1 / 2, 0))
    assert b.brevity_penalty == pytest.approx(0.7788007830714049)
    smoothed = compute_bleu(tokenize(case["hypothesis"]), tokenize(case["reference"]), smoothing=True)
    assert smoothed.score / 100 == pytest.approx(case["bleu_smoothed"], abs=1e-6)


def test_bleu_sentence_fixtures():
    for case in load_fixture("bleu_oracle.json")["sentence"]:
        hyp, ref = tokenize(case["hypothesis"]), tokenize(case["reference"])
        assert compute_bleu(hyp, ref).score / 100 == pytest.approx(case["bleu"], abs=1e-6)
        assert compute_bleu(hyp, ref, True).score / 100 == pytest.approx(case["bleu_smoothed"], abs=1e-6)


def test_bleu_corpus_fixtures():
    for case in load_fixture("bleu_oracle.json")["corpus"]:
        pairs = [(tokenize(h), tokenize(r)) for h, r in case["pairs"]]
        assert corpus_bleu(pairs).score / 100 == pytest.approx(case["bleu"], abs=1e-6)
        assert corpus_bleu(pairs, True).score / 100 == pytest.approx(case["bleu_smoothed"], abs=1e-6)


def test_bleu_empty_reference():
    with pytest.raises(EmptyReference):
        compute_bleu(tokenize("a b"), Document(()))


@given(SEQ, SEQ)
def test_bleu_range(hyp, ref):
    b = compute_bleu(Document(hyp), Document(ref))
    assert 0 <= b.score <= 100 + 1e-9


@given(st.lists(st.sampled_from(VOCAB), min_size=4, max_size=30))
def test_bleu_self_is_100(tokens):
    assert compute_bleu(Document(tokens), Document(tokens)).score == pytest.approx(100)


@given(SEQ, SEQ, st.permutations(VOCAB))
def test_bleu_renaming_invariance(hyp, ref, perm):
    rename = dict(zip(VOCAB, perm))
    a = compute_bleu(Document(hyp), Document(ref)).score
    b = compute_bleu(Document([rename[t] for t in hyp]), Document([rename[t] for t in ref])).score
    assert a == pytest.approx(b)


@pytest.mark.parametrize("word, expected", [
    ("cat", 1), ("population", 4), ("there", 1), ("the", 1), ("2,528", 1), (",", 1), ("iowa", 2),
])
def test_count_syllables(word, expected):
    assert count_syllables(word) == expected


@given(st.text(max_size=20))
def test_count_syllables_positive(word):
    assert count_syllables(word) >= 1


def test_fkgl_closed_form():
    r = compute_fkgl(tokenize("the cat sat on the mat ."))
    assert (r.words, r.sentences, r.syllables) == (6, 1, 6)
    assert r.fkgl == pytest.approx(-1.45)


def test_fkgl_long_monosyllabic_sentence():
    r = compute_fkgl(tokenize(" ".join(["cat"] * 30) + " ."))
    assert r.fkgl == pytest.approx(7.91)


def test_fkgl_empty():
    with pytest.raises(EmptyDocument):
        compute_fkgl(tokenize(""))
    with pytest.raises(EmptyDocument):
        compute_fkgl(tokenize(". , !"))


def _fkgl_cases():
    for case in load_fixture("fkgl_oracle.json"):
        marks = []
        if any(case["text"].startswith(p) for p in FKGL_KNOWN_MISS):
            marks.append(pytest.mark.xfail(strict=True, reason="heuristic undercounts -ia words"))
        yield pytest.param(case, id=case["text"][:20], marks=marks)


@pytest.mark.parametrize("case", list(_fkgl_cases()))
def test_fkgl_against_readability_oracle(case):
    assert compute_fkgl(tokenize(case["text"])).fkgl == pytest.approx(case["fkgl"], abs=0.5)


@given(st.integers(1, 200), st.integers(1, 20), st.integers(1, 400))
def test_fkgl_increasing(words, sentences, syllables):
    base = fkgl_from_counts(words, sentences, syllables)
    assert fkgl_from_counts(words, sentences, syllables + 1) > base
    if sentences > 1:
        assert fkgl_from_counts(words, sentences - 1, syllables) > base
