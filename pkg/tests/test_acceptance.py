"""Acceptance criteria, one marked group per criterion.

The terminal summary prints a PASS/FAIL/SKIP line per criterion number.
Criterion 5 needs the released D-Wikipedia article files; point
SIMPEVAL_DWIKI_DIR at a directory holding aligned ``*.src``/``*.tgt`` files.
"""
import json
import math
import os
import random
import time
from itertools import permutations
from pathlib import Path

import pytest

from simpeval.cli import main
from simpeval.corpusstats import TokenCounts, odds_ratio, spearman
from simpeval.dataset import seeded_permutation, split_dataset
from simpeval.dsari import LengthProfile, apply_penalties, lp1, lp2, slp
from simpeval.refmetrics import compute_bleu, corpus_bleu
from simpeval.sari import EvalTriple, compute_sari
from simpeval.textcore import Document, segment_sentences, tokenize

from conftest import load_fixture
from worked_example import COLUMNS, ORIGINAL, OUTPUTS, REFERENCE, TABLE, TABLE_TOL


def _write(path, lines):
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    return str(path)


# criterion 1

@pytest.mark.criterion(1, "worked table reproduced by the evaluate command")
@pytest.mark.parametrize("k", range(4))
def test_worked_table_via_cli(k, tmp_path, capsys):
    files = (
        _write(tmp_path / "input.txt", [ORIGINAL]),
        _write(tmp_path / "system.txt", [OUTPUTS[k]]),
        _write(tmp_path / "reference.txt", [REFERENCE]),
    )
    start = time.perf_counter()
    assert main(["evaluate", *files, "--metrics", "sari,dsari", "--no-timestamp"]) == 0
    elapsed = time.perf_counter() - start
    record = json.loads(capsys.readouterr().out)["per_pair"][0]
    got = {
        "sari": record["sari"]["sari"],
        "f_keep": record["sari"]["f_keep"],
        "p_del": record["sari"]["p_del"],
        "f_add": record["sari"]["f_add"],
        **{key: record["dsari"][key] for key in ("d_sari", "d_keep", "d_del", "d_add")},
    }
    for column, expected in zip(COLUMNS, TABLE[k]):
        assert got[column] == pytest.approx(expected, abs=TABLE_TOL), column
    assert elapsed < 1.0


# criterion 2

@pytest.mark.criterion(2, "penalty factor point checks")
def test_penalty_points():
    assert lp1(8, 17) == pytest.approx(0.3247, abs=1e-3)
    assert lp2(55, 44, 17) == pytest.approx(0.4914, abs=1e-3)
    assert slp(3, 2) == pytest.approx(0.7165, abs=1e-3)


# criterion 3

VOCAB = ["a", "b", "c", "d", "e", "the", "of", "x", "y", "z", ".", "."]


def _random_doc(rng, lo=1, hi=40):
    return [rng.choice(VOCAB) for _ in range(rng.randint(lo, hi))]


def _random_triples(seed, n):
    rng = random.Random(seed)
    for _ in range(n):
        src = _random_doc(rng)
        ref = _random_doc(rng)
        roll = rng.random()
        if roll < 0.1:
            out = list(ref)
        elif roll < 0.2:
            out = list(src)
        elif roll < 0.25:
            out = []
        else:
            out = _random_doc(rng)
        yield EvalTriple(Document(src), Document(out), Document(ref))


@pytest.fixture(scope="module")
def random_triples():
    return list(_random_triples(7, 1200))


@pytest.mark.criterion(3, "property suite on randomized inputs")
def test_dsari_properties(random_triples):
    start = time.perf_counter()
    collapsed = 0
    for triple in random_triples:
        s = compute_sari(triple)
        profile = LengthProfile.from_triple(triple)
        d = apply_penalties(s, profile)
        assert d.d_sari <= s.sari + 1e-9
        assert d.d_keep <= s.f_keep + 1e-9 and d.d_del <= s.p_del + 1e-9 and d.d_add <= s.f_add + 1e-9
        for value in (s.sari, s.f_keep, s.p_del, s.f_add, d.d_sari, d.d_keep, d.d_del, d.d_add):
            assert 0 <= value <= 100
        assert 0 < d.lp2 <= 1 and 0 < d.slp <= 1
        assert 0 <= d.lp1 <= 1
        if profile.output_words:
            assert d.lp1 > 0
        if (profile.output_words == profile.reference_words
                and profile.output_sentences == profile.reference_sentences):
            collapsed += 1
            assert (d.d_keep, d.d_del, d.d_add) == (s.f_keep, s.p_del, s.f_add)
            assert d.d_sari == pytest.approx(s.sari, abs=1e-12)
    assert collapsed >= 100
    assert time.perf_counter() - start < 10


@pytest.mark.criterion(3, "property suite on randomized inputs")
def test_penalty_monotonicity():
    rng = random.Random(11)
    for _ in range(2000):
        ref = rng.randint(1, 300)
        o1, o2 = sorted(rng.randint(1, 600) for _ in range(2))
        assert lp1(o1, ref) <= lp1(o2, ref)
        inp = rng.randint(1, 600)
        assert lp2(inp, o1, ref) >= lp2(inp, o2, ref)
        r1, r2 = sorted(rng.randint(1, 300) for _ in range(2))
        assert lp1(o2, r1) >= lp1(o2, r2)
        a, b = rng.randint(0, 20), rng.randint(0, 20)
        if a or b:
            assert slp(a, b) == slp(b, a) and 0 < slp(a, b) <= 1
            if a > b:
                assert slp(a + 1, b) <= slp(a, b)


@pytest.mark.criterion(3, "property suite on randomized inputs")
def test_segmentation_partition():
    rng = random.Random(3)
    for _ in range(1000):
        tokens = [rng.choice(["w", "v", ".", "!", "?", "..."]) for _ in range(rng.randint(0, 30))]
        spans = segment_sentences(tokens)
        covered = [i for start, stop in spans for i in range(start, stop)]
        assert covered == list(range(len(tokens)))
        assert all(stop > start for start, stop in spans)
        terminals = sum(t in {".", "!", "?"} for t in tokens)
        tail = bool(tokens) and tokens[-1] not in {".", "!", "?"}
        assert len(spans) == terminals + tail


@pytest.mark.criterion(3, "property suite on randomized inputs")
def test_split_partition_and_determinism():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(0, 200)
        ids = rng.sample(range(10 * n + 1), n)
        sizes = sorted(rng.randint(0, n) for _ in range(2))
        train_n, valid_n = sizes[0], sizes[1] - sizes[0]
        test_n = rng.randint(0, n - sizes[1])
        seed = rng.randrange(2**32)
        split = split_dataset(ids, train_n, valid_n, test_n, seed)
        assert split.train | split.valid | split.test == set(ids)
        assert not (split.train & split.valid or split.train & split.test or split.valid & split.test)
        assert (len(split.valid), len(split.test)) == (valid_n, test_n)
        assert len(split.train) == n - valid_n - test_n
        assert split_dataset(list(reversed(ids)), train_n, valid_n, test_n, seed) == split
    assert seeded_permutation(range(50), 1) == seeded_permutation(range(50), 1)
    assert seeded_permutation(range(50), 1) != seeded_permutation(range(50), 2)


@pytest.mark.criterion(3, "property suite on randomized inputs")
def test_spearman_bounds_and_invariance():
    rng = random.Random(9)
    checked = 0
    while checked < 500:
        n = rng.randint(3, 30)
        xs = [rng.randint(-10, 10) for _ in range(n)]
        ys = [rng.randint(-10, 10) for _ in range(n)]
        if len(set(xs)) < 2 or len(set(ys)) < 2:
            continue
        rho = spearman(xs, ys)
        assert -1 - 1e-12 <= rho <= 1 + 1e-12
        transformed = [x**3 + 5 * x + 100 for x in xs]
        assert spearman(transformed, ys) == pytest.approx(rho, abs=1e-12)
        assert spearman([-x for x in xs], ys) == pytest.approx(-rho, abs=1e-12)
        checked += 1
    for perm in permutations(range(5)):
        assert -1 <= spearman(range(5), perm) <= 1


@pytest.mark.criterion(3, "property suite on randomized inputs")
def test_odds_ratio_reciprocity():
    rng = random.Random(13)
    for _ in range(300):
        size_i, size_j = rng.randint(1, 10**6), rng.randint(1, 10**6)
        counts = TokenCounts("w", rng.randint(1, size_i), rng.randint(1, size_j), size_i, size_j)
        forward, backward = odds_ratio(counts), odds_ratio(counts.swapped())
        assert forward.ratio * backward.ratio == pytest.approx(1.0, rel=1e-12)
        assert forward.p_value == pytest.approx(backward.p_value, rel=1e-9, abs=1e-300)


# criterion 4

@pytest.mark.criterion(4, "oracle equivalence for SARI and BLEU")
def test_sari_oracle():
    cases = load_fixture("sari_oracle.json")
    assert len(cases) >= 100
    for case in cases:
        s = compute_sari(EvalTriple.from_text(case["source"], case["output"], case["reference"]))
        assert s.f_keep / 100 == pytest.approx(case["keep"], abs=1e-6)
        assert s.p_del / 100 == pytest.approx(case["del"], abs=1e-6)
        assert s.f_add / 100 == pytest.approx(case["add"], abs=1e-6)
        assert s.sari / 100 == pytest.approx(case["sari"], abs=1e-6)


@pytest.mark.criterion(4, "oracle equivalence for SARI and BLEU")
def test_bleu_oracle():
    fixture = load_fixture("bleu_oracle.json")
    assert len(fixture["sentence"]) >= 100
    for case in fixture["sentence"]:
        hyp, ref = tokenize(case["hypothesis"]), tokenize(case["reference"])
        assert compute_bleu(hyp, ref).score / 100 == pytest.approx(case["bleu"], abs=1e-6)
        assert compute_bleu(hyp, ref, smoothing=True).score / 100 == pytest.approx(
            case["bleu_smoothed"], abs=1e-6)
    for case in fixture["corpus"]:
        pairs = [(tokenize(h), tokenize(r)) for h, r in case["pairs"]]
        assert corpus_bleu(pairs).score / 100 == pytest.approx(case["bleu"], abs=1e-6)
        assert corpus_bleu(pairs, smoothing=True).score / 100 == pytest.approx(
            case["bleu_smoothed"], abs=1e-6)


# criterion 5

DWIKI = os.environ.get("SIMPEVAL_DWIKI_DIR")
needs_dwiki = pytest.mark.skipif(
    not DWIKI, reason="D-Wikipedia files not available; set SIMPEVAL_DWIKI_DIR")


@pytest.fixture(scope="module")
def dwiki_files(tmp_path_factory):
    root = Path(DWIKI)
    sources = sorted(root.glob("*.src"))
    if not sources:
        pytest.skip(f"no *.src files under {root}")
    if len(sources) == 1:
        return str(sources[0]), str(sources[0].with_suffix(".tgt"))
    out = tmp_path_factory.mktemp("dwiki")
    orig, simple = out / "all.src", out / "all.tgt"
    with orig.open("wb") as fo, simple.open("wb") as fs:
        for src in sources:
            fo.write(src.read_bytes())
            fs.write(src.with_suffix(".tgt").read_bytes())
    return str(orig), str(simple)


@needs_dwiki
@pytest.mark.criterion(5, "corpus statistics and odds ratios on D-Wikipedia")
def test_dwiki_stats(dwiki_files, capsys):
    assert main(["stats", *dwiki_files]) == 0
    report = json.loads(capsys.readouterr().out)
    expected = [
        (report["avg_words_per_article"]["original"], 141.76),
        (report["avg_words_per_article"]["simple"], 78.62),
        (report["article_compression_ratio"], 0.55),
        (report["avg_words_per_sentence"]["original"], 28.76),
        (report["avg_words_per_sentence"]["simple"], 19.41),
        (report["sentence_compression_ratio"], 0.67),
    ]
    for got, want in expected:
        assert got == pytest.approx(want, rel=0.02)


ODDS = {
    "population": (0.49, 0), "including": (0.49, 0), "located": (0.38, 0), "metropolitan": (0.32, 0),
    "although": (0.41, 0), "though": (0.68, 0), "since": (0.74, 0), "as": (0.64, 0),
    "and": (0.78, 0), "or": (0.93, 0), "but": (1.02, 0.04),
    "still": (1.23, 0), "then": (1.18, 0), "also": (1.12, 0), "however": (0.76, 0),
}


@needs_dwiki
@pytest.mark.criterion(5, "corpus statistics and odds ratios on D-Wikipedia")
def test_dwiki_odds_ratios(dwiki_files, capsys):
    original, simple = dwiki_files
    assert main(["odds-ratio", simple, original, "--tokens", ",".join(ODDS)]) == 0
    results = {r["token"]: r for r in json.loads(capsys.readouterr().out)["results"]}
    for token, (ratio, p_value) in ODDS.items():
        assert results[token]["ratio"] == pytest.approx(ratio, abs=0.05), token
        if p_value == 0:
            assert results[token]["p_value"] < 0.01, token


# criterion 6

@pytest.mark.criterion(6, "model training and human-rating tables")
def test_not_reproducible_at_desk_scale():
    pytest.skip("needs trained simplification models and unreleased human ratings; "
                "covered by criteria 3 and 4")
