"""Corpus statistics and token odds ratios on a small synthetic parallel corpus.

The simple side is generated from the original side by dropping a clause
and splitting the remainder, so "although" becomes rarer and "also" more common.
"""
# %%
import numpy as np

from simpeval import batch_odds_ratios, corpus_statistics, odds_ratio, tokenize
from simpeval.corpusstats import TokenCounts

rng = np.random.default_rng(0)
nouns = ["river", "town", "county", "school", "church", "railway", "bridge", "mill"]
verbs = ["has", "built", "opened", "crossed", "served"]


def clause():
    return f"the {rng.choice(nouns)} {rng.choice(verbs)} the {rng.choice(nouns)}"


originals, simples = [], []
for _ in range(400):
    n = rng.integers(3, 7)
    orig = [f"{clause()} , although {clause()} , including {clause()} ." for _ in range(n)]
    simple = []
    for sentence in orig[: n - 1]:
        first, second, _ = sentence[:-2].split(" , ")
        simple.append(f"{first} .")
        if rng.random() < 0.5:
            cue = "also" if rng.random() < 0.7 else "although"
            simple.append(f"{second.replace('although', cue)} .")
    originals.append(" ".join(orig))
    simples.append(" ".join(simple))

pairs = [(tokenize(o), tokenize(s)) for o, s in zip(originals, simples)]

# %%
report = corpus_statistics(pairs)
for label, orig, simple in report.rows():
    print(f"{label:<24}{orig:>10}{simple:>10}")

# %%
# Odds ratios put the simple corpus in the numerator.
results = batch_odds_ratios((s for _, s in pairs), (o for o, _ in pairs),
                            tokens=["although", "including", "also", "the", "river"])
for r in results:
    ratio = "undefined" if r.ratio is None else f"{r.ratio:.3f}"
    print(f"{r.token:<10} {r.counts.count_i:>6} {r.counts.count_j:>6}  ratio={ratio:>9}  p={r.p_value:.3g}")

# %%
# Swapping the corpora inverts the ratio and leaves the test unchanged.
counts = TokenCounts("the", 120, 200, 10_000, 12_000)
forward, backward = odds_ratio(counts), odds_ratio(counts.swapped())
print(forward.ratio, backward.ratio, forward.ratio * backward.ratio)
print(forward.p_value, backward.p_value)
