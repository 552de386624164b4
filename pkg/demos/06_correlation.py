"""Spearman correlation between automatic scores and (simulated) human ratings.

Human ratings are not available here, so a noisy monotone function of a
hidden quality score stands in for them.
"""
# %%
import numpy as np
from scipy import stats

from simpeval import spearman

rng = np.random.default_rng(1)
quality = rng.uniform(0, 1, 60)
ratings = np.clip(np.round(1 + 4 * quality + rng.normal(0, 0.6, 60)), 1, 5)  # 1-5 Likert, many ties
metric_good = 100 * quality + rng.normal(0, 8, 60)
metric_poor = 100 * rng.uniform(0, 1, 60)

for name, scores in (("good metric", metric_good), ("unrelated metric", metric_poor)):
    print(f"{name:<17} rho={spearman(scores, ratings):+.3f}")

# %%
# Ties get average ranks, which matches scipy.
print(spearman(metric_good, ratings), stats.spearmanr(metric_good, ratings).statistic)

# %%
# Only the ordering matters: any strictly increasing transform leaves rho unchanged.
print(spearman(np.exp(metric_good / 20), ratings))
