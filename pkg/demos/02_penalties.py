"""How the three length penalties respond to output length and sentence count."""
# %%
import numpy as np

from simpeval import lp1, lp2, slp

# A 55-word input with a 17-word, 2-sentence reference.
I, R, R_S = 55, 17, 2

lengths = np.arange(1, 56)
lp1_curve = np.array([lp1(o, R) for o in lengths])
lp2_curve = np.array([lp2(I, o, R) for o in lengths])

for o in (4, 8, 12, 17, 25, 35, 44, 55):
    print(f"O={o:>2}  lp1={lp1_curve[o - 1]:.4f}  lp2={lp2_curve[o - 1]:.4f}")

# %%
# Only one of the two word penalties is active for a given output length:
# LP1 below the reference length, LP2 above it.
assert np.all((lp1_curve == 1) | (lp2_curve == 1))

# %%
for o_s in range(1, 7):
    print(f"O_S={o_s}  slp={slp(o_s, R_S):.4f}")
