"""Scoring four simplifications of one Wikipedia article with SARI and D-SARI.

Run with ``python demos/01_worked_example.py``.
"""
# %%
from simpeval import EvalTriple, compute_dsari
from simpeval.dsari import LengthProfile

original = (
    'marengo is a town in and the county seat of iowa county , iowa , united states . it '
    'has served as the county seat since august 1845 , even though it was not '
    'incorporated until july 1859 . the population was 2,528 in the 2010 census , a '
    'decline from 2,535 in 2000 .'
)
reference = 'marengo is a city in iowa in the US . the population was 2,528 in 2010 .'

# Four candidate simplifications: a short fragment, two outputs that keep
# far more words and sentences than the reference, and one close to it.
outputs = [
    (
        'in the US . 2,528 in 2010 .'
    ),
    (
        'marengo is a city in iowa , the US . it has served as the county seat since august '
        '1845 , even though it was not incorporated . the population was 2,528 in the 2010 '
        'census , a decline from 2,535 in 2010 .'
    ),
    (
        'marengo is a town in iowa . marengo is a town in the US . in the US . the population'
        ' was 2,528 . the population in the 2010 census .'
    ),
    (
        'marengo is a town in iowa , united states . in 2010 , the population was 2,528 .'
    ),
]

# %%
profile = LengthProfile.from_triple(EvalTriple.from_text(original, outputs[0], reference))
print("input words", profile.input_words, "reference words", profile.reference_words,
      "reference sentences", profile.reference_sentences)

print(f"{'':>3} {'words':>5} {'sents':>5} {'sari':>6} {'d_sari':>6} "
      f"{'lp1':>6} {'lp2':>6} {'slp':>6}")
for k, output in enumerate(outputs, 1):
    d = compute_dsari(EvalTriple.from_text(original, output, reference))
    p = d.profile
    print(f"{k:>3} {p.output_words:>5} {p.output_sentences:>5} {d.sari.sari:6.2f} {d.d_sari:6.2f} "
          f"{d.lp1:6.3f} {d.lp2:6.3f} {d.slp:6.3f}")

# %%
# SARI ranks article 4 last even though its length and sentence count match
# the reference best.  LP1 shrinks the add score of the short fragment, LP2
# shrinks keep and delete for the long outputs, and SLP shrinks keep when the
# sentence count is off.  Under D-SARI article 4 comes out on top.
