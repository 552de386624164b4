"""BLEU and FKGL on the Marengo outputs, next to D-SARI."""
# %%
from simpeval import EvalTriple, compute_bleu, compute_dsari, compute_fkgl, tokenize

original = (
    "marengo is a town in and the county seat of iowa county , iowa , united states . "
    "it has served as the county seat since august 1845 , even though it was not "
    "incorporated until july 1859 . the population was 2,528 in the 2010 census , "
    "a decline from 2,535 in 2000 ."
)
reference = "marengo is a city in iowa in the US . the population was 2,528 in 2010 ."
outputs = {
    "copy": original,
    "fragment": "in the US . 2,528 in 2010 .",
    "reference": reference,
}

# %%
# BLEU only looks at the reference, FKGL only at the output itself.
ref_doc = tokenize(reference)
for name, text in outputs.items():
    out = tokenize(text)
    bleu = compute_bleu(out, ref_doc)
    smoothed = compute_bleu(out, ref_doc, smoothing=True)
    fkgl = compute_fkgl(out)
    d = compute_dsari(EvalTriple.from_text(original, text, reference))
    print(f"{name:>9}  bleu={bleu.score:6.2f} (smoothed {smoothed.score:6.2f})  "
          f"bp={bleu.brevity_penalty:.3f}  fkgl={fkgl.fkgl:5.2f}  d_sari={d.d_sari:6.2f}")

# %%
# The fragment is the "easiest" text by FKGL, which is why a readability grade
# on its own says little about simplification quality.
counts = compute_fkgl(tokenize(original))
print("original:", counts.words, "words,", counts.sentences, "sentences,", counts.syllables, "syllables")
