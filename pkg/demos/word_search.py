"""Exact and edit-distance word search over a decoded string.

    python demos/word_search.py
"""
from helixcipher import Dictionary, assemble_phrases, common_words, scan_exact, scan_reconstruction

d = Dictionary.from_words(["HO", "A", "SEA", "SEAL"])
text = "HOASEAL"
hits = scan_exact(text, d)
print(text, [(m.word, m.start) for m in hits])
for p in assemble_phrases(hits):
    print("phrase:", " ".join(p.words), "covering", p.span)

# a transposition, a swap, two substitutions, two extra letters, a missing letter
words = common_words(min_len=3)
for surface in ["REAML", "SEDN", "TWROH", "ADEEENOSINE", "ROTEN"]:
    target = Dictionary.from_words(words.words | {"ADENOSINE", "ROTTEN", "REALM"})
    best = sorted((m for m in scan_reconstruction(surface, target, budget=2) if m.surface == surface),
                  key=lambda m: (m.cost, m.word))
    for m in best[:3]:
        print(f"{surface:12} -> {m.word:10} cost {m.cost}  {m.ops_text()}")
