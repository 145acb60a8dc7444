"""Rebuild the class space, the bundled frequency tables and the
substitution table from the shipped counts.

    python demos/reference_tables.py
"""
from helixcipher import build_mapping, enumerate_classes, load_fixture, permutation_count

classes = enumerate_classes(10, 8)
print(f"{len(classes)} composition classes for 10-base turns, no base above 8")
print(f"{sum(permutation_count(c) for c in classes)} ordered base-count tuples in total\n")

t4 = load_fixture("t4-classes")
printed = load_fixture("t4-permutations")
letters = load_fixture("english-letters")

print("class  turns  prob    perms  printed")
for key in t4.keys():
    flag = "  *" if printed[key] != permutation_count(key) else ""
    print(f"{key}   {t4[key]:5}  {t4.format_probability(key)}  {permutation_count(key):5}  {printed[key]:7}{flag}")
print(f"rows sum to {t4.total}\n")

mapping = build_mapping(t4, letters)
for key, letter in mapping.pairs:
    print(f"{key} -> {letter}  ({letters[letter]} letters, p={letters.format_probability(letter)})")
