"""Decode a synthetic genome end to end.

A random genome is built so that the 3183 turns ending at position 168900
carry a known class stream. The pipeline windows it, tallies the classes,
pairs them with the English letter table and emits the text. With a real
genome, pass its FASTA path as the first argument.

    python demos/decode_planted_genome.py [genome.fasta]
"""
import random
import sys

import numpy as np

from helixcipher import GenomeSequence, apply, build_mapping, class_stream, load_fixture, read_fasta
from helixcipher.pipeline import compare_variants, format_variant_report


def planted(seed=0):
    rng = random.Random(seed)
    counts = dict(load_fixture("t4-classes").counts)
    counts["1234"] += 1  # the shipped rows sum to 3182
    stream = [k for k, n in counts.items() for _ in range(n)]
    rng.shuffle(stream)
    body = []
    for key in reversed(stream):
        c = [int(x) for x in key]
        rng.shuffle(c)
        turn = [b for b, n in zip("ATGC", c) for _ in range(n)]
        rng.shuffle(turn)
        body.append("".join(turn))
    body = "".join(body)
    np_rng = np.random.default_rng(seed)
    flank = lambda n: "".join(np_rng.choice(list("ACGT"), n))
    return GenomeSequence("planted", (flank(168900 - len(body)) + body + flank(3)).encode())


seq = read_fasta(sys.argv[1], ambiguous="skip") if len(sys.argv) > 1 else planted()
stream = class_stream(seq, 168900, 3183, "backward", 10, skip_ambiguous=True)
print(f"{len(stream)} turns spanning {min(stream.starts)}..{max(stream.starts) + 9}, {stream.dropped} dropped")

table = stream.table()
mapping = build_mapping(table, load_fixture("english-letters"))
text = apply(mapping, stream.keys)
print(text[:240], "...\n")

reference = load_fixture("t4-classes")
print(format_variant_report(compare_variants(seq, reference), reference))
