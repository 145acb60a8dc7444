"""How many dictionary words should random text of the same length and
letter mix contain? Compares one class stream against shuffled copies.

    python demos/null_model.py [trials]
"""
import random
import sys

from helixcipher import build_mapping, common_words, load_fixture, run_null_model

mapping = build_mapping(load_fixture("t4-classes"), load_fixture("english-letters"))
keys = [k for k, _ in mapping.pairs]
rng = random.Random(7)
stream = [rng.choice(keys) for _ in range(3183)]
trials = int(sys.argv[1]) if len(sys.argv) > 1 else 500

for model in ("shuffle-stream", "resample-letters"):
    res = run_null_model(stream, mapping, common_words(min_len=3), model=model, trials=trials, seed=1, workers=4)
    print(model)
    for s in ("3", "4", "5", "6+", "all"):
        lo, hi = res.null_interval(s, 0.95)
        print(f"  len {s:>3}: observed {res.observed[s]:4}  null 95% [{lo:.0f}, {hi:.0f}]  p={res.p_values[s]:.3f}")
