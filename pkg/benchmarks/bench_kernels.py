"""Time the batch signature kernel with numba and with the plain numpy fallback.

Each backend runs in its own interpreter, since the choice is made at
import time. Both must produce the same signatures.

    python benchmarks/bench_kernels.py --length 7 --strands 3
"""
import argparse
import hashlib
import json
import os
import subprocess
import sys

WORKER = r"""
import hashlib, json, sys, time
import numpy as np
from braidsig import _jit
from braidsig.seifert import batch_from_array
from braidsig.theorems import all_words

length, strands, repeat = map(int, sys.argv[1:4])
words = all_words(strands, length)
lengths = np.full(len(words), length, dtype=np.int64)
batch_from_array(words[:8], lengths[:8], strands)  # compile / warm up
best = float("inf")
for _ in range(repeat):
    t0 = time.perf_counter()
    sigs, nulls = batch_from_array(words, lengths, strands)
    best = min(best, time.perf_counter() - t0)
digest = hashlib.sha256(sigs.tobytes() + nulls.tobytes()).hexdigest()
print(json.dumps({"numba": _jit.USING_NUMBA, "words": len(words), "seconds": best, "digest": digest}))
"""


def run(no_numba: bool, length: int, strands: int, repeat: int) -> dict:
    env = dict(os.environ)
    if no_numba:
        env["BRAIDSIG_NO_NUMBA"] = "1"
    else:
        env.pop("BRAIDSIG_NO_NUMBA", None)
    out = subprocess.run(
        [sys.executable, "-c", WORKER, str(length), str(strands), str(repeat)],
        env=env, check=True, capture_output=True, text=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--length", type=int, default=7)
    ap.add_argument("--strands", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast = run(False, args.length, args.strands, args.repeat)
    slow = run(True, args.length, args.strands, 1)
    print(f"words: {fast['words']} (length {args.length}, {args.strands} strands)")
    print(f"numba : {fast['seconds']:.3f} s  (enabled={fast['numba']})")
    print(f"numpy : {slow['seconds']:.3f} s")
    if fast["seconds"] > 0:
        print(f"speedup: {slow['seconds'] / fast['seconds']:.1f}x")
    same = fast["digest"] == slow["digest"]
    print("results identical" if same else "RESULTS DIFFER")
    return 0 if same else 1


if __name__ == "__main__":
    sys.exit(main())
