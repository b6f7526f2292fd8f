"""Decide every scenario of the generated corpus and report timing per kind.

    python3 scripts/run_corpus.py [--max-degree 5] [--seeds 20] [--out results.jsonl]
"""

import argparse
import json
import sys
import time
from collections import defaultdict
from dataclasses import dataclass

from planecurves.decision import decide_intersection_set, verify_cayley_bacharach, verify_intersection_set
from planecurves.generators import generate, suite_specs


@dataclass(frozen=True)
class CorpusConfig:
    max_degree: int = 5
    seeds: int = 20
    cayley_bacharach: bool = False
    out: str | None = None


def run(cfg: CorpusConfig) -> int:
    seconds = defaultdict(float)
    counts = defaultdict(int)
    mismatches = []
    sink = open(cfg.out, "w") if cfg.out else None
    for kind, m, n, seed in suite_specs(cfg.max_degree, range(cfg.seeds)):
        sc = generate(kind, m, n, seed)
        start = time.perf_counter()
        d = decide_intersection_set(sc.X, m, n)
        ok = d.verdict == sc.truth
        if d.verdict:
            ok = ok and verify_intersection_set(sc.X, d.sigma_m, d.sigma_n)
            if cfg.cayley_bacharach:
                ok = ok and all(verify_cayley_bacharach(sc.X, m, n))
        seconds[kind] += time.perf_counter() - start
        counts[kind] += 1
        if not ok:
            mismatches.append((kind, m, n, seed))
        if sink:
            sink.write(json.dumps({"kind": kind, "m": m, "n": n, "seed": seed, "decision": d.to_json()}) + "\n")
    if sink:
        sink.close()

    print(f"{'kind':32s} {'count':>6s} {'seconds':>8s}")
    for kind in counts:
        print(f"{kind:32s} {counts[kind]:6d} {seconds[kind]:8.2f}")
    print(f"{'total':32s} {sum(counts.values()):6d} {sum(seconds.values()):8.2f}")
    for miss in mismatches:
        print("MISMATCH", *miss)
    return 1 if mismatches else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=5)
    ap.add_argument("--seeds", type=int, default=20)
    ap.add_argument("--cayley-bacharach", action="store_true", help="also check the three CB properties")
    ap.add_argument("--out", help="write one JSON line per decision")
    args = ap.parse_args()
    return run(CorpusConfig(args.max_degree, args.seeds, args.cayley_bacharach, args.out))


if __name__ == "__main__":
    sys.exit(main())
