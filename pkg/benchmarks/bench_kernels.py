"""Compare the compiled kernels against the pure-Python fallback.

Each workload runs in a fresh interpreter per backend so that memo caches
start empty.  Usage::

    python3 benchmarks/bench_kernels.py [--repeat 3] [--json out.json]
"""

import argparse
import json
import os
import statistics
import subprocess
import sys
import time

WORKLOADS = {
    "straighten": (
        "from sl2affine.liealg import HighestWeight\n"
        "from sl2affine.suites import suite_virasoro\n"
        "assert all(r['pass'] for r in suite_virasoro(HighestWeight.generalized(2), 4, modes=2))\n"
    ),
    "relations": (
        "from sl2affine.liealg import HighestWeight\n"
        "from sl2affine.suites import suite_relations\n"
        "assert all(r['pass'] for r in suite_relations(HighestWeight(1, 1), 3, n_range=range(-4, 3)))\n"
    ),
    "eliminate": (
        "from sl2affine.liealg import HighestWeight\n"
        "from sl2affine.modules import dimension_rows\n"
        "assert all(r.match for r in dimension_rows(HighestWeight(2, 1), 7, margin=1))\n"
    ),
    "eliminate-dense": (
        "import random\n"
        "from sl2affine import kernels\n"
        "rng = random.Random(1)\n"
        "for _ in range(40):\n"
        "    e = kernels.Eliminator()\n"
        "    for _ in range(60):\n"
        "        e.add({c: rng.randint(-9, 9) for c in rng.sample(range(80), 12)})\n"
    ),
}


def run(code: str, pure: bool) -> tuple[float, str]:
    env = dict(os.environ)
    env.pop("SL2AFFINE_PURE", None)
    if pure:
        env["SL2AFFINE_PURE"] = "1"
    prog = ("import time\nt = time.perf_counter()\n" + code +
            "from sl2affine import kernels\nprint(kernels.BACKEND, time.perf_counter() - t)\n")
    out = subprocess.run([sys.executable, "-c", prog], env=env, capture_output=True, text=True, check=True)
    backend, secs = out.stdout.split()
    return float(secs), backend


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--only", choices=sorted(WORKLOADS), action="append")
    ap.add_argument("--json", help="also write the results here")
    args = ap.parse_args(argv)

    results = []
    print(f"{'workload':<16} {'python':>9} {'compiled':>9} {'speedup':>8}")
    for name in args.only or WORKLOADS:
        code = WORKLOADS[name]
        timings = {}
        for pure in (True, False):
            runs = [run(code, pure) for _ in range(args.repeat)]
            backend = runs[0][1]
            timings[backend] = statistics.median(r[0] for r in runs)
        py = timings.get("python")
        cy = timings.get("cython")
        speed = f"{py / cy:.2f}x" if py and cy else "n/a"
        print(f"{name:<16} {py:>8.2f}s {cy if cy is None else f'{cy:.2f}s':>9} {speed:>8}")
        results.append({"workload": name, "python_s": py, "cython_s": cy})
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump({"repeat": args.repeat, "when": time.strftime("%Y-%m-%d"), "results": results}, fh, indent=1)
    return 0


if __name__ == "__main__":
    sys.exit(main())
