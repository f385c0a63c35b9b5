"""Time the compiled and pure-Python polynomial kernels.

Each backend runs in its own interpreter because the kernel is chosen at
import.  Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "poly-mul": """
import random
from topvertex.qcore._backend import kernel as K
rng = random.Random(1)
ps = [tuple(rng.randint(-999, 999) for _ in range(rng.randint(2, 60))) for _ in range(400)]
def run():
    for a in ps:
        for b in ps[:40]:
            K.mul(a, b)
""",
    "poly-gcd": """
import random
from topvertex.qcore._backend import kernel as K
rng = random.Random(2)
tri = []
for _ in range(150):
    g = tuple(rng.randint(-9, 9) for _ in range(6)) + (1,)
    a = K.mul(g, tuple(rng.randint(-9, 9) for _ in range(12)) + (1,))
    b = K.mul(g, tuple(rng.randint(-9, 9) for _ in range(9)) + (1,))
    tri.append((a, b))
def run():
    for a, b in tri:
        K.gcd_poly(a, b)
""",
    # end to end, one cold run per process
    "z-inst-cap2": """
from topvertex import nekrasov
ONCE = True
def run():
    nekrasov.z_inst(2, 2, workers=1)
""",
}

RUNNER = """
import sys, time, json
ns = {}
exec(sys.argv[1], ns)
best = None
for _ in range(1 if ns.get("ONCE") else int(sys.argv[2])):
    t = time.perf_counter(); ns["run"](); dt = time.perf_counter() - t
    best = dt if best is None else min(best, dt)
from topvertex.qcore import KERNEL
print(json.dumps({"kernel": KERNEL, "seconds": best}))
"""


def time_backend(code, repeat, pure):
    env = dict(os.environ)
    env.pop("TOPVERTEX_PURE_PYTHON", None)
    if pure:
        env["TOPVERTEX_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", RUNNER, code, str(repeat)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'workload':<20}{'python':>10}{'compiled':>10}{'ratio':>8}")
    for name, code in WORKLOADS.items():
        py = time_backend(code, args.repeat, True)
        cy = time_backend(code, args.repeat, False)
        if cy["kernel"] != "cython":
            print(f"{name:<20}{py['seconds']:>10.3f}{'n/a':>10}{'':>8}")
            continue
        ratio = py["seconds"] / cy["seconds"]
        print(f"{name:<20}{py['seconds']:>10.3f}{cy['seconds']:>10.3f}{ratio:>8.2f}")


if __name__ == "__main__":
    main()
