#!/usr/bin/env python3
"""Compare the compiled and pure-Python Laurent kernels.

Runs each workload in a fresh subprocess per backend (the backend is
chosen at import time) and prints a small table.

    python3 benchmarks/bench_backends.py [--repeat N]

Workloads:
  poly-mul    dense products of small polynomials, the Hecke inner loop
  kl-table    KL basis recursion, rank 2, length 8
  centrality  central elements and generator commutators, rank 2
"""

import argparse
import json
import os
import random
import subprocess
import sys
import time


def work_poly_mul():
    from heckewb.ring import LaurentPoly

    rng = random.Random(2)
    pool = [LaurentPoly.from_terms(
        {rng.randrange(-6, 7): rng.randrange(-9, 10)
         for _ in range(rng.randrange(1, 6))})
        for _ in range(200)]
    t0 = time.perf_counter()
    acc = LaurentPoly.zero()
    for _ in range(60):
        for a in pool:
            for b in pool[:40]:
                acc = acc + a * b
    return time.perf_counter() - t0


def work_kl_table():
    from heckewb.kl import KLTable
    from heckewb.rootdata import build_datum

    t0 = time.perf_counter()
    KLTable(build_datum("A2-sc")).extend(13)
    KLTable(build_datum("C2-sc")).extend(12)
    return time.perf_counter() - t0


def work_centrality():
    import heckewb.center as ct
    import heckewb.spherical as sp
    from heckewb.rootdata import build_datum

    t0 = time.perf_counter()
    for label in ("A2-sc", "C2-sc"):
        d = build_datum(label)
        for lam in sp.dominant_coweights(d, 10):
            z = ct.central_element(d, lam, verify=False).element
            assert ct.is_central(z)
    return time.perf_counter() - t0


WORKLOADS = {
    "poly-mul": work_poly_mul,
    "kl-table": work_kl_table,
    "centrality": work_centrality,
}


def run_child(name: str) -> float:
    return WORKLOADS[name]()


def spawn(name: str, pure: bool, repeat: int) -> float:
    env = dict(os.environ)
    env["HECKEWB_PURE"] = "1" if pure else "0"
    best = float("inf")
    for _ in range(repeat):
        out = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--child", name],
            capture_output=True, text=True, env=env, check=True)
        best = min(best, json.loads(out.stdout)["seconds"])
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--child", help=argparse.SUPPRESS)
    args = ap.parse_args()

    if args.child:
        from heckewb.ring import BACKEND
        seconds = run_child(args.child)
        print(json.dumps({"backend": BACKEND, "seconds": seconds}))
        return

    probe = subprocess.run(
        [sys.executable, "-c",
         "from heckewb.ring import BACKEND; print(BACKEND)"],
        capture_output=True, text=True,
        env={**os.environ, "HECKEWB_PURE": "0"}, check=True)
    if probe.stdout.strip() != "compiled":
        print("compiled kernel unavailable; only the pure backend "
              "can be measured")

    print(f"{'workload':<12} {'pure (s)':>10} {'compiled (s)':>13} "
          f"{'speedup':>8}")
    for name in WORKLOADS:
        t_pure = spawn(name, pure=True, repeat=args.repeat)
        t_comp = spawn(name, pure=False, repeat=args.repeat)
        print(f"{name:<12} {t_pure:>10.3f} {t_comp:>13.3f} "
              f"{t_pure / t_comp:>7.2f}x")


if __name__ == "__main__":
    main()
