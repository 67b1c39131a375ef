"""Compare the compiled and pure-Python search kernels.

Times ``engine.mine`` alone (candidate generation excluded) on synthetic
workloads, checks both kernels return the same Best set, and prints a table.

    python benchmarks/bench_kernels.py [--rows 2000] [--repeat 3]
"""
import argparse
import time
from fractions import Fraction

from epirules import engine
from epirules.data import split
from epirules.pipeline import generate
from epirules.synth import gen_synthetic, synthetic_tuple
from epirules.values import PI_3, PI_11


def run(rows, influencers, pi, tau_s, repeat):
    spec = synthetic_tuple(influencers, "mixed")
    ds = gen_synthetic(rows, influencers, "mixed", Fraction(1, 10), seed=11)
    train, _ = split(ds, Fraction(4, 5), 1)
    gen = generate(train, spec, "multi_way", pi)
    times, inner, results = {}, {}, {}
    for k in engine.available_kernels():
        best, best_inner = float("inf"), float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            res = engine.mine(train, gen, spec.influencers, 4, tau_s, Fraction(1, 2),
                              kernel=k, minimal_only=True)
            best = min(best, time.perf_counter() - t0)
            best_inner = min(best_inner, res.kernel_seconds)
        times[k], inner[k], results[k] = best, best_inner, res
    same = len({frozenset(r.best.items()) for r in results.values()}) == 1
    return times, inner, results["python"].visited, same


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rows", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    ns = ap.parse_args()
    print(f"kernels available: {engine.available_kernels()}")
    print("times in seconds; 'search' is the kernel call alone, 'mine' includes setup")
    print(f"{'workload':<34}{'visited':>10}{'search py':>11}{'search c':>10}{'x':>6}"
          f"{'mine py':>9}{'mine c':>8}{'x':>6}  same")
    for infl, pi, tau in [(8, PI_3, Fraction(1, 10)), (19, PI_3, Fraction(1, 10)),
                          (19, PI_11, Fraction(1, 10)), (19, PI_11, Fraction(1, 20))]:
        times, inner, visited, same = run(ns.rows, infl, pi, tau, ns.repeat)
        name = f"{infl} infl, |Pi|={len(pi)}, tau_s={tau}"
        cells = []
        for t in (inner, times):
            py, co = t["python"], t.get("compiled")
            cells += [f"{py:.3f}", f"{co:.3f}" if co else "n/a",
                      f"{py / co:.1f}" if co else "n/a"]
        print(f"{name:<34}{visited:>10}{cells[0]:>11}{cells[1]:>10}{cells[2]:>6}"
              f"{cells[3]:>9}{cells[4]:>8}{cells[5]:>6}  {same}")


if __name__ == "__main__":
    main()
