"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import timeit

from speclab import _backend, builtins


def workloads():
    rng = random.Random(0)
    matrix = [[rng.randrange(-5, 6) for _ in range(60)] for _ in range(60)]
    tube = builtins.tube_model(3, 5)
    out_nz, in_nz = tube.out_nonzero(), tube.in_nonzero()
    chain = [(1 << (i + 1)) - 1 for i in range(16)]
    a4 = builtins.an_model(4)
    gens = [m for m in a4.in_nonzero()]
    full = a4.full
    return {
        "rank_mod_p 60x60": lambda k: k.rank_mod_p(matrix, 2147483647),
        f"closure_fixed_points {len(out_nz)} classes": lambda k: k.closure_fixed_points(out_nz, in_nz, 20),
        "specialization_closed_masks 16-chain": lambda k: k.specialization_closed_masks(chain, 20),
        "moore_family A4": lambda k: k.moore_family([full & ~g for g in gens], full),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = [("python", _backend.pure)]
    if _backend.compiled is not None:
        backends.append(("compiled", _backend.compiled))
    else:
        print("compiled kernels not built; timing the fallback only")
    for name, fn in workloads().items():
        results = {b: fn(k) for b, k in backends}
        if len({repr(r) for r in results.values()}) != 1:
            raise SystemExit(f"{name}: backends disagree")
        times = {b: min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat)) for b, k in backends}
        line = f"{name:40s}" + "".join(f"  {b} {t * 1e3:8.2f} ms" for b, t in times.items())
        if "compiled" in times and times["compiled"] > 0:
            line += f"  speedup {times['python'] / times['compiled']:.1f}x"
        print(line)


if __name__ == "__main__":
    main()
