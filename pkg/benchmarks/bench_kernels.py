"""Time the compiled word kernels against the pure-Python ones.

    python3 benchmarks/bench_kernels.py [--number N]

Both backends are checked to give the same answers before timing.
"""

import argparse
import random
import timeit

from handlenum import _kernel_py

try:
    from handlenum import _kernel_c
except ImportError:
    _kernel_c = None


def workload(seed=7, count=200, length=40, rank=3):
    rng = random.Random(seed)
    words = []
    for _ in range(count):
        w = []
        while len(w) < length:
            a = rng.choice([g * s for g in range(1, rank + 1) for s in (1, -1)])
            if not w or a != -w[-1]:
                w.append(a)
        words.append(tuple(w))
    moves = [(rng.choice([1, -1, 2, -2, 3, -3]), rng.randrange(1, 1 << (2 * rank))) for _ in range(20)]
    return words, moves


def kernels(mod, words, moves):
    return {
        "free_reduce": lambda: [mod.free_reduce(w + tuple(-a for a in reversed(w[-5:]))) for w in words],
        "whitehead_image": lambda: [mod.whitehead_image(w, a, m) for a, m in moves for w in words[:20]],
        "total_cyclic_image_length": lambda: [mod.total_cyclic_image_length(words, a, m) for a, m in moves],
        "least_rotation": lambda: [mod.least_rotation(w) for w in words],
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--number", type=int, default=20)
    args = ap.parse_args()
    words, moves = workload()
    py = kernels(_kernel_py, words, moves)
    if _kernel_c is None:
        print("compiled kernels not built; timing the Python ones only")
    else:
        c = kernels(_kernel_c, words, moves)
        for name in py:
            if [list(x) if isinstance(x, (list, tuple)) else x for x in py[name]()] != \
               [list(x) if isinstance(x, (list, tuple)) else x for x in c[name]()]:
                raise SystemExit("backends disagree on %s" % name)
    print("%-28s %12s %12s %8s" % ("kernel", "python ms", "compiled ms", "speedup"))
    for name, fn in py.items():
        tp = min(timeit.repeat(fn, number=args.number, repeat=3)) / args.number * 1e3
        if _kernel_c is None:
            print("%-28s %12.3f %12s %8s" % (name, tp, "-", "-"))
            continue
        tc = min(timeit.repeat(c[name], number=args.number, repeat=3)) / args.number * 1e3
        print("%-28s %12.3f %12.3f %7.1fx" % (name, tp, tc, tp / tc))


if __name__ == "__main__":
    main()
