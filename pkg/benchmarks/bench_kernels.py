"""Compare the compiled and pure-Python integer kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Every timing also checks that both backends return the same value, so a
speed-up never hides a wrong answer.
"""

import argparse
import random
import timeit

from lelong import coneopt
from lelong.graph import ade_graph
from lelong.kernels import backends


def random_matrix(rng, n, lo=-50, hi=50):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


def cases():
    rng = random.Random(0)
    m12, m24 = random_matrix(rng, 12), random_matrix(rng, 24)
    rhs24 = [rng.randint(-9, 9) for _ in range(24)]
    low_rank = [[sum(a * b for a, b in zip(u, v)) for v in m12[:6]] for u in m12]  # 12 x 6, rank 6
    a10 = coneopt.cone_constraint_rows(ade_graph("A", 10))
    cusp_like = [[3, -1, -1], [-1, 3, -1], [-1, -1, 3]]
    e8 = coneopt.cone_constraint_rows(ade_graph("E", 8))
    return [
        ("det 12x12", "bareiss_det", (m12,)),
        ("det 24x24", "bareiss_det", (m24,)),
        ("solve 24x24", "bareiss_solve", (m24, rhs24)),
        ("rank 12x6", "bareiss_rank", (low_rank,)),
        ("rays A10", "dd_extreme_rays", (a10, 10)),
        ("rays E8", "dd_extreme_rays", (e8, 8)),
        ("rays 3-cycle", "dd_extreme_rays", (cusp_like, 3)),
    ]


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()
    impls = backends()
    names = list(impls)
    print(f"backends: {', '.join(names)}")
    print(f"{'case':<16}" + "".join(f"{n + ' (ms)':>16}" for n in names) + ("     speed-up" if len(names) > 1 else ""))
    for label, fn, argv in cases():
        results, times = [], []
        for name in names:
            f = getattr(impls[name], fn)
            results.append(f(*argv))
            number = 3
            best = min(timeit.repeat(lambda: f(*argv), number=number, repeat=args.repeat)) / number
            times.append(best * 1000)
        if any(r != results[0] for r in results):
            raise SystemExit(f"{label}: backends disagree")
        row = f"{label:<16}" + "".join(f"{t:>16.3f}" for t in times)
        if len(times) > 1:
            row += f"{times[0] / times[1]:>12.2f}x"
        print(row)


if __name__ == "__main__":
    main()
