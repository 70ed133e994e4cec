"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times the Lobachevsky function on a batch of arguments, the Schlafli
integrand on a batch of t values, and the full 5-volume integral at the
default tolerance. Prints a table of best-of-N timings and the speedup.
"""
import argparse
import math
import timeit

import numpy as np

from hypack import _backend
from hypack.quadrature import QuadratureSettings, integrate


def cases(mod):
    w = np.random.default_rng(0).uniform(-10, 10, 20000)
    t = np.linspace(math.pi / 4, 2 * math.pi / 5, 5000)

    def vol5():
        integrate(mod.schlafli_integrand_many, math.pi / 4, 2 * math.pi / 5, QuadratureSettings())

    return {
        "lobachevsky x20000": lambda: mod.lobachevsky_many(w),
        "lobachevsky scalar x2000": lambda: [mod.lobachevsky(x) for x in w[:2000]],
        "integrand x5000": lambda: mod.schlafli_integrand_many(t),
        "vol5 [5,3,3,3,4] integral": vol5,
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = _backend.available()
    timings = {}
    for name in backends:
        for label, fn in cases(_backend.load(name)).items():
            timings[name, label] = min(timeit.repeat(fn, number=1, repeat=args.repeat))

    labels = list(cases(_backend.load("python")))
    print(f"{'case':<26}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for label in labels:
        row = f"{label:<26}" + "".join(f"{timings[b, label] * 1e3:>10.2f}ms" for b in backends)
        if len(backends) > 1:
            row += f"{timings['python', label] / timings[backends[0], label]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
