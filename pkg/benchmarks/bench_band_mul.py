"""Compare the compiled and pure-python band convolution kernels.

Measures BandMatrix products on workloads shaped like real search runs:
(n-1) x (n-1) residue stacks whose width grows with the Garside length.
Run from the repository root:

    python3 benchmarks/bench_band_mul.py [--sizes 3 5 7] [--widths 8 32 128]

The compiled backend must be importable for the comparison; otherwise only
the python numbers are printed.
"""

import argparse
import random
import time

import numpy as np

from braidsearch import _bandkernel_py
from braidsearch.bandkernel import BandMatrix

try:
    from braidsearch import _bandkernel  # type: ignore[attr-defined]
except ImportError:
    _bandkernel = None


def random_stack(rng, modulus, size, width, density=0.4):
    coeffs = np.zeros((width, size, size), dtype=np.uint8)
    flat = coeffs.reshape(width, -1)
    for t in range(width):
        for k in range(size * size):
            if rng.random() < density:
                flat[t, k] = rng.randrange(1, modulus)
    # pin the edges so the band is trimmed
    coeffs[0, 0, 0] = coeffs[-1, -1, -1] = 1
    return coeffs


def time_kernel(impl, a, b, modulus, repeats):
    best = float("inf")
    for _ in range(repeats):
        started = time.perf_counter()
        impl.convolve_mod(a, b, modulus)
        best = min(best, time.perf_counter() - started)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[3, 5, 7])
    parser.add_argument("--widths", type=int, nargs="+", default=[8, 32, 128])
    parser.add_argument("--modulus", type=int, default=5)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    impls = [("python", _bandkernel_py)]
    if _bandkernel is not None:
        impls.append(("compiled", _bandkernel))

    print(f"modulus {args.modulus}, best of {args.repeats} repeats")
    header = f"{'size':>5} {'width':>6}" + "".join(f" {name:>12}" for name, _ in impls)
    if len(impls) == 2:
        header += f" {'speedup':>9}"
    print(header)
    for size in args.sizes:
        for width in args.widths:
            a = random_stack(rng, args.modulus, size, width)
            b = random_stack(rng, args.modulus, size, width)
            out_a = impls[0][1].convolve_mod(a, b, args.modulus)
            row = f"{size:>5} {width:>6}"
            times = []
            for _name, impl in impls:
                assert (impl.convolve_mod(a, b, args.modulus) == out_a).all()
                times.append(time_kernel(impl, a, b, args.modulus, args.repeats))
                row += f" {times[-1] * 1e3:>10.3f}ms"
            if len(times) == 2:
                row += f" {times[0] / times[1]:>8.1f}x"
            print(row)
            # sanity: the full product path agrees between representations
            lo = BandMatrix(args.modulus, 0, a) * BandMatrix(args.modulus, 0, b)
            assert lo.projlen <= 2 * (width - 1)


if __name__ == "__main__":
    main()
