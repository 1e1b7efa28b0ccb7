"""Compare the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_backends.py [--sizes 16,64,256] [--repeats 20]

Times the compensated row Gram product (O(N^3)) and the compensated
matrix-vector product (O(N^2)) for each backend, then the O(N^2) apply
scaling of the sine-cosine transform between N=64 and N=128 (matrix sizes
129 and 257, expected ratio ~4).
"""

import argparse
import time


from orthotrig import _kernels, build_new_dct, build_new_sct
from orthotrig.signal import lcg_signal


def best_of(fn, repeats):
    fn()  # warm-up / jit compile
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times) * 1e3


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="16,64,256")
    ap.add_argument("--repeats", type=int, default=20)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    print(f"{'kernel':<10} {'N':>5} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for n in (int(s) for s in args.sizes.split(",")):
        a = build_new_dct(n).entries
        x = lcg_signal(n)
        for name, fast, slow in (
            ("row_gram", lambda: _kernels.row_gram_numba(a), lambda: _kernels.row_gram_numpy(a)),
            ("matvec", lambda: _kernels.matvec_numba(a, x), lambda: _kernels.matvec_numpy(a, x)),
        ):
            tf = best_of(fast, args.repeats)
            ts = best_of(slow, max(1, args.repeats // 4) if name == "row_gram" else args.repeats)
            print(f"{name:<10} {n:>5} {tf:>10.4f} {ts:>10.4f} {ts / tf:>7.1f}x")

    m64, m128 = build_new_sct(64), build_new_sct(128)
    x64, x128 = lcg_signal(m64.cols), lcg_signal(m128.cols)
    t64 = best_of(lambda: _kernels.matvec(m64.entries, x64), args.repeats * 10)
    t128 = best_of(lambda: _kernels.matvec(m128.entries, x128), args.repeats * 10)
    print(f"\nnew-sct apply ({_kernels.BACKEND}): N=64 {t64:.4f} ms, N=128 {t128:.4f} ms, ratio {t128 / t64:.2f}")


if __name__ == "__main__":
    main()
