"""Compare the compiled flag-propagation kernel against the Python fallback.

    python benchmarks/bench_kernel.py [--repeat N]
"""
import argparse
import time

from semimaps import _flagkernel_py, catalog
from semimaps.automorphism import _candidates, _flag_system
from semimaps.tilings import torus_quotient

try:
    from semimaps import _flagkernel
except ImportError:
    _flagkernel = None


def workloads():
    for name in ("T3", "T7", "K6"):
        yield name, catalog.get(name).map
    yield "[4^4] 12x12", torus_quotient("[4^4]", ((12, 0), (0, 12)))
    yield "[3^6] 10x10", torus_quotient("[3^6]", ((10, 0), (0, 10)))
    yield "[3^1,6^1,3^1,6^1] 8x8", torus_quotient("[3^1,6^1,3^1,6^1]", ((8, 0), (0, 8)))


def timed(search, fs, cands, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = search(fs.involutions, fs.involutions, 0, cands)
        best = min(best, time.perf_counter() - t0)
    return best, len(res)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'map':<24}{'flags':>7}{'|Aut|':>7}{'python ms':>12}{'cython ms':>12}{'speedup':>9}")
    for label, m in workloads():
        fs = _flag_system(m)
        cands = _candidates(fs, fs, 0)
        tp, n = timed(_flagkernel_py.search, fs, cands, args.repeat)
        if _flagkernel is None:
            print(f"{label:<24}{len(fs):>7}{n:>7}{tp * 1e3:>12.1f}{'n/a':>12}{'':>9}")
            continue
        tc, nc = timed(_flagkernel.search, fs, cands, args.repeat)
        assert n == nc
        print(f"{label:<24}{len(fs):>7}{n:>7}{tp * 1e3:>12.1f}{tc * 1e3:>12.2f}{tp / tc:>8.0f}x")


if __name__ == "__main__":
    main()
