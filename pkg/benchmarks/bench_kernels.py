"""Compare the compiled and pure-Python integration kernels.

    python benchmarks/bench_kernels.py [--seeds N] [--crossings M] [--repeat R]

Both kernels run the same Poincare section; the script checks that the
points agree bit for bit and prints the timings and the speed-up.
"""

import argparse
import time

from springpendulum.elliptic import PendulumParams
from springpendulum.exact import QQ
from springpendulum.orbits import _dop853_py, poincare_section, seed_grid


def timed(kernel, params, E, seeds, crossings, repeat):
    best, section = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        section = poincare_section(params, E, seeds, crossings, kernel=kernel)
        best = min(best, time.perf_counter() - t0)
    return best, section


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=11, help="side of the seed grid")
    ap.add_argument("--crossings", type=int, default=100)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    try:
        from springpendulum.orbits import _dop853 as compiled
    except ImportError:
        raise SystemExit("compiled kernel not built: pip install -e . --no-build-isolation")

    params, E = PendulumParams(QQ(4, 3), QQ(-4, 3)), -0.8
    seeds = seed_grid(E, args.seeds)
    t_c, s_c = timed(compiled, params, E, seeds, args.crossings, args.repeat)
    t_p, s_p = timed(_dop853_py, params, E, seeds, args.crossings, max(1, args.repeat // 3))
    same = [p for _, _, p in s_c.points()] == [p for _, _, p in s_p.points()]
    n = s_c.summary()["points"]
    steps = sum(r.stats.accepted for r in s_c.results)
    print(f"{len(seeds)} seeds x {args.crossings} crossings: {n} points, {steps} accepted steps")
    print(f"  cython  {t_c:8.3f} s")
    print(f"  python  {t_p:8.3f} s")
    print(f"  speed-up {t_p / t_c:6.1f}x, identical points: {same}")


if __name__ == "__main__":
    main()
