"""Wall time and empirical convergence radius of the series solver as N grows."""
import argparse
import time

from fischer_cauchy.catalog import quartic_divisor_problem, wave_problem
from fischer_cauchy.solver import solve_series


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=16)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    print(f"{'problem':>8} {'N':>3} {'seconds':>8} {'residual':>9} {'radius':>8}")
    for N in range(4, args.max_degree + 1, 4):
        for name, prob in (("quartic", quartic_divisor_problem(N, args.seed)), ("wave", wave_problem(2, N))):
            t0 = time.perf_counter()
            rep = solve_series(prob)
            dt = time.perf_counter() - t0
            radius = f"{rep.radius_estimate:.3f}" if rep.radius_estimate else "-"
            print(f"{name:>8} {N:>3} {dt:>8.2f} {str(rep.residual_ok):>9} {radius:>8}")


if __name__ == "__main__":
    main()
