"""Empirical lower-bound constants of q -> Delta^p(P q) for a few elliptic divisors.

Prints, per degree m, the sampled and operator-wide minimum of
||Delta^p(P q)||_rF / (e_pm ||q||_rF).
"""
import argparse

from fischer_cauchy.polynomials import HomPoly, norm_sq_poly
from fischer_cauchy.surveys import lower_bound_survey

DIVISORS = {
    "x1^4+x2^4": (HomPoly(2, 4, {(4, 0): 1, (0, 4): 1}), 2),
    "|x|^4": (norm_sq_poly(2, 2), 2),
    "x1^2+2x2^2": (HomPoly(2, 2, {(2, 0): 1, (0, 2): 2}), 1),
    "x1x2 (not elliptic)": (HomPoly.monomial((1, 1)), 1),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m-max", type=int, default=10)
    ap.add_argument("--samples", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for name, (P, p) in DIVISORS.items():
        print(f"\n{name}  (p={p})")
        print(f"{'m':>3} {'e_pm':>10} {'sampled':>10} {'operator':>10}")
        for r in lower_bound_survey(P, p, 2, args.m_max, args.samples, args.seed):
            print(f"{r['m']:>3} {r['e_pm']:>10.0f} {r['min_sampled_ratio']:>10.4f} {r['operator_min_ratio']:>10.4f}")


if __name__ == "__main__":
    main()
