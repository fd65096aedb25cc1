"""Complex versus real Fischer norm behaviour of Delta^p(|x|^{2p} q).

The complex-norm ratio min ||Delta^p(|x|^{2p} q)||_F / (m^p ||q||_F) stays
bounded below, while the real-norm ratio on |x|^{2p} Y_m stays bounded for
n >= 2 and grows without bound in one variable.
"""
import argparse

from fischer_cauchy.surveys import complex_norm_ratio_sequence, harmonic_ratio_sequence, one_variable_ratio_sequence


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=1)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--m-max", type=int, default=12)
    args = ap.parse_args()

    print(f"complex Fischer norm, p={args.p}, n={args.n}")
    print(f"{'m':>3} {'ratio':>10} {'vs |x|^2p q':>12} {'real norm':>10}")
    for r in complex_norm_ratio_sequence(args.p, args.n, args.m_max):
        print(f"{r['m']:>3} {r['ratio']:>10.4f} {r['first_ratio']:>12.4f} {r['rf_ratio']:>10.4f}")

    print(f"\nreal norm on |x|^2p Y_m: n={args.n} against n=1")
    bounded = harmonic_ratio_sequence(args.p, args.n, 2 * args.m_max)
    growing = one_variable_ratio_sequence(args.p, 2 * args.m_max)
    for m, (a, b) in enumerate(zip(bounded, growing)):
        print(f"{m:>3} {a:>10.4f} {b:>10.4f}")


if __name__ == "__main__":
    main()
