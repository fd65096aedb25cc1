"""Regenerate the bundled JSON problem files in problems/ from the catalog."""
import json
import sys
from fractions import Fraction
from pathlib import Path

from fischer_cauchy import catalog, io
from fischer_cauchy.polynomials import GradedSeries, HomPoly, norm_sq_poly

OUT = Path(__file__).resolve().parent.parent / "problems"


def write(name, doc):
    (OUT / name).write_text(json.dumps(doc, indent=1) + "\n")
    print("wrote", OUT / name)


def main():
    OUT.mkdir(exist_ok=True)
    write("singular_product.json", io.encode_problem(catalog.singular_product()))
    write("laplace_norm.json", io.encode_problem(catalog.laplace_norm_divisor()))
    write("laplace_plus_one.json", io.encode_problem(catalog.laplace_plus_one()))
    zero = catalog.laplace_plus_one(6)
    zero.rhs = GradedSeries.zero(2, 6)
    write("zero_rhs.json", io.encode_problem(zero))
    write("quartic_problem.json", io.encode_problem(catalog.quartic_divisor_problem()))
    write("wave.json", io.encode_problem(catalog.wave_problem()))

    xi = Fraction(3, 4)
    write(
        "xi_example.json",
        {
            "n": 2,
            "divisor": io.encode_poly(catalog.xi_quartic(xi)),
            "B": io.encode_matrix([[1, 0], [0, 1]]),
            "A": io.encode_matrix(catalog.xi_matrix(xi).matrix),
            "resolution": 100000,
        },
    )
    write(
        "light_cone.json",
        {"n": 3, "divisor": io.encode_poly(catalog.light_cone_divisor(2)), "imaginary_axes": [2], "resolution": 256},
    )
    write("quartic_divisor.json", {"n": 2, "divisor": io.encode_poly(HomPoly(2, 4, {(4, 0): 1, (0, 4): 1})), "p": 2})
    write("norm4_divisor.json", {"n": 2, "divisor": io.encode_poly(norm_sq_poly(2, 2)), "p": 2})
    write("product_divisor.json", {"n": 2, "divisor": io.encode_poly(HomPoly.monomial((1, 1))), "p": 1})


if __name__ == "__main__":
    sys.exit(main())
