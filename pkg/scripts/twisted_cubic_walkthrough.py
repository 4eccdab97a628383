#!/usr/bin/env python3
"""Walk the twisted cubic: basis, projection, degeneration, resolution.

Reproduces the package's flagship example end to end and prints each stage.
Run from the repository root:

    python scripts/twisted_cubic_walkthrough.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from groebner import (
    LEX,
    QQ,
    buchberger,
    divide,
    flat_family,
    flatness_check,
    free_resolution,
    hilbert_function,
    regularity,
    twisted_cubic,
)
from groebner.degeneration import family_from_generators
from groebner.poly import PolynomialRing


def main():
    ring, gens = twisted_cubic(QQ, LEX)
    print("generators:", ", ".join(str(g) for g in gens))

    gb = buchberger(gens)
    print("\nlex basis:")
    for f in gb.elements:
        print("  ", f)

    print("\nHilbert function of the quotient (d = 0..10):")
    print("  ", hilbert_function(gens, 10))

    plane_curve = [f for f in gb.elements if all(t.monomial[0] == 0 for t in f.terms)]
    print("\nprojection to the plane in x, y, z:", plane_curve[0])

    rx = PolynomialRing(QQ, ["x", "y"], LEX)
    x, y = rx.variables()
    g = x * x * y
    print("\ndivision depends on the divisor list order:")
    print("   by [xy, x^2+y^2]:", divide(g, [x * y, x * x + y * y]).remainder)
    print("   by [x^2+y^2, xy]:", divide(g, [x * x + y * y, x * y]).remainder)

    W = (-16, -4, -1, 0)
    fam = flat_family(gens, W)
    print("\none-parameter degeneration along W =", W)
    print(fam)
    print(flatness_check(fam))
    truncated = family_from_generators(gens, W)
    print("\nwithout the completion step:")
    print(flatness_check(truncated))

    res = free_resolution(gens)
    print("\nminimal free resolution Betti table:")
    print(res.betti().ascii())
    print("regularity:", regularity(res))


if __name__ == "__main__":
    main()
