"""Classify orbits of z^2 - 1 exactly and render a grid image.

Run as: python3 demos/orbit_grid.py
Writes basilica.pgm and basilica.csv next to the working directory.
"""

from fractions import Fraction

from rittforge.gaussian import GaussianRational
from rittforge.julia import CLASS_NAMES, exact_orbit, float_orbit, render, to_csv, to_pgm
from rittforge.poly import poly

BASILICA = poly(-1, 0, 1)  # z^2 - 1


def main():
    print("exact orbits under z^2 - 1:")
    for a in (GaussianRational(Fraction(0), Fraction(0)),
              GaussianRational(Fraction(-1), Fraction(0)),
              GaussianRational(Fraction(2), Fraction(0)),
              GaussianRational(Fraction(1, 3), Fraction(0))):
        print(f"  a = {a}: {exact_orbit(BASILICA, a)}")

    print("\nthe float classifier sees the superattracting 2-cycle instead:")
    print(f"  a = 0.0: {float_orbit(BASILICA, 0.0)}")

    grid = render(BASILICA, center=0j, width=3.2, nx=240, max_iter=80)
    counts = {}
    for code in grid.codes:
        counts[code] = counts.get(code, 0) + 1
    pretty = {CLASS_NAMES[c]: k for c, k in sorted(counts.items())}
    print(f"\n240 x 240 grid of width 3.2: {pretty}")

    with open("basilica.pgm", "wb") as fh:
        fh.write(to_pgm(grid))
    with open("basilica.csv", "w") as fh:
        fh.write(to_csv(grid))
    print("wrote basilica.pgm and basilica.csv")


if __name__ == "__main__":
    main()
