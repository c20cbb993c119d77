"""Measure how far the averaged half-octonion product is from associative
and from norm-multiplicative, on random rationals and on basis elements.

    python scripts/half_octonion_measure.py --cases 1000 --seed 1
"""

import argparse
import itertools
import random
from fractions import Fraction

from polyadica import numeric
from polyadica.imaginary import HalfOctonion, norm_sq_o, ternary_mul_o
from polyadica.props import half_o, placements


def basis(i):
    return HalfOctonion(*[Fraction(int(k == i)) for k in range(4)])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cases", type=int, default=500)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    mul = lambda t: ternary_mul_o(*t)  # noqa: E731

    bad_basis, witness = 0, None
    for idx in itertools.product(range(4), repeat=5):
        vals = placements(mul, 3, [basis(i) for i in idx])
        if not all(v == vals[0] for v in vals):
            bad_basis += 1
            witness = witness or (idx, vals)
    print(f"basis 5-tuples breaking total associativity: {bad_basis}/1024")
    if witness:
        print(f"  first: e{[4 + i for i in witness[0]]} -> {witness[1]}")

    rng = random.Random(args.seed)
    assoc = norm = 0
    ratios = []
    for _ in range(args.cases):
        xs = [half_o(rng, numeric.RATIONAL) for _ in range(5)]
        vals = placements(mul, 3, xs)
        assoc += not all(v == vals[0] for v in vals)
        x, y, z = xs[:3]
        lhs, rhs = norm_sq_o(ternary_mul_o(x, y, z)), norm_sq_o(x) * norm_sq_o(y) * norm_sq_o(z)
        norm += lhs != rhs
        if rhs:
            ratios.append(float(lhs / rhs))
    print(f"random 5-tuples breaking total associativity: {assoc}/{args.cases}")
    print(f"random triples breaking norm multiplicativity: {norm}/{args.cases}")
    if ratios:
        print(f"  |xyz|^2 / (|x||y||z|)^2 ranges over [{min(ratios):.4f}, {max(ratios):.4f}]")


if __name__ == "__main__":
    main()
