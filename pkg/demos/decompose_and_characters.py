"""Walk through prime decomposition, rewrite moves, and character values.

Run as: python3 demos/decompose_and_characters.py
"""

import json

from rittforge.characters import DegreeChar, LengthChar, evaluate
from rittforge.decompose import (
    Decomposition,
    apply_move,
    available_moves,
    complete_decomposition,
    ritt_invariants,
)
from rittforge.equivalence import affine_biequiv
from rittforge.poly import AffineMap, chebyshev, gr, poly
from rittforge.serialize import charvalue_to_json


def show(p):
    return " + ".join(
        f"({c}) z^{k}" for k, c in enumerate(p.coeffs) if c
    ) or "0"


def main():
    p = poly(1, 0, 0, 0, 0, 0, 1)  # z^6 + 1
    dec = complete_decomposition(p)
    inv = ritt_invariants(dec)
    print(f"z^6 + 1 splits into {inv.length} indecomposables,",
          f"degree multiset {list(inv.degree_multiset)}")
    for i, f in enumerate(dec.factors, 1):
        print(f"  factor {i}: {show(f)}")

    t6 = chebyshev(2).compose(chebyshev(3))
    dec6 = Decomposition((chebyshev(2), chebyshev(3)))
    print(f"\nT_6 = T_2 o T_3 = {show(t6)}")
    for move in available_moves(dec6, 1):
        kind = type(move).__name__
        rewritten = apply_move(dec6, move)
        same = rewritten.compose() == t6
        degs = [f.degree for f in rewritten.factors]
        print(f"  move {kind}: factors now degrees {degs}, recomposes exactly = {same}")

    print("\ncharacters at z^4 + z versus z^4 (same degree, different length):")
    for name, chi in (("degree", DegreeChar(1)), ("length", LengthChar())):
        a = charvalue_to_json(evaluate(chi, poly(0, 1, 0, 0, 1)))
        b = charvalue_to_json(evaluate(chi, poly(0, 0, 0, 0, 1)))
        print(f"  {name}: {json.dumps(a)} vs {json.dumps(b)}")

    # a disguised copy of z^2: A o z^2 o B with A = 2z+1, B = z-3
    a_map, b_map = AffineMap(gr(2), gr(1)), AffineMap(gr(1), gr(-3))
    q = a_map.to_poly().compose(poly(0, 0, 1)).compose(b_map.to_poly())
    w = affine_biequiv(poly(0, 0, 1), q)
    print(f"\n{show(q)} is A o z^2 o B with")
    print(f"  A = {w.A.a} z + {w.A.b},  B = {w.B.a} z + {w.B.b}")


if __name__ == "__main__":
    main()
