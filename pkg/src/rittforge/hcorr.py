"""Finite holomorphic correspondences as monic fiber polynomials.

A correspondence of degree d sends z to the d roots in W of a monic
polynomial W^d + c_{d-1}(z) W^{d-1} + ... + c_0(z) with rational-function
coefficients. Composition eliminates the middle variable by resultant and
renormalizes; spurious content introduced off a finite exceptional set is
removed, per the algebraic model.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .bipoly import BiPoly, BivarPoly, resultant_in_W
from .poly import Poly
from .ratfun import RF_ONE, RatFun, _as_ratfun

POLE_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class HolCorr:
    poly: BiPoly
    squarefree: bool = False

    def __post_init__(self):
        if self.poly.degree < 1:
            raise ValueError("correspondence needs fiber degree >= 1")
        if not self.poly.is_monic():
            raise ValueError("fiber polynomial must be monic in W")

    def squarefree_part(self) -> "HolCorr":
        return HolCorr(self.poly.squarefree().monic(), True)


def _normalized(b: BiPoly, squarefree: bool) -> HolCorr:
    cleared, _ = b.clear_denominators()
    prim = cleared.primitive()
    out = prim.to_bipoly().monic()
    if squarefree:
        out = out.squarefree().monic()
    return HolCorr(out, squarefree)


def from_branches(branches) -> HolCorr:
    """Expanded product of (W - R_i); coefficients are signed elementary
    symmetric functions of the branches."""
    branches = [_as_ratfun(r) for r in branches]
    if not branches:
        raise ValueError("at least one branch required")
    acc = BiPoly((RF_ONE,))
    for r in branches:
        acc = acc * BiPoly((-r, RF_ONE))
    return HolCorr(acc)


def graph(r) -> HolCorr:
    return from_branches([r])


def compose(k2: HolCorr, k1: HolCorr, squarefree: bool = False) -> HolCorr:
    """Fiber of z = the k2-images of the k1-images of z.

    Eliminates the middle variable: Res_W(k1(z, W), k2(W, U)), then clears
    denominators, removes content in z, and renormalizes monic in U.
    """
    res = resultant_in_W(k1.poly, k2.poly)
    if res.is_zero() or res.degree < 1:
        raise ValueError("degenerate composition: resultant collapsed")
    return _normalized(res, squarefree)


def inverse(k: HolCorr):
    """Swap the two variables and renormalize, or None when the swapped
    polynomial does not depend on the old z (constant branches)."""
    cleared, _ = k.poly.clear_denominators()
    z_deg = max(c.degree for c in cleared.coeffs)
    if z_deg < 1:
        return None
    swapped = BivarPoly(
        tuple(
            Poly(tuple(c.coeff(i) for c in cleared.coeffs))
            for i in range(z_deg + 1)
        )
    )
    return HolCorr(swapped.primitive().to_bipoly().monic())


def degree(k: HolCorr) -> int:
    return k.poly.degree


def _eval_ratfun(r: RatFun, z0: complex) -> complex:
    den = npoly.polyval(z0, r.den.to_complex_coeffs())
    if abs(den) <= POLE_TOL:
        raise ValueError(f"coefficient pole at {z0}")
    num = npoly.polyval(z0, r.num.to_complex_coeffs() or [0.0])
    return num / den


def fiber(k: HolCorr, z0: complex):
    """The d fiber values over z0, sorted by (real, imaginary).

    Components are snapped to the pole tolerance before comparison so that
    roundoff below 1e-9 cannot reorder the output.
    """
    z0 = complex(z0)
    coeffs = [_eval_ratfun(c, z0) for c in k.poly.coeffs_in_W]
    roots = np.roots(list(reversed(coeffs)))
    return sorted(
        (complex(w) for w in roots),
        key=lambda w: (round(w.real, 9), round(w.imag, 9)),
    )
