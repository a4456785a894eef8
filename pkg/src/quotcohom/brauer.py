"""Neron-Severi and Brauer rank bookkeeping for Pic^d X, Sym^d X and Q(r, d).

With H^3 torsion-free, ``Br' = (H^2 / NS) (x) Q/Z`` is determined by the free
rank ``b_2 - rank NS``.  The Picard number of Pic^d X is a model input (it
depends on the periods of X); everything else is computed.  The maps
``f_d: Sym^d -> Sym^{d+1}`` and ``h: Sym^d -> Sym^{d+r}`` (adding copies of a
base point) are computed on H^2 by restricting the trailing factors of
X^{d+1} resp. X^{d+r} to the base point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import List, Tuple

from . import linalg
from .curve import CohomClass, GenusContext, cup, point_restrict
from .quot import betti_quot, sym_poincare
from .symmetric import macdonald_generators


@dataclass(frozen=True)
class BrauerShape:
    """``(Q/Z)^free_rank (+) H^3_tor``; the torsion order is 1 throughout."""

    free_rank: int
    torsion_order: int = 1

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and self.torsion_order == 1

    def __str__(self):
        if self.is_trivial():
            return "0"
        s = "(Q/Z)^%d" % self.free_rank if self.free_rank else ""
        if self.torsion_order > 1:
            s += (" + " if s else "") + "T(%d)" % self.torsion_order
        return s


def brauer_shape(b2: int, ns_rank: int, h3_torsion_order: int = 1) -> BrauerShape:
    if not 0 <= ns_rank <= b2:
        raise ValueError("need 0 <= ns_rank <= b2 (got ns_rank=%d, b2=%d)" % (ns_rank, b2))
    if h3_torsion_order < 1:
        raise ValueError("torsion order must be positive")
    return BrauerShape(b2 - ns_rank, h3_torsion_order)


@dataclass(frozen=True)
class NSModel:
    genus: int
    rho_pic: int

    def __post_init__(self):
        lo, hi = rho_range(self.genus)
        if not lo <= self.rho_pic <= hi:
            raise ValueError("rho must lie in [%d, %d] for genus %d" % (lo, hi, self.genus))

    @property
    def ns_sym(self) -> int:
        return self.rho_pic + 1

    @property
    def ns_quot(self) -> int:
        return self.rho_pic + 2


def rho_range(g: int) -> Tuple[int, int]:
    """Allowed Picard numbers of a g-dimensional Jacobian (0 for the point)."""
    if g == 0:
        return 0, 0
    return 1, g * g


def degree2_invariant_basis(g: int, d: int) -> Tuple[List[str], List[CohomClass]]:
    """``eta`` and ``lambda_i u lambda_j`` (i < j) on X^d."""
    lams, et = macdonald_generators(g, d)
    labels, classes = ["eta"], [et]
    for i in range(len(lams)):
        for j in range(i + 1, len(lams)):
            labels.append("l%d.l%d" % (i + 1, j + 1))
            classes.append(cup(lams[i], lams[j]))
    return labels, classes


@lru_cache(maxsize=None)
def restriction_matrix(g: int, source_d: int, target_d: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """Pullback ``H^2(Sym^source) -> H^2(Sym^target)`` along the add-base-points map.

    Column b holds the coordinates of the restricted source basis element b
    in the target basis.  Raises ArithmeticError if a restricted class leaves
    the span, which would mean a sign-convention bug.
    """
    if target_d < 2 or source_d < target_d:
        raise ValueError("need 2 <= target_d <= source_d")
    _, src = degree2_invariant_basis(g, source_d)
    labels, tgt = degree2_invariant_basis(g, target_d)
    tgt_vecs = [c.terms for c in tgt]
    cols = []
    for c in src:
        for slot in range(source_d, target_d, -1):
            c = point_restrict(c, slot)
        coords = linalg.solve(tgt_vecs, c.terms)
        if coords is None:
            raise ArithmeticError("restricted class is not in the span of the target basis")
        cols.append(coords)
    n = len(labels)
    return tuple(tuple(cols[col][row] for col in range(n)) for row in range(n))


def is_identity(m) -> bool:
    return all(m[i][j] == (1 if i == j else 0) for i in range(len(m)) for j in range(len(m)))


def f_d_pullback_matrix(g: int, d: int):
    """``f_d^*: H^2(Sym^{d+1}) -> H^2(Sym^d)`` in the Macdonald bases."""
    return restriction_matrix(g, d + 1, d)


def h_pullback_matrix(g: int, r: int, d: int):
    """``h^*: H^2(Sym^{d+r}) -> H^2(Sym^d)`` for ``h(z) = r x_0 + z``."""
    return restriction_matrix(g, d + r, d)


def _shapes(g: int, r: int, d: int, rho: int, method: str):
    # "closed" is the fast Betti evaluator; the acceptance suite pins it to
    # the orbit count, and it has no basis-size guard (needed for Q(r, d+r))
    model = NSModel(g, rho)
    b2_pic = comb(2 * g, 2)
    b2_sym = sym_poincare(g, d, method).betti[2]
    b2_quot = betti_quot(g, r, d, 2, method)
    return (
        brauer_shape(b2_pic, model.rho_pic),
        brauer_shape(b2_sym, model.ns_sym),
        brauer_shape(b2_quot, model.ns_quot),
    )


def verify_theorem1(g: int, r: int, d: int, rho_pic: int = 1, method: str = "closed") -> dict:
    if d < 2 or r < 2:
        raise ValueError("need d >= 2 and r >= 2")
    pic, sym, quot = _shapes(g, r, d, rho_pic, method)
    ok = pic == sym == quot and pic.free_rank == comb(2 * g, 2) - rho_pic
    return {
        "rank_pic": pic.free_rank,
        "rank_sym": sym.free_rank,
        "rank_quot": quot.free_rank,
        "rho": rho_pic,
        "pass": ok,
    }


def verify_delta_diagram(g: int, r: int, d: int, rho_pic: int = 1, method: str = "closed") -> dict:
    if d < 2 or r < 1:
        raise ValueError("need d >= 2 and r >= 1")
    h_ok = is_identity(h_pullback_matrix(g, r, d))
    _, _, small = _shapes(g, r, d, rho_pic, method)
    _, _, large = _shapes(g, r, d + r, rho_pic, method)
    return {
        "h_identity": h_ok,
        "rank_quot_d": small.free_rank,
        "rank_quot_d_plus_r": large.free_rank,
        "rho": rho_pic,
        "pass": h_ok and small == large,
    }
