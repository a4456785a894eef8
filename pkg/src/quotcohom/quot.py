"""Betti numbers of the Quot scheme Q(r, d) from its Bialynicki-Birula cells.

The fixed loci of the torus acting on Q(r, d) are indexed by *ordered* weak
compositions ``m = (m_1, ..., m_r)`` of d (the literature calls them
partitions, but order matters: the i-th entry is the degree of the i-th
line subsheaf).  The component for m is ``Sym^{m_1} X x ... x Sym^{m_r} X``
and its cell contributes its cohomology shifted up by ``2 * shift(m)`` where
``shift(m) = sum (i-1) m_i``.

Cell dimensions are reported as ``d + shift(m)``.  With this normalization
the cell over ``(d, 0, ..., 0)`` has dimension d and the one over
``(0, ..., 0, d)`` has dimension rd; the opposite one-parameter subgroup
reverses the roles.  The Betti numbers do not depend on the choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import List, Tuple

from .polynomial import PoincarePolynomial, convolve
from .symmetric import DEFAULT_MAX_BASIS, sym_betti


@dataclass(frozen=True)
class Composition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if not self.parts or any(p < 0 for p in self.parts):
            raise ValueError("a composition needs r >= 1 nonnegative parts")

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def rank(self) -> int:
        return len(self.parts)

    @property
    def shift(self) -> int:
        return sum(i * m for i, m in enumerate(self.parts))


def compositions(r: int, d: int) -> List[Composition]:
    """Weak compositions of d into r parts, largest first part first."""
    if r < 1 or d < 0:
        raise ValueError("need r >= 1 and d >= 0")

    def rec(r, d):
        if r == 1:
            yield (d,)
            return
        for first in range(d, -1, -1):
            for rest in rec(r - 1, d - first):
                yield (first,) + rest

    return [Composition(p) for p in rec(r, d)]


def cell_dimension(m: Composition, d: int) -> int:
    if m.total != d:
        raise ValueError("composition %r does not sum to %d" % (m.parts, d))
    return d + m.shift


@lru_cache(maxsize=None)
def _sym_betti(g: int, d: int, method: str, max_basis: int) -> Tuple[int, ...]:
    return tuple(sym_betti(g, d, method, max_basis))


def _fixed_component_betti(g, m: Composition, method, max_basis) -> List[int]:
    out = [1]
    for part in m.parts:
        out = convolve(out, _sym_betti(g, part, method, max_basis))
    return out


def poincare_quot(g: int, r: int, d: int, method: str = "orbit", max_basis: int = DEFAULT_MAX_BASIS) -> PoincarePolynomial:
    betti = [0] * (2 * r * d + 1)
    for m in compositions(r, d):
        comp = _fixed_component_betti(g, m, method, max_basis)
        for j, b in enumerate(comp):
            betti[j + 2 * m.shift] += b
    return PoincarePolynomial(r * d, tuple(betti))


def betti_quot(g: int, r: int, d: int, i: int, method: str = "orbit", max_basis: int = DEFAULT_MAX_BASIS) -> int:
    if not 0 <= i <= 2 * r * d:
        raise ValueError("degree %d out of range 0..%d" % (i, 2 * r * d))
    return poincare_quot(g, r, d, method, max_basis).betti[i]


def sym_poincare(g: int, d: int, method: str = "orbit", max_basis: int = DEFAULT_MAX_BASIS) -> PoincarePolynomial:
    return PoincarePolynomial(d, _sym_betti(g, d, method, max_basis))


@dataclass(frozen=True)
class H2BasisLabel:
    tag: str  # "C", "Gamma2", "Eta" or "AlphaPair"
    pair: Tuple[int, int] = None

    def __str__(self):
        if self.tag == "AlphaPair":
            return "AlphaPair(%d,%d)" % self.pair
        return self.tag


def h2_basis_labels(g: int, r: int, d: int) -> List[H2BasisLabel]:
    """Labels of the integral basis of H^2(Q(r, d)) for d >= 2.

    For r >= 2: c, gamma_2 and the products abar_i u abar_j.  For r = 1 the
    Quot scheme is Sym^d X, there is no gamma_2, and c is replaced by eta.
    """
    if d < 2 or r < 1 or g < 0:
        raise ValueError("labels are defined for d >= 2, r >= 1")
    pairs = [H2BasisLabel("AlphaPair", (i, j)) for i in range(1, 2 * g + 1) for j in range(i + 1, 2 * g + 1)]
    if r == 1:
        return [H2BasisLabel("Eta")] + pairs
    return [H2BasisLabel("C"), H2BasisLabel("Gamma2")] + pairs


def expected_h2_rank(g: int, r: int) -> int:
    return comb(2 * g, 2) + (2 if r >= 2 else 1)


def euler_characteristic_from_fixed_loci(g: int, r: int, d: int) -> int:
    """Sum over fixed components of the product of chi(Sym^{m_i} X)."""
    total = 0
    for m in compositions(r, d):
        prod = 1
        for part in m.parts:
            prod *= sym_euler_series(g, part)
        total += prod
    return total


def sym_euler_series(g: int, d: int) -> int:
    """Coefficient of q^d in (1 - q)^(2g - 2), by explicit series arithmetic."""
    e = 2 * g - 2
    series = [1] + [0] * d
    factor = [1, -1] if e >= 0 else [1] * (d + 1)
    for _ in range(abs(e)):
        series = convolve(series, factor)[: d + 1]
    return series[d]

