"""Cohomology of Sym^d X as the signed S_d-invariants of H^*(X^d).

The orbit of a Kunneth word under S_d is its multiset of letters.  The orbit
sum survives exactly when no permutation fixing the word acts by -1, i.e.
when no odd letter occurs twice.  Ranks are counted on these canonical
representatives; :func:`symmetrize` is the literal d!-term sum, kept for
cross-checks and for building explicit invariant vectors.

Integrality note: ranks are computed over Q.  Whether q_d^* hits the whole
lattice of signed invariants or a finite-index sublattice does not affect
any rank computed here and is not decided by this module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Tuple

from . import linalg
from .curve import (
    CohomClass,
    GenusContext,
    Word,
    _tables,
    cup,
    eta,
    lam,
    permute,
    unit,
    zero,
)
from .errors import ResourceLimitError

DEFAULT_MAX_BASIS = 2_000_000
DEFAULT_MAX_SYMMETRIZE = 7


def check_basis_size(g: int, d: int, max_basis: int = DEFAULT_MAX_BASIS):
    size = (2 * g + 2) ** d
    if size > max_basis:
        raise ResourceLimitError(
            "H^*(X^%d) for g=%d has %d basis words, above the limit %d" % (d, g, size, max_basis)
        )


def symmetrize(c: CohomClass, max_n: int = DEFAULT_MAX_SYMMETRIZE) -> CohomClass:
    """Sum of ``permute(c, s)`` over all of S_n."""
    if c.n > max_n:
        raise ResourceLimitError("refusing to sum %d! permutations (limit n <= %d)" % (c.n, max_n))
    out = zero(c.ctx, c.n)
    for perm in itertools.permutations(range(1, c.n + 1)):
        out = out + permute(c, perm)
    return out


def _has_repeated_odd(rep: Word, deg) -> bool:
    odd = [x for x in rep if deg[x] & 1]
    return len(odd) != len(set(odd))


def orbit_representatives(g: int, d: int, k: int) -> List[Word]:
    """Sorted words of degree k on X^d whose signed orbit sum is nonzero."""
    ctx = GenusContext(g)
    deg, _ = _tables(g)
    reps = []
    for rep in itertools.combinations_with_replacement(ctx.letters, d):
        if sum(deg[x] for x in rep) != k:
            continue
        if not _has_repeated_odd(rep, deg):
            reps.append(rep)
    return reps


def orbit_sum(ctx: GenusContext, rep: Word) -> CohomClass:
    """Signed orbit sum of a word: ``symmetrize(rep) / |Stab(rep)|``."""
    n = len(rep)
    seen: Dict[Word, CohomClass] = {}
    base = CohomClass(ctx, n, {tuple(rep): 1})
    out = zero(ctx, n)
    for perm in itertools.permutations(range(1, n + 1)):
        img = permute(base, perm)
        (w, c), = img.items()
        if w in seen:
            continue
        seen[w] = img
        out = out + img
    return out


@dataclass
class InvariantBasis:
    g: int
    d: int
    degree: int
    vectors: List[CohomClass] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.vectors)


def invariant_basis(g: int, d: int, k: int, max_n: int = DEFAULT_MAX_SYMMETRIZE) -> InvariantBasis:
    if d > max_n:
        raise ResourceLimitError("orbit sums on X^%d exceed the limit n <= %d" % (d, max_n))
    ctx = GenusContext(g)
    vecs = [orbit_sum(ctx, rep) for rep in orbit_representatives(g, d, k)]
    return InvariantBasis(g, d, k, vecs)


def invariant_rank(g: int, d: int, k: int, max_basis: int = DEFAULT_MAX_BASIS) -> int:
    """b_k(Sym^d X) as the rank of the signed invariants in H^k(X^d)."""
    if d < 0 or g < 0:
        raise ValueError("need g, d >= 0")
    if d == 0:
        return 1 if k == 0 else 0
    if not 0 <= k <= 2 * d:
        return 0
    check_basis_size(g, d, max_basis)
    return len(orbit_representatives(g, d, k))


def betti_sym_closed(g: int, d: int, k: int) -> int:
    if d == 0:
        return 1 if k == 0 else 0
    if not 0 <= k <= 2 * d:
        return 0
    return sum(comb(2 * g, k - 2 * q) for q in range(max(0, k - d), k // 2 + 1))


def sym_betti(g: int, d: int, method: str = "orbit", max_basis: int = DEFAULT_MAX_BASIS) -> List[int]:
    if method == "orbit":
        check_basis_size(g, d, max_basis)
        return [invariant_rank(g, d, k, max_basis) for k in range(2 * d + 1)]
    if method == "closed":
        return [betti_sym_closed(g, d, k) for k in range(2 * d + 1)]
    raise ValueError("unknown method %r" % method)


def macdonald_generators(g: int, d: int) -> Tuple[List[CohomClass], CohomClass]:
    """``(lambda_1, ..., lambda_2g, eta)`` pulled back to X^d."""
    if d < 1:
        raise ValueError("need d >= 1")
    ctx = GenusContext(g)
    lams = []
    for i in ctx.alphas:
        lams.append(sum((lam(ctx, d, i, j) for j in range(1, d + 1)), zero(ctx, d)))
    et = sum((eta(ctx, d, j) for j in range(1, d + 1)), zero(ctx, d))
    return lams, et


def generator_monomials(g: int, d: int, k: int):
    """Yield ``(label, class)`` for each ``lambda_S eta^q`` of degree k."""
    lams, et = macdonald_generators(g, d)
    ctx = GenusContext(g)
    eta_pows = [unit(ctx, d)]
    for _ in range(k // 2):
        eta_pows.append(cup(eta_pows[-1], et))
    for q in range(k // 2 + 1):
        s = k - 2 * q
        if s > 2 * g:
            continue
        for subset in itertools.combinations(range(2 * g), s):
            c = eta_pows[q]
            for i in subset:
                c = cup(c, lams[i])
            label = "".join("l%d." % (i + 1) for i in subset) + "eta^%d" % q
            yield label, c


@dataclass
class GenerationReport:
    g: int
    d: int
    degrees: Dict[int, Tuple[int, int]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(a == b for a, b in self.degrees.values())

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "d": self.d,
            "degrees": [
                {"k": k, "span_rank": a, "invariant_rank": b, "pass": a == b}
                for k, (a, b) in sorted(self.degrees.items())
            ],
            "pass": self.passed,
        }


def generation_check(g: int, d: int, k_max: int = None, max_basis: int = DEFAULT_MAX_BASIS) -> GenerationReport:
    """Compare the span of cup monomials in the generators with the invariant rank."""
    if k_max is None:
        k_max = 2 * d
    if k_max > 2 * d:
        raise ValueError("k_max %d exceeds 2d = %d" % (k_max, 2 * d))
    check_basis_size(g, d, max_basis)
    report = GenerationReport(g, d)
    for k in range(k_max + 1):
        span = linalg.rank(c.terms for _, c in generator_monomials(g, d, k))
        report.degrees[k] = (span, invariant_rank(g, d, k, max_basis))
    return report
