"""Chern characters and Chern classes on P^1 x X.

H^*(P^1 x X; Z) has basis ``h^p x e`` with ``p in {0, 1}`` (h the point class
of P^1) and e a letter of the curve.  h is even, so products carry no signs
beyond those inside H^*(X).  Everything of degree > 4 vanishes, which makes
exponentials and inverses finite sums.

The family of quotients restricted to a rational curve ``P^1 -> Q(2, d)`` is

    0 -> W -> O^2 -> Qt = (O (x) O_D) + (O(1) (x) O_p) -> 0

with ``deg D = d - 1``.  The Chern character of each summand is assembled
from line bundles through ``O_D = O - O(-D)``.
"""

from __future__ import annotations

from typing import Dict, Tuple

from .curve import GenusContext, UNIT, _tables

Key = Tuple[int, int]


class P1XClass:
    __slots__ = ("ctx", "_terms")

    def __init__(self, ctx: GenusContext, terms: Dict[Key, int] = None):
        self.ctx = ctx
        self._terms = {k: int(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def scalar(cls, ctx, c: int) -> "P1XClass":
        return cls(ctx, {(0, UNIT): c})

    @classmethod
    def h(cls, ctx) -> "P1XClass":
        return cls(ctx, {(1, UNIT): 1})

    @classmethod
    def w(cls, ctx) -> "P1XClass":
        return cls(ctx, {(0, ctx.omega): 1})

    @classmethod
    def alpha(cls, ctx, i: int) -> "P1XClass":
        return cls(ctx, {(0, i): 1})

    def coefficient(self, p: int, x: int) -> int:
        return self._terms.get((p, x), 0)

    def degree_of(self, key: Key) -> int:
        deg, _ = _tables(self.ctx.genus)
        return 2 * key[0] + deg[key[1]]

    def piece(self, k: int) -> "P1XClass":
        return P1XClass(self.ctx, {key: c for key, c in self._terms.items() if self.degree_of(key) == k})

    def __add__(self, other):
        if isinstance(other, int):
            other = P1XClass.scalar(self.ctx, other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return P1XClass(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return P1XClass(self.ctx, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return P1XClass(self.ctx, {k: v * other for k, v in self._terms.items()})
        _, mult = _tables(self.ctx.genus)
        out: Dict[Key, int] = {}
        for (p1, x1), c1 in self._terms.items():
            for (p2, x2), c2 in other._terms.items():
                if p1 + p2 > 1:
                    continue
                r = mult.get((x1, x2))
                if r is None:
                    continue
                s, x = r
                key = (p1 + p2, x)
                out[key] = out.get(key, 0) + s * c1 * c2
        return P1XClass(self.ctx, out)

    __rmul__ = __mul__

    def halve(self) -> "P1XClass":
        if any(v % 2 for v in self._terms.values()):
            raise ArithmeticError("class %r is not divisible by 2" % self)
        return P1XClass(self.ctx, {k: v // 2 for k, v in self._terms.items()})

    def integrate(self) -> int:
        return self.coefficient(1, self.ctx.omega)

    def restrict_to_p1(self) -> Dict[int, int]:
        """Pull back to ``P^1 x {x}``: coefficients of 1 and h."""
        return {p: self.coefficient(p, UNIT) for p in (0, 1)}

    def slant_x(self, letter: int) -> Dict[int, int]:
        """Slant with the homology class of X Kronecker-dual to ``letter``."""
        return {p: self.coefficient(p, letter) for p in (0, 1)}

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = P1XClass.scalar(self.ctx, other)
        if not isinstance(other, P1XClass):
            return NotImplemented
        return self.ctx == other.ctx and self._terms == other._terms

    def __repr__(self):
        names = []
        for (p, x), c in sorted(self._terms.items()):
            base = ("h" if p else "") + ("" if x == UNIT else ("*" if p else "") + self.ctx.letter_name(x))
            names.append("%+d%s" % (c, ("*" + base) if base else ""))
        return "P1XClass(%s)" % (" ".join(names) or "0")


def line_bundle_ch(c1: P1XClass) -> P1XClass:
    """``exp(c1)``; terms of degree >= 6 vanish on a 2-dimensional space."""
    return 1 + c1 + (c1 * c1).halve()


def ch_from_chern(c1: P1XClass, c2: P1XClass, rank: int) -> P1XClass:
    return rank + c1 + (c1 * c1 - 2 * c2).halve()


def chern_from_ch(ch: P1XClass) -> Tuple[P1XClass, P1XClass]:
    c1 = ch.piece(2)
    c2 = (c1 * c1 - 2 * ch.piece(4)).halve()
    return c1, c2


def total_inverse(c: P1XClass) -> P1XClass:
    """``1 / c`` for a total class with constant term 1."""
    x = c - 1
    return 1 - x + x * x - x * x * x


def torsion_ch(ctx: GenusContext, length: int) -> P1XClass:
    """ch of ``O_{P^1} (x) O_D``, deg D = length, from ``O - O(-D)``."""
    return line_bundle_ch(P1XClass(ctx)) - line_bundle_ch(-length * P1XClass.w(ctx))


def twisted_point_ch(ctx: GenusContext) -> P1XClass:
    """ch of ``O(1) (x) O_p`` from ``O(1) (x) O - O(1) (x) O(-p)``."""
    h = P1XClass.h(ctx)
    return line_bundle_ch(h) - line_bundle_ch(h - P1XClass.w(ctx))


def quotient_chern_character(g: int, d: int) -> P1XClass:
    if d < 1:
        raise ValueError("need d >= 1")
    ctx = GenusContext(g)
    return torsion_ch(ctx, d - 1) + twisted_point_ch(ctx)


def quotient_total_chern(g: int, d: int) -> P1XClass:
    """Total Chern class of Qt by the Whitney formula over the two summands."""
    ctx = GenusContext(g)
    h, w = P1XClass.h(ctx), P1XClass.w(ctx)
    c_torsion = total_inverse(1 - (d - 1) * w)
    c_point = (1 + h) * total_inverse(1 + h - w)
    return c_torsion * c_point


def kernel_chern_classes(g: int, d: int) -> Tuple[P1XClass, P1XClass]:
    ch_w = 2 - quotient_chern_character(g, d)
    c1, c2 = chern_from_ch(ch_w)
    return c1, c2


def verify_c_identities(g: int, d: int) -> dict:
    """C1: c_1(W) restricted to P^1 x {x}; C2: slants of c_1(W) against a_i;
    C4: slant of c_2(W) against [X], integrated over P^1."""
    ctx = GenusContext(g)
    c1, c2 = kernel_chern_classes(g, d)
    c1_line = c1.restrict_to_p1()
    C1 = c1_line[1]
    C2 = [c1.slant_x(i)[1] for i in ctx.alphas]
    C4 = c2.slant_x(ctx.omega)[1]
    passed = C1 == 0 and all(v == 0 for v in C2) and C4 == 1 and c1_line[0] == 0
    return {"C1": C1, "C2": C2, "C4": C4, "pass": passed}
