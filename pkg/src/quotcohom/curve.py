"""Exact integral cohomology of the powers X^n of a genus-g curve.

A class is a finite integer combination of Kunneth words ``a_1 (x) ... (x) a_n``
where each letter is ``1`` (degree 0), ``a_i`` for ``1 <= i <= 2g`` (degree 1)
or ``w`` (the oriented point class, degree 2).  Letters are stored as ints::

    0          -> 1
    1 .. 2g    -> a_1 .. a_2g
    2g + 1     -> w

so that the natural integer order is ``1 < a_1 < ... < a_2g < w``.

Sign convention
---------------
Words are read right to left: the word ``a_1 (x) ... (x) a_n`` is the class
``pr_n^* a_n  u  ...  u  pr_1^* a_1``.  Consequently the product of two words
is the slotwise product of letters times ``(-1)^N`` with

    N = #{(s, t) : s < t, a_s odd, b_t odd}.

This is the mirror image of the textbook convention.  It is the one for which
the words in :func:`diagonal_class` are the Poincare dual of the diagonal and
for which the pairing table of :mod:`quotcohom.divisor` comes out with the
signs ``int_X at_i u at_j``.  Both facts are checked by the test-suite rather
than assumed.

The symplectic form is ``a_i u a_{i+g} = w`` for ``i <= g``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

Word = Tuple[int, ...]

UNIT = 0


class DimensionError(ValueError):
    """Classes living on different powers of the curve were combined."""


@dataclass(frozen=True)
class GenusContext:
    """The curve data: only the genus matters, the pairing is fixed."""

    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")

    @property
    def omega(self) -> int:
        return 2 * self.genus + 1

    @property
    def letters(self) -> range:
        return range(2 * self.genus + 2)

    @property
    def alphas(self) -> range:
        return range(1, 2 * self.genus + 1)

    def degree(self, letter: int) -> int:
        if letter == UNIT:
            return 0
        if letter == self.omega:
            return 2
        return 1

    def pairing(self, i: int, j: int) -> int:
        """``a_i u a_j = pairing(i, j) w``."""
        g = self.genus
        if i <= g and j == i + g:
            return 1
        if i > g and j == i - g:
            return -1
        return 0

    def pairing_matrix(self) -> list:
        return [[self.pairing(i, j) for j in self.alphas] for i in self.alphas]

    def letter_name(self, letter: int) -> str:
        if letter == UNIT:
            return "1"
        if letter == self.omega:
            return "w"
        return "a%d" % letter

    def parse_letter(self, name: str) -> int:
        if name == "1":
            return UNIT
        if name == "w":
            return self.omega
        if name.startswith("a") and name[1:].isdigit():
            i = int(name[1:])
            if 1 <= i <= 2 * self.genus:
                return i
        raise ValueError("unknown letter %r for genus %d" % (name, self.genus))


@lru_cache(maxsize=None)
def _tables(g: int):
    ctx = GenusContext(g)
    deg = tuple(ctx.degree(x) for x in ctx.letters)
    w = ctx.omega
    mult = {}
    for a in ctx.letters:
        for b in ctx.letters:
            if a == UNIT:
                mult[a, b] = (1, b)
            elif b == UNIT:
                mult[a, b] = (1, a)
            elif a == w or b == w:
                continue
            else:
                p = ctx.pairing(a, b)
                if p:
                    mult[a, b] = (p, w)
    return deg, mult


class CohomClass:
    """An element of H^*(X^n; Z), kept in canonical form (no zero coefficients)."""

    __slots__ = ("ctx", "n", "_terms", "_key")

    def __init__(self, ctx: GenusContext, n: int, terms: Optional[Mapping[Word, int]] = None):
        if n < 1:
            raise DimensionError("a class needs at least one factor")
        clean = {}
        top = ctx.omega
        for word, coeff in (terms or {}).items():
            word = tuple(word)
            if len(word) != n:
                raise DimensionError("word %r does not have %d letters" % (word, n))
            if any(x < 0 or x > top for x in word):
                raise ValueError("letter out of range in %r" % (word,))
            if coeff:
                clean[word] = int(coeff)
        self.ctx = ctx
        self.n = n
        self._terms = clean
        self._key = None

    # -- container protocol -------------------------------------------------

    @property
    def terms(self) -> Dict[Word, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Word, int]]:
        return iter(sorted(self._terms.items()))

    def coefficient(self, word: Sequence[int]) -> int:
        return self._terms.get(tuple(word), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set:
        deg, _ = _tables(self.ctx.genus)
        return {sum(deg[x] for x in w) for w in self._terms}

    def degree(self) -> int:
        """Degree of a nonzero homogeneous class."""
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("class is not homogeneous (degrees %s)" % sorted(ds))
        return ds.pop()

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "CohomClass"):
        if not isinstance(other, CohomClass):
            raise TypeError("expected CohomClass, got %s" % type(other).__name__)
        if other.ctx != self.ctx:
            raise DimensionError("genus mismatch")
        if other.n != self.n:
            raise DimensionError("factor count mismatch: %d vs %d" % (self.n, other.n))

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return CohomClass(self.ctx, self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return CohomClass(self.ctx, self.n, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, CohomClass):
            return cup(self, other)
        if isinstance(other, int):
            return CohomClass(self.ctx, self.n, {w: c * other for w, c in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        out = unit(self.ctx, self.n)
        for _ in range(k):
            out = cup(out, self)
        return out

    def __eq__(self, other):
        if not isinstance(other, CohomClass):
            return NotImplemented
        return self.ctx == other.ctx and self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._key is None:
            self._key = hash((self.ctx.genus, self.n, frozenset(self._terms.items())))
        return self._key

    # -- display / serialization ---------------------------------------------

    def word_str(self, word: Word) -> str:
        return "(x)".join(self.ctx.letter_name(x) for x in word)

    def __repr__(self):
        if not self._terms:
            return "CohomClass(g=%d, n=%d, 0)" % (self.ctx.genus, self.n)
        parts = ["%+d*%s" % (c, self.word_str(w)) for w, c in self.items()]
        return "CohomClass(g=%d, n=%d, %s)" % (self.ctx.genus, self.n, " ".join(parts))

    def to_json(self) -> list:
        return [
            {"letters": [self.ctx.letter_name(x) for x in w], "coeff": c}
            for w, c in self.items()
        ]

    @classmethod
    def from_json(cls, ctx: GenusContext, n: int, data: Iterable[Mapping]) -> "CohomClass":
        terms: Dict[Word, int] = {}
        for entry in data:
            w = tuple(ctx.parse_letter(x) for x in entry["letters"])
            terms[w] = terms.get(w, 0) + int(entry["coeff"])
        return cls(ctx, n, terms)


# -- constructors ---------------------------------------------------------------


def zero(ctx: GenusContext, n: int) -> CohomClass:
    return CohomClass(ctx, n)


def unit(ctx: GenusContext, n: int) -> CohomClass:
    return CohomClass(ctx, n, {(UNIT,) * n: 1})


def monomial(ctx: GenusContext, letters: Sequence[int], coeff: int = 1) -> CohomClass:
    return CohomClass(ctx, len(letters), {tuple(letters): coeff})


def placed(ctx: GenusContext, n: int, placements: Mapping[int, int], coeff: int = 1) -> CohomClass:
    """The word with the given letters at the given (1-based) slots and 1 elsewhere."""
    w = [UNIT] * n
    for slot, letter in placements.items():
        if not 1 <= slot <= n:
            raise IndexError("slot %d out of range 1..%d" % (slot, n))
        w[slot - 1] = letter
    return monomial(ctx, w, coeff)


def eta(ctx: GenusContext, n: int, j: int) -> CohomClass:
    """``eta^j``: the point class w at slot j."""
    return placed(ctx, n, {j: ctx.omega})


def lam(ctx: GenusContext, n: int, i: int, j: int) -> CohomClass:
    """``lambda_i^j``: the letter a_i at slot j."""
    if i not in ctx.alphas:
        raise IndexError("alpha index %d out of range" % i)
    return placed(ctx, n, {j: i})


def alpha_tilde(ctx: GenusContext, i: int) -> CohomClass:
    """The class on X with ``a_i u at_i = w``.

    ``at_i = a_{i+g}`` for ``i <= g`` and ``-a_{i-g}`` for ``i > g``.
    """
    g = ctx.genus
    if i <= g:
        return monomial(ctx, (i + g,))
    return monomial(ctx, (i - g,), -1)


def top_word(ctx: GenusContext, n: int) -> Word:
    return (ctx.omega,) * n


# -- operations -----------------------------------------------------------------


def _cup_words(w1: Word, w2: Word, deg, mult):
    sign = 0
    odd_before = 0
    out = []
    for a, b in zip(w1, w2):
        if deg[b] & 1:
            sign += odd_before
        r = mult.get((a, b))
        if r is None:
            return None
        coef, x = r
        if coef < 0:
            sign += 1
        out.append(x)
        if deg[a] & 1:
            odd_before += 1
    return tuple(out), (-1 if sign & 1 else 1)


def cup(a: CohomClass, b: CohomClass) -> CohomClass:
    a._check(b)
    deg, mult = _tables(a.ctx.genus)
    out: Dict[Word, int] = {}
    for w1, c1 in a._terms.items():
        for w2, c2 in b._terms.items():
            r = _cup_words(w1, w2, deg, mult)
            if r is None:
                continue
            w, s = r
            out[w] = out.get(w, 0) + s * c1 * c2
    return CohomClass(a.ctx, a.n, out)


def cup_all(classes: Iterable[CohomClass], ctx: GenusContext, n: int) -> CohomClass:
    out = unit(ctx, n)
    for c in classes:
        out = cup(out, c)
    return out


def integrate(c: CohomClass) -> int:
    """Evaluate on the fundamental class: the coefficient of ``w (x) ... (x) w``."""
    return c.coefficient(top_word(c.ctx, c.n))


def _odd_inversions(word: Word, images: Sequence[int], deg) -> int:
    odd = [images[s] for s, x in enumerate(word) if deg[x] & 1]
    inv = 0
    for s in range(len(odd)):
        for t in range(s + 1, len(odd)):
            if odd[s] > odd[t]:
                inv += 1
    return inv


def _check_perm(sigma: Sequence[int], n: int):
    if len(sigma) != n or sorted(sigma) != list(range(1, n + 1)):
        raise DimensionError("%r is not a permutation of 1..%d" % (tuple(sigma), n))


def permute(c: CohomClass, sigma: Sequence[int]) -> CohomClass:
    """Move the letter in slot s to slot ``sigma[s-1]`` (1-based images).

    Each word picks up the sign of the induced reordering of its odd letters.
    ``permute(permute(c, s), t) == permute(c, t o s)``.
    """
    n = c.n
    _check_perm(sigma, n)
    deg, _ = _tables(c.ctx.genus)
    images = [s - 1 for s in sigma]
    out: Dict[Word, int] = {}
    for w, coef in c._terms.items():
        new = [0] * n
        for s, x in enumerate(w):
            new[images[s]] = x
        sign = -1 if _odd_inversions(w, images, deg) & 1 else 1
        key = tuple(new)
        out[key] = out.get(key, 0) + sign * coef
    return CohomClass(c.ctx, n, out)


def compose(tau: Sequence[int], sigma: Sequence[int]) -> Tuple[int, ...]:
    """``tau o sigma`` as a tuple of 1-based images."""
    return tuple(tau[s - 1] for s in sigma)


def transposition(n: int, i: int, j: int) -> Tuple[int, ...]:
    perm = list(range(1, n + 1))
    perm[i - 1], perm[j - 1] = j, i
    return tuple(perm)


def insertion_pullback(c: CohomClass, k: int) -> CohomClass:
    """Pull back along ``X^d -> X^{d+1}``, ``(x_1..x_d) -> (x_1..x_d, x_k)``."""
    d = c.n - 1
    if d < 1 or not 1 <= k <= d:
        raise IndexError("insertion slot %d out of range for X^%d" % (k, c.n))
    deg, mult = _tables(c.ctx.genus)
    out: Dict[Word, int] = {}
    for w, coef in c._terms.items():
        last = w[d]
        r = mult.get((last, w[k - 1]))
        if r is None:
            continue
        p, x = r
        sign = p
        if deg[last] & 1 and sum(deg[y] for y in w[k:d]) & 1:
            sign = -sign
        key = w[: k - 1] + (x,) + w[k:d]
        out[key] = out.get(key, 0) + sign * coef
    return CohomClass(c.ctx, d, out)


def point_restrict(c: CohomClass, slot: int) -> CohomClass:
    """Restrict to ``{x_0}`` in one factor: words with 1 there survive, slot deleted."""
    if c.n < 2 or not 1 <= slot <= c.n:
        raise IndexError("cannot restrict slot %d of X^%d" % (slot, c.n))
    i = slot - 1
    out = {w[:i] + w[i + 1:]: coef for w, coef in c._terms.items() if w[i] == UNIT}
    return CohomClass(c.ctx, c.n - 1, out)


def slant_last(c: CohomClass, a: CohomClass) -> CohomClass:
    """Slant product of ``c`` on ``X^{n+1}`` with a homology class of the last factor.

    ``a`` is a class on X read through the Kronecker dual of the letter basis:
    the homology class ``a^v`` with ``<e, a^v> = coefficient of e in a`` for
    every basis letter e.  So ``a = w`` slants against the fundamental class
    [X], ``a = 1`` against the point class (this is :func:`point_restrict`
    on the last slot), and ``a = at_i`` against the Poincare dual of ``a_i``,
    i.e. ``<e, at_i^v> = int_X a_i u e``.  The last letter is the leftmost
    factor under the word convention, so no sign is introduced.
    """
    if a.n != 1:
        raise DimensionError("slant partner must be a class on X")
    if a.ctx != c.ctx:
        raise DimensionError("genus mismatch")
    if c.n < 2:
        raise DimensionError("slant needs at least two factors")
    pair = {w[0]: coef for w, coef in a._terms.items()}
    out: Dict[Word, int] = {}
    for w, coef in c._terms.items():
        p = pair.get(w[-1])
        if p:
            key = w[:-1]
            out[key] = out.get(key, 0) + p * coef
    return CohomClass(c.ctx, c.n - 1, out)


def tensor(a: CohomClass, b: CohomClass) -> CohomClass:
    """Kunneth product ``a (x) b`` on ``X^{m+n}``: concatenation of words."""
    if a.ctx != b.ctx:
        raise DimensionError("genus mismatch")
    out: Dict[Word, int] = {}
    for w1, c1 in a._terms.items():
        for w2, c2 in b._terms.items():
            out[w1 + w2] = out.get(w1 + w2, 0) + c1 * c2
    return CohomClass(a.ctx, a.n + b.n, out)


def diagonal_class(ctx: GenusContext, n: int, j: int, k: int) -> CohomClass:
    """Class of ``{x_j = x_k}`` in ``X^n`` (j < k)."""
    if not 1 <= j < k <= n:
        raise IndexError("need 1 <= j < k <= n, got j=%d k=%d n=%d" % (j, k, n))
    g = ctx.genus
    terms = {}
    for slot in (j, k):
        w = [UNIT] * n
        w[slot - 1] = ctx.omega
        terms[tuple(w)] = 1
    for i in ctx.alphas:
        w = [UNIT] * n
        w[j - 1] = i
        w[k - 1] = i + g if i <= g else i - g
        terms[tuple(w)] = 1 if i <= g else -1
    return CohomClass(ctx, n, terms)


def words_of_degree(ctx: GenusContext, n: int, k: int) -> Iterator[Word]:
    """All Kunneth words of total degree k on X^n, in increasing order."""
    deg, _ = _tables(ctx.genus)
    for w in itertools.product(ctx.letters, repeat=n):
        if sum(deg[x] for x in w) == k:
            yield w
