"""The universal divisor on Sym^d X x X, pulled back to X^{d+1}.

Degree-2 Kunneth basis of H^2(X^{d+1}) and its declared duals in H^{2d}:

* ``eta^j``                -> ``w (x)..(x) 1 (x)..(x) w`` (1 in slot j)
* ``a_i@j a_i'@j'`` (j<j') -> ``-(w..at_i..at_i'..w)`` (at in slots j, j')

The minus sign on the second family is forced: with any Koszul convention
the displayed word pairs to -1 against its basis word, and the duals must
pair to +1.  With it, row k of the pairing table is the list of Kunneth
coordinates of the diagonal ``D_k = {x_k = x_{d+1}}``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .curve import (
    CohomClass,
    GenusContext,
    alpha_tilde,
    cup,
    diagonal_class,
    eta,
    insertion_pullback,
    integrate,
    placed,
    point_restrict,
    slant_last,
    tensor,
    unit,
    zero,
)
from .symmetric import macdonald_generators


@dataclass(frozen=True)
class BasisElement:
    label: str
    vector: CohomClass
    dual: CohomClass
    kind: str  # "eta" or "pair"
    slots: Tuple[int, ...]
    alphas: Tuple[int, ...] = ()


def _tilde_letter(ctx: GenusContext, i: int) -> Tuple[int, int]:
    ((w, c),) = alpha_tilde(ctx, i).items()
    return w[0], c


def degree2_basis(ctx: GenusContext, n: int) -> List[BasisElement]:
    out = []
    for j in range(1, n + 1):
        dual = placed(ctx, n, {s: ctx.omega for s in range(1, n + 1) if s != j})
        out.append(BasisElement("eta^%d" % j, eta(ctx, n, j), dual, "eta", (j,)))
    for j in range(1, n + 1):
        for jp in range(j + 1, n + 1):
            for i in ctx.alphas:
                for ip in ctx.alphas:
                    vec = placed(ctx, n, {j: i, jp: ip})
                    ti, si = _tilde_letter(ctx, i)
                    tip, sip = _tilde_letter(ctx, ip)
                    spots = {s: ctx.omega for s in range(1, n + 1)}
                    spots[j], spots[jp] = ti, tip
                    dual = placed(ctx, n, spots, -si * sip)
                    label = "a%d@%d.a%d@%d" % (i, j, ip, jp)
                    out.append(BasisElement(label, vec, dual, "pair", (j, jp), (i, ip)))
    return out


def universal_divisor_pullback(g: int, d: int) -> CohomClass:
    """``(q x id)^*[D^univ] = sum_k [D_k]`` on X^{d+1}."""
    if d < 1:
        raise ValueError("need d >= 1")
    ctx = GenusContext(g)
    return sum((diagonal_class(ctx, d + 1, k, d + 1) for k in range(1, d + 1)), zero(ctx, d + 1))


@dataclass
class PairingTable:
    g: int
    d: int
    columns: List[str]
    rows: List[List[int]]

    def entry(self, k: int, label: str) -> int:
        return self.rows[k - 1][self.columns.index(label)]

    def to_dict(self) -> dict:
        return {"g": self.g, "d": self.d, "columns": list(self.columns), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_dict(cls, data: dict) -> "PairingTable":
        return cls(data["g"], data["d"], list(data["columns"]), [list(r) for r in data["rows"]])

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k"] + self.columns)
        for k, row in enumerate(self.rows, 1):
            writer.writerow([k] + row)
        return buf.getvalue()


def pairing_table(g: int, d: int) -> PairingTable:
    """``entry(k, b) = int_{X^d} iota_k^* b^v`` over the degree-2 duals of X^{d+1}."""
    if d < 1 or g < 0:
        raise ValueError("need d >= 1, g >= 0")
    ctx = GenusContext(g)
    basis = degree2_basis(ctx, d + 1)
    rows = []
    for k in range(1, d + 1):
        rows.append([integrate(insertion_pullback(b.dual, k)) for b in basis])
    return PairingTable(g, d, [b.label for b in basis], rows)


def expected_entry(ctx: GenusContext, d: int, k: int, b: BasisElement) -> int:
    """The case analysis: eta columns hit j in {k, d+1}; pair columns only j=k, j'=d+1."""
    if b.kind == "eta":
        return 1 if b.slots[0] in (k, d + 1) else 0
    j, jp = b.slots
    if j == k and jp == d + 1:
        i, ip = b.alphas
        return integrate(cup(alpha_tilde(ctx, i), alpha_tilde(ctx, ip)))
    return 0


@dataclass
class Report:
    name: str
    passed: bool
    details: Dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"check": self.name, "pass": self.passed}
        out.update(self.details)
        return out


def eq_d_rhs(g: int, d: int, n: int) -> CohomClass:
    """``eta (x) 1 + n (1 (x) w) + sum lambda_i (x) a_{i+g} - sum lambda_i (x) a_{i-g}`` on X^{d+1}."""
    ctx = GenusContext(g)
    lams, et = macdonald_generators(g, d)
    one = unit(ctx, 1)
    w = placed(ctx, 1, {1: ctx.omega})
    rhs = tensor(et, one) + n * tensor(unit(ctx, d), w)
    for i in ctx.alphas:
        if i <= g:
            rhs = rhs + tensor(lams[i - 1], placed(ctx, 1, {1: i + g}))
        else:
            rhs = rhs - tensor(lams[i - 1], placed(ctx, 1, {1: i - g}))
    return rhs


def verify_eq_D(g: int, d: int, n: Optional[int] = None) -> Report:
    """Compare the Kunneth expansion of [D^univ] with the sum of the diagonals."""
    if n is None:
        n = d
    lhs = universal_divisor_pullback(g, d)
    rhs = eq_d_rhs(g, d, n)
    diff = lhs - rhs
    ctx = GenusContext(g)
    bad = [{"word": lhs.word_str(w), "lhs": lhs.coefficient(w), "rhs": rhs.coefficient(w)} for w, _ in diff.items()]
    return Report("eq_D", not bad, {"g": g, "d": d, "n": n, "discrepancies": bad})


def verify_prop_classes(g: int, d: int) -> Report:
    """Restriction to X^d x {x_0} gives eta; slant with at_i^v gives lambda_i."""
    ctx = GenusContext(g)
    D = universal_divisor_pullback(g, d)
    lams, et = macdonald_generators(g, d)
    restricted = point_restrict(D, d + 1)
    point_ok = restricted == et
    slants = []
    for i in ctx.alphas:
        s = slant_last(D, alpha_tilde(ctx, i))
        slants.append({"i": i, "pass": s == lams[i - 1]})
    slant_ok = all(s["pass"] for s in slants)
    return Report(
        "prop_classes",
        point_ok and slant_ok,
        {"g": g, "d": d, "restriction_is_eta": point_ok, "slants": slants},
    )


def reconstruct_diagonal(g: int, d: int, k: int) -> CohomClass:
    """``sum_b entry(k, b) * b`` from row k of the pairing table."""
    ctx = GenusContext(g)
    basis = degree2_basis(ctx, d + 1)
    out = zero(ctx, d + 1)
    for b in basis:
        e = integrate(insertion_pullback(b.dual, k))
        if e:
            out = out + e * b.vector
    return out
