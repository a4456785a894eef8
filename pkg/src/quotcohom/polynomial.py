from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple


@dataclass(frozen=True)
class PoincarePolynomial:
    """Betti numbers ``b_0 .. b_{2 dim}`` of a compact complex variety of dimension ``dim``."""

    dim: int
    betti: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "betti", tuple(int(b) for b in self.betti))
        if len(self.betti) != 2 * self.dim + 1:
            raise ValueError("expected %d Betti numbers, got %d" % (2 * self.dim + 1, len(self.betti)))
        if any(b < 0 for b in self.betti):
            raise ValueError("Betti numbers must be nonnegative")

    def is_palindromic(self) -> bool:
        return self.betti == self.betti[::-1]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))

    def __mul__(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        return PoincarePolynomial(self.dim + other.dim, convolve(self.betti, other.betti))

    def to_dict(self) -> dict:
        return {"dim": self.dim, "betti": list(self.betti)}

    @classmethod
    def from_dict(cls, data: dict) -> "PoincarePolynomial":
        return cls(int(data["dim"]), tuple(data["betti"]))

    def __str__(self):
        parts = []
        for k, b in enumerate(self.betti):
            if not b:
                continue
            if k == 0:
                parts.append(str(b))
            else:
                mono = "t" if k == 1 else "t^%d" % k
                parts.append(mono if b == 1 else "%d*%s" % (b, mono))
        return " + ".join(parts) or "0"


def convolve(a: Sequence[int], b: Sequence[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out
