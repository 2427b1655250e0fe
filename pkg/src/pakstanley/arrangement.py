"""(k, l)-Coxeter arrangements: the hyperplanes x_i - x_j = a, i < j, a in [-l, k].

Coordinates are 1-based everywhere in the public API.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DomainError, InvalidPairError


@dataclass(frozen=True, order=True)
class CoxeterSpec:
    n: int
    k: int
    l: int

    def __post_init__(self):
        if self.n < 1 or self.k < 1 or self.l < 0:
            raise DomainError(f"need n >= 1, k >= 1, l >= 0; got {self}")

    @classmethod
    def catalan(cls, n: int, m: int) -> "CoxeterSpec":
        return cls(n, m, m)

    @classmethod
    def shi(cls, n: int, m: int) -> "CoxeterSpec":
        return cls(n, m, m - 1)

    def hyperplane_count(self) -> int:
        return (self.l + self.k + 1) * comb(self.n, 2)

    def is_catalan(self) -> bool:
        return self.k == self.l

    def is_shi(self) -> bool:
        return self.k == self.l + 1

    def m(self) -> int:
        if not self.is_catalan():
            raise DomainError(f"m is only defined when k == l, got {self}")
        return self.k

    @property
    def pairs(self) -> list[tuple[int, int]]:
        """All pairs (i, j) with 1 <= i < j <= n, in lex order."""
        n = self.n
        return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


@dataclass(frozen=True)
class Hyperplane:
    """The hyperplane x_i - x_j = m in normalized form (m >= 0, and i > j when m == 0).

    The region R0 lies on the side x_i - x_j < m, so crossing away from R0
    increments coordinate j of the Pak-Stanley label.
    """
    i: int
    j: int
    m: int

    def __post_init__(self):
        if self.i == self.j:
            raise InvalidPairError(f"i == j == {self.i}")
        if self.m < 0 or (self.m == 0 and self.i < self.j):
            raise DomainError(f"not in normalized form: {self}")

    def increment_target(self) -> int:
        return self.j

    def is_valid_for(self, spec: CoxeterSpec) -> bool:
        if max(self.i, self.j) > spec.n or min(self.i, self.j) < 1:
            return False
        if self.i < self.j:
            return 1 <= self.m <= spec.k
        return self.m <= spec.l

    def sort_key(self):
        # sign: +1 for x_lo - x_hi = m, -1 for x_hi - x_lo = m
        lo, hi = min(self.i, self.j), max(self.i, self.j)
        return (lo, hi, self.m, 1 if self.i < self.j else -1)

    def __str__(self):
        return f"x{self.i}-x{self.j}={self.m}"


def normalize(i: int, j: int, a: int) -> Hyperplane:
    """Rewrite x_i - x_j = a in normalized form."""
    if i == j:
        raise InvalidPairError(f"i == j == {i}")
    if a > 0:
        return Hyperplane(i, j, a)
    if a < 0:
        return Hyperplane(j, i, -a)
    return Hyperplane(max(i, j), min(i, j), 0)


def hyperplanes(spec: CoxeterSpec) -> list[Hyperplane]:
    out = [normalize(i, j, a) for i, j in spec.pairs for a in range(-spec.l, spec.k + 1)]
    out.sort(key=Hyperplane.sort_key)
    return out
