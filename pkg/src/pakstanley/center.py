"""p-centers, center vectors and the label recognizers built on them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, NotALabelError


def p_center(a: Sequence[int], p: int) -> frozenset[int]:
    """Z_p(a): the largest set x_1 > x_2 > ... > x_q of indices with a_{x_j} <= p + j.

    Scanning from the right and taking every index that fits is optimal:
    taking an index early only raises the threshold for the ones after it.
    """
    if p < 0:
        return frozenset()
    chosen = []
    for i in range(len(a), 0, -1):
        if a[i - 1] <= p + len(chosen) + 1:
            chosen.append(i)
    return frozenset(chosen)


@dataclass(frozen=True)
class CenterVector:
    """z(a) = (z_0, ..., z_{m(n-1)}) together with the nested level sets Z_p."""
    m: int
    n: int
    z: tuple[int, ...]
    levels: tuple[frozenset[int], ...] = ()

    def __post_init__(self):
        if self.m < 1:
            raise DomainError(f"m must be >= 1, got {self.m}")
        if len(self.z) != self.m * (self.n - 1) + 1:
            raise DomainError(f"center of order {self.m} in dimension {self.n} has "
                              f"{self.m * (self.n - 1) + 1} entries, got {len(self.z)}")
        if any(x > y for x, y in zip(self.z, self.z[1:])):
            raise DomainError(f"center vector must be weakly increasing: {self.z}")
        if any(not 0 <= x <= self.n for x in self.z):
            raise DomainError(f"center entries must lie in [0, {self.n}]: {self.z}")

    @classmethod
    def from_z(cls, z: Sequence[int], m: int, n: int | None = None) -> "CenterVector":
        z = tuple(z)
        if n is None:
            if (len(z) - 1) % m:
                raise DomainError(f"length {len(z)} is not m(n-1)+1 for m={m}")
            n = (len(z) - 1) // m + 1
        return cls(m, n, z)

    def to_json(self) -> dict:
        return {"m": self.m, "z": list(self.z), "levels": [sorted(s) for s in self.levels]}


def center_vector(a: Sequence[int], m: int) -> CenterVector:
    n = len(a)
    levels = tuple(p_center(a, p) for p in range(m * (n - 1) + 1))
    return CenterVector(m, n, tuple(len(s) for s in levels), levels)


def min_center_index(a: Sequence[int], m: int) -> tuple[int, ...]:
    """p(a)_i: the first level at which i enters the center."""
    n = len(a)
    entry = [None] * n
    for level, zp in enumerate(center_vector(a, m).levels):
        for i in zp:
            if entry[i - 1] is None:
                entry[i - 1] = level
    missing = [i for i, e in enumerate(entry, start=1) if e is None]
    if missing:
        raise NotALabelError(f"indices {missing} never enter the center of {tuple(a)} (m={m})")
    return tuple(entry)


def is_m_catalan(a: Sequence[int], m: int) -> bool:
    z = center_vector(a, m).z
    return all(z[(i - 1) * m] >= i for i in range(1, len(a) + 1))


def is_prime_m_catalan(a: Sequence[int], m: int) -> bool:
    n = len(a)
    # level (i-1)m - 1 is at most m(n-1) - 1, so the greedy set is needed directly
    return all(len(p_center(a, (i - 1) * m - 1)) >= i for i in range(2, n + 1))


def is_m_parking(a: Sequence[int], m: int) -> bool:
    return all(b <= m * i + 1 for i, b in enumerate(sorted(a)))


def is_prime_m_parking(a: Sequence[int], m: int) -> bool:
    b = sorted(a)
    return all(b[j] <= j * m for j in range(1, len(b)))


def increasing_from_center(z: CenterVector) -> tuple[int, ...]:
    """The weakly increasing a with center z: a_i = min{j >= 1 : z_{j-1} >= i}."""
    if z.z[-1] != z.n:
        raise NotALabelError(f"center {z.z} does not reach {z.n}; no label has it")
    a = []
    j = 1
    for i in range(1, z.n + 1):
        while z.z[j - 1] < i:
            j += 1
        a.append(j)
    return tuple(a)


def increasing_to_center(a: Sequence[int], m: int) -> tuple[int, ...]:
    """z_p = max{j : a_j <= p + 1} for weakly increasing a (0 when no such j)."""
    n = len(a)
    return tuple(max((j for j in range(1, n + 1) if a[j - 1] <= p + 1), default=0)
                 for p in range(m * (n - 1) + 1))
