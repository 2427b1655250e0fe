"""Permutations, inversion tables and the chamber statistics built on them.

Permutations and labels are plain tuples of ints in one-line notation,
values 1..n.  Composition follows a single convention for both::

    compose(a, pi)[i] == a[pi[i]]          # (a o pi)_i = a_{pi(i)}, 1-based

so ``compose((1, 2, 5), (2, 3, 1)) == (2, 5, 1)``.  Getting this the wrong way
round silently swaps pi and its inverse, so every formula below is written
against this one helper.
"""
from __future__ import annotations

from itertools import permutations as _permutations
from typing import Iterable, Sequence

from .arrangement import CoxeterSpec
from .errors import DomainError, InvalidTableError

Perm = tuple[int, ...]
Vec = tuple[int, ...]


def check_permutation(pi: Sequence[int]) -> Perm:
    pi = tuple(int(v) for v in pi)
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise DomainError(f"not a permutation of 1..{len(pi)}: {pi}")
    return pi


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def all_permutations(n: int) -> Iterable[Perm]:
    return _permutations(range(1, n + 1))


def inverse(pi: Sequence[int]) -> Perm:
    inv = [0] * len(pi)
    for pos, v in enumerate(pi, start=1):
        inv[v - 1] = pos
    return tuple(inv)


def compose(a: Sequence[int], pi: Sequence[int]) -> tuple:
    """(a o pi)_i = a_{pi(i)}; works for labels and permutations alike."""
    return tuple(a[v - 1] for v in pi)


def rev(a: Sequence[int]) -> tuple:
    return tuple(reversed(a))


def transposition(n: int, i: int) -> Perm:
    """The adjacent transposition tau_i = (i, i+1) in S_n."""
    if not 1 <= i < n:
        raise DomainError(f"adjacent transposition position must be in [1, {n - 1}], got {i}")
    t = list(range(1, n + 1))
    t[i - 1], t[i] = t[i], t[i - 1]
    return tuple(t)


def add(a: Sequence[int], b: Sequence[int]) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def unit(n: int, j: int) -> Vec:
    return tuple(1 if i == j else 0 for i in range(1, n + 1))


def ld_lu(a: Sequence[int]) -> tuple[Vec, Vec]:
    """Counts of earlier strictly-smaller (ld) and strictly-larger (lu) entries."""
    ld = []
    lu = []
    for i, ai in enumerate(a):
        ld.append(sum(1 for aj in a[:i] if aj < ai))
        lu.append(sum(1 for aj in a[:i] if aj > ai))
    return tuple(ld), tuple(lu)


def inversion_table(pi: Sequence[int]) -> Vec:
    """I_i = number of values greater than i standing to the left of i in pi."""
    pos = inverse(pi)
    return tuple(sum(1 for v in pi[:pos[i - 1] - 1] if v > i) for i in range(1, len(pi) + 1))


def in_inversion_box(table: Sequence[int]) -> bool:
    n = len(table)
    return all(0 <= t <= n - i for i, t in enumerate(table, start=1))


def from_inversion_table(table: Sequence[int]) -> Perm:
    """Inverse of :func:`inversion_table`.

    Values are inserted from n down to 1; value i goes to position I_i among
    the values already placed (all of which exceed i).
    """
    table = tuple(table)
    if not in_inversion_box(table):
        raise InvalidTableError(f"not an inversion table: {table}")
    word: list[int] = []
    for i in range(len(table), 0, -1):
        word.insert(table[i - 1], i)
    return tuple(word)


def mu(pi: Sequence[int]) -> Vec:
    """Minimal label of the chamber of pi: 1 + I(pi)."""
    return tuple(1 + t for t in inversion_table(pi))


def chamber_extremes(pi: Sequence[int], spec: CoxeterSpec) -> tuple[Vec, Vec]:
    """Return (mu, M): the componentwise minimal and maximal labels in the chamber of pi.

    M = mu + k * (ld(pi) o pi^-1) + l * (lu(pi) o pi^-1).
    """
    pi = check_permutation(pi)
    if len(pi) != spec.n:
        raise DomainError(f"permutation length {len(pi)} != n = {spec.n}")
    low = mu(pi)
    inv = inverse(pi)
    ld, lu = ld_lu(pi)
    ld_inv = compose(ld, inv)
    lu_inv = compose(lu, inv)
    high = tuple(m0 + spec.k * d + spec.l * u for m0, d, u in zip(low, ld_inv, lu_inv))
    return low, high


def is_weakly_increasing(a: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, a[1:]))


def orbit_label(pi: Sequence[int], a: Sequence[int]) -> Vec:
    """Label of pi(R) where R is the fundamental-chamber region labeled a: I(pi) + a o pi^-1."""
    if not is_weakly_increasing(a):
        raise DomainError(f"fundamental-chamber labels are weakly increasing, got {tuple(a)}")
    if len(pi) != len(a):
        raise DomainError("permutation and label lengths differ")
    return add(inversion_table(pi), compose(a, inverse(pi)))


def adjacent_step(b: Sequence[int], i: int) -> Vec:
    """Move a label across the wall between the chambers of pi and tau_i o pi.

    Swaps b_i and b_{i+1}, then adds e_i if b_i <= b_{i+1}, else subtracts e_{i+1}.
    """
    n = len(b)
    c = list(compose(b, transposition(n, i)))
    if b[i - 1] <= b[i]:
        c[i - 1] += 1
    else:
        c[i] -= 1
    return tuple(c)


def reduced_word(pi: Sequence[int]) -> list[int]:
    """A reduced word i_1, ..., i_r with pi = tau_{i_r} o ... o tau_{i_1}.

    Read left to right, each letter swaps the *values* i and i+1 of the
    permutation built so far, starting from the identity.
    """
    # bubble-sort pi back to the identity by value swaps, then reverse
    cur = list(pi)
    pos = list(inverse(cur))
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(1, len(cur)):
            if pos[i - 1] > pos[i]:
                a, b = pos[i - 1] - 1, pos[i] - 1
                cur[a], cur[b] = cur[b], cur[a]
                pos[i - 1], pos[i] = pos[i], pos[i - 1]
                word.append(i)
                changed = True
    return word[::-1]


def apply_word(word: Iterable[int], n: int) -> Perm:
    pi = identity(n)
    for i in word:
        pi = compose(transposition(n, i), pi)
    return pi


def walk_orbit(a: Sequence[int], word: Iterable[int]) -> Vec:
    """Label reached from a by applying adjacent_step along word."""
    b = tuple(a)
    for i in word:
        b = adjacent_step(b, i)
    return b
