"""From an m-Catalan label back to its region.

A label b of the m-Catalan arrangement determines the chamber pi it lies in
and the fundamental-chamber label a of its S_n-orbit by arithmetic alone:
a is read off the center of b, and b - p(b) - 1 is the inversion table of pi.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .arrangement import CoxeterSpec
from .center import CenterVector, center_vector, increasing_from_center, is_m_catalan, min_center_index
from .errors import InternalConsistencyError, NotALabelError
from .paklabel import label_of_region
from .permtools import from_inversion_table, in_inversion_box, orbit_label
from .regions import RegionSig, apply_permutation, fundamental_regions


def _require_label(b, m):
    b = tuple(int(x) for x in b)
    if not b or any(x < 1 for x in b) or not is_m_catalan(b, m):
        raise NotALabelError(f"{b} is not an m-Catalan function for m={m}")
    return b


def invert_record(b: Sequence[int], m: int) -> dict:
    """Everything the inverse computes: pi, a, the center z and the inversion table I."""
    b = _require_label(b, m)
    z = center_vector(b, m)
    a = increasing_from_center(z)
    p = min_center_index(b, m)
    table = tuple(bi - pi - 1 for bi, pi in zip(b, p))
    if not in_inversion_box(table):
        raise InternalConsistencyError(f"b - p(b) - 1 = {table} is not an inversion table")
    pi = from_inversion_table(table)
    if orbit_label(pi, a) != b:
        raise InternalConsistencyError(f"round trip failed: {pi}, {a} does not give {b}")
    return {"pi": list(pi), "a": list(a), "z": list(z.z), "I": list(table)}


def invert_label(b: Sequence[int], m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return (pi, a): the chamber of b and the label of the fundamental region in its orbit."""
    rec = invert_record(b, m)
    return tuple(rec["pi"]), tuple(rec["a"])


@lru_cache(maxsize=None)
def fundamental_table(n: int, m: int) -> dict[tuple[int, ...], RegionSig]:
    """Label -> region for the fundamental chamber of the m-Catalan arrangement."""
    spec = CoxeterSpec(n, m, m)
    table = {}
    for r in fundamental_regions(spec):
        lab = label_of_region(r)
        if lab in table:
            raise InternalConsistencyError(f"two fundamental regions labeled {lab}")
        table[lab] = r
    return table


def region_of_label(b: Sequence[int], m: int) -> RegionSig:
    """The unique region of the n-dimensional m-Catalan arrangement labeled b."""
    pi, a = invert_label(b, m)
    base = fundamental_table(len(a), m).get(a)
    if base is None:
        raise InternalConsistencyError(f"no fundamental region labeled {a}")
    region = apply_permutation(base, pi)
    if label_of_region(region) != tuple(b):
        raise InternalConsistencyError(f"region {region!r} is not labeled {tuple(b)}")
    return region


def fiber_of_center(z: CenterVector) -> set[tuple[int, ...]]:
    """All labels whose center is z: the S_n-orbit of the increasing label with that center."""
    a = increasing_from_center(z)
    return {orbit_label(pi, a) for pi in permutations(range(1, z.n + 1))}
