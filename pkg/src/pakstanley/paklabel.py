"""Pak-Stanley labels of regions.

Two independent routes: :func:`label_of_region` counts the hyperplanes
separating a region from R0, and :func:`label_map_bfs` propagates labels
across facets from R0 the way the labeling is usually defined.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from typing import Iterable, Sequence

from .arrangement import CoxeterSpec, normalize
from .errors import DomainError, InternalConsistencyError, ResourceLimitError
from .regions import RegionSig, _bfs, base_region, estimated_region_count, region_cap

Label = tuple[int, ...]


def label_of_region(sig: RegionSig) -> Label:
    """lambda_j = 1 + #{normalized hyperplanes x_i - x_j = m with x_i - x_j > m on the region}.

    For i < j the region is past x_i - x_j = m (1 <= m <= k) for m <= t(i,j),
    giving max(0, t(i,j)) hyperplanes.  For i > j the hyperplanes
    x_i - x_j = m (0 <= m <= l) are passed when t(j,i) <= -m - 1, giving
    max(0, -t(j,i)).
    """
    n = sig.spec.n
    lab = [1] * n
    for (i, j), v in zip(sig.spec.pairs, sig.t):
        if v > 0:
            lab[j - 1] += v
        elif v < 0:
            lab[i - 1] += -v
    return tuple(lab)


def crossed_hyperplane(sig: RegionSig, pos: int, step: int):
    """The hyperplane between sig and its neighbor at pair position pos, and whether
    the move goes away from R0.
    """
    i, j = sig.spec.pairs[pos]
    v = sig.t[pos]
    a = v + 1 if step > 0 else v  # boundary value of x_i - x_j
    h = normalize(i, j, a)
    # R0 lies on x_i' - x_j' < m of normalized h; moving up in x_i - x_j is
    # away from R0 iff h keeps the orientation (i, j)
    outward = (h.i == i) == (step > 0)
    return h, outward


def label_map_bfs(spec: CoxeterSpec, cap: int | None = None) -> dict[RegionSig, Label]:
    """Label every region by walking facets from R0, checking path independence."""
    cap = region_cap() if cap is None else cap
    if estimated_region_count(spec) > cap:
        raise ResourceLimitError(
            f"{spec} may have up to {estimated_region_count(spec)} regions (cap {cap})")
    start = base_region(spec)
    labels: dict[RegionSig, Label] = {start: (1,) * spec.n}
    for region, parent, pos, step in _bfs(start, cap):
        if parent is None:
            continue
        h, outward = crossed_hyperplane(parent, pos, step)
        lab = list(labels[parent])
        lab[h.increment_target() - 1] += 1 if outward else -1
        lab = tuple(lab)
        prev = labels.setdefault(region, lab)
        if prev != lab:
            raise InternalConsistencyError(
                f"label of {region!r} depends on path: {prev} vs {lab}")
    return dict(sorted(labels.items()))


def collision_points(spec: CoxeterSpec) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Two points in different regions with the same label, for k > l + 1 or k < l.

    The first three coordinates carry the collision; coordinates 4..n are
    x_t = -(k+1) - t/(10n), far enough below that every pair involving them
    lies in its top slab for both points.
    """
    n, k, l = spec.n, spec.k, spec.l
    if n < 3 or k in (l, l + 1):
        raise DomainError(f"{spec} has no label collisions to exhibit (needs n >= 3 and k not in {{l, l+1}})")
    tenth = Fraction(1, 10)
    tail = tuple(-(k + 1) - Fraction(t, 10 * n) for t in range(4, n + 1))
    if k > l + 1:
        p = (8 * tenth, k + 3 * tenth, Fraction(0))
        q = (12 * tenth, k - 3 * tenth, Fraction(0))
    else:
        p = (-2 * tenth, l - 3 * tenth, Fraction(0))
        q = (2 * tenth, l + 3 * tenth, Fraction(0))
    return p + tail, q + tail


def labels_of(regions: Iterable[RegionSig]) -> list[Label]:
    return [label_of_region(r) for r in regions]


def label_set(spec: CoxeterSpec) -> set[Label]:
    from .regions import enumerate_regions
    return {label_of_region(r) for r in enumerate_regions(spec)}


def collisions(regions: Iterable[RegionSig]) -> dict[Label, list[RegionSig]]:
    """All labels carried by more than one region, with the regions carrying them."""
    by_label = defaultdict(list)
    for r in regions:
        by_label[label_of_region(r)].append(r)
    return {lab: rs for lab, rs in sorted(by_label.items()) if len(rs) > 1}


def label_multiset(regions: Iterable[RegionSig]) -> Counter:
    return Counter(label_of_region(r) for r in regions)


def is_lower_set(labels: set[Label]) -> bool:
    """Every b with 1 <= b <= a componentwise, for some a in labels, is in labels."""
    from itertools import product
    for a in labels:
        for b in product(*(range(1, x + 1) for x in a)):
            if b not in labels:
                return False
    return True


def format_label(a: Sequence[int]) -> str:
    """'a1a2...an' when every entry is a single digit, otherwise comma-separated."""
    if all(0 <= x <= 9 for x in a):
        return "".join(str(x) for x in a)
    return ",".join(str(x) for x in a)


def parse_label(text: str) -> Label:
    text = text.strip()
    if not text:
        raise DomainError("empty label")
    if "," in text or " " in text:
        parts = [p for p in text.replace(" ", ",").split(",") if p]
    else:
        parts = list(text)
    try:
        lab = tuple(int(p) for p in parts)
    except ValueError:
        raise DomainError(f"cannot parse label {text!r}") from None
    if any(x < 1 for x in lab):
        raise DomainError(f"label entries must be positive: {text!r}")
    return lab


def region_record(sig: RegionSig) -> dict:
    """Export record: interval map, label, chamber and relative boundedness."""
    from .regions import chamber_of, is_relatively_bounded
    return {
        "t": {f"{i},{j}": v for (i, j), v in sig.as_map().items()},
        "label": list(label_of_region(sig)),
        "chamber": list(chamber_of(sig)),
        "bounded": is_relatively_bounded(sig),
    }
