"""Regions of a (k, l)-Coxeter arrangement as interval tuples.

A region is determined by which unit slab each difference x_i - x_j (i < j)
lies in: ``t(i, j) = t`` means ``t < x_i - x_j < t + 1``, with the sentinels
``-l - 1`` for ``(-inf, -l)`` and ``k`` for ``(k, +inf)``.  Nonemptiness of
such a strict difference system is decided exactly with Bellman-Ford on
integer weights; no floating point is involved anywhere.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, factorial, floor
from typing import Iterable, Mapping, Sequence

from .arrangement import CoxeterSpec
from .errors import (
    DomainError,
    InfeasibleRegionError,
    OnBoundaryError,
    ResourceLimitError,
    UnsupportedActionError,
)
from .permtools import check_permutation

DEFAULT_EXHAUSTIVE_CAP = 10**7
DEFAULT_REGION_CAP = 10**6
CAP_ENV = "COXETER_REGION_CAP"

Point = tuple[Fraction, ...]


def region_cap() -> int:
    value = os.environ.get(CAP_ENV)
    return int(value) if value else DEFAULT_REGION_CAP


def pair_index(n: int) -> dict[tuple[int, int], int]:
    idx = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            idx[(i, j)] = len(idx)
    return idx


@dataclass(frozen=True, order=True)
class RegionSig:
    """A region, keyed by its interval indices in lex pair order (1,2), (1,3), ..., (n-1,n).

    The constructor checks index ranges only; use :meth:`from_map` or
    :func:`enumerate_regions` to get regions that are known to be nonempty.
    """
    spec: CoxeterSpec
    t: tuple[int, ...]

    def __post_init__(self):
        spec = self.spec
        if len(self.t) != comb(spec.n, 2):
            raise DomainError(f"expected {comb(spec.n, 2)} interval indices, got {len(self.t)}")
        lo, hi = -spec.l - 1, spec.k
        for v in self.t:
            if not lo <= v <= hi:
                raise DomainError(f"interval index {v} outside [{lo}, {hi}]")

    @classmethod
    def from_map(cls, spec: CoxeterSpec, mapping: Mapping[tuple[int, int], int]) -> "RegionSig":
        t = _tuple_from_map(spec, mapping)
        sig = cls(spec, t)
        if not is_feasible(spec, t):
            raise InfeasibleRegionError(f"empty region: {dict(mapping)}")
        return sig

    def interval(self, i: int, j: int) -> int:
        """Interval index of x_i - x_j for any i != j (negated orientation if i > j)."""
        if i < j:
            return self.t[pair_index(self.spec.n)[(i, j)]]
        return -self.t[pair_index(self.spec.n)[(j, i)]] - 1

    def as_map(self) -> dict[tuple[int, int], int]:
        return dict(zip(self.spec.pairs, self.t))

    def is_fundamental(self) -> bool:
        return all(v >= 0 for v in self.t)

    def __repr__(self):
        body = ", ".join(f"{i}{j}:{v}" for (i, j), v in self.as_map().items())
        return f"RegionSig({self.spec.n},{self.spec.k},{self.spec.l}; {body})"


def _tuple_from_map(spec, mapping):
    out = []
    for i, j in spec.pairs:
        if (i, j) in mapping:
            out.append(int(mapping[(i, j)]))
        elif (j, i) in mapping:
            out.append(-int(mapping[(j, i)]) - 1)
        else:
            raise DomainError(f"missing interval for pair ({i},{j})")
    return tuple(out)


def base_region(spec: CoxeterSpec) -> RegionSig:
    """R0: every difference x_i - x_j, i < j, in (0, 1)."""
    return RegionSig(spec, (0,) * comb(spec.n, 2))


# -- difference constraints -------------------------------------------------

def _constraint_edges(spec: CoxeterSpec, t: Sequence[int]) -> list[tuple[int, int, int]]:
    """Edges (b, a, c) for every finite bound x_a - x_b < c, 0-based nodes."""
    edges = []
    k, lo = spec.k, -spec.l - 1
    n = spec.n
    pos = 0
    for i in range(n):
        for j in range(i + 1, n):
            v = t[pos]
            pos += 1
            if v < k:
                edges.append((j, i, v + 1))   # x_i - x_j < v + 1
            if v > lo:
                edges.append((i, j, -v))      # x_j - x_i < -v
    return edges


def _potentials(n: int, edges: list[tuple[int, int, int]]):
    """Bellman-Ford from a virtual source on strict integer bounds.

    Weights are scaled by (n + 1) and decremented by one, which turns each
    strict bound into a non-strict one without changing feasibility: a simple
    cycle has at most n edges and integer bound sum S, and its scaled weight
    (n + 1) * S - len is negative exactly when S <= 0.
    Returns the potential vector, or None when a negative cycle exists.
    """
    scale = n + 1
    w = [(b, a, c * scale - 1) for b, a, c in edges]
    dist = [0] * n
    for _ in range(n):
        changed = False
        for b, a, c in w:
            nd = dist[b] + c
            if nd < dist[a]:
                dist[a] = nd
                changed = True
        if not changed:
            return dist
    return None


def _check_range(spec, t):
    if len(t) != comb(spec.n, 2):
        raise DomainError(f"expected {comb(spec.n, 2)} interval indices, got {len(t)}")
    lo, hi = -spec.l - 1, spec.k
    for v in t:
        if not lo <= v <= hi:
            raise DomainError(f"interval index {v} outside [{lo}, {hi}]")


def is_feasible(spec: CoxeterSpec, t) -> bool:
    """True iff the open set {t(i,j) < x_i - x_j < t(i,j) + 1 for all i < j} is nonempty.

    ``t`` may be a tuple in lex pair order or a mapping keyed by pairs.
    """
    if isinstance(t, Mapping):
        t = _tuple_from_map(spec, t)
    _check_range(spec, t)
    return _potentials(spec.n, _constraint_edges(spec, t)) is not None


def representative_point(sig: RegionSig) -> Point:
    """An exact rational point inside the region, translated so that x_n = 0."""
    n = sig.spec.n
    dist = _potentials(n, _constraint_edges(sig.spec, sig.t))
    if dist is None:
        raise InfeasibleRegionError(f"empty region: {sig!r}")
    shift = dist[-1]
    return tuple(Fraction(d - shift, n + 1) for d in dist)


def _as_fraction(v) -> Fraction:
    if isinstance(v, float):
        return Fraction(repr(v))
    return Fraction(v)


def region_of_point(spec: CoxeterSpec, p: Sequence) -> RegionSig:
    """Locate the region containing p.  Floats are read by their decimal repr."""
    if len(p) != spec.n:
        raise DomainError(f"point has {len(p)} coordinates, expected {spec.n}")
    x = [_as_fraction(v) for v in p]
    out = []
    for i, j in spec.pairs:
        d = x[i - 1] - x[j - 1]
        if d.denominator == 1 and -spec.l <= d <= spec.k:
            raise OnBoundaryError(f"x{i} - x{j} = {d} lies on a hyperplane")
        out.append(min(max(floor(d), -spec.l - 1), spec.k))
    return RegionSig(spec, tuple(out))


# -- enumeration ------------------------------------------------------------

def fuss_catalan(n: int, m: int) -> int:
    return comb(m * n + n, m * n) // (m * n + 1)


def estimated_region_count(spec: CoxeterSpec) -> int:
    """Upper bound on the region count: the (K, K) arrangement with K = max(k, l) refines this one."""
    big = max(spec.k, spec.l)
    return factorial(spec.n) * fuss_catalan(spec.n, big)


def neighbors(sig: RegionSig) -> Iterable[tuple[int, int, RegionSig]]:
    """Yield (pair position, step, neighbor) for facet-adjacent regions.

    Adjacent regions differ in exactly one pair's interval, by one.
    """
    spec = sig.spec
    lo, hi = -spec.l - 1, spec.k
    t = sig.t
    for pos, v in enumerate(t):
        for step in (-1, 1):
            w = v + step
            if lo <= w <= hi:
                cand = t[:pos] + (w,) + t[pos + 1:]
                if is_feasible(spec, cand):
                    yield pos, step, RegionSig(spec, cand)


def _bfs(start: RegionSig, cap: int, keep=None):
    """Breadth-first search over facet adjacency, yielding (region, parent, pos, step)."""
    spec = start.spec
    lo, hi = -spec.l - 1, spec.k
    seen = {start.t}
    queue = deque([start.t])
    yield start, None, None, None
    while queue:
        t = queue.popleft()
        parent = RegionSig(spec, t)
        for pos, v in enumerate(t):
            for step in (-1, 1):
                w = v + step
                if not lo <= w <= hi:
                    continue
                cand = t[:pos] + (w,) + t[pos + 1:]
                if cand in seen:
                    # still report the edge so callers can check path independence
                    yield RegionSig(spec, cand), parent, pos, step
                    continue
                if keep is not None and not keep(cand):
                    continue
                if not is_feasible(spec, cand):
                    continue
                seen.add(cand)
                if len(seen) > cap:
                    raise ResourceLimitError(f"more than {cap} regions in {spec}")
                queue.append(cand)
                yield RegionSig(spec, cand), parent, pos, step


def enumerate_regions(spec: CoxeterSpec, method: str = "bfs", cap: int | None = None) -> list[RegionSig]:
    """All regions of the arrangement, sorted by interval tuple.

    ``method="bfs"`` walks facet adjacency from R0; ``method="exhaustive"``
    tests every tuple in [-l-1, k]^C(n,2) and exists for cross-checking.
    """
    if method == "bfs":
        cap = region_cap() if cap is None else cap
        if estimated_region_count(spec) > cap:
            raise ResourceLimitError(
                f"{spec} may have up to {estimated_region_count(spec)} regions (cap {cap})")
        found = {r.t for r, _, _, _ in _bfs(base_region(spec), cap)}
    elif method == "exhaustive":
        cap = DEFAULT_EXHAUSTIVE_CAP if cap is None else cap
        width = spec.k + spec.l + 2
        if width ** comb(spec.n, 2) > cap:
            raise ResourceLimitError(f"{width}^{comb(spec.n, 2)} tuples exceeds cap {cap}")
        found = {t for t in product(range(-spec.l - 1, spec.k + 1), repeat=comb(spec.n, 2))
                 if is_feasible(spec, t)}
    else:
        raise ValueError(f"unknown method {method!r}")
    return [RegionSig(spec, t) for t in sorted(found)]


def fundamental_regions(spec: CoxeterSpec, cap: int | None = None) -> list[RegionSig]:
    """Regions inside the chamber x_1 > x_2 > ... > x_n (all interval indices >= 0)."""
    cap = region_cap() if cap is None else cap
    if fuss_catalan(spec.n, spec.k) > cap:
        raise ResourceLimitError(f"fundamental chamber of {spec} exceeds cap {cap}")
    nonneg = lambda t: min(t) >= 0
    found = {r.t for r, _, _, _ in _bfs(base_region(spec), cap, keep=nonneg)}
    return [RegionSig(spec, t) for t in sorted(found)]


# -- geometry of a single region ---------------------------------------------

def _reachable(n, adj, src):
    seen = {src}
    stack = [src]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def is_relatively_bounded(sig: RegionSig) -> bool:
    """True iff the region is bounded modulo the line x_1 = ... = x_n.

    Every difference has a finite implied upper bound exactly when the digraph
    of finite bounds is strongly connected.
    """
    n = sig.spec.n
    if n == 1:
        return True
    adj = [[] for _ in range(n)]
    for b, a, _ in _constraint_edges(sig.spec, sig.t):
        adj[b].append(a)
    radj = [[] for _ in range(n)]
    for b in range(n):
        for a in adj[b]:
            radj[a].append(b)
    return len(_reachable(n, adj, 0)) == n and len(_reachable(n, radj, 0)) == n


def recession_unbounded_pairs(sig: RegionSig) -> list[tuple[int, int]]:
    """Ordered pairs (a, b) such that x_a - x_b is unbounded above on the region.

    Solves the recession-cone system directly: a direction d with
    d_i - d_j <= 0 for each finite upper bound (and >= 0 for each finite lower
    bound) and d_a - d_b >= 1 exists iff the non-strict system has no negative
    cycle.  Independent of the strong-connectivity test.
    """
    n = sig.spec.n
    cone = [(b, a, 0) for b, a, _ in _constraint_edges(sig.spec, sig.t)]
    out = []
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            edges = cone + [(a, b, -1)]  # d_b - d_a <= -1
            dist = [0] * n
            ok = False
            for _ in range(n):
                changed = False
                for u, v, c in edges:
                    if dist[u] + c < dist[v]:
                        dist[v] = dist[u] + c
                        changed = True
                if not changed:
                    ok = True
                    break
            if ok:
                out.append((a + 1, b + 1))
    return out


def chamber_of(sig: RegionSig) -> tuple[int, ...]:
    """The permutation pi with x_{pi_1} > ... > x_{pi_n} on the region."""
    n = sig.spec.n
    # number of coordinates below x_i gives its rank from the bottom
    below = [0] * n
    for (i, j), v in sig.as_map().items():
        if v >= 0:
            below[i - 1] += 1
        else:
            below[j - 1] += 1
    pi = [0] * n
    for i, b in enumerate(below, start=1):
        pi[n - 1 - b] = i
    return tuple(pi)


def apply_permutation(sig: RegionSig, pi: Sequence[int]) -> RegionSig:
    """Image of the region under P -> (x_{pi^-1(1)}, ..., x_{pi^-1(n)}).

    The image satisfies y_{pi(i)} - y_{pi(j)} = x_i - x_j, so each interval moves
    to the pair (pi(i), pi(j)) and is mirrored to -t - 1 when that pair is
    reversed.  Only closed under the action when k == l.
    """
    spec = sig.spec
    if not spec.is_catalan():
        raise UnsupportedActionError(f"S_n does not act on the regions of {spec}")
    pi = check_permutation(pi)
    if len(pi) != spec.n:
        raise DomainError(f"permutation length {len(pi)} != n = {spec.n}")
    image = {}
    for (i, j), v in sig.as_map().items():
        a, b = pi[i - 1], pi[j - 1]
        if a < b:
            image[(a, b)] = v
        else:
            image[(b, a)] = -v - 1
    return RegionSig(spec, tuple(image[p] for p in spec.pairs))


def census(spec: CoxeterSpec, seed_check: bool = False) -> dict:
    """Region and label counts next to the closed-form counts they should match."""
    from .paklabel import label_of_region

    regions = enumerate_regions(spec)
    labels = {label_of_region(r) for r in regions}
    rec = {
        "n": spec.n, "k": spec.k, "l": spec.l,
        "regions": len(regions),
        "distinct_labels": len(labels),
        "bijective": len(labels) == len(regions),
        "fundamental_regions": sum(1 for r in regions if r.is_fundamental()),
        "fuss_catalan": fuss_catalan(spec.n, spec.k),
        "relatively_bounded": sum(1 for r in regions if is_relatively_bounded(r)),
    }
    if spec.is_catalan():
        rec["formula_regions"] = factorial(spec.n) * fuss_catalan(spec.n, spec.k)
    elif spec.is_shi():
        rec["formula_regions"] = (spec.k * spec.n + 1) ** (spec.n - 1)
    if seed_check:
        try:
            exhaustive = enumerate_regions(spec, method="exhaustive")
        except ResourceLimitError:
            rec["seed_check"] = "skipped"
        else:
            rec["seed_check"] = exhaustive == regions
    return rec
