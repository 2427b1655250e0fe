"""Dyck-path pictures of labels, as ASCII text or SVG.

Geometry: for a weakly increasing label a of the m-Catalan arrangement in
dimension n, the path runs (0,0) -> (a_1,0) -> (a_1,1) -> (a_2,1) -> ... ->
(a_n,n) -> (mn+1,n) on a grid of width mn+1 and height n.  The diagonal d
joins (1,0) to (mn+1,n); a is m-Catalan exactly when no vertex lies to its
right.

ASCII format, one character per unit cell, top row first::

    2 ####1..
    1 ##3....
    0 #2.....

Cells left of the path are ``#``, other cells ``.``; in a labeled path the
cell just right of the vertical step at height y holds the index entering the
center there (numbers above 9 are written ``[10]``).  Reading those cells
from bottom to top spells the chamber permutation.
"""
from __future__ import annotations

import re
from typing import Sequence

from .center import is_m_catalan
from .errors import DomainError, NotALabelError
from .inverse import invert_label
from .paklabel import format_label
from .permtools import is_weakly_increasing

FORMAT_VERSION = "1"


def dyck_vertices(a: Sequence[int], m: int) -> list[tuple[int, int]]:
    n = len(a)
    pts = [(0, 0)]
    for i, ai in enumerate(a, start=1):
        pts += [(ai, i - 1), (ai, i)]
    pts.append((m * n + 1, n))
    out = [pts[0]]
    for p in pts[1:]:
        if p != out[-1]:
            out.append(p)
    return out


def within_diagonal(a: Sequence[int], m: int) -> bool:
    """Every vertex (x, y) of the path satisfies x <= 1 + m*y."""
    return all(x <= 1 + m * y for x, y in dyck_vertices(a, m))


def within_prime_diagonal(a: Sequence[int], m: int) -> bool:
    """Every vertex at height y >= 1, except the endpoint, satisfies x <= m*y."""
    pts = dyck_vertices(a, m)
    return all(x <= m * y for x, y in pts[:-1] if y >= 1)


def catalan_staircase(n: int, m: int) -> list[tuple[int, int]]:
    """Path of the largest increasing label 1 + m(i - 1)."""
    return dyck_vertices([1 + m * i for i in range(n)], m)


def prime_staircase(n: int, m: int) -> list[tuple[int, int]]:
    """Boundary for prime labels: a_i <= m(i - 1) for i >= 2, drawn from height 1."""
    pts = []
    for i in range(2, n + 1):
        pts += [(m * (i - 1), i - 1), (m * (i - 1), i)]
    return pts


def tower_cells(b: Sequence[int], m: int) -> list[tuple[int, int, int]]:
    """(x, y, index) for each filled cell of the labeled path of b, bottom to top."""
    pi, a = invert_label(b, m)
    return [(a[y], y, pi[y]) for y in range(len(a))]


def _token(v: int) -> str:
    return str(v) if v <= 9 else f"[{v}]"


def _ascii(a, m, towers=None, title=""):
    n = len(a)
    width = m * n + 1
    towers = towers or {}
    rows = []
    gutter = len(str(n - 1))
    for y in range(n - 1, -1, -1):
        cells = []
        for x in range(width):
            if (x, y) in towers:
                cells.append(_token(towers[(x, y)]))
            elif x < a[y]:
                cells.append("#")
            else:
                cells.append(".")
        rows.append(f"{y:>{gutter}} " + "".join(cells))
    return title + "\n" + "\n".join(rows) + "\n"


def _line(p, q, cls):
    return f'<line class="{cls}" x1="{p[0]}" y1="{p[1]}" x2="{q[0]}" y2="{q[1]}"/>'


def _polyline_as_lines(pts, cls):
    return [_line(p, q, cls) for p, q in zip(pts, pts[1:])]


def _svg(a, m, towers=None, title=""):
    n = len(a)
    width = m * n + 1
    towers = towers or {}
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{40 * (width + 2)}" height="{40 * (n + 2)}" viewBox="-1 -1 {width + 2} {n + 2}">',
        f"<title>{title}</title>",
        f"<desc>format {FORMAT_VERSION}; vertices "
        + " ".join(f"{x},{y}" for x, y in dyck_vertices(a, m)) + "</desc>",
        "<style>line{stroke-linecap:round} .grid{stroke:#bbb;stroke-width:0.02}"
        " .frame{stroke:#000;stroke-width:0.04}"
        " .path{stroke:#000;stroke-width:0.1}"
        " .diag{stroke:#c00;stroke-width:0.05;stroke-dasharray:0.15 0.1}"
        " .catalan{stroke:#c00;stroke-width:0.06;stroke-dasharray:0.2 0.1}"
        " .prime{stroke:#00c;stroke-width:0.06;stroke-dasharray:0.2 0.1}"
        " text{font-family:sans-serif;font-size:0.6px;text-anchor:middle}</style>",
        # lattice coordinates, y pointing up
        f'<g transform="matrix(1 0 0 -1 0 {n})">',
    ]
    for x in range(width + 1):
        out.append(_line((x, 0), (x, n), "grid"))
    for y in range(n + 1):
        out.append(_line((0, y), (width, y), "grid"))
    out += _polyline_as_lines([(0, 0), (width, 0), (width, n), (0, n), (0, 0)], "frame")
    out.append(_line((1, 0), (width, n), "diag"))
    out += _polyline_as_lines(catalan_staircase(n, m), "catalan")
    out += _polyline_as_lines(prime_staircase(n, m), "prime")
    out += _polyline_as_lines(dyck_vertices(a, m), "path")
    out.append("</g>")
    for (x, y), v in sorted(towers.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        # text baseline sits 0.3 below the cell center, in screen coordinates
        out.append(f'<text class="tower" data-x="{x}" data-y="{y}" '
                   f'x="{x}.5" y="{n - y - 1}.7">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _emit(a, m, fmt, towers, title):
    if fmt == "ascii":
        return _ascii(a, m, towers, title)
    if fmt == "svg":
        return _svg(a, m, towers, title)
    raise DomainError(f"unknown format {fmt!r}; use 'ascii' or 'svg'")


def render_dyck(a: Sequence[int], m: int, fmt: str = "ascii") -> str:
    """Dyck path of a weakly increasing m-Catalan label."""
    a = tuple(a)
    if not is_weakly_increasing(a):
        raise DomainError(f"{a} is not weakly increasing; use render_labeled_dyck for other labels")
    if not is_m_catalan(a, m):
        raise NotALabelError(f"{a} is not an m-Catalan function for m={m}")
    return _emit(a, m, fmt, None, f"Dyck path of {format_label(a)} (m={m})")


def render_labeled_dyck(b: Sequence[int], m: int, fmt: str = "ascii") -> str:
    """Labeled Dyck path of any m-Catalan label: the path of its orbit's
    increasing label, with the indices entering the center written in towers.
    """
    b = tuple(b)
    pi, a = invert_label(b, m)
    towers = {(x, y): v for x, y, v in tower_cells(b, m)}
    title = f"Labeled Dyck path of {format_label(b)} (m={m}, chamber {format_label(pi)})"
    return _emit(a, m, fmt, towers, title)


def read_towers_ascii(doc: str) -> tuple[int, ...]:
    """Indices written in the towers of an ASCII labeled path, bottom to top."""
    rows = [re.match(r"\s*\d+ (.*)$", line).group(1) for line in doc.splitlines()[1:] if line.strip()]
    out = []
    for row in reversed(rows):
        for tok in re.findall(r"\[(\d+)\]|(\d)", row):
            out.append(int(tok[0] or tok[1]))
    return tuple(out)


def read_towers_svg(doc: str) -> tuple[int, ...]:
    found = re.findall(r'<text class="tower" data-x="(\d+)" data-y="(\d+)"[^>]*>(\d+)</text>', doc)
    found.sort(key=lambda t: (int(t[1]), int(t[0])))
    return tuple(int(v) for _, _, v in found)
