"""
Dyck paths
==========

Increasing labels are lattice paths above a diagonal; the other labels in an
orbit are the same path with the chamber written beside it.
"""
from pakstanley import render_dyck, render_labeled_dyck
from pakstanley.render import dyck_vertices, read_towers_ascii

print(dyck_vertices((1, 2, 4), 2))
print(render_dyck((1, 2, 4), 2))

# 612 and 513 live in the same chamber, 2 3 1
for b in [(6, 1, 2), (5, 1, 3)]:
    doc = render_labeled_dyck(b, 2)
    print(doc)
    print("read bottom to top:", read_towers_ascii(doc))

# a larger one
print(render_labeled_dyck((3, 9, 5, 5, 1, 4, 8, 1), 3))

# SVG output, e.g. to view in a browser
svg = render_labeled_dyck((6, 1, 2), 2, "svg")
print(svg.splitlines()[1])
