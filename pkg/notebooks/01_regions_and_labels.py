"""
Regions and labels of a small arrangement
=========================================

Walk through the 3-dimensional arrangement with hyperplanes
x_i - x_j = a, -2 <= a <= 2: enumerate its regions, label them, and look at
what goes wrong when the two parameters drift apart.
"""
from collections import Counter

from pakstanley import CoxeterSpec, enumerate_regions, label_of_region, region_of_point, representative_point
from pakstanley.regions import base_region
from pakstanley.paklabel import collision_points, collisions, format_label

# a region is stored as one slab index per pair: t(i,j) = v means v < x_i - x_j < v + 1
spec = CoxeterSpec(3, 2, 2)
regions = enumerate_regions(spec)
print(spec, "has", len(regions), "regions")

# the base region sits just above the line x_1 = x_2 = x_3
base = base_region(spec)
print("base region", base.as_map(), "contains", representative_point(base))

# labels are distinct and every entry stays small
labels = [label_of_region(r) for r in regions]
print(len(set(labels)), "distinct labels, largest entries", max(map(max, labels)))
print(" ".join(sorted(format_label(b) for b in labels)[:20]), "...")

# drop the lower parameter to 0: one label is now shared by two regions
spec = CoxeterSpec(3, 2, 0)
regions = enumerate_regions(spec)
print(spec, len(regions), "regions,", len(Counter(map(label_of_region, regions))), "labels")
for label, rs in collisions(regions).items():
    print("label", format_label(label), "is carried by", [r.as_map() for r in rs])

# the two shared regions contain these points
p, q = collision_points(spec)
print([float(x) for x in p], "->", region_of_point(spec, p).as_map())
print([float(x) for x in q], "->", region_of_point(spec, q).as_map())
