"""
Centers and the inverse map
===========================

A label is recognized, and its region recovered, from arithmetic on the
label alone.
"""
from pakstanley import center_vector, invert_record, is_m_catalan, is_prime_m_catalan, p_center, region_of_label
from pakstanley.inverse import fiber_of_center

# the p-center of a vector grows with p
b, m = (6, 1, 2), 2
for p in range(5):
    print("p =", p, "center", sorted(p_center(b, p)))

# the center vector collects the sizes, here 12233
z = center_vector(b, m)
print("z(612) =", z.z, "Catalan:", is_m_catalan(b, m), "prime:", is_prime_m_catalan(b, m))

# everything with that center: the six relabelings of 124 by the symmetric group
print(sorted(fiber_of_center(z)))

# the inverse gives the chamber, the increasing representative and the inversion table
print(invert_record(b, m))
print(invert_record((3, 9, 5, 5, 1, 4, 8, 1), 3))

# and finally the region itself
r = region_of_label(b, m)
print("region labeled 612:", r.as_map())

# vectors that are not labels are rejected
print("118 is a label:", is_m_catalan((1, 1, 8), 2))
