"""
Standard monomials of skeleton ideals
=====================================

Build the generators of M_4^(2), list its standard monomials and split them
into parking functions and spherical parking functions.
"""

from collections import Counter

from sphericalpf import ideal, seqcore

gens = ideal.skeleton_generators(4, 2)
print(len(gens), "generators, e.g.", gens.generators[:5])

standard = list(ideal.enumerate_standard(4, 2))
print(len(standard), "standard monomials")

# every standard monomial is either a parking function or a spherical one
kinds = Counter(
    "parking" if seqcore.is_parking_function(m) else "spherical" for m in standard
)
print(kinds)

# the spherical ones, grouped by sorted profile
profiles = Counter(tuple(sorted(m)) for m in standard if seqcore.is_spherical_parking_function(m))
for profile, mult in sorted(profiles.items()):
    print(profile, "x", mult)

# shrinking k removes generators and so adds standard monomials
for k in range(4):
    print("k =", k, "->", ideal.count_standard(4, k))
