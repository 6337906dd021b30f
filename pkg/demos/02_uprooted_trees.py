"""
Uprooted trees and their statistics
===================================

Uprooted trees are rooted labeled trees whose root beats each of its
children. Count them, split them by root degree, and look at surface
inversions next to the degrees of spherical parking functions.
"""

from math import comb

from sphericalpf import arbor, seqcore

for n in range(2, 7):
    print(n, sum(1 for _ in arbor.enumerate_uprooted(n)), (n - 1) ** (n - 1))

# root degree on [4]
print(arbor.uprooted_statistic_distribution(4, "root_degree"))

# the uprooted trees on [4] with exactly one surface inversion
for t in arbor.enumerate_uprooted(4):
    if arbor.surface_inversions(t) == 1:
        print(t.root, t.edges())

# surface inversions against reindexed spherical degree
for n in range(2, 7):
    trees = arbor.uprooted_statistic_distribution(n, "surface_inversions")
    shift = comb(n, 2) + 1
    seqs = seqcore.spherical_degree_distribution(n).relabel(lambda d: shift - d)
    print(n, dict(trees), trees == seqs)
