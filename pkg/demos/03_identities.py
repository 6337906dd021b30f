"""
Two ways to sum to (n-1)^(n-1)
==============================

Both chain sums run over the same Catalan-sized set of index tuples, yet the
summands differ.
"""

from sphericalpf import identity

n = 4
for ks, a, b in zip(identity.enumerate_index_tuples(n),
                    identity.binomial_chain_terms(n),
                    identity.multinomial_chain_terms(n)):
    print(ks, a, b)

for n in range(2, 16):
    print(n, identity.binomial_chain_sum(n), identity.multinomial_chain_sum(n), (n - 1) ** (n - 1))

# n^n split by root degree, and the forest-count recursion behind it
print(identity.root_degree_terms(3), sum(identity.root_degree_terms(3)))
print([identity.forest_count_recursive(6, s) for s in range(7)])
print([identity.forest_count(6, s) for s in range(7)])

# closed count of standard monomials for every k
for k in range(6):
    print("k =", k, identity.u_parking_count(6, k))
