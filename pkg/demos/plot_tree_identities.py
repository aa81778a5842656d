"""
Expanding the mu-permanent of a tree matrix
===========================================

For a symmetric matrix whose off-diagonal pattern is a crossing-free
labeled tree, only matchings of the tree contribute, and each edge
{i, j} carries exactly mu^(2|i-j| - 1). That gives a fast evaluator.
"""

import random
import time

from mupermanent import mu_permanent_brute, mu_permanent_tree_fast
from mupermanent.suites import random_mu_labeled_tree, random_tree_matrix
from mupermanent.trees import check_all_identities, check_expansion_identity

rng = random.Random(0)
edges = random_mu_labeled_tree(7, rng)
A = random_tree_matrix(7, edges, rng)
print("edges:", sorted(edges))

# expanding along any row matches the direct computation
expansions, derivative = check_all_identities(A)
print("row expansions hold:", all(expansions))
print("derivative identity holds:", bool(derivative))

# the fast evaluator agrees with summing over all 5040 permutations
print("fast == brute:", mu_permanent_tree_fast(A) == mu_permanent_brute(A))

# a crossing labeling breaks the expansion; the residual is one monomial
# mu^4 - mu^6 times the weight of the crossing matching
B = random_tree_matrix(4, [(1, 3), (2, 3), (2, 4)], rng)
print("residual:", check_expansion_identity(B, 1, strict=False).residual.pretty())

# a path of order 200 in well under a second
n = 200
path = random_tree_matrix(n, [(i, i + 1) for i in range(1, n)], rng)
start = time.perf_counter()
P = mu_permanent_tree_fast(path)
print(f"order {n}: degree {P.degree}, {time.perf_counter() - start:.3f}s")
