"""
The mu-permanent of a small matrix
==================================

One polynomial in mu that turns into the determinant, the permanent
or the product of the diagonal depending on where you evaluate it.
"""

from fractions import Fraction

from mupermanent import MuPolynomial, SquareMatrix, mu_permanent_brute
from mupermanent.matrix import determinant_oracle, permanent_oracle

# a symmetric 3x3 matrix with distinct prime entries, so every
# coefficient can be read back as a product of entries
A = SquareMatrix([[2, 7, 11], [7, 3, 13], [11, 13, 5]])
P = mu_permanent_brute(A)
print("P(mu) =", P.pretty())

# mu = -1 is the determinant, mu = 1 the permanent, mu = 0 the diagonal
for mu, name, value in [(-1, "det", determinant_oracle(A)), (1, "per", permanent_oracle(A)), (0, "diag", 2 * 3 * 5)]:
    print(f"P({mu:2d}) = {P(mu)}   {name} = {value}")

# any rational mu works
print("P(1/2) =", P(Fraction(1, 2)))

# zeroing a[1,3] leaves a tridiagonal matrix and the polynomial drops to degree 1
T = SquareMatrix([[2, 7, 0], [7, 3, 13], [0, 13, 5]])
print("tridiagonal:", mu_permanent_brute(T).pretty())

# zeroing a[2,3] instead gives an arrow; the mu^2 slot is empty
R = SquareMatrix([[2, 7, 11], [7, 3, 0], [11, 0, 5]])
print("arrow:      ", mu_permanent_brute(R).pretty())

# the two are the same tree, labeled differently, and the polynomials differ
assert mu_permanent_brute(T) != mu_permanent_brute(R)
assert mu_permanent_brute(R).coefficient(2) == 0
assert isinstance(P, MuPolynomial)
