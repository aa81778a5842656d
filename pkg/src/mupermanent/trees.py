"""Acyclic symmetric matrices: masked submatrices, expansion checks, and a fast mu-permanent.

On a forest the only permutations with a nonzero product are involutions
whose 2-cycles are edges, so the mu-permanent is a weighted sum over
matchings. Under a mu-labeling the inversion count of such an involution
is additive over its matched edges, each edge {i, j} contributing
2(j - i) - 1, which turns the sum into a product-friendly recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .algebra import MuPolynomial, inversions, transposition_inversions
from .labeling import find_crossing
from .matrix import SquareMatrix, _integer_rows, mu_permanent_brute

__all__ = [
    "PreconditionError",
    "IdentityCheck",
    "mask",
    "edge_exponent",
    "matching_involution",
    "forest_matchings",
    "acyclic_matchings",
    "check_tree_matrix",
    "check_expansion_identity",
    "check_derivative_identity",
    "check_all_identities",
    "mu_permanent_tree_fast",
]

Edge = tuple[int, int]


class PreconditionError(ValueError):
    """Input lies outside the class of matrices an operation is defined for."""


@dataclass(frozen=True)
class IdentityCheck:
    holds: bool
    lhs: MuPolynomial
    rhs: MuPolynomial

    @property
    def residual(self) -> MuPolynomial:
        return self.lhs - self.rhs

    def __bool__(self):
        return self.holds


def mask(A: SquareMatrix, indices: Iterable[int]) -> SquareMatrix:
    """A with the rows and columns in ``indices`` zeroed, keeping 1 on their diagonal."""
    S = set(indices)
    n = A.n
    for i in S:
        if not 1 <= i <= n:
            raise ValueError(f"mask index {i} outside 1..{n}")
    rows = []
    for i, row in enumerate(A.rows, start=1):
        if i in S:
            rows.append([int(i == j) for j in range(1, n + 1)])
        else:
            rows.append([0 if j in S else x for j, x in enumerate(row, start=1)])
    return SquareMatrix(rows)


def edge_exponent(i: int, j: int) -> int:
    """Power of mu carried by a matched edge {i, j}."""
    return transposition_inversions(min(i, j), max(i, j))


def matching_involution(n: int, matching: Iterable[Edge]) -> tuple[int, ...]:
    image = list(range(1, n + 1))
    for i, j in matching:
        image[i - 1], image[j - 1] = j, i
    return tuple(image)


def _is_forest(n: int, edges: list[Edge]) -> bool:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def forest_matchings(n: int, edges: Iterable[Edge]) -> list[frozenset[Edge]]:
    """Every matching (the empty one included) of a forest on 1..n."""
    edges = sorted((min(e), max(e)) for e in edges)
    if not _is_forest(n, edges):
        raise PreconditionError("graph has a cycle")
    out: list[frozenset[Edge]] = []

    def walk(start: int, chosen: list[Edge], covered: set):
        out.append(frozenset(chosen))
        for t in range(start, len(edges)):
            i, j = edges[t]
            if i in covered or j in covered:
                continue
            chosen.append(edges[t])
            covered |= {i, j}
            walk(t + 1, chosen, covered)
            covered -= {i, j}
            chosen.pop()

    walk(0, [], set())
    return out


def acyclic_matchings(A: SquareMatrix) -> list[frozenset[Edge]]:
    if not A.is_symmetric():
        raise PreconditionError("matrix is not symmetric")
    return forest_matchings(A.n, A.graph_edges())


def check_tree_matrix(A: SquareMatrix, require_mu_labeling: bool = True) -> list[Edge]:
    """Validate a symmetric matrix with acyclic graph; returns its edges.

    Forests are accepted: every component is handled independently and the
    edgeless (diagonal) case is the trivial forest.
    """
    if not A.is_symmetric():
        raise PreconditionError("matrix is not symmetric")
    edges = A.graph_edges()
    if not _is_forest(A.n, edges):
        raise PreconditionError("graph of the matrix has a cycle")
    if require_mu_labeling:
        crossing = find_crossing(edges)
        if crossing is not None:
            (i, j), (k, l) = crossing
            raise PreconditionError(
                f"labeling is not a mu-labeling: edges {{{i},{j}}} and {{{k},{l}}} cross"
            )
    return edges


class _BruteCache:
    """mu_permanent_brute of masked copies of one matrix, memoized by mask."""

    def __init__(self, A: SquareMatrix):
        self.A = A
        self._memo: dict[frozenset, MuPolynomial] = {}

    def __call__(self, S=()) -> MuPolynomial:
        key = frozenset(S)
        if key not in self._memo:
            self._memo[key] = mu_permanent_brute(mask(self.A, key) if key else self.A)
        return self._memo[key]


def _expansion(A: SquareMatrix, i: int, edges: list[Edge], perm: _BruteCache) -> IdentityCheck:
    rhs = perm({i}).scale(A[i, i])
    for u, v in edges:
        if i not in (u, v):
            continue
        a = A[u, v]
        rhs = rhs + perm({u, v}).shift(edge_exponent(u, v)).scale(a * a)
    lhs = perm()
    return IdentityCheck(lhs == rhs, lhs, rhs)


def check_expansion_identity(A: SquareMatrix, i: int, strict: bool = True) -> IdentityCheck:
    """Compare P(A) with the expansion along vertex i, both sides by brute force.

    ``P(A) = a_ii P(A_{i}) + sum_{j ~ i} a_ij^2 P(A_{ij}) mu^(2|j-i|-1)``.
    With ``strict`` the matrix must be symmetric, acyclic and mu-labeled;
    otherwise only symmetry and acyclicity are enforced and the residual
    reports how the identity fails.
    """
    edges = check_tree_matrix(A, require_mu_labeling=strict)
    if not 1 <= i <= A.n:
        raise ValueError(f"vertex {i} outside 1..{A.n}")
    return _expansion(A, i, edges, _BruteCache(A))


def check_derivative_identity(A: SquareMatrix, strict: bool = True) -> IdentityCheck:
    """Compare dP/dmu with sum over edges of l(ij) a_ij^2 P(A_{ij}) mu^(l(ij)-1)."""
    edges = check_tree_matrix(A, require_mu_labeling=strict)
    return _derivative(A, edges, _BruteCache(A))


def _derivative(A: SquareMatrix, edges: list[Edge], perm: _BruteCache) -> IdentityCheck:
    rhs = MuPolynomial()
    for u, v in edges:
        ell = edge_exponent(u, v)
        a = A[u, v]
        rhs = rhs + perm({u, v}).shift(ell - 1).scale(ell * a * a)
    lhs = perm().derivative()
    return IdentityCheck(lhs == rhs, lhs, rhs)


def check_all_identities(A: SquareMatrix, strict: bool = True) -> tuple[list[IdentityCheck], IdentityCheck]:
    """Expansion at every vertex plus the derivative identity, sharing brute-force work."""
    edges = check_tree_matrix(A, require_mu_labeling=strict)
    perm = _BruteCache(A)
    expansions = [_expansion(A, i, edges, perm) for i in range(1, A.n + 1)]
    return expansions, _derivative(A, edges, perm)


def _matching_sum(A: SquareMatrix, edges: list[Edge]) -> MuPolynomial:
    n = A.n
    total = MuPolynomial()
    for M in forest_matchings(n, edges):
        covered = {v for e in M for v in e}
        weight = Fraction(1)
        for k in range(1, n + 1):
            if k not in covered:
                weight *= A[k, k]
        for i, j in M:
            weight *= A[i, j] * A[i, j]
        if weight:
            total = total + MuPolynomial.monomial(inversions(matching_involution(n, M)), weight)
    return total


def _int_mul(a: list[int], b: list[int]) -> list[int]:
    if len(a) == 1:
        return [a[0] * y for y in b]
    if len(b) == 1:
        return [b[0] * x for x in a]
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _int_add_into(acc: list[int], p: list[int], shift: int, c: int) -> None:
    need = len(p) + shift
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for k, x in enumerate(p):
        acc[k + shift] += c * x


def _matching_dp(A: SquareMatrix, edges: list[Edge]) -> MuPolynomial:
    n = A.n
    # scaling row i by d_i multiplies the mu-permanent by d_i, so work over
    # integers and divide once at the end; a matched edge then weighs
    # b_vw * b_wv, which is d_v d_w a_vw^2
    B, scale = _integer_rows(A)
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    # full[v]: subtree of v with v matched inside it or left unmatched
    # without[v]: subtree of v with v already taken by its parent
    full: dict[int, list[int]] = {}
    without: dict[int, list[int]] = {}
    result = [1]
    seen: set[int] = set()
    for root in range(1, n + 1):
        if root in seen:
            continue
        order, parent = [], {root: 0}
        stack = [root]
        seen.add(root)
        while stack:
            v = stack.pop()
            order.append(v)
            for w in sorted(adj[v], reverse=True):
                if w not in seen:
                    seen.add(w)
                    parent[w] = v
                    stack.append(w)
        for v in reversed(order):
            kids = [w for w in adj[v] if parent.get(w) == v]
            # prefix[t] * suffix[t+1] = product of full[] over all kids but kids[t]
            prefix = [[1]]
            for w in kids:
                prefix.append(_int_mul(prefix[-1], full[w]))
            suffix = [[1]]
            for w in reversed(kids):
                suffix.append(_int_mul(suffix[-1], full[w]))
            suffix.reverse()
            without[v] = prefix[-1]
            value = [B[v - 1][v - 1] * x for x in prefix[-1]]
            for t, w in enumerate(kids):
                weight = B[v - 1][w - 1] * B[w - 1][v - 1]
                if weight:
                    rest = _int_mul(_int_mul(prefix[t], suffix[t + 1]), without[w])
                    _int_add_into(value, rest, edge_exponent(v, w), weight)
            full[v] = value
        result = _int_mul(result, full[root])
    return MuPolynomial(Fraction(c, scale) for c in result)


def mu_permanent_tree_fast(A: SquareMatrix, require_mu_labeling: bool = True) -> MuPolynomial:
    """mu-permanent of a symmetric matrix whose graph is a forest.

    With ``require_mu_labeling`` (the default) the labeling is checked and
    a polynomial-time matching recursion is used. Without it, any labeling
    is accepted and each matching's involution gets its inversion count
    computed directly, which costs time proportional to the number of
    matchings.
    """
    edges = check_tree_matrix(A, require_mu_labeling=require_mu_labeling)
    if require_mu_labeling:
        return _matching_dp(A, edges)
    return _matching_sum(A, edges)
