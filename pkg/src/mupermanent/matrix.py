"""Square rational matrices, the brute-force mu-permanent, and its special-value oracles.

Indices are 1-based everywhere in the public API: ``A[i, j]`` is the
entry in row ``i``, column ``j``.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .algebra import MuPolynomial, as_fraction, format_rational

__all__ = [
    "ResourceLimitError",
    "SquareMatrix",
    "parse_matrix",
    "read_matrix",
    "mu_permanent_brute",
    "determinant_oracle",
    "permanent_oracle",
    "diagonal_product",
    "DEFAULT_MAX_N",
]

DEFAULT_MAX_N = 11

# orders at or below this use the plain Fraction loop; above it the
# vectorized multi-modular engine
_PYTHON_ENGINE_MAX_N = 8
# permutations of the last _TAIL_ORDER rows are materialized as one numpy block
_TAIL_ORDER = 9


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured size cap."""


class SquareMatrix:
    """Immutable n-by-n matrix of Fractions."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(as_fraction(x) for x in row) for row in rows)
        n = len(rows)
        if n < 1:
            raise ValueError("matrix order must be at least 1")
        for r, row in enumerate(rows, start=1):
            if len(row) != n:
                raise ValueError(f"row {r} has {len(row)} entries, expected {n}")
        self._rows = rows

    @classmethod
    def identity(cls, n: int) -> SquareMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence) -> SquareMatrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def symmetric_from_graph(cls, n: int, diagonal: Sequence, edge_weights: dict) -> SquareMatrix:
        """Build a symmetric matrix from a diagonal and ``{(i, j): a_ij}`` (1-based)."""
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = diagonal[i]
        for (i, j), w in edge_weights.items():
            rows[i - 1][j - 1] = w
            rows[j - 1][i - 1] = w
        return cls(rows)

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        """0-based nested tuples."""
        return self._rows

    def __getitem__(self, key) -> Fraction:
        i, j = key
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"index ({i}, {j}) outside 1..{self.n}")
        return self._rows[i - 1][j - 1]

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(x) for x in row) for row in self._rows)
        return f"SquareMatrix([{body}])"

    def transpose(self) -> SquareMatrix:
        return SquareMatrix(zip(*self._rows))

    def is_symmetric(self) -> bool:
        n = self.n
        return all(
            self._rows[i][j] == self._rows[j][i] for i in range(n) for j in range(i + 1, n)
        )

    def graph_edges(self) -> list[tuple[int, int]]:
        """Edges {i, j}, i < j, where either off-diagonal entry is nonzero."""
        n = self.n
        return [
            (i + 1, j + 1)
            for i in range(n)
            for j in range(i + 1, n)
            if self._rows[i][j] != 0 or self._rows[j][i] != 0
        ]

    def to_text(self) -> str:
        lines = [str(self.n)]
        lines += [" ".join(format_rational(x) for x in row) for row in self._rows]
        return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> SquareMatrix:
    """Parse the matrix file format.

    First significant line holds ``n``; the next ``n`` lines hold ``n``
    whitespace-separated integers or ``p/q`` fractions. Lines starting
    with ``#`` and blank lines are skipped.
    """
    lines = [
        ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty matrix file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the order n, got {lines[0]!r}") from None
    if n < 1:
        raise ValueError(f"matrix order must be at least 1, got {n}")
    body = lines[1:]
    if len(body) != n:
        raise ValueError(f"expected {n} matrix rows, found {len(body)}")
    rows = []
    for r, line in enumerate(body, start=1):
        tokens = line.split()
        if len(tokens) != n:
            raise ValueError(f"row {r}: expected {n} entries, found {len(tokens)}")
        try:
            rows.append([as_fraction(tok) for tok in tokens])
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"row {r}: {exc}") from None
    return SquareMatrix(rows)


def read_matrix(path) -> SquareMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def _check_cap(n: int, max_n: int | None) -> None:
    if max_n is not None and n > max_n:
        raise ResourceLimitError(
            f"order {n} exceeds the brute-force cap {max_n} ({math.factorial(n)} permutations)"
        )


def mu_permanent_brute(
    A: SquareMatrix, max_n: int | None = DEFAULT_MAX_N, engine: str = "auto"
) -> MuPolynomial:
    """Sum of prod_i a_{i,sigma(i)} * mu**inv(sigma) over all n! permutations.

    ``engine`` is ``"python"`` (depth-first Fraction walk over
    lexicographic permutations, skipping zero entries), ``"vectorized"``
    (numpy blocks of permutations, exact via residues modulo several
    primes), or ``"auto"``.
    """
    n = A.n
    _check_cap(n, max_n)
    if engine == "auto":
        engine = "python" if n <= _PYTHON_ENGINE_MAX_N else "vectorized"
    if engine == "python":
        return _brute_python(A)
    if engine == "vectorized":
        return _brute_vectorized(A)
    raise ValueError(f"unknown engine {engine!r}")


def _brute_python(A: SquareMatrix) -> MuPolynomial:
    # depth-first over rows, columns ascending: visits permutations in
    # lexicographic order and drops a whole subtree once its prefix product is 0
    rows = A.rows
    n = A.n
    coeffs = [Fraction(0)] * (n * (n - 1) // 2 + 1)
    used = [False] * n

    def walk(i: int, term: Fraction, inv: int):
        if i == n:
            coeffs[inv] += term
            return
        row = rows[i]
        above = sum(used)  # used columns greater than c, updated as c grows
        for c in range(n):
            if used[c]:
                above -= 1
                continue
            if row[c]:
                used[c] = True
                walk(i + 1, term * row[c], inv + above)
                used[c] = False

    walk(0, Fraction(1), 0)
    return MuPolynomial(coeffs)


def _primes_below(limit: int, count: int) -> list[int]:
    """The ``count`` largest primes below ``limit`` (trial division; limit < 2**32)."""
    out = []
    candidate = limit - 1 if limit % 2 == 0 else limit - 2
    while len(out) < count:
        if candidate < 3:
            raise ValueError("ran out of primes")
        root = math.isqrt(candidate)
        if all(candidate % d for d in range(3, root + 1, 2)):
            out.append(candidate)
        candidate -= 2
    return out


def _integer_rows(A: SquareMatrix) -> tuple[list[list[int]], int]:
    """Scale each row to integers; returns the rows and the product of scale factors."""
    scaled, total = [], 1
    for row in A.rows:
        d = math.lcm(*(x.denominator for x in row))
        scaled.append([int(x * d) for x in row])
        total *= d
    return scaled, total


def _block_inversions(perms: np.ndarray) -> np.ndarray:
    m = perms.shape[1]
    inv = np.zeros(perms.shape[0], dtype=np.int64)
    for a in range(m):
        for b in range(a + 1, m):
            inv += perms[:, a] > perms[:, b]
    return inv


def _brute_vectorized(A: SquareMatrix) -> MuPolynomial:
    n = A.n
    B, scale = _integer_rows(A)
    # every coefficient is bounded by the permanent of |B|, itself bounded by
    # the product of absolute row sums
    bound = math.prod(sum(abs(x) for x in row) for row in B)
    if bound == 0:
        return MuPolynomial()
    primes = []
    modulus = 1
    while modulus <= 2 * bound:
        primes = _primes_below(2**31, len(primes) + 1)
        modulus = math.prod(primes)
    P = np.array(primes, dtype=np.int64)[:, None]
    Bmod = np.array([[[x % p for x in row] for row in B] for p in primes], dtype=np.int64)

    k = max(0, n - _TAIL_ORDER)
    m = n - k
    tail = np.array(list(itertools.permutations(range(m))), dtype=np.intp).reshape(-1, m)
    tail_inv = _block_inversions(tail)
    order = np.argsort(tail_inv, kind="stable")
    tail = tail[order]
    tail_inv = tail_inv[order]
    starts = np.flatnonzero(np.r_[True, tail_inv[1:] != tail_inv[:-1]])
    class_inv = tail_inv[starts]

    maxdeg = n * (n - 1) // 2
    residues = np.zeros((len(primes), maxdeg + 1), dtype=np.int64)
    all_cols = range(n)
    # prefixes over the same column set leave the same columns to the tail rows,
    # so the tail products are computed once per set
    for prefix_set in itertools.combinations(all_cols, k):
        rest = np.array([c for c in all_cols if c not in prefix_set], dtype=np.intp)
        cols = rest[tail]
        prod = Bmod[:, k, cols[:, 0]]
        for r in range(1, m):
            prod = prod * Bmod[:, k + r, cols[:, r]] % P
        # each class sum is < (m!)(2**31) < 2**63, so int64 reduceat is exact
        sums = np.add.reduceat(prod, starts, axis=1) % P
        below = [int(np.count_nonzero(rest < c)) for c in range(n)]
        for prefix in itertools.permutations(prefix_set):
            if any(B[r][c] == 0 for r, c in enumerate(prefix)):
                continue
            base_inv = sum(1 for a in range(k) for b in range(a + 1, k) if prefix[a] > prefix[b])
            base_inv += sum(below[c] for c in prefix)
            pre = np.ones((len(primes), 1), dtype=np.int64)
            for r, c in enumerate(prefix):
                pre = pre * Bmod[:, r, c][:, None] % P
            idx = base_inv + class_inv
            residues[:, idx] = (residues[:, idx] + sums * pre % P) % P

    coeffs = []
    for deg in range(maxdeg + 1):
        x = 0
        for p, r in zip(primes, residues[:, deg].tolist()):
            Mi = modulus // p
            x += r * Mi * pow(Mi, -1, p)
        x %= modulus
        if x > modulus // 2:
            x -= modulus
        coeffs.append(Fraction(x, scale))
    return MuPolynomial(coeffs)


def determinant_oracle(A: SquareMatrix) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    M = [list(row) for row in A.rows]
    n = len(M)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if M[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            M[col], M[pivot] = M[pivot], M[col]
            det = -det
        p = M[col][col]
        det *= p
        for r in range(col + 1, n):
            f = M[r][col] / p
            if f:
                row_r, row_c = M[r], M[col]
                for c in range(col, n):
                    row_r[c] -= f * row_c[c]
    return det


def permanent_oracle(A: SquareMatrix, max_n: int | None = DEFAULT_MAX_N) -> Fraction:
    """Exact permanent by Ryser's inclusion-exclusion with Gray-code column updates."""
    n = A.n
    _check_cap(n, max_n)
    rows = A.rows
    row_sums = [Fraction(0)] * n
    total = Fraction(0)
    in_set = [False] * n
    size = 0
    for step in range(1, 2**n):
        # Gray code: flip the column at the lowest set bit of step
        j = (step & -step).bit_length() - 1
        sign = -1 if in_set[j] else 1
        in_set[j] = not in_set[j]
        size += sign
        for i in range(n):
            row_sums[i] += sign * rows[i][j]
        term = math.prod(row_sums)
        total += term if size % 2 == n % 2 else -term
    return total


def diagonal_product(A: SquareMatrix) -> Fraction:
    return math.prod((A.rows[i][i] for i in range(A.n)), start=Fraction(1))
