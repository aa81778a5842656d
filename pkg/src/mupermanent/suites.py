"""Seeded random corpora and the pass/fail suites behind ``mupermanent verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .labeling import count_path_labelings, is_mu_labeling, label_tree, relabel_edges, UnlabeledTree
from .matrix import SquareMatrix, mu_permanent_brute
from .sequences import a001792_closed_form, cross_validate, format_table
from .trees import check_all_identities, mu_permanent_tree_fast

__all__ = [
    "PUBLISHED_PATH_COUNTS",
    "SuiteRow",
    "random_tree",
    "random_mu_labeled_tree",
    "random_tree_matrix",
    "random_matrix",
    "run_identities",
    "run_sequence",
    "run_labelings",
    "format_rows",
]

# published counts of mu-labelings of the path, keyed by order
PUBLISHED_PATH_COUNTS = {
    2: 1, 3: 3, 4: 8, 5: 20, 6: 48, 7: 112, 8: 256, 9: 576, 10: 1280, 11: 2816,
}


@dataclass(frozen=True)
class SuiteRow:
    name: str
    passed: bool
    detail: str = ""


def random_tree(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Uniform random labeled tree on 1..n, decoded from a random Pruefer sequence."""
    if n == 1:
        return []
    if n == 2:
        return [(1, 2)]
    code = [rng.randint(1, n) for _ in range(n - 2)]
    degree = [1] * (n + 1)
    for v in code:
        degree[v] += 1
    edges = []
    for v in code:
        leaf = next(u for u in range(1, n + 1) if degree[u] == 1)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(1, n + 1) if degree[x] == 1)
    edges.append((u, w))
    return sorted(edges)


def random_mu_labeled_tree(n: int, rng: random.Random, tries: int = 200) -> list[tuple[int, int]]:
    """Random tree, relabeled by a random permutation that happens to be a mu-labeling.

    Falls back to the tree-labeling algorithm from a random root when
    rejection sampling keeps failing.
    """
    edges = random_tree(n, rng)
    for _ in range(tries):
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        relabeled = relabel_edges(edges, dict(zip(range(1, n + 1), perm)))
        if is_mu_labeling(relabeled):
            return relabeled
    tree = UnlabeledTree(edges, range(1, n + 1))
    return relabel_edges(edges, label_tree(tree, rng.randint(1, n)))


def _random_entry(rng: random.Random, nonzero: bool = False) -> Fraction:
    num = rng.randint(-9, 9)
    while nonzero and num == 0:
        num = rng.randint(-9, 9)
    return Fraction(num, rng.randint(1, 6))


def random_tree_matrix(n: int, edges, rng: random.Random) -> SquareMatrix:
    diagonal = [_random_entry(rng) for _ in range(n)]
    weights = {e: _random_entry(rng, nonzero=True) for e in edges}
    return SquareMatrix.symmetric_from_graph(n, diagonal, weights)


def random_matrix(n: int, rng: random.Random) -> SquareMatrix:
    return SquareMatrix([[_random_entry(rng) for _ in range(n)] for _ in range(n)])


def run_identities(max_order: int = 7, seed: int = 0, per_order: int = 100) -> list[SuiteRow]:
    """Expansion (every vertex), derivative, and fast-vs-brute checks on random mu-labeled trees."""
    rng = random.Random(seed)
    rows = []
    for n in range(2, max_order + 1):
        failures = {"expansion": 0, "derivative": 0, "fast": 0}
        for _ in range(per_order):
            edges = random_mu_labeled_tree(n, rng)
            A = random_tree_matrix(n, edges, rng)
            expansions, derivative = check_all_identities(A)
            failures["expansion"] += sum(1 for c in expansions if not c)
            failures["derivative"] += not derivative
            failures["fast"] += mu_permanent_tree_fast(A) != mu_permanent_brute(A)
        for what, bad in failures.items():
            rows.append(SuiteRow(f"{what} n={n}", bad == 0, f"{per_order} trees, {bad} failures"))
    return rows


def run_sequence(max_order: int = 20, enumerate_up_to: int = 9) -> tuple[list[SuiteRow], str]:
    table = cross_validate(max_order, enumerate_up_to=min(enumerate_up_to, max_order))
    rows = [
        SuiteRow(f"k={r.k}", r.agree, " ".join(str(v) for v in r.values)) for r in table
    ]
    return rows, format_table(table)


def run_labelings(max_order: int = 11, engine: str = "pruned") -> list[SuiteRow]:
    rows = []
    for m in range(2, max_order + 1):
        count = count_path_labelings(m, engine=engine)
        expected = PUBLISHED_PATH_COUNTS.get(m, a001792_closed_form(m - 2))
        source = "published" if m in PUBLISHED_PATH_COUNTS else "closed form"
        rows.append(SuiteRow(f"order {m}", count == expected, f"count {count}, {source} {expected}"))
    return rows


def format_rows(rows: list[SuiteRow]) -> str:
    width = max((len(r.name) for r in rows), default=0)
    return "".join(
        f"{'PASS' if r.passed else 'FAIL'}  {r.name.ljust(width)}  {r.detail}".rstrip() + "\n" for r in rows
    )
