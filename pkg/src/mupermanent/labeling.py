"""Mu-labelings: the crossing-free edge condition, tree labeling, and path enumeration.

A labeling is a mu-labeling when no two vertex-disjoint edges {i, j},
{k, l} (i < j, k < l, i < k) *cross*, i.e. every such pair is either
separated (j < k) or nested (l < j).
"""

from __future__ import annotations

import itertools
from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass, field

from .matrix import ResourceLimitError

__all__ = [
    "LabeledGraph",
    "UnlabeledTree",
    "edges_cross",
    "find_crossing",
    "is_mu_labeling",
    "path_edges",
    "label_tree",
    "relabel_edges",
    "enumerate_path_labelings",
    "count_path_labelings",
    "exists_mu_labeling",
    "free_trees",
    "parse_graph",
    "read_graph",
    "EXHAUSTIVE_MAX_ORDER",
]

Edge = tuple[int, int]

# orders >= 13 would take hours with the generate-and-test engine
EXHAUSTIVE_MAX_ORDER = 12
DEFAULT_SEARCH_MAX_N = 8


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LabeledGraph:
    """Simple graph on vertices 1..n; a vertex's id is its label."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge {{{u},{v}}} outside 1..{self.n}")
            normalized.add(_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> LabeledGraph:
        edges = list(edges)
        seen = set()
        for u, v in edges:
            e = _edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {{{u},{v}}}")
            seen.add(e)
        return cls(n, frozenset(edges))

    @classmethod
    def from_path(cls, sequence: Sequence[int]) -> LabeledGraph:
        """The path whose consecutive vertices carry the given labels."""
        return cls(len(sequence), frozenset(path_edges(sequence)))

    @classmethod
    def complete(cls, n: int) -> LabeledGraph:
        return cls(n, frozenset(itertools.combinations(range(1, n + 1), 2)))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def path_edges(sequence: Sequence[int]) -> list[Edge]:
    return [_edge(a, b) for a, b in zip(sequence, sequence[1:])]


def edges_cross(e: Edge, f: Edge) -> bool:
    """True iff two vertex-disjoint edges interleave (i < k < j < l)."""
    (i, j), (k, l) = sorted((_edge(*e), _edge(*f)))
    if len({i, j, k, l}) < 4:
        return False
    return i < k < j < l


def find_crossing(edges: Iterable[Edge]) -> tuple[Edge, Edge] | None:
    """First crossing pair in sorted edge order, or None for a mu-labeling."""
    es = sorted(_edge(u, v) for u, v in edges)
    for a in range(len(es)):
        i, j = es[a]
        for b in range(a + 1, len(es)):
            k, l = es[b]
            # sorted order gives i <= k; shared endpoints never conflict
            if i < k < j < l:
                return es[a], es[b]
    return None


def is_mu_labeling(graph: LabeledGraph | Iterable[Edge]) -> bool:
    edges = graph.edges if isinstance(graph, LabeledGraph) else graph
    return find_crossing(edges) is None


class UnlabeledTree:
    """A tree on arbitrary hashable, mutually comparable vertex ids."""

    def __init__(self, edges: Iterable[tuple[Hashable, Hashable]], vertices: Iterable[Hashable] = ()):
        adj: dict = {v: [] for v in vertices}
        count = 0
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u!r}")
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
            count += 1
        if not adj:
            raise ValueError("a tree needs at least one vertex")
        if count != len(adj) - 1:
            raise ValueError(f"{len(adj)} vertices and {count} edges cannot form a tree")
        start = next(iter(adj))
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(adj):
            raise ValueError("graph is not connected")
        self.adjacency = {v: tuple(sorted(ns)) for v, ns in adj.items()}

    @property
    def vertices(self) -> list:
        return sorted(self.adjacency)

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def edges(self) -> list[tuple]:
        return [(u, v) for u in self.vertices for v in self.adjacency[u] if u < v]


def _longest_path_from(tree: UnlabeledTree, start, labeled: set) -> list:
    """Longest simple path from ``start`` into unlabeled vertices (start excluded).

    Ties go to the smallest vertex id at the first point of divergence.
    """
    adj = tree.adjacency
    # heights of the unlabeled region hanging below start, computed iteratively
    order, parent = [], {start: None}
    stack = [start]
    while stack:
        v = stack.pop()
        order.append(v)
        for w in adj[v]:
            if w not in labeled and w != parent[v]:
                parent[w] = v
                stack.append(w)
    height = {}
    for v in reversed(order):
        kids = [w for w in adj[v] if w not in labeled and w != parent[v]]
        height[v] = 1 + max((height[w] for w in kids), default=-1)
    path, v = [], start
    while True:
        kids = [w for w in adj[v] if w not in labeled and w != parent[v]]
        if not kids:
            return path
        best = max(height[w] for w in kids)
        v = min(w for w in kids if height[w] == best)
        path.append(v)


def label_tree(tree: UnlabeledTree, root=None) -> dict:
    """Label a tree so that the result is a mu-labeling.

    The root gets 1, then the longest path leaving it is labeled
    2, 3, ..., k. From then on, the labeled vertex with the largest label
    that still has unlabeled neighbours becomes the new starting point
    and its longest unlabeled path takes the next labels. Ties between
    equally long paths go to the smallest vertex id; the default root is
    the smallest vertex id.

    Each rooted subtree ends up with a block of consecutive labels that
    starts at its root, which is what keeps disjoint edges from crossing.
    """
    if root is None:
        root = tree.vertices[0]
    elif root not in tree.adjacency:
        raise ValueError(f"root {root!r} is not a vertex of the tree")
    labels = {root: 1}
    labeled = {root}
    # labeled vertices, in label order, that may still have unlabeled neighbours
    frontier = [root]
    while frontier:
        v = frontier[-1]
        if all(w in labeled for w in tree.adjacency[v]):
            frontier.pop()
            continue
        for w in _longest_path_from(tree, v, labeled):
            labels[w] = len(labels) + 1
            labeled.add(w)
            frontier.append(w)
    return labels


def relabel_edges(edges: Iterable[tuple], labels: dict) -> list[Edge]:
    return sorted(_edge(labels[u], labels[v]) for u, v in edges)


def _crossing_free_sequence(seq: Sequence[int]) -> bool:
    # edges at path positions p and q >= p + 2 are always vertex-disjoint
    m = len(seq)
    lo = [min(seq[p], seq[p + 1]) for p in range(m - 1)]
    hi = [max(seq[p], seq[p + 1]) for p in range(m - 1)]
    for p in range(m - 3):
        a, b = lo[p], hi[p]
        for q in range(p + 2, m - 1):
            c, d = lo[q], hi[q]
            if a < c < b < d or c < a < d < b:
                return False
    return True


def _exhaustive(m: int) -> list[tuple[int, ...]]:
    out = []
    labels = range(1, m + 1)
    for first in labels:
        for last in range(m, first, -1):
            middle = [x for x in labels if x != first and x != last]
            for mid in itertools.permutations(middle):
                seq = (first, *mid, last)
                if _crossing_free_sequence(seq):
                    out.append(seq)
    return out


def _pruned(m: int) -> list[tuple[int, ...]]:
    out = []
    seq: list[int] = []
    # arcs as (k, l, bitmask of the labels strictly between k and l)
    arcs: list[tuple[int, int, int]] = []
    full = ((1 << (m + 1)) - 1) ^ 1

    def viable(x: int, free: int) -> bool:
        # the rest of the path starts at x and may not cross any arc, so every
        # free label must lie on the same side of each arc as x
        if not free:
            return True
        nfree = free.bit_count()
        for k, l, between in arcs:
            inside = (free & between).bit_count()
            if inside == 0:
                if k < x < l:
                    return False
            elif inside == nfree:
                if not (k <= x <= l):
                    return False
            else:
                return False
        return True

    def extend(free: int):
        if not free:
            if seq[0] < seq[-1]:
                out.append(tuple(seq))
            return
        prev = seq[-1]
        rest = free
        while rest:
            bit = rest & -rest
            rest ^= bit
            x = bit.bit_length() - 1
            i, j = (prev, x) if prev < x else (x, prev)
            # the previous arc shares prev with the new one; check all older ones
            if any(i < k < j < l or k < i < l < j for k, l, _ in arcs[:-1]):
                continue
            arcs.append((i, j, ((1 << j) - 1) ^ ((1 << (i + 1)) - 1)))
            seq.append(x)
            if viable(x, free ^ bit):
                extend(free ^ bit)
            seq.pop()
            arcs.pop()

    for first in range(1, m + 1):
        seq.append(first)
        extend(full ^ (1 << first))
        seq.pop()
    return out


def enumerate_path_labelings(
    m: int, canonical: bool = True, engine: str = "exhaustive"
) -> list[tuple[int, ...]]:
    """All mu-labelings of the path on m vertices, as label sequences.

    With ``canonical`` only sequences whose first label is smaller than
    their last are returned (one per reversal pair); otherwise both
    orientations. The result is sorted lexicographically.

    ``engine="exhaustive"`` generates every sequence with first < last and
    tests it; ``engine="pruned"`` backtracks and abandons a prefix as soon
    as its newest edge crosses an earlier one.
    """
    if m < 2:
        raise ValueError(f"path order must be at least 2, got {m}")
    if engine == "exhaustive":
        if m > EXHAUSTIVE_MAX_ORDER:
            raise ResourceLimitError(
                f"exhaustive enumeration capped at order {EXHAUSTIVE_MAX_ORDER}; use the pruned engine"
            )
        found = _exhaustive(m)
    elif engine == "pruned":
        found = _pruned(m)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    if not canonical:
        found = found + [s[::-1] for s in found]
    return sorted(found)


def count_path_labelings(m: int, canonical: bool = True, engine: str = "exhaustive") -> int:
    return len(enumerate_path_labelings(m, canonical=canonical, engine=engine))


def exists_mu_labeling(
    edges: Iterable[tuple], vertices: Iterable = (), max_n: int | None = DEFAULT_SEARCH_MAX_N
) -> dict | None:
    """Search for a mu-labeling of a simple graph; None when none exists.

    Backtracks over bijections vertices -> 1..n, assigning labels in vertex
    order and rejecting a partial assignment once two fully labeled
    disjoint edges cross.
    """
    edges = [tuple(e) for e in edges]
    verts = sorted(set(vertices) | {v for e in edges for v in e})
    n = len(verts)
    if max_n is not None and n > max_n:
        raise ResourceLimitError(f"exhaustive labeling search capped at {max_n} vertices, got {n}")
    index = {v: t for t, v in enumerate(verts)}
    # edges become checkable once their later endpoint (in vertex order) is labeled
    closing: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u, v in edges:
        a, b = sorted((index[u], index[v]))
        closing[b].append((a, b))
    label = [0] * n
    used = [False] * (n + 1)
    done: list[Edge] = []

    def place(t: int) -> bool:
        if t == n:
            return True
        for x in range(1, n + 1):
            if used[x]:
                continue
            label[t] = x
            new = [_edge(label[a], label[b]) for a, b in closing[t]]
            if any(edges_cross(e, f) for e in new for f in done) or any(
                edges_cross(e, f) for e, f in itertools.combinations(new, 2)
            ):
                continue
            used[x] = True
            done.extend(new)
            if place(t + 1):
                return True
            del done[len(done) - len(new):]
            used[x] = False
        return False

    if not place(0):
        return None
    return {v: label[index[v]] for v in verts}


def _tree_centers(adj: dict) -> list:
    degree = {v: len(ns) for v, ns in adj.items()}
    leaves = [v for v, d in degree.items() if d <= 1]
    remaining = len(adj)
    while remaining > 2:
        remaining -= len(leaves)
        nxt = []
        for v in leaves:
            for w in adj[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
            degree[v] = 0
        leaves = nxt
    return leaves


def _rooted_code(adj: dict, v, parent) -> str:
    return "(" + "".join(sorted(_rooted_code(adj, w, v) for w in adj[v] if w != parent)) + ")"


def _canonical_code(adj: dict) -> str:
    return min(_rooted_code(adj, c, None) for c in _tree_centers(adj))


def free_trees(n: int) -> list[list[Edge]]:
    """One edge list on vertices 1..n per isomorphism class of trees with n vertices.

    Grows every class of order n-1 by a leaf at each vertex and keeps one
    representative per centre-rooted canonical code.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    classes: dict[str, list[Edge]] = {"()": []}
    for order in range(2, n + 1):
        grown: dict[str, list[Edge]] = {}
        for tree_edges in classes.values():
            for v in range(1, order):
                candidate = tree_edges + [(v, order)]
                adj: dict = {u: [] for u in range(1, order + 1)}
                for a, b in candidate:
                    adj[a].append(b)
                    adj[b].append(a)
                grown.setdefault(_canonical_code(adj), candidate)
        classes = grown
    return [classes[code] for code in sorted(classes)]


def parse_graph(text: str) -> LabeledGraph:
    """Parse the graph file format: ``n`` then one ``u v`` edge per line; ``#`` comments."""
    lines = [
        ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise ValueError("empty graph file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the vertex count, got {lines[0]!r}") from None
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"edge line must be 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"non-integer vertex in {line!r}") from None
    return LabeledGraph.from_edges(n, edges)


def read_graph(path) -> LabeledGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())
