"""Trees: generation, enumeration, stems, diametrical paths, decomposition.

Labeled trees are generated and enumerated through Prüfer sequences. The
decomposition machinery (stems, induced subtrees) supports the structure
theorem check: the eccentric graph of a tree is the union of the eccentric
graphs of the subtrees induced by its diametrical paths.
"""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Optional

from .eccentric import eccentric_graph
from .errors import InputError, NoStemError, UnsupportedSizeError
from .graphs import (
    Graph,
    _graph_unchecked,
    all_pairs_distances,
    bfs_distances,
    is_connected,
)

ENUMERATION_MAX_VERTICES = 8


@dataclass(frozen=True)
class Tree:
    """A connected acyclic graph; validated on construction."""

    graph: Graph

    def __post_init__(self) -> None:
        g = self.graph
        if g.num_edges != g.num_vertices - 1 or not is_connected(g):
            raise InputError("not a tree (needs n-1 edges and connectivity)")

    @property
    def num_vertices(self) -> int:
        return self.graph.num_vertices


def _tree_unchecked(num_vertices: int, edges) -> Tree:
    t = object.__new__(Tree)
    object.__setattr__(t, "graph", _graph_unchecked(num_vertices, edges))
    return t


@dataclass(frozen=True)
class DiametricalPath:
    """Vertex sequence of a diameter-realizing path, stored with v0 < vL."""

    vertices: tuple[int, ...]

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]


@dataclass(frozen=True)
class InducedSubtree:
    """Subtree induced by a diametrical path, in original and compact labels.

    ``vertices[i]`` is the original label of compact vertex ``i`` of ``tree``.
    """

    vertices: tuple[int, ...]
    tree: Tree


@dataclass(frozen=True)
class TreeDecomposition:
    paths: tuple[DiametricalPath, ...]
    induced_subtrees: tuple[InducedSubtree, ...]


def prufer_decode(sequence: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    """Edge list of the labeled tree encoded by a Prüfer sequence."""
    degree = [1] * n
    for x in sequence:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x) if leaf < x else (x, leaf))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v) if u < v else (v, u))
    return edges


def random_tree(n: int, seed: int) -> Tree:
    """Uniformly random labeled tree; identical (n, seed) gives identical trees."""
    if n < 2:
        raise InputError("random trees need at least two vertices")
    rng = random.Random(seed)
    sequence = tuple(rng.randrange(n) for _ in range(n - 2))
    return _tree_unchecked(n, prufer_decode(sequence, n))


def enumerate_trees(n: int) -> Iterator[Tree]:
    """All n^(n-2) labeled trees on n vertices, one per Prüfer sequence."""
    if not 2 <= n <= ENUMERATION_MAX_VERTICES:
        raise UnsupportedSizeError(
            f"exhaustive enumeration supports 2..{ENUMERATION_MAX_VERTICES} vertices"
        )
    for sequence in itertools.product(range(n), repeat=n - 2):
        yield _tree_unchecked(n, prufer_decode(sequence, n))


def stem_at(t: Tree, leaf: int) -> tuple[int, ...]:
    """Path from a leaf to the nearest vertex of degree greater than two."""
    g = t.graph
    if g.degree(leaf) != 1:
        raise InputError(f"vertex {leaf} is not a leaf")
    path = [leaf]
    prev = -1
    current = leaf
    while g.degree(current) <= 2:
        step = [w for w in g.adjacency[current] if w != prev]
        if not step:
            raise NoStemError("path graphs have no stems")
        prev = current
        current = step[0]
        path.append(current)
    return tuple(path)


def tree_path(t: Tree, u: int, v: int) -> tuple[int, ...]:
    """The unique path between two vertices of a tree."""
    adjacency = t.graph.adjacency
    parent = {u: -1}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            break
        for w in adjacency[x]:
            if w not in parent:
                parent[w] = x
                stack.append(w)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return tuple(path)


def diametrical_paths(t: Tree) -> list[DiametricalPath]:
    """All diameter-realizing paths, one per unordered endpoint pair."""
    dd = all_pairs_distances(t.graph)
    diam = dd.diameter
    paths = []
    for u in range(t.num_vertices):
        row = dd.dist[u]
        for v in range(u + 1, t.num_vertices):
            if row[v] == diam:
                paths.append(DiametricalPath(tree_path(t, u, v)))
    return paths


def induced_subtree(t: Tree, p: DiametricalPath) -> InducedSubtree:
    """Remove stems at leaves (other than p's endpoints) that end some other
    diametrical path; the stem's terminal branching vertex survives."""
    all_paths = diametrical_paths(t)
    if p not in all_paths:
        raise InputError("path is not a diametrical path of the tree")
    keep = set(p.endpoints)
    other_endpoints = set()
    for q in all_paths:
        if q != p:
            other_endpoints.update(q.endpoints)
    removed: set[int] = set()
    for z in sorted(other_endpoints - keep):
        removed.update(stem_at(t, z)[:-1])
    vertices = tuple(v for v in range(t.num_vertices) if v not in removed)
    index = {v: i for i, v in enumerate(vertices)}
    edges = [
        (index[u], index[v])
        for u, v in t.graph.edges
        if u not in removed and v not in removed
    ]
    return InducedSubtree(vertices=vertices, tree=_tree_unchecked(len(vertices), edges))


def decompose(t: Tree) -> TreeDecomposition:
    paths = tuple(diametrical_paths(t))
    return TreeDecomposition(
        paths=paths,
        induced_subtrees=tuple(induced_subtree(t, p) for p in paths),
    )


def check_structure_theorem(t: Tree) -> tuple[bool, Optional[tuple[int, int]]]:
    """Union of the induced subtrees' eccentric graphs (lifted back to the
    original labels) versus the tree's eccentric graph. Returns the equality
    flag and a mismatching edge if any."""
    expected = set(eccentric_graph(t.graph).edges)
    union: set[tuple[int, int]] = set()
    for p in diametrical_paths(t):
        sub = induced_subtree(t, p)
        labels = sub.vertices
        for a, b in eccentric_graph(sub.tree.graph).edges:
            u, v = labels[a], labels[b]
            union.add((u, v) if u < v else (v, u))
    if union == expected:
        return True, None
    return False, next(iter(union ^ expected))


def predicted_tree_girth(t: Tree) -> int:
    """Eccentric girth of a tree predicted from its diameter parity and the
    number of diametrical paths: 3 if the diameter is even, 0 if odd with a
    unique diametrical path, 4 otherwise."""
    dd = all_pairs_distances(t.graph)
    diam = dd.diameter
    if diam % 2 == 0:
        return 3
    n = t.num_vertices
    pairs = 0
    for u in range(n):
        row = dd.dist[u]
        for v in range(u + 1, n):
            if row[v] == diam:
                pairs += 1
                if pairs > 1:
                    return 4
    return 0


def check_monotone_exclusion(t: Tree) -> bool:
    """No 2-path v1-v2-v3 in E(T) has strictly increasing tree eccentricities."""
    dd = all_pairs_distances(t.graph)
    ecc = dd.ecc
    eg = eccentric_graph(t.graph)
    for v2 in range(t.num_vertices):
        nbrs = eg.adjacency[v2]
        if len(nbrs) < 2:
            continue
        values = [ecc[w] for w in nbrs]
        if min(values) < ecc[v2] < max(values):
            return False
    return True


def is_path_graph(t: Tree) -> bool:
    return all(t.graph.degree(v) <= 2 for v in range(t.num_vertices))


def is_star(t: Tree) -> bool:
    """Star on n vertices (center adjacent to all others); includes P2 and P3."""
    return max(t.graph.degree(v) for v in range(t.num_vertices)) == t.num_vertices - 1


def is_p2(t: Tree) -> bool:
    return t.num_vertices == 2


def is_p4(t: Tree) -> bool:
    return t.num_vertices == 4 and sorted(t.graph.degree(v) for v in range(4)) == [1, 1, 2, 2]
