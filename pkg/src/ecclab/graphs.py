"""Core graph representation: distances, girth, union, small-graph isomorphism.

Vertices are contiguous 0-based integers. Graphs are immutable value types;
all derived data (distance tables, eccentricities) is computed on demand.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .errors import DisconnectedGraphError, InputError, UnsupportedSizeError

ISOMORPHISM_VERTEX_LIMIT = 16


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..num_vertices-1``.

    ``edges`` is normalized: each pair satisfies ``u < v``, the tuple is
    sorted and duplicate-free, so dataclass equality is labeled-graph
    equality.
    """

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return ((u, v) if u < v else (v, u)) in self.edge_set


@dataclass(frozen=True)
class DistanceData:
    """All-pairs hop counts with per-vertex eccentricities."""

    dist: tuple[tuple[int, ...], ...]
    ecc: tuple[int, ...]
    diameter: int
    radius: int


def _normalize_edges(edge_list: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted({(u, v) if u < v else (v, u) for u, v in edge_list}))


def _graph_unchecked(num_vertices: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Construct without endpoint validation (internal fast path)."""
    return Graph(num_vertices, _normalize_edges(edge_list))


def build_graph(num_vertices: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph, deduplicating and normalizing the edge list."""
    if num_vertices < 1:
        raise InputError(f"need at least one vertex, got {num_vertices}")
    for u, v in edge_list:
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise InputError(f"edge ({u},{v}) out of range for {num_vertices} vertices")
    return _graph_unchecked(num_vertices, edge_list)


def bfs_distances(adjacency: tuple[tuple[int, ...], ...], source: int) -> list[int]:
    """Hop counts from ``source``; -1 marks unreachable vertices."""
    dist = [-1] * len(adjacency)
    dist[source] = 0
    queue = deque((source,))
    pop = queue.popleft
    push = queue.append
    while queue:
        u = pop()
        du = dist[u] + 1
        for w in adjacency[u]:
            if dist[w] < 0:
                dist[w] = du
                push(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.num_vertices == 1:
        return True
    return -1 not in bfs_distances(g.adjacency, 0)


def all_pairs_distances(g: Graph) -> DistanceData:
    """BFS from every vertex. Raises on disconnected input."""
    adjacency = g.adjacency
    rows = []
    for v in range(g.num_vertices):
        row = bfs_distances(adjacency, v)
        if -1 in row:
            raise DisconnectedGraphError("all_pairs_distances requires a connected graph")
        rows.append(tuple(row))
    ecc = tuple(max(row) for row in rows) if g.num_vertices else ()
    return DistanceData(
        dist=tuple(rows),
        ecc=ecc,
        diameter=max(ecc),
        radius=min(ecc),
    )


def girth(g: Graph) -> int:
    """Length of the shortest cycle; 0 if acyclic.

    Runs a BFS from every vertex, recording the closed walk formed by the
    first non-tree edges; the minimum over all start vertices is exact for
    unweighted graphs. The input may be disconnected.
    """
    adjacency = g.adjacency
    n = g.num_vertices
    best = 0  # 0 encodes "no cycle found yet"
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque((root,))
        while queue:
            u = queue.popleft()
            du = dist[u]
            if best and 2 * du + 1 > best:
                # Deeper vertices cannot reveal a cycle shorter than best.
                break
            for w in adjacency[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cand = du + dist[w] + 1
                    if best == 0 or cand < best:
                        best = cand
    return best


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components, each sorted ascending."""
    seen = [False] * g.num_vertices
    components = []
    for s in range(g.num_vertices):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque((s,))
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        components.append(tuple(sorted(comp)))
    return components


def graph_union(a: Graph, b: Graph) -> Graph:
    """Union of edge sets over a common vertex set (matched by index)."""
    if a.num_vertices != b.num_vertices:
        raise InputError(
            f"vertex counts differ: {a.num_vertices} vs {b.num_vertices}"
        )
    return _graph_unchecked(a.num_vertices, a.edges + b.edges)


def apply_vertex_map(g: Graph, mapping: Iterable[int]) -> Graph:
    """Relabel ``g`` by a permutation of ``0..n-1``."""
    perm = tuple(mapping)
    if sorted(perm) != list(range(g.num_vertices)):
        raise InputError("mapping is not a permutation of the vertex set")
    return _graph_unchecked(g.num_vertices, ((perm[u], perm[v]) for u, v in g.edges))


def _neighbor_degree_key(g: Graph, v: int) -> tuple[int, tuple[int, ...]]:
    return g.degree(v), tuple(sorted(g.degree(w) for w in g.adjacency[v]))


def find_isomorphism(a: Graph, b: Graph) -> Optional[tuple[int, ...]]:
    """Backtracking isomorphism search for graphs up to 16 vertices.

    Returns a vertex map ``f`` (as a tuple indexed by vertices of ``a``)
    with ``{u,v} in a  <=>  {f(u),f(v)} in b``, or None.
    """
    if a.num_vertices > ISOMORPHISM_VERTEX_LIMIT or b.num_vertices > ISOMORPHISM_VERTEX_LIMIT:
        raise UnsupportedSizeError(
            f"isomorphism search is limited to {ISOMORPHISM_VERTEX_LIMIT} vertices"
        )
    n = a.num_vertices
    if n != b.num_vertices or a.num_edges != b.num_edges:
        return None
    keys_a = [_neighbor_degree_key(a, v) for v in range(n)]
    keys_b = [_neighbor_degree_key(b, v) for v in range(n)]
    if Counter(keys_a) != Counter(keys_b):
        return None

    adj_a = [set(nb) for nb in a.adjacency]
    adj_b = [set(nb) for nb in b.adjacency]
    # Assign high-degree vertices first; they constrain the search the most.
    order = sorted(range(n), key=lambda v: -a.degree(v))
    mapping: list[int] = [-1] * n
    used = [False] * n

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        u = order[pos]
        for v in range(n):
            if used[v] or keys_a[u] != keys_b[v]:
                continue
            ok = True
            for w in adj_a[u]:
                fw = mapping[w]
                if fw >= 0 and fw not in adj_b[v]:
                    ok = False
                    break
            if ok:
                for w in range(n):
                    fw = mapping[w]
                    if fw >= 0 and w not in adj_a[u] and fw in adj_b[v]:
                        ok = False
                        break
            if not ok:
                continue
            mapping[u] = v
            used[v] = True
            if extend(pos + 1):
                return True
            mapping[u] = -1
            used[v] = False
        return False

    if extend(0):
        return tuple(mapping)
    return None
