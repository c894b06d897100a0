"""Cartesian and Kronecker graph products and their eccentric structure.

Flat vertex indices are row-major with the first factor most significant,
fixed once in ProductIndexMap; every cross-module comparison (identity-map
equalities, matrix factorizations) relies on this single convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .eccentric import eccentric_girth, eccentric_graph, eccentricity_profile, is_eccentric
from .errors import (
    InputError,
    PreconditionError,
    SizeCapError,
    UnsupportedSizeError,
)
from .graphs import Graph, _graph_unchecked, all_pairs_distances, girth, is_connected
from .trees import Tree, is_p2

DEFAULT_SIZE_CAP = 20_000


@dataclass(frozen=True)
class ProductIndexMap:
    """Bijection between coordinate tuples and flat product indices."""

    factor_sizes: tuple[int, ...]

    @property
    def size(self) -> int:
        return math.prod(self.factor_sizes)

    @property
    def strides(self) -> tuple[int, ...]:
        strides = []
        s = 1
        for n in reversed(self.factor_sizes):
            strides.append(s)
            s *= n
        return tuple(reversed(strides))

    def flatten(self, coords: Sequence[int]) -> int:
        return sum(x * s for x, s in zip(coords, self.strides))

    def unflatten(self, index: int) -> tuple[int, ...]:
        coords = []
        for n, s in zip(self.factor_sizes, self.strides):
            coords.append((index // s) % n)
        return tuple(coords)


def _check_cap(sizes: Sequence[int], size_cap: int) -> None:
    if math.prod(sizes) > size_cap:
        raise SizeCapError(
            f"product on {math.prod(sizes)} vertices exceeds the cap of {size_cap}"
        )


def cartesian_product(
    factors: Sequence[Graph], size_cap: int = DEFAULT_SIZE_CAP
) -> tuple[Graph, ProductIndexMap]:
    """Vertices are coordinate tuples; edges change exactly one coordinate
    along an edge of that factor."""
    if len(factors) < 2:
        raise InputError("need at least two factors")
    for g in factors:
        if g.num_vertices < 2:
            raise InputError("each factor needs at least two vertices")
        if not is_connected(g):
            raise InputError("each factor must be connected")
    index_map = ProductIndexMap(tuple(g.num_vertices for g in factors))
    _check_cap(index_map.factor_sizes, size_cap)
    strides = index_map.strides
    total = index_map.size
    edges = []
    for flat in range(total):
        for g, n, s in zip(factors, index_map.factor_sizes, strides):
            x = (flat // s) % n
            for w in g.adjacency[x]:
                if w > x:
                    edges.append((flat, flat + (w - x) * s))
    return _graph_unchecked(total, edges), index_map


def kronecker_product_graph(
    a: Graph, b: Graph, size_cap: int = DEFAULT_SIZE_CAP
) -> Graph:
    """Tuples adjacent iff adjacent in both coordinates; same index layout
    as the 2-factor Cartesian product."""
    if a.num_vertices < 2 or b.num_vertices < 2:
        raise InputError("each factor needs at least two vertices")
    _check_cap((a.num_vertices, b.num_vertices), size_cap)
    nb = b.num_vertices
    edges = set()
    for u1, v1 in a.edges:
        for u2, v2 in b.edges:
            edges.add((u1 * nb + u2, v1 * nb + v2))
            edges.add((u1 * nb + v2, v1 * nb + u2))
    return _graph_unchecked(a.num_vertices * nb, edges)


def check_additivity(
    factors: Sequence[Graph], size_cap: int = DEFAULT_SIZE_CAP
) -> bool:
    """Product distances and eccentricities equal the sums over factors,
    with the product side computed by direct BFS."""
    product, index_map = cartesian_product(factors, size_cap)
    dd = all_pairs_distances(product)
    factor_dd = [all_pairs_distances(g) for g in factors]
    total = index_map.size
    coords = [index_map.unflatten(i) for i in range(total)]
    for u in range(total):
        cu = coords[u]
        expected_ecc = sum(fd.ecc[x] for fd, x in zip(factor_dd, cu))
        if dd.ecc[u] != expected_ecc:
            return False
        row = dd.dist[u]
        for v in range(u + 1, total):
            cv = coords[v]
            expected = sum(fd.dist[x][y] for fd, x, y in zip(factor_dd, cu, cv))
            if row[v] != expected:
                return False
    return True


def check_componentwise_eccentric(
    factors: Sequence[Graph], size_cap: int = DEFAULT_SIZE_CAP
) -> bool:
    """v eccentric to u in the product iff v_i eccentric to u_i in every factor."""
    product, index_map = cartesian_product(factors, size_cap)
    profile = eccentricity_profile(product)
    factor_profiles = [eccentricity_profile(g) for g in factors]
    total = index_map.size
    coords = [index_map.unflatten(i) for i in range(total)]
    for u in range(total):
        cu = coords[u]
        for v in range(total):
            cv = coords[v]
            componentwise = all(
                is_eccentric(fp, y, x) for fp, x, y in zip(factor_profiles, cu, cv)
            )
            if is_eccentric(profile, v, u) != componentwise:
                return False
    return True


def four_cycle_witness(
    factors: Sequence[Graph],
    s: int,
    s_triple: tuple[int, int, int],
    t: int,
    t_triple: tuple[int, int, int],
    fillers: dict[int, tuple[int, int]],
) -> tuple[int, int, int, int]:
    """Four product vertices forming a 4-cycle in the eccentric graph.

    Factor s provides a 2-path u-v-w in its eccentric graph whose middle
    vertex has maximal eccentricity; factor t one whose middle vertex has
    minimal eccentricity; every remaining factor i contributes an eccentric
    edge (u_i, v_i) with e(u_i) >= e(v_i).
    """
    k = len(factors)
    if not (0 <= s < k and 0 <= t < k) or s == t:
        raise InputError("s and t must be distinct factor indices")
    if set(fillers) != set(range(k)) - {s, t}:
        raise InputError("fillers must cover exactly the remaining factors")
    profiles = [eccentricity_profile(g) for g in factors]

    def e_adjacent(i: int, x: int, y: int) -> bool:
        p = profiles[i]
        return x != y and (is_eccentric(p, x, y) or is_eccentric(p, y, x))

    u_s, v_s, w_s = s_triple
    ecc_s = profiles[s].distances.ecc
    if not (e_adjacent(s, u_s, v_s) and e_adjacent(s, v_s, w_s)):
        raise PreconditionError("s-triple is not a 2-path in the factor eccentric graph")
    if ecc_s[v_s] < max(ecc_s[u_s], ecc_s[w_s]):
        raise PreconditionError("s-triple middle vertex must have maximal eccentricity")
    u_t, v_t, w_t = t_triple
    ecc_t = profiles[t].distances.ecc
    if not (e_adjacent(t, u_t, v_t) and e_adjacent(t, v_t, w_t)):
        raise PreconditionError("t-triple is not a 2-path in the factor eccentric graph")
    if ecc_t[v_t] > min(ecc_t[u_t], ecc_t[w_t]):
        raise PreconditionError("t-triple middle vertex must have minimal eccentricity")
    for i, (u_i, v_i) in fillers.items():
        ecc_i = profiles[i].distances.ecc
        if not e_adjacent(i, u_i, v_i):
            raise PreconditionError(f"filler for factor {i} is not an eccentric edge")
        if ecc_i[u_i] < ecc_i[v_i]:
            raise PreconditionError(f"filler for factor {i} must satisfy e(u) >= e(v)")

    index_map = ProductIndexMap(tuple(g.num_vertices for g in factors))

    def assemble(x_s: int, x_t: int, use_filler_u: bool) -> int:
        coords = []
        for i in range(k):
            if i == s:
                coords.append(x_s)
            elif i == t:
                coords.append(x_t)
            else:
                u_i, v_i = fillers[i]
                coords.append(u_i if use_filler_u else v_i)
        return index_map.flatten(coords)

    a = assemble(u_s, v_t, use_filler_u=False)
    b = assemble(v_s, w_t, use_filler_u=True)
    c = assemble(w_s, v_t, use_filler_u=False)
    d = assemble(v_s, u_t, use_filler_u=True)
    return a, b, c, d


def check_kronecker_correspondence(
    a: Graph, b: Graph, size_cap: int = DEFAULT_SIZE_CAP
) -> bool:
    """For self-centered factors, E(a box b) equals E(a) x E(b) as labeled
    graphs under the shared index map (the isomorphism is the identity)."""
    for g in (a, b):
        dd = all_pairs_distances(g)
        if dd.diameter != dd.radius:
            raise PreconditionError("factors must be self-centered (constant eccentricity)")
    product, _ = cartesian_product([a, b], size_cap)
    lhs = eccentric_graph(product)
    rhs = kronecker_product_graph(eccentric_graph(a), eccentric_graph(b), size_cap)
    return lhs.edge_set == rhs.edge_set


def predicted_product_girth_general(factors: Sequence[Graph]) -> Optional[int]:
    """Girth of the product eccentric graph when the general theorems apply:
    3 if every factor has eccentric girth 3; 4 when at least two factors
    have nonzero eccentric girth and not all are 3; None otherwise."""
    girths = [eccentric_girth(g) for g in factors]
    if all(g == 3 for g in girths):
        return 3
    if sum(1 for g in girths if g > 2) >= 2:
        return 4
    return None


def has_four_cycle(g: Graph) -> bool:
    """True iff some vertex pair has at least two common neighbors."""
    n = g.num_vertices
    adjacency = [set(nb) for nb in g.adjacency]
    for u in range(n):
        for v in range(u + 1, n):
            if len(adjacency[u] & adjacency[v]) >= 2:
                return True
    return False


def predicted_tree_product_girth(factor_trees: Sequence[Tree]) -> int:
    """Eccentric girth of a Cartesian product of trees: 0 / 3 / 4 / 6."""
    if len(factor_trees) < 2:
        raise InputError("need at least two factors")
    girths = [eccentric_girth(t.graph) for t in factor_trees]
    if all(g == 0 for g in girths):
        return 0
    if all(g == 3 for g in girths):
        return 3
    non_p2 = [t for t in factor_trees if not is_p2(t)]
    if len(non_p2) == 1:
        head = eccentric_graph(non_p2[0].graph)
        if girth(head) == 3 and not has_four_cycle(head):
            return 6
    return 4


def grid_eccentric_closed_form(m: int, n: int) -> Graph:
    """Closed-form eccentric graph of the m x n grid: each vertex joins the
    opposite corner(s) of every quadrant containing it. Valid for m, n >= 3;
    the m=2 boundary deviates (see the product girth classification)."""
    if m < 3 or n < 3:
        raise UnsupportedSizeError("closed form requires m, n >= 3")
    corners = {
        "mn": (m - 1) * n + (n - 1),
        "11": 0,
        "m1": (m - 1) * n,
        "1n": n - 1,
    }
    edges = set()
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            flat = (i - 1) * n + (j - 1)
            targets = []
            if i <= (m + 1) // 2 and j <= (n + 1) // 2:
                targets.append(corners["mn"])
            if i > m // 2 and j > n // 2:
                targets.append(corners["11"])
            if i <= (m + 1) // 2 and j > n // 2:
                targets.append(corners["m1"])
            if i > m // 2 and j <= (n + 1) // 2:
                targets.append(corners["1n"])
            for c in targets:
                if c != flat:
                    edges.add((flat, c) if flat < c else (c, flat))
    return _graph_unchecked(m * n, edges)


@dataclass(frozen=True)
class CycleProductReport:
    """Predicted structure of the eccentric graph of C_n box C_m."""

    n: int
    m: int
    component_type: str  # "matching" | "disjoint-cycles" | "connected-form"
    predicted_girth: int
    num_components: Optional[int] = None
    component_length: Optional[int] = None


def cycle_product_structure(n: int, m: int) -> CycleProductReport:
    """Classification of E(C_n box C_m): a perfect matching when both are
    even, n/2 cycles of length 2m when exactly one is even, girth 3 only
    for two triangles, girth 4 for the remaining odd-odd cases."""
    if n < 3 or m < 3:
        raise InputError("cycles need at least three vertices")
    if n % 2 == 0 and m % 2 == 0:
        return CycleProductReport(
            n, m, "matching", 0, num_components=n * m // 2, component_length=2
        )
    if n % 2 == 0 or m % 2 == 0:
        even, odd = (n, m) if n % 2 == 0 else (m, n)
        return CycleProductReport(
            n,
            m,
            "disjoint-cycles",
            2 * odd,
            num_components=even // 2,
            component_length=2 * odd,
        )
    if n == 3 and m == 3:
        return CycleProductReport(n, m, "connected-form", 3)
    return CycleProductReport(n, m, "connected-form", 4)


def cn_cn_isomorphism(n: int) -> tuple[int, ...]:
    """Flat-index bijection mapping C_n box C_n onto C_n x C_n for odd n.

    Computed 1-based with "0 written as n", then shifted to 0-based:
    f(1,1)=(1,1), f(i,1)=(n+2-i, n+2-i), f(i,j)=f(i,1)+(j-1, 1-j) mod n.
    """
    if n < 3 or n % 2 == 0:
        raise PreconditionError("defined for odd n >= 3 only")

    def wrap(x: int) -> int:
        r = x % n
        return n if r == 0 else r

    perm = [0] * (n * n)
    for i in range(1, n + 1):
        s = t = 1 if i == 1 else n + 2 - i
        for j in range(1, n + 1):
            a = wrap(s + j - 1)
            b = wrap(t + 1 - j)
            perm[(i - 1) * n + (j - 1)] = (a - 1) * n + (b - 1)
    return tuple(perm)
