"""Closed-form constructors for named graph families.

Every family has a deterministic, documented labeling so that known
eccentric graphs can be asserted as labeled edge-set equalities rather than
up-to-isomorphism claims. The star/path closed forms below include two
facts that follow from the definitions and are confirmed by the brute-force
oracle: E(S_n) = K_{n+1}, and the exact labelings of the double-star and
pendant-triangle forms of E(P_n).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graphs import Graph, _graph_unchecked
from .products import cartesian_product

FAMILIES = (
    "path",
    "cycle",
    "star",
    "double_star",
    "complete",
    "complete_bipartite",
    "h_graph",
    "grid",
    "hypercube",
)

ECCENTRIC_FAMILIES = ("path", "cycle", "star", "complete", "complete_bipartite")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]


def path(n: int) -> Graph:
    """P_n with the natural labeling 0-1-...-(n-1)."""
    if n < 1:
        raise InputError("path needs at least one vertex")
    return _graph_unchecked(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least three vertices")
    return _graph_unchecked(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """S_n on n+1 vertices: center 0 joined to leaves 1..n."""
    if n < 1:
        raise InputError("star needs at least one leaf")
    return _graph_unchecked(n + 1, [(0, i) for i in range(1, n + 1)])


def double_star(s: int, t: int) -> Graph:
    """S_{s,t}: adjacent centers 0 and 1 with s and t leaves respectively."""
    if s < 1 or t < 1:
        raise InputError("double star needs at least one leaf per center")
    edges = [(0, 1)]
    edges += [(0, i) for i in range(2, s + 2)]
    edges += [(1, i) for i in range(s + 2, s + t + 2)]
    return _graph_unchecked(s + t + 2, edges)


def complete(n: int) -> Graph:
    if n < 1:
        raise InputError("complete graph needs at least one vertex")
    return _graph_unchecked(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t} with parts 0..s-1 and s..s+t-1."""
    if s < 1 or t < 1:
        raise InputError("both parts need at least one vertex")
    return _graph_unchecked(s + t, ((u, s + v) for u in range(s) for v in range(t)))


def h_graph(t: int) -> Graph:
    """Triangle 0-1-2 with t pendants on 0 (labels 3..t+2) and t on 1."""
    if t < 0:
        raise InputError("pendant count must be nonnegative")
    edges = [(0, 1), (1, 2), (0, 2)]
    edges += [(0, i) for i in range(3, t + 3)]
    edges += [(1, i) for i in range(t + 3, 2 * t + 3)]
    return _graph_unchecked(2 * t + 3, edges)


def grid(m: int, n: int) -> Graph:
    """P_m box P_n with flat index i*n + j."""
    g, _ = cartesian_product([path(m), path(n)])
    return g


def hypercube(k: int) -> Graph:
    """P_2 box ... box P_2 in binary vertex order."""
    if k < 1:
        raise InputError("hypercube needs dimension at least 1")
    if k == 1:
        return path(2)
    g, _ = cartesian_product([path(2)] * k)
    return g


def build_family(spec: FamilySpec) -> Graph:
    constructors = {
        "path": path,
        "cycle": cycle,
        "star": star,
        "double_star": double_star,
        "complete": complete,
        "complete_bipartite": complete_bipartite,
        "h_graph": h_graph,
        "grid": grid,
        "hypercube": hypercube,
    }
    if spec.family not in constructors:
        raise InputError(f"unknown family {spec.family!r}")
    try:
        return constructors[spec.family](*spec.params)
    except TypeError as exc:
        raise InputError(f"bad parameters for {spec.family}: {spec.params}") from exc


def expected_eccentric(spec: FamilySpec) -> Graph:
    """Known eccentric graph of a family, with the family's own labeling."""
    if spec.family == "path":
        return _expected_path_eccentric(*spec.params)
    if spec.family == "cycle":
        return _expected_cycle_eccentric(*spec.params)
    if spec.family == "complete":
        return complete(*spec.params)
    if spec.family == "complete_bipartite":
        return _expected_bipartite_eccentric(*spec.params)
    if spec.family == "star":
        (n,) = spec.params
        return complete(n + 1)
    raise InputError(f"no closed-form eccentric graph for family {spec.family!r}")


def _expected_path_eccentric(n: int) -> Graph:
    if n < 2:
        raise InputError("eccentric graph needs at least two vertices")
    if n <= 3:
        return complete(n)
    if n % 2 == 0:
        # Double star: centers 0 and n-1 (the path endpoints), each adjacent
        # to the far half of the interior.
        edges = [(0, n - 1)]
        edges += [(0, v) for v in range(n // 2, n - 1)]
        edges += [(v, n - 1) for v in range(1, n // 2)]
        return _graph_unchecked(n, edges)
    mid = (n - 1) // 2
    edges = [(0, mid), (mid, n - 1), (0, n - 1)]
    edges += [(0, v) for v in range((n + 1) // 2, n - 1)]
    edges += [(v, n - 1) for v in range(1, (n - 1) // 2)]
    return _graph_unchecked(n, edges)


def _expected_cycle_eccentric(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least three vertices")
    if n % 2 == 0:
        return _graph_unchecked(n, [(i, i + n // 2) for i in range(n // 2)])
    half = (n - 1) // 2
    return _graph_unchecked(n, [(i, (i + half) % n) for i in range(n)])


def _expected_bipartite_eccentric(s: int, t: int) -> Graph:
    if s < 2 or t < 2:
        raise InputError("closed form requires both parts of size at least 2")
    edges = [(u, v) for u in range(s) for v in range(u + 1, s)]
    edges += [(s + u, s + v) for u in range(t) for v in range(u + 1, t)]
    return _graph_unchecked(s + t, edges)
