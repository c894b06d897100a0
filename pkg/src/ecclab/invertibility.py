"""Invertibility classification of eccentricity matrices of tree products.

The eccentricity matrix of T_1 box ... box T_k is invertible exactly when
one factor is a star (P_2 and P_3 included) or P_4 and every other factor
is P_2. The classification is decided here by exact determinants, fully
independent of the closed-form block factorization, which the probe
operation measures empirically instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .eccentric import eccentricity_matrix
from .errors import SizeCapError
from .families import star
from .graphs import Graph
from .intmatrix import IntMatrix, determinant
from .products import cartesian_product
from .trees import Tree, is_p2, is_p4, is_star

MATRIX_SIDE_CAP = 4096


@dataclass(frozen=True)
class InvertibilityCheck:
    predicted: bool
    computed: bool
    agree: bool
    det: int


def predicted_invertible(factor_trees: Sequence[Tree]) -> bool:
    """True iff some factor is a star or P_4 and all the others are P_2."""
    for i, t in enumerate(factor_trees):
        if not (is_star(t) or is_p4(t)):
            continue
        if all(is_p2(other) for j, other in enumerate(factor_trees) if j != i):
            return True
    return False


def _product_graph(factor_trees: Sequence[Tree]) -> Graph:
    if len(factor_trees) == 1:
        return factor_trees[0].graph
    g, _ = cartesian_product([t.graph for t in factor_trees], size_cap=MATRIX_SIDE_CAP)
    return g


def check_invertibility_classification(
    factor_trees: Sequence[Tree], side_cap: int = MATRIX_SIDE_CAP
) -> InvertibilityCheck:
    """Compare the star/P_4 prediction with the exact determinant."""
    side = 1
    for t in factor_trees:
        side *= t.num_vertices
    if side > side_cap:
        raise SizeCapError(f"matrix side {side} exceeds the cap of {side_cap}")
    predicted = predicted_invertible(factor_trees)
    det = determinant(eccentricity_matrix(_product_graph(factor_trees)))
    computed = det != 0
    return InvertibilityCheck(
        predicted=predicted, computed=computed, agree=predicted == computed, det=det
    )


@dataclass(frozen=True)
class DeterminantProbe:
    n_leaves: int
    num_p2: int
    computed_det: int
    smallest_entry: int
    largest_entry: int
    factored_form: str
    matches: bool


def star_product_determinant_probe(n_leaves: int, num_p2: int) -> DeterminantProbe:
    """Measure the parameterization of det E(S_n box P_2^j) empirically.

    With a = smallest nonzero entry and b = largest entry of the matrix,
    the block structure predicts |det| = (n * a^2 * b^(n-1)) ^ (2^j).
    """
    from .errors import InputError

    if n_leaves < 2:
        raise InputError("probe needs a star with at least two leaves")
    if num_p2 not in (0, 1, 2, 3):
        raise InputError("num_p2 must be in 0..3")
    factors = [Tree(star(n_leaves))] + [Tree(_p2())] * num_p2
    matrix = eccentricity_matrix(_product_graph(factors))
    det = determinant(matrix)
    nonzero = [x for row in matrix.entries for x in row if x != 0]
    a = min(nonzero)
    b = max(nonzero)
    predicted_abs = (n_leaves * a * a * b ** (n_leaves - 1)) ** (2**num_p2)
    form = f"({n_leaves} * {a}^2 * {b}^{n_leaves - 1}) ^ 2^{num_p2}"
    return DeterminantProbe(
        n_leaves=n_leaves,
        num_p2=num_p2,
        computed_det=det,
        smallest_entry=a,
        largest_entry=b,
        factored_form=form,
        matches=abs(det) == predicted_abs,
    )


def _p2() -> Graph:
    from .families import path

    return path(2)


def hypercube_eccentricity_is_scaled_antidiagonal(k: int) -> bool:
    """E(P_2^k) equals k * J_{2^k} under binary vertex ordering."""
    from .families import hypercube
    from .intmatrix import antidiagonal_j

    matrix = eccentricity_matrix(hypercube(k))
    j = antidiagonal_j(2**k)
    expected = tuple(tuple(k * x for x in row) for row in j.entries)
    return matrix.entries == expected
