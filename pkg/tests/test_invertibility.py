import pytest

from ecclab.errors import InputError, SizeCapError
from ecclab.families import double_star, path, star
from ecclab.invertibility import (
    check_invertibility_classification,
    hypercube_eccentricity_is_scaled_antidiagonal,
    predicted_invertible,
    star_product_determinant_probe,
)
from ecclab.trees import Tree


def trees(*graphs):
    return [Tree(g) for g in graphs]


def test_predicted_invertible():
    assert predicted_invertible(trees(star(4)))
    assert predicted_invertible(trees(path(4), path(2), path(2)))
    assert predicted_invertible(trees(path(2), path(2)))  # P_2 is itself a star
    assert not predicted_invertible(trees(path(5), path(2)))
    assert not predicted_invertible(trees(path(3), path(3)))
    assert not predicted_invertible(trees(star(3), path(3)))
    assert not predicted_invertible(trees(double_star(2, 2), path(2)))


@pytest.mark.parametrize(
    "factors",
    [
        trees(star(3)),
        trees(path(4)),
        trees(path(4), path(2), path(2)),
        trees(star(2), path(2)),
        trees(path(5), path(2)),
        trees(path(3), path(3)),
        trees(star(3), path(3)),
        trees(double_star(3, 3), path(2)),
    ],
)
def test_classification_agrees_with_determinant(factors):
    result = check_invertibility_classification(factors)
    assert result.agree
    assert result.computed == (result.det != 0)


def test_classification_specific_determinants():
    assert check_invertibility_classification(trees(star(3))).det == -12
    assert check_invertibility_classification(trees(path(2))).det == -1
    assert check_invertibility_classification(trees(path(5), path(2))).det == 0


def test_classification_side_cap():
    with pytest.raises(SizeCapError):
        check_invertibility_classification(trees(path(100), path(100)))


def test_star_probe_matches_block_form():
    for n_leaves, num_p2 in ((2, 0), (3, 0), (3, 1), (4, 1), (3, 2), (2, 3)):
        probe = star_product_determinant_probe(n_leaves, num_p2)
        assert probe.matches, probe.factored_form
        assert probe.computed_det != 0
    # S_3 box P_2: entries 2 (center-leaf) and 3 (leaf-leaf), |det| = (3*4*3^2)^2.
    probe = star_product_determinant_probe(3, 1)
    assert (probe.smallest_entry, probe.largest_entry) == (2, 3)
    assert abs(probe.computed_det) == 11664


def test_star_probe_validation():
    with pytest.raises(InputError):
        star_product_determinant_probe(1, 0)
    with pytest.raises(InputError):
        star_product_determinant_probe(3, 4)


@pytest.mark.parametrize("k", range(1, 6))
def test_hypercube_matrix_is_k_times_antidiagonal(k):
    assert hypercube_eccentricity_is_scaled_antidiagonal(k)
