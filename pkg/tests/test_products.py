import pytest

from ecclab.eccentric import eccentric_girth, eccentric_graph
from ecclab.errors import InputError, PreconditionError, SizeCapError, UnsupportedSizeError
from ecclab.families import complete, cycle, path, star
from ecclab.graphs import build_graph, connected_components, find_isomorphism, girth
from ecclab.products import (
    ProductIndexMap,
    cartesian_product,
    check_additivity,
    check_componentwise_eccentric,
    check_kronecker_correspondence,
    cn_cn_isomorphism,
    cycle_product_structure,
    four_cycle_witness,
    grid_eccentric_closed_form,
    has_four_cycle,
    kronecker_product_graph,
    predicted_product_girth_general,
    predicted_tree_product_girth,
)
from ecclab.trees import Tree


def test_index_map_roundtrip():
    im = ProductIndexMap((3, 4, 5))
    assert im.size == 60
    assert im.strides == (20, 5, 1)
    for i in range(im.size):
        assert im.flatten(im.unflatten(i)) == i
    assert im.flatten((1, 2, 3)) == 33


def test_cartesian_p2_p2_is_c4():
    g, _ = cartesian_product([path(2), path(2)])
    assert g.num_vertices == 4 and girth(g) == 4


def test_cartesian_grid_shape():
    g, im = cartesian_product([path(3), path(5)])
    assert g.num_vertices == 15
    assert g.num_edges == 22  # 2mn - m - n
    # (i,j) ~ (i,j+1) and (i,j) ~ (i+1,j) only
    assert g.has_edge(im.flatten((1, 2)), im.flatten((1, 3)))
    assert g.has_edge(im.flatten((1, 2)), im.flatten((2, 2)))
    assert not g.has_edge(im.flatten((1, 2)), im.flatten((2, 3)))


def test_cartesian_validation():
    with pytest.raises(InputError):
        cartesian_product([path(3)])
    with pytest.raises(InputError):
        cartesian_product([path(3), path(1)])
    with pytest.raises(SizeCapError):
        cartesian_product([path(200), path(200)])


def test_kronecker_graph_examples():
    k2k2 = kronecker_product_graph(complete(2), complete(2))
    assert set(k2k2.edges) == {(0, 3), (1, 2)}
    k3k2 = kronecker_product_graph(complete(3), complete(2))
    assert find_isomorphism(k3k2, cycle(6)) is not None
    edgeless = kronecker_product_graph(path(2), build_graph(2, []))
    assert edgeless.num_edges == 0


def test_additivity_instances():
    assert check_additivity([path(3), path(4)])
    assert check_additivity([cycle(5), path(2)])


def test_componentwise_instances():
    assert check_componentwise_eccentric([path(4), path(4)])
    assert check_componentwise_eccentric([cycle(6), cycle(6)])


def test_componentwise_adjacency_is_not_product_adjacency():
    # In P_4 box P_4, (0,1) and (2,3) are eccentric-adjacent coordinatewise
    # but not adjacent in the eccentric graph of the product.
    ep4 = eccentric_graph(path(4))
    assert ep4.has_edge(0, 2) and ep4.has_edge(1, 3)
    product, im = cartesian_product([path(4), path(4)])
    assert not eccentric_graph(product).has_edge(im.flatten((0, 1)), im.flatten((2, 3)))


def test_four_cycle_witness_valid():
    # P_5: 2-path 2-0-3 in E(P_5), middle eccentricity 4 is maximal.
    # C_5: any 2-path works, eccentricities are constant.
    factors = [path(5), cycle(5)]
    quad = four_cycle_witness(factors, 0, (2, 0, 3), 1, (2, 0, 3), {})
    product, _ = cartesian_product(factors)
    eg = eccentric_graph(product)
    a, b, c, d = quad
    assert len({a, b, c, d}) == 4
    for x, y in ((a, b), (b, c), (c, d), (d, a)):
        assert eg.has_edge(x, y)


def test_four_cycle_witness_with_filler():
    factors = [path(5), cycle(5), path(2)]
    quad = four_cycle_witness(factors, 0, (2, 0, 3), 1, (2, 0, 3), {2: (0, 1)})
    product, _ = cartesian_product(factors)
    eg = eccentric_graph(product)
    a, b, c, d = quad
    for x, y in ((a, b), (b, c), (c, d), (d, a)):
        assert eg.has_edge(x, y)


def test_four_cycle_witness_rejects_swapped_roles():
    # With the roles swapped the P_5 triple lands in the minimal-middle slot,
    # but e(0) = 4 exceeds both neighbors' eccentricities.
    with pytest.raises(PreconditionError):
        four_cycle_witness([cycle(5), path(5)], 0, (2, 0, 3), 1, (2, 0, 3), {})


def test_four_cycle_witness_filler_coverage():
    with pytest.raises(InputError):
        four_cycle_witness([path(5), cycle(5), path(2)], 0, (2, 0, 3), 1, (2, 0, 3), {})


def test_kronecker_correspondence():
    assert check_kronecker_correspondence(cycle(5), cycle(5))
    assert check_kronecker_correspondence(complete(3), complete(4))
    with pytest.raises(PreconditionError):
        check_kronecker_correspondence(path(4), cycle(4))


def test_predicted_product_girth_general():
    assert predicted_product_girth_general([cycle(3), cycle(3)]) == 3
    assert predicted_product_girth_general([cycle(5), cycle(7)]) == 4
    assert predicted_product_girth_general([cycle(4), cycle(4)]) is None


@pytest.mark.parametrize(
    "factors,expected",
    [
        ([Tree(path(8)), Tree(path(6))], 0),
        ([Tree(path(3)), Tree(path(2))], 6),
        ([Tree(star(3)), Tree(path(2))], 4),
        ([Tree(path(3)), Tree(path(5))], 3),
    ],
)
def test_predicted_tree_product_girth(factors, expected):
    assert predicted_tree_product_girth(factors) == expected
    product, _ = cartesian_product([t.graph for t in factors])
    assert eccentric_girth(product) == expected


def test_p8_p6_product_has_two_acyclic_components():
    product, _ = cartesian_product([path(8), path(6)])
    eg = eccentric_graph(product)
    comps = connected_components(eg)
    nontrivial = [c for c in comps if len(c) > 1]
    assert len(nontrivial) == 2
    assert girth(eg) == 0


def test_has_four_cycle():
    assert has_four_cycle(complete(4))
    assert not has_four_cycle(complete(3))
    from ecclab.families import h_graph

    assert not has_four_cycle(h_graph(3))


def test_grid_closed_form():
    product, _ = cartesian_product([path(3), path(5)])
    assert grid_eccentric_closed_form(3, 5) == eccentric_graph(product)
    assert girth(grid_eccentric_closed_form(4, 6)) == 0
    assert girth(grid_eccentric_closed_form(5, 7)) == 3
    with pytest.raises(UnsupportedSizeError):
        grid_eccentric_closed_form(2, 5)


def test_two_row_grid_boundary_case():
    # The quadrant closed form needs m, n >= 3: the 3x2 grid's eccentric
    # graph has girth 6, not the 4 the mixed-parity rule would give.
    product, _ = cartesian_product([path(3), path(2)])
    assert eccentric_girth(product) == 6


def test_cycle_product_structure():
    r = cycle_product_structure(4, 3)
    assert (r.component_type, r.num_components, r.component_length) == ("disjoint-cycles", 2, 6)
    r = cycle_product_structure(4, 4)
    assert (r.component_type, r.predicted_girth, r.num_components) == ("matching", 0, 8)
    assert cycle_product_structure(3, 3).predicted_girth == 3
    assert cycle_product_structure(5, 7).predicted_girth == 4
    with pytest.raises(InputError):
        cycle_product_structure(2, 4)


def test_cycle_product_structure_matches_brute_force():
    for n, m in ((4, 3), (3, 4), (4, 4), (3, 3), (5, 7), (6, 5)):
        r = cycle_product_structure(n, m)
        product, _ = cartesian_product([cycle(n), cycle(m)])
        eg = eccentric_graph(product)
        assert girth(eg) == r.predicted_girth
        if r.num_components is not None:
            comps = connected_components(eg)
            assert len(comps) == r.num_components
            assert {len(c) for c in comps} == {r.component_length}


@pytest.mark.parametrize("n", [3, 5, 7])
def test_cn_cn_isomorphism(n):
    from ecclab.graphs import apply_vertex_map

    perm = cn_cn_isomorphism(n)
    assert sorted(perm) == list(range(n * n))
    box, _ = cartesian_product([cycle(n), cycle(n)])
    tensor = kronecker_product_graph(cycle(n), cycle(n))
    assert apply_vertex_map(box, perm) == tensor


def test_cn_cn_isomorphism_rejects_even():
    with pytest.raises(PreconditionError):
        cn_cn_isomorphism(4)
