import pytest

from ecclab.graphs import build_graph
from ecclab.trees import Tree

# 12-vertex reference tree: a 0-6 spine with a branch 7-{8,11} hanging off
# vertex 2 and a branch 9-10 hanging off vertex 3. Diameter 6, three
# diametrical paths, a known decomposition, and a known eccentric graph.
REFERENCE_TREE_EDGES = (
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6),
    (2, 7), (7, 8), (7, 11), (3, 9), (9, 10),
)

# Frozen by hand from the distance table: d(u,v) = min(e(u), e(v)).
REFERENCE_ECCENTRIC_EDGES = frozenset(
    [(0, 6), (1, 6), (2, 6), (3, 6), (6, 7), (6, 8), (6, 9), (6, 10), (6, 11)]
    + [(0, 3), (3, 8), (3, 11)]
    + [(0, 4), (4, 8), (4, 11)]
    + [(0, 5), (5, 8), (5, 11)]
    + [(0, 9), (8, 9), (9, 11)]
    + [(0, 10), (8, 10), (10, 11)]
)


@pytest.fixture
def reference_tree() -> Tree:
    return Tree(build_graph(12, REFERENCE_TREE_EDGES))
