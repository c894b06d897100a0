"""Named verification suites over generated corpora.

Each suite sweeps a corpus (exhaustive labeled trees, seeded random
samples, or small parameter grids) and compares a predicted closed form
against an independently computed value, reporting counts and the first
failure witness. All randomized corpora are driven by an explicit seed so
any reported failure is replayable.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .eccentric import eccentric_girth, eccentric_graph
from .errors import InputError
from .families import complete, cycle, hypercube, path, star
from .graphs import (
    Graph,
    all_pairs_distances,
    apply_vertex_map,
    connected_components,
    girth,
)
from .intmatrix import IntMatrix, determinant, determinant_oracle, kronecker_matrix
from .invertibility import check_invertibility_classification
from .products import (
    cartesian_product,
    check_additivity,
    check_componentwise_eccentric,
    check_kronecker_correspondence,
    cn_cn_isomorphism,
    cycle_product_structure,
    grid_eccentric_closed_form,
    kronecker_product_graph,
    predicted_tree_product_girth,
)
from .trees import (
    ENUMERATION_MAX_VERTICES,
    Tree,
    _tree_unchecked,
    check_monotone_exclusion,
    check_structure_theorem,
    predicted_tree_girth,
    prufer_decode,
    random_tree,
)

RANDOM_TREE_MIN = 9
RANDOM_TREE_MAX = 40


@dataclass(frozen=True)
class CheckReport:
    check_name: str
    corpus: str
    pass_count: int
    fail_count: int
    first_failure_witness: Optional[dict]
    wall_time: float
    seed: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.fail_count == 0


def _witness(input_desc, expected, actual) -> dict:
    return {"input": input_desc, "expected": expected, "actual": actual}


def _tree_desc(t: Tree) -> dict:
    return {"num_vertices": t.num_vertices, "edges": [list(e) for e in t.graph.edges]}


# ---------------------------------------------------------------------------
# Tree-corpus suites (exhaustive n <= trees_max_n plus seeded random trees).
# These are the heavy sweeps, so they are chunked for optional process
# parallelism; a chunk re-derives its trees from (n, first Prüfer symbol)
# or a contiguous sample-index range.

def _check_tree_girth(t: Tree):
    expected = predicted_tree_girth(t)
    actual = eccentric_girth(t.graph)
    if actual == expected and expected in (0, 3, 4):
        return True, None
    return False, _witness(_tree_desc(t), expected, actual)


def _check_tree_structure(t: Tree):
    ok, edge = check_structure_theorem(t)
    if ok:
        return True, None
    return False, _witness(_tree_desc(t), "union equals eccentric graph", f"edge {edge} differs")


def _check_tree_monotone(t: Tree):
    if check_monotone_exclusion(t):
        return True, None
    return False, _witness(_tree_desc(t), "no increasing 2-path", "increasing 2-path found")


_TREE_CHECKS: dict[str, Callable] = {
    "tree-girth": _check_tree_girth,
    "structure": _check_tree_structure,
    "monotone": _check_tree_monotone,
}


def _exhaustive_chunk(n: int, first: Optional[int]) -> Iterable[Tree]:
    if n <= 3 or first is None:
        tail_len = max(n - 2, 0)
        prefix: tuple[int, ...] = ()
    else:
        tail_len = n - 3
        prefix = (first,)
    for tail in itertools.product(range(n), repeat=tail_len):
        yield _tree_unchecked(n, prufer_decode(prefix + tail, n))


def _random_chunk(seed: int, start: int, count: int) -> Iterable[Tree]:
    for i in range(start, start + count):
        rng = random.Random(seed * 1_000_003 + i)
        n = rng.randint(RANDOM_TREE_MIN, RANDOM_TREE_MAX)
        yield random_tree(n, seed=rng.randrange(2**31))


def _tree_chunks(trees_max_n: int, samples: int, seed: int) -> list[tuple]:
    chunks: list[tuple] = []
    for n in range(2, trees_max_n + 1):
        if n <= 3:
            chunks.append(("exh", n, None))
        else:
            chunks.extend(("exh", n, first) for first in range(n))
    step = 100
    for start in range(0, samples, step):
        chunks.append(("rand", seed, start, min(step, samples - start)))
    return chunks


def _run_tree_chunk(args: tuple) -> tuple[int, int, Optional[dict]]:
    check_name, chunk = args
    check = _TREE_CHECKS[check_name]
    if chunk[0] == "exh":
        trees = _exhaustive_chunk(chunk[1], chunk[2])
    else:
        trees = _random_chunk(chunk[1], chunk[2], chunk[3])
    passed = failed = 0
    witness = None
    for t in trees:
        ok, w = check(t)
        if ok:
            passed += 1
        else:
            failed += 1
            if witness is None:
                witness = w
    return passed, failed, witness


def _run_tree_suite(
    check_name: str, trees_max_n: int, samples: int, seed: int, jobs: int
) -> CheckReport:
    if not 2 <= trees_max_n <= ENUMERATION_MAX_VERTICES:
        raise InputError(
            f"trees_max_n must be in 2..{ENUMERATION_MAX_VERTICES}, got {trees_max_n}"
        )
    start = time.perf_counter()
    chunks = _tree_chunks(trees_max_n, samples, seed)
    work = [(check_name, c) for c in chunks]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_tree_chunk, work))
    else:
        results = [_run_tree_chunk(w) for w in work]
    passed = sum(r[0] for r in results)
    failed = sum(r[1] for r in results)
    witness = next((r[2] for r in results if r[2] is not None), None)
    corpus = (
        f"all labeled trees with 2..{trees_max_n} vertices plus {samples} random "
        f"trees with {RANDOM_TREE_MIN}..{RANDOM_TREE_MAX} vertices (seed {seed})"
    )
    return CheckReport(
        check_name=check_name,
        corpus=corpus,
        pass_count=passed,
        fail_count=failed,
        first_failure_witness=witness,
        wall_time=time.perf_counter() - start,
        seed=seed,
    )


# ---------------------------------------------------------------------------
# Product suites.

def _random_product_factors(rng: random.Random) -> list[Graph]:
    factors = []
    for _ in range(rng.randint(2, 3)):
        kind = rng.choice(("tree", "cycle", "complete"))
        if kind == "tree":
            factors.append(random_tree(rng.randint(2, 6), seed=rng.randrange(2**31)).graph)
        elif kind == "cycle":
            factors.append(cycle(rng.randint(3, 6)))
        else:
            factors.append(complete(rng.randint(2, 6)))
    return factors


def _factors_desc(factors) -> list[dict]:
    return [
        {"num_vertices": g.num_vertices, "edges": [list(e) for e in g.edges]}
        for g in factors
    ]


def _suite_additivity(samples: int, seed: int) -> tuple[str, int, int, Optional[dict]]:
    rng = random.Random(seed)
    passed = failed = 0
    witness = None
    for _ in range(samples):
        factors = _random_product_factors(rng)
        if check_additivity(factors):
            passed += 1
        else:
            failed += 1
            if witness is None:
                witness = _witness(_factors_desc(factors), "additive distances", "mismatch")
    corpus = f"{samples} seeded products of 2..3 factors on up to 6 vertices (seed {seed})"
    return corpus, passed, failed, witness


def _suite_componentwise(samples: int, seed: int) -> tuple[str, int, int, Optional[dict]]:
    rng = random.Random(seed)
    passed = failed = 0
    witness = None
    for _ in range(samples):
        factors = _random_product_factors(rng)
        if check_componentwise_eccentric(factors):
            passed += 1
        else:
            failed += 1
            if witness is None:
                witness = _witness(
                    _factors_desc(factors), "componentwise equivalence", "mismatch"
                )
    corpus = f"{samples} seeded products of 2..3 factors on up to 6 vertices (seed {seed})"
    return corpus, passed, failed, witness


def _random_tree_tuple(rng: random.Random) -> list[Tree]:
    while True:
        k = rng.randint(2, 3)
        sizes = [rng.randint(2, 12) for _ in range(k)]
        product_size = 1
        for s in sizes:
            product_size *= s
        if product_size <= 1000:
            return [random_tree(s, seed=rng.randrange(2**31)) for s in sizes]


def _fixed_tree_product_cases() -> list[list[Tree]]:
    p = lambda n: Tree(path(n))
    even_diam = Tree(path(3))  # diameter 2
    return [
        [p(3), p(2)],
        [Tree(star(3)), p(2)],
        [p(8), p(6)],
        [even_diam, even_diam, even_diam],
    ]


def _suite_product_girth(samples: int, seed: int) -> tuple[str, int, int, Optional[dict]]:
    rng = random.Random(seed)
    passed = failed = 0
    witness = None
    cases = _fixed_tree_product_cases() + [_random_tree_tuple(rng) for _ in range(samples)]
    for factor_trees in cases:
        expected = predicted_tree_product_girth(factor_trees)
        product, _ = cartesian_product([t.graph for t in factor_trees])
        actual = eccentric_girth(product)
        if actual == expected:
            passed += 1
        else:
            failed += 1
            if witness is None:
                witness = _witness(
                    _factors_desc([t.graph for t in factor_trees]), expected, actual
                )
    corpus = (
        f"4 fixed witnesses plus {samples} seeded tree tuples, k <= 3, "
        f"product <= 1000 vertices (seed {seed})"
    )
    return corpus, passed, failed, witness


def _suite_grid() -> tuple[str, int, int, Optional[dict]]:
    passed = failed = 0
    witness = None
    for m in range(3, 9):
        for n in range(3, 9):
            product, _ = cartesian_product([path(m), path(n)])
            actual = eccentric_graph(product)
            predicted = grid_eccentric_closed_form(m, n)
            if m % 2 == 0 and n % 2 == 0:
                expected_girth = 0
            elif m % 2 == 1 and n % 2 == 1:
                expected_girth = 3
            else:
                expected_girth = 4
            ok = actual == predicted and girth(actual) == expected_girth
            if ok:
                passed += 1
            else:
                failed += 1
                if witness is None:
                    witness = _witness(
                        {"m": m, "n": n},
                        {"edges": len(predicted.edges), "girth": expected_girth},
                        {"edges": len(actual.edges), "girth": girth(actual)},
                    )
    return "grids P_m box P_n for 3 <= m, n <= 8", passed, failed, witness


def _cycle_product_matches(n: int, m: int) -> tuple[bool, dict]:
    report = cycle_product_structure(n, m)
    product, _ = cartesian_product([cycle(n), cycle(m)])
    eg = eccentric_graph(product)
    comps = connected_components(eg)
    actual = {
        "girth": girth(eg),
        "num_components": len(comps),
        "component_sizes": sorted({len(c) for c in comps}),
    }
    if report.component_type == "matching":
        ok = (
            actual["girth"] == 0
            and actual["num_components"] == report.num_components
            and actual["component_sizes"] == [2]
        )
    elif report.component_type == "disjoint-cycles":
        # Every component a single cycle: girth equals component length and
        # the edge count equals the vertex count.
        ok = (
            actual["girth"] == report.predicted_girth
            and actual["num_components"] == report.num_components
            and actual["component_sizes"] == [report.component_length]
            and len(eg.edges) == eg.num_vertices
        )
    else:
        ok = actual["girth"] == report.predicted_girth
    expected = {
        "type": report.component_type,
        "girth": report.predicted_girth,
        "num_components": report.num_components,
        "component_length": report.component_length,
    }
    return ok, _witness({"n": n, "m": m}, expected, actual)


def _suite_cycle_product() -> tuple[str, int, int, Optional[dict]]:
    passed = failed = 0
    witness = None
    for n in range(3, 11):
        for m in range(3, 11):
            ok, w = _cycle_product_matches(n, m)
            if ok:
                passed += 1
            else:
                failed += 1
                if witness is None:
                    witness = w
    return "cycle products C_n box C_m for 3 <= n, m <= 10", passed, failed, witness


def _suite_cncn_iso() -> tuple[str, int, int, Optional[dict]]:
    passed = failed = 0
    witness = None
    for n in (3, 5, 7, 9):
        perm = cn_cn_isomorphism(n)
        box, _ = cartesian_product([cycle(n), cycle(n)])
        tensor = kronecker_product_graph(cycle(n), cycle(n))
        # Labeled equality of the relabeled box product and the tensor
        # product checks edge preservation in both directions at once.
        if apply_vertex_map(box, perm) == tensor:
            passed += 1
        else:
            failed += 1
            if witness is None:
                witness = _witness({"n": n}, "isomorphic via closed-form map", "edge mismatch")
    return "C_n box C_n vs C_n x C_n for n in {3, 5, 7, 9}", passed, failed, witness


def _suite_kronecker_det(samples: int, seed: int) -> tuple[str, int, int, Optional[dict]]:
    rng = random.Random(seed)
    passed = failed = 0
    witness = None
    for _ in range(samples):
        n = rng.randint(1, 6)
        m = IntMatrix.from_rows(
            [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        )
        if determinant(m) == determinant_oracle(m):
            passed += 1
        else:
            failed += 1
            if witness is None:
                witness = _witness(
                    [list(r) for r in m.entries], determinant_oracle(m), determinant(m)
                )
    pairs = max(samples // 5, 1)
    for _ in range(pairs):
        n = rng.randint(1, 4)
        p = rng.randint(1, 4)
        a = IntMatrix.from_rows([[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)])
        b = IntMatrix.from_rows([[rng.randint(-5, 5) for _ in range(p)] for _ in range(p)])
        lhs = determinant(kronecker_matrix(a, b))
        rhs = determinant(a) ** p * determinant(b) ** n
        if lhs == rhs:
            passed += 1
        else:
            failed += 1
            if witness is None:
                witness = _witness(
                    {"a": [list(r) for r in a.entries], "b": [list(r) for r in b.entries]},
                    rhs,
                    lhs,
                )
    corpus = (
        f"{samples} random matrices up to 6x6 (Bareiss vs permutation expansion) "
        f"plus {pairs} Kronecker determinant pairs (seed {seed})"
    )
    return corpus, passed, failed, witness


def _suite_invertibility(samples: int, seed: int) -> tuple[str, int, int, Optional[dict]]:
    rng = random.Random(seed)
    passed = failed = 0
    witness = None
    cases: list[list[Tree]] = [
        [Tree(path(3)), Tree(path(3))],
        [Tree(path(5)), Tree(path(2))],
        [Tree(star(3)), Tree(path(3))],
    ]
    for _ in range(samples):
        t1 = random_tree(rng.randint(2, 7), seed=rng.randrange(2**31))
        j = rng.randint(0, 2)
        cases.append([t1] + [Tree(path(2))] * j)
    for factor_trees in cases:
        result = check_invertibility_classification(factor_trees)
        if result.agree:
            passed += 1
        else:
            failed += 1
            if witness is None:
                witness = _witness(
                    _factors_desc([t.graph for t in factor_trees]),
                    {"predicted_invertible": result.predicted},
                    {"det": result.det},
                )
    corpus = (
        f"3 fixed negative cases plus {samples} seeded tuples (T_1, P_2^j) with "
        f"2 <= n <= 7, j in 0..2 (seed {seed})"
    )
    return corpus, passed, failed, witness


def _self_centered_pairs() -> list[tuple[Graph, Graph]]:
    pool: list[Graph] = [cycle(n) for n in range(3, 9)]
    pool += [complete(n) for n in range(2, 6)]
    pool += [hypercube(k) for k in range(1, 6)]
    pairs = []
    for a, b in itertools.combinations_with_replacement(pool, 2):
        if a.num_vertices * b.num_vertices <= 64 * 64:
            pairs.append((a, b))
    return pairs


def _suite_kronecker_correspondence() -> tuple[str, int, int, Optional[dict]]:
    passed = failed = 0
    witness = None
    pairs = _self_centered_pairs()
    for a, b in pairs:
        if check_kronecker_correspondence(a, b):
            passed += 1
        else:
            failed += 1
            if witness is None:
                witness = _witness(
                    _factors_desc([a, b]), "identity-map edge equality", "mismatch"
                )
    corpus = f"{len(pairs)} self-centered pairs (cycles, complete graphs, hypercubes)"
    return corpus, passed, failed, witness


# ---------------------------------------------------------------------------

SUITE_NAMES = (
    "tree-girth",
    "structure",
    "monotone",
    "additivity",
    "componentwise",
    "product-girth",
    "grid",
    "cycle-product",
    "cncn-iso",
    "kronecker-correspondence",
    "kronecker-det",
    "invertibility",
)

_DEFAULT_SAMPLES = {
    "tree-girth": 1000,
    "structure": 1000,
    "monotone": 1000,
    "additivity": 200,
    "componentwise": 200,
    "product-girth": 300,
    "kronecker-det": 500,
    "invertibility": 500,
}


def run_suite(
    name: str,
    trees_max_n: int = ENUMERATION_MAX_VERTICES,
    samples: Optional[int] = None,
    seed: int = 0,
    jobs: int = 1,
) -> CheckReport:
    if name not in SUITE_NAMES:
        raise InputError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    if samples is None:
        samples = _DEFAULT_SAMPLES.get(name, 0)
    if name in _TREE_CHECKS:
        return _run_tree_suite(name, trees_max_n, samples, seed, jobs)
    start = time.perf_counter()
    if name == "additivity":
        corpus, passed, failed, witness = _suite_additivity(samples, seed)
    elif name == "componentwise":
        corpus, passed, failed, witness = _suite_componentwise(samples, seed)
    elif name == "product-girth":
        corpus, passed, failed, witness = _suite_product_girth(samples, seed)
    elif name == "grid":
        corpus, passed, failed, witness = _suite_grid()
    elif name == "cycle-product":
        corpus, passed, failed, witness = _suite_cycle_product()
    elif name == "cncn-iso":
        corpus, passed, failed, witness = _suite_cncn_iso()
    elif name == "kronecker-correspondence":
        corpus, passed, failed, witness = _suite_kronecker_correspondence()
    elif name == "kronecker-det":
        corpus, passed, failed, witness = _suite_kronecker_det(samples, seed)
    else:
        corpus, passed, failed, witness = _suite_invertibility(samples, seed)
    return CheckReport(
        check_name=name,
        corpus=corpus,
        pass_count=passed,
        fail_count=failed,
        first_failure_witness=witness,
        wall_time=time.perf_counter() - start,
        seed=seed,
    )


def report_to_dict(report: CheckReport) -> dict:
    return {
        "check_name": report.check_name,
        "corpus": report.corpus,
        "pass_count": report.pass_count,
        "fail_count": report.fail_count,
        "first_failure_witness": report.first_failure_witness,
        "wall_time": report.wall_time,
        "seed": report.seed,
    }
