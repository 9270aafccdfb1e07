"""Whole-graph verification: every cross-check the library knows, one report per check.

Given a connected graph, this module recomputes its biharmonic structure along
every available route and confirms that the routes agree and that all the
proved inequalities hold. Each check yields a named CheckResult; the CLI turns
them into PASS/FAIL lines and exits nonzero if any fail.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import closed_forms, graphs, linalg, metrics

SPREAD_TOLERANCE = 1e-8
TRIANGLE_TOLERANCE = 1e-10
BOUND_SLACK = 1e-12
INDEX_MATCH = 1e-8
MONOTONICITY_MARGIN = 1e-12
MATRIX_TREE_RELATIVE = 1e-6
PINV_IDENTITY = 1e-8
CLOSED_FORM_TOLERANCE = 1e-9
MONOTONICITY_SAMPLE_CAP = 25


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _fmt(x: float) -> str:
    return f"{float(x):.12g}"


def count_spanning_trees_exhaustive(g: graphs.Graph) -> int:
    """Count spanning trees by testing every (n-1)-edge subset for connectivity."""
    if g.n == 1:
        return 1
    count = 0
    for subset in itertools.combinations(g.sorted_edges(), g.n - 1):
        if graphs.is_connected(graphs.make_graph(g.n, subset)):
            count += 1
    return count


def _check_connectivity(g: graphs.Graph, cache: metrics.SpectralCache) -> CheckResult:
    traversal = graphs.is_connected(g)
    w = cache.eig.eigenvalues
    spectral = g.n < 2 or w[1] > metrics.ZERO_EIGENVALUE_FACTOR * max(1.0, float(w[-1]))
    return CheckResult(
        name="connectivity-certificate",
        passed=traversal and spectral,
        detail=f"traversal={str(traversal).lower()} spectral={str(spectral).lower()}",
    )


def _check_methods(cache: metrics.SpectralCache) -> CheckResult:
    worst = 0.0
    for u, v in itertools.combinations(range(cache.graph.n), 2):
        report = metrics.all_methods(cache, u, v)
        worst = max(worst, report.max_relative_spread)
    return CheckResult(
        name="four-method-agreement",
        passed=worst <= SPREAD_TOLERANCE,
        detail=f"max relative spread {_fmt(worst)}",
    )


def _check_metric_axioms(cache: metrics.SpectralCache) -> CheckResult:
    dm = metrics.distance_matrix(cache)
    n = cache.graph.n
    nonnegative = bool(np.all(dm >= 0.0))
    null_diagonal = bool(np.all(np.diag(dm) == 0.0))
    positive_off = n < 2 or bool(np.min(dm[~np.eye(n, dtype=bool)]) > 0.0)
    symmetric = bool(np.array_equal(dm, dm.T))
    # worst triple defect: d(i,k) - min_j (d(i,j) + d(j,k))
    sums = dm[:, :, None] + dm[None, :, :]
    violation = float(np.max(dm - np.min(sums, axis=1)))
    triangle = violation <= TRIANGLE_TOLERANCE
    passed = nonnegative and null_diagonal and positive_off and symmetric and triangle
    return CheckResult(
        name="metric-axioms",
        passed=passed,
        detail=(
            f"nonnegative={str(nonnegative).lower()} nullity={str(null_diagonal and positive_off).lower()} "
            f"symmetric={str(symmetric).lower()} triangle defect {_fmt(violation)}"
        ),
    )


def _check_bounds(cache: metrics.SpectralCache) -> CheckResult:
    worst = 0.0
    consistent = True
    for u, v in itertools.combinations(range(cache.graph.n), 2):
        r = metrics.bounds_report(cache, u, v)
        worst = max(worst, r.lower - r.value, r.value - r.upper)
        consistent = consistent and r.consistent
    return CheckResult(
        name="spectral-bounds",
        passed=worst <= BOUND_SLACK and consistent,
        detail=f"worst bound defect {_fmt(worst)} attainment consistent {str(consistent).lower()}",
    )


def _check_index_consistency(cache: metrics.SpectralCache) -> CheckResult:
    spectral = metrics.biharmonic_index_spectral(cache)
    pairwise = metrics.biharmonic_index_pairwise(cache)
    gap = abs(spectral - pairwise)
    ok = gap <= INDEX_MATCH * max(1.0, abs(spectral))
    return CheckResult(
        name="index-consistency",
        passed=ok,
        detail=f"spectral {_fmt(spectral)} pairwise {_fmt(pairwise)}",
    )


def _check_brk(cache: metrics.SpectralCache) -> CheckResult:
    g = cache.graph
    if g.n < 2:
        return CheckResult("index-inequality", True, "single vertex, vacuous")
    try:
        r = metrics.check_brk(cache)
    except ArithmeticError as exc:
        return CheckResult("index-inequality", False, str(exc))
    flag_ok = r.equality == graphs.is_complete(g)
    return CheckResult(
        name="index-inequality",
        passed=flag_ok,
        detail=f"B {_fmt(r.b)} >= {_fmt(r.rhs)} equality={str(r.equality).lower()}",
    )


def _check_floor(cache: metrics.SpectralCache) -> CheckResult:
    g = cache.graph
    try:
        r = metrics.check_index_floor(cache)
    except ArithmeticError as exc:
        return CheckResult("index-floor", False, str(exc))
    flag_ok = g.n < 2 or r.equality == graphs.is_complete(g)
    return CheckResult(
        name="index-floor",
        passed=flag_ok,
        detail=f"B {_fmt(r.b)} >= {_fmt(r.floor)} equality={str(r.equality).lower()}",
    )


def _check_monotonicity(g: graphs.Graph) -> CheckResult:
    nonedges = g.nonedges()[:MONOTONICITY_SAMPLE_CAP]
    if not nonedges:
        return CheckResult("edge-monotonicity", True, "no nonedges to add")
    margin = np.inf
    try:
        for e in nonedges:
            before, after = metrics.check_edge_monotonicity(g, e)
            margin = min(margin, before - after)
    except ArithmeticError as exc:
        return CheckResult("edge-monotonicity", False, str(exc))
    return CheckResult(
        name="edge-monotonicity",
        passed=margin > MONOTONICITY_MARGIN,
        detail=f"{len(nonedges)} additions, min index drop {_fmt(margin)}",
    )


def _check_matrix_tree(g: graphs.Graph, cache: metrics.SpectralCache) -> CheckResult:
    tau = metrics.spanning_tree_count(g)
    expected = g.n * tau * tau
    lap2 = cache.laplacian_squared
    worst = 0.0
    for v in range(g.n):
        minor = linalg.principal_minor_det(lap2, (v,))
        worst = max(worst, abs(minor - expected) / expected)
    ok = worst <= MATRIX_TREE_RELATIVE
    detail = f"tau {_fmt(tau)} worst relative defect {_fmt(worst)}"
    if g.n <= 7:
        exhaustive = count_spanning_trees_exhaustive(g)
        ok = ok and exhaustive == tau
        detail += f" exhaustive {exhaustive}"
    return CheckResult(name="matrix-tree", passed=ok, detail=detail)


def _check_pinv_identities(cache: metrics.SpectralCache) -> CheckResult:
    lap = cache.laplacian
    p = cache.pinv
    p2 = cache.pinv2
    reproduce = float(np.max(np.abs(lap @ p @ lap - lap)))
    square = float(np.max(np.abs(p @ p - p2)))
    rows = float(max(np.max(np.abs(p.sum(axis=1))), np.max(np.abs(p2.sum(axis=1)))))
    worst = max(reproduce, square, rows)
    return CheckResult(
        name="pseudoinverse-identities",
        passed=worst <= PINV_IDENTITY,
        detail=f"LpL defect {_fmt(reproduce)} square defect {_fmt(square)} row sums {_fmt(rows)}",
    )


def _recognize_family(g: graphs.Graph):
    if g.n >= 2 and graphs.is_complete(g):
        return ("complete", g.n)
    d = g.n.bit_length() - 1
    if d >= 1 and (1 << d) == g.n and g.edges == graphs.hypercube_graph(d).edges:
        return ("hypercube", d)
    return None


def _check_closed_form(cache: metrics.SpectralCache, family) -> CheckResult:
    kind, param = family
    worst = 0.0
    for u, v in itertools.combinations(range(cache.graph.n), 2):
        spectral = metrics.biharmonic_spectral(cache, u, v)
        if kind == "complete":
            closed = closed_forms.complete_graph_distance(param)
        else:
            closed = closed_forms.hypercube_distance(param, u, v)
        worst = max(worst, abs(spectral - closed))
    return CheckResult(
        name="closed-form-vs-spectral",
        passed=worst <= CLOSED_FORM_TOLERANCE,
        detail=f"{kind} family, max deviation {_fmt(worst)}",
    )


def verify_graph(g: graphs.Graph) -> list[CheckResult]:
    """Run the full check suite; raises DisconnectedGraphError on disconnected input."""
    cache = metrics.build_cache(g)
    results = [
        _check_connectivity(g, cache),
        _check_methods(cache),
        _check_metric_axioms(cache),
        _check_bounds(cache),
        _check_index_consistency(cache),
        _check_brk(cache),
        _check_floor(cache),
        _check_monotonicity(g),
        _check_matrix_tree(g, cache),
        _check_pinv_identities(cache),
    ]
    family = _recognize_family(g)
    if family is not None:
        results.append(_check_closed_form(cache, family))
    return results


def all_passed(results) -> bool:
    return all(r.passed for r in results)
