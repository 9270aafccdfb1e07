"""Shared fixtures: the seeded random-graph suite used by the heavier tests.

Graphs are built as a uniform random labeled tree (decoded from a random
degree sequence) plus a handful of random extra edges, so every sample is
connected by construction. The suite is session-scoped because building 100
spectral caches is the single most expensive setup step.
"""

import heapq
import itertools

import numpy as np
import pytest

from biharmonic import build_cache, make_graph

SUITE_SEED = 90125
SUITE_SIZE = 100


def random_tree_edges(n, rng):
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = rng.integers(0, n, size=n - 2)
    degree = np.ones(n, dtype=int)
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, int(x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, int(x))
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def random_connected_graph(rng, n=None):
    if n is None:
        n = int(rng.integers(2, 31))
    edges = {(min(a, b), max(a, b)) for a, b in random_tree_edges(n, rng)}
    nonedges = [e for e in itertools.combinations(range(n), 2) if e not in edges]
    extra = int(rng.integers(0, n + 1))
    if nonedges and extra:
        picks = rng.choice(len(nonedges), size=min(extra, len(nonedges)), replace=False)
        for i in picks:
            edges.add(nonedges[int(i)])
    return make_graph(n, edges)


@pytest.fixture(scope="session")
def random_suite():
    rng = np.random.default_rng(SUITE_SEED)
    return [random_connected_graph(rng) for _ in range(SUITE_SIZE)]


@pytest.fixture(scope="session")
def random_suite_caches(random_suite):
    return [build_cache(g) for g in random_suite]
