"""Shared oracles and random-instance generators for the test suite.

Oracles here are deliberately independent of the library code paths they
check: solvability by exhaustive enumeration, connectivity by transitive
closure, tensor contraction by full index-tuple summation.
"""

from __future__ import annotations

import itertools
import math
import random

import numpy as np

from hypersym import Hypergraph, build_hypergraph


def enumeration_solvable(entries, rhs, modulus) -> bool:
    """Decide A x = b (mod m) by trying every vector in Z_m^cols."""
    rows = len(entries)
    cols = len(entries[0])
    total = modulus**cols
    digits = (np.arange(total)[:, None] // (modulus ** np.arange(cols))) % modulus
    products = (digits @ np.array(entries, dtype=np.int64).T) % modulus
    return bool(np.any(np.all(products == np.array(rhs), axis=1)))


def enumeration_symmetric(graph: Hypergraph, ell: int) -> bool:
    """Search all colorings of a small hypergraph for an order-ell witness."""
    m = graph.uniformity
    target = (m // ell) % m
    for values in itertools.product(range(m), repeat=graph.vertex_count):
        if all(sum(values[v - 1] for v in e) % m == target for e in graph.edges):
            return True
    return False


def closure_connected(graph: Hypergraph) -> bool:
    """Connectivity by brute-force transitive closure of co-occurrence."""
    n = graph.vertex_count
    reach = [[i == j for j in range(n)] for i in range(n)]
    for edge in graph.edges:
        for u in edge:
            for v in edge:
                reach[u - 1][v - 1] = True
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                row_k = reach[k]
                row_i = reach[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return all(all(row) for row in reach)


def adjacency_bruteforce(graph: Hypergraph, x) -> np.ndarray:
    """Tensor contraction by summing over every index tuple with weight."""
    n, m = graph.vertex_count, graph.uniformity
    edge_sets = {frozenset(e) for e in graph.edges}
    weight = 1.0 / math.factorial(m - 1)
    x = np.asarray(x, dtype=float)
    out = np.zeros(n)
    for i in range(1, n + 1):
        total = 0.0
        for tup in itertools.product(range(1, n + 1), repeat=m - 1):
            members = (i,) + tup
            if len(set(members)) == m and frozenset(members) in edge_sets:
                total += weight * math.prod(x[j - 1] for j in tup)
        out[i - 1] = total
    return out


def random_hypergraph(rng: random.Random, t: int, n_max: int = 8) -> Hypergraph:
    """Uniform-at-random edge subset; may be disconnected."""
    n = rng.randint(max(t, 2), n_max)
    pool = list(itertools.combinations(range(1, n + 1), t))
    count = rng.randint(1, min(len(pool), 2 * n))
    return build_hypergraph(t, n, rng.sample(pool, count))


def random_connected_hypergraph(
    rng: random.Random, t: int, n_max: int = 8
) -> Hypergraph:
    """Connected t-uniform hypergraph: merge components, then add extras."""
    n = rng.randint(max(t, 2), n_max)
    parent = list(range(n + 1))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    edges: set[tuple[int, ...]] = set()
    roots = {find(v) for v in range(1, n + 1)}
    while len(roots) > 1:
        a, b = rng.sample(sorted(roots), 2)
        members = {a, b}
        while len(members) < t:
            members.add(rng.randint(1, n))
        edges.add(tuple(sorted(members)))
        for v in members:
            parent[find(v)] = find(a)
        roots = {find(v) for v in range(1, n + 1)}
    pool = [e for e in itertools.combinations(range(1, n + 1), t) if e not in edges]
    extras = rng.randint(0, min(len(pool), n))
    edges.update(rng.sample(pool, extras))
    return build_hypergraph(t, n, edges)


def random_connected_bipartite(rng: random.Random, n_max: int = 8) -> Hypergraph:
    """Connected bipartite 2-uniform graph with parts [1..p] and [p+1..n]."""
    n = rng.randint(2, n_max)
    p = rng.randint(1, n - 1)
    left = list(range(1, p + 1))
    right = list(range(p + 1, n + 1))
    edges = set()
    # star out of the first left vertex, then hook up remaining left vertices
    for r in right:
        edges.add((left[0], r))
    for l in left[1:]:
        edges.add((l, rng.choice(right)))
    pool = [
        (l, r) for l in left for r in right if (l, r) not in edges
    ]
    extras = rng.randint(0, min(len(pool), n))
    edges.update(rng.sample(pool, extras))
    return build_hypergraph(2, n, edges)


def is_bipartite_bfs(graph: Hypergraph) -> bool:
    """Two-color a connected 2-uniform graph by breadth-first search."""
    assert graph.uniformity == 2
    color = {1: 0}
    queue = [1]
    adj: dict[int, list[int]] = {v: [] for v in range(1, graph.vertex_count + 1)}
    for u, v in graph.edges:
        adj[u].append(v)
        adj[v].append(u)
    while queue:
        v = queue.pop()
        for u in adj[v]:
            if u not in color:
                color[u] = 1 - color[v]
                queue.append(u)
            elif color[u] == color[v]:
                return False
    return True
