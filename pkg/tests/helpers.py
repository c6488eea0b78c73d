"""Shared test oracles and random-instance generators.

The oracles here deliberately avoid the library's engine code paths: the
naive closure rescans every vertex until nothing changes, and the reference
solver enumerates subsets with itertools and the naive closure only.
"""

from __future__ import annotations

import itertools

from zfcubes import Graph


def naive_closure(graph, initial, rng=None):
    """Fixed point of the colour change rule by repeated full scans.

    When ``rng`` is given the scan order is shuffled each round, exercising
    arbitrary force schedules.
    """
    blue = set(initial)
    changed = True
    while changed:
        changed = False
        order = list(graph.vertices)
        if rng is not None:
            rng.shuffle(order)
        for u in order:
            if u not in blue:
                continue
            whites = [w for w in graph.adjacency[u] if w not in blue]
            if len(whites) == 1:
                blue.add(whites[0])
                changed = True
    return frozenset(blue)


def reference_zero_forcing_number(graph):
    """Unpruned brute force: smallest k whose lexicographically first
    forcing k-subset exists; returns (z, witness)."""
    verts = list(graph.vertices)
    for k in range(1, len(verts) + 1):
        for subset in itertools.combinations(verts, k):
            if len(naive_closure(graph, subset)) == len(verts):
                return k, subset
    raise AssertionError("unreachable: the whole vertex set forces")


def random_graph(size, rng, p=0.4):
    """Labelled graph on vertices 0..size-1 with independent edges."""
    edges = [(i, j) for i in range(size) for j in range(i + 1, size)
             if rng.random() < p]
    return Graph(range(size), edges)


def random_connected_graph(size, rng, p=0.4):
    while True:
        g = random_graph(size, rng, p)
        if g.is_connected():
            return g


def all_graphs(size):
    """Every labelled graph on vertices 0..size-1."""
    pairs = [(i, j) for i in range(size) for j in range(i + 1, size)]
    for mask in range(1 << len(pairs)):
        edges = [pairs[b] for b in range(len(pairs)) if mask >> b & 1]
        yield Graph(range(size), edges)


def all_dipath_arcsets(graph):
    """Every arc set of the host whose arcs form vertex-disjoint directed paths.

    Enumerated by assigning each edge one of {absent, forward, backward}
    subject to in/out-degree at most one and acyclicity.
    """
    edges = graph.edges()
    next_of: dict = {}
    prev_of: dict = {}
    start_of_end = {v: v for v in graph.vertices}
    end_of_start = {v: v for v in graph.vertices}
    chosen: list = []

    def attach(u, v):
        # u must be a chain end, v a chain start, and not the same chain.
        if u in next_of or v in prev_of:
            return None
        su = start_of_end[u]
        if su == v:
            return None  # would close a directed cycle
        ev = end_of_start[v]
        next_of[u] = v
        prev_of[v] = u
        del start_of_end[u]
        del end_of_start[v]
        start_of_end[ev] = su
        end_of_start[su] = ev
        return (u, v, su, ev)

    def detach(token):
        u, v, su, ev = token
        del next_of[u]
        del prev_of[v]
        start_of_end[ev] = v
        end_of_start[su] = u
        start_of_end[u] = su
        end_of_start[v] = ev

    def rec(i):
        if i == len(edges):
            yield list(chosen)
            return
        yield from rec(i + 1)
        u, v = edges[i]
        for arc in ((u, v), (v, u)):
            token = attach(*arc)
            if token is None:
                continue
            chosen.append(arc)
            yield from rec(i + 1)
            chosen.pop()
            detach(token)

    yield from rec(0)


def random_dipath_arcset(graph, rng, keep=0.5):
    """A random dipath-forest arc set, sampled edge by edge."""
    next_of: dict = {}
    prev_of: dict = {}
    start_of_end = {v: v for v in graph.vertices}
    end_of_start = {v: v for v in graph.vertices}
    arcs = []
    edges = graph.edges()
    rng.shuffle(edges)
    for u, v in edges:
        if rng.random() > keep:
            continue
        if rng.random() < 0.5:
            u, v = v, u
        if u in next_of or v in prev_of or start_of_end[u] == v:
            continue
        su = start_of_end[u]
        ev = end_of_start[v]
        next_of[u] = v
        prev_of[v] = u
        del start_of_end[u]
        del end_of_start[v]
        start_of_end[ev] = su
        end_of_start[su] = ev
        arcs.append((u, v))
    return arcs
