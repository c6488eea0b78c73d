"""The zero forcing process: closure computation and force records.

Colour change rule: a blue vertex with exactly one white neighbour turns that
neighbour blue. The closure iterates the rule to its fixed point; the derived
set does not depend on the order in which forces are performed, but the
recorded trace does, so the engine schedules deterministically (smallest
forcer id first).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable

from .arcsets import ArcSet
from .graphs import Graph


@dataclass(frozen=True)
class ForcingTrace:
    """Chronological record of a closure run.

    ``initial`` is the starting blue set sorted by vertex id; ``forces`` are
    (forcer, forced) pairs in execution order. At the moment of each force,
    the forcer is blue with exactly one white neighbour, the target; a vertex
    is forced at most once.
    """

    graph: Graph
    initial: tuple
    forces: tuple

    @property
    def derived(self) -> frozenset:
        return frozenset(self.initial).union(v for _, v in self.forces)

    def as_pairs(self) -> list[list]:
        """Forces as a plain list of pairs, ready for JSON."""
        return [[u, v] for u, v in self.forces]


def closure(graph: Graph, initial: Iterable) -> ForcingTrace:
    """Run the colour change rule to its fixed point.

    Ties between simultaneously ready forcers go to the smallest vertex id,
    making the trace reproducible. An empty initial set derives itself.
    """
    idx = graph.index
    initial_set = set(initial)
    unknown = [v for v in initial_set if v not in idx]
    if unknown:
        raise ValueError(f"initial set contains unknown vertices: {sorted(map(repr, unknown))}")
    n = len(graph)
    nbr = graph.neighbor_ids
    verts = graph.vertices
    blue = bytearray(n)
    start_ids = sorted(idx[v] for v in initial_set)
    for i in start_ids:
        blue[i] = 1
    white_count = [0] * n
    for v in range(n):
        white_count[v] = sum(1 for w in nbr[v] if not blue[w])
    heap = [v for v in start_ids if white_count[v] == 1]
    heapq.heapify(heap)
    forces = []
    while heap:
        u = heapq.heappop(heap)
        if white_count[u] != 1:
            continue
        t = next(w for w in nbr[u] if not blue[w])
        blue[t] = 1
        forces.append((verts[u], verts[t]))
        for w in nbr[t]:
            white_count[w] -= 1
            if blue[w] and white_count[w] == 1:
                heapq.heappush(heap, w)
        if white_count[t] == 1:
            heapq.heappush(heap, t)
    return ForcingTrace(graph,
                        tuple(verts[i] for i in start_ids),
                        tuple(forces))


def derived_set(graph: Graph, initial: Iterable) -> frozenset:
    return closure(graph, initial).derived


def is_zero_forcing_set(graph: Graph, initial: Iterable) -> bool:
    """True iff the closure of the initial set is the whole vertex set."""
    return len(closure(graph, initial).derived) == len(graph)


def replay_trace(trace: ForcingTrace) -> frozenset:
    """Re-execute a trace step by step, checking each force is legal.

    Returns the final blue set; raises ValueError at the first step where the
    forcer is not blue or does not have the target as its only white
    neighbour.
    """
    graph = trace.graph
    blue = set(trace.initial)
    for step, (u, v) in enumerate(trace.forces):
        if u not in blue:
            raise ValueError(f"step {step}: forcer {u!r} is not blue")
        whites = [w for w in graph.adjacency[u] if w not in blue]
        if whites != [v]:
            raise ValueError(
                f"step {step}: {u!r} has white neighbours {sorted(map(repr, whites))}, "
                f"cannot force {v!r}")
        blue.add(v)
    return frozenset(blue)


def trace_to_arcset(trace: ForcingTrace) -> ArcSet:
    """The force record as an arc set: one arc per (forcer, forced) pair."""
    return ArcSet(trace.graph, trace.forces)
