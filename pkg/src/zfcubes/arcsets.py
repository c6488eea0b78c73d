"""Arc sets over undirected graphs: chains, chain twists, and forcing checks.

An arc set orients a subset of the host's edges, at most one direction per
edge. When every vertex has in-degree and out-degree at most one and there is
no directed cycle, the arcs split the vertex set into *chains*: maximal
directed paths, with untouched vertices counting as single-vertex chains.

A *chain twist* is a cycle, traversed in a fixed direction, in which no two
consecutive steps are both non-arcs; a step against an arc's direction counts
as a non-arc. An arc set can be realised as the complete force record of a
successful zero forcing run exactly when it contains no chain twist, which is
what :func:`is_forcing_arc_set` checks by greedy execution and
:func:`find_chain_twist` checks by cycle search.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import ArcStructureError, ResourceLimitError
from .graphs import Graph, cartesian_product

Arc = tuple

# Exhaustive cycle enumeration is exponential; 16 vertices is the point past
# which callers must opt into the walk-based detector.
EXHAUSTIVE_VERTEX_LIMIT = 16


class ArcSet:
    """A set of directed edges over a host graph."""

    __slots__ = ("host", "arcs")

    def __init__(self, host: Graph, arcs: Iterable[Arc]):
        self.host = host
        self.arcs = frozenset((u, v) for u, v in arcs)

    def __len__(self) -> int:
        return len(self.arcs)

    def __contains__(self, arc) -> bool:
        return arc in self.arcs

    def __iter__(self):
        return iter(self.sorted_arcs())

    def __eq__(self, other):
        if not isinstance(other, ArcSet):
            return NotImplemented
        return self.host == other.host and self.arcs == other.arcs

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"ArcSet({len(self.arcs)} arcs on {self.host!r})"

    def sorted_arcs(self) -> list[Arc]:
        idx = self.host.index
        key = lambda arc: (idx.get(arc[0], len(idx)), idx.get(arc[1], len(idx)), repr(arc))
        return sorted(self.arcs, key=key)


@dataclass(frozen=True)
class ChainDecomposition:
    """Partition of the host's vertices into maximal directed paths."""

    chains: tuple

    @property
    def chain_count(self) -> int:
        return len(self.chains)

    @property
    def initials(self) -> tuple:
        """First vertex of each chain; the corresponding initial blue set."""
        return tuple(chain[0] for chain in self.chains)

    @property
    def isolated(self) -> tuple:
        """Vertices untouched by any arc (chains with zero arcs)."""
        return tuple(chain[0] for chain in self.chains if len(chain) == 1)

    def arc_length_census(self) -> dict[int, int]:
        """How many chains contain 0, 1, 2, ... arcs."""
        census: dict[int, int] = {}
        for chain in self.chains:
            census[len(chain) - 1] = census.get(len(chain) - 1, 0) + 1
        return census


def validate_arcset(arcset: ArcSet) -> list[str]:
    """Report every pair violating edge-membership or one-direction-per-edge.

    An empty list means the arc set is well formed.
    """
    host = arcset.host
    problems = []
    reported_reverse = set()
    for u, v in arcset.sorted_arcs():
        if u not in host or v not in host:
            problems.append(f"arc {u!r}->{v!r}: endpoint is not a vertex of the host")
            continue
        if v not in host.adjacency[u]:
            problems.append(f"arc {u!r}->{v!r}: {u!r}-{v!r} is not an edge of the host")
        if (v, u) in arcset.arcs and (v, u) not in reported_reverse:
            problems.append(f"arc {u!r}->{v!r}: the reverse arc is also present")
            reported_reverse.add((u, v))
    return problems


def decompose(arcset: ArcSet) -> ChainDecomposition:
    """Split the host's vertices into the maximal directed paths of the arc set.

    Requires in-degree and out-degree at most one at every vertex and no
    directed cycle; the number of chains always equals |V| - |arcs|.
    """
    problems = validate_arcset(arcset)
    if problems:
        raise ValueError(problems[0])
    host = arcset.host
    out_arc: dict = {}
    in_arc: dict = {}
    for u, v in arcset.sorted_arcs():
        if u in out_arc:
            raise ArcStructureError(f"vertex {u!r} has two outgoing arcs", vertex=u)
        if v in in_arc:
            raise ArcStructureError(f"vertex {v!r} has two incoming arcs", vertex=v)
        out_arc[u] = v
        in_arc[v] = u
    chains = []
    covered = set()
    for start in host.vertices:
        if start in in_arc:
            continue
        chain = [start]
        while chain[-1] in out_arc:
            chain.append(out_arc[chain[-1]])
        chains.append(tuple(chain))
        covered.update(chain)
    if len(covered) != len(host):
        leftover = min((v for v in host.vertices if v not in covered),
                       key=host.index.__getitem__)
        raise ArcStructureError(
            f"arcs through vertex {leftover!r} form a directed cycle", vertex=leftover)
    return ChainDecomposition(tuple(chains))


def _twisted_sequence(arcs: frozenset, seq: Sequence, cyclic: bool) -> bool:
    # No two consecutive non-arc steps; traversal against an arc is a non-arc.
    steps = [(seq[i], seq[i + 1]) in arcs for i in range(len(seq) - 1)]
    if cyclic:
        steps.append((seq[-1], seq[0]) in arcs)
        k = len(steps)
        return all(steps[i] or steps[(i + 1) % k] for i in range(k))
    return all(steps[i] or steps[i + 1] for i in range(len(steps) - 1))


def is_chain_twist(arcset: ArcSet, cycle: Sequence) -> bool:
    """Does this cycle, traversed as given, have no two consecutive non-arcs?"""
    cyc = list(cycle)
    if len(cyc) < 3:
        raise ValueError("a chain twist needs at least three vertices")
    if len(set(cyc)) != len(cyc):
        raise ValueError("cycle vertices must be distinct")
    host = arcset.host
    for i, v in enumerate(cyc):
        if v not in host:
            raise ValueError(f"{v!r} is not a vertex of the host")
        nxt = cyc[(i + 1) % len(cyc)]
        if nxt not in host.adjacency[v]:
            raise ValueError(f"{v!r}-{nxt!r} is not an edge of the host; not a cycle")
    return _twisted_sequence(arcset.arcs, cyc, cyclic=True)


def is_chain_twist_path(arcset: ArcSet, path: Sequence) -> bool:
    """Does this path have no two consecutive non-arc steps?

    Single vertices and single edges are trivially chain twist paths: the
    condition only constrains consecutive step pairs.
    """
    seq = list(path)
    if not seq:
        raise ValueError("empty path")
    if len(set(seq)) != len(seq):
        raise ValueError("path vertices must be distinct")
    host = arcset.host
    for v in seq:
        if v not in host:
            raise ValueError(f"{v!r} is not a vertex of the host")
    for a, b in zip(seq, seq[1:]):
        if b not in host.adjacency[a]:
            raise ValueError(f"{a!r}-{b!r} is not an edge of the host; not a path")
    if len(seq) <= 2:
        return True
    return _twisted_sequence(arcset.arcs, seq, cyclic=False)


def _simple_cycles(graph: Graph):
    """Yield every simple cycle of the graph exactly once, as vertex id lists.

    Each cycle is rooted at its smallest id and oriented so that the second
    id is smaller than the last.
    """
    nbr = graph.neighbor_ids
    n = len(graph)
    on_path = [False] * n
    for root in range(n):
        path = [root]
        on_path[root] = True
        iters = [iter(nbr[root])]
        while iters:
            found = None
            for w in iters[-1]:
                if w == root and len(path) >= 3 and path[1] < path[-1]:
                    yield list(path)
                elif w > root and not on_path[w]:
                    found = w
                    break
            if found is None:
                iters.pop()
                on_path[path.pop()] = False
            else:
                path.append(found)
                on_path[found] = True
                iters.append(iter(nbr[found]))


def _walk_cycle_exists(arcset: ArcSet) -> bool:
    """Is there a closed walk, without immediate edge reversal, in which every
    non-arc step is preceded by a forward arc step?

    States are directed traversals (u, v) of host edges. A step onward from v
    to w != u is allowed along a forward arc always, and along anything else
    only when (u, v) was a forward arc. Any directed cycle among these states
    is such a closed walk, and its existence is equivalent to the existence
    of a chain twist.
    """
    g = arcset.host
    nbr = g.neighbor_ids
    idx = g.index
    arc_ids = {(idx[u], idx[v]) for u, v in arcset.arcs
               if u in idx and v in idx}

    def successors(state):
        u, v = state
        forward = (u, v) in arc_ids
        for w in nbr[v]:
            if w == u:
                continue
            if forward or (v, w) in arc_ids:
                yield (v, w)

    WHITE, GRAY, BLACK = 0, 1, 2
    color: dict = {}
    for a in range(len(g)):
        for b in nbr[a]:
            start = (a, b)
            if color.get(start, WHITE) != WHITE:
                continue
            stack = [(start, successors(start))]
            color[start] = GRAY
            while stack:
                state, succ = stack[-1]
                advanced = False
                for nxt in succ:
                    c = color.get(nxt, WHITE)
                    if c == GRAY:
                        return True
                    if c == WHITE:
                        color[nxt] = GRAY
                        stack.append((nxt, successors(nxt)))
                        advanced = True
                        break
                if not advanced:
                    color[state] = BLACK
                    stack.pop()
    return False


def _pruned_twist_search(arcset: ArcSet) -> Optional[list]:
    """Find a simple chain twist by path search pruned with the step condition.

    Paths are extended only while no two consecutive steps are non-arcs, in
    both traversal directions of every cycle, so any chain twist that exists
    is reached.
    """
    g = arcset.host
    nbr = g.neighbor_ids
    idx = g.index
    verts = g.vertices
    arc_ids = {(idx[u], idx[v]) for u, v in arcset.arcs}
    n = len(g)
    on_path = [False] * n
    for root in range(n):
        path = [root]
        steps: list[bool] = []
        on_path[root] = True
        iters = [iter(nbr[root])]
        while iters:
            found = None
            for w in iters[-1]:
                is_arc = (path[-1], w) in arc_ids
                if steps and not steps[-1] and not is_arc:
                    continue
                if w == root and len(path) >= 3:
                    closing = is_arc
                    if (steps[-1] or closing) and (closing or steps[0]):
                        witness = [verts[i] for i in path]
                        for i in path:
                            on_path[i] = False
                        return witness
                elif w > root and not on_path[w]:
                    found = (w, is_arc)
                    break
            if found is None:
                iters.pop()
                on_path[path.pop()] = False
                if steps:
                    steps.pop()
            else:
                w, is_arc = found
                path.append(w)
                steps.append(is_arc)
                on_path[w] = True
                iters.append(iter(nbr[w]))
    return None


def find_chain_twist(arcset: ArcSet, method: str = "exhaustive") -> Optional[list]:
    """Search for a chain twist; return a witness cycle or None.

    ``method="exhaustive"`` enumerates every simple cycle of the host and
    tests both traversal directions; it refuses hosts with more than
    ``EXHAUSTIVE_VERTEX_LIMIT`` vertices. ``method="walk"`` first decides
    existence through the closed-walk state search (near-linear) and only
    then extracts a witness, so it scales to large hosts.
    """
    problems = validate_arcset(arcset)
    if problems:
        raise ValueError(problems[0])
    host = arcset.host
    if method == "exhaustive":
        if len(host) > EXHAUSTIVE_VERTEX_LIMIT:
            raise ResourceLimitError(
                f"host has {len(host)} vertices; exhaustive search is limited to "
                f"{EXHAUSTIVE_VERTEX_LIMIT}, pass method='walk' instead")
        verts = host.vertices
        arcs = arcset.arcs
        for ids in _simple_cycles(host):
            cyc = [verts[i] for i in ids]
            if _twisted_sequence(arcs, cyc, cyclic=True):
                return cyc
            rev = [cyc[0]] + cyc[:0:-1]
            if _twisted_sequence(arcs, rev, cyclic=True):
                return rev
        return None
    if method == "walk":
        if not _walk_cycle_exists(arcset):
            return None
        witness = _pruned_twist_search(arcset)
        if witness is None:
            raise RuntimeError("walk detector found a twist but no witness was extracted")
        return witness
    raise ValueError(f"unknown method {method!r}")


def is_forcing_arc_set(arcset: ArcSet) -> bool:
    """Can the arcs be executed as a complete zero forcing run?

    Starting from the chain-initial vertices coloured blue, repeatedly
    perform any arc whose tail is blue with the head its only white
    neighbour. Because each vertex has at most one incoming arc, a
    performable arc stays performable, so greedy execution (lowest tail id
    first) is complete: it performs every arc exactly when some schedule
    does.
    """
    decomposition = decompose(arcset)
    host = arcset.host
    idx = host.index
    nbr = host.neighbor_ids
    n = len(host)
    blue = bytearray(n)
    for v in decomposition.initials:
        blue[idx[v]] = 1
    white_count = [0] * n
    for v in range(n):
        white_count[v] = sum(1 for w in nbr[v] if not blue[w])
    out_target: dict[int, int] = {idx[u]: idx[v] for u, v in arcset.arcs}
    performed = 0
    heap = [u for u in out_target if blue[u] and white_count[u] == 1]
    heapq.heapify(heap)
    while heap:
        u = heapq.heappop(heap)
        t = out_target.get(u)
        if t is None or white_count[u] != 1 or blue[t]:
            continue
        del out_target[u]
        blue[t] = 1
        performed += 1
        for w in nbr[t]:
            white_count[w] -= 1
            if blue[w] and white_count[w] == 1 and w in out_target:
                heapq.heappush(heap, w)
        if white_count[t] == 1 and t in out_target:
            heapq.heappush(heap, t)
    return performed == len(arcset.arcs)


def product_arcset(arcset: ArcSet, other: Graph) -> ArcSet:
    """Lift a forcing arc set onto the cartesian product with another graph.

    A copy of the arcs is laid into each fibre of the first factor, giving
    |arcs| * |V(other)| arcs that again form a forcing arc set.
    """
    if not is_forcing_arc_set(arcset):
        raise ValueError("arc set must be forcing to lift over a product")
    product = cartesian_product(arcset.host, other)
    arcs = [((u, x), (v, x))
            for u, v in arcset.sorted_arcs() for x in other.vertices]
    return ArcSet(product, arcs)
