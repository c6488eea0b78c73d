"""Exact zero forcing number by ordered subset enumeration.

Candidate sets of each size are visited in lexicographic order over vertex
ids, so the first success is the lexicographically least witness and the run
is reproducible. The closure of a partial subset is carried down the
enumeration tree and extended one vertex at a time, which is sound because
closure is monotone and idempotent. An optional prune discards a subtree as
soon as the closure of the partial subset together with *all* still-eligible
vertices fails to fill the graph; by monotonicity no completion inside that
subtree can succeed, so pruned runs return the same answer as unpruned ones.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .errors import ResourceLimitError
from .forcing import closure
from .graphs import Graph

DEFAULT_VERTEX_LIMIT = 32


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact search.

    ``status`` is ``"exact"`` when every smaller size was exhausted and a
    witness found, ``"inconclusive"`` when a budget ran out first; ``bounds``
    always brackets the true zero forcing number.
    """

    z: Optional[int]
    witness: Optional[tuple]
    subsets_tested: int
    elapsed: float
    status: str
    bounds: tuple[int, int]


def lower_bound(graph: Graph) -> int:
    """Minimum degree: no zero forcing set is smaller (trivial bound)."""
    return graph.min_degree()


def upper_bound(graph: Graph) -> tuple[int, tuple]:
    """Half-set bound for twisted hypercubes.

    The vertices whose final bit is 0 form one of the two glued copies; each
    of them has exactly one neighbour on the other side, so the copy forces
    the rest. Returns (size, witness); the witness is verified by closure.
    """
    n = graph.dimension
    if not isinstance(n, int) or n < 1:
        raise ValueError("upper bound needs a twisted hypercube of dimension >= 1")
    if len(graph) != 1 << n or not all(isinstance(v, str) and len(v) == n
                                       for v in graph.vertices):
        raise ValueError("graph does not look like it was built from a twist plan")
    half = tuple(v for v in graph.vertices if v[-1] == "0")
    if len(closure(graph, half).derived) != len(graph):
        raise ValueError("copy-0 half does not force; not a twisted hypercube")
    return len(half), half


def _close_mask(masks, blue: int, full: int) -> int:
    # Bitmask closure: force whenever a blue vertex sees exactly one white bit.
    while True:
        previous = blue
        scan = blue
        white = full ^ blue
        while scan:
            low = scan & -scan
            scan ^= low
            wn = masks[low.bit_length() - 1] & white
            if wn and not (wn & (wn - 1)):
                blue |= wn
                white ^= wn
        if blue == previous:
            return blue


def _extend_closure(masks, blue: int, new_vertex: int, full: int) -> int:
    # Re-close after adding one vertex to an already closed blue set. Only the
    # new vertex and blue vertices adjacent to a fresh blue vertex can force,
    # so a worklist of those suffices.
    blue |= 1 << new_vertex
    stack = [new_vertex]
    affected = masks[new_vertex] & blue
    while affected:
        low = affected & -affected
        affected ^= low
        stack.append(low.bit_length() - 1)
    while stack:
        v = stack.pop()
        wn = masks[v] & ~blue & full
        if wn and not (wn & (wn - 1)):
            blue |= wn
            w = wn.bit_length() - 1
            stack.append(w)
            affected = masks[w] & blue
            while affected:
                low = affected & -affected
                affected ^= low
                stack.append(low.bit_length() - 1)
    return blue


def _search_first(masks, full: int, k: int, first: int, prune: bool,
                  deadline: Optional[float], cap: Optional[int]):
    """Enumerate k-subsets whose smallest element is ``first``.

    Returns (witness ids or None, leaves tested, aborted flag).
    """
    n = len(masks)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | (1 << i)
    tested = 0
    aborted = False
    witness: Optional[list[int]] = None
    chosen = [first]
    base = _close_mask(masks, 1 << first, full)

    def rec(start: int, derived: int, slots: int) -> bool:
        nonlocal tested, aborted, witness
        if slots == 0:
            if cap is not None and tested >= cap:
                aborted = True
                return True
            tested += 1
            if derived == full:
                witness = list(chosen)
                return True
            if deadline is not None and tested % 512 == 0 and time.time() > deadline:
                aborted = True
                return True
            return False
        if n - start < slots:
            return False
        if prune and _close_mask(masks, derived | suffix[start], full) != full:
            return False
        for x in range(start, n - slots + 1):
            chosen.append(x)
            stop = rec(x + 1, _extend_closure(masks, derived, x, full), slots - 1)
            if not stop:
                chosen.pop()
            if stop:
                return True
        return False

    rec(first + 1, base, k - 1)
    return witness, tested, aborted


def _search_first_packed(args):
    return _search_first(*args)


def solve_exact(graph: Graph, *, max_k: Optional[int] = None,
                budget_subsets: Optional[int] = None,
                budget_secs: Optional[float] = None,
                workers: int = 1, prune: bool = True) -> SolveResult:
    """Exact zero forcing number with a certifying exhaustion.

    Sizes are tried from max(1, minimum degree) upward; within a size,
    subsets are enumerated lexicographically and the first success is
    returned, so the witness is the lexicographically least one. With
    ``prune=False`` every subset of every failing size is closure-tested,
    giving a literal exhaustive certificate.

    Budgets turn the result inconclusive instead of wrong: ``bounds`` then
    reports the last fully exhausted size plus one, and the best known upper
    bound. ``budget_subsets`` forces single-process search; with multiple
    ``workers`` the subsets of each size are sharded by smallest element and
    merged deterministically.
    """
    n = len(graph)
    if n == 0:
        raise ValueError("empty graph")
    opted_in = max_k is not None or budget_subsets is not None or budget_secs is not None
    if n > DEFAULT_VERTEX_LIMIT and not opted_in:
        raise ResourceLimitError(
            f"{n} vertices exceeds the default limit {DEFAULT_VERTEX_LIMIT}; "
            "pass an explicit budget or max_k to opt in")
    if budget_subsets is not None:
        workers = 1
    masks = graph.neighbor_masks
    full = (1 << n) - 1
    try:
        upper, _ = upper_bound(graph)
    except ValueError:
        upper = n
    started = time.monotonic()
    deadline = time.time() + budget_secs if budget_secs is not None else None
    tested_total = 0
    k_start = max(1, graph.min_degree())
    k_stop = min(max_k, n) if max_k is not None else n

    def finish(z, witness_ids, status, bounds):
        witness = (tuple(graph.vertices[i] for i in witness_ids)
                   if witness_ids is not None else None)
        return SolveResult(z=z, witness=witness, subsets_tested=tested_total,
                           elapsed=time.monotonic() - started, status=status,
                           bounds=bounds)

    for k in range(k_start, k_stop + 1):
        shards = [(masks, full, k, first, prune, deadline, None)
                  for first in range(0, n - k + 1)]
        if workers <= 1 or len(shards) <= 1:
            remaining = (budget_subsets - tested_total
                         if budget_subsets is not None else None)
            outcome = _run_level_serial(shards, remaining)
        else:
            outcome = _run_level_parallel(shards, workers)
        witness_ids, level_tested, aborted = outcome
        tested_total += level_tested
        if witness_ids is not None:
            return finish(k, witness_ids, "exact", (k, k))
        if aborted:
            # this size was cut short, so only sizes below k are ruled out
            return finish(None, None, "inconclusive", (k, max(upper, k)))
        if budget_subsets is not None and tested_total >= budget_subsets:
            return finish(None, None, "inconclusive", (k + 1, max(upper, k + 1)))
    if k_stop < n:
        return finish(None, None, "inconclusive", (k_stop + 1, max(upper, k_stop + 1)))
    raise AssertionError("unreachable: the full vertex set always forces")


def _run_level_serial(shards, budget_remaining):
    tested = 0
    for args in shards:
        masks, full, k, first, prune, deadline, _ = args
        cap = None
        if budget_remaining is not None:
            cap = budget_remaining - tested
            if cap <= 0:
                return None, tested, True
        witness, shard_tested, aborted = _search_first(
            masks, full, k, first, prune, deadline, cap)
        tested += shard_tested
        if witness is not None:
            return witness, tested, False
        if aborted:
            return None, tested, True
    return None, tested, False


def _run_level_parallel(shards, workers):
    # Shards are consumed in first-element order, so the merged outcome (the
    # lexicographically least witness) does not depend on the worker count.
    tested = 0
    witness = None
    aborted = False
    with ProcessPoolExecutor(max_workers=workers) as pool:
        pending = [pool.submit(_search_first_packed, args) for args in shards]
        for i, future in enumerate(pending):
            shard_witness, shard_tested, shard_aborted = future.result()
            tested += shard_tested
            if shard_aborted:
                aborted = True
            if shard_witness is not None:
                witness = shard_witness
            if witness is not None or aborted:
                for later in pending[i + 1:]:
                    later.cancel()
                break
    return witness, tested, aborted
