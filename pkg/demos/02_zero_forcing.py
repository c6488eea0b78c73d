#!/usr/bin/env python3
"""Watch the zero forcing process run.

A blue vertex with exactly one white neighbour forces it blue; the process
repeats until stuck. If everything ends up blue, the initial set is a zero
forcing set. The engine schedules deterministically (smallest forcer first)
and records every force, and the record is itself an arc set whose chains
start at the initial vertices.
"""

from zfcubes import (build_hypercube, closure, decompose, is_zero_forcing_set,
                     path_graph, trace_to_arcset)


def main():
    q3 = build_hypercube(3)

    print("=== forcing across one half of Q_3 ===")
    half = ["000", "001", "010", "011"]
    trace = closure(q3, half)
    print("initial blue:", ", ".join(trace.initial))
    for step, (u, v) in enumerate(trace.forces, start=1):
        print(f"  step {step}: {u} -> {v}")
    print("derived everything:", trace.derived == frozenset(q3.vertices))

    print("\n=== the force record as chains ===")
    arcs = trace_to_arcset(trace)
    for chain in decompose(arcs).chains:
        print("  chain:", " -> ".join(chain))
    print(f"|S| = |V| - |arcs|: {len(half)} = {len(q3)} - {len(arcs)}")

    print("\n=== a set that stalls immediately ===")
    stuck = closure(q3, ["000"])
    print("from {000}: derived", sorted(stuck.derived),
          "(three white neighbours, nothing forces)")
    print("is_zero_forcing_set:", is_zero_forcing_set(q3, ["000"]))

    print("\n=== a path forces from its endpoint ===")
    p4 = path_graph(4)
    trace = closure(p4, [0])
    print("forces:", trace.forces)


if __name__ == "__main__":
    main()
