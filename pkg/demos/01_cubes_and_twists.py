#!/usr/bin/env python3
"""Build hypercubes and twisted hypercubes, inspect twins and products.

A twisted hypercube doubles a smaller one: append 0 to every vertex of one
copy, 1 to every vertex of the other, then join the copies by any perfect
matching between the old labels. The identity matching gives the ordinary
hypercube; any deviation produces "twisted" edges whose endpoints differ in
more than one bit.
"""

import random

from zfcubes import (TwistSpec, build_hypercube, build_twisted,
                     cartesian_product, identity_matching,
                     transposition_matching, twin, twisted_edges)


def main():
    print("=== the ordinary cube ===")
    q3 = build_hypercube(3)
    print(f"Q_3: {q3}")
    print("edges:", ", ".join(f"{u}-{v}" for u, v in q3.edges()))
    print("twin of 010 (flip the final bit):", twin(q3, "010"))

    print("\n=== the same cube from a twist plan ===")
    plan = TwistSpec.identity(3)
    print("identity plan rebuilds Q_3 exactly:", build_twisted(plan) == q3)

    print("\n=== one transposition at the top level ===")
    twisted_plan = TwistSpec.from_level_matchings([
        identity_matching(1),
        identity_matching(2),
        transposition_matching(3, "00", "11"),
    ])
    g = build_twisted(twisted_plan)
    print(f"twisted 3-cube: {g}, still 3-regular: "
          f"{all(g.degree(v) == 3 for v in g)}")
    print("twisted edges:", twisted_edges(g))

    print("\n=== a fully random twisted hypercube ===")
    rng = random.Random(2)
    h = build_twisted(TwistSpec.random(5, rng))
    print(f"random 5-dimensional twisted hypercube: {h}")
    print(f"connected: {h.is_connected()}, twisted edges: {len(twisted_edges(h))}")
    v = h.vertices[3]
    print(f"twin of {v}: {twin(h, v)} (twins can differ in several bits)")

    print("\n=== cartesian products ===")
    q2, k2 = build_hypercube(2), build_hypercube(1)
    prod = cartesian_product(q2, k2)
    print(f"Q_2 x K_2: {prod}")
    relabelled = prod.relabel(lambda p: p[0] + p[1], dimension=3)
    print("concatenating labels recovers Q_3:", relabelled == q3)


if __name__ == "__main__":
    main()
