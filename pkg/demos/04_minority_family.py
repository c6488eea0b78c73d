#!/usr/bin/env python3
"""The minority-cube family, dimension by dimension.

Each level doubles the previous cube, twists exactly one matching pair
(two twisted edges), and adds one bridge arc between two previously
untouched vertices. The accumulated arc set stays executable, so its
chain-initial vertices form a zero forcing set of size 2^(n-1) - 2^(n-3) + 1,
strictly below the hypercube's 2^(n-1) from dimension 4 on.
"""

from zfcubes import (build_minority_cube, closed_form_arc_pairs, closure,
                     decompose, find_chain_twist, is_forcing_arc_set)


def main():
    print("=== the n = 4 cube in full ===")
    cube = build_minority_cube(4)
    print("twisted edges:", cube.twisted_edges)
    print("bridge arc:   ", cube.bridge_arc)
    for chain in decompose(cube.arcs).chains:
        print("  chain:", " -> ".join(chain))
    print("forcing:", is_forcing_arc_set(cube.arcs),
          "| chain twist:", find_chain_twist(cube.arcs))

    print("\n=== the family at a glance ===")
    print(f"{'n':>3} {'vertices':>9} {'arcs':>6} {'2^(n-1)+2^(n-3)-1':>18} "
          f"{'blue set':>9} {'hypercube':>10} {'forces':>7}")
    for n in range(3, 13):
        cube = build_minority_cube(n)
        initials = cube.zero_forcing_set()
        derived = closure(cube.graph, initials).derived
        assert cube.arcs.arcs == closed_form_arc_pairs(n)
        print(f"{n:>3} {2 ** n:>9} {len(cube.arcs):>6} "
              f"{2 ** (n - 1) + 2 ** (n - 3) - 1:>18} {len(initials):>9} "
              f"{2 ** (n - 1):>10} {str(len(derived) == 2 ** n):>7}")
    print("\n('blue set' is the chain-initial count 2^(n-1) - 2^(n-3) + 1;")
    print(" 'hypercube' is the plain cube's zero forcing number for comparison)")


if __name__ == "__main__":
    main()
