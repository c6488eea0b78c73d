import random

import pytest

from helpers import random_dipath_arcset, random_graph
from zfcubes import (ArcSet, ArcStructureError, ResourceLimitError,
                     build_hypercube, build_minority_cube, closure,
                     complete_graph, cycle_graph, decompose, find_chain_twist,
                     is_chain_twist, is_chain_twist_path, is_forcing_arc_set,
                     is_zero_forcing_set, product_arcset, trace_to_arcset,
                     validate_arcset)

F3_ARCS = [("000", "100"), ("100", "110"), ("001", "101"), ("101", "111")]


def f3():
    return ArcSet(build_hypercube(3), F3_ARCS)


def alternating_cycle():
    return ArcSet(cycle_graph(4), [(0, 1), (2, 3)])


def test_validate_accepts_base_arcs():
    assert validate_arcset(f3()) == []


def test_validate_reports_non_edges_and_reversals():
    q3 = build_hypercube(3)
    problems = validate_arcset(ArcSet(q3, [("000", "011")]))
    assert len(problems) == 1 and "not an edge" in problems[0]
    problems = validate_arcset(ArcSet(q3, [("000", "001"), ("001", "000")]))
    assert len(problems) == 1 and "reverse" in problems[0]
    problems = validate_arcset(ArcSet(q3, [("000", "x")]))
    assert len(problems) == 1 and "not a vertex" in problems[0]


def test_decompose_base_chains():
    decomposition = decompose(f3())
    assert decomposition.chains == (("000", "100", "110"),
                                    ("001", "101", "111"),
                                    ("010",), ("011",))
    assert decomposition.initials == ("000", "001", "010", "011")
    assert decomposition.isolated == ("010", "011")


def test_decompose_empty_arcset_gives_singletons():
    decomposition = decompose(ArcSet(build_hypercube(3), []))
    assert decomposition.chain_count == 8
    assert all(len(chain) == 1 for chain in decomposition.chains)


def test_decompose_minority_four():
    cube = build_minority_cube(4)
    decomposition = decompose(cube.arcs)
    assert len(cube.arcs) == 9
    assert decomposition.chain_count == 7
    assert len(decomposition.isolated) == 2


def test_decompose_structure_errors_name_the_vertex():
    q2 = build_hypercube(2)
    with pytest.raises(ArcStructureError) as err:
        decompose(ArcSet(q2, [("00", "01"), ("00", "10")]))
    assert err.value.vertex == "00"
    square = ArcSet(q2, [("00", "01"), ("01", "11"), ("11", "10"), ("10", "00")])
    with pytest.raises(ArcStructureError) as err:
        decompose(square)
    assert err.value.vertex == "00"


def test_chain_twist_predicate_on_cycles():
    arcs = alternating_cycle()
    assert is_chain_twist(arcs, [0, 1, 2, 3])
    single = ArcSet(cycle_graph(4), [(0, 1)])
    assert not is_chain_twist(single, [0, 1, 2, 3])
    with pytest.raises(ValueError):
        is_chain_twist(arcs, [0, 1])
    with pytest.raises(ValueError):
        is_chain_twist(arcs, [0, 1, 3])  # 1-3 is not an edge


def test_chain_twist_predicate_is_direction_sensitive():
    tri = complete_graph(3)
    arcs = ArcSet(tri, [(0, 1), (1, 2)])
    assert is_chain_twist(arcs, [0, 1, 2])
    assert not is_chain_twist(arcs, [0, 2, 1])


def test_chain_twist_path_predicate():
    arcs = f3()
    assert is_chain_twist_path(arcs, ["000", "100"])      # a single arc
    assert is_chain_twist_path(arcs, ["010", "000"])      # a single non-arc edge
    # arc, non-arc, arc alternation
    assert is_chain_twist_path(arcs, ["000", "100", "101", "111"])
    # 010 is untouched by arcs, so any path through it fails
    assert not is_chain_twist_path(arcs, ["000", "010", "011"])
    with pytest.raises(ValueError):
        is_chain_twist_path(arcs, ["000", "111"])


def test_paths_through_untouched_interior_vertices_never_twist():
    rng = random.Random(99)
    for _ in range(100):
        g = random_graph(rng.randint(3, 8), rng)
        arcs = ArcSet(g, random_dipath_arcset(g, rng))
        touched = {v for arc in arcs.arcs for v in arc}
        # random walk path of length 3-5
        start = rng.choice(g.vertices)
        path = [start]
        while len(path) < 5:
            options = [w for w in g.adjacency[path[-1]] if w not in path]
            if not options:
                break
            path.append(rng.choice(options))
        if len(path) < 3:
            continue
        if is_chain_twist_path(arcs, path):
            assert all(v in touched for v in path[1:-1])


def test_find_chain_twist_examples():
    assert find_chain_twist(f3()) is None
    witness = find_chain_twist(alternating_cycle())
    assert witness == [0, 1, 2, 3]
    assert is_chain_twist(alternating_cycle(), witness)


def test_find_chain_twist_guard_and_walk_optin():
    cube = build_minority_cube(5)
    with pytest.raises(ResourceLimitError):
        find_chain_twist(cube.arcs, method="exhaustive")
    assert find_chain_twist(cube.arcs, method="walk") is None


def test_walk_witnesses_are_real_chain_twists():
    rng = random.Random(1234)
    found = 0
    for _ in range(200):
        g = random_graph(rng.randint(3, 9), rng)
        arcs = ArcSet(g, random_dipath_arcset(g, rng))
        witness = find_chain_twist(arcs, method="walk")
        if witness is not None:
            found += 1
            assert is_chain_twist(arcs, witness)
    assert found > 10  # the corpus must actually exercise the witness path


def test_walk_detector_agrees_with_exhaustive_up_to_twelve_vertices():
    rng = random.Random(77)
    for _ in range(150):
        g = random_graph(rng.randint(3, 12), rng)
        arcs = ArcSet(g, random_dipath_arcset(g, rng))
        exhaustive = find_chain_twist(arcs, method="exhaustive")
        walk = find_chain_twist(arcs, method="walk")
        assert (exhaustive is None) == (walk is None)


def test_greedy_execution_examples():
    assert is_forcing_arc_set(build_minority_cube(4).arcs)
    assert not is_forcing_arc_set(alternating_cycle())
    assert is_forcing_arc_set(ArcSet(build_hypercube(2), []))


def test_forcing_arcsets_yield_zero_forcing_sets():
    rng = random.Random(31)
    checked = 0
    for _ in range(500):
        g = random_graph(rng.randint(2, 8), rng)
        arcs = ArcSet(g, random_dipath_arcset(g, rng))
        if is_forcing_arc_set(arcs):
            checked += 1
            initials = decompose(arcs).initials
            assert is_zero_forcing_set(g, initials)
            assert len(arcs) == len(g) - len(initials)
    assert checked > 50


def test_chain_count_complements_arc_count():
    rng = random.Random(13)
    for _ in range(200):
        g = random_graph(rng.randint(1, 9), rng)
        arcs = ArcSet(g, random_dipath_arcset(g, rng))
        assert decompose(arcs).chain_count == len(g) - len(arcs)


def test_product_lift_of_base_arcs():
    k2 = build_hypercube(1)
    lifted = product_arcset(f3(), k2)
    assert len(lifted) == 8
    assert is_forcing_arc_set(lifted)
    assert len(lifted.host) == 16


def test_product_lift_over_single_vertex_copies_arcs():
    k1 = complete_graph(1)
    lifted = product_arcset(f3(), k1)
    assert {(u[0], v[0]) for u, v in lifted.arcs} == set(F3_ARCS)


def test_product_lift_requires_forcing_input():
    with pytest.raises(ValueError):
        product_arcset(alternating_cycle(), complete_graph(2))


def test_lifted_set_size_follows_arc_complement():
    q3 = build_hypercube(3)
    trace = closure(q3, ["000", "010", "001", "011"])
    arcs = trace_to_arcset(trace)
    lifted = product_arcset(arcs, build_hypercube(1))
    initials = decompose(lifted).initials
    assert len(initials) == len(lifted.host) - len(lifted)
    assert len(initials) == 4 * 2
    assert is_zero_forcing_set(lifted.host, initials)
