from fractions import Fraction

import math

import pytest

from retraction_lab import exact, reference
from retraction_lab._seeds import pyrng
from retraction_lab.fixedgraphs import build_path, build_two_wrench
from retraction_lab.graphs import Graph
from retraction_lab.instances import Block, BlockedInstance, Coupling, ListedInstance, expand_blocked


K2 = Graph("ab", [("a", "b")])
TW = build_two_wrench()


def test_list_hom_examples():
    assert exact.count_list_hom(ListedInstance.full(K2, K2), K2) == 2
    # ordered adjacent pairs of the 2-wrench: 3 loops + 3 edges twice
    assert exact.count_list_hom(ListedInstance.full(K2, TW), TW) == 9
    single = Graph(["z"])
    assert exact.count_list_hom(ListedInstance.full(single, TW), TW) == 4


def test_retraction_examples():
    # the pinned copy of the target admits only the identity
    copy = Graph(TW.vertices, TW.non_loop_edges())
    pins = {v: frozenset((v,)) for v in TW.vertices}
    inst = ListedInstance(copy, pins, TW.vertices, retraction_mode=True)
    assert exact.count_retraction(inst, TW) == 1

    p3 = build_path(3)
    pinned = ListedInstance(p3, {"c1": frozenset(("b",))}, TW.vertices)
    assert exact.count_retraction(pinned, TW) == 16  # deg(b)^2

    with pytest.raises(ValueError):
        bad = ListedInstance(p3, {"c1": frozenset(("b", "g"))}, TW.vertices)
        exact.count_retraction(bad, TW)


def test_sur_comp_examples():
    inst = ListedInstance.full(K2, K2)
    assert exact.count_surjective(inst, K2) == 2
    assert exact.count_compaction(inst, K2) == 2
    p3 = ListedInstance.full(build_path(3), K2)
    assert exact.count_surjective(p3, K2) == 2
    assert exact.count_compaction(p3, K2) == 2
    lone = ListedInstance.full(Graph(["z"]), K2)
    assert exact.count_surjective(lone, K2) == 0
    assert exact.count_compaction(lone, K2) == 0


def test_compaction_ie_on_disconnected_target():
    # regression: the alternating sum must range over all non-loop target
    # edges; a looped extra component used to push the sum negative
    h = Graph(["x", "y", "z"], [("x", "y"), ("z", "z")])
    inst = ListedInstance.full(K2, h)
    assert exact.count_compaction(inst, h, "ie") == exact.count_compaction(inst, h) == 0
    assert exact.count_surjective(inst, h, "ie") == exact.count_surjective(inst, h) == 0


def test_decompose_examples():
    two_k2 = Graph("abcd", [("a", "b"), ("c", "d")])
    assert exact.count_list_hom(ListedInstance.full(two_k2, K2), K2) == 4
    k2_plus_loop = Graph(["x", "y", "z"], [("x", "y"), ("z", "z")])
    inst = ListedInstance.full(K2, k2_plus_loop)
    assert exact.decompose_and_count(inst, k2_plus_loop, "lhom") == 3
    empty = ListedInstance.full(Graph(), K2)
    assert exact.count_list_hom(empty, K2) == 1
    with pytest.raises(ValueError):
        exact.decompose_and_count(inst, k2_plus_loop, "sur")


def test_stirling_surjections():
    assert exact.stirling_surjections(3, 2) == 6
    assert exact.stirling_surjections(2, 3) == 0
    assert exact.stirling_surjections(4, 2) == 14
    assert exact.stirling_surjections(0, 0) == 1


def test_stirling_lemma19_window():
    for b in range(2, 11):
        a = math.ceil(2 * b * math.log(b)) + 1
        s = exact.stirling_surjections(a, b)
        assert s <= b**a
        assert Fraction(b**a) * (1 - Fraction(math.exp(-a / (2 * b)))) <= s


def test_blocked_simple_and_roundtrip():
    bi = BlockedInstance((Block("A", 5),), (), (), TW.vertices)
    assert exact.count_blocked(bi, TW) == 4**5
    assert exact.count_list_hom(expand_blocked(bi), TW) == 4**5

    # a J(e)-shaped instance: multi blocks anchored to singletons only
    blocks = (
        Block("u", 1), Block("v", 1), Block("M", 40),
    )
    couplings = (
        Coupling("u", "M", "apex"), Coupling("v", "M", "apex"), Coupling("u", "v", "cb"),
    )
    bi2 = BlockedInstance(blocks, couplings, (("u", "b"),), TW.vertices)
    # u pinned to the center, v ranges over its neighbors, M over common ones
    expected = sum(
        len(TW.neighbors("b") & TW.neighbors(v)) ** 40 for v in TW.neighbors("b")
    )
    assert exact.count_blocked(bi2, TW) == expected


def test_blocked_guard():
    blocks = (Block("A", 60), Block("B", 60))
    bi = BlockedInstance(blocks, (Coupling("A", "B", "pm"),), (), TW.vertices)
    with pytest.raises(ValueError):
        exact.count_blocked(bi, TW, guard=100)


def test_monotonicity_under_list_shrink():
    for i in range(40):
        rng = pyrng("shrink", i)
        n = rng.randint(1, 5)
        vs = [f"g{j}" for j in range(n)]
        edges = [
            (vs[a], vs[b])
            for a in range(n)
            for b in range(a + 1, n)
            if rng.random() < 0.5
        ]
        g = Graph(vs, edges)
        inst = ListedInstance.full(g, TW)
        v = rng.choice(vs)
        drop = rng.choice(sorted(inst.lists[v]))
        shrunk = ListedInstance(
            g, {v: inst.lists[v] - {drop}}, TW.vertices
        )
        for mode in ("lhom", "sur", "comp"):
            assert exact.count(shrunk, TW, mode) <= exact.count(inst, TW, mode)


def test_backtracking_matches_naive_all_modes():
    for i in range(60):
        rng = pyrng("bt-naive", i)
        n_t = rng.randint(1, 4)
        tv = [f"h{j}" for j in range(n_t)]
        tedges = [(a, a) for a in tv if rng.random() < 0.4]
        tedges += [
            (tv[a], tv[b])
            for a in range(n_t)
            for b in range(a + 1, n_t)
            if rng.random() < 0.5
        ]
        target = Graph(tv, tedges)
        n_p = rng.randint(0, 5)
        pv = [f"g{j}" for j in range(n_p)]
        pedges = [
            (pv[a], pv[b])
            for a in range(n_p)
            for b in range(a + 1, n_p)
            if rng.random() < 0.4
        ]
        pattern = Graph(pv, pedges)
        lists = {
            v: frozenset(rng.sample(tv, rng.randint(1, n_t))) for v in pv
        }
        inst = ListedInstance(pattern, lists, target.vertices)
        for mode in ("lhom", "sur", "comp"):
            assert exact.count(inst, target, mode) == reference.naive_count(
                inst, target, mode
            )


def test_blocked_fast_path_random_instances():
    # random anchored-block instances: the multiplicity-exponent evaluation
    # must match counting on the explicit expansion
    from retraction_lab.instances import Block, BlockedInstance, Coupling

    for i in range(40):
        rng = pyrng("blk-rand", i)
        target = TW if rng.random() < 0.5 else Graph(
            "xyz", [("x", "y"), ("y", "z"), ("x", "x")]
        )
        n_single = rng.randint(1, 3)
        n_multi = rng.randint(1, 3)
        blocks = []
        couplings = []
        pins = []
        for s in range(n_single):
            blocks.append(Block(f"s{s}", 1))
            if rng.random() < 0.3:
                pins.append((f"s{s}", rng.choice(target.vertices)))
        for m in range(n_multi):
            k = rng.randint(1, 2)
            lst = None if rng.random() < 0.6 else frozenset(
                rng.sample(target.vertices, rng.randint(1, len(target.vertices)))
            )
            blocks.append(Block(f"m{m}", rng.randint(2, 4), lst))
            for s in range(n_single):
                if rng.random() < 0.6:
                    couplings.append(Coupling(f"s{s}", f"m{m}", "apex"))
        for a in range(n_single):
            for b in range(a + 1, n_single):
                if rng.random() < 0.4:
                    couplings.append(Coupling(f"s{a}", f"s{b}", "cb"))
        bi = BlockedInstance(tuple(blocks), tuple(couplings), tuple(pins), target.vertices)
        assert exact.count_blocked(bi, target) == exact.count_list_hom(
            expand_blocked(bi), target
        )


def test_blocked_fast_path_large_multiplicity():
    # the fast path stays exact when the expansion would be hundreds of
    # vertices (and agrees with it while the guard still allows expanding)
    from retraction_lab.instances import Block, BlockedInstance, Coupling

    blocks = (Block("u", 1), Block("v", 1), Block("M", 400), Block("N", 250))
    couplings = (
        Coupling("u", "M", "apex"), Coupling("v", "M", "apex"),
        Coupling("u", "N", "apex"), Coupling("u", "v", "cb"),
    )
    bi = BlockedInstance(blocks, couplings, (("u", "b"),), TW.vertices)
    assert exact.count_blocked(bi, TW) == exact.count_list_hom(expand_blocked(bi), TW)


def test_degenerate_instances():
    # an empty list forces zero in every mode
    inst = ListedInstance(K2, {"a": frozenset()}, K2.vertices)
    for mode in ("lhom", "sur", "comp"):
        assert exact.count(inst, K2, mode) == 0
    # empty target: no images for a non-empty pattern, one empty map otherwise
    empty_t = Graph()
    assert exact.count_list_hom(ListedInstance(K2, {}, ()), empty_t) == 0
    assert exact.count_list_hom(ListedInstance(Graph(), {}, ()), empty_t) == 1
    assert exact.count_surjective(ListedInstance(Graph(), {}, ()), empty_t) == 1
