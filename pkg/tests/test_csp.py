import pytest

from retraction_lab import csp, exact
from retraction_lab.fixedgraphs import build_pbrp, build_two_wrench
from retraction_lab.graphs import DiGraph, Graph
from retraction_lab.instances import ListedInstance


def test_count_csp_examples():
    assert csp.count_csp(csp.CspInstance(("x",))) == 2
    imp = csp.CspInstance(("x", "y"), imps=(("x", "y"),))
    assert csp.count_csp(imp) == 3
    pinned = csp.CspInstance(("x", "y"), imps=(("x", "y"),), pins=(("x", 1),))
    assert csp.count_csp(pinned) == 1


def test_count_csp_bound():
    xs = tuple(f"x{i}" for i in range(30))
    with pytest.raises(ValueError):
        csp.count_csp(csp.CspInstance(xs))


def test_build_graph_two_wrench():
    iv, ie = csp.pbrp_csp(1, {1})
    assert iv.imps == ()
    assert ie.imps == (("x1", "x0"),)
    g = csp.build_graph_from_csp(iv, ie)
    assert g.vertices == ("00", "01", "10", "11")
    assert set(map(frozenset, g.edges())) == {
        frozenset({"00"}), frozenset({"10"}), frozenset({"11"}),
        frozenset({"00", "10"}), frozenset({"10", "11"}), frozenset({"01", "10"}),
    }


def test_build_graph_vacuous_and_self_imp():
    one = csp.CspInstance(("x",))
    complete = csp.build_graph_from_csp(one, csp.CspInstance(("x",)))
    assert complete.edges() == [("0", "0"), ("0", "1"), ("1", "1")]
    self_imp = csp.build_graph_from_csp(one, csp.CspInstance(("x",), imps=(("x", "x"),)))
    assert self_imp.edges() == [("0", "0"), ("1", "1")]


def test_build_digraph_examples():
    one = csp.CspInstance(("x",))
    fwd = csp.CspInstance(("x",), imps=(("x", "x"),))
    empty = csp.CspInstance(("x",))
    dg = csp.build_digraph_from_csp(one, fwd, empty)
    assert sorted(dg.arcs()) == [("0", "0"), ("0", "1"), ("1", "1")]
    both = csp.build_digraph_from_csp(one, fwd, fwd)
    undirected = csp.build_graph_from_csp(one, fwd)
    assert both.underlying_graph() == undirected
    full = csp.build_digraph_from_csp(one, empty, empty)
    assert len(full.arcs()) == 4


def test_translate_examples():
    iv, ie = csp.pbrp_csp(1, {1})
    h = csp.build_graph_from_csp(iv, ie)
    single = ListedInstance.full(Graph(["w"]), h)
    assert csp.count_csp(csp.translate_ret_to_csp(single, iv, ie)) == len(h.vertices)

    k2 = Graph("uv", [("u", "v")])
    pinned = ListedInstance(
        k2, {"u": frozenset(("00",)), "v": frozenset(("10",))}, h.vertices
    )
    assert csp.count_csp(csp.translate_ret_to_csp(pinned, iv, ie)) == 1
    assert exact.count_retraction(pinned, h) == 1

    full = ListedInstance.full(k2, h)
    assert csp.count_csp(csp.translate_ret_to_csp(full, iv, ie)) == exact.count_retraction(full, h) == 9


def test_translate_rejects_general_lists():
    iv, ie = csp.pbrp_csp(1, {1})
    h = csp.build_graph_from_csp(iv, ie)
    inst = ListedInstance(Graph(["w"]), {"w": frozenset(("00", "10"))}, h.vertices)
    with pytest.raises(ValueError):
        csp.translate_ret_to_csp(inst, iv, ie)


def test_pbrp_csp_construction():
    iv, ie = csp.pbrp_csp(2, {1})
    assert iv.imps == (("x2", "x1"),)
    assert len(ie.imps) == 3
    with pytest.raises(ValueError):
        csp.pbrp_csp(2, set())
    with pytest.raises(ValueError):
        csp.pbrp_csp(2, {3})


def test_pbrp_fig2_structure():
    iv, ie = csp.pbrp_csp(4, {1, 3, 4})
    built = csp.build_graph_from_csp(iv, ie)
    path, bristles = csp.pbrp_expected_labels(4, frozenset({1, 3, 4}))
    mapping = {name: f"c{i}" for i, name in path.items()}
    mapping.update({name: f"g{i}" for i, name in bristles.items()})
    core = [c for c in __import__("retraction_lab.graphs", fromlist=["x"]).connected_components(built) if len(c) > 1]
    assert len(core) == 1
    assert core[0].relabel(mapping) == build_pbrp(4, {1, 3, 4})


def test_directed_counter_matches_naive():
    from retraction_lab import reference
    from retraction_lab._seeds import pyrng

    for i in range(40):
        rng = pyrng("dircnt", i)
        nt = rng.randint(1, 3)
        tv = [f"h{j}" for j in range(nt)]
        tarcs = [(a, b) for a in tv for b in tv if rng.random() < 0.5]
        target = DiGraph(tv, tarcs)
        np_ = rng.randint(0, 4)
        pv = [f"g{j}" for j in range(np_)]
        parcs = [(a, b) for a in pv for b in pv if a != b and rng.random() < 0.3]
        pattern = DiGraph(pv, parcs)
        lists = {v: frozenset(rng.sample(tv, rng.randint(1, nt))) for v in pv}
        assert csp.count_dir_list_hom(pattern, lists, target) == reference.naive_count_digraph(
            pattern, lists, target
        )


def test_strip_trivial_components():
    tw = build_two_wrench()
    lone = Graph(list(tw.vertices) + ["s"], tw.edges())
    core = csp.strip_trivial_components(lone)
    assert core.core == tw
    assert len(core.stripped) == 1
    connected = csp.strip_trivial_components(tw)
    assert connected.core == tw and connected.stripped == ()
    two_cores = Graph([], tw.edges() + [(f"z{v}", f"z{v}") for v in "ab"] + [("za", "zb")])
    with pytest.raises(ValueError):
        csp.strip_trivial_components(two_cores)


def test_subtract_wrapper():
    assert csp.subtract_wrapper(9, 1) == 8
    assert csp.subtract_wrapper(7, 7) == 0
    with pytest.raises(ValueError):
        csp.subtract_wrapper(0, 1)
    assert csp.required_oracle_precision(0.2, 0) == __import__("fractions").Fraction(1, 5)
    assert csp.required_oracle_precision(0.16, 2) == __import__("fractions").Fraction(
        0.16
    ).limit_denominator(10**9) / 32


def test_pbrp_construction_output_strips_to_core():
    iv, ie = csp.pbrp_csp(1, {1})
    built = csp.build_graph_from_csp(iv, ie)
    stripped = csp.strip_trivial_components(built)
    assert stripped.stripped == ()
    assert len(stripped.core) == 4
