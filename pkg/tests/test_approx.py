import math
from fractions import Fraction

import pytest

from retraction_lab import approx, exact
from retraction_lab._seeds import pyrng
from retraction_lab.fixedgraphs import build_path, build_two_wrench
from retraction_lab.graphs import Graph
from retraction_lab.instances import ListedInstance

K2 = Graph("ab", [("a", "b")])


def test_enumerate_T_examples():
    inst = ListedInstance.full(K2, K2)
    assert len(approx.enumerate_T(inst, K2, "sur")) == 2
    assert len(approx.enumerate_T(inst, K2, "comp")) == 2
    single = ListedInstance.full(Graph(["z"]), K2)
    assert approx.enumerate_T(single, K2, "sur") == []
    with pytest.raises(ValueError):
        approx.enumerate_T(inst, K2, "hom")


def test_enumerate_T_respects_lists():
    inst = ListedInstance(K2, {"a": frozenset(("a",))}, K2.vertices)
    ts = approx.enumerate_T(inst, K2, "sur")
    assert all(tau["a"] == "a" for us, tau in ts if "a" in dict(tau))


def test_coverage_zero_shortcircuit():
    single = ListedInstance.full(Graph(["z"]), K2)
    run = approx.coverage_mc(single, K2, "sur", 0.2, 0.1, approx.ExactOracle(), seed=0)
    assert run.t == 0 and run.y == 0


def test_coverage_m_formula():
    eps1, delta1, delta2, m = approx.algorithm_parameters(7, 0.2, 0.1)
    assert eps1 == 0.2 / 12 and delta1 == 0.05 and delta2 == 0.05 / 7
    assert m == math.ceil(6 * 7 * math.log(2 / 0.05) / eps1**2)


def test_coverage_determinism_and_window():
    inst = ListedInstance.full(build_path(4), K2)
    truth = exact.count_surjective(inst, K2)
    r1 = approx.coverage_mc(inst, K2, "sur", 0.2, 0.1, approx.ExactOracle(), seed=9)
    r2 = approx.coverage_mc(inst, K2, "sur", 0.2, 0.1, approx.ExactOracle(), seed=9)
    assert r1.y == r2.y and r1.m == r2.m
    assert truth * math.exp(-0.2) <= r1.y <= truth * math.exp(0.2)


def test_jvv_and_collapsed_agree_distributionally():
    inst = ListedInstance.full(K2, K2)
    truth = exact.count_compaction(inst, K2)
    rj = approx.coverage_mc(inst, K2, "comp", 0.5, 0.3, approx.ExactOracle(), 1, force_jvv=True)
    rf = approx.coverage_mc(inst, K2, "comp", 0.5, 0.3, approx.ExactOracle(), 1)
    assert rj.m == rf.m and rj.t == rf.t
    for run in (rj, rf):
        assert truth * math.exp(-0.5) <= run.y <= truth * math.exp(0.5)


def test_closed_form_expectation():
    tw = build_two_wrench()
    for g in (build_path(4), build_path(5)):
        inst = ListedInstance.full(g, tw)
        for mode, counter in (("sur", exact.count_surjective), ("comp", exact.count_compaction)):
            assert approx.closed_form_expectation(inst, tw, mode) == counter(inst, tw)


def test_partition_and_eq9():
    tw = build_two_wrench()
    inst = ListedInstance.full(build_path(5), tw)
    tables = approx.coverage_tables(inst, tw, "comp")
    truth = exact.count_compaction(inst, tw)
    assert tables.union_size == truth
    omega_plus = sum(tables.omega_exact)
    assert truth >= Fraction(omega_plus, len(tables.T))


def test_sample_hom_unique_and_errors():
    # a fully pinned instance has a single homomorphism
    inst = ListedInstance(
        K2, {"a": frozenset(("a",)), "b": frozenset(("b",))}, K2.vertices
    )
    oracle = approx.ExactOracle()
    for _ in range(5):
        assert approx.sample_hom(oracle, inst, K2, 0.1, seed=3) == {"a": "a", "b": "b"}
    # no homomorphism at all: both ends pinned to the same endpoint
    bad = ListedInstance(
        K2, {"a": frozenset(("a",)), "b": frozenset(("a",))}, K2.vertices
    )
    with pytest.raises(ValueError):
        approx.sample_hom(oracle, bad, K2, 0.1, seed=3)


def test_sample_hom_uniformity_small():
    tw = build_two_wrench()
    inst = ListedInstance.full(build_path(3), tw)
    homs = {tuple(sorted(h.items())) for h in exact.enumerate_homs(inst, tw)}
    oracle = approx.ExactOracle()
    rng = pyrng("uniform-unit")
    counts: dict = {}
    n = 4000
    for _ in range(n):
        tau = approx.sample_hom(oracle, inst, tw, 0.05, rng=rng)
        counts[tuple(sorted(tau.items()))] = counts.get(tuple(sorted(tau.items())), 0) + 1
    assert set(counts) <= homs
    tv = 0.5 * sum(abs(counts.get(h, 0) / n - 1 / len(homs)) for h in homs)
    assert tv <= 0.07


def test_powered_count_exact_and_quarter_delta():
    oracle = approx.ExactOracle()
    inst = ListedInstance.full(build_path(3), K2)
    assert approx.powered_count(oracle, inst, K2, 0.01, 1e-6) == exact.count_list_hom(inst, K2)
    oracle2 = approx.ExactOracle()
    approx.powered_count(oracle2, inst, K2, 0.3, 0.25)
    assert len(oracle2.calls) == 1


def test_noisy_oracle_window():
    inst = ListedInstance.full(build_path(3), K2)
    true = exact.count_list_hom(inst, K2)
    good = bad = 0
    for i in range(400):
        oracle = approx.NoisyOracle(0.2, 0.2, seed=i)
        x = oracle.count(inst, K2)
        if true * math.exp(-0.2) <= x <= true * math.exp(0.2):
            good += 1
        else:
            bad += 1
    assert good >= 280 and bad >= 30  # both behaviors actually exercised


def test_powered_count_noisy_statistics():
    from retraction_lab import verify

    res = verify.check_powered_count(quick=False)
    assert res.passed, res.detail


def test_padding_identities():
    tw = build_two_wrench()
    inst = ListedInstance.full(K2, tw)
    padded = approx.lhom_padding(inst, tw)
    assert exact.count_surjective(padded, tw) == exact.count_list_hom(inst, tw) == 9
    # empty pattern
    empty = ListedInstance.full(Graph(), tw)
    pe = approx.lhom_padding(empty, tw)
    assert exact.count_surjective(pe, tw) == 1
    # padding twice leaves the count fixed
    twice = approx.lhom_padding(padded, tw)
    assert exact.count_surjective(twice, tw) == 9


def test_accuracy_conversions():
    for i in range(1, 100):
        eps = i / 100
        assert 1 + eps <= math.exp(eps) <= 1 + 2 * eps
        assert 1 - eps <= math.exp(-eps) <= 1 - eps / 2


def test_coverage_with_noisy_oracle_runs_jvv():
    inst = ListedInstance.full(K2, K2)
    truth = exact.count_surjective(inst, K2)
    oracle = approx.NoisyOracle(0.05, 0.05, seed=17)
    run = approx.coverage_mc(inst, K2, "sur", 0.9, 0.35, oracle, seed=4)
    assert run.sampler == "jvv"
    assert truth * math.exp(-0.9) <= run.y <= truth * math.exp(0.9)
