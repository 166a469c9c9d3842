from fractions import Fraction

import pytest

from retraction_lab import homtypes as ht
from retraction_lab.fixedgraphs import build_hk, build_j_blocked, rebind_target
from retraction_lab.gadgets import choose_pq
from retraction_lab.instances import expand_blocked


def table(k=1):
    return dict(ht.enumerate_maximal_types(k))


def test_table1_k1_shapes():
    rows = ht.enumerate_maximal_types(1)
    assert [label for label, _ in rows] == [f"T{i}" for i in range(1, 11)]
    sizes = {label: t.sizes() for label, t in rows}
    assert sizes["T1"] == (5, 1, 5)
    assert sizes["T4"] == (5, 4, 1)
    assert sizes["T5"] == (2, 3, 2)
    assert sizes["T10"] == (1, 9, 1)
    t4 = table()["T4"]
    a, b, c, cp, bp, ap = t4.projections()
    assert a == frozenset({"b", "y1"})
    assert b == frozenset({"r1", "r2", "b", "g"})
    assert c == frozenset({"b"})
    assert cp == frozenset({"r1", "r2", "b", "g"})
    assert bp == ap == frozenset({"b"})


def test_table1_larger_k_uses_all_ys():
    for k in (2, 3):
        rows = dict(ht.enumerate_maximal_types(k))
        assert len(rows) == 10
        ys = frozenset(f"y{i}" for i in range(1, k + 1))
        assert rows["T1"].projections()[0] == frozenset({"b"}) | ys
        assert rows["T4"].sizes() == (4 + k, 4, 1)


def test_nonempty_type_conditions():
    t4 = table()["T4"]
    assert ht.is_nonempty_type(t4, 1)
    empty_t2 = ht.HomType(t4.t1, frozenset(), t4.t3)
    assert not ht.is_nonempty_type(empty_t2, 1)
    # g in B and r1 in C violates the complete-join condition
    bad = ht.HomType(
        frozenset({("b", "g")}), frozenset({("r1", "b")}), frozenset({("b", "b")})
    )
    assert not ht.is_nonempty_type(bad, 1)
    with pytest.raises(ValueError):
        ht.is_nonempty_type(
            ht.HomType(frozenset({("g", "r1")}), t4.t2, t4.t3), 1
        )  # (g, r1) is not an edge of H_1


def test_maximality():
    rows = table()
    for label, t in rows.items():
        assert ht.is_maximal_type(t, 1), label
    t4 = rows["T4"]
    shrunk = ht.HomType(t4.t1, t4.t2 - {("b", "b")}, t4.t3)
    assert ht.is_nonempty_type(shrunk, 1)
    assert not ht.is_maximal_type(shrunk, 1)
    constant_b = ht.HomType(
        frozenset({("b", "b")}), frozenset({("b", "b")}), frozenset({("b", "b")})
    )
    assert not ht.is_maximal_type(constant_b, 1)


def test_symmetry_involution():
    rows = table()
    assert ht.symmetric_partner(rows["T2"]) == ht.type_from_c_sets(
        1, frozenset({"r1", "b"}), frozenset({"b"})
    )
    for label, t in rows.items():
        assert ht.symmetric_partner(ht.symmetric_partner(t)) == t


def test_nhat_and_n_exact_examples():
    t4 = table()["T4"]
    assert ht.nhat(t4, 1, 1, 1) == 20
    assert ht.n_exact(t4, 1, 1, 1) == 0
    assert ht.n_exact(t4, 5, 4, 1) == 120 * 24 * 1
    for t in table().values():
        assert ht.n_exact(t, 2, 2, 1) <= ht.nhat(t, 2, 2, 1)


def test_brute_force_grid_matches_formula():
    for p, q, t in ((1, 1, 1), (2, 1, 1)):
        buckets = ht.brute_count_by_type(p, q, t, 1)
        hk = build_hk(1)
        inst = expand_blocked(rebind_target(build_j_blocked(p, q, t), hk))
        from retraction_lab import exact

        assert sum(buckets.values()) == exact.count_retraction(inst, hk)
        for typ, cnt in buckets.items():
            assert ht.n_exact(typ, p, q, t) == cnt
            assert ht.is_nonempty_type(typ, 1)


def test_dominance_and_sandwich():
    p, q = choose_pq(1)
    assert (p, q) == (44, 52)
    rep = ht.dominance_report(1, p, q)
    assert rep.window_ok
    assert all(r < 1 for _, r in rep.per_step)
    assert rep.gamma < 1
    per = dict(rep.per_step)
    assert per["T1"] == Fraction(5**44, 4**52)
    at3 = rep.ratios_at(3)
    assert at3["T1"] == per["T1"] ** 3
    assert ht.lemma43_scan(1, p, q, 8) == 1
    assert ht.lemma43_check(1, p, q, 2)


def test_dominance_fails_outside_window():
    # p = q violates q > p, making T2's ratio 1
    rep = ht.dominance_report(1, 44, 44)
    assert not rep.window_ok
    assert not all(r < 1 for _, r in rep.per_step)
