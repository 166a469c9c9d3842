#!/usr/bin/env python3
"""The approximation-complexity trichotomy for retraction counting.

Targets without 3- or 4-cycles land in exactly one of three classes:
polynomial time, equivalent to counting bipartite independent sets, or
equivalent to counting satisfying assignments.  SAT verdicts come with a
structural witness naming the hardness source.
"""
from retraction_lab import Graph, classify
from retraction_lab.fixedgraphs import (
    build_cycle,
    build_jq,
    build_pbrp,
    build_reflexive_cycle,
    build_reflexive_path,
    build_star,
    build_two_wrench,
    build_wr,
)

wr3 = build_wr(3)
showcase = [
    ("star K(1,3)", build_star(3)),
    ("single looped vertex", Graph([], [("a", "a")])),
    ("reflexive edge", build_reflexive_path(2)),
    ("2-wrench", build_two_wrench()),
    ("bristled reflexive path (q=4, s={1,3,4})", build_pbrp(4, {1, 3, 4})),
    ("reflexive P5", build_reflexive_path(5)),
    ("subdivided 3-star J3", build_jq(3)),
    ("reflexive C5", build_reflexive_cycle(5)),
    ("irreflexive C5", build_cycle(5)),
    ("reflexive 3-star with an apex on its leaves",
     Graph([], wr3.edges() + [("apex", "apex")] + [("apex", f"l{i}") for i in (1, 2, 3)])),
    ("irreflexive C4", build_cycle(4)),
]

for name, h in showcase:
    v = classify(h)
    line = f"{name:46s} {v.cls:16s} clause {v.clause}"
    if v.witnesses:
        label, verts = v.witnesses[0]
        line += f"  [{label} at {','.join(verts)}]" if verts else f"  [{label}]"
    print(line)

# A disconnected target takes the worst class over its components.
tw, j3 = build_two_wrench(), build_jq(3)
union = Graph(
    [f"a.{v}" for v in tw.vertices] + [f"b.{v}" for v in j3.vertices],
    [(f"a.{x}", f"a.{y}") for x, y in tw.edges()]
    + [(f"b.{x}", f"b.{y}") for x, y in j3.edges()],
)
v = classify(union)
print("\n2-wrench + J3 disjoint union ->", v.cls)
for comp in v.components:
    print("  component", comp.vertices[:3], "...", comp.cls, comp.clause)
