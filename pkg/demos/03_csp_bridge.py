#!/usr/bin/env python3
"""Boolean implication CSPs as a counting backend.

Graphs built from a pair of Imp-only CSP instances carry retraction
counting into #CSP({Imp, delta_0, delta_1}) parsimoniously; bristled
reflexive paths are exactly the graphs this construction produces (up to
isolated unlooped vertices).
"""
from retraction_lab import (
    Graph,
    ListedInstance,
    build_graph_from_csp,
    count_csp,
    count_retraction,
    pbrp_csp,
    strip_trivial_components,
    translate_ret_to_csp,
)
from retraction_lab.graphs import connected_components

# The q=1, s={1} construction builds the 2-wrench: three looped chain
# assignments 00 - 10 - 11 plus the bristle 01.
iv, ie = pbrp_csp(1, {1})
h = build_graph_from_csp(iv, ie)
print("vertices:", h.vertices)
print("edges:   ", h.edges())

# Retraction instances over such graphs translate to CSP instances with the
# same count.
g = Graph("uvw", [("u", "v"), ("v", "w")])
inst = ListedInstance(g, {"v": frozenset(["10"])}, h.vertices)
translated = translate_ret_to_csp(inst, iv, ie)
print("CSP variables:", len(translated.variables), "constraints:", len(translated.imps),
      "pins:", len(translated.pins))
print("count via CSP:       ", count_csp(translated))
print("count via retraction:", count_retraction(inst, h))

# Larger parameters leave isolated unlooped assignments alongside the path;
# stripping them is what the subtraction wrapper is for.
iv4, ie4 = pbrp_csp(4, {1, 3, 4})
h4 = build_graph_from_csp(iv4, ie4)
comps = connected_components(h4)
print("\nq=4, s={1,3,4}:", len(h4.vertices), "assignments,",
      len(comps), "components,",
      "core size", max(len(c) for c in comps))
core = strip_trivial_components(h4)
print("stripped", len(core.stripped), "singletons; core has", len(core.core), "vertices")
