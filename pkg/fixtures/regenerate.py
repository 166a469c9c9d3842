#!/usr/bin/env python3
"""Regenerate the checked-in fixture graphs from the library builders.

Run from the repository root:  python fixtures/regenerate.py
"""
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from retraction_lab import files
from retraction_lab.fixedgraphs import (
    build_cycle,
    build_hk,
    build_hk_prime,
    build_jq,
    build_path,
    build_pbrp,
    build_reflexive_cycle,
    build_reflexive_path,
    build_star,
    build_two_wrench,
    build_wr,
)
from retraction_lab.graphs import Graph

FIXTURES = {
    "k2.hg": build_path(2),
    "p3.hg": build_path(3),
    "star3.hg": build_star(3),
    "two_wrench.hg": build_two_wrench(),
    "j3.hg": build_jq(3),
    "wr3.hg": build_wr(3),
    "wr4.hg": build_wr(4),
    "h1.hg": build_hk(1),
    "h2.hg": build_hk(2),
    "h1_prime.hg": build_hk_prime(1),
    "pbrp_fig2.hg": build_pbrp(4, {1, 3, 4}),
    "reflexive_p3.hg": build_reflexive_path(3),
    "reflexive_p5.hg": build_reflexive_path(5),
    "reflexive_c5.hg": build_reflexive_cycle(5),
    "c4.hg": build_cycle(4),
    "c5.hg": build_cycle(5),
    "terminal_star.hg": Graph(["z", "a", "b", "c"], [("z", "a"), ("z", "b"), ("z", "c")]),
}


def main() -> None:
    here = os.path.dirname(os.path.abspath(__file__))
    for name, graph in sorted(FIXTURES.items()):
        path = os.path.join(here, name)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(files.serialize_graph(graph))
        print(f"wrote {name}")


if __name__ == "__main__":
    main()
