"""Brute-force reference oracles.

Everything here is deliberately naive (full enumeration over |V(H)|^|V(G)|
assignments, exhaustive cycle listing) and independent of the backtracking
search paths it is used to check.  Only run these at desk scale.
"""
from __future__ import annotations

from itertools import product

from .graphs import DiGraph, Graph
from .instances import ListedInstance


def naive_assignments(inst: ListedInstance, target: Graph):
    """Yield every list-respecting homomorphism by checking all assignments."""
    pv = inst.pattern.vertices
    pedges = inst.pattern.non_loop_edges()
    domains = [sorted(inst.lists[v]) for v in pv]
    for combo in product(*domains):
        img = dict(zip(pv, combo))
        if all(target.has_edge(img[u], img[v]) for u, v in pedges):
            yield img


def naive_count(inst: ListedInstance, target: Graph, mode: str = "lhom") -> int:
    """Exact count by full enumeration, any of the five modes."""
    tset = set(target.vertices)
    nl_edges = target.non_loop_edges()
    total = 0
    for img in naive_assignments(inst, target):
        if mode in ("hom", "lhom", "ret"):
            total += 1
            continue
        hit = set(img.values())
        if hit != tset:
            continue
        if mode == "sur":
            total += 1
            continue
        # compaction: every non-loop target edge realized by some pattern edge
        realized = set()
        for u, v in inst.pattern.non_loop_edges():
            a, b = img[u], img[v]
            if a != b:
                realized.add((min(a, b), max(a, b)))
        if all((min(u, v), max(u, v)) in realized for u, v in nl_edges):
            total += 1
    return total


def naive_count_digraph(
    pattern: DiGraph, lists: dict[str, frozenset[str]], target: DiGraph
) -> int:
    """Directed list-homomorphism count by full enumeration."""
    pv = pattern.vertices
    domains = [sorted(lists[v]) for v in pv]
    arcs = pattern.arcs()
    total = 0
    for combo in product(*domains):
        img = dict(zip(pv, combo))
        if all(target.has_arc(img[u], img[v]) for u, v in arcs):
            total += 1
    return total


def enumerate_simple_cycles(h: Graph):
    """All simple cycles (>= 3 distinct vertices) as vertex tuples.

    Each cycle appears once: rooted at its smallest vertex, second vertex
    smaller than last (kills orientation).
    """
    verts = h.vertices
    n = len(verts)
    adj = {v: sorted(h.neighbors(v) - {v}) for v in verts}
    cycles = []

    def extend(path: list[str], allowed: set[str]):
        last = path[-1]
        root = path[0]
        for w in adj[last]:
            if w == root and len(path) >= 3:
                if path[1] < path[-1]:
                    cycles.append(tuple(path))
            elif w in allowed and w > root:
                path.append(w)
                allowed.discard(w)
                extend(path, allowed)
                allowed.add(w)
                path.pop()

    for i, r in enumerate(verts):
        extend([r], set(verts[i + 1 :]))
    return cycles


def naive_girth(h: Graph) -> float:
    """Girth via exhaustive simple-cycle enumeration (|V| small)."""
    cycles = enumerate_simple_cycles(h)
    if not cycles:
        return float("inf")
    return min(len(c) for c in cycles)
