"""Boolean CSP machinery over the language {Imp, delta_0, delta_1}.

Covers: exact counting of satisfying assignments, the graph/digraph built
from a pair (resp. triple) of Imp-only instances, the parsimonious
translation of a retraction instance into a CSP instance, the bristled-path
construction, trivial-component stripping and the subtraction wrapper.

Graph vertices built from CSP instances are named by the assignment's
bitstring in variable order ("010" means x0=0, x1=1, x2=0).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import DiGraph, Graph, connected_components
from .instances import ListedInstance

PRODUCT_SEP = "::"  # reserved separator for (pattern vertex, variable) names

CSP_ENUM_BOUND = 24


@dataclass(frozen=True)
class CspInstance:
    """Variables, Imp constraints (ordered pairs) and 0/1 pins."""

    variables: tuple[str, ...]
    imps: tuple[tuple[str, str], ...] = ()
    pins: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variables")
        vs = set(self.variables)
        for x, y in self.imps:
            if x not in vs or y not in vs:
                raise ValueError(f"Imp({x},{y}) references undeclared variables")
        seen = set()
        for x, val in self.pins:
            if x not in vs:
                raise ValueError(f"pin on undeclared variable {x!r}")
            if val not in (0, 1):
                raise ValueError("pins must be 0 or 1")
            if x in seen:
                raise ValueError(f"multiple pins on {x!r}")
            seen.add(x)

    def pin_map(self) -> dict[str, int]:
        return dict(self.pins)

    def is_imp_only(self) -> bool:
        return not self.pins


def _propagate(inst: CspInstance, forced: dict[str, int]) -> dict[str, int] | None:
    """Close ``forced`` under the Imp implications; None on conflict."""
    succ: dict[str, list[str]] = {v: [] for v in inst.variables}
    pred: dict[str, list[str]] = {v: [] for v in inst.variables}
    for x, y in inst.imps:
        succ[x].append(y)
        pred[y].append(x)
    forced = dict(forced)
    stack = list(forced)
    while stack:
        x = stack.pop()
        if forced[x] == 1:
            targets, val = succ[x], 1
        else:
            targets, val = pred[x], 0
        for y in targets:
            if y in forced:
                if forced[y] != val:
                    return None
            else:
                forced[y] = val
                stack.append(y)
    return forced


def satisfying_assignments(inst: CspInstance, bound: int = CSP_ENUM_BOUND) -> list[tuple[int, ...]]:
    """All satisfying assignments in variable order, lexicographic."""
    if len(inst.variables) > bound:
        raise ValueError(f"instance has {len(inst.variables)} > {bound} variables")
    forced = _propagate(inst, inst.pin_map())
    out: list[tuple[int, ...]] = []
    if forced is None:
        return out
    order = inst.variables

    def rec(assign: dict[str, int]) -> None:
        pending = [v for v in order if v not in assign]
        if not pending:
            out.append(tuple(assign[v] for v in order))
            return
        v = pending[0]
        for val in (0, 1):
            nxt = _propagate(inst, {**assign, v: val})
            if nxt is not None:
                rec(nxt)

    rec(forced)
    out.sort()
    return out


def count_csp(inst: CspInstance, bound: int = CSP_ENUM_BOUND) -> int:
    """Number of satisfying assignments (implication closure + branching)."""
    if len(inst.variables) > bound:
        raise ValueError(f"instance has {len(inst.variables)} > {bound} variables")
    forced = _propagate(inst, inst.pin_map())
    if forced is None:
        return 0
    order = inst.variables

    def rec(assign: dict[str, int]) -> int:
        pending = [v for v in order if v not in assign]
        if not pending:
            return 1
        v = pending[0]
        total = 0
        for val in (0, 1):
            nxt = _propagate(inst, {**assign, v: val})
            if nxt is not None:
                total += rec(nxt)
        return total

    return rec(forced)


def _bitstring(assign: tuple[int, ...]) -> str:
    return "".join(str(b) for b in assign)


def assignment_of_name(name: str, variables: tuple[str, ...]) -> dict[str, int]:
    if len(name) != len(variables) or set(name) - {"0", "1"}:
        raise ValueError(f"{name!r} is not an assignment over {len(variables)} variables")
    return {x: int(c) for x, c in zip(variables, name)}


def build_graph_from_csp(iv: CspInstance, ie: CspInstance) -> Graph:
    """The undirected graph whose vertices are iv's satisfying assignments,
    with {s, s'} an edge iff every Imp(x,y) of ie holds in both directions
    (s(x) => s'(y) and s'(x) => s(y)); loops allowed.
    """
    if iv.variables != ie.variables:
        raise ValueError("iv and ie must share the variable set")
    if not iv.is_imp_only() or not ie.is_imp_only():
        raise ValueError("iv and ie must be Imp-only instances")
    sols = satisfying_assignments(iv)
    idx = {x: i for i, x in enumerate(iv.variables)}
    pairs = [(idx[x], idx[y]) for x, y in ie.imps]
    names = [_bitstring(s) for s in sols]
    edges = []
    for i, s in enumerate(sols):
        for j in range(i, len(sols)):
            sp = sols[j]
            if all((not s[x] or sp[y]) and (not sp[x] or s[y]) for x, y in pairs):
                edges.append((names[i], names[j]))
    return Graph(names, edges)


def build_digraph_from_csp(iv: CspInstance, if_: CspInstance, ib: CspInstance) -> DiGraph:
    """Directed variant: arc (s, s') iff forward constraints hold from s to s'
    and backward constraints from s' to s.
    """
    if not (iv.variables == if_.variables == ib.variables):
        raise ValueError("instances must share the variable set")
    if not (iv.is_imp_only() and if_.is_imp_only() and ib.is_imp_only()):
        raise ValueError("instances must be Imp-only")
    sols = satisfying_assignments(iv)
    idx = {x: i for i, x in enumerate(iv.variables)}
    fwd = [(idx[x], idx[y]) for x, y in if_.imps]
    bwd = [(idx[x], idx[y]) for x, y in ib.imps]
    names = [_bitstring(s) for s in sols]
    arcs = []
    for i, s in enumerate(sols):
        for j, sp in enumerate(sols):
            if all(not s[x] or sp[y] for x, y in fwd) and all(
                not sp[x] or s[y] for x, y in bwd
            ):
                arcs.append((names[i], names[j]))
    return DiGraph(names, arcs)


def _product_var(v: str, x: str) -> str:
    if PRODUCT_SEP in v or PRODUCT_SEP in x:
        raise ValueError(f"names may not contain the reserved separator {PRODUCT_SEP!r}")
    return f"{v}{PRODUCT_SEP}{x}"


def translate_ret_to_csp(inst: ListedInstance, iv: CspInstance, ie: CspInstance) -> CspInstance:
    """Parsimonious translation of a retraction instance over the graph built
    from (iv, ie) into a CSP instance on V(G) x X.

    Per pattern vertex: a copy of iv's constraints.  Per pattern edge and
    Imp(x,y) of ie: both cross constraints.  Per pinned vertex: delta pins
    matching the pinned assignment.
    """
    if iv.variables != ie.variables:
        raise ValueError("iv and ie must share the variable set")
    if not inst.is_retraction_shaped():
        raise ValueError("instance violates the retraction list condition")
    xs = iv.variables
    variables = tuple(_product_var(v, x) for v in inst.pattern.vertices for x in xs)
    imps: list[tuple[str, str]] = []
    for v in inst.pattern.vertices:
        for x, y in iv.imps:
            imps.append((_product_var(v, x), _product_var(v, y)))
    for u, v in inst.pattern.non_loop_edges():
        for x, y in ie.imps:
            imps.append((_product_var(u, x), _product_var(v, y)))
            imps.append((_product_var(v, x), _product_var(u, y)))
    pins: list[tuple[str, int]] = []
    for v in inst.pattern.vertices:
        sv = inst.lists[v]
        if len(sv) == 1:
            (name,) = sv
            tau = assignment_of_name(name, xs)
            for x in xs:
                pins.append((_product_var(v, x), tau[x]))
    return CspInstance(variables, tuple(imps), tuple(pins))


def translate_dirret_to_csp(
    pattern: DiGraph,
    lists: dict[str, frozenset[str]],
    iv: CspInstance,
    if_: CspInstance,
    ib: CspInstance,
) -> CspInstance:
    """Directed variant: forward constraints go with the arc, backward ones
    against it.
    """
    if not (iv.variables == if_.variables == ib.variables):
        raise ValueError("instances must share the variable set")
    xs = iv.variables
    variables = tuple(_product_var(v, x) for v in pattern.vertices for x in xs)
    imps: list[tuple[str, str]] = []
    for v in pattern.vertices:
        for x, y in iv.imps:
            imps.append((_product_var(v, x), _product_var(v, y)))
    for u, v in pattern.arcs():
        for x, y in if_.imps:
            imps.append((_product_var(u, x), _product_var(v, y)))
        for x, y in ib.imps:
            imps.append((_product_var(v, x), _product_var(u, y)))
    pins: list[tuple[str, int]] = []
    for v in pattern.vertices:
        sv = lists[v]
        if len(sv) == 1:
            (name,) = sv
            tau = assignment_of_name(name, xs)
            for x in xs:
                pins.append((_product_var(v, x), tau[x]))
    return CspInstance(variables, tuple(imps), tuple(pins))


def pbrp_csp(q: int, s: set[int] | frozenset[int]) -> tuple[CspInstance, CspInstance]:
    """The (iv, ie) pair whose built graph is the bristled reflexive path with
    parameters (q, s), plus isolated unlooped vertices.

    iv gets Imp(x_i, x_{i-1}) for i in [q] \\ s; ie gets Imp(x_j, x_i) for all
    0 <= i < j <= q.
    """
    if q < 1:
        raise ValueError("q must be positive")
    s = frozenset(s)
    if not s:
        raise ValueError("s must be non-empty (a plain reflexive path needs no CSP)")
    if not s <= set(range(1, q + 1)):
        raise ValueError(f"s must be a subset of 1..{q}")
    xs = tuple(f"x{i}" for i in range(q + 1))
    iv_imps = tuple((xs[i], xs[i - 1]) for i in range(1, q + 1) if i not in s)
    ie_imps = tuple((xs[j], xs[i]) for i in range(q + 1) for j in range(i + 1, q + 1))
    return CspInstance(xs, iv_imps), CspInstance(xs, ie_imps)


def pbrp_expected_labels(q: int, s: frozenset[int]) -> tuple[dict[int, str], dict[int, str]]:
    """The sigma_i / sigma'_i bitstring names identifying the path and
    bristle vertices inside the built graph: sigma_i(x_j) = 1 iff j < i;
    sigma'_i(x_j) = 1 iff j <= i and j != i-1.
    """
    path = {
        i: "".join("1" if j < i else "0" for j in range(q + 1)) for i in range(q + 2)
    }
    bristles = {
        i: "".join("1" if (j <= i and j != i - 1) else "0" for j in range(q + 1))
        for i in sorted(s)
    }
    return path, bristles


TRIVIAL_SINGLETON_LOOPED = "looped-singleton"
TRIVIAL_SINGLETON = "singleton"
TRIVIAL_EDGE = "unlooped-edge"


def _trivial_kind(c: Graph) -> str | None:
    if len(c) == 1:
        return TRIVIAL_SINGLETON_LOOPED if c.loop_mask() else TRIVIAL_SINGLETON
    if len(c) == 2 and c.is_irreflexive() and len(c.non_loop_edges()) == 1:
        return TRIVIAL_EDGE
    return None


@dataclass(frozen=True)
class StrippedCore:
    """Core component plus the stripped trivial components, packaged with the
    closed-form evaluator f(G) = sum_i hom(G, C_i) for the subtraction wrapper.
    """

    core: Graph
    stripped: tuple[Graph, ...] = ()

    def f_value(self, pattern: Graph, lists: dict[str, frozenset[str]] | None = None) -> int:
        from .exact import count_list_hom  # local import avoids a cycle

        total = 0
        for comp in self.stripped:
            if lists is None:
                li = ListedInstance.full(pattern, comp)
            else:
                cset = frozenset(comp.vertices)
                li = ListedInstance(
                    pattern, {v: sv & cset for v, sv in lists.items()}, comp.vertices
                )
            total += count_list_hom(li, comp)
        return total


def strip_trivial_components(h: Graph) -> StrippedCore:
    """Split off trivial components (singletons and unlooped edges); at most
    one non-trivial component may remain.
    """
    comps = connected_components(h)
    core = [c for c in comps if _trivial_kind(c) is None]
    trivial = [c for c in comps if _trivial_kind(c) is not None]
    if len(core) > 1:
        raise ValueError(f"{len(core)} non-trivial components; expected at most one")
    if core:
        return StrippedCore(core[0], tuple(trivial))
    if not trivial:
        raise ValueError("empty graph has no core")
    return StrippedCore(trivial[0], tuple(trivial[1:]))


def subtract_wrapper(count_big: int, f_value: int) -> int:
    """hom-count difference of the two-target trick; errors on inconsistency."""
    if f_value > count_big:
        raise ValueError(f"inconsistent inputs: f={f_value} exceeds count={count_big}")
    return count_big - f_value


def required_oracle_precision(epsilon: float, f_value: int) -> Fraction:
    """Oracle precision that makes the subtraction safe: eps/(16 k), and for
    k = 0 the plain eps.
    """
    if f_value == 0:
        return Fraction(epsilon).limit_denominator(10**9)
    return Fraction(epsilon).limit_denominator(10**9) / (16 * f_value)


def count_dir_list_hom(
    pattern: DiGraph, lists: dict[str, frozenset[str]], target: DiGraph
) -> int:
    """Directed list-homomorphism counter (backtracking, arc consistency on
    both arc directions).  Lives here because its only client is the
    verification of the directed CSP constructions.
    """
    pv = pattern.vertices
    tindex = {v: i for i, v in enumerate(target.vertices)}
    n = len(pv)
    if n == 0:
        return 1
    doms = []
    for v in pv:
        m = 0
        for t in lists[v]:
            m |= 1 << tindex[t]
        doms.append(m)
    out_p = [pattern._out[i] for i in range(n)]
    in_p = [pattern._in[i] for i in range(n)]
    out_t = [target._out[i] for i in range(len(target.vertices))]
    in_t = [target._in[i] for i in range(len(target.vertices))]

    def rec(active: int, doms: list[int]) -> int:
        if active == 0:
            return 1
        best = None
        for i in range(n):
            if active >> i & 1:
                key = (doms[i].bit_count(), i)
                if best is None or key < best[0]:
                    best = (key, i)
        v = best[1]
        rest = active & ~(1 << v)
        total = 0
        succ = [u for u in range(n) if rest >> u & 1 and out_p[v] >> u & 1]
        pred = [u for u in range(n) if rest >> u & 1 and in_p[v] >> u & 1]
        for t in range(len(target.vertices)):
            if not doms[v] >> t & 1:
                continue
            nd = doms[:]
            ok = True
            for u in succ:
                x = nd[u] & out_t[t]
                if x == 0:
                    ok = False
                    break
                nd[u] = x
            if ok:
                for u in pred:
                    x = nd[u] & in_t[t]
                    if x == 0:
                        ok = False
                        break
                    nd[u] = x
            if ok:
                total += rec(rest, nd)
        return total

    if any(d == 0 for d in doms):
        return 0
    return rec((1 << n) - 1, doms)
