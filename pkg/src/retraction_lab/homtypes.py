"""Type analysis for homomorphisms from the pinned vertex gadget J(p, q, t)
to the target H_k.

The type of a homomorphism is the triple of ordered-pair sets it realizes on
the three matchings of J (A-B, C-C', B'-A').  Maximal types are derived
constructively from the four possible C/C' projections, checked for
maximality by single-pair augmentation, and reported in the canonical
ten-row order.  N(T) has the closed form
|surj(pt, |T1|)| * |surj(qt, |T2|)| * |surj(pt, |T3|)| and the crude upper
bound Nhat(T) = |T1|^pt |T2|^qt |T3|^pt.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import enumerate_homs, stirling_surjections
from .fixedgraphs import build_hk, build_j_blocked, rebind_target
from .graphs import Graph, common_neighbors, neighbor_union
from .instances import block_vertex_names, expand_blocked

Pair = tuple[str, str]


@dataclass(frozen=True)
class HomType:
    t1: frozenset[Pair]
    t2: frozenset[Pair]
    t3: frozenset[Pair]

    def projections(self) -> tuple[frozenset[str], ...]:
        """(A, B, C, C', B', A') recomputed from the pair sets."""
        return (
            frozenset(x for x, _ in self.t1),
            frozenset(y for _, y in self.t1),
            frozenset(x for x, _ in self.t2),
            frozenset(y for _, y in self.t2),
            frozenset(x for x, _ in self.t3),
            frozenset(y for _, y in self.t3),
        )

    def sizes(self) -> tuple[int, int, int]:
        return len(self.t1), len(self.t2), len(self.t3)

    def canonical(self) -> tuple[tuple[Pair, ...], ...]:
        return tuple(tuple(sorted(t)) for t in (self.t1, self.t2, self.t3))


def symmetric_partner(t: HomType) -> HomType:
    """The involution swapping the two ends of the gadget."""
    rev = lambda s: frozenset((y, x) for x, y in s)
    return HomType(rev(t.t3), rev(t.t2), rev(t.t1))


def e_pairs(h: Graph, xs, ys) -> frozenset[Pair]:
    """E(X, Y): ordered pairs (x, y) with x in X, y in Y, {x,y} an edge."""
    return frozenset((x, y) for x in xs for y in ys if h.has_edge(x, y))


def _gamma(h: Graph, v: str) -> frozenset[str]:
    return h.neighbors(v)


def is_nonempty_type(t: HomType, k: int) -> bool:
    """Non-emptiness test: non-empty components, B/C/C'/B' inside Gamma(b),
    A/A' inside Gamma(g), and the two complete joins realized."""
    hk = build_hk(k)
    for part in (t.t1, t.t2, t.t3):
        for x, y in part:
            if not hk.has_edge(x, y):
                raise ValueError(f"pair {(x, y)} is not an edge of H_{k}")
    if not (t.t1 and t.t2 and t.t3):
        return False
    a, b, c, cp, bp, ap = t.projections()
    gb = _gamma(hk, "b")
    gg = _gamma(hk, "g")
    if not (b | c | cp | bp) <= gb:
        return False
    if not (a | ap) <= gg:
        return False
    for x in b:
        for y in c:
            if not hk.has_edge(x, y):
                return False
    for x in bp:
        for y in cp:
            if not hk.has_edge(x, y):
                return False
    return True


def _all_pairs(k: int) -> list[Pair]:
    hk = build_hk(k)
    return sorted(
        (x, y) for x in hk.vertices for y in hk.vertices if hk.has_edge(x, y)
    )


def is_maximal_type(t: HomType, k: int) -> bool:
    """Non-empty, and no single-pair augmentation of any component is
    non-empty.  Single pairs suffice: the non-emptiness conditions are
    inherited by intermediate triples, so any non-empty strict superset
    yields a non-empty one-pair extension."""
    if not is_nonempty_type(t, k):
        return False
    pairs = _all_pairs(k)
    parts = (t.t1, t.t2, t.t3)
    for i in range(3):
        for pair in pairs:
            if pair in parts[i]:
                continue
            aug = [set(p) for p in parts]
            aug[i].add(pair)
            cand = HomType(*(frozenset(p) for p in aug))
            if is_nonempty_type(cand, k):
                return False
    return True


# menu-index pairs in the canonical ten-row presentation order
_TABLE_ORDER = [(0, 0), (0, 1), (0, 2), (0, 3), (1, 2), (1, 1), (2, 2), (1, 3), (2, 3), (3, 3)]


def c_menu(k: int) -> list[frozenset[str]]:
    """The four possible C / C' projections of a maximal type."""
    return [
        frozenset(("b",)),
        frozenset(("r1", "b")),
        frozenset(("r2", "b")),
        frozenset(("r1", "r2", "b", "g")),
    ]


def type_from_c_sets(k: int, c: frozenset[str], cp: frozenset[str]) -> HomType:
    """Derive the full type from the C and C' projections: B/B' are the
    common neighbors inside Gamma(b), A/A' the neighbor unions inside
    Gamma(g), and each component is the full pair set of its projections."""
    hk = build_hk(k)
    gb = _gamma(hk, "b")
    gg = _gamma(hk, "g")
    b = frozenset(common_neighbors(hk, c)) & gb
    bp = frozenset(common_neighbors(hk, cp)) & gb
    a = frozenset(neighbor_union(hk, b)) & gg
    ap = frozenset(neighbor_union(hk, bp)) & gg
    return HomType(e_pairs(hk, a, b), e_pairs(hk, c, cp), e_pairs(hk, bp, ap))


def enumerate_maximal_types(k: int) -> list[tuple[str, HomType]]:
    """The maximal types up to symmetry, labeled T1..T10 in table order.

    Constructive: all 16 C/C' menu combinations are derived and filtered by
    the maximality test; symmetric partners collapse to the canonical
    representative.
    """
    menu = c_menu(k)
    derived: dict[tuple[int, int], HomType] = {}
    for i, c in enumerate(menu):
        for j, cp in enumerate(menu):
            t = type_from_c_sets(k, c, cp)
            if is_maximal_type(t, k):
                derived[(i, j)] = t
    out: list[tuple[str, HomType]] = []
    n = 0
    for (i, j) in _TABLE_ORDER:
        if (i, j) not in derived:
            continue
        n += 1
        out.append((f"T{n}", derived[(i, j)]))
    # anything the menu order missed (defensive; the table should be complete)
    listed = {t.canonical() for _, t in out}
    listed |= {symmetric_partner(t).canonical() for _, t in out}
    for key in sorted(derived):
        t = derived[key]
        if t.canonical() not in listed:
            n += 1
            out.append((f"T{n}", t))
            listed.add(t.canonical())
            listed.add(symmetric_partner(t).canonical())
    return out


def nhat(t: HomType, p: int, q: int, tt: int) -> int:
    s1, s2, s3 = t.sizes()
    return s1 ** (p * tt) * s2 ** (q * tt) * s3 ** (p * tt)


def n_exact(t: HomType, p: int, q: int, tt: int) -> int:
    """Exact count of gadget homomorphisms of (non-empty) type t: each
    matching surjects onto its pair set."""
    s1, s2, s3 = t.sizes()
    return (
        stirling_surjections(p * tt, s1)
        * stirling_surjections(q * tt, s2)
        * stirling_surjections(p * tt, s3)
    )


def j_matchings(p: int, q: int, tt: int, prefix: str = "") -> tuple[list[tuple[str, str]], ...]:
    """The expanded vertex name pairs of the three matchings of J(p,q,t)."""
    from .instances import Block

    def names(base: str, mult: int) -> list[str]:
        return block_vertex_names(Block(prefix + base, mult))

    m1 = list(zip(names("A", p * tt), names("B", p * tt)))
    m2 = list(zip(names("C", q * tt), names("C'", q * tt)))
    m3 = list(zip(names("B'", p * tt), names("A'", p * tt)))
    return m1, m2, m3


def type_of_assignment(
    hom: dict[str, str], p: int, q: int, tt: int, prefix: str = ""
) -> HomType:
    m1, m2, m3 = j_matchings(p, q, tt, prefix)
    return HomType(
        frozenset((hom[a], hom[b]) for a, b in m1),
        frozenset((hom[c], hom[cp]) for c, cp in m2),
        frozenset((hom[bp], hom[ap]) for bp, ap in m3),
    )


BRUTE_EXPANSION_GUARD = 64


def brute_count_by_type(p: int, q: int, tt: int, k: int) -> dict[HomType, int]:
    """Enumerate every homomorphism from the expanded (J, S_J) to H_k and
    bucket by extracted type."""
    hk = build_hk(k)
    blocked = rebind_target(build_j_blocked(p, q, tt), hk)
    if blocked.expansion_size() > BRUTE_EXPANSION_GUARD:
        raise ValueError(
            f"expansion of J({p},{q},{tt}) has {blocked.expansion_size()} vertices; "
            f"guard is {BRUTE_EXPANSION_GUARD}"
        )
    inst = expand_blocked(blocked)
    buckets: dict[HomType, int] = {}
    for hom in enumerate_homs(inst, hk):
        t = type_of_assignment(hom, p, q, tt)
        buckets[t] = buckets.get(t, 0) + 1
    return buckets


@dataclass(frozen=True)
class DominanceReport:
    k: int
    p: int
    q: int
    per_step: tuple[tuple[str, Fraction], ...]  # Nhat(T_i)/Nhat(T4) at t=1
    gamma: Fraction
    window_ok: bool

    def ratios_at(self, tt: int) -> dict[str, Fraction]:
        return {label: r**tt for label, r in self.per_step}


def dominance_report(k: int, p: int, q: int) -> DominanceReport:
    """Exact per-step ratios Nhat(T_i)/Nhat(T4) for the non-dominant rows and
    their maximum gamma; window_ok records whether (p, q) sits strictly
    inside the dominance window."""
    types = dict(enumerate_maximal_types(k))
    t4 = types["T4"]
    n4 = (Fraction(nhat(t4, p, q, 1)))
    per_step = []
    for label in sorted(types, key=lambda s: int(s[1:])):
        if label == "T4":
            continue
        r = Fraction(nhat(types[label], p, q, 1)) / n4
        per_step.append((label, r))
    gamma = max(r for _, r in per_step)
    window_ok = 4**q > (4 + k) ** p and 9**q < 4**q * (4 + k) ** p
    return DominanceReport(k, p, q, tuple(per_step), gamma, window_ok)


def lemma43_check(k: int, p: int, q: int, tt: int) -> bool:
    """True iff Nhat(T)/2 <= N(T) <= Nhat(T) for every maximal type at these
    parameters (exact integer arithmetic)."""
    for _, t in enumerate_maximal_types(k):
        n = n_exact(t, p, q, tt)
        nh = nhat(t, p, q, tt)
        if not (nh <= 2 * n and n <= nh):
            return False
    return True


def lemma43_scan(k: int, p: int, q: int, t_max: int = 64) -> int | None:
    """Least t in 1..t_max where the sandwich holds for every maximal type."""
    for tt in range(1, t_max + 1):
        if lemma43_check(k, p, q, tt):
            return tt
    return None
