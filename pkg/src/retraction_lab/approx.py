"""The Monte Carlo approximation stack: confidence powering, sampling via
self-partitioning, the coverage estimator for surjective homomorphisms and
compactions, and the padding translation from plain list-homomorphism
counting.

Counts flowing through oracles are exact integers (exact oracle) or exact
rationals (noisy oracle); the estimator's output Y is an exact rational.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

import numpy as np

from ._seeds import nprng, pyrng
from .exact import count_list_hom, enumerate_homs
from .graphs import Graph
from .instances import ListedInstance

POWERING_TRIALS_PER_LOG = 72  # Chernoff: median of 8 ln(1/delta) quarter-fail
# trials already suffices; 72 is comfortable


# -- oracles -----------------------------------------------------------------


def _instance_key(inst: ListedInstance, target: Graph):
    return (inst.pattern, tuple(sorted(inst.lists.items())), target)


class ExactOracle:
    """Retraction/list-homomorphism counting backed by the exact counter;
    ignores the precision parameter.  Memoizes by instance."""

    behavior = "exact"

    def __init__(self):
        self.calls: list[tuple[int, float | None]] = []
        self._cache: dict = {}

    def count(self, inst: ListedInstance, target: Graph, eps: float | None = None):
        self.calls.append((len(inst.pattern), eps))
        key = _instance_key(inst, target)
        if key not in self._cache:
            self._cache[key] = count_list_hom(inst, target)
        return self._cache[key]


class NoisyOracle:
    """Exact count with a seeded multiplicative perturbation.

    With probability 1 - fail_prob the output is true * e^u for |u| < the
    requested precision (default eps0); with probability fail_prob it is
    pushed outside the window.  Outputs are exact Fractions.
    """

    behavior = "noisy"

    def __init__(self, eps0: float, fail_prob: float, seed: int):
        if not 0 < eps0 < 1 or not 0 <= fail_prob < 1:
            raise ValueError("need 0 < eps0 < 1 and 0 <= fail_prob < 1")
        self.eps0 = eps0
        self.fail_prob = fail_prob
        self.seed = seed
        self.calls: list[tuple[int, float | None]] = []
        self._exact = ExactOracle()

    def count(self, inst: ListedInstance, target: Graph, eps: float | None = None):
        self.calls.append((len(inst.pattern), eps))
        true = self._exact.count(inst, target)
        if true == 0:
            return Fraction(0)
        eps_use = self.eps0 if eps is None else min(eps, self.eps0) if eps > 0 else self.eps0
        rng = pyrng(self.seed, "noisy-call", len(self.calls))
        if rng.random() < self.fail_prob:
            u = (1.5 + rng.random()) * eps_use * rng.choice((-1, 1))
        else:
            u = rng.uniform(-eps_use, eps_use) * 0.999
        return true * Fraction(math.exp(u))


def powered_count(oracle, inst: ListedInstance, target: Graph, eps: float, delta: float):
    """Boost a quarter-failure oracle to failure probability delta by taking
    the median of independent calls at precision eps."""
    if not 0 < eps < 1 or not 0 < delta < 1:
        raise ValueError("eps and delta must lie in (0, 1)")
    if delta >= 0.25:
        return oracle.count(inst, target, eps)
    m = math.ceil(POWERING_TRIALS_PER_LOG * math.log(1 / delta))
    vals = sorted(oracle.count(inst, target, eps) for _ in range(m))
    return vals[m // 2]


# -- sampling ----------------------------------------------------------------


def _weighted_index(rng, weights) -> int:
    """Exact categorical draw proportional to non-negative rational weights."""
    denom = 1
    for w in weights:
        if isinstance(w, Fraction):
            denom = denom * w.denominator // math.gcd(denom, w.denominator)
    scaled = [int(w * denom) for w in weights]
    total = sum(scaled)
    if total <= 0:
        raise ValueError("all weights vanish")
    r = rng.randrange(total)
    acc = 0
    for i, w in enumerate(scaled):
        acc += w
        if r < acc:
            return i
    raise AssertionError("unreachable")


def sample_hom(
    oracle,
    inst: ListedInstance,
    target: Graph,
    eps: float,
    rng=None,
    seed: int | None = None,
    max_resamples: int = 100,
):
    """One homomorphism of (G, S), sampled by sequentially pinning each
    multi-valued vertex with probability proportional to oracle counts.

    With an exact oracle the output is exactly uniform.  The fully pinned
    candidate is verified to be a homomorphism and resampled on failure
    (rejection correction for noisy oracles).
    """
    if rng is None:
        rng = pyrng(seed if seed is not None else 0, "sample-hom")
    total = oracle.count(inst, target, eps)
    if total <= 0:
        raise ValueError("instance has no homomorphisms (oracle count is zero)")
    multi = [v for v in inst.pattern.vertices if len(inst.lists[v]) > 1]
    for _ in range(max_resamples):
        cur = inst
        dead = False
        for v in multi:
            choices = sorted(cur.lists[v])
            weights = [oracle.count(cur.pin(v, s), target, eps) for s in choices]
            if all(w <= 0 for w in weights):
                dead = True
                break
            cur = cur.pin(v, choices[_weighted_index(rng, weights)])
        if dead:
            continue
        tau = {v: next(iter(sv)) for v, sv in cur.lists.items()}
        if all(
            target.has_edge(tau[u], tau[v]) for u, v in inst.pattern.non_loop_edges()
        ):
            return tau
    raise ValueError(f"no homomorphism found after {max_resamples} resamples")


# -- the coverage estimator ---------------------------------------------------


def enumerate_T(inst: ListedInstance, target: Graph, mode: str):
    """The index set of the union: list-respecting witnesses (U, tau).

    surjective mode: |U| = |V(H)| and tau a surjective (hence bijective)
    homomorphism from G[U]; compaction mode: |U| <= |V(H)| + 2|E(H)| and tau
    a compaction from G[U].  Deterministic order.
    """
    if mode not in ("sur", "comp"):
        raise ValueError("mode must be 'sur' or 'comp'")
    pv = inst.pattern.vertices
    tv = target.vertices
    out: list[tuple[tuple[str, ...], dict[str, str]]] = []
    if mode == "sur":
        if len(pv) < len(tv):
            return out
        for us in combinations(pv, len(tv)):
            sub = inst.pattern.induced(us)
            for perm in permutations(tv):
                tau = dict(zip(us, perm))
                if any(tau[u] not in inst.lists[u] for u in us):
                    continue
                if all(target.has_edge(tau[a], tau[b]) for a, b in sub.non_loop_edges()):
                    out.append((us, tau))
        return out
    bound = min(len(pv), len(tv) + 2 * target.edge_count())
    nl_target = {frozenset(e) for e in target.non_loop_edges()}
    for size in range(len(tv), bound + 1):
        for us in combinations(pv, size):
            sub = inst.pattern.induced(us)
            sub_inst = ListedInstance(
                sub, {u: inst.lists[u] for u in us}, inst.target_vertices
            )
            for tau in enumerate_homs(sub_inst, target):
                if set(tau.values()) != set(tv):
                    continue
                realized = {
                    frozenset((tau[a], tau[b]))
                    for a, b in sub.non_loop_edges()
                    if tau[a] != tau[b]
                }
                if nl_target <= realized:
                    out.append((us, tau))
    return out


@dataclass(frozen=True)
class CoverageRun:
    """One run of the coverage estimator: the branch weights, sample budget,
    number of successes and the exact rational estimate."""

    mode: str
    t: int
    omegas: tuple
    omega: object  # int or Fraction
    m: int
    x_total: int
    y: Fraction
    seed: int
    epsilon: float
    delta: float
    sampler: str


class _CoverageTables:
    """Exact enumeration tables for a (G, S, H, mode) triple: all
    homomorphisms, the branch sizes |Omega_i|, and first-occurrence counts.
    Shared by the fast sampler, the closed-form expectation, and tests."""

    def __init__(self, inst: ListedInstance, target: Graph, mode: str):
        self.inst = inst
        self.target = target
        self.mode = mode
        self.T = enumerate_T(inst, target, mode)
        pv = inst.pattern.vertices
        vidx = {v: i for i, v in enumerate(pv)}
        tidx = {t: i for i, t in enumerate(target.vertices)}
        homs = list(enumerate_homs(inst, target))
        self.n_homs = len(homs)
        arr = np.zeros((len(homs), len(pv)), dtype=np.uint8)
        for r, hom in enumerate(homs):
            for v, t in hom.items():
                arr[r, vidx[v]] = tidx[t]
        self.omega_exact: list[int] = []
        minmatch = np.full(len(homs), -1, dtype=np.int64)
        for i, (us, tau) in enumerate(self.T):
            cols = [vidx[u] for u in us]
            vals = np.array([tidx[tau[u]] for u in us], dtype=np.uint8)
            if len(homs):
                match = (arr[:, cols] == vals).all(axis=1)
            else:
                match = np.zeros(0, dtype=bool)
            self.omega_exact.append(int(match.sum()))
            fresh = match & (minmatch < 0)
            minmatch[fresh] = i
        self.minmatch_counts = [
            int((minmatch == i).sum()) for i in range(len(self.T))
        ]

    @property
    def union_size(self) -> int:
        return sum(self.minmatch_counts)

    def phat(self, i: int) -> Fraction:
        if self.omega_exact[i] == 0:
            return Fraction(0)
        return Fraction(self.minmatch_counts[i], self.omega_exact[i])


_tables_cache: dict = {}


def coverage_tables(inst: ListedInstance, target: Graph, mode: str) -> _CoverageTables:
    key = (_instance_key(inst, target), mode)
    if key not in _tables_cache:
        _tables_cache[key] = _CoverageTables(inst, target, mode)
    return _tables_cache[key]


def algorithm_parameters(t: int, eps: float, delta: float) -> tuple[float, float, float, int]:
    """(eps', delta', delta'', m) exactly as in the coverage algorithm."""
    eps1 = eps / 12
    delta1 = delta / 2
    delta2 = delta1 / t
    m = math.ceil(6 * t * math.log(2 / delta1) / eps1**2)
    return eps1, delta1, delta2, m


def coverage_mc(
    inst: ListedInstance,
    target: Graph,
    mode: str,
    eps: float,
    delta: float,
    oracle,
    seed: int,
    force_jvv: bool = False,
    chunk: int = 1 << 20,
) -> CoverageRun:
    """The Monte Carlo union estimator: pin each witness (U_i, tau_i), weigh
    the branches by powered oracle counts, sample m homomorphisms from the
    weighted disjoint union and count first-occurrence hits.

    With the exact oracle the per-sample JVV walk collapses (sampling is
    exactly uniform per branch and the hit indicator depends only on the
    branch's first-occurrence fraction), so samples are drawn as a
    categorical-plus-Bernoulli batch; force_jvv runs the literal per-sample
    walk instead, which is also what noisy oracles get.
    """
    if not 0 < eps < 1 or not 0 < delta < 1:
        raise ValueError("eps and delta must lie in (0, 1)")
    ts = enumerate_T(inst, target, mode)
    t = len(ts)
    if t == 0:
        return CoverageRun(mode, 0, (), 0, 0, 0, Fraction(0), seed, eps, delta, "none")
    eps1, delta1, delta2, m = algorithm_parameters(t, eps, delta)
    pinned = []
    for us, tau in ts:
        cur = inst
        for u in us:
            cur = cur.pin(u, tau[u])
        pinned.append(cur)
    omegas = [powered_count(oracle, pi, target, eps1, delta2) for pi in pinned]
    omega = sum(omegas)
    if omega <= 0:
        return CoverageRun(mode, t, tuple(omegas), omega, m, 0, Fraction(0), seed, eps, delta, "none")

    use_fast = getattr(oracle, "behavior", "") == "exact" and not force_jvv
    if use_fast:
        tables = coverage_tables(inst, target, mode)
        # exact-oracle omegas must agree with the enumeration tables
        assert list(omegas) == tables.omega_exact
        phat = np.array(
            [float(tables.phat(i)) for i in range(t)], dtype=np.float64
        )
        w = np.array([float(x) for x in omegas], dtype=np.float64)
        cum = np.cumsum(w)
        cum /= cum[-1]
        rng = nprng(seed, "coverage", mode)
        x_total = 0
        left = m
        while left > 0:
            batch = min(left, chunk)
            us = rng.random(batch)
            idx = np.searchsorted(cum, us, side="right")
            hits = rng.random(batch) < phat[idx]
            x_total += int(hits.sum())
            left -= batch
        sampler = "collapsed-exact"
    else:
        rng = pyrng(seed, "coverage-jvv", mode)
        sample_eps = eps1 / (2 * len(target.vertices) ** len(inst.pattern.vertices))
        x_total = 0
        for j in range(m):
            i = _weighted_index(rng, omegas)
            sigma = sample_hom(
                oracle, pinned[i], target, sample_eps, rng=rng
            )
            hit = True
            for k in range(i):
                us, tau = ts[k]
                if all(sigma[u] == tau[u] for u in us):
                    hit = False
                    break
            x_total += 1 if hit else 0
        sampler = "jvv"
    y = Fraction(omega) * x_total / m
    return CoverageRun(mode, t, tuple(omegas), omega, m, x_total, y, seed, eps, delta, sampler)


def closed_form_expectation(inst: ListedInstance, target: Graph, mode: str) -> Fraction:
    """E[Y] under exact branch weights and an exactly uniform sampler:
    sum_i omega_i * phat_i, all exact."""
    tables = coverage_tables(inst, target, mode)
    return sum(
        (Fraction(w) * tables.phat(i) for i, w in enumerate(tables.omega_exact)),
        start=Fraction(0),
    )


# -- padding -----------------------------------------------------------------


def lhom_padding(inst: ListedInstance, target: Graph) -> ListedInstance:
    """Disjoint union of the pattern with a pinned (irreflexive) copy of the
    target, making every list homomorphism surjective and edge-covering:
    hom((G,S),H) = sur((G',S'),H) = comp((G',S'),H).

    The copy carries the target's non-loop edges only; patterns are
    irreflexive, and pinning makes loop edges redundant for coverage.
    """
    prefix = "H."
    while any(v.startswith(prefix) for v in inst.pattern.vertices):
        prefix = "H" + prefix
    copy = {v: f"{prefix}{v}" for v in target.vertices}
    verts = list(inst.pattern.vertices) + list(copy.values())
    edges = list(inst.pattern.non_loop_edges()) + [
        (copy[u], copy[v]) for u, v in target.non_loop_edges()
    ]
    lists = dict(inst.lists)
    for v, cv in copy.items():
        lists[cv] = frozenset((v,))
    return ListedInstance(Graph(verts, edges), lists, inst.target_vertices)
