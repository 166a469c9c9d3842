"""Pattern-with-lists instances and the compressed blocked form used by the
gadget builders.

A ListedInstance is an irreflexive pattern graph together with a list
S_v of allowed target vertices per pattern vertex.  Retraction instances are
the special case where every list has size 1 or size |V(H)|.

A BlockedInstance compresses repeated independent sets ("blocks") with a
multiplicity; couplings say how the expansions are wired:

    cb    complete bipartite between the two blocks' vertices
    pm    index-aligned perfect matching (equal multiplicities)
    apex  star from a multiplicity-1 block to every vertex of the other

Expansion is deterministic: a block named B with multiplicity m > 1 expands
to vertices "B#1" .. "B#m"; a multiplicity-1 block expands to a vertex named
exactly B.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph


class ListedInstance:
    """Irreflexive pattern + per-vertex lists over a fixed target vertex set."""

    __slots__ = ("pattern", "lists", "target_vertices", "retraction_mode")

    def __init__(
        self,
        pattern: Graph,
        lists: dict[str, frozenset[str]],
        target_vertices: tuple[str, ...],
        retraction_mode: bool = False,
    ):
        if not pattern.is_irreflexive():
            raise ValueError("pattern graphs must be irreflexive")
        tset = frozenset(target_vertices)
        if len(tset) != len(target_vertices):
            raise ValueError("duplicate target vertices")
        norm = {}
        for v in pattern.vertices:
            sv = frozenset(lists.get(v, tset))
            if not sv <= tset:
                raise ValueError(f"list of {v!r} mentions unknown target vertices {sorted(sv - tset)}")
            norm[v] = sv
        extra = set(lists) - set(pattern.vertices)
        if extra:
            raise ValueError(f"lists given for unknown pattern vertices {sorted(extra)}")
        if retraction_mode:
            n = len(target_vertices)
            for v, sv in norm.items():
                if len(sv) not in (1, n):
                    raise ValueError(
                        f"retraction instance needs |S_v| in {{1, {n}}}; vertex {v!r} has {len(sv)}"
                    )
        self.pattern = pattern
        self.lists: dict[str, frozenset[str]] = norm
        self.target_vertices = tuple(sorted(target_vertices))
        self.retraction_mode = retraction_mode

    @property
    def target_size(self) -> int:
        return len(self.target_vertices)

    @classmethod
    def full(cls, pattern: Graph, target: Graph, retraction_mode: bool = False) -> "ListedInstance":
        return cls(pattern, {}, target.vertices, retraction_mode)

    def pin(self, v: str, t: str) -> "ListedInstance":
        """The instance with the list of v collapsed to {t}."""
        if t not in self.lists[v]:
            raise ValueError(f"{t!r} is not in the list of {v!r}")
        lists = dict(self.lists)
        lists[v] = frozenset((t,))
        return ListedInstance(self.pattern, lists, self.target_vertices, False)

    def restrict_lists(self, allowed: frozenset[str]) -> "ListedInstance":
        lists = {v: sv & allowed for v, sv in self.lists.items()}
        return ListedInstance(self.pattern, lists, self.target_vertices, False)

    def is_retraction_shaped(self) -> bool:
        n = self.target_size
        return all(len(sv) in (1, n) for sv in self.lists.values())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ListedInstance)
            and self.pattern == other.pattern
            and self.lists == other.lists
            and self.target_vertices == other.target_vertices
        )

    def __repr__(self) -> str:
        pins = sum(1 for sv in self.lists.values() if len(sv) == 1)
        return f"ListedInstance({len(self.pattern)} vertices, {pins} pinned)"


COUPLING_KINDS = ("cb", "pm", "apex")


@dataclass(frozen=True)
class Block:
    name: str
    multiplicity: int
    list: frozenset[str] | None = None  # None = full list

    def __post_init__(self):
        if self.multiplicity < 1:
            raise ValueError(f"block {self.name!r} needs positive multiplicity")


@dataclass(frozen=True)
class Coupling:
    a: str
    b: str
    kind: str

    def __post_init__(self):
        if self.kind not in COUPLING_KINDS:
            raise ValueError(f"unknown coupling kind {self.kind!r}")


@dataclass(frozen=True)
class BlockedInstance:
    """Compressed gadget instance; expansion is unique up to vertex naming."""

    blocks: tuple[Block, ...]
    couplings: tuple[Coupling, ...]
    pins: tuple[tuple[str, str], ...]  # (block name, target vertex)
    target_vertices: tuple[str, ...] = field(default=())

    def __post_init__(self):
        by_name = {}
        for blk in self.blocks:
            if blk.name in by_name:
                raise ValueError(f"duplicate block {blk.name!r}")
            by_name[blk.name] = blk
        tset = set(self.target_vertices)
        for blk in self.blocks:
            if blk.list is not None and not blk.list <= tset:
                raise ValueError(f"block {blk.name!r} list mentions unknown target vertices")
        for c in self.couplings:
            if c.a not in by_name or c.b not in by_name:
                raise ValueError(f"coupling {c} references unknown block")
            if c.kind == "pm" and by_name[c.a].multiplicity != by_name[c.b].multiplicity:
                raise ValueError(f"perfect matching {c.a}-{c.b} joins unequal multiplicities")
            if c.kind == "apex" and by_name[c.a].multiplicity != 1:
                raise ValueError(f"apex coupling {c.a}-{c.b} needs multiplicity-1 apex {c.a!r}")
        seen_pins = set()
        for name, tv in self.pins:
            if name not in by_name:
                raise ValueError(f"pin on unknown block {name!r}")
            if by_name[name].multiplicity != 1:
                raise ValueError(f"pinned block {name!r} must have multiplicity 1")
            if tv not in tset:
                raise ValueError(f"pin target {tv!r} is not a target vertex")
            if name in seen_pins:
                raise ValueError(f"duplicate pin on block {name!r}")
            seen_pins.add(name)

    def block(self, name: str) -> Block:
        for blk in self.blocks:
            if blk.name == name:
                return blk
        raise ValueError(f"unknown block {name!r}")

    def pin_map(self) -> dict[str, str]:
        return dict(self.pins)

    def expansion_size(self) -> int:
        return sum(blk.multiplicity for blk in self.blocks)


def block_vertex_names(blk: Block) -> list[str]:
    if blk.multiplicity == 1:
        return [blk.name]
    return [f"{blk.name}#{i}" for i in range(1, blk.multiplicity + 1)]


def expand_blocked(b: BlockedInstance) -> ListedInstance:
    """Explicit ListedInstance for a blocked instance.

    Blocks expand to independent sets carrying the block list; cb couplings
    to all cross edges, pm couplings to index-aligned edges, apex couplings
    to a star from the singleton block.
    """
    names = {blk.name: block_vertex_names(blk) for blk in b.blocks}
    all_names = [v for blk in b.blocks for v in names[blk.name]]
    if len(set(all_names)) != len(all_names):
        raise ValueError("expanded vertex names collide; rename blocks")
    edges = []
    for c in b.couplings:
        va, vb = names[c.a], names[c.b]
        if c.kind == "pm":
            edges.extend(zip(va, vb))
        else:  # cb; apex is cb with a singleton side
            for u in va:
                for v in vb:
                    edges.append((u, v))
    pattern = Graph(all_names, edges)
    tset = frozenset(b.target_vertices)
    pins = b.pin_map()
    lists = {}
    for blk in b.blocks:
        if blk.name in pins:
            blk_list = frozenset((pins[blk.name],))
        elif blk.list is None:
            blk_list = tset
        else:
            blk_list = blk.list
        for v in names[blk.name]:
            lists[v] = blk_list
    return ListedInstance(pattern, lists, b.target_vertices)
