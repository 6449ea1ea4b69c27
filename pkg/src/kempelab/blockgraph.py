"""Block graphs: monochromatic components joined by canal objects."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Iterable

from .canals import CanalObject
from .embed.maps import Edge, PlaneMap
from .errors import InconsistentPlan, NotATree
from .kempe import canal_objects
from .tiling import RGBTiling, other_colors

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Link:
    canal: CanalObject
    left: int
    right: int


@dataclass(frozen=True)
class BlockGraph:
    """Blocks are the components of the ``color`` subgraph (singletons
    included); each canal object of ``color`` is a link between the block
    holding its left endpoints and the block holding its right endpoints."""

    color: str
    blocks: tuple[frozenset[int], ...]
    links: tuple[Link, ...]
    color_edges: frozenset[Edge]
    block_marks: tuple[bool, ...] = ()
    link_marks: tuple[bool, ...] = ()
    block_of: dict[int, int] = field(default_factory=dict, compare=False, repr=False)

    def incident(self, b: int) -> list[int]:
        return [k for k, l in enumerate(self.links) if b in (l.left, l.right)]

    @property
    def is_tree(self) -> bool:
        if any(l.left == l.right for l in self.links):
            return False
        if len(self.blocks) - len(self.links) != 1:
            return False
        return len(self._reach(0, skip=None)) == len(self.blocks)

    def _reach(self, start: int, skip: int | None) -> set[int]:
        seen = {start}
        stack = [start]
        while stack:
            b = stack.pop()
            for k in self.incident(b):
                if k == skip:
                    continue
                l = self.links[k]
                o = l.right if l.left == b else l.left
                if o not in seen:
                    seen.add(o)
                    stack.append(o)
        return seen

    def to_dot(self, name: str = "BG") -> str:
        lines = [f"graph {name} {{"]
        for i, blk in enumerate(self.blocks):
            label = ",".join(str(v) for v in sorted(blk))
            periph = ", peripheries=2" if self.block_marks and self.block_marks[i] else ""
            lines.append(f'  b{i} [label="{{{label}}}"{periph}];')
        for k, l in enumerate(self.links):
            style = ', color="black:invis:black"' if self.link_marks and self.link_marks[k] else ""
            lines.append(f'  b{l.left} -- b{l.right} [label="{l.canal.kind}{k}"{style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_block_graph(Q: PlaneMap, t: RGBTiling, color: str = "R", require_tree: bool = True) -> BlockGraph:
    """Block graph of ``t``'s ``color`` class.

    Raises :class:`NotATree` if the result is not a tree and
    ``require_tree`` is set; pass False to inspect multi-facet inputs.
    """
    c_edges = [e for e, col in zip(Q.edges, t.colors) if col == color]
    adj: dict[int, list[int]] = {v: [] for v in Q.vertices}
    for u, v in c_edges:
        adj[u].append(v)
        adj[v].append(u)
    block_of: dict[int, int] = {}
    blocks: list[frozenset[int]] = []
    for v in Q.vertices:
        if v in block_of:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        for x in comp:
            block_of[x] = len(blocks)
        blocks.append(frozenset(comp))

    links = []
    for canal in canal_objects(Q, t, color):
        lb = {block_of[v] for v in canal.left}
        rb = {block_of[v] for v in canal.right}
        if len(lb) != 1 or len(rb) != 1:
            raise NotATree(f"canal endpoints straddle several blocks: {canal.edges}")
        links.append(Link(canal, lb.pop(), rb.pop()))
    bg = BlockGraph(
        color,
        tuple(blocks),
        tuple(links),
        frozenset(c_edges),
        (False,) * len(blocks),
        (False,) * len(links),
        block_of,
    )
    if require_tree and not bg.is_tree:
        log.error("block graph is not a tree: %d blocks, %d links", len(blocks), len(links))
        raise NotATree(f"{len(blocks)} blocks, {len(links)} links")
    return bg


@dataclass(frozen=True)
class FiringPlan:
    """Blocks to switch (vertex side) and links to switch (canal side)."""

    bg: BlockGraph
    blocks: frozenset[int] = frozenset()
    links: frozenset[int] = frozenset()

    def __xor__(self, other: "FiringPlan") -> "FiringPlan":
        return FiringPlan(self.bg, self.blocks ^ other.blocks, self.links ^ other.links)


def firing_plan_block(bg: BlockGraph, block: int) -> FiringPlan:
    """The links around ``block``; switching them all equals switching the block."""
    return FiringPlan(bg, links=frozenset(bg.incident(block)))


def firing_plan_link(bg: BlockGraph, link: int, side: str) -> FiringPlan:
    """The blocks on one side of ``link``; switching them all equals switching the link."""
    l = bg.links[link]
    start = {"left": l.left, "right": l.right}[side]
    return FiringPlan(bg, blocks=frozenset(bg._reach(start, skip=link)))


def mark(bg: BlockGraph, plan: FiringPlan) -> BlockGraph:
    """Toggle the presentation marks of every block and link in ``plan``."""
    bm = tuple(m ^ (i in plan.blocks) for i, m in enumerate(bg.block_marks))
    lm = tuple(m ^ (k in plan.links) for k, m in enumerate(bg.link_marks))
    return replace(bg, block_marks=bm, link_marks=lm)


def apply_firing(Q: PlaneMap, t: RGBTiling, plan: FiringPlan) -> RGBTiling:
    """Swap the two non-block colors on every edge touched an odd number of times.

    A block touches the edges with exactly one endpoint in it; a link
    touches the edges its canal crosses.
    """
    bg = plan.bg
    if frozenset(e for e, c in zip(Q.edges, t.colors) if c == bg.color) != bg.color_edges:
        raise InconsistentPlan("plan was built for a different color class")
    if any(not 0 <= b < len(bg.blocks) for b in plan.blocks) or any(
        not 0 <= k < len(bg.links) for k in plan.links
    ):
        raise InconsistentPlan("plan names a block or link outside its block graph")
    flip = [False] * len(Q.edges)
    inside = [False] * Q.n
    for b in plan.blocks:
        for v in bg.blocks[b]:
            inside[v] = True
    for i, (u, v) in enumerate(Q.edges):
        if inside[u] != inside[v]:
            flip[i] = not flip[i]
    for k in plan.links:
        for e in bg.links[k].canal.edges:
            i = Q.edge_index[e]
            flip[i] = not flip[i]
    x, y = other_colors(bg.color)
    cols = list(t.colors)
    for i, f in enumerate(flip):
        if not f:
            continue
        if cols[i] == bg.color:
            raise InconsistentPlan(f"plan would recolor a {bg.color} edge {Q.edges[i]}")
        cols[i] = y if cols[i] == x else x
    return RGBTiling(tuple(cols), Q)


def block_containing(bg: BlockGraph, vertices: Iterable[int]) -> int:
    vs = frozenset(vertices)
    for i, b in enumerate(bg.blocks):
        if b == vs:
            return i
    raise KeyError("no block equals the given vertex set")
