"""Vertex 4-colorings, RGB-tilings and single-color tilings.

Colors 1..4 are identified with the Klein four-group via ``c -> c - 1``
under XOR; an edge's color is the group element taking one endpoint color
to the other: R pairs {1,3}/{2,4}, G pairs {1,4}/{2,3}, B pairs {1,2}/{3,4}.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import networkx as nx

from .canals import CanalObject, trace_canals
from .embed.maps import Edge, PlaneMap, SemiMPG, diamond_of, edge_key
from .errors import InconsistentHolonomy, SizeLimit

COLORS = ("R", "G", "B")
BITS = {"R": 0b10, "G": 0b11, "B": 0b01}
BIT_COLOR = {v: k for k, v in BITS.items()}
PAIRS = {"R": ((1, 3), (2, 4)), "G": ((1, 4), (2, 3)), "B": ((1, 2), (3, 4))}

DEFAULT_CYCLE_CAP = 10**6


def edge_color(cu: int, cv: int) -> str:
    return BIT_COLOR[(cu - 1) ^ (cv - 1)]


def other_colors(color: str) -> tuple[str, str]:
    a, b = (c for c in COLORS if c != color)
    return a, b


@dataclass(frozen=True)
class VertexColoring:
    """``assignment[v]`` in 1..4; 0 marks a vertex absent from the graph."""

    assignment: tuple[int, ...]
    graph: PlaneMap | None = field(default=None, compare=False, repr=False)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def as_dict(self) -> dict[int, int]:
        return {v: c for v, c in enumerate(self.assignment) if c}

    def is_proper(self, G: PlaneMap | None = None) -> bool:
        G = G or self.graph
        return all(self.assignment[u] != self.assignment[v] for u, v in G.edges)

    def to_json(self) -> str:
        return json.dumps({str(v): c for v, c in self.as_dict().items()})

    @classmethod
    def from_json(cls, text: str, n: int | None = None, graph: PlaneMap | None = None) -> "VertexColoring":
        obj = {int(k): int(c) for k, c in json.loads(text).items()}
        size = n if n is not None else (graph.n if graph is not None else max(obj) + 1)
        return cls(tuple(obj.get(v, 0) for v in range(size)), graph)


@dataclass(frozen=True)
class RGBTiling:
    """``colors[i]`` is the color of ``graph.edges[i]``."""

    colors: tuple[str, ...]
    graph: PlaneMap = field(compare=False, repr=False)

    def color(self, u: int, v: int) -> str:
        return self.colors[self.graph.index(u, v)]

    def __getitem__(self, e: Edge) -> str:
        return self.color(*e)

    def as_dict(self) -> dict[Edge, str]:
        return dict(zip(self.graph.edges, self.colors))

    def edges_of(self, color: str) -> list[Edge]:
        return [e for e, c in zip(self.graph.edges, self.colors) if c == color]

    def restrict(self, color: str) -> "MonoTiling":
        return MonoTiling(color, frozenset(self.edges_of(color)), self.graph)

    def is_valid(self) -> bool:
        Q = self.graph
        return all(
            len({self.colors[i] for i in Q.face_edges[f]}) == 3 for f in Q.internal
        )

    def relabel(self, perm: Mapping[str, str]) -> "RGBTiling":
        return RGBTiling(tuple(perm[c] for c in self.colors), self.graph)

    def with_colors(self, changes: Mapping[Edge, str]) -> "RGBTiling":
        cols = list(self.colors)
        for e, c in changes.items():
            cols[self.graph.index(*e)] = c
        return RGBTiling(tuple(cols), self.graph)

    def to_json(self) -> str:
        return json.dumps({f"{u},{v}": c for (u, v), c in self.as_dict().items()})

    @classmethod
    def from_json(cls, text: str, graph: PlaneMap) -> "RGBTiling":
        obj = json.loads(text)
        cols = []
        for u, v in graph.edges:
            cols.append(obj[f"{u},{v}"])
        return cls(tuple(cols), graph)


@dataclass(frozen=True)
class MonoTiling:
    """One edge per internal face, all of one color."""

    color: str
    edges: frozenset[Edge]
    graph: PlaneMap | None = field(default=None, compare=False, repr=False)

    @property
    def perfect(self) -> bool:
        """No member edge lies on an outer facet."""
        Q = self.graph
        return not any(Q.edge_index[e] in Q.boundary_edges for e in self.edges)

    def indices(self) -> frozenset[int]:
        return frozenset(self.graph.edge_index[e] for e in self.edges)

    def is_valid(self) -> bool:
        Q = self.graph
        idx = self.indices()
        return all(sum(i in idx for i in Q.face_edges[f]) == 1 for f in Q.internal)


@dataclass(frozen=True)
class CycleStats:
    odd_count: int
    even_count: int
    oc: int
    ec: int


def _as_nx(G) -> nx.Graph:
    if isinstance(G, nx.Graph):
        return G
    H = nx.Graph()
    H.add_nodes_from(G.vertices)
    H.add_edges_from(G.edges)
    return H


def enumerate_vertex_colorings(G) -> list[VertexColoring]:
    """All proper 4-colorings, in lexicographic order of assignment.

    ``G`` is a :class:`PlaneMap` or a networkx graph on integer nodes.
    """
    H = _as_nx(G)
    nodes = sorted(H.nodes)
    size = (max(nodes) + 1) if nodes else 0
    size = max(size, getattr(G, "n", 0))
    adj = {v: [u for u in H[v] if u < v] for v in nodes}
    col = [0] * size
    out: list[VertexColoring] = []
    graph = G if isinstance(G, PlaneMap) else None

    def rec(k: int) -> None:
        if k == len(nodes):
            out.append(VertexColoring(tuple(col), graph))
            return
        v = nodes[k]
        used = {col[u] for u in adj[v]}
        for c in (1, 2, 3, 4):
            if c not in used:
                col[v] = c
                rec(k + 1)
        col[v] = 0

    rec(0)
    return out


def coloring_to_tiling(c: VertexColoring, Q: PlaneMap | None = None) -> RGBTiling:
    Q = Q or c.graph
    return RGBTiling(tuple(edge_color(c[u], c[v]) for u, v in Q.edges), Q)


def tiling_to_coloring(Q: PlaneMap, t: RGBTiling, base_vertex: int, base_color: int) -> VertexColoring:
    """Propagate vertex colors from one seed through the Klein action of edge colors."""
    col = [0] * Q.n
    col[base_vertex] = base_color
    queue = deque([base_vertex])
    while queue:
        x = queue.popleft()
        for y in Q.rotations[x]:
            want = ((col[x] - 1) ^ BITS[t.colors[Q.index(x, y)]]) + 1
            if col[y] == 0:
                col[y] = want
                queue.append(y)
            elif col[y] != want:
                raise InconsistentHolonomy(f"vertex {y} forced to {col[y]} and {want}")
    return VertexColoring(tuple(col), Q)


@lru_cache(maxsize=4096)
def _rgb_tilings(Q: PlaneMap) -> tuple[tuple[str, ...], ...]:
    m = len(Q.edges)
    cols: list[str | None] = [None] * m
    faces = [Q.face_edges[f] for f in Q.internal]
    covered = set(i for fe in faces for i in fe)
    free = [i for i in range(m) if i not in covered]
    out: list[tuple[str, ...]] = []

    def rec(k: int) -> None:
        if k == len(faces):
            if free:
                for combo in itertools.product(COLORS, repeat=len(free)):
                    for i, c in zip(free, combo):
                        cols[i] = c
                    out.append(tuple(cols))
                for i in free:
                    cols[i] = None
            else:
                out.append(tuple(cols))
            return
        fe = faces[k]
        unset = [i for i in fe if cols[i] is None]
        have = [cols[i] for i in fe if cols[i] is not None]
        if len(set(have)) != len(have):
            return
        missing = [c for c in COLORS if c not in have]
        for perm in itertools.permutations(missing):
            for i, c in zip(unset, perm):
                cols[i] = c
            rec(k + 1)
        for i in unset:
            cols[i] = None

    rec(0)
    return tuple(sorted(out, key=lambda cs: [COLORS.index(c) for c in cs]))


def enumerate_rgb_tilings(Q: PlaneMap) -> list[RGBTiling]:
    """All RGB-tilings, sorted by edge-index order with R < G < B."""
    return [RGBTiling(cs, Q) for cs in _rgb_tilings(Q)]


def _eligible_edges(Q: PlaneMap) -> list[int]:
    return sorted({i for f in Q.internal for i in Q.face_edges[f]})


@lru_cache(maxsize=4096)
def _mono_sets(Q: PlaneMap) -> tuple[frozenset[int], ...]:
    faces_of: dict[int, list[int]] = {}
    for f in Q.internal:
        for i in Q.face_edges[f]:
            faces_of.setdefault(i, []).append(f)
    order = list(Q.internal)
    covered: set[int] = set()
    chosen: list[int] = []
    out: list[frozenset[int]] = []

    def rec() -> None:
        f = next((g for g in order if g not in covered), None)
        if f is None:
            out.append(frozenset(chosen))
            return
        for i in sorted(set(Q.face_edges[f])):
            fs = faces_of[i]
            if any(g in covered for g in fs):
                continue
            covered.update(fs)
            chosen.append(i)
            rec()
            chosen.pop()
            covered.difference_update(fs)

    rec()
    return tuple(sorted(out, key=sorted))


def enumerate_mono_tilings(Q: PlaneMap, color: str = "R", perfect_only: bool = False) -> list[MonoTiling]:
    """Every edge set meeting each internal face exactly once.

    Members are drawn from edges bordering an internal face; those on an
    outer facet are half-tiles and are excluded when ``perfect_only``.
    """
    out = []
    for s in _mono_sets(Q):
        m = MonoTiling(color, frozenset(Q.edges[i] for i in s), Q)
        if perfect_only and s & Q.boundary_edges:
            continue
        out.append(m)
    return out


def canal_objects_of(Q: PlaneMap, m: MonoTiling) -> list[CanalObject]:
    return trace_canals(Q, m.indices(), m.color)


def extend_mono_to_rgb(Q: PlaneMap, m: MonoTiling) -> list[RGBTiling]:
    """All RGB-tilings whose ``m.color`` edges are exactly ``m.edges``.

    Colors alternate along every canal, so each canal contributes two
    choices, and an odd ring contributes none.
    """
    canals = canal_objects_of(Q, m)
    if any(c.kind == "ring" and len(c) % 2 for c in canals):
        return []
    x, y = other_colors(m.color)
    base = [None] * len(Q.edges)
    for e in m.edges:
        base[Q.edge_index[e]] = m.color
    covered = set(m.indices())
    idx = [[Q.edge_index[e] for e in c.edges] for c in canals]
    for ids in idx:
        covered.update(ids)
    free = [i for i in range(len(Q.edges)) if i not in covered]
    out = []
    for choice in itertools.product((0, 1), repeat=len(canals)):
        cols = list(base)
        for ids, ch in zip(idx, choice):
            pair = (x, y) if ch == 0 else (y, x)
            for k, i in enumerate(ids):
                cols[i] = pair[k % 2]
        if free:
            for combo in itertools.product(COLORS, repeat=len(free)):
                for i, c in zip(free, combo):
                    cols[i] = c
                out.append(RGBTiling(tuple(cols), Q))
        else:
            out.append(RGBTiling(tuple(cols), Q))
    return sorted(out, key=lambda t: [COLORS.index(c) for c in t.colors])


def _cycle_edge_sets(H: nx.Graph, cap: int) -> list[frozenset[Edge]]:
    cycles = []
    for cyc in nx.simple_cycles(H):
        if len(cycles) >= cap:
            raise SizeLimit(f"more than {cap} simple cycles")
        k = len(cyc)
        cycles.append(frozenset(edge_key(cyc[i], cyc[(i + 1) % k]) for i in range(k)))
    return cycles


def _min_hitting(cycles: list[frozenset[Edge]], universe: Sequence[Edge]) -> int:
    if not cycles:
        return 0
    for size in range(1, len(universe) + 1):
        for S in itertools.combinations(universe, size):
            s = set(S)
            if all(c & s for c in cycles):
                return size
    return len(universe)


def odd_cycle_stats(edges: Iterable[Edge], ambient: PlaneMap | None = None, cap: int = DEFAULT_CYCLE_CAP) -> CycleStats:
    """Simple-cycle census of an edge set.

    ``oc`` (``ec``) is the fewest member edges whose removal leaves no odd
    (even) simple cycle.
    """
    E = sorted({edge_key(*e) for e in edges})
    if ambient is not None:
        for e in E:
            ambient.index(*e)
    H = nx.Graph()
    H.add_edges_from(E)
    cycles = _cycle_edge_sets(H, cap)
    odd = [c for c in cycles if len(c) % 2]
    even = [c for c in cycles if len(c) % 2 == 0]
    used_odd = sorted(set().union(*odd)) if odd else []
    used_even = sorted(set().union(*even)) if even else []
    return CycleStats(len(odd), len(even), _min_hitting(odd, used_odd), _min_hitting(even, used_even))


def is_bipartite_edges(edges: Iterable[Edge]) -> bool:
    H = nx.Graph()
    H.add_edges_from(edges)
    return nx.is_bipartite(H)


@dataclass(frozen=True)
class BoundarySignature:
    """Per outer facet: the vertex walk from its anchor and the edge colors along it."""

    walks: tuple[tuple[int, ...], ...]
    colors: tuple[tuple[str, ...], ...]

    def counts(self, k: int = 0) -> dict[str, int]:
        return {c: self.colors[k].count(c) for c in COLORS}

    def parities(self, k: int = 0) -> dict[str, int]:
        return {c: n % 2 for c, n in self.counts(k).items()}


def boundary_signature(Q: PlaneMap, t: RGBTiling) -> BoundarySignature:
    """Colors around each outer facet.

    For a single-edge deletion ``M - ab`` the walk is ``N, a, S, b``;
    otherwise it starts at the facet's smallest vertex.
    """
    walks = []
    if isinstance(Q, SemiMPG) and len(Q.removed_edges) == 1 and not Q.removed_vertices:
        (e,) = Q.removed_edges
        d = diamond_of(Q.base, e)
        walks.append(d.omega)
    else:
        for face in Q.outer_facets:
            k = face.index(min(face))
            walks.append(tuple(face[k:] + face[:k]))
    cols = []
    for w in walks:
        k = len(w)
        cols.append(tuple(t.color(w[i], w[(i + 1) % k]) for i in range(k)))
    return BoundarySignature(tuple(walks), tuple(cols))
