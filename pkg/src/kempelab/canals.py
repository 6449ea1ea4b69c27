"""Canal objects: dual walks that avoid one color's edges."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .embed.maps import Edge, PlaneMap


@dataclass(frozen=True)
class CanalObject:
    """A canal ring or line.

    ``faces`` lists the dual nodes visited (for a line, the outer facets at
    both ends are included); ``edges[k]`` is the primal edge crossed between
    ``faces[k]`` and ``faces[k + 1]`` (cyclically for rings). ``left`` and
    ``right`` hold the endpoints of crossed edges on each side of the walk.
    """

    avoided_color: str
    kind: str
    faces: tuple[int, ...]
    edges: tuple[Edge, ...]
    left_bank: frozenset[Edge]
    right_bank: frozenset[Edge]
    left: frozenset[int]
    right: frozenset[int]

    @property
    def dual_walk(self) -> tuple[tuple[int, Edge, int], ...]:
        k = len(self.edges)
        if self.kind == "ring":
            return tuple((self.faces[i], self.edges[i], self.faces[(i + 1) % k]) for i in range(k))
        return tuple((self.faces[i], self.edges[i], self.faces[i + 1]) for i in range(k))

    def __len__(self) -> int:
        return len(self.edges)


def _left_endpoint(Q: PlaneMap, i: int, dest: int) -> int:
    u, v = Q.edges[i]
    return u if Q.edge_faces[i][0] == dest else v


def trace_canals(Q: PlaneMap, avoided: Iterable[int], color: str = "R") -> list[CanalObject]:
    """Partition the non-avoided edges bordering internal faces into canals.

    ``avoided`` holds edge indices; each internal face must contain exactly
    one of them. Lines start at the end whose boundary edge has the smaller
    index; rings start at their smallest face id and leave it through its
    smaller-index crossing edge.
    """
    A = set(avoided)
    internal = Q.is_internal
    through: dict[int, tuple[int, int]] = {}
    for f in Q.internal:
        free = [i for i in Q.face_edges[f] if i not in A]
        through[f] = (free[0], free[1]) if free[0] < free[1] else (free[1], free[0])

    def other(f: int, i: int) -> int:
        a, b = Q.edge_faces[i]
        return b if a == f else a

    def walk(start_face: int, start_edge: int) -> tuple[list[int], list[int]]:
        faces = [start_face]
        edges = [start_edge]
        f = other(start_face, start_edge)
        while True:
            faces.append(f)
            if not internal[f]:
                return faces, edges
            i, j = through[f]
            nxt = j if edges[-1] == i else i
            if f == faces[0] and nxt == edges[0]:
                faces.pop()
                return faces, edges
            edges.append(nxt)
            f = other(f, nxt)

    used: set[int] = set()
    raw: list[tuple[str, list[int], list[int]]] = []
    boundary_starts = sorted(
        i for f in Q.internal for i in through[f]
        if not internal[Q.edge_faces[i][0]] or not internal[Q.edge_faces[i][1]]
    )
    for i in boundary_starts:
        if i in used:
            continue
        a, b = Q.edge_faces[i]
        outer = a if not internal[a] else b
        faces, edges = walk(outer, i)
        used.update(edges)
        raw.append(("line", faces, edges))
    for f in Q.internal:
        for i in through[f]:
            if i in used:
                continue
            faces, edges = walk(f, through[f][0])
            used.update(edges)
            raw.append(("ring", faces, edges))

    canals = []
    for kind, faces, edges in raw:
        canals.append(_build(Q, color, kind, faces, edges, A))
    canals.sort(key=lambda c: min(Q.edge_index[e] for e in c.edges))
    return canals


def _build(Q: PlaneMap, color: str, kind: str, faces: list[int], edges: list[int], A: set[int]) -> CanalObject:
    k = len(edges)
    dests = faces[1:] if kind == "line" else faces[1:] + faces[:1]
    lefts = [_left_endpoint(Q, edges[s], dests[s]) for s in range(k)]
    rights = [u if u != lefts[s] else v for s, (u, v) in enumerate(Q.edges[i] for i in edges)]
    left_bank, right_bank = set(), set()
    steps = range(k - 1) if kind == "line" else range(k)
    for s in steps:
        t = (s + 1) % k
        f = dests[s]
        bank = next(i for i in Q.face_edges[f] if i in A)
        (left_bank if lefts[s] != lefts[t] else right_bank).add(Q.edges[bank])
    return CanalObject(
        avoided_color=color,
        kind=kind,
        faces=tuple(faces),
        edges=tuple(Q.edges[i] for i in edges),
        left_bank=frozenset(left_bank),
        right_bank=frozenset(right_bank),
        left=frozenset(lefts),
        right=frozenset(rights),
    )
