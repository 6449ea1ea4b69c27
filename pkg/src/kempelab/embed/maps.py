"""Rotation-system maps: planar triangulations (MPGs) and semi-MPGs.

Vertices are dense integers ``0..n-1``. ``rotations[v]`` lists the neighbors of
``v`` in counterclockwise order; a deleted vertex keeps its id with an empty
rotation. The face on the left of dart ``u -> v`` continues with dart
``v -> w`` where ``w`` precedes ``u`` in the rotation at ``v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from ..errors import (
    Disconnected,
    DisconnectedResult,
    EdgeAbsent,
    EdgeCountMismatch,
    InvalidMap,
    MultipleFacets,
    NotFourGon,
    NotSimple,
    NotTriangulation,
    OmegaNotCycle,
)

Edge = tuple[int, int]
Dart = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class PlaneMap:
    """A connected plane map with a set of designated internal (tile) faces.

    Faces not marked internal are outer facets. Face ids follow a
    breadth-first sweep of the dual from the face left of the first dart of
    the smallest vertex, so consecutive ids are usually adjacent.
    """

    def __init__(
        self,
        rotations: Sequence[Sequence[int]],
        internal: frozenset[frozenset[Dart]] | None = None,
    ):
        self.n = len(rotations)
        self.rotations: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in rotations)
        self.vertices: tuple[int, ...] = tuple(v for v in range(self.n) if self.rotations[v])
        self._pos = [{u: i for i, u in enumerate(r)} for r in self.rotations]
        self._check_rotations()

        edges = sorted({edge_key(u, v) for u in self.vertices for v in self.rotations[u]})
        self.edges: tuple[Edge, ...] = tuple(edges)
        self.edge_index: dict[Edge, int] = {e: i for i, e in enumerate(edges)}

        self._trace_faces()
        if internal is None:
            self.internal: tuple[int, ...] = tuple(range(len(self.faces)))
        else:
            self.internal = tuple(
                f for f, darts in enumerate(self.face_darts) if frozenset(darts) in internal
            )
        internal_set = set(self.internal)
        self.outer: tuple[int, ...] = tuple(
            f for f in range(len(self.faces)) if f not in internal_set
        )
        self.is_internal = [f in internal_set for f in range(len(self.faces))]

    # -- construction helpers -------------------------------------------------

    def _check_rotations(self) -> None:
        n = self.n
        for v, rot in enumerate(self.rotations):
            if len(set(rot)) != len(rot):
                raise NotSimple(f"vertex {v} lists a neighbor twice: {rot}")
            for u in rot:
                if not 0 <= u < n:
                    raise InvalidMap(f"neighbor id {u} out of range at vertex {v}")
                if u == v:
                    raise NotSimple(f"loop at vertex {v}")
                if v not in self._pos[u]:
                    raise InvalidMap(f"{u} in rotation of {v} but not vice versa")

    def _next_dart(self, u: int, v: int) -> Dart:
        rot = self.rotations[v]
        return v, rot[self._pos[v][u] - 1]

    def _trace_faces(self) -> None:
        dart_face: dict[Dart, int] = {}
        raw: list[list[Dart]] = []
        for u in self.vertices:
            for v in self.rotations[u]:
                if (u, v) in dart_face:
                    continue
                cycle = []
                d = (u, v)
                while d not in dart_face:
                    dart_face[d] = len(raw)
                    cycle.append(d)
                    d = self._next_dart(*d)
                raw.append(cycle)

        # renumber faces breadth-first over the dual
        order: list[int] = []
        if raw:
            v0 = self.vertices[0]
            start = dart_face[(v0, self.rotations[v0][0])]
            seen = {start}
            queue = deque([start])
            while queue:
                f = queue.popleft()
                order.append(f)
                for x, y in raw[f]:
                    g = dart_face[(y, x)]
                    if g not in seen:
                        seen.add(g)
                        queue.append(g)
        # faces of other components, if any, keep their trace order
        reached = set(order)
        order.extend(f for f in range(len(raw)) if f not in reached)
        remap = {old: new for new, old in enumerate(order)}
        self.face_darts: tuple[tuple[Dart, ...], ...] = tuple(tuple(raw[f]) for f in order)
        self.faces: tuple[tuple[int, ...], ...] = tuple(
            tuple(d[0] for d in darts) for darts in self.face_darts
        )
        self.dart_face: dict[Dart, int] = {d: remap[f] for d, f in dart_face.items()}
        self.face_edges: tuple[tuple[int, ...], ...] = tuple(
            tuple(self.edge_index[edge_key(*d)] for d in darts) for darts in self.face_darts
        )
        # (face left of u->v, face left of v->u) for each edge (u, v), u < v
        self.edge_faces: tuple[tuple[int, int], ...] = tuple(
            (self.dart_face[(u, v)], self.dart_face[(v, u)]) for u, v in self.edges
        )

    # -- queries ----------------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotations[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._pos[u]

    def index(self, u: int, v: int) -> int:
        try:
            return self.edge_index[edge_key(u, v)]
        except KeyError:
            raise EdgeAbsent(f"edge {u}-{v} not in graph") from None

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(r) for r in self.rotations)

    @cached_property
    def outer_facets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.faces[f] for f in self.outer)

    @cached_property
    def boundary_edges(self) -> frozenset[int]:
        """Indices of edges lying on some outer facet."""
        return frozenset(i for f in self.outer for i in self.face_edges[f])

    @property
    def is_one_piece(self) -> bool:
        return len(self.outer) <= 1

    def face_of(self, u: int, v: int) -> int:
        return self.dart_face[(u, v)]

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            x = stack.pop()
            for y in self.rotations[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self.vertices)

    def split_by_cycle(self, cycle: Sequence[int]) -> tuple[frozenset[int], frozenset[int]]:
        """Faces left and right of the closed walk ``cycle`` (given as vertices)."""
        k = len(cycle)
        if k < 3 or len(set(cycle)) != k:
            raise OmegaNotCycle(f"not a simple cycle: {tuple(cycle)}")
        cyc_edges = set()
        for i in range(k):
            u, v = cycle[i], cycle[(i + 1) % k]
            if not self.has_edge(u, v):
                raise OmegaNotCycle(f"{u}-{v} is not an edge")
            cyc_edges.add(self.edge_index[edge_key(u, v)])
        left = self._flood({self.dart_face[(cycle[i], cycle[(i + 1) % k])] for i in range(k)}, cyc_edges)
        right = self._flood({self.dart_face[(cycle[(i + 1) % k], cycle[i])] for i in range(k)}, cyc_edges)
        if left & right:
            raise OmegaNotCycle("cycle does not separate the map")
        return left, right

    def _flood(self, seeds: set[int], walls: set[int]) -> frozenset[int]:
        seen = set(seeds)
        stack = list(seeds)
        while stack:
            f = stack.pop()
            for i in self.face_edges[f]:
                if i in walls:
                    continue
                a, b = self.edge_faces[i]
                g = b if a == f else a
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
        return frozenset(seen)

    def face_vertices(self, faces: Iterable[int]) -> frozenset[int]:
        return frozenset(v for f in faces for v in self.faces[f])

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.vertex_count}, edges={len(self.edges)})"


class PlanarTriangulation(PlaneMap):
    """A maximal planar graph: every face a triangle, ``|E| = 3|V| - 6``."""

    def __init__(self, rotations: Sequence[Sequence[int]], validate: bool = True):
        super().__init__(rotations)
        if validate:
            self._validate()

    def _validate(self) -> None:
        if len(self.vertices) != self.n:
            raise InvalidMap("every vertex id must have a nonempty rotation")
        if self.n < 4:
            raise NotTriangulation("an MPG needs at least 4 vertices")
        if not self.is_connected():
            raise Disconnected("graph is disconnected")
        for face in self.faces:
            if len(face) != 3:
                raise NotTriangulation(f"face of length {len(face)}: {face}")
        if len(self.edges) != 3 * self.n - 6:
            raise EdgeCountMismatch(f"{len(self.edges)} edges, expected {3 * self.n - 6}")

    def __eq__(self, other: object) -> bool:
        return type(other) is PlanarTriangulation and other.rotations == self.rotations

    def __hash__(self) -> int:
        return hash(self.rotations)

    @cached_property
    def base_face_darts(self) -> frozenset[frozenset[Dart]]:
        return frozenset(frozenset(d) for d in self.face_darts)

    def delete_edges(self, edges: Iterable[Edge], multi_facet: bool = False) -> "SemiMPG":
        return SemiMPG(self, removed_edges=edges, multi_facet=multi_facet)

    def delete_vertex(self, v: int) -> "SemiMPG":
        return SemiMPG(self, removed_vertices=(v,))


class SemiMPG(PlaneMap):
    """An MPG with some edges and/or vertices removed.

    Internal faces are the surviving triangles of the base; every other face
    of the remaining map is an outer facet.
    """

    def __init__(
        self,
        base: PlanarTriangulation,
        removed_edges: Iterable[Edge] = (),
        removed_vertices: Iterable[int] = (),
        multi_facet: bool = False,
    ):
        self.base = base
        rem_e = frozenset(edge_key(*e) for e in removed_edges)
        rem_v = frozenset(removed_vertices)
        for e in rem_e:
            if not base.has_edge(*e):
                raise EdgeAbsent(f"edge {e[0]}-{e[1]} not in base graph")
        for v in rem_v:
            if not 0 <= v < base.n:
                raise EdgeAbsent(f"vertex {v} not in base graph")
        self.removed_edges = rem_e
        self.removed_vertices = rem_v

        rotations = []
        for v in range(base.n):
            if v in rem_v:
                rotations.append(())
            else:
                rotations.append(
                    tuple(u for u in base.rotations[v] if u not in rem_v and edge_key(u, v) not in rem_e)
                )
        if any(not r for v, r in enumerate(rotations) if v not in rem_v):
            raise DisconnectedResult("deletion isolates a vertex")

        internal = frozenset(
            frozenset(darts)
            for darts in base.face_darts
            if not any(edge_key(*d) in rem_e or d[0] in rem_v for d in darts)
        )
        super().__init__(rotations, internal)
        if not self.is_connected():
            raise DisconnectedResult("deletion disconnects the graph")
        if len(self.outer) > 1 and not multi_facet:
            raise MultipleFacets(
                f"deletion leaves {len(self.outer)} outer facets; pass multi_facet=True"
            )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SemiMPG)
            and other.base == self.base
            and other.removed_edges == self.removed_edges
            and other.removed_vertices == self.removed_vertices
        )

    def __hash__(self) -> int:
        return hash((self.base, self.removed_edges, self.removed_vertices))

    def __repr__(self) -> str:
        return (
            f"SemiMPG(n={self.vertex_count}, edges={len(self.edges)}, "
            f"outer={[len(f) for f in self.outer_facets]})"
        )


@dataclass(frozen=True)
class Diamond:
    """The quadrilateral ``N-a-S-b`` around an interior edge ``e = ab``.

    ``abN`` is the face left of dart ``a -> b`` and ``abS`` the face left of
    ``b -> a``.
    """

    a: int
    b: int
    N: int
    S: int

    @property
    def e(self) -> Edge:
        return edge_key(self.a, self.b)

    @property
    def omega(self) -> tuple[int, int, int, int]:
        """Boundary cycle in the order ``N, a, S, b``."""
        return (self.N, self.a, self.S, self.b)

    def pair(self, name: str) -> tuple[Edge, Edge]:
        """The two boundary edges forming a named pair (see :data:`DIRECTIONS`)."""
        a, b, N, S = self.a, self.b, self.N, self.S
        table = {
            "∧": ((a, N), (b, N)),
            "∨": ((a, S), (b, S)),
            "<": ((a, N), (a, S)),
            ">": ((b, N), (b, S)),
            "//": ((a, N), (b, S)),
            "\\\\": ((a, S), (b, N)),
        }
        p, q = table[DIRECTION_ALIASES.get(name, name)]
        return edge_key(*p), edge_key(*q)

    @property
    def boundary(self) -> tuple[Edge, Edge, Edge, Edge]:
        a, b, N, S = self.a, self.b, self.N, self.S
        return edge_key(a, N), edge_key(a, S), edge_key(b, N), edge_key(b, S)


DIRECTIONS = ("∧", "∨", "<", ">", "//", "\\\\")
DIRECTION_ALIASES = {"^": "∧", "v": "∨", "\\": "\\\\"}


def diamond_of(M: PlanarTriangulation, e: Edge) -> Diamond:
    a, b = e
    if not M.has_edge(a, b):
        raise EdgeAbsent(f"edge {a}-{b} not in graph")
    north = [v for v in M.faces[M.face_of(a, b)] if v not in (a, b)]
    south = [v for v in M.faces[M.face_of(b, a)] if v not in (a, b)]
    return Diamond(a, b, north[0], south[0])


def diamond_of_semi(Q: SemiMPG) -> Diamond:
    """Diamond of the single removed edge of a 4-semi-MPG ``Q = M - e``."""
    if len(Q.removed_edges) != 1 or Q.removed_vertices:
        raise NotFourGon("expected exactly one removed edge and no removed vertex")
    (e,) = Q.removed_edges
    d = diamond_of(Q.base, e)
    if len(Q.outer) != 1 or len(Q.outer_facets[0]) != 4:
        raise NotFourGon("removed edge does not leave a single 4-gon outer facet")
    return d


@dataclass(frozen=True)
class DualGraph:
    """Faces as nodes, one dual edge per primal edge.

    ``edge_map[e] = (f, g)`` with ``f`` left of dart ``u -> v`` for ``e = (u, v)``.
    """

    internal_nodes: tuple[int, ...]
    outer_nodes: tuple[int, ...]
    edge_map: dict[Edge, tuple[int, int]]

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(sorted(self.internal_nodes + self.outer_nodes))

    def degree(self, node: int) -> int:
        return sum((f == node) + (g == node) for f, g in self.edge_map.values())

    def to_networkx(self):
        import networkx as nx

        G = nx.MultiGraph()
        G.add_nodes_from(self.nodes)
        for e, (f, g) in self.edge_map.items():
            G.add_edge(f, g, primal=e)
        return G


def dual(Q: PlaneMap) -> DualGraph:
    return DualGraph(
        internal_nodes=Q.internal,
        outer_nodes=Q.outer,
        edge_map={e: Q.edge_faces[i] for i, e in enumerate(Q.edges)},
    )


def build_mpg(rotations: Sequence[Sequence[int]]) -> PlanarTriangulation:
    """Validate a rotation system and return it as a :class:`PlanarTriangulation`."""
    return PlanarTriangulation(rotations)


def delete_edges(M: PlanarTriangulation, edges: Iterable[Edge], multi_facet: bool = False) -> SemiMPG:
    return SemiMPG(M, removed_edges=edges, multi_facet=multi_facet)


def from_faces(n: int, faces: Iterable[Sequence[int]]) -> PlanarTriangulation:
    """Build an MPG from its triangles, orienting them consistently first."""
    faces = [tuple(f) for f in faces]
    by_edge: dict[Edge, list[int]] = {}
    for i, f in enumerate(faces):
        for k in range(3):
            by_edge.setdefault(edge_key(f[k], f[(k + 1) % 3]), []).append(i)
    oriented: dict[int, tuple[int, int, int]] = {0: faces[0]}
    stack = [0]
    while stack:
        i = stack.pop()
        f = oriented[i]
        for k in range(3):
            x, y = f[k], f[(k + 1) % 3]
            for j in by_edge[edge_key(x, y)]:
                if j in oriented:
                    continue
                g = faces[j]
                # neighbor must traverse the shared edge as y -> x
                for r in range(3):
                    cand = g[r:] + g[:r]
                    if (cand[0], cand[1]) == (y, x):
                        oriented[j] = cand
                        break
                else:
                    rev = g[::-1]
                    for r in range(3):
                        cand = rev[r:] + rev[:r]
                        if (cand[0], cand[1]) == (y, x):
                            oriented[j] = cand
                            break
                stack.append(j)
    succ: list[dict[int, int]] = [dict() for _ in range(n)]
    for v, a, b in oriented.values():
        succ[v][a] = b
        succ[a][b] = v
        succ[b][v] = a
    rotations = []
    for v in range(n):
        s = succ[v]
        if not s:
            rotations.append(())
            continue
        start = min(s)
        rot = [start]
        while len(rot) <= len(s):
            nxt = s.get(rot[-1])
            if nxt is None or nxt == start:
                break
            rot.append(nxt)
        rotations.append(tuple(rot))
    return PlanarTriangulation(rotations)


def _bipyramid(k: int) -> PlanarTriangulation:
    # ring 0..k-1, apexes k and k+1
    faces = []
    for i in range(k):
        j = (i + 1) % k
        faces.append((k, i, j))
        faces.append((k + 1, j, i))
    return from_faces(k + 2, faces)


def _icosahedron() -> PlanarTriangulation:
    top, bottom = 0, 11
    U = [1, 2, 3, 4, 5]
    L = [6, 7, 8, 9, 10]
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces += [
            (top, U[i], U[j]),
            (U[i], L[i], U[j]),
            (U[j], L[i], L[j]),
            (bottom, L[j], L[i]),
        ]
    return from_faces(12, faces)


def named_mpg(name: str) -> PlanarTriangulation:
    """A small library of classical triangulations."""
    name = name.lower()
    if name == "k4":
        return from_faces(4, [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)])
    if name == "octahedron":
        return _bipyramid(4)
    if name == "icosahedron":
        return _icosahedron()
    if name.startswith("bipyramid"):
        return _bipyramid(int(name[len("bipyramid"):]))
    raise KeyError(f"unknown named graph {name!r}")


NAMED = ("k4", "octahedron", "icosahedron", "bipyramid3", "bipyramid5")


def four_cycles(M: PlanarTriangulation) -> list[tuple[tuple[int, int, int, int], str]]:
    """Every 4-cycle ``a-b-c-d-a`` once, with its classification.

    ``trivial`` means one side holds no vertex; otherwise the cycle is
    ``nontrivial-with-chord`` or ``nontrivial-chordless``.
    """
    out = []
    adj = M.adjacency
    for a in M.vertices:
        nbrs = sorted(u for u in adj[a] if u > a)
        for i, b in enumerate(nbrs):
            for d in nbrs[i + 1:]:
                for c in sorted(adj[b] & adj[d]):
                    if c <= a or c == a:
                        continue
                    cycle = (a, b, c, d)
                    left, right = M.split_by_cycle(cycle)
                    inner_l = M.face_vertices(left) - set(cycle)
                    inner_r = M.face_vertices(right) - set(cycle)
                    chord = M.has_edge(a, c) or M.has_edge(b, d)
                    if not inner_l or not inner_r:
                        kind = "trivial"
                    elif chord:
                        kind = "nontrivial-with-chord"
                    else:
                        kind = "nontrivial-chordless"
                    out.append((cycle, kind))
    return out


def iter_darts(M: PlaneMap) -> Iterator[Dart]:
    for u in M.vertices:
        for v in M.rotations[u]:
            yield u, v
