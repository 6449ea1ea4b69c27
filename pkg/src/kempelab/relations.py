"""Synonym, equivalence (skeleton) and congruence (switching reachability)."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .blockgraph import FiringPlan, apply_firing, build_block_graph
from .embed.maps import Edge, PlaneMap, edge_key
from .errors import OmegaNotCycle, StateSpaceLimit
from .kempe import canal_objects, ecs
from .tiling import COLORS, RGBTiling, enumerate_rgb_tilings

DEFAULT_STATE_CAP = 10**6

PERMUTATIONS = tuple(dict(zip(COLORS, p)) for p in itertools.permutations(COLORS))


def synonym_orbit(t: RGBTiling) -> set[RGBTiling]:
    """Images of ``t`` under the six permutations of R, G, B."""
    return {t.relabel(p) for p in PERMUTATIONS}


@dataclass(frozen=True)
class Skeleton:
    """Boundary colors along ``omega`` and, for every pair of its vertices
    and every color, whether they are joined by a path of that color using
    only edges on the chosen side."""

    omega: tuple[int, ...]
    boundary_coloring: tuple[str, ...]
    connectivity: tuple[tuple[tuple[int, int, str], bool], ...]

    def connected(self, u: int, v: int, color: str) -> bool:
        return dict(self.connectivity)[(*edge_key(u, v), color)]

    def relabel(self, perm: dict[str, str]) -> "Skeleton":
        conn = sorted(((u, v, perm[c]), bit) for (u, v, c), bit in self.connectivity)
        return Skeleton(self.omega, tuple(perm[c] for c in self.boundary_coloring), tuple(conn))

    def normalized(self) -> "Skeleton":
        """Smallest representative over the six color permutations."""
        return min((self.relabel(p) for p in PERMUTATIONS), key=lambda s: (s.boundary_coloring, s.connectivity))


def side_faces(Q: PlaneMap, omega: Sequence[int], side: str) -> frozenset[int]:
    """Faces of ``Q`` on one side of the cycle ``omega``.

    ``outside`` is the side holding an outer facet (the smallest-id one if
    both do); on a closed map ``inside`` is the side left of the cycle as
    written. ``whole`` returns every face.
    """
    if side == "whole":
        return frozenset(range(len(Q.faces)))
    left, right = Q.split_by_cycle(omega)
    outer = set(Q.outer)
    if outer:
        out_side = left if min(outer) in left else right
    else:
        out_side = right
    in_side = right if out_side is left else left
    if side == "inside":
        return in_side
    if side == "outside":
        return out_side
    raise ValueError(f"side must be inside, outside or whole, not {side!r}")


def side_edges(Q: PlaneMap, faces: Iterable[int]) -> frozenset[int]:
    return frozenset(i for f in faces for i in Q.face_edges[f])


def skeleton(Q: PlaneMap, t: RGBTiling, omega: Sequence[int], side: str = "inside") -> Skeleton:
    omega = tuple(omega)
    k = len(omega)
    if k < 3 or len(set(omega)) != k or not all(Q.has_edge(omega[i], omega[(i + 1) % k]) for i in range(k)):
        raise OmegaNotCycle(f"{omega} is not a cycle of the graph")
    allowed = side_edges(Q, side_faces(Q, omega, side))
    boundary = tuple(t.color(omega[i], omega[(i + 1) % k]) for i in range(k))
    conn = []
    for color in COLORS:
        adj: dict[int, list[int]] = {}
        for i in allowed:
            if t.colors[i] == color:
                u, v = Q.edges[i]
                adj.setdefault(u, []).append(v)
                adj.setdefault(v, []).append(u)
        comp: dict[int, int] = {}
        for s in omega:
            if s in comp:
                continue
            comp[s] = s
            stack = [s]
            while stack:
                x = stack.pop()
                for y in adj.get(x, ()):
                    if y not in comp:
                        comp[y] = s
                        stack.append(y)
        for u, v in itertools.combinations(sorted(omega), 2):
            conn.append(((u, v, color), comp[u] == comp[v]))
    return Skeleton(omega, boundary, tuple(sorted(conn)))


def equivalent(
    Q: PlaneMap,
    t1: RGBTiling,
    t2: RGBTiling,
    omega: Sequence[int],
    side: str = "inside",
    up_to_synonym: bool = False,
) -> bool:
    s1 = skeleton(Q, t1, omega, side)
    s2 = skeleton(Q, t2, omega, side)
    if up_to_synonym:
        return s1.normalized() == s2.normalized()
    return s1 == s2


def moves(Q: PlaneMap, t: RGBTiling) -> list[RGBTiling]:
    """Every tiling one switch away: ECS on any canal object of any color and
    VCS on any monochromatic block (realized through its block graph)."""
    out = []
    for color in COLORS:
        for canal in canal_objects(Q, t, color):
            out.append(ecs(t, canal))
        bg = build_block_graph(Q, t, color, require_tree=False)
        for b in range(len(bg.blocks)):
            out.append(apply_firing(Q, t, FiringPlan(bg, blocks=frozenset([b]))))
    return out


def congruence_class(Q: PlaneMap, t: RGBTiling, cap: int = DEFAULT_STATE_CAP) -> frozenset[RGBTiling]:
    seen = {t}
    queue = deque([t])
    while queue:
        x = queue.popleft()
        for y in moves(Q, x):
            if y not in seen:
                if len(seen) >= cap:
                    raise StateSpaceLimit(f"more than {cap} tilings reached")
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def congruent(Q: PlaneMap, t1: RGBTiling, t2: RGBTiling, cap: int = DEFAULT_STATE_CAP) -> bool:
    return t2 in congruence_class(Q, t1, cap)


@dataclass(frozen=True)
class CongruenceCensus:
    classes: tuple[frozenset[RGBTiling], ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    def class_of(self, t: RGBTiling) -> int:
        return next(i for i, c in enumerate(self.classes) if t in c)


def congruence_census(
    Q: PlaneMap, tilings: Iterable[RGBTiling] | None = None, cap: int = DEFAULT_STATE_CAP
) -> CongruenceCensus:
    """Partition ``tilings`` (all RGB-tilings by default) into congruence classes."""
    pool = list(tilings) if tilings is not None else enumerate_rgb_tilings(Q)
    classes = []
    done: set[RGBTiling] = set()
    for t in pool:
        if t in done:
            continue
        cls = congruence_class(Q, t, cap)
        done |= cls
        classes.append(cls)
    return CongruenceCensus(tuple(classes))


def strictly_within(Q: PlaneMap, edges: Iterable[Edge], omega: Sequence[int], side: str) -> bool:
    """True if none of ``edges`` lies on ``omega`` or borders a face of ``side``."""
    blocked = side_edges(Q, side_faces(Q, omega, side))
    return all(Q.edge_index[edge_key(*e)] not in blocked for e in edges)
