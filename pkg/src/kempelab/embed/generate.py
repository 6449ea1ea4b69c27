"""Canonical codes and isomorph-free generation of triangulations."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from ..errors import CapExceeded
from .maps import PlanarTriangulation, named_mpg

DEFAULT_CAP = 11


def _bfs_code(rot, pos, v0: int, w0: int, step: int, best: list[int] | None) -> list[int] | None:
    """BFS code from dart ``v0 -> w0`` walking rotations in direction ``step``.

    Returns None as soon as the partial code exceeds ``best``.
    """
    label = {v0: 1}
    ref = {v0: w0}
    queue = [v0]
    code: list[int] = []
    smaller = best is None
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        r = rot[x]
        d = len(r)
        k = pos[x][ref[x]]
        for _ in range(d):
            y = r[k]
            lab = label.get(y)
            if lab is None:
                lab = len(label) + 1
                label[y] = lab
                ref[y] = x
                queue.append(y)
            if not smaller:
                b = best[len(code)]
                if lab > b:
                    return None
                if lab < b:
                    smaller = True
            code.append(lab)
            k = (k + step) % d
        if not smaller:
            b = best[len(code)]
            if b > 0:
                return None
        code.append(0)
    return code


def canonical_code(M: PlanarTriangulation) -> bytes:
    """Isomorphism invariant of an embedding, up to relabeling and reflection.

    The result is a planar_code record (vertex count then 0-terminated
    neighbor lists) of a canonically labeled copy of ``M``.
    """
    rot = M.rotations
    pos = M._pos
    deg = [len(r) for r in rot]
    key = min((deg[v], deg[w]) for v in M.vertices for w in rot[v])
    best: list[int] | None = None
    for v in M.vertices:
        if deg[v] != key[0]:
            continue
        for w in rot[v]:
            if deg[w] != key[1]:
                continue
            for step in (1, -1):
                code = _bfs_code(rot, pos, v, w, step, best)
                if code is not None and (best is None or code < best):
                    best = code
    return bytes([M.vertex_count] + best)


def decode_record(record: bytes) -> list[list[int]]:
    """Neighbor lists (0-based, listed order) from a planar_code-style record."""
    n = record[0]
    lists: list[list[int]] = [[] for _ in range(n)]
    v = 0
    for b in record[1:]:
        if b == 0:
            v += 1
        else:
            lists[v].append(b - 1)
    return lists


def from_code(code: bytes) -> PlanarTriangulation:
    return PlanarTriangulation(decode_record(code))


def vertex_splits(M: PlanarTriangulation) -> Iterator[PlanarTriangulation]:
    """All triangulations on one more vertex obtained by splitting a vertex.

    Splitting ``v`` at neighbors ``u_i, u_j`` keeps the arc ``u_i..u_j`` on
    ``v`` and hands the arc ``u_j..u_i`` to a new vertex ``w``; both arcs keep
    their endpoints, and ``vw`` becomes an edge. Splits at ``(i, j)`` and
    ``(j, i)`` give mirror-labeled copies, so only ``i < j`` is produced.
    """
    n = M.n
    w = n
    for v in M.vertices:
        r = M.rotations[v]
        d = len(r)
        for i in range(d):
            for j in range(i + 1, d):
                rots = [list(x) for x in M.rotations] + [[]]
                v_arc = [r[k % d] for k in range(i, j + 1)]
                w_arc = [r[k % d] for k in range(j, i + d + 1)]
                rots[v] = v_arc + [w]
                rots[w] = w_arc + [v]
                for u in w_arc[1:-1]:
                    ru = rots[u]
                    ru[ru.index(v)] = w
                uj, ui = r[j], r[i]
                ru = rots[uj]
                ru.insert(ru.index(v), w)
                ru = rots[ui]
                ru.insert(ru.index(v) + 1, w)
                yield PlanarTriangulation(rots, validate=False)


@lru_cache(maxsize=None)
def _codes(n: int) -> tuple[bytes, ...]:
    if n == 4:
        return (canonical_code(named_mpg("k4")),)
    seen: set[bytes] = set()
    for parent in _codes(n - 1):
        for child in vertex_splits(from_code(parent)):
            seen.add(canonical_code(child))
    return tuple(sorted(seen))


def generate_codes(n: int, cap: int = DEFAULT_CAP) -> tuple[bytes, ...]:
    if n < 4 or n > cap:
        raise CapExceeded(f"n={n} outside supported range 4..{cap}")
    return _codes(n)


def generate_all(n: int, cap: int = DEFAULT_CAP) -> Iterator[PlanarTriangulation]:
    """One triangulation per isomorphism class on ``n`` vertices.

    Output order is by canonical code, and each representative is the
    canonically labeled copy.
    """
    for code in generate_codes(n, cap):
        yield from_code(code)
