"""Brute-force reference computations that share no code with the package.

Everything here starts from a plain edge list and recomputes faces with
networkx's planarity test, so a bug in the rotation-system code cannot
hide behind a matching bug in the oracle.
"""

from __future__ import annotations

import itertools

import networkx as nx


def nx_graph(M) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(M.vertices)
    G.add_edges_from(M.edges)
    return G


def triangle_faces(edges) -> list[frozenset]:
    """Faces of the (unique) plane embedding of a triangulation."""
    G = nx.Graph(list(edges))
    ok, emb = nx.check_planarity(G)
    assert ok
    seen = set()
    faces = []
    for u, v in emb.edges():
        if (u, v) in seen:
            continue
        f = emb.traverse_face(u, v, mark_half_edges=seen)
        faces.append(frozenset(f))
    return faces


def count_colorings(edges, vertices, k: int = 4) -> int:
    vs = sorted(vertices)
    adj = {v: set() for v in vs}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    col: dict[int, int] = {}

    def rec(i: int) -> int:
        if i == len(vs):
            return 1
        v = vs[i]
        total = 0
        for c in range(k):
            if all(col.get(u) != c for u in adj[v]):
                col[v] = c
                total += rec(i + 1)
                del col[v]
        return total

    return rec(0)


def face_edge_sets(faces) -> list[list[frozenset]]:
    return [[frozenset(p) for p in itertools.combinations(sorted(f), 2)] for f in faces]


def count_face_tilings(edges, faces) -> int:
    """Edge 3-colorings giving every listed triangle all three colors."""
    es = [frozenset(e) for e in edges]
    fe = face_edge_sets(faces)
    by_edge = {e: [i for i, f in enumerate(fe) if e in f] for e in es}
    col: dict[frozenset, int] = {}

    def ok(e) -> bool:
        for i in by_edge[e]:
            cs = [col[x] for x in fe[i] if x in col]
            if len(cs) != len(set(cs)):
                return False
        return True

    def rec(i: int) -> int:
        if i == len(es):
            return 1
        total = 0
        for c in range(3):
            col[es[i]] = c
            if ok(es[i]):
                total += rec(i + 1)
            del col[es[i]]
        return total

    return rec(0)


def tilings_with_class(edges, faces, members: set[frozenset], color: int = 0) -> int:
    """Face tilings whose ``color`` class is exactly ``members``."""
    es = [frozenset(e) for e in edges]
    fe = face_edge_sets(faces)
    rest = [e for e in es if e not in members]
    count = 0
    for combo in itertools.product((1, 2), repeat=len(rest)):
        col = {e: color for e in members}
        col.update(zip(rest, combo))
        if all(len({col[x] for x in f}) == 3 for f in fe):
            count += 1
    return count


def exact_covers(edges, faces) -> list[frozenset]:
    """Edge sets meeting every listed triangle exactly once (subsets of face edges)."""
    fe = face_edge_sets(faces)
    cand = sorted({e for f in fe for e in f}, key=sorted)
    out = []
    for r in range(len(cand) + 1):
        for S in itertools.combinations(cand, r):
            s = set(S)
            if all(sum(x in s for x in f) == 1 for f in fe):
                out.append(frozenset(S))
    return out


def components(vertices, edges) -> list[frozenset]:
    G = nx.Graph()
    G.add_nodes_from(vertices)
    G.add_edges_from(edges)
    return [frozenset(c) for c in nx.connected_components(G)]


def canal_count(faces, non_c_edges) -> int:
    """Components of the dual restricted to the internal faces and to the
    edges of the two other colors."""
    fe = face_edge_sets(faces)
    D = nx.Graph()
    D.add_nodes_from(range(len(fe)))
    owner: dict[frozenset, list[int]] = {}
    for i, f in enumerate(fe):
        for e in f:
            owner.setdefault(e, []).append(i)
    for e in non_c_edges:
        fs = owner.get(frozenset(e), [])
        if len(fs) == 2:
            D.add_edge(*fs)
    return nx.number_connected_components(D)


def odd_even_simple_cycles(edges) -> tuple[int, int]:
    G = nx.Graph(list(edges))
    odd = even = 0
    for c in nx.simple_cycles(G):
        if len(c) % 2:
            odd += 1
        else:
            even += 1
    return odd, even


def min_odd_transversal(edges) -> int:
    es = list(edges)
    for r in range(len(es) + 1):
        for S in itertools.combinations(es, r):
            rest = [e for e in es if e not in S]
            if nx.is_bipartite(nx.Graph(rest)) if rest else True:
                return r
    return len(es)
