"""planar_code, JSON and DOT interchange for maps."""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Mapping

from ..errors import BadHeader, TruncatedRecord
from .maps import PlaneMap, PlanarTriangulation, SemiMPG

HEADER = b">>planar_code<<"


def read_planar_code(data: bytes) -> Iterator[PlanarTriangulation]:
    """Parse a planar_code stream.

    Neighbor lists on disk run clockwise; they are reversed into the
    counterclockwise convention used here. Ids on disk are 1-based.
    """
    if not data.startswith(HEADER):
        raise BadHeader("stream does not start with >>planar_code<<")
    i = len(HEADER)
    end = len(data)
    while i < end:
        n = data[i]
        i += 1
        if n == 0:
            raise TruncatedRecord("two-byte planar_code records (n >= 255) are not supported")
        rotations = []
        for _ in range(n):
            nbrs = []
            while True:
                if i >= end:
                    raise TruncatedRecord(f"record for n={n} ends early")
                b = data[i]
                i += 1
                if b == 0:
                    break
                nbrs.append(b - 1)
            rotations.append(nbrs[::-1])
        yield PlanarTriangulation(rotations)


def encode_record(M: PlaneMap) -> bytes:
    out = [M.n]
    for v in range(M.n):
        out.extend(u + 1 for u in reversed(M.rotations[v]))
        out.append(0)
    return bytes(out)


def write_planar_code(graphs: Iterable[PlaneMap]) -> bytes:
    return HEADER + b"".join(encode_record(M) for M in graphs)


def to_json(M: PlaneMap) -> str:
    return json.dumps({"n": M.n, "rotations": [list(r) for r in M.rotations]})


def from_json(text: str) -> PlanarTriangulation:
    obj = json.loads(text)
    rotations = obj["rotations"]
    if obj.get("n", len(rotations)) != len(rotations):
        raise ValueError("n does not match number of rotations")
    return PlanarTriangulation(rotations)


_DOT_COLORS = {"R": "red", "G": "green", "B": "blue"}


def to_dot(M: PlaneMap, edge_colors: Mapping[tuple[int, int], str] | None = None, name: str = "M") -> str:
    """Undirected DOT text; optional R/G/B edge colors, outer facets dashed."""
    lines = [f"graph {name} {{"]
    for v in M.vertices:
        lines.append(f"  {v};")
    boundary = M.boundary_edges
    for i, (u, v) in enumerate(M.edges):
        attrs = []
        if edge_colors and (u, v) in edge_colors:
            attrs.append(f'color="{_DOT_COLORS.get(edge_colors[(u, v)], "black")}"')
            attrs.append(f'label="{edge_colors[(u, v)]}"')
        if i in boundary:
            attrs.append("style=bold")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {u} -- {v}{suffix};")
    if isinstance(M, SemiMPG):
        for u, v in sorted(M.removed_edges):
            lines.append(f'  {u} -- {v} [style=dashed, color="gray"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
