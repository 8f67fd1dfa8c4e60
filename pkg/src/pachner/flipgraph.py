"""Flip graphs of planar convex point sets and the map to words.

Vertices are triangulations, reached by breadth-first search from the
Delaunay triangulation T0; phi(T) reads the edge letters along the BFS tree
path from T0 to T.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .delaunay import Configuration, Triangulation, delaunay, lower_hull
from .dynamics import diff_move
from .errors import NotConvexPosition, NotPlanar, UnknownVertex
from .exactgeom import Sign, orientation
from .groups import Chain, boundary, presentation, psi
from .io import format_letter
from .words import Word, inverse_word


def regular_triangulation(config: Configuration, heights: Sequence) -> Triangulation:
    return Triangulation(config.dim, config.n, frozenset(lower_hull(config, heights)))


def _in_closed_triangle(p, a, b, c) -> bool:
    o = orientation([a, b, c])
    if o == Sign.ZERO:
        return False
    return all(orientation(t) in (o, Sign.ZERO) for t in ([p, b, c], [a, p, c], [a, b, p]))


def _on_closed_segment(p, a, b) -> bool:
    if orientation([a, b, p]) != Sign.ZERO:
        return False
    return all(min(x, y) <= z <= max(x, y) for x, y, z in zip(a, b, p))


def is_convex_position(config: Configuration) -> bool:
    pts = config.points
    for i, p in enumerate(pts):
        others = pts[:i] + pts[i + 1:]
        if any(_on_closed_segment(p, a, b) for a, b in combinations(others, 2)):
            return False
        if any(_in_closed_triangle(p, a, b, c) for a, b, c in combinations(others, 3)):
            return False
    return True


def flips(tri: Triangulation) -> list:
    """All triangulations one diagonal exchange away (planar, convex position)."""
    by_edge: dict = {}
    for s in tri.simplices:
        for e in combinations(s, 2):
            by_edge.setdefault(e, []).append(s)
    out = []
    for (a, b), ts in sorted(by_edge.items()):
        if len(ts) != 2:
            continue
        c = next(x for x in ts[0] if x not in (a, b))
        d = next(x for x in ts[1] if x not in (a, b))
        new = (tri.simplices - set(ts)) | {tuple(sorted((a, c, d))), tuple(sorted((b, c, d)))}
        out.append(Triangulation(tri.dim, tri.n, frozenset(new)))
    return out


@dataclass
class FlipGraph:
    config: Configuration
    vertices: list
    edges: list  # (i, j, letter taking vertex i to vertex j), i < j
    parent: dict = field(repr=False)  # j -> (i, letter from i to j) along the BFS tree
    index: dict = field(repr=False)

    @property
    def base(self) -> Triangulation:
        return self.vertices[0]

    def degree(self, i: int) -> int:
        return sum(1 for a, b, _ in self.edges if i in (a, b))


def flip_graph(config: Configuration) -> FlipGraph:
    if config.dim != 2:
        raise NotPlanar("flip graphs are computed for planar configurations only")
    if not is_convex_position(config):
        raise NotConvexPosition("every point must be a vertex of the convex hull")
    T0 = delaunay(config)
    vertices = [T0]
    index = {T0.key(): 0}
    parent: dict = {}
    edges = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for T in sorted(flips(vertices[i]), key=Triangulation.key):
            j = index.get(T.key())
            if j is None:
                j = len(vertices)
                index[T.key()] = j
                vertices.append(T)
                parent[j] = (i, diff_move(vertices[i], T))
                queue.append(j)
            if i < j:
                edges.append((i, j, diff_move(vertices[i], T)))
    return FlipGraph(config, vertices, edges, parent, index)


def _vertex(graph: FlipGraph, T) -> int:
    if isinstance(T, int):
        if not 0 <= T < len(graph.vertices):
            raise UnknownVertex(T)
        return T
    i = graph.index.get(T.key())
    if i is None:
        raise UnknownVertex(T.key())
    return i


def phi_word(graph: FlipGraph, T) -> Word:
    j = _vertex(graph, T)
    letters = []
    while j != 0:
        i, l = graph.parent[j]
        letters.append(l)
        j = i
    return tuple(reversed(letters))


def chain_of(tri: Triangulation) -> Chain:
    return Chain(tri.n, tri.dim, tri.simplices)


def cycle_words(graph: FlipGraph) -> list:
    """One fundamental cycle word per edge outside the BFS tree."""
    tree = {(i, j) for j, (i, _) in graph.parent.items()}
    out = []
    for i, j, l in graph.edges:
        if (i, j) in tree:
            continue
        out.append(phi_word(graph, i) + (l,) + inverse_word(phi_word(graph, j)))
    return out


def verify_embedding(graph: FlipGraph) -> bool:
    n, d = graph.config.n, graph.config.dim
    c0 = chain_of(graph.base)
    chains = set()
    for idx, T in enumerate(graph.vertices):
        c = chain_of(T)
        if psi(phi_word(graph, idx), n, d) != c + c0:
            return False
        chains.add(c.support)
    if len(chains) != len(graph.vertices):
        return False
    for i, j, l in graph.edges:
        if chain_of(graph.vertices[i]) + chain_of(graph.vertices[j]) != boundary(l.support, n):
            return False
    cycles = cycle_words(graph)
    if not cycles:
        return True
    pres = presentation(n, d + 2)
    basis = pres.ab_basis()
    return all(psi(w, n, d).is_zero() and basis.contains(pres.ab_row(w)) for w in cycles)


def _vertex_label(T: Triangulation) -> str:
    return " ".join("".join(str(x) for x in s) if T.n < 10 else "-".join(map(str, s)) for s in T.sorted())


def to_dot(graph: FlipGraph) -> str:
    lines = ["graph flips {"]
    for i, T in enumerate(graph.vertices):
        lines.append(f'  v{i} [label="{_vertex_label(T)}"];')
    for i, j, l in graph.edges:
        lines.append(f'  v{i} -- v{j} [label="{format_letter(l)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dict(graph: FlipGraph) -> dict:
    return {
        "vertices": [[list(s) for s in T.sorted()] for T in graph.vertices],
        "edges": [[i, j, format_letter(l)] for i, j, l in graph.edges],
    }


def to_json(graph: FlipGraph) -> str:
    return json.dumps(to_dict(graph), indent=2)


def convex_polygon(n: int) -> Configuration:
    """Points (i, i^2): strictly convex, no four on a circle."""
    return Configuration(tuple((i, i * i) for i in range(1, n + 1)))
