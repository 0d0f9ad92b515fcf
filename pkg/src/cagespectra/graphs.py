"""Undirected simple graphs with stable vertex indexing, plus brute-force oracles.

The Graph type stores sorted adjacency lists together with a canonical edge
index (edges (u, v), u < v, ordered lexicographically).  That index pins the
vertex numbering of line graphs and subdivisions, which the block-matrix
identities depend on.  Distance, shell and girth computations are all plain
BFS: deliberately simple, so they can serve as the independent oracle for
every closed-form result in the package.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Optional, Sequence

import numpy as np

__all__ = [
    "DisconnectedGraphError",
    "EdgeListError",
    "Graph",
    "adjacency_matrix",
    "bfs_distances",
    "bipartition",
    "diameter",
    "distance_matrix",
    "from_edge_list",
    "girth",
    "incidence_matrix",
    "line_graph",
    "regularity",
    "shell_matrix",
    "subdivision",
    "to_edge_list",
]


class EdgeListError(ValueError):
    """Malformed edge-list input: syntax errors, self-loops, duplicate edges."""


class DisconnectedGraphError(ValueError):
    """A distance-based operation was asked of a disconnected graph."""


class Graph:
    """Finite simple undirected graph on vertices 0..n-1.

    Disconnected graphs are constructible (for inspection), but every
    distance or spectral operation refuses them via `require_connected`.
    """

    __slots__ = ("n", "adj", "edge_index", "connected")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise EdgeListError("graph needs at least one vertex")
        seen: set[tuple[int, int]] = set()
        canon: list[tuple[int, int]] = []
        neighbors: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise EdgeListError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise EdgeListError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise EdgeListError(f"duplicate edge {e}")
            seen.add(e)
            canon.append(e)
            neighbors[u].append(v)
            neighbors[v].append(u)
        canon.sort()
        self.n = n
        self.edge_index: tuple[tuple[int, int], ...] = tuple(canon)
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(ns)) for ns in neighbors
        )
        self.connected = self._check_connected()

    def _check_connected(self) -> bool:
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for v in self.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    stack.append(v)
        return count == self.n

    @property
    def m(self) -> int:
        return len(self.edge_index)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(ns) for ns in self.adj]

    def require_connected(self) -> None:
        if not self.connected:
            raise DisconnectedGraphError(
                "operation undefined on a disconnected graph"
            )

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edge_index == other.edge_index

    def __hash__(self):
        return hash((self.n, self.edge_index))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(text: str) -> Graph:
    """Parse the edge-list format: header line "n m", then m lines "u v".

    Indices are 0-based; '#' starts a comment; blank lines and CRLF endings
    are accepted.  Duplicate edges and self-loops are errors, not silently
    dropped.
    """
    rows: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise EdgeListError("empty edge-list document")
    header = rows[0]
    if len(header) != 2:
        raise EdgeListError(f"header must be 'n m', got {' '.join(header)!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise EdgeListError(f"non-integer header: {' '.join(header)!r}") from exc
    body = rows[1:]
    if len(body) != m:
        raise EdgeListError(f"header promises {m} edges, found {len(body)}")
    edges = []
    for row in body:
        if len(row) != 2:
            raise EdgeListError(f"edge line must be 'u v', got {' '.join(row)!r}")
        try:
            edges.append((int(row[0]), int(row[1])))
        except ValueError as exc:
            raise EdgeListError(f"non-integer edge: {' '.join(row)!r}") from exc
    return Graph(n, edges)


def to_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edge_index)
    return "\n".join(lines) + "\n"


def adjacency_matrix(G: Graph) -> np.ndarray:
    A = np.zeros((G.n, G.n), dtype=np.int64)
    for u, v in G.edge_index:
        A[u, v] = 1
        A[v, u] = 1
    return A


def incidence_matrix(G: Graph) -> np.ndarray:
    """n x m 0/1 matrix; column j marks the endpoints of edge_index[j]."""
    R = np.zeros((G.n, G.m), dtype=np.int64)
    for j, (u, v) in enumerate(G.edge_index):
        R[u, j] = 1
        R[v, j] = 1
    return R


def line_graph(G: Graph) -> Graph:
    """Line graph; vertex j of the result is edge_index[j] of G."""
    if G.m == 0:
        raise ValueError("line graph of an edgeless graph is empty")
    incident: list[list[int]] = [[] for _ in range(G.n)]
    for j, (u, v) in enumerate(G.edge_index):
        incident[u].append(j)
        incident[v].append(j)
    edges = set()
    for js in incident:
        for a in range(len(js)):
            for b in range(a + 1, len(js)):
                e = (js[a], js[b]) if js[a] < js[b] else (js[b], js[a])
                edges.add(e)
    return Graph(G.m, sorted(edges))


def subdivision(G: Graph) -> Graph:
    """Insert a degree-2 vertex on every edge.

    Vertices 0..n-1 are the original vertices in order; vertex n+j is the
    new vertex on edge_index[j].  Callers rely on this ordering.
    """
    edges = []
    for j, (u, v) in enumerate(G.edge_index):
        w = G.n + j
        edges.append((u, w))
        edges.append((v, w))
    return Graph(G.n + G.m, edges)


def bfs_distances(G: Graph, source: int) -> list[int]:
    """Distances from source to every vertex; -1 marks unreachable."""
    dist = [-1] * G.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        du = dist[u]
        for v in G.adj[u]:
            if dist[v] < 0:
                dist[v] = du + 1
                q.append(v)
    return dist


def distance_matrix(G: Graph) -> np.ndarray:
    """All-pairs distances by BFS from every vertex (connected graphs only)."""
    G.require_connected()
    D = np.empty((G.n, G.n), dtype=np.int64)
    for v in range(G.n):
        D[v] = bfs_distances(G, v)
    return D


def shell_matrix(G: Graph, i: int, D: Optional[np.ndarray] = None) -> np.ndarray:
    """0/1 matrix marking vertex pairs at distance exactly i.

    A precomputed distance matrix may be passed to avoid repeating the BFS.
    """
    if D is None:
        D = distance_matrix(G)
    d = int(D.max())
    if not 0 <= i <= d:
        raise ValueError(f"shell index {i} outside [0, {d}]")
    return (D == i).astype(np.int64)


def girth(G: Graph):
    """Length of a shortest cycle; math.inf for forests.

    BFS from every vertex: a non-tree adjacency between x and y closes a
    walk of length dist[x] + dist[y] + 1 through the root, and the minimum
    of that quantity over all roots is exactly the girth.
    """
    best = math.inf
    for s in range(G.n):
        dist = [-1] * G.n
        parent = [-1] * G.n
        dist[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            if 2 * dist[x] >= best:
                break
            for y in G.adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    q.append(y)
                elif y != parent[x]:
                    c = dist[x] + dist[y] + 1
                    if c < best:
                        best = c
    return best


def diameter(G: Graph) -> int:
    G.require_connected()
    best = 0
    for v in range(G.n):
        best = max(best, max(bfs_distances(G, v)))
    return best


def regularity(G: Graph) -> Optional[int]:
    """The common degree k if G is regular, else None."""
    degs = G.degrees()
    k = degs[0]
    return k if all(d == k for d in degs) else None


def bipartition(G: Graph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Two-coloring of a connected bipartite graph, part of vertex 0 first."""
    G.require_connected()
    color = [-1] * G.n
    color[0] = 0
    q = deque([0])
    while q:
        u = q.popleft()
        for v in G.adj[u]:
            if color[v] < 0:
                color[v] = 1 - color[u]
                q.append(v)
            elif color[v] == color[u]:
                return None
    part0 = tuple(v for v in range(G.n) if color[v] == 0)
    part1 = tuple(v for v in range(G.n) if color[v] == 1)
    return part0, part1
