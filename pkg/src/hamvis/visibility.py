"""
Visibility checks.

Two independent routes are provided.  The generic one works on any connected
graph given by adjacency sets and follows the definition directly: x and y
are X-visible when some shortest x,y-path has no internal vertex in X.  The
Hamming route only looks at pairwise distances of the members of X, which is
enough because a subset of a Hamming graph is a total mutual-visibility set
exactly when no two members are at distance 2.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from hamvis.errors import DisconnectedGraph, InvalidInput
from hamvis.hamming import CartesianSquare, HammingShape, Vertex, squares_at


@dataclass(frozen=True)
class GeneralGraph:
    """Simple connected graph on vertices 0..n-1."""

    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        n = len(self.adj)
        for v, nb in enumerate(self.adj):
            if v in nb:
                raise InvalidInput(f"self-loop at vertex {v}")
            for w in nb:
                if not 0 <= w < n or v not in self.adj[w]:
                    raise InvalidInput(f"adjacency not symmetric at edge {v}-{w}")
        if n and len(_bfs_distances(self.adj, 0)) != n:
            raise DisconnectedGraph("graph is not connected")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "GeneralGraph":
        """Build from 0-based edge pairs."""
        adj = [set() for _ in range(n)]
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise InvalidInput(f"edge {a}-{b} out of range for {n} vertices")
            if a == b:
                raise InvalidInput(f"self-loop at vertex {a}")
            adj[a].add(b)
            adj[b].add(a)
        return cls(tuple(frozenset(s) for s in adj))

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2


def hamming_graph(shape: HammingShape) -> GeneralGraph:
    """Materialize the Hamming graph, vertices numbered by mixed-radix index."""
    verts = list(shape.vertices())
    adj = []
    for v in verts:
        nb = set()
        for k, n in enumerate(shape.sizes):
            for c in range(1, n + 1):
                if c != v[k]:
                    nb.add(shape.encode(v[:k] + (c,) + v[k + 1:]))
        adj.append(frozenset(nb))
    return GeneralGraph(tuple(adj))


def _bfs_distances(adj, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _visible_from(graph: GeneralGraph, X: frozenset[int], x: int) -> list[bool]:
    """For each y, whether x and y are X-visible.

    Walks the BFS layers from x; y is reached when a vertex one layer closer
    is reached and may serve as an interior vertex (it is x or lies outside X).
    """
    n = graph.n
    dist = [-1] * n
    dist[x] = 0
    order = [x]
    queue = deque([x])
    while queue:
        v = queue.popleft()
        for w in graph.adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                order.append(w)
                queue.append(w)
    if len(order) != n:
        raise DisconnectedGraph("graph is not connected")
    reach = [False] * n
    reach[x] = True
    for v in order[1:]:
        d = dist[v] - 1
        for p in graph.adj[v]:
            if dist[p] == d and reach[p] and (p == x or p not in X):
                reach[v] = True
                break
    return reach


def _check_ids(graph: GeneralGraph, ids: Iterable[int]) -> frozenset[int]:
    ids = frozenset(ids)
    for v in ids:
        if not 0 <= v < graph.n:
            raise InvalidInput(f"vertex {v} not in graph with {graph.n} vertices")
    return ids


def is_x_visible(graph: GeneralGraph, X: Iterable[int], x: int, y: int) -> bool:
    X = _check_ids(graph, X)
    _check_ids(graph, (x, y))
    return _visible_from(graph, X, x)[y]


def is_total_mv_set(graph: GeneralGraph, X: Iterable[int]) -> bool:
    """Every pair of vertices of the graph is X-visible."""
    X = _check_ids(graph, X)
    # pairs with both ends outside X are checked too; only the interior must avoid X
    return all(all(_visible_from(graph, X, x)) for x in range(graph.n))


def is_mv_set(graph: GeneralGraph, X: Iterable[int]) -> bool:
    """Every pair of members of X is X-visible."""
    X = _check_ids(graph, X)
    members = sorted(X)
    for x in members:
        reach = _visible_from(graph, X, x)
        if not all(reach[y] for y in members):
            return False
    return True


def _as_vertices(shape: HammingShape, X: Iterable[Sequence[int]]) -> list[Vertex]:
    return sorted({shape.check(v) for v in X})


def is_tmv_hamming(shape: HammingShape, X: Iterable[Sequence[int]]) -> bool:
    """No two members of X are at Hamming distance exactly 2."""
    members = _as_vertices(shape, X)
    for u, v in itertools.combinations(members, 2):
        if sum(a != b for a, b in zip(u, v)) == 2:
            return False
    return True


def distance2_pairs(shape: HammingShape, X: Iterable[Sequence[int]]) -> list[tuple[Vertex, Vertex]]:
    """The offending pairs, for diagnostics."""
    members = _as_vertices(shape, X)
    return [(u, v) for u, v in itertools.combinations(members, 2)
            if sum(a != b for a, b in zip(u, v)) == 2]


def is_square_suitable(square: CartesianSquare, X: Iterable[Sequence[int]]) -> bool:
    """X contains neither diametral pair of the square."""
    X = set(map(tuple, X))
    return not any(a in X and b in X for a, b in square.diametral_pairs)


def all_squares_suitable(shape: HammingShape, X: Iterable[Sequence[int]]) -> bool:
    """Every Cartesian square is X-suitable.

    Only squares through a member of X can fail, so those are the ones walked.
    """
    members = set(_as_vertices(shape, X))
    for u in members:
        for sq in squares_at(shape, u):
            if not is_square_suitable(sq, members):
                return False
    return True
