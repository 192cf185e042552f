"""
Exact total mutual-visibility numbers via maximum independent set.

The conflict graph of a shape joins two vertices when they are at Hamming
distance 2.  Its independent sets are the total mutual-visibility sets, so
the total mutual-visibility number is its independence number.

Adjacency is kept as Python integers used as bitsets.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from math import prod

from hamvis.errors import CapExceeded, InvalidInput
from hamvis.hamming import HammingShape, Vertex, distance2_degree, distance2_neighbours

DEFAULT_CAP = 5000


@dataclass(frozen=True)
class ConflictGraph:
    shape: HammingShape
    adj: tuple[int, ...]  # adj[i] has bit j set iff d(i, j) == 2

    @property
    def n(self) -> int:
        return len(self.adj)

    def edges(self):
        """Edges (i, j), i < j, in lexicographic order."""
        for i, row in enumerate(self.adj):
            row >>= i + 1
            j = i + 1
            while row:
                if row & 1:
                    yield i, j
                row >>= 1
                j += 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2


@dataclass
class SolveOptions:
    timeout: float | None = None  # seconds; None means no limit
    threads: int = 1
    symmetry: bool = False  # fix vertex (1,...,1) into the solution
    cap: int = DEFAULT_CAP


@dataclass
class SolveCertificate:
    shape: HammingShape
    value: int
    witness: list[Vertex]
    optimal: bool
    nodes: int = 0
    millis: int = 0
    method: str = "bb"
    extra: dict = field(default_factory=dict)


def conflict_edge_count(shape: HammingShape) -> int:
    """Number of unordered vertex pairs at distance 2."""
    return prod(shape.sizes) * distance2_degree(shape) // 2


def build_conflict_graph(shape: HammingShape, cap: int = DEFAULT_CAP) -> ConflictGraph:
    if shape.V > cap:
        raise CapExceeded(f"shape {shape} has {shape.V} vertices, cap is {cap}")
    adj = []
    for i in range(shape.V):
        row = 0
        for j in distance2_neighbours(shape, i):
            row |= 1 << j
        adj.append(row)
    return ConflictGraph(shape, tuple(adj))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Timeout(Exception):
    pass


class _Search:
    """Branch and bound over relabelled vertices.

    Vertices are relabelled so that bit order is the static order (degree
    descending, index ascending).  At every node the candidates are covered
    greedily by cliques of the conflict graph; a vertex in the k-th clique can
    extend the current set by at most k, which is the pruning bound.  Vertices
    are branched on from the highest clique number down: include it, then
    exclude it and continue.
    """

    def __init__(self, adj: list[int], deadline: float | None):
        self.adj = adj
        self.deadline = deadline
        self.best: list[int] = []
        self.nodes = 0

    def cover(self, cand: int) -> list[tuple[int, int]]:
        adj = self.adj
        out = []
        k = 0
        rest = cand
        while rest:
            k += 1
            pool = rest
            while pool:
                low = pool & -pool
                v = low.bit_length() - 1
                rest ^= low
                out.append((v, k))
                pool &= adj[v]
                pool &= rest
        return out

    def expand(self, current: list[int], cand: int):
        self.nodes += 1
        if self.deadline is not None and not self.nodes & 0x3FF and time.monotonic() > self.deadline:
            raise _Timeout
        if not cand:
            if len(current) > len(self.best):
                self.best = list(current)
            return
        adj = self.adj
        order = self.cover(cand)
        base = len(current)
        for v, k in reversed(order):
            if base + k <= len(self.best):
                return
            bit = 1 << v
            current.append(v)
            self.expand(current, cand & ~adj[v] & ~bit)
            current.pop()
            cand &= ~bit


def _greedy(adj: list[int], n: int) -> list[int]:
    chosen = []
    cand = (1 << n) - 1
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        chosen.append(v)
        cand &= ~adj[v] & ~low
    return chosen


def max_independent_set(g: ConflictGraph, opts: SolveOptions | None = None) -> SolveCertificate:
    """Exact maximum independent set of the conflict graph.

    On timeout the best set found so far is returned with ``optimal=False``.
    ``opts.threads`` is accepted for interface compatibility; the search runs
    in a single worker, which keeps the witness independent of it.
    """
    opts = opts or SolveOptions()
    if g.n > opts.cap:
        raise CapExceeded(f"conflict graph has {g.n} vertices, cap is {opts.cap}")
    if opts.threads < 1:
        raise InvalidInput("threads must be >= 1")
    start = time.monotonic()
    n = g.n
    degree = [row.bit_count() for row in g.adj]
    perm = sorted(range(n), key=lambda i: (-degree[i], i))  # new label -> old index
    pos = {old: new for new, old in enumerate(perm)}
    adj = []
    for old in perm:
        row = 0
        for j in _bits(g.adj[old]):
            row |= 1 << pos[j]
        adj.append(row)

    deadline = None if opts.timeout is None else start + opts.timeout
    search = _Search(adj, deadline)
    full = (1 << n) - 1
    search.best = _greedy(adj, n)
    optimal = True
    try:
        if opts.symmetry and n:
            # vertex-transitive: some maximum set contains the origin
            root = pos[0]
            search.expand([root], full & ~adj[root] & ~(1 << root))
        else:
            search.expand([], full)
    except _Timeout:
        optimal = False
    witness_idx = sorted(perm[v] for v in search.best)
    return SolveCertificate(
        shape=g.shape,
        value=len(witness_idx),
        witness=[g.shape.decode(i) for i in witness_idx],
        optimal=optimal,
        nodes=search.nodes,
        millis=int((time.monotonic() - start) * 1000),
        method="bb",
    )


def mut_exact(shape: HammingShape, opts: SolveOptions | None = None) -> SolveCertificate:
    opts = opts or SolveOptions()
    return max_independent_set(build_conflict_graph(shape, opts.cap), opts)


def brute_force_mut(shape: HammingShape) -> int:
    """Independent oracle: exhaustive search, conflicts taken from raw distances.

    Up to 20 vertices every subset is examined; up to 64 a plain
    include/exclude search with only a size bound is used.
    """
    V = shape.V
    if V > 64:
        raise CapExceeded(f"brute force supports at most 64 vertices, shape {shape} has {V}")
    verts = list(itertools.product(*(range(n) for n in reversed(shape.sizes))))
    adj = [0] * V
    for i, j in itertools.combinations(range(V), 2):
        if sum(a != b for a, b in zip(verts[i], verts[j])) == 2:
            adj[i] |= 1 << j
            adj[j] |= 1 << i

    if V <= 20:
        independent = bytearray(1 << V)
        independent[0] = 1
        size = [0] * (1 << V)
        best = 0
        for mask in range(1, 1 << V):
            low = mask & -mask
            v = low.bit_length() - 1
            rest = mask ^ low
            if independent[rest] and not adj[v] & rest:
                independent[mask] = 1
                size[mask] = size[rest] + 1
                if size[mask] > best:
                    best = size[mask]
        return best

    best = 0

    def dfs(count: int, cand: int):
        nonlocal best
        if count + cand.bit_count() <= best:
            return
        if not cand:
            best = count
            return
        low = cand & -cand
        v = low.bit_length() - 1
        dfs(count + 1, cand & ~adj[v] & ~low)
        dfs(count, cand & ~low)

    dfs(0, (1 << V) - 1)
    return best


def export_dimacs(g: ConflictGraph, complement: bool = False) -> str:
    """DIMACS edge format, vertices 1-indexed in mixed-radix order.

    With ``complement`` the complement graph is written, whose maximum
    cliques are the maximum independent sets of ``g``.
    """
    n = g.n
    if complement:
        full = (1 << n) - 1
        rows = [full & ~row & ~(1 << i) for i, row in enumerate(g.adj)]
    else:
        rows = list(g.adj)
    lines = []
    for i, row in enumerate(rows):
        for j in _bits(row >> (i + 1)):
            lines.append(f"e {i + 1} {i + j + 2}")
    header = f"p edge {n} {len(lines)}"
    comment = f"c conflict graph of shape {g.shape}{' (complement)' if complement else ''}"
    return "\n".join([comment, header, *lines]) + "\n"
