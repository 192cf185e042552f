"""
Hamming graphs K_{n1} x ... x K_{nr} handled purely by coordinate arithmetic.

Vertices are tuples of 1-indexed coordinates, ``(i1, ..., ir)`` with
``1 <= ik <= nk``.  Every vertex also has a mixed-radix index in
``[0, V)``; the first coordinate is the least significant digit, so for
shape (4, 3, 2) the vertex (2, 1, 1) has index 1 and (1, 1, 2) has index 12.

Nothing here builds adjacency lists, so shapes with around a million
vertices stay cheap to address.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from hamvis.errors import InvalidInput

Vertex = tuple[int, ...]


@dataclass(frozen=True)
class HammingShape:
    """Factor sizes of a Hamming graph, in the caller's order."""

    sizes: tuple[int, ...]
    _weights: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _order: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        sizes = tuple(int(n) for n in self.sizes)
        if not sizes:
            raise InvalidInput("shape needs at least one factor")
        if any(n < 1 for n in sizes):
            raise InvalidInput(f"factor sizes must be >= 1, got {sizes}")
        weights = []
        w = 1
        for n in sizes:
            weights.append(w)
            w *= n
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "_weights", tuple(weights))
        object.__setattr__(self, "_order", w)

    @classmethod
    def parse(cls, text: str) -> "HammingShape":
        """Parse a literal such as ``4,3,2``."""
        parts = [p.strip() for p in text.strip().strip("()[]").split(",")]
        try:
            return cls(tuple(int(p) for p in parts if p))
        except ValueError as exc:
            raise InvalidInput(f"bad shape literal {text!r}") from exc

    @property
    def r(self) -> int:
        return len(self.sizes)

    @property
    def N(self) -> int:
        return sum(self.sizes)

    @property
    def V(self) -> int:
        return self._order

    def __str__(self):
        return ",".join(map(str, self.sizes))

    def reduced(self) -> "HammingShape":
        """Drop factors of size 1 (K1 is the unit of the Cartesian product)."""
        kept = tuple(n for n in self.sizes if n > 1)
        return HammingShape(kept or (1,))

    def is_balanced(self) -> bool:
        return len(set(self.sizes)) == 1

    def check(self, v: Sequence[int]) -> Vertex:
        """Validate ``v`` against the shape and return it as a tuple."""
        v = tuple(v)
        if len(v) != self.r:
            raise InvalidInput(f"vertex {v} has {len(v)} coordinates, shape {self} needs {self.r}")
        for c, n in zip(v, self.sizes):
            if not 1 <= c <= n:
                raise InvalidInput(f"vertex {v} out of range for shape {self}")
        return v

    def encode(self, v: Sequence[int]) -> int:
        v = self.check(v)
        return sum((c - 1) * w for c, w in zip(v, self._weights))

    def decode(self, index: int) -> Vertex:
        if not 0 <= index < self._order:
            raise InvalidInput(f"index {index} out of range [0, {self._order})")
        out = []
        for n in self.sizes:
            index, digit = divmod(index, n)
            out.append(digit + 1)
        return tuple(out)

    def vertices(self) -> Iterator[Vertex]:
        """All vertices in index order."""
        for rev in itertools.product(*(range(1, n + 1) for n in reversed(self.sizes))):
            yield rev[::-1]


def parse_vertex(text: str) -> Vertex:
    """Parse a literal such as ``(2,1,1)``."""
    m = re.fullmatch(r"\s*\(?\s*([0-9\s,]+?)\s*\)?\s*", text)
    if not m:
        raise InvalidInput(f"bad vertex literal {text!r}")
    try:
        return tuple(int(p) for p in m.group(1).split(",") if p.strip())
    except ValueError as exc:
        raise InvalidInput(f"bad vertex literal {text!r}") from exc


def format_vertex(v: Sequence[int]) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def hamming_distance(shape: HammingShape, u: Sequence[int], v: Sequence[int]) -> int:
    u = shape.check(u)
    v = shape.check(v)
    return sum(a != b for a, b in zip(u, v))


def interval(shape: HammingShape, u: Sequence[int], v: Sequence[int]) -> set[Vertex]:
    """All vertices lying on some shortest u,v-path."""
    u = shape.check(u)
    v = shape.check(v)
    choices = [(a,) if a == b else (a, b) for a, b in zip(u, v)]
    return set(itertools.product(*choices))


def interval_is_hypercube(shape: HammingShape, u: Sequence[int], v: Sequence[int]) -> bool:
    """Check that I[u,v] induces a t-cube, t = d(u,v)."""
    t = hamming_distance(shape, u, v)
    cells = sorted(interval(shape, u, v))
    if len(cells) != 2**t:
        return False
    adj = {w: [x for x in cells if sum(a != b for a, b in zip(w, x)) == 1] for w in cells}
    if any(len(nb) != t for nb in adj.values()):
        return False
    if sum(len(nb) for nb in adj.values()) != 2 * (2 ** (t - 1) * t if t else 0):
        return False
    seen = {cells[0]}
    stack = [cells[0]]
    while stack:
        w = stack.pop()
        for x in adj[w]:
            if x not in seen:
                seen.add(x)
                stack.append(x)
    return len(seen) == len(cells)


@dataclass(frozen=True)
class CartesianSquare:
    """A 4-cycle u, u1, u2, u3 varying only in positions i < j (0-based).

    The diametral pairs are (u, u2) and (u1, u3).
    """

    u: Vertex
    u1: Vertex
    u2: Vertex
    u3: Vertex
    i: int
    j: int

    @property
    def vertices(self) -> tuple[Vertex, Vertex, Vertex, Vertex]:
        return (self.u, self.u1, self.u2, self.u3)

    @property
    def diametral_pairs(self) -> tuple[tuple[Vertex, Vertex], tuple[Vertex, Vertex]]:
        return ((self.u, self.u2), (self.u1, self.u3))


def make_square(u: Vertex, i: int, j: int, a: int, b: int) -> CartesianSquare:
    """Square spanned at ``u`` by new values ``a`` at position i and ``b`` at j."""
    if i > j:
        i, j, a, b = j, i, b, a
    u1 = u[:j] + (b,) + u[j + 1:]
    u2 = u1[:i] + (a,) + u1[i + 1:]
    u3 = u[:i] + (a,) + u[i + 1:]
    return CartesianSquare(u, u1, u2, u3, i, j)


def cartesian_squares_through(shape: HammingShape, u: Sequence[int], v: Sequence[int]) -> list[CartesianSquare]:
    """The Cartesian square having u and v as a diametral pair.

    In a Hamming graph there is exactly one, so the list has length 1.
    """
    u = shape.check(u)
    v = shape.check(v)
    diff = [k for k in range(shape.r) if u[k] != v[k]]
    if len(diff) != 2:
        raise InvalidInput(f"{format_vertex(u)} and {format_vertex(v)} are at distance {len(diff)}, not 2")
    i, j = diff
    return [make_square(u, i, j, v[i], v[j])]


def squares_at(shape: HammingShape, u: Sequence[int]) -> Iterator[CartesianSquare]:
    """Every Cartesian square containing ``u``, each yielded once."""
    u = shape.check(u)
    for i, j in itertools.combinations(range(shape.r), 2):
        for a in range(1, shape.sizes[i] + 1):
            if a == u[i]:
                continue
            for b in range(1, shape.sizes[j] + 1):
                if b != u[j]:
                    yield make_square(u, i, j, a, b)


def distance2_degree(shape: HammingShape) -> int:
    """Number of vertices at distance exactly 2 from any fixed vertex."""
    m = [n - 1 for n in shape.sizes]
    return sum(a * b for a, b in itertools.combinations(m, 2))


def distance2_neighbours(shape: HammingShape, index: int) -> Iterator[int]:
    """Indices of all vertices at distance exactly 2 from vertex ``index``."""
    digits = []
    rest = index
    for n in shape.sizes:
        rest, d = divmod(rest, n)
        digits.append(d)
    w = shape._weights
    for i, j in itertools.combinations(range(shape.r), 2):
        base = index - digits[i] * w[i] - digits[j] * w[j]
        for a in range(shape.sizes[i]):
            if a == digits[i]:
                continue
            base_a = base + a * w[i]
            for b in range(shape.sizes[j]):
                if b != digits[j]:
                    yield base_a + b * w[j]
