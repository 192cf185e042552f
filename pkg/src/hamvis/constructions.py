"""
Closed-form values, bounds and explicit total mutual-visibility sets.

Bounds are exact: integers or :class:`fractions.Fraction`, never floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from hamvis import rng
from hamvis.errors import CapExceeded, InvalidInput
from hamvis.hamming import HammingShape, Vertex

RANDOM_CAP = 10**7


def theorem1_value(n1: int, n2: int, n3: int) -> int:
    """Total mutual-visibility number of K_n1 x K_n2 x K_n3 (any factor order)."""
    if min(n1, n2, n3) < 1:
        raise InvalidInput("factor sizes must be >= 1")
    a, b, c = sorted((n1, n2, n3), reverse=True)
    if c == 1:
        return a
    N = a + b + c
    if c == 2:
        return N - 4
    if c == 3:
        return N - 5
    return N - 6


def _sorted_roles(sizes: Sequence[int]) -> list[int]:
    """Factor positions ordered by size descending, ties by position."""
    return sorted(range(len(sizes)), key=lambda k: (-sizes[k], k))


def construct_three_factor(n1: int, n2: int, n3: int) -> list[Vertex]:
    """An optimal set for K_n1 x K_n2 x K_n3, all sizes >= 2.

    Built for the sizes in descending order, then coordinates are put back
    in the caller's factor order.
    """
    sizes = (n1, n2, n3)
    if min(sizes) < 2:
        raise InvalidInput("three-factor construction needs every factor >= 2; use the two-factor construction")
    roles = _sorted_roles(sizes)
    a, b, c = (sizes[k] for k in roles)
    if c <= 3:
        pts = [(i, 1, 1) for i in range(2, a + 1)] + [(1, j, 2) for j in range(2, b + 1)]
    else:
        pts = ([(j, 1, 1) for j in range(3, a + 1)]
               + [(1, j, 2) for j in range(3, b + 1)]
               + [(2, 2, j) for j in range(3, c + 1)])
    out = []
    for p in pts:
        v = [0, 0, 0]
        for slot, k in enumerate(roles):
            v[k] = p[slot]
        out.append(tuple(v))
    return sorted(out)


def construct_two_factor(n: int, m: int) -> list[Vertex]:
    """One full layer of the larger factor; its members are pairwise adjacent."""
    if n < 1 or m < 1:
        raise InvalidInput("factor sizes must be >= 1")
    if n >= m:
        return [(i, 1) for i in range(1, n + 1)]
    return [(1, j) for j in range(1, m + 1)]


def construct(shape: HammingShape) -> list[Vertex]:
    """Best known explicit set for shapes with at most three nontrivial factors.

    Size-1 factors are dropped for the construction and reinserted as
    coordinate 1.
    """
    big = [k for k, n in enumerate(shape.sizes) if n > 1]
    sizes = [shape.sizes[k] for k in big]
    if len(sizes) == 0:
        core = [()]
    elif len(sizes) == 1:
        core = [(i,) for i in range(1, sizes[0] + 1)]
    elif len(sizes) == 2:
        core = construct_two_factor(*sizes)
    elif len(sizes) == 3:
        core = construct_three_factor(*sizes)
    else:
        raise InvalidInput(f"no explicit construction for {len(sizes)} nontrivial factors; try the randomized one")
    out = []
    for p in core:
        v = [1] * shape.r
        for k, c in zip(big, p):
            v[k] = c
        out.append(tuple(v))
    return sorted(out)


def _need_r3(r: int):
    if r < 3:
        raise InvalidInput(f"bound needs r >= 3, got r = {r}")


def upper_bound_general(shape: HammingShape) -> Fraction:
    """(6 / r!) * N**(r-2)."""
    _need_r3(shape.r)
    return Fraction(6, math.factorial(shape.r)) * shape.N ** (shape.r - 2)


def balanced_constant(r: int) -> int:
    """3 * prod_{i=3..r} (i-1)**(i-3)."""
    _need_r3(r)
    return 3 * math.prod((i - 1) ** (i - 3) for i in range(3, r + 1))


def upper_bound_balanced(s: int, r: int) -> int:
    if s < 1:
        raise InvalidInput("s must be >= 1")
    return balanced_constant(r) * s ** (r - 2)


def lower_bound_balanced(s: int, r: int) -> Fraction:
    """s**(r-2) / (r(r-1)), the guarantee of the deletion method."""
    _need_r3(r)
    return Fraction(s ** (r - 2), r * (r - 1))


def sample_probability(s: int, r: int) -> Fraction:
    return Fraction(2, r * (r - 1) * s * s)


def expected_sample_size(s: int, r: int) -> Fraction:
    return s**r * sample_probability(s, r)


def expected_bad_pairs_bound(s: int, r: int) -> Fraction:
    """Exact expected number of distance-2 pairs among the sampled vertices."""
    _need_r3(r)
    p = sample_probability(s, r)
    return math.comb(r, 2) * Fraction(s * s * (s - 1) ** 2, 2) * s ** (r - 2) * p * p


def bad_pairs_simplified_bound(s: int, r: int) -> Fraction:
    """The looser s**r * p / 2, half the expected sample size."""
    _need_r3(r)
    return expected_sample_size(s, r) / 2


@dataclass
class BoundsReport:
    shape: HammingShape
    normalized_shape: HammingShape
    theorem1_value: int | None = None
    two_factor_value: int | None = None
    upper_general: Fraction | None = None
    upper_balanced: int | None = None
    lower_balanced: Fraction | None = None


def bounds(shape: HammingShape) -> BoundsReport:
    """Every closed form that applies to ``shape``.

    ``r`` and ``N`` are taken from the shape as given, size-1 factors
    included.
    """
    normalized = HammingShape(tuple(sorted(shape.sizes, reverse=True)))
    rep = BoundsReport(shape, normalized)
    if shape.r == 2:
        rep.two_factor_value = max(shape.sizes)
    if shape.r == 3:
        rep.theorem1_value = theorem1_value(*shape.sizes)
    if shape.r >= 3:
        rep.upper_general = upper_bound_general(shape)
        if shape.is_balanced():
            s = shape.sizes[0]
            rep.upper_balanced = upper_bound_balanced(s, shape.r)
            rep.lower_balanced = lower_bound_balanced(s, shape.r)
    return rep


@dataclass
class RandomRunReport:
    shape: HammingShape
    seed: int
    p: Fraction
    sampled: int
    bad_pairs: int
    kept: int
    vertices: list[Vertex] = field(repr=False)
    expected_sampled: Fraction = Fraction(0)
    expected_bad_pairs: Fraction | None = None

    @property
    def s(self) -> int:
        return self.shape.sizes[0]

    @property
    def r(self) -> int:
        return self.shape.r


def _digits(shape: HammingShape, idx: np.ndarray) -> np.ndarray:
    """Zero-based coordinates of each index, one row per vertex."""
    out = np.empty((len(idx), shape.r), dtype=np.int64)
    rest = idx.astype(np.int64)
    for k, n in enumerate(shape.sizes):
        out[:, k] = rest % n
        rest = rest // n
    return out


def random_tmv_general(shape: HammingShape, p: Fraction, seed: int) -> RandomRunReport:
    """Sample every vertex with probability p, then delete one vertex per bad pair.

    Vertex k (mixed-radix order) is kept in the sample when the (k+1)-th
    SplitMix64 draw for ``seed`` falls below p * 2**64.  Bad pairs (sampled
    vertices at distance 2) are visited in lexicographic order of
    (smaller index, larger index); if both ends are still present the larger
    index is deleted.
    """
    V = shape.V
    if V > RANDOM_CAP:
        raise CapExceeded(f"shape {shape} has {V} vertices, cap is {RANDOM_CAP}")
    p = Fraction(p)
    idx = np.flatnonzero(rng.bernoulli_mask(seed, V, p))
    coords = _digits(shape, idx)
    bad = []
    for a in range(len(idx) - 1):
        dist = (coords[a + 1:] != coords[a]).sum(axis=1)
        bad.extend((a, a + 1 + int(b)) for b in np.flatnonzero(dist == 2))
    alive = [True] * len(idx)
    for a, b in bad:
        if alive[a] and alive[b]:
            alive[b] = False
    kept = [tuple(int(c) + 1 for c in coords[k]) for k in range(len(idx)) if alive[k]]
    return RandomRunReport(
        shape=shape,
        seed=seed,
        p=p,
        sampled=len(idx),
        bad_pairs=len(bad),
        kept=len(kept),
        vertices=kept,
        expected_sampled=V * p,
    )


def random_tmv(s: int, r: int, seed: int) -> RandomRunReport:
    """The deletion construction on K_s^r with p = 2 / (r(r-1)s^2)."""
    _need_r3(r)
    if s < 2:
        raise InvalidInput("s must be >= 2")
    rep = random_tmv_general(HammingShape((s,) * r), sample_probability(s, r), seed)
    rep.expected_bad_pairs = expected_bad_pairs_bound(s, r)
    return rep
