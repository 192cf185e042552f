"""
Transversal clique families of the complete multipartite graph.

A vertex (z1, ..., zr) of the Hamming graph corresponds to the r-clique
{u_{1,z1}, ..., u_{r,zr}} of K_{n1,...,nr}, one vertex per partite class.
Two vertices are at distance 2 exactly when their cliques share r-2
vertices, so total mutual-visibility sets correspond to families in which no
two cliques meet in r-2 vertices.  Read as edges of the complete r-partite
r-graph, such a family is one avoiding F_r, the pair of edges meeting in
r-2 vertices.

A clique is stored canonically as its tuple of element indices ordered by
class, 1-indexed, so it coincides with the vertex tuple.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from hamvis.conflict import SolveCertificate, SolveOptions, mut_exact
from hamvis.errors import InvalidInput
from hamvis.hamming import HammingShape, Vertex

Clique = tuple[int, ...]


@dataclass(frozen=True)
class CliqueFamily:
    shape: HammingShape
    cliques: frozenset[Clique]

    def __len__(self):
        return len(self.cliques)

    def members(self) -> list[Clique]:
        return sorted(self.cliques)

    def as_vertex_sets(self) -> list[frozenset[tuple[int, int]]]:
        """Each clique as a set of (class, element) pairs."""
        return [frozenset(enumerate(c, start=1)) for c in self.members()]


def make_family(shape: HammingShape, cliques: Iterable[Sequence[int]]) -> CliqueFamily:
    """Build a family, checking every member picks one element per class."""
    checked = set()
    for c in cliques:
        c = tuple(c)
        if len(c) != shape.r:
            raise InvalidInput(f"clique {c} is not transversal: needs one element for each of {shape.r} classes")
        for k, (e, n) in enumerate(zip(c, shape.sizes), start=1):
            if not 1 <= e <= n:
                raise InvalidInput(f"clique {c}: element {e} not in class {k} of size {n}")
        checked.add(c)
    return CliqueFamily(shape, frozenset(checked))


def _need_r3(shape: HammingShape):
    if shape.r < 3:
        raise InvalidInput(f"clique families need r >= 3, shape {shape} has r = {shape.r}")


def tmv_to_clique_family(shape: HammingShape, X: Iterable[Sequence[int]]) -> CliqueFamily:
    _need_r3(shape)
    return CliqueFamily(shape, frozenset(shape.check(v) for v in X))


def clique_family_to_tmv(family: CliqueFamily) -> list[Vertex]:
    _need_r3(family.shape)
    return sorted(family.shape.check(c) for c in family.cliques)


def shared_classes(a: Clique, b: Clique) -> int:
    """Size of the intersection of two transversal cliques."""
    return sum(x == y for x, y in zip(a, b))


def is_valid_clique_family(family: CliqueFamily) -> bool:
    """No two members meet in exactly r-2 vertices."""
    r = family.shape.r
    for c in family.cliques:
        if len(c) != r or any(not 1 <= e <= n for e, n in zip(c, family.shape.sizes)):
            return False
    return all(shared_classes(a, b) != r - 2 for a, b in itertools.combinations(family.cliques, 2))


def ex_fr(shape: HammingShape, opts: SolveOptions | None = None) -> tuple[int, CliqueFamily, SolveCertificate]:
    """Largest F_r-free edge set of the complete r-partite r-graph.

    Returns the value, an extremal family and the underlying certificate.
    """
    _need_r3(shape)
    cert = mut_exact(shape, opts)
    return cert.value, tmv_to_clique_family(shape, cert.witness), cert
