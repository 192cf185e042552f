"""
Line-oriented ``key value`` documents and the files built on them.

A document is one ``key value`` pair per line, keys in a fixed order.  Blank
lines and lines starting with ``#`` are ignored when reading.  Vertices are
written as 1-indexed tuples ``(2,1,1)``; rationals as ``p/q``.

Set file::

    shape 2,3,4
    vertices (1,1,1) (1,2,1) (2,3,2)

For a graph given as an edge list the vertices are plain 1-indexed integers.

Family file::

    shape 4,3,2
    cliques (2,1,1) (1,2,2)

Edge list: a header ``n m`` followed by ``m`` lines ``u v``, 1-indexed.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from hamvis.conflict import SolveCertificate
from hamvis.errors import InvalidInput
from hamvis.hamming import HammingShape, Vertex, format_vertex, parse_vertex
from hamvis.visibility import GeneralGraph

_TUPLE = re.compile(r"\([^()]*\)")


def render(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, HammingShape):
        return str(value)
    if isinstance(value, (list, tuple)) and value and isinstance(value[0], tuple):
        return " ".join(format_vertex(v) for v in value)
    if isinstance(value, (list, tuple)):
        return " ".join(map(str, value))
    return str(value)


def write_doc(pairs: Iterable[tuple[str, object]]) -> str:
    """Render pairs in the given order; ``None`` values are left out."""
    lines = []
    for key, value in pairs:
        if value is None:
            continue
        text = render(value)
        lines.append(f"{key} {text}" if text else key)
    return "\n".join(lines) + "\n"


def read_doc(text: str) -> dict[str, str]:
    doc: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition(" ")
        if key in doc:
            raise InvalidInput(f"line {lineno}: duplicate key {key!r}")
        doc[key] = value.strip()
    return doc


def _require(doc: dict[str, str], key: str) -> str:
    if key not in doc:
        raise InvalidInput(f"missing field {key!r}")
    return doc[key]


def parse_bool(text: str) -> bool:
    if text not in ("true", "false"):
        raise InvalidInput(f"expected true or false, got {text!r}")
    return text == "true"


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"bad rational {text!r}") from exc


def parse_tuples(text: str) -> list[Vertex]:
    found = _TUPLE.findall(text)
    leftover = _TUPLE.sub(" ", text).strip()
    if leftover:
        raise InvalidInput(f"unexpected text {leftover!r} in tuple list")
    return [parse_vertex(t) for t in found]


def write_set(shape: HammingShape, vertices: Sequence[Vertex]) -> str:
    return write_doc([("shape", shape), ("vertices", sorted(vertices) or "")])


def read_set(text: str) -> tuple[HammingShape | None, list]:
    """Return (shape, members); members are tuples, or 0-based ints without a shape."""
    doc = read_doc(text)
    body = doc.get("vertices", "")
    if "shape" in doc:
        shape = HammingShape.parse(doc["shape"])
        return shape, [shape.check(v) for v in parse_tuples(body)]
    try:
        members = [int(t) - 1 for t in body.split()]
    except ValueError as exc:
        raise InvalidInput("vertices of a set without shape must be integers") from exc
    if any(v < 0 for v in members):
        raise InvalidInput("graph vertices are 1-indexed")
    return None, members


def write_family(shape: HammingShape, cliques: Sequence[tuple[int, ...]], valid: bool | None = None) -> str:
    return write_doc([("shape", shape), ("valid", valid), ("cliques", sorted(cliques) or "")])


def read_family(text: str) -> tuple[HammingShape, list[tuple[int, ...]]]:
    doc = read_doc(text)
    shape = HammingShape.parse(_require(doc, "shape"))
    return shape, parse_tuples(doc.get("cliques", ""))


def certificate_pairs(cert: SolveCertificate, timing: bool = True) -> list[tuple[str, object]]:
    return [
        ("shape", cert.shape),
        ("value", cert.value),
        ("optimal", cert.optimal),
        ("witness", list(cert.witness) or ""),
        ("nodes", cert.nodes),
        ("millis", cert.millis if timing else None),
    ]


def write_certificate(cert: SolveCertificate, timing: bool = True) -> str:
    return write_doc(certificate_pairs(cert, timing))


def read_certificate(text: str) -> SolveCertificate:
    doc = read_doc(text)
    shape = HammingShape.parse(_require(doc, "shape"))
    try:
        return SolveCertificate(
            shape=shape,
            value=int(_require(doc, "value")),
            optimal=parse_bool(_require(doc, "optimal")),
            witness=[shape.check(v) for v in parse_tuples(doc.get("witness", ""))],
            nodes=int(doc.get("nodes", 0)),
            millis=int(doc.get("millis", 0)),
        )
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc


def read_edge_list(text: str) -> GeneralGraph:
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not rows:
        raise InvalidInput("empty edge list")
    try:
        n, m = map(int, rows[0])
        edges = [(int(a) - 1, int(b) - 1) for a, b in rows[1:]]
    except ValueError as exc:
        raise InvalidInput("edge list needs header 'n m' and lines 'u v'") from exc
    if len(edges) != m:
        raise InvalidInput(f"header announces {m} edges, found {len(edges)}")
    return GeneralGraph.from_edges(n, edges)


def write_edge_list(graph: GeneralGraph) -> str:
    edges = [(a + 1, b + 1) for a in range(graph.n) for b in sorted(graph.adj[a]) if a < b]
    return "\n".join([f"{graph.n} {len(edges)}", *(f"{a} {b}" for a, b in edges)]) + "\n"
