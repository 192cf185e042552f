import itertools

import pytest

from hamvis.conflict import (
    ConflictGraph,
    SolveOptions,
    brute_force_mut,
    build_conflict_graph,
    conflict_edge_count,
    export_dimacs,
    max_independent_set,
    mut_exact,
)
from hamvis.errors import CapExceeded
from hamvis.hamming import HammingShape, distance2_degree
from hamvis.visibility import hamming_graph, is_tmv_hamming, is_total_mv_set


def enumerate_pairs(shape):
    return sum(1 for u, v in itertools.combinations(shape.vertices(), 2)
               if sum(a != b for a, b in zip(u, v)) == 2)


def components(g):
    seen, comps = set(), []
    for s in range(g.n):
        if s in seen:
            continue
        comp, stack = {s}, [s]
        while stack:
            v = stack.pop()
            for w in range(g.n):
                if g.adj[v] >> w & 1 and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(sorted(comp))
    return comps


def test_edge_count_examples():
    assert conflict_edge_count(HammingShape((2, 2, 2))) == 12
    assert conflict_edge_count(HammingShape((3, 3, 3))) == 162
    assert conflict_edge_count(HammingShape((7,))) == 0
    # balanced closed form C(r,2) s^2 (s-1)^2 / 2 s^(r-2)
    for s, r in [(3, 3), (4, 4), (10, 5)]:
        assert conflict_edge_count(HammingShape((s,) * r)) == r * (r - 1) // 2 * s * s * (s - 1) ** 2 // 2 * s ** (r - 2)


def test_build_examples():
    g = build_conflict_graph(HammingShape((2, 2, 2)))
    assert (g.n, g.edge_count) == (8, 12)
    comps = components(g)
    assert len(comps) == 2
    parity = lambda i: sum(HammingShape((2, 2, 2)).decode(i)) % 2  # noqa: E731
    for comp in comps:
        assert len(comp) == 4 and len({parity(i) for i in comp}) == 1
        assert all(g.adj[a] >> b & 1 for a, b in itertools.combinations(comp, 2))
    assert build_conflict_graph(HammingShape((6,))).edge_count == 0
    g = build_conflict_graph(HammingShape((3, 3)))
    assert g.n == 9 and g.edge_count == 18
    assert all(row.bit_count() == 4 for row in g.adj)
    assert list(g.edges())[0] == (0, 4)


@pytest.mark.parametrize("sizes", [(2, 2, 2), (4, 3, 2), (3, 3, 3), (2, 2, 2, 2), (5, 4), (6, 5, 3)])
def test_regular_and_counted(sizes):
    shape = HammingShape(sizes)
    g = build_conflict_graph(shape)
    assert all(row.bit_count() == distance2_degree(shape) for row in g.adj)
    assert g.edge_count == conflict_edge_count(shape) == enumerate_pairs(shape)


def test_cap():
    with pytest.raises(CapExceeded):
        build_conflict_graph(HammingShape((10, 10, 10)), cap=999)
    with pytest.raises(CapExceeded):
        brute_force_mut(HammingShape((5, 5, 3)))


def test_mis_examples():
    cert = mut_exact(HammingShape((2, 2, 2)))
    assert cert.value == 2 and cert.optimal
    edgeless = ConflictGraph(HammingShape((5,)), (0,) * 5)
    assert max_independent_set(edgeless).value == 5
    assert mut_exact(HammingShape((4, 3, 2))).value == 5


@pytest.mark.parametrize("sizes,value", [((3, 3, 2), 4), ((4, 4, 4), 6), ((5, 3), 5), ((2, 7), 7), ((4, 1, 3), 4)])
def test_mut_exact_values(sizes, value):
    cert = mut_exact(HammingShape(sizes))
    assert cert.value == value and cert.optimal
    assert len(cert.witness) == value and is_tmv_hamming(cert.shape, cert.witness)


@pytest.mark.parametrize("sizes,value", [((2, 2, 2), 2), ((2, 2), 2), ((2, 2, 3), 3), ((1, 1), 1)])
def test_brute_examples(sizes, value):
    assert brute_force_mut(HammingShape(sizes)) == value


def test_brute_dfs_branch():
    # 24 and 27 vertices go through the pruned search rather than the subset table
    assert brute_force_mut(HammingShape((4, 3, 2))) == 5
    assert brute_force_mut(HammingShape((3, 3, 3))) == mut_exact(HammingShape((3, 3, 3))).value


@pytest.mark.parametrize("sizes", [(4, 3, 2), (3, 3, 3), (2, 2, 2, 2), (4, 4), (3, 2, 2, 2)])
def test_witness_passes_generic_checker(sizes):
    shape = HammingShape(sizes)
    cert = mut_exact(shape)
    g = hamming_graph(shape)
    assert is_total_mv_set(g, [shape.encode(v) for v in cert.witness])


@pytest.mark.parametrize("sizes", [(4, 3, 2), (3, 3, 2, 2), (5, 3, 2)])
def test_permutation_symmetry(sizes):
    values = {mut_exact(HammingShape(p)).value for p in set(itertools.permutations(sizes))}
    assert len(values) == 1


def test_determinism_and_options():
    shape = HammingShape((4, 4, 3))
    runs = [mut_exact(shape, SolveOptions(threads=t)) for t in (1, 1, 4)]
    assert len({(c.value, tuple(c.witness), c.nodes) for c in runs}) == 1
    sym = mut_exact(shape, SolveOptions(symmetry=True))
    assert sym.value == runs[0].value and (1, 1, 1) in sym.witness


@pytest.mark.parametrize("sizes", [(5, 5, 4), (3, 3, 3, 2), (2, 2, 2, 2, 2), (4, 4, 2)])
def test_symmetry_flag_agrees(sizes):
    shape = HammingShape(sizes)
    assert mut_exact(shape, SolveOptions(symmetry=True)).value == mut_exact(shape).value


def test_timeout_returns_incumbent():
    shape = HammingShape((3, 3, 3, 3, 3))
    cert = mut_exact(shape, SolveOptions(timeout=0.05))
    assert cert.optimal is False
    assert cert.value == len(cert.witness) > 0
    assert is_tmv_hamming(shape, cert.witness)


def test_dimacs():
    g = build_conflict_graph(HammingShape((2, 2, 2)))
    text = export_dimacs(g)
    lines = [line for line in text.splitlines() if not line.startswith("c")]
    assert lines[0] == "p edge 8 12"
    edges = {tuple(map(int, line.split()[1:])) for line in lines[1:]}
    assert edges == {(i + 1, j + 1) for i, j in g.edges()}
    comp = [line for line in export_dimacs(g, complement=True).splitlines() if not line.startswith("c")]
    assert comp[0] == "p edge 8 16"
    assert edges.isdisjoint({tuple(map(int, line.split()[1:])) for line in comp[1:]})
    assert "p edge 3 0" in export_dimacs(build_conflict_graph(HammingShape((3,))))
