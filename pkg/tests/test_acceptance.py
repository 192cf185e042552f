"""Exit criteria.  A PASS/FAIL line per test is printed after the run."""

import itertools
import math
import statistics
import time
from fractions import Fraction

import numpy as np

from conftest import FIG1_SET, FIG1_SHAPE, subsets
from hamvis.conflict import brute_force_mut, build_conflict_graph, conflict_edge_count, mut_exact
from hamvis.constructions import (
    construct_three_factor,
    expected_bad_pairs_bound,
    lower_bound_balanced,
    random_tmv,
    theorem1_value,
    upper_bound_balanced,
)
from hamvis.hamming import HammingShape
from hamvis.turan import clique_family_to_tmv, is_valid_clique_family, tmv_to_clique_family
from hamvis.visibility import all_squares_suitable, hamming_graph, is_tmv_hamming, is_total_mv_set


def shapes_up_to(limit):
    """Factor sizes >= 2, non-increasing, with product <= limit."""
    out = []

    def grow(prefix, prod, top):
        if prefix:
            out.append(tuple(prefix))
        for n in range(2, top + 1):
            if prod * n <= limit:
                grow(prefix + [n], prod * n, n)

    grow([], 1, limit)
    return out


def test_c01_three_factor_table():
    total = time.monotonic()
    shapes = [(a, b, c) for a in range(2, 6) for b in range(2, a + 1) for c in range(2, b + 1)]
    assert len(shapes) == 20
    for sizes in shapes:
        t = time.monotonic()
        cert = mut_exact(HammingShape(sizes))
        assert cert.optimal
        assert cert.value == theorem1_value(*sizes), sizes
        N = sum(sizes)
        assert cert.value == {2: N - 4, 3: N - 5}.get(sizes[2], N - 6)
        assert time.monotonic() - t < 10
    assert time.monotonic() - total < 180


def test_c02_named_instances():
    t = time.monotonic()
    assert mut_exact(HammingShape((2, 2, 2))).value == 2
    assert mut_exact(HammingShape((3, 3, 2))).value == 4
    shape = HammingShape(FIG1_SHAPE)
    assert mut_exact(shape).value == 5
    assert len(FIG1_SET) == 5
    assert is_total_mv_set(hamming_graph(shape), [shape.encode(v) for v in FIG1_SET])
    assert is_tmv_hamming(shape, FIG1_SET)
    assert time.monotonic() - t < 5


def test_c03_two_factor_law():
    t = time.monotonic()
    for n in range(2, 9):
        for m in range(2, 9):
            cert = mut_exact(HammingShape((n, m)))
            assert cert.optimal and cert.value == max(n, m), (n, m)
    assert time.monotonic() - t < 30


def test_c04_equivalence_exhaustive():
    t = time.monotonic()
    shape = HammingShape((2, 2, 3))
    g = hamming_graph(shape)
    verts = list(shape.vertices())
    count = 0
    for ids in subsets(shape.V):
        X = [verts[i] for i in ids]
        a = is_total_mv_set(g, ids)
        assert a == is_tmv_hamming(shape, X) == all_squares_suitable(shape, X), X
        count += 1
    assert count == 4096
    assert time.monotonic() - t < 60


def test_c05_solver_vs_brute():
    t = time.monotonic()
    shapes = shapes_up_to(16)
    for must in [(2, 2, 2), (2, 2, 3), (2, 2, 4), (2, 2, 2, 2), (4, 4), (2, 8)]:
        assert tuple(sorted(must, reverse=True)) in shapes
    for sizes in shapes:
        shape = HammingShape(sizes)
        assert brute_force_mut(shape) == mut_exact(shape).value, sizes
    assert time.monotonic() - t < 120


def test_c06_construction_suite():
    t = time.monotonic()
    for n1 in range(2, 13):
        for n2 in range(2, n1 + 1):
            for n3 in range(2, n2 + 1):
                X = construct_three_factor(n1, n2, n3)
                assert is_tmv_hamming(HammingShape((n1, n2, n3)), X)
                assert len(set(X)) == theorem1_value(n1, n2, n3)
    assert time.monotonic() - t < 10


def _trials():
    return [random_tmv(10, 3, seed) for seed in range(1, 501)]


def test_c07a_random_all_valid():
    t = time.monotonic()
    reports = _trials()
    assert all(is_tmv_hamming(rep.shape, rep.vertices) for rep in reports)
    assert time.monotonic() - t < 60


def test_c07b_random_mean_kept_at_least_15():
    mean = statistics.mean(rep.kept for rep in _trials())
    print(f"mean |S*| = {mean:.3f}; guarantee s^(r-2)/(r(r-1)) = {float(lower_bound_balanced(10, 3)):.3f}")
    assert mean >= 15.0


def test_c07c_random_bad_pairs_within_3se():
    bad = [rep.bad_pairs for rep in _trials()]
    mean = statistics.mean(bad)
    se = statistics.stdev(bad) / math.sqrt(len(bad))
    assert mean <= expected_bad_pairs_bound(10, 3) + 3 * se


def test_c08_bijection():
    t = time.monotonic()
    shape = HammingShape((2, 2, 2))
    verts = list(shape.vertices())
    for ids in subsets(shape.V):
        X = [verts[i] for i in ids]
        fam = tmv_to_clique_family(shape, X)
        assert clique_family_to_tmv(fam) == sorted(X)
        assert is_valid_clique_family(fam) == is_tmv_hamming(shape, X)
    shape = HammingShape((4, 4, 3))
    verts = list(shape.vertices())
    gen = np.random.default_rng(8)
    for _ in range(1000):
        X = [verts[i] for i in gen.choice(shape.V, size=gen.integers(0, 12), replace=False)]
        fam = tmv_to_clique_family(shape, X)
        assert clique_family_to_tmv(fam) == sorted(X)
        assert is_valid_clique_family(fam) == is_tmv_hamming(shape, X)
    assert time.monotonic() - t < 30


def _pairs_at_distance_2(shape):
    coords = np.array(list(shape.vertices()))
    total = 0
    for a in range(len(coords) - 1):
        total += int(((coords[a + 1:] != coords[a]).sum(axis=1) == 2).sum())
    return total


def test_c09_counting_and_structure():
    t = time.monotonic()
    for sizes in shapes_up_to(200):
        shape = HammingShape(sizes)
        assert conflict_edge_count(shape) == _pairs_at_distance_2(shape), sizes
    g = build_conflict_graph(HammingShape((2, 2, 2)))
    seen, comps = set(), []
    for s in range(g.n):
        if s not in seen:
            comp, stack = {s}, [s]
            while stack:
                v = stack.pop()
                for w in range(g.n):
                    if g.adj[v] >> w & 1 and w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(comp)
    assert len(comps) == 2
    for comp in comps:
        assert len(comp) == 4
        assert all(g.adj[a] >> b & 1 for a, b in itertools.combinations(comp, 2))
    assert time.monotonic() - t < 10


def test_c10_bound_sandwich():
    t = time.monotonic()
    for s in (3, 4, 5):
        value = mut_exact(HammingShape((s, s, s))).value
        assert lower_bound_balanced(s, 3) <= value <= upper_bound_balanced(s, 3) == 3 * s
        assert value == (4 if s == 3 else 3 * s - 6)
    assert lower_bound_balanced(3, 3) == Fraction(1, 2)
    assert time.monotonic() - t < 30
