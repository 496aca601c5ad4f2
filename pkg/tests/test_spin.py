"""Spin-structure counting on dual graphs."""

import itertools
import random

import pytest

from dptheta import spin
from dptheta.spin import DualGraph


def brute_even_subsets(graph):
    """Oracle: test all 2^m edge subsets directly (m <= 12)."""
    m = len(graph.edges)
    out = []
    for k in range(m + 1):
        for combo in itertools.combinations(range(m), k):
            if spin.is_even_subset(graph, combo):
                out.append(combo)
    return tuple(sorted(out))


def random_graph(rng):
    """A random connected stable dual graph with at most 10 edges."""
    while True:
        nv = rng.randint(1, 4)
        genera = [rng.randint(0, 2) for _ in range(nv)]
        ne = rng.randint(max(0, nv - 1), 10)
        edges = [tuple(sorted((rng.randrange(nv), rng.randrange(nv))))
                 for _ in range(ne)]
        try:
            return DualGraph(genera, edges)
        except ValueError:
            continue


def test_single_node_irreducible():
    g = DualGraph([2], [(0, 0)])
    scheme = spin.spin_scheme(g)
    by_delta = {s.delta: s for s in scheme}
    assert by_delta[()].count == 16 and by_delta[()].multiplicity == 2
    assert by_delta[(0,)].count == 32 and by_delta[(0,)].multiplicity == 1
    assert sum(s.count * s.multiplicity for s in scheme) == 64


def test_banana_graph():
    g = DualGraph([1, 1], [(0, 1), (0, 1)])
    scheme = spin.spin_scheme(g)
    assert sum(s.count * s.multiplicity for s in scheme) == 64
    deltas = {s.delta for s in scheme}
    assert deltas == {(), (0, 1)}


def test_smooth_counts():
    assert spin.theta_counts(2) == (6, 10)
    assert spin.theta_counts(3) == (28, 36)
    assert spin.theta_counts(0) == (0, 1)


GENUS3_TABLE = {
    # nodes -> rows of (resolved, count, multiplicity, odd, even)
    0: [(0, 64, 1, 28, 36)],
    1: [(0, 32, 1, 16, 16), (1, 16, 2, 6, 10)],
    2: [(0, 16, 1, 8, 8), (1, 16, 2, 8, 8), (2, 4, 4, 1, 3)],
    3: [(0, 8, 1, 4, 4), (1, 12, 2, 6, 6), (2, 6, 4, 3, 3),
        (3, 1, 8, 0, 1)],
}


def test_genus3_table():
    for n, expected in GENUS3_TABLE.items():
        rows = spin.spin_table_irreducible(3, n)
        got = [(r.resolved, r.count, r.multiplicity, r.odd, r.even)
               for r in rows]
        assert got == expected


def test_table_degree_identity():
    for g in (2, 3, 4, 5):
        for n in range(g + 1):
            rows = spin.spin_table_irreducible(g, n)
            assert sum(r.count * r.multiplicity for r in rows) == 4 ** g
            assert sum(r.odd + r.even for r in rows) \
                == sum(r.count for r in rows)


def test_even_subsets_against_brute_force():
    rng = random.Random(11)
    for _ in range(50):
        g = random_graph(rng)
        assert spin.even_subsets(g) == brute_even_subsets(g)


def test_random_graph_properties():
    """Total degree 2^{2g} and subset count 2^{b1} on a 200-graph corpus."""
    rng = random.Random(5)
    for _ in range(200):
        g = random_graph(rng)
        subsets = spin.even_subsets(g)
        assert len(subsets) == 2 ** spin.betti(len(g.genera), g.edges)
        total = sum(s.count * s.multiplicity for s in spin.spin_scheme(g))
        assert total == 4 ** g.genus


def test_multiplicity_is_power_of_two():
    rng = random.Random(23)
    for _ in range(30):
        g = random_graph(rng)
        for s in spin.spin_scheme(g):
            assert s.multiplicity & (s.multiplicity - 1) == 0


def test_graph_validation():
    with pytest.raises(ValueError):
        DualGraph([1, 1], [])  # disconnected
    with pytest.raises(ValueError):
        DualGraph([0, 2], [(0, 1)])  # unstable genus-0 vertex
    with pytest.raises(ValueError):
        DualGraph([1], [])  # arithmetic genus < 2
    with pytest.raises(ValueError):
        DualGraph([2], [(0, 1)])  # edge endpoint out of range


def test_parse_graph():
    g = spin.parse_graph("# comment\nv 2\ne 0 0\n")
    assert g.genera == (2,) and g.edges == ((0, 0),)
    with pytest.raises(ValueError):
        spin.parse_graph("v 1\nv 1\nz 0 1\n")
    with pytest.raises(ValueError):
        spin.parse_graph("e 0 1\n")
