import itertools
import random

import networkx as nx
import pytest

from cliquemax.canon import (
    CanonSizeError, are_isomorphic, canonical_form, canonize,
)
from cliquemax.enumeration import (
    DegreeMode, EnumerationConfig, EnumerationTask, enumerate_graphs, is_connected, run_task, split_tasks,
)
from cliquemax.graph import (
    Graph, all_labeled_graphs, complement, complete, complete_bipartite, cycle, empty, max_degree, min_degree,
    path, relabel,
)
from cliquemax.graph6 import Graph6Error, graph6_decode, graph6_encode, read_graph6_lines, write_graph6_lines
from conftest import random_graph, to_networkx

# Isomorphism classes of n-vertex graphs with max degree <= D (index D) and
# min degree >= d (index d), counted by labeled brute force plus networkx
# isomorphism dedup.
ORACLE_MAX = {
    1: [1], 2: [1, 2], 3: [1, 2, 4], 4: [1, 3, 7, 11], 5: [1, 3, 11, 23, 34],
    6: [1, 4, 19, 62, 122, 156],
}
ORACLE_MIN = {n: row[::-1] for n, row in ORACLE_MAX.items()}
TOTAL = [1, 1, 2, 4, 11, 34, 156, 1044, 12346]


def random_perm(n, rng):
    p = list(range(n))
    rng.shuffle(p)
    return p


# -- canonical forms -----------------------------------------------------------

def test_canonical_examples(rng):
    assert canonical_form(cycle(5)) == canonical_form(complement(cycle(5)))
    k24 = complete_bipartite(2, 4)
    c = canonical_form(k24)
    assert all(canonical_form(relabel(k24, random_perm(6, rng))) == c for _ in range(100))
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert canonical_form(path(4)) != canonical_form(star)


def test_certificate_distinguishes_classes_n7():
    certs = [canonical_form(g).certificate for g in enumerate_graphs(EnumerationConfig(7))]
    assert len(set(certs)) == len(certs) == 1044


def test_certificate_is_invariant_random(rng):
    for _ in range(100):
        n = rng.randint(1, 16)
        g = random_graph(n, rng.random(), rng)
        h = relabel(g, random_perm(n, rng))
        assert canonical_form(g) == canonical_form(h)
        assert are_isomorphic(g, h)


def test_canon_agrees_with_networkx(rng):
    for _ in range(150):
        n = rng.randint(4, 9)
        g, h = random_graph(n, 0.5, rng), random_graph(n, 0.5, rng)
        assert are_isomorphic(g, h) == nx.is_isomorphic(to_networkx(g), to_networkx(h))


def test_hard_symmetric_graphs():
    petersen = Graph.from_edges(10, list(nx.petersen_graph().edges()))
    res = canonize(petersen)
    assert len({res.orbits[v] for v in range(10)}) == 1
    for g in (complete(16), empty(16), cycle(16), complete_bipartite(8, 8)):
        assert canonical_form(relabel(g, list(reversed(range(16))))) == canonical_form(g)
    with pytest.raises(CanonSizeError):
        canonical_form(empty(17))


def test_orbits_match_brute_force(rng):
    for _ in range(40):
        n = rng.randint(1, 7)
        g = random_graph(n, rng.random(), rng)
        orbit = {v: {v} for v in range(n)}
        for p in itertools.permutations(range(n)):
            if relabel(g, p) == g:
                for v in range(n):
                    orbit[v].add(p[v])
        res = canonize(g)
        for u, v in itertools.combinations(range(n), 2):
            assert (res.orbits[u] == res.orbits[v]) == (v in orbit[u])


# -- graph6 --------------------------------------------------------------------

def test_graph6_examples():
    assert graph6_encode(empty(1)) == "@"
    assert graph6_encode(complete(2)) == "A_"
    assert graph6_decode("A_") == complete(2)
    assert graph6_decode(">>graph6<<A_") == complete(2)
    assert graph6_encode(empty(0)) == "?"


def test_graph6_round_trip(rng):
    for _ in range(1000):
        n = rng.randint(0, 20)
        g = random_graph(n, rng.random(), rng)
        s = graph6_encode(g)
        assert graph6_decode(s) == g
        assert graph6_encode(graph6_decode(s)) == s


def test_graph6_matches_networkx(rng):
    for _ in range(100):
        g = random_graph(rng.randint(1, 30), 0.4, rng)
        ours = graph6_encode(g)
        theirs = nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
        assert ours == theirs


@pytest.mark.parametrize("bad", ["", "A", "A__", "A\x7f", "~??"])
def test_graph6_malformed(bad):
    with pytest.raises(Graph6Error):
        graph6_decode(bad)


def test_graph6_size_overflow():
    with pytest.raises(Graph6Error):
        graph6_encode(empty(63))


def test_graph6_files(tmp_path):
    gs = list(enumerate_graphs(EnumerationConfig(4)))
    p = tmp_path / "g.g6"
    with p.open("w") as fh:
        assert write_graph6_lines(fh, gs) == 11
    with p.open() as fh:
        assert list(read_graph6_lines(fh)) == gs


# -- enumeration ---------------------------------------------------------------

def test_total_counts():
    for n in range(0, 9):
        assert sum(1 for _ in enumerate_graphs(EnumerationConfig(n))) == TOTAL[n]


@pytest.mark.parametrize("n", range(1, 7))
def test_degree_filters_match_oracle(n):
    for d in range(n):
        maxed = list(enumerate_graphs(EnumerationConfig.max_degree(n, d)))
        mined = list(enumerate_graphs(EnumerationConfig.min_degree(n, d)))
        assert len(maxed) == ORACLE_MAX[n][d]
        assert len(mined) == ORACLE_MIN[n][d]
        assert all(max_degree(g) <= d for g in maxed)
        assert all(min_degree(g) >= d for g in mined)


@pytest.mark.parametrize("n", range(1, 6))
def test_certificate_dedup_oracle(n):
    for d in range(n):
        labeled = {canonical_form(g) for g in all_labeled_graphs(n) if max_degree(g) <= d}
        assert len(labeled) == ORACLE_MAX[n][d]
        assert {canonical_form(g) for g in enumerate_graphs(EnumerationConfig.max_degree(n, d))} == labeled


def test_max_degree_two_on_five():
    gs = list(enumerate_graphs(EnumerationConfig.max_degree(5, 2)))
    assert len(gs) == 11
    assert sum(1 for g in gs if is_connected(g)) == 2  # P5 and C5


def test_edge_count_and_connected_filters():
    seven = list(enumerate_graphs(EnumerationConfig(6, edge_count=7)))
    assert all(g.edge_count() == 7 for g in seven)
    assert len(seven) == 24
    conn = list(enumerate_graphs(EnumerationConfig(6, connected_only=True)))
    assert len(conn) == 112 and all(is_connected(g) for g in conn)


def test_no_duplicates_in_filtered_streams():
    for config in (EnumerationConfig.max_degree(8, 3), EnumerationConfig.min_degree(7, 3)):
        certs = [canonical_form(g) for g in enumerate_graphs(config)]
        assert len(certs) == len(set(certs))


def test_stream_is_deterministic():
    a = [graph6_encode(g) for g in enumerate_graphs(EnumerationConfig.max_degree(7, 3))]
    b = [graph6_encode(g) for g in enumerate_graphs(EnumerationConfig.max_degree(7, 3))]
    assert a == b


def test_config_validation():
    with pytest.raises(ValueError):
        EnumerationConfig.max_degree(4, 4)
    with pytest.raises(ValueError):
        EnumerationConfig(17)
    c = EnumerationConfig.min_degree(8, 5)
    assert c.degree_mode is DegreeMode.MIN_AT_LEAST and c.complemented
    assert EnumerationConfig.from_dict(c.as_dict()) == c


@pytest.mark.parametrize("depth", [0, 1, 3, 5, 7])
def test_split_tasks_partition(depth):
    config = EnumerationConfig(7)
    full = [graph6_encode(g) for g in enumerate_graphs(config)]
    tasks = split_tasks(config, depth)
    parts = [[graph6_encode(g) for g in run_task(t)] for t in tasks]
    merged = [s for p in parts for s in p]
    assert len(merged) == len(set(merged))
    assert sorted(merged) == sorted(full)
    if depth == 0:
        assert len(tasks) == 1 and merged == full


def test_split_tasks_with_filters():
    config = EnumerationConfig.min_degree(8, 4)
    full = sorted(graph6_encode(g) for g in enumerate_graphs(config))
    merged = sorted(graph6_encode(g) for t in split_tasks(config, 4) for g in run_task(t))
    assert merged == full


def test_infeasible_task_is_empty():
    # a prefix of degree 3 cannot grow under a max-degree-2 constraint
    task = EnumerationTask(graph6_encode(complete(4)), EnumerationConfig.max_degree(6, 2))
    assert list(run_task(task)) == []
