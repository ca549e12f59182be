from collections import defaultdict
from fractions import Fraction
from itertools import chain, combinations

import networkx as nx
import numpy as np
import pytest

from spectral_bound.errors import DomainError
from spectral_bound.exactnum import IntPoly, compare, largest_real_root, sqrt, surd
from spectral_bound.graphcore import Graph, from_graph6, girth, is_connected, second_eig
from spectral_bound.search import (
    HOOKS,
    SearchSpec,
    canonical_graph6,
    effective_girth,
    enumerate_graphs,
    find_extremal,
    is_isomorphic,
)
from spectral_bound.search.canon import canonical_graph

CUBIC = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509, 16: 4060}
QUARTIC = {5: 1, 6: 1, 7: 2, 8: 6, 9: 16, 10: 59, 11: 265, 12: 1544}


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def nx_classes(graphs):
    """Group into isomorphism classes with networkx, bucketed by the WL hash."""
    buckets = defaultdict(list)
    for g in graphs:
        h = to_nx(g) if isinstance(g, Graph) else g
        # WL colour refinement cannot split regular graphs, so bucket by the float spectrum too
        spec = tuple(np.round(np.linalg.eigvalsh(nx.to_numpy_array(h)), 6))
        key = (nx.weisfeiler_lehman_graph_hash(h, iterations=4), spec)
        for rep in buckets[key]:
            if nx.is_isomorphic(rep, h):
                break
        else:
            buckets[key].append(h)
    return [h for reps in buckets.values() for h in reps]


def naive_regular(n, k):
    """All labelled k-regular graphs on n vertices by degree-constrained backtracking."""
    pairs = list(combinations(range(n), 2))
    deg = [0] * n
    chosen = []

    def rec(i):
        if i == len(pairs):
            if all(d == k for d in deg):
                yield list(chosen)
            return
        u, v = pairs[i]
        # vertex u sees no further pairs once v reaches n-1; prune if it cannot be completed
        if deg[u] < k and deg[v] < k:
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            yield from rec(i + 1)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        if deg[u] + (n - 1 - v) < k:
            return  # u cannot reach degree k from its remaining pairs
        yield from rec(i + 1)

    for edges in rec(0):
        yield Graph.from_edges(n, edges)


@pytest.mark.parametrize("n,k", [(4, 3), (6, 3), (8, 3), (5, 4), (6, 4), (7, 4), (8, 4)])
def test_counts_match_naive_oracle(n, k):
    labelled = [g for g in naive_regular(n, k) if is_connected(g)]
    expected = len(nx_classes(labelled))
    res = enumerate_graphs(SearchSpec(k, n, n, mode="collect"))
    assert res.counts_by_n[n] == expected
    assert len(res.graphs[n]) == expected


def test_known_counts():
    res = enumerate_graphs(SearchSpec(3, 4, 16))
    assert {n: c for n, c in res.counts_by_n.items() if c} == CUBIC
    res = enumerate_graphs(SearchSpec(4, 5, 12))
    assert {n: c for n, c in res.counts_by_n.items() if c} == QUARTIC


@pytest.mark.parametrize("n", [10, 12, 14, 16])
def test_cubic_isomorph_free(n):
    res = enumerate_graphs(SearchSpec(3, n, n, mode="collect"))
    graphs = [from_graph6(s) for s in res.graphs[n]]
    assert all(g.regularity() == 3 and is_connected(g) for g in graphs)
    assert len(nx_classes(graphs)) == len(graphs) == CUBIC[n]


@pytest.mark.parametrize("n", [8, 9, 10, 11, 12])
def test_quartic_isomorph_free(n):
    res = enumerate_graphs(SearchSpec(4, n, n, mode="collect"))
    graphs = [from_graph6(s) for s in res.graphs[n]]
    assert len(nx_classes(graphs)) == len(graphs) == QUARTIC[n]


def _powerset(items):
    items = sorted(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def test_hook_subsets_agree():
    lam = Fraction(19, 10)
    reference = None
    for hooks in _powerset(HOOKS):
        res = enumerate_graphs(SearchSpec(3, 4, 16, lambda2_max=lam, mode="collect", hooks=frozenset(hooks)))
        got = {n: sorted(gs) for n, gs in res.graphs.items()}
        if reference is None:
            reference = got
        assert got == reference, hooks
    # the unpruned run checks every graph exactly
    for n, gs in reference.items():
        for s in gs:
            assert compare(second_eig(from_graph6(s)), lam) <= 0


def test_lambda_filter_matches_exact_filter():
    lam = sqrt(3)
    pruned = enumerate_graphs(SearchSpec(3, 14, 14, lambda2_max=lam, mode="collect"))
    everything = enumerate_graphs(SearchSpec(3, 14, 14, mode="collect"))
    exact = sorted(s for s in everything.graphs[14] if compare(second_eig(from_graph6(s)), lam) <= 0)
    assert pruned.graphs[14] == exact
    lower = enumerate_graphs(SearchSpec(3, 14, 14, lambda2_min=lam, mode="collect"))
    assert len(lower.graphs[14]) + len(exact) == CUBIC[14]


@pytest.mark.parametrize("jobs", [1, 4, 8])
def test_deterministic_across_workers(jobs):
    spec = SearchSpec(3, 16, 16, lambda2_max=Fraction(19, 10), mode="collect", split_depth=6)
    base = enumerate_graphs(spec, jobs=1)
    res = enumerate_graphs(spec, jobs=jobs)
    assert res.graphs == base.graphs
    assert res.counts_by_n == base.counts_by_n
    assert res.scanned_by_n == base.scanned_by_n


def test_split_depth_does_not_change_results():
    a = enumerate_graphs(SearchSpec(4, 11, 11, mode="collect", split_depth=0))
    b = enumerate_graphs(SearchSpec(4, 11, 11, mode="collect", split_depth=5))
    assert a.graphs == b.graphs


def test_girth_six_on_18_vertices():
    res = enumerate_graphs(SearchSpec(3, 18, 18, girth_exact=6, mode="collect"))
    assert res.counts_by_n[18] == 5
    graphs = [from_graph6(s) for s in res.graphs[18]]
    assert all(girth(g) == 6 for g in graphs)
    low = sorted((second_eig(g) for g in graphs if compare(second_eig(g), Fraction(19, 10)) <= 0),
                 key=float)
    assert len(low) == 2
    assert low[0] == sqrt(3)
    gamma = largest_real_root(IntPoly([-6, -4, 2, 1]))
    assert compare(low[1], gamma) == 0
    windowed = enumerate_graphs(SearchSpec(3, 18, 18, girth_exact=6, lambda2_max=Fraction(19, 10)))
    assert windowed.counts_by_n[18] == 2


def test_girth_min_versus_exact():
    exact = enumerate_graphs(SearchSpec(3, 14, 14, girth_exact=5)).counts_by_n[14]
    at_least = enumerate_graphs(SearchSpec(3, 14, 14, girth_min=5)).counts_by_n[14]
    at_least6 = enumerate_graphs(SearchSpec(3, 14, 14, girth_min=6)).counts_by_n[14]
    assert at_least6 == 1  # Heawood
    assert exact + at_least6 == at_least


def test_find_extremal_cubic():
    res = find_extremal(3, sqrt(2))
    assert res.max_order == 14
    assert len(res.graphs[14]) == 1
    from spectral_bound.catalog import build

    assert is_isomorphic(from_graph6(res.graphs[14][0]), build("heawood"))
    res = find_extremal(3, 1)
    assert res.max_order == 10 and len(res.graphs[10]) == 1
    assert is_isomorphic(from_graph6(res.graphs[10][0]), build("petersen"))


def test_find_extremal_quartic():
    res = find_extremal(4, surd(-1, 1, 5))
    assert res.max_order == 12
    assert [w["lambda2"] for w in res.witnesses] == ["-1+sqrt(5)"] * len(res.witnesses) or all(
        compare(second_eig(from_graph6(w["graph6"])), surd(-1, 1, 5)) <= 0 for w in res.witnesses
    )


def test_find_extremal_refuses_large_bounds():
    with pytest.raises(DomainError, match="exceeds"):
        find_extremal(3, sqrt(6))


def test_effective_girth_example():
    spec = SearchSpec(3, 14, 14, lambda2_max=sqrt(2))
    # triangles force at most 60/7 + 6/7 sqrt(2) < 10 vertices, so girth 3 is pruned at n = 14
    assert effective_girth(spec, 14) > 3
    plain = SearchSpec(3, 14, 14, lambda2_max=sqrt(2), hooks=frozenset())
    assert effective_girth(plain, 14) == 3
    assert effective_girth(SearchSpec(3, 8, 8, girth_min=6), 8) is None


def test_spec_validation():
    with pytest.raises(DomainError):
        SearchSpec(3, 4, 70)
    with pytest.raises(DomainError):
        SearchSpec(3, 8, 4)
    with pytest.raises(DomainError):
        SearchSpec(3, 4, 8, connected_only=False)
    with pytest.raises(DomainError):
        SearchSpec(3, 4, 8, hooks=frozenset({"magic"}))
    with pytest.raises(DomainError):
        SearchSpec(3, 4, 8, mode="sample")


def test_odd_orders_warn():
    res = enumerate_graphs(SearchSpec(3, 5, 7))
    assert res.counts_by_n == {5: 0, 6: 2, 7: 0}
    assert any("odd" in w for w in res.warnings)


def test_canonical_form_is_invariant():
    import random

    rng = random.Random(1)
    res = enumerate_graphs(SearchSpec(3, 12, 12, mode="collect"))
    for s in res.graphs[12][:40]:
        g = from_graph6(s)
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_graph6(g.relabel(perm)) == canonical_graph6(g)
        assert nx.is_isomorphic(to_nx(canonical_graph(g)), to_nx(g))


def test_canonical_rejects_large_graphs():
    from spectral_bound.graphcore import cycle

    with pytest.raises(DomainError):
        canonical_graph6(cycle(65))


def test_result_json_shape():
    res = find_extremal(3, 1)
    d = res.to_dict()
    assert d["max_order"] == 10 and d["witnesses"][0]["n"] == 10
    assert d["spec"]["mode"] == "extremal"
