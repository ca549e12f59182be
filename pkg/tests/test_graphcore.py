import math
import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import poly
from spectral_bound.errors import DomainError
from spectral_bound.exactnum import EQ, IntPoly, compare, format_factorization, largest_real_root, sqrt, surd
from spectral_bound.graphcore import (
    Graph,
    Graph6Error,
    bipartite_double,
    cartesian_product,
    char_poly,
    circulant,
    complement,
    complete,
    complete_bipartite,
    count_eigs_greater,
    cycle,
    disjoint_union,
    distance_partition,
    drg_t,
    from_adjlist,
    from_graph6,
    girth,
    is_connected,
    is_drg_with_array,
    kneser,
    line_graph,
    min_eig,
    path,
    quotient,
    second_eig,
    spectral_radius,
    spectrum,
    star,
    subgraph_order_bound,
    three_part_lambda2,
    three_part_stats,
    to_adjlist,
    to_graph6,
)
from spectral_bound.graphcore.spectra import char_poly_cofactor
from spectral_bound.lpbound import TridiagParams, tridiag_matrix

PETERSEN = kneser(5, 2)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_regular(seed: int, n: int, k: int) -> Graph:
    return from_nx(nx.random_regular_graph(k, n, seed=seed))


# --- graph6 ---------------------------------------------------------------

def test_graph6_examples():
    assert to_graph6(complete(4)) == "C~"
    g = from_graph6("D~{")
    assert g.n == 5 and g.num_edges == 10
    assert to_graph6(from_graph6(">>graph6<<C~")) == "C~"


@pytest.mark.parametrize(
    "text,offset",
    [("C~~", 2), ("", 0), ("D~", 2), ("C}\x01", 2), ("~??", 3), ("Bx", 1)],
)
def test_graph6_errors(text, offset):
    with pytest.raises(Graph6Error) as info:
        from_graph6(text)
    assert info.value.offset == offset


def test_graph6_round_trip_random():
    rng = random.Random(20261017)
    for _ in range(1000):
        n = rng.randint(1, 40)
        g = random_graph(rng, n, rng.random())
        text = to_graph6(g)
        assert from_graph6(text) == g
        assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def test_graph6_long_form():
    g = cycle(100)
    text = to_graph6(g)
    assert text.startswith("~")
    assert from_graph6(text) == g
    assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def test_adjlist_round_trip():
    g = disjoint_union(cycle(4), complete(1))
    assert from_adjlist(to_adjlist(g)) == g
    assert from_adjlist("# comment\n0 1\n1 2\n").num_edges == 2
    with pytest.raises(ValueError, match="edge line"):
        from_adjlist("0 1 2\n")


# --- structure -------------------------------------------------------------

def test_girth_examples():
    assert girth(PETERSEN) == 5
    assert girth(oracles.heawood()) == 6
    assert girth(complete(4)) == 3
    assert girth(path(5)) == math.inf


def test_girth_matches_networkx():
    rng = random.Random(7)
    for _ in range(150):
        n = rng.randint(3, 16)
        g = random_graph(rng, n, rng.uniform(0.1, 0.5))
        expected = nx.girth(to_nx(g))
        assert girth(g) == expected


def test_constructions():
    assert line_graph(complete(4)).regularity() == 4
    assert bipartite_double(complete(4)) == bipartite_double(complete(4))
    assert bipartite_double(complete(4)).n == 8 and girth(bipartite_double(complete(4))) == 4
    h = cartesian_product(cycle(4), complete(2))
    assert h.n == 8 and h.regularity() == 3
    assert nx.is_isomorphic(to_nx(h), nx.hypercube_graph(3))
    assert nx.is_isomorphic(to_nx(PETERSEN), nx.petersen_graph())
    assert star(4).degrees() == [4, 1, 1, 1, 1]
    assert complement(complete(5)).num_edges == 0


def test_complement_line_graph_K2_12():
    g = complement(line_graph(complete_bipartite(2, 12)))
    assert g.n == 24 and g.regularity() == 11
    assert is_connected(g)
    assert second_eig(g) == 1


def test_circulant_and_kneser():
    ci = circulant(10, [1, 4])
    assert ci.regularity() == 4
    assert second_eig(ci) == surd(-1, 1, 5)
    o4 = kneser(7, 3)
    assert (o4.n, o4.regularity()) == (35, 4)
    assert second_eig(o4) == 2


# --- spectra ---------------------------------------------------------------

def test_char_poly_examples():
    assert char_poly(complete(4)) == poly(1, -3) * poly(1, 1) ** 3
    assert format_factorization(char_poly(PETERSEN)) == "(x-3)(x-1)^5(x+2)^4"
    assert spectrum(cycle(6)).eigenvalues() == [2, 1, 1, -1, -1, -2]


def test_char_poly_cap():
    with pytest.raises(ValueError, match="capped"):
        char_poly(cycle(257))


@pytest.mark.parametrize("n", range(1, 8))
def test_char_poly_matches_cofactor_oracle(n):
    rng = random.Random(n)
    for _ in range(25):
        g = random_graph(rng, n, rng.random())
        assert char_poly(g) == char_poly_cofactor(g.adjacency_matrix())


def test_char_poly_matches_sympy_on_larger_graphs():
    import sympy

    rng = random.Random(3)
    x = sympy.Symbol("x")
    for n in (12, 20, 30):
        g = random_graph(rng, n, 0.4)
        expected = sympy.Matrix(g.adjacency_matrix()).charpoly(x).all_coeffs()
        assert list(char_poly(g).coeffs) == [int(c) for c in reversed(expected)]


def test_second_eig_examples():
    assert second_eig(oracles.heawood()) == sqrt(2)
    assert second_eig(oracles.mcgee()) == 2
    assert count_eigs_greater(PETERSEN, 1) == 1
    assert count_eigs_greater(PETERSEN, Fraction(1, 2)) == 6
    assert count_eigs_greater(oracles.heawood(), sqrt(2)) == 1


def test_second_eig_disconnected():
    with pytest.raises(ValueError, match="define on components"):
        second_eig(disjoint_union(cycle(3), cycle(3)))


def test_spectral_radius_examples():
    assert spectral_radius(cycle(7)) == 2
    assert spectral_radius(star(4)) == 2
    assert spectral_radius(path(3)) == sqrt(2)
    assert min_eig(PETERSEN) == -2


def test_spectrum_multiplicities_sum_to_n():
    for g in (PETERSEN, oracles.heawood(), oracles.pappus(), circulant(10, [1, 4])):
        assert len(spectrum(g).eigenvalues()) == g.n
        assert spectrum(g).eigenvalues()[0] == g.regularity()


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 12))
def test_cauchy_interlacing(seed, n):
    rng = random.Random(seed)
    g = random_graph(rng, n, rng.uniform(0.2, 0.9))
    keep = sorted(rng.sample(range(n), rng.randint(2, n)))
    h = g.induced(keep)
    eg = spectrum(g).eigenvalues()
    eh = spectrum(h).eigenvalues()
    assert compare(eg[1], eh[1]) >= 0
    # full interlacing: eg[i] >= eh[i] >= eg[i + n - m]
    m = len(eh)
    for i in range(m):
        assert compare(eg[i], eh[i]) >= 0
        assert compare(eh[i], eg[i + n - m]) >= 0


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([(8, 3), (10, 3), (12, 3), (9, 4), (10, 4), (12, 5)]))
def test_quotient_interlacing(seed, nk):
    n, k = nk
    g = random_regular(seed, n, k)
    rng = random.Random(seed)
    nparts = rng.randint(2, 4)
    labels = list(range(nparts)) + [rng.randrange(nparts) for _ in range(n - nparts)]
    rng.shuffle(labels)
    parts = [[v for v in range(n) if labels[v] == i] for i in range(nparts)]
    q = quotient(g, parts)
    assert all(sum(row) == k for row in q.B)
    eq = q.eigenvalues()
    eg = spectrum(g).eigenvalues()
    for i in range(nparts):
        assert compare(eg[i], eq[i]) >= 0
        assert compare(eq[i], eg[i + n - nparts]) >= 0


def test_quotient_examples():
    q = quotient(PETERSEN, distance_partition(PETERSEN, 0))
    assert q.equitable
    assert [list(r) for r in q.B] == tridiag_matrix(TridiagParams(3, 3, Fraction(1)))
    q = quotient(complete(4), [[0], [1, 2, 3]])
    assert [list(r) for r in q.B] == [[0, 3], [1, 2]]
    with pytest.raises(DomainError):
        quotient(complete(4), [[0, 1, 2, 3], []])
    with pytest.raises(DomainError):
        quotient(complete(4), [[0, 1], [1, 2, 3]])


def test_three_part_matches_quotient():
    # cubic graph on 8 vertices; H is a triangle, Gamma_1 = {3,4,5}, Gamma_>=2 = {6,7}
    g = Graph.from_edges(8, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5), (3, 4),
                             (3, 6), (4, 7), (5, 6), (5, 7), (6, 7)])
    assert g.regularity() == 3
    layers = distance_partition(g, [0, 1, 2])
    assert [len(p) for p in layers] == [3, 3, 2]
    q = quotient(g, layers)
    assert compare(q.second_eig(), three_part_lambda2(*_three_part_params(q))) == EQ


def _three_part_params(q):
    B = q.B
    return B[0][0], B[2][2], B[1][0], B[1][2]


def test_three_part_girth3_value():
    assert three_part_lambda2(2, Fraction(8, 3), Fraction(3, 2), Fraction(1, 2)) == surd(Fraction(4, 3), Fraction(1, 3), 13)


def test_three_part_examples():
    assert three_part_lambda2(2, 1, 1, 1) == surd(Fraction(1, 2), Fraction(1, 2), 5)
    assert three_part_lambda2(2, 2, 2, 1) == 2
    for a in range(1, 6):
        assert three_part_lambda2(a, a, a, a) == a
        for c in range(1, 4):
            assert three_part_lambda2(a, a, c, c) == a
    st_ = three_part_stats(2, 1, 1, 1)
    assert st_.Delta == 5
    with pytest.raises(DomainError, match="discriminant"):
        three_part_lambda2(3, 0, 2, -1)


def test_subgraph_order_bound_examples():
    assert subgraph_order_bound(3, sqrt(2), 3, 3) == surd(Fraction(60, 7), Fraction(6, 7), 2)
    assert abs(float(subgraph_order_bound(3, sqrt(2), 3, 3)) - 9.78) < 0.01
    assert subgraph_order_bound(3, Fraction(19, 10), 3, 3) == Fraction(126, 11)
    for k in range(2, 10):
        assert subgraph_order_bound(k, 0, 1, 0) == 2 * k
    with pytest.raises(DomainError):
        subgraph_order_bound(3, 3, 3, 3)
    with pytest.raises(DomainError):
        subgraph_order_bound(3, 1, 3, 4)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([(10, 3), (12, 3), (14, 3), (16, 3), (10, 4), (12, 4), (14, 5)]))
def test_subh1_conclusion(seed, nk):
    n, k = nk
    g = random_regular(seed, n, k)
    if not is_connected(g):
        return
    lam = second_eig(g)
    rng = random.Random(seed)
    for _ in range(10):
        H = sorted(rng.sample(range(n), rng.randint(2, n // 2)))
        h = g.induced(H)
        if compare(Fraction(2 * h.num_edges, h.n), lam) < 0:
            continue
        layers = distance_partition(g, H)
        far = [v for layer in layers[2:] for v in layer]
        if not far:
            continue
        K = g.induced(far)
        assert compare(Fraction(2 * K.num_edges, K.n), lam) <= 0


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([(8, 3), (10, 3), (12, 3), (10, 4), (11, 4), (12, 5)]))
def test_complement_identity(seed, nk):
    n, k = nk
    g = random_regular(seed, n, k)
    h = complement(g)
    if not is_connected(g) or not is_connected(h):
        return
    assert compare(second_eig(h), -1 - min_eig(g)) == EQ


def test_drg_examples():
    heawood = oracles.heawood()
    assert is_drg_with_array(heawood, 3) and drg_t(heawood, 3) == 4
    assert is_drg_with_array(PETERSEN, 1) and drg_t(PETERSEN, 1) == 3
    assert is_drg_with_array(complete_bipartite(3, 3), 3) and drg_t(complete_bipartite(3, 3), 3) == 3
    assert not is_drg_with_array(PETERSEN, 2)
    assert not is_drg_with_array(oracles.pappus(), 3)
    assert drg_t(cycle(6), 1) is None
    assert is_drg_with_array(cycle(6), 2)
    with pytest.raises(DomainError):
        is_drg_with_array(path(4), 1)


def test_oracle_graphs_against_networkx():
    assert nx.is_isomorphic(to_nx(oracles.heawood()), nx.heawood_graph())
    assert nx.is_isomorphic(to_nx(oracles.pappus()), nx.pappus_graph())
    assert nx.is_isomorphic(to_nx(oracles.tutte_coxeter()), nx.LCF_graph(30, [-13, -9, 7, -7, 9, 13], 5))
