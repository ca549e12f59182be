import json
from fractions import Fraction
from itertools import product

import jsonschema
import networkx as nx
import pytest

import oracles
from spectral_bound.catalog import (
    SUPPORTED_Q,
    FiniteField,
    build,
    certify_attainment,
    certify_entry,
    entry,
    established_value,
    export,
    names,
    v_k_1,
)
from spectral_bound.catalog.constructions import complement_line_K2m, gq_incidence, pg_incidence
from spectral_bound.catalog.data import GRAPH6
from spectral_bound.catalog.registry import FAMILIES
from spectral_bound.catalog.table import (
    PUBLISHED,
    extended_range_rows,
    summary_table,
    verify_row,
)
from spectral_bound.errors import CertificationError, DomainError
from spectral_bound.exactnum import compare, parse_scalar, sqrt, surd
from spectral_bound.graphcore import (
    Graph,
    cycle,
    from_graph6,
    girth,
    is_connected,
    kneser,
    second_eig,
    to_graph6,
)
from spectral_bound.schemas import SCHEMAS
from spectral_bound.search.canon import is_isomorphic


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@pytest.mark.parametrize("q", SUPPORTED_Q)
def test_field_axioms(q):
    F = FiniteField(q)
    els = list(F.elements)
    for a, b in product(els, repeat=2):
        assert F.add[a][b] == F.add[b][a]
        assert F.mul[a][b] == F.mul[b][a]
    for a, b, c in product(els, repeat=3):
        assert F.add[F.add[a][b]][c] == F.add[a][F.add[b][c]]
        assert F.mul[F.mul[a][b]][c] == F.mul[a][F.mul[b][c]]
        assert F.mul[a][F.add[b][c]] == F.add[F.mul[a][b]][F.mul[a][c]]
    for a in els:
        assert F.add[a][0] == a and F.mul[a][1] == a
        assert F.add[a][F.neg(a)] == 0
        if a:
            assert F.mul[a][F.inv(a)] == 1
    # characteristic p
    for a in els:
        s = 0
        for _ in range(F.p):
            s = F.add[s][a]
        assert s == 0


def test_field_unsupported():
    for q in (6, 10, 11, 16):
        with pytest.raises(DomainError, match="field not in supported set"):
            FiniteField(q)
    with pytest.raises(DomainError, match="field not in supported set"):
        build("pg_incidence", q=6)


@pytest.mark.parametrize("q", SUPPORTED_Q)
def test_pg_incidence(q):
    g = build("pg_incidence", q=q)
    assert g.n == 2 * (q * q + q + 1)
    assert g.regularity() == q + 1
    assert girth(g) == 6
    assert second_eig(g) == sqrt(q)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_gq_incidence(q):
    g = build("gq_incidence", q=q)
    assert g.n == 2 * (q + 1) * (q * q + 1)
    assert g.regularity() == q + 1
    assert girth(g) == 8
    assert second_eig(g) == sqrt(2 * q)


def test_gq_beyond_charpoly_cap_certified_by_drg():
    e = entry("gq_incidence", q=5)
    g = e.builder()
    assert g.n == 312
    certify_entry(e, g)


def test_incidence_graphs_for_q2():
    assert is_isomorphic(pg_incidence(2), oracles.heawood())
    assert nx.is_isomorphic(to_nx(pg_incidence(2)), nx.heawood_graph())
    assert is_isomorphic(gq_incidence(2), oracles.tutte_coxeter())
    assert is_isomorphic(build("tutte_coxeter"), gq_incidence(2))


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_every_entry_builds_and_certifies(name):
    e = entry(name)
    g = build(name)
    assert g.n == e.n and g.regularity() == e.k
    assert is_connected(g)
    assert girth(g) == e.girth


def test_build_examples():
    hs = build("hoffman_singleton")
    assert (hs.n, hs.regularity(), girth(hs), second_eig(hs)) == (50, 7, 5, 2)
    sc = build("schlafli_complement")
    assert (sc.n, sc.regularity(), second_eig(sc)) == (27, 10, 1)
    cl = build("clebsch")
    assert (cl.n, cl.regularity(), second_eig(cl)) == (16, 5, 1)
    assert is_isomorphic(build("petersen"), kneser(5, 2))
    assert nx.is_isomorphic(to_nx(build("petersen")), nx.petersen_graph())


def test_named_lambda2_values():
    expected = {
        "heawood": sqrt(2),
        "tutte_coxeter": 2,
        "tutte_12cage": sqrt(6),
        "hoffman_singleton": 2,
        "higman_sims": 2,
        "clebsch": 1,
        "odd_graph_4": 2,
        "mcgee": 2,
        "ci10_14": surd(-1, 1, 5),
        "gewirtz": 2,
        "m22_graph": 2,
        "pappus": sqrt(3),
    }
    for name, lam in expected.items():
        assert compare(second_eig(build(name)), lam) == 0, name


@pytest.mark.parametrize(
    "name,builder",
    [
        ("heawood", oracles.heawood),
        ("pappus", oracles.pappus),
        ("mcgee", oracles.mcgee),
        ("tutte_coxeter", oracles.tutte_coxeter),
        ("tutte_12cage", oracles.tutte_12cage),
        ("gewirtz", oracles.gewirtz),
        ("m22_graph", oracles.m22_graph),
        ("higman_sims", oracles.higman_sims),
    ],
)
def test_certified_data_matches_independent_construction(name, builder):
    shipped = from_graph6(GRAPH6[name])
    rebuilt = builder()
    assert shipped.n == rebuilt.n
    if shipped.n <= 64:
        assert is_isomorphic(shipped, rebuilt)
    assert nx.is_isomorphic(to_nx(shipped), to_nx(rebuilt))


def test_figure_graphs():
    yu = build("yu_graph")
    assert (yu.n, yu.regularity()) == (16, 3)
    from spectral_bound.graphcore import min_eig

    assert abs(float(min_eig(yu)) + 2.0391) < 1e-4
    f5 = build("fig_sqrt5")
    assert (f5.n, f5.regularity(), second_eig(f5)) == (8, 4, surd(-1, 1, 5))
    assert not is_isomorphic(f5, build("ci10_14"))
    f9 = build("fig_onept9")
    assert (f9.n, f9.regularity(), girth(f9)) == (18, 3, 6)
    assert compare(second_eig(f9), Fraction(19, 10)) < 0


def test_corrupted_data_is_rejected():
    e = entry("heawood")
    broken = Graph.from_edges(14, [(i, (i + 1) % 14) for i in range(14)])
    with pytest.raises(CertificationError):
        certify_entry(e, broken)
    wrong = entry("pappus")
    with pytest.raises(CertificationError, match="lambda_2|order|girth"):
        certify_entry(wrong, oracles.heawood())


def test_unknown_name():
    with pytest.raises(DomainError, match="registry"):
        build("no_such_graph")
    with pytest.raises(DomainError):
        entry("cycle", q=3)


def test_names_cover_registry():
    assert names() == sorted(FAMILIES)
    for required in ("petersen", "heawood", "hoffman_singleton", "higman_sims", "pg_incidence", "gq_incidence"):
        assert required in names()


@pytest.mark.parametrize("k", range(11, 31))
def test_complement_line_K2m_family(k):
    g = complement_line_K2m(k + 1)
    assert is_connected(g)
    assert g.n == 2 * k + 2 and g.regularity() == k
    assert second_eig(g) == 1
    assert build("complement_line_K2m", m=k + 1) == g


def test_v_k_1():
    assert v_k_1(7) == 18
    assert v_k_1(10) == 27
    assert v_k_1(15) == 32
    assert [v_k_1(k) for k in range(2, 11)] == [6, 10, 12, 16, 15, 18, 21, 24, 27]
    with pytest.raises(DomainError):
        v_k_1(1)


def test_v_k_1_against_published_rows():
    for k in range(2, 23):
        rows = [v for text, v in PUBLISHED[k] if text == "1"]
        if not rows:
            continue
        if k == 4:
            assert rows[0] == 9 and v_k_1(4) == 12
        else:
            assert rows[0] == v_k_1(k)


def test_certify_attainment_examples():
    rep = certify_attainment(oracles.heawood(), 3, sqrt(2))
    assert rep.attains and (rep.t, rep.c) == (4, 3)
    assert {c.name: c.status for c in rep.checks}["distance-regular"] == "pass"
    rep = certify_attainment(build("petersen"), 3, 1)
    assert rep.attains and rep.target == 10 and rep.target_source == "classification"
    assert rep.M == 10
    rep = certify_attainment(cycle(6), 2, 1)
    assert rep.attains and rep.target == 6


def test_certify_attainment_failures():
    rep = certify_attainment(build("petersen"), 3, sqrt(2))
    assert not rep.attains
    statuses = {c.name: c.status for c in rep.checks}
    assert statuses["lambda2"] == "pass" and statuses["order"] == "fail"
    rep = certify_attainment(oracles.mcgee(), 3, sqrt(2))
    assert {c.name: c.status for c in rep.checks}["lambda2"] == "fail"
    rep = certify_attainment(oracles.pappus(), 3, sqrt(3))
    assert rep.attains
    assert {c.name: c.status for c in rep.checks}["distance-regular"] == "n/a"
    rep = certify_attainment(build("fig_sqrt5"), 4, surd(-1, 1, 5))
    assert not rep.attains and rep.target == 12


def test_established_values():
    assert established_value(4, 1) == (12, "classification")
    assert established_value(4, surd(-1, 1, 5)) == (12, "search")
    assert established_value(3, sqrt(2)) is None


def test_export_formats():
    assert export("heawood") == to_graph6(build("heawood"))
    adj = export("petersen", "adjlist")
    assert adj.splitlines()[0] == "10" and len(adj.splitlines()) == 16
    meta = json.loads(export("petersen", "json"))
    jsonschema.validate(meta, SCHEMAS["catalog-export"])
    assert meta["lambda2"] == "1" and meta["provenance"] == "constructed"
    factors = {f["factor"]: f["multiplicity"] for f in meta["charpoly_factors"]}
    assert factors == {"x-3": 1, "x-1": 5, "x+2": 4}
    meta = json.loads(export("pg_incidence", "json", q=3))
    assert meta["params"] == {"q": 3} and meta["lambda2"] == "sqrt(3)"
    with pytest.raises(DomainError):
        export("petersen", "dot")


# --- tables -------------------------------------------------------------

def test_summary_table_rows():
    rows = summary_table(run_search=False)
    assert len(rows) == sum(len(v) for v in PUBLISHED.values())
    flagged = [(r.k, r.lam) for r in rows if r.flagged]
    assert flagged == [(4, 1), (4, surd(-1, 1, 5))]
    for r in rows:
        if r.flagged:
            assert r.v == 12
        else:
            assert r.v == r.published
        if compare(r.lam, 1) == 0:
            assert r.source == "classification"
        assert r.v <= r.v_ub


def test_summary_table_graph_rows_verify():
    rows = [r for r in summary_table(max_k=8, run_search=False) if r.graph is not None]
    assert rows
    for r in rows:
        assert verify_row(r), r


def test_extended_range_rows():
    rows = extended_range_rows()
    assert len(rows) == 7
    for row in rows:
        assert row.matches, row.graph
        assert abs(float(row.result.lambda_prime) - float(row.published_lambda)) < 1e-4
    flags = {row.graph: row.flag for row in rows}
    assert flags["petersen"]
    assert all(not f for g, f in flags.items() if g != "petersen")
    assert compare(parse_scalar("sqrt(5)-1"), surd(-1, 1, 5)) == 0
