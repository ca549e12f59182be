"""Named graphs with expected invariants, certified every time they are built."""

from __future__ import annotations

import inspect
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from ..errors import CertificationError, DomainError
from ..exactnum import IntPoly, compare, factor_poly, format_factorization, format_scalar, largest_real_root, surd
from ..exactnum.scalars import Scalar, as_scalar, sqrt
from ..graphcore import Graph, char_poly, complete, complete_bipartite, cycle, from_graph6, girth, is_connected, second_eig
from ..graphcore import to_adjlist, to_graph6
from ..graphcore.spectra import CHARPOLY_CAP
from ..graphcore.structure import is_drg_with_array
from ..lpbound import TridiagParams, tridiag_second_eig
from . import constructions as con
from .data import CHARPOLY, GRAPH6
from .field import SUPPORTED_Q

PROVENANCE = ("constructed", "certified-data")


@dataclass(frozen=True)
class Attains:
    """The bound row a graph meets with equality: order M(k,t,c) and lambda_2 = lambda_2(T(k,t,c))."""

    k: int
    lam: Scalar
    t: int
    c: Scalar

    def to_dict(self) -> dict:
        return {"k": self.k, "lambda": format_scalar(self.lam), "t": self.t, "c": format_scalar(self.c)}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: tuple[tuple[str, int], ...]
    builder: Callable[[], Graph]
    k: int
    n: int
    lambda2: Scalar
    girth: int | float
    provenance: str
    attains: Attains | None = None
    unique: bool | None = None
    charpoly: str | None = None

    @property
    def label(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}(" + ", ".join(f"{k}={v}" for k, v in self.params) + ")"

    def metadata(self) -> dict:
        return {
            "name": self.name,
            "params": dict(self.params),
            "n": self.n,
            "k": self.k,
            "lambda2": format_scalar(self.lambda2),
            "girth": None if self.girth == math.inf else self.girth,
            "provenance": self.provenance,
            "attains": None if self.attains is None else self.attains.to_dict(),
            "unique": self.unique,
        }


def _data(name: str) -> Callable[[], Graph]:
    return lambda: from_graph6(GRAPH6[name])


def _T2(k: int, t: int, c) -> Scalar:
    return tridiag_second_eig(TridiagParams(k, t, c))


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise DomainError(msg)


def _cycle(n: int) -> CatalogEntry:
    _need(n >= 3, "cycle needs n >= 3")
    t, c = (n // 2 + 1, 2) if n % 2 == 0 else ((n + 1) // 2, 1)
    lam = _T2(2, t, c)  # 2 cos(2 pi / n)
    return CatalogEntry("cycle", (("n", n),), lambda: cycle(n), 2, n, lam, n, "constructed", Attains(2, lam, t, c), True)


def _complete(n: int) -> CatalogEntry:
    _need(n >= 3, "complete needs n >= 3")
    k = n - 1
    return CatalogEntry(
        "complete", (("n", n),), lambda: complete(n), k, n, Fraction(-1), 3, "constructed", Attains(k, Fraction(-1), 2, 1), True
    )


def _complete_bipartite(k: int) -> CatalogEntry:
    _need(k >= 2, "complete_bipartite needs k >= 2")
    return CatalogEntry(
        "complete_bipartite", (("k", k),), lambda: complete_bipartite(k, k), k, 2 * k, Fraction(0), 4, "constructed",
        Attains(k, Fraction(0), 3, k), True,
    )


def _complement_line_K2m(m: int) -> CatalogEntry:
    _need(m >= 3, "complement_line_K2m needs m >= 3")
    # K_{m,m} minus a perfect matching
    return CatalogEntry(
        "complement_line_K2m", (("m", m),), lambda: con.complement_line_K2m(m), m - 1, 2 * m, Fraction(1),
        6 if m == 3 else 4, "constructed",
    )


def _pg_incidence(q: int) -> CatalogEntry:
    _need(q in SUPPORTED_Q, f"q={q}: field not in supported set {SUPPORTED_Q}")
    lam = sqrt(q)
    return CatalogEntry(
        "pg_incidence", (("q", q),), lambda: con.pg_incidence(q), q + 1, 2 * (q * q + q + 1), lam, 6, "constructed",
        Attains(q + 1, lam, 4, q + 1),
    )


def _gq_incidence(q: int) -> CatalogEntry:
    _need(q in SUPPORTED_Q, f"q={q}: field not in supported set {SUPPORTED_Q}")
    lam = sqrt(2 * q)
    return CatalogEntry(
        "gq_incidence", (("q", q),), lambda: con.gq_incidence(q), q + 1, 2 * (q + 1) * (q * q + 1), lam, 8, "constructed",
        Attains(q + 1, lam, 5, q + 1),
    )


def _fixed(name, builder, k, n, lam, g, provenance="constructed", attains=None, unique=None):
    lam = as_scalar(lam)
    att = None if attains is None else Attains(k, lam, attains[0], attains[1])
    return lambda: CatalogEntry(name, (), builder, k, n, lam, g, provenance, att, unique, CHARPOLY.get(name))


def _root_of(*coeffs_low_first: int) -> Scalar:
    return largest_real_root(IntPoly(coeffs_low_first))


FAMILIES: dict[str, Callable[..., CatalogEntry]] = {
    "cycle": _cycle,
    "complete": _complete,
    "complete_bipartite": _complete_bipartite,
    "complement_line_K2m": _complement_line_K2m,
    "pg_incidence": _pg_incidence,
    "gq_incidence": _gq_incidence,
    "petersen": _fixed("petersen", con.petersen, 3, 10, 1, 5, attains=(3, 1), unique=True),
    "odd_graph_4": _fixed("odd_graph_4", con.odd_graph_4, 4, 35, 2, 6, attains=(4, 2), unique=True),
    "clebsch": _fixed("clebsch", con.clebsch, 5, 16, 1, 4, attains=(3, 2), unique=True),
    "hoffman_singleton": _fixed("hoffman_singleton", con.hoffman_singleton, 7, 50, 2, 5, attains=(3, 1), unique=True),
    "schlafli_complement": _fixed("schlafli_complement", con.schlafli_complement, 10, 27, 1, 3),
    "ci10_14": _fixed("ci10_14", con.ci10_14, 4, 10, surd(-1, 1, 5), 4),
    "heawood": _fixed("heawood", _data("heawood"), 3, 14, sqrt(2), 6, "certified-data", (4, 3), True),
    "pappus": _fixed("pappus", _data("pappus"), 3, 18, sqrt(3), 6, "certified-data"),
    "mcgee": _fixed("mcgee", _data("mcgee"), 3, 24, 2, 7, "certified-data"),
    "tutte_coxeter": _fixed("tutte_coxeter", _data("tutte_coxeter"), 3, 30, 2, 8, "certified-data", (5, 3), True),
    "tutte_12cage": _fixed("tutte_12cage", _data("tutte_12cage"), 3, 126, sqrt(6), 12, "certified-data", (7, 3), True),
    "gewirtz": _fixed("gewirtz", _data("gewirtz"), 10, 56, 2, 4, "certified-data", (3, 2), True),
    "m22_graph": _fixed("m22_graph", _data("m22_graph"), 16, 77, 2, 4, "certified-data", (3, 4), True),
    "higman_sims": _fixed("higman_sims", _data("higman_sims"), 22, 100, 2, 4, "certified-data", (3, 6), True),
    "yu_graph": _fixed("yu_graph", _data("yu_graph"), 3, 16, _root_of(-4, -35, 13, 21, -7, -3, 1), 3, "certified-data"),
    "fig_sqrt5": _fixed("fig_sqrt5", _data("fig_sqrt5"), 4, 8, surd(-1, 1, 5), 3, "certified-data"),
    "fig_onept9": _fixed("fig_onept9", _data("fig_onept9"), 3, 18, _root_of(-6, -4, 2, 1), 6, "certified-data"),
}

# parameters used when a family is listed or exported without explicit values
DEFAULT_PARAMS = {"cycle": {"n": 6}, "complete": {"n": 4}, "complete_bipartite": {"k": 3},
                  "complement_line_K2m": {"m": 12}, "pg_incidence": {"q": 2}, "gq_incidence": {"q": 2}}


def names() -> list[str]:
    return sorted(FAMILIES)


def entry(name: str, **params) -> CatalogEntry:
    """Registry metadata for a named graph; parametric families need their parameters."""
    if name not in FAMILIES:
        raise DomainError(f"unknown graph {name!r}; registry: {', '.join(names())}")
    maker = FAMILIES[name]
    wanted = list(inspect.signature(maker).parameters)
    if set(params) - set(wanted):
        raise DomainError(f"{name} takes parameters {wanted}, got {sorted(params)}")
    for p in wanted:
        if p not in params:
            params[p] = DEFAULT_PARAMS[name][p]
    return maker(**params)


def _lambda2_certified(e: CatalogEntry, g: Graph) -> Scalar:
    if g.n <= CHARPOLY_CAP:
        return second_eig(g)
    # beyond the char-poly cap: distance-regularity fixes the spectrum to that of T(k,t,c)
    if e.attains is None or not is_drg_with_array(g, e.attains.c):
        raise CertificationError(f"{e.label}: cannot certify lambda_2 exactly on {g.n} vertices")
    return _T2(e.k, e.attains.t, e.attains.c)


def certify_entry(e: CatalogEntry, g: Graph) -> None:
    """Check order, regularity, connectivity, girth, exact lambda_2 and stored char-poly against the metadata."""

    def fail(what, got, want):
        raise CertificationError(f"{e.label}: {what} is {got}, expected {want}")

    if g.n != e.n:
        fail("order", g.n, e.n)
    if g.regularity() != e.k:
        fail("regularity", g.regularity(), e.k)
    if not is_connected(g):
        fail("connectivity", "disconnected", "connected")
    if girth(g) != e.girth:
        fail("girth", girth(g), e.girth)
    lam = _lambda2_certified(e, g)
    if compare(lam, e.lambda2) != 0:
        fail("lambda_2", format_scalar(lam), format_scalar(e.lambda2))
    if e.charpoly is not None and format_factorization(char_poly(g)) != e.charpoly:
        fail("characteristic polynomial", format_factorization(char_poly(g)), e.charpoly)
    if e.attains is not None and e.n <= CHARPOLY_CAP and not is_drg_with_array(g, e.attains.c):
        fail("distance-regularity with c", "false", format_scalar(e.attains.c))


@lru_cache(maxsize=None)
def _build_cached(name: str, params: tuple[tuple[str, int], ...]) -> Graph:
    e = entry(name, **dict(params))
    g = e.builder()
    certify_entry(e, g)
    return g


def build(name: str, **params) -> Graph:
    """Construct a registry graph and certify it against its metadata (once per process)."""
    e = entry(name, **params)
    return _build_cached(name, e.params)


def charpoly_factors(g: Graph) -> list[dict]:
    return [{"factor": str(f), "multiplicity": m} for f, m in factor_poly(char_poly(g))]


def export(name: str, fmt: str = "graph6", **params) -> str:
    """Serialize a registry graph as graph6, an adjacency list, or JSON metadata."""
    g = build(name, **params)
    if fmt == "graph6":
        return to_graph6(g)
    if fmt == "adjlist":
        return to_adjlist(g)
    if fmt == "json":
        e = entry(name, **params)
        meta = e.metadata()
        meta["charpoly_factors"] = charpoly_factors(g) if g.n <= CHARPOLY_CAP else None
        meta["graph6"] = to_graph6(g)
        return json.dumps(meta, indent=2)
    raise DomainError(f"unknown export format {fmt!r}; use graph6, adjlist or json")
