"""Does a given graph attain v(k, lambda)?"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import DomainError
from ..exactnum import compare, format_scalar, surd
from ..exactnum.scalars import Scalar, as_scalar
from ..graphcore import Graph, girth, is_connected, second_eig
from ..graphcore.spectra import CHARPOLY_CAP
from ..graphcore.structure import is_drg_with_array
from ..lpbound import bound_for_lambda, tridiag_second_eig

CLASSIFIED_V_K_1 = {2: 6, 3: 10, 4: 12, 5: 16, 6: 15, 7: 18, 8: 21, 9: 24, 10: 27}

# exact values established by exhaustive search rather than by the LP bound
SEARCH_VALUES = {(4, surd(-1, 1, 5)): 12}


def v_k_1(k: int) -> int:
    """Largest order of a connected k-regular graph with lambda_2 <= 1."""
    if k < 2:
        raise DomainError("v(k,1) needs k >= 2")
    return CLASSIFIED_V_K_1.get(k, 2 * k + 2)


def established_value(k: int, lam) -> tuple[int, str] | None:
    """(v(k, lam), source) when it is known beyond the LP bound."""
    lam = as_scalar(lam)
    if compare(lam, 1) == 0:
        return v_k_1(k), "classification"
    for (kk, ll), v in SEARCH_VALUES.items():
        if kk == k and compare(ll, lam) == 0:
            return v, "search"
    return None


@dataclass
class Check:
    name: str
    status: str  # pass, fail or n/a
    detail: str

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class AttainmentReport:
    k: int
    lam: Scalar
    n: int
    target: int | None = None
    target_source: str = ""
    lambda2: Scalar | None = None
    t: int | None = None
    c: Scalar | None = None
    M: Scalar | None = None
    checks: list[Check] = field(default_factory=list)

    @property
    def attains(self) -> bool:
        return all(ch.status != "fail" for ch in self.checks) and self.n == self.target

    def add(self, name: str, ok: bool | None, detail: str) -> None:
        self.checks.append(Check(name, "n/a" if ok is None else ("pass" if ok else "fail"), detail))

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "lambda": format_scalar(self.lam),
            "n": self.n,
            "target": self.target,
            "target_source": self.target_source,
            "lambda2": None if self.lambda2 is None else format_scalar(self.lambda2),
            "t": self.t,
            "c": None if self.c is None else format_scalar(self.c),
            "M": None if self.M is None else format_scalar(self.M),
            "attains": self.attains,
            "checks": [ch.to_dict() for ch in self.checks],
        }

    def summary(self) -> str:
        verdict = "ATTAINS" if self.attains else "DOES NOT ATTAIN"
        return f"{verdict} v({self.k},{format_scalar(self.lam)})={self.target} ({self.target_source}); graph has {self.n} vertices"


def certify_attainment(g: Graph, k: int, lam) -> AttainmentReport:
    """Check every condition for g to be an extremal graph for v(k, lam); failures are recorded, not raised."""
    lam = as_scalar(lam)
    rep = AttainmentReport(k, lam, g.n)
    cert = bound_for_lambda(k, lam)
    rep.t, rep.c, rep.M = cert.params.t, cert.params.c, cert.M
    known = established_value(k, lam)
    rep.target, rep.target_source = known if known else (cert.v_ub, "lp-bound")

    connected = is_connected(g)
    rep.add("connected", connected, "connected" if connected else "graph is disconnected")
    deg = g.regularity()
    rep.add("regular", deg == k, f"regularity {deg}, need {k}")
    rep.add("order", g.n == rep.target, f"{g.n} vertices; v({k},{format_scalar(lam)}) = {rep.target}, LP bound {cert.v_ub}")

    equals_M = compare(rep.M, g.n) == 0
    drg = None
    if equals_M and deg == k and connected:
        drg = is_drg_with_array(g, rep.c)
        rep.add("distance-regular", drg, f"order equals M = {format_scalar(rep.M)}; quotient T({k},{rep.t},{format_scalar(rep.c)})")
    else:
        rep.add("distance-regular", None, f"order differs from M = {format_scalar(rep.M)}")

    if not connected:
        rep.add("lambda2", False, "undefined for a disconnected graph")
    elif g.n <= CHARPOLY_CAP:
        rep.lambda2 = second_eig(g)
        rep.add("lambda2", compare(rep.lambda2, lam) <= 0, f"lambda2 = {format_scalar(rep.lambda2)}")
    elif drg:
        rep.lambda2 = tridiag_second_eig(cert.params)
        rep.add("lambda2", compare(rep.lambda2, lam) <= 0, f"lambda2 = {format_scalar(rep.lambda2)} from the distance-regular quotient")
    else:
        rep.add("lambda2", False, f"cannot certify lambda2 exactly above {CHARPOLY_CAP} vertices without distance-regularity")

    if equals_M:
        gv = girth(g)
        rep.add("girth", gv >= 2 * rep.t - 2, f"girth {gv}, need >= {2 * rep.t - 2}")
    else:
        rep.add("girth", None, "girth condition applies only at order M")
    return rep
