"""Search specifications, pruning hooks, parallel dispatch and exact re-decision."""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..errors import DomainError
from ..exactnum import compare, format_scalar
from ..exactnum.scalars import Scalar, as_scalar
from ..graphcore import Graph, count_eigs_greater, from_graph6, second_eig, to_graph6
from ..graphcore.structure import subgraph_order_bound
from ..lpbound import bound_for_lambda, moore_lower
from . import kernel

HOOKS = frozenset({"interlacing", "moore", "subgraph"})
N_MAX_POLICY = 64
MODES = ("count", "collect", "extremal")


def default_jobs() -> int:
    value = os.environ.get("SPECTRAL_BOUND_JOBS")
    if value:
        try:
            return max(1, int(value))
        except ValueError:
            raise DomainError(f"SPECTRAL_BOUND_JOBS must be an integer, got {value!r}")
    return 1


@dataclass(frozen=True)
class SearchSpec:
    """Connected k-regular graphs on n_min..n_max vertices.

    ``lambda2_max`` keeps graphs with lambda_2 <= lambda2_max; ``lambda2_min``
    (exclusive) keeps lambda_2 > lambda2_min.  ``hooks`` selects pruning rules.
    """

    k: int
    n_min: int
    n_max: int
    girth_min: int = 3
    girth_exact: int | None = None
    lambda2_max: Scalar | None = None
    lambda2_min: Scalar | None = None
    connected_only: bool = True
    mode: str = "count"
    hooks: frozenset = HOOKS
    split_depth: int = 8

    def __post_init__(self):
        if self.k < 2:
            raise DomainError("k must be >= 2")
        if not 1 <= self.n_min <= self.n_max:
            raise DomainError("need 1 <= n_min <= n_max")
        if self.n_max > N_MAX_POLICY:
            raise DomainError(f"n_max is capped at {N_MAX_POLICY}")
        if self.girth_min < 3 or (self.girth_exact is not None and self.girth_exact < 3):
            raise DomainError("girth constraints must be >= 3")
        if not self.connected_only:
            raise DomainError("only connected graphs are generated")
        if self.mode not in MODES:
            raise DomainError(f"mode must be one of {MODES}")
        unknown = set(self.hooks) - HOOKS
        if unknown:
            raise DomainError(f"unknown prune hooks {sorted(unknown)}")
        object.__setattr__(self, "hooks", frozenset(self.hooks))
        for name in ("lambda2_max", "lambda2_min"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, as_scalar(v))

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "girth_min": self.girth_min,
            "girth_exact": self.girth_exact,
            "lambda2_max": None if self.lambda2_max is None else format_scalar(self.lambda2_max),
            "lambda2_min": None if self.lambda2_min is None else format_scalar(self.lambda2_min),
            "connected_only": self.connected_only,
            "mode": self.mode,
            "hooks": sorted(self.hooks),
        }


@dataclass
class SearchResult:
    spec: SearchSpec
    counts_by_n: dict[int, int] = field(default_factory=dict)
    scanned_by_n: dict[int, int] = field(default_factory=dict)
    graphs: dict[int, list[str]] = field(default_factory=dict)
    witnesses: list[dict] = field(default_factory=list)
    max_order: int | None = None
    stats: dict[str, int] = field(default_factory=dict)
    effective_girth: dict[int, int] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def total(self) -> int:
        return sum(self.counts_by_n.values())

    @property
    def scanned_total(self) -> int:
        return sum(self.scanned_by_n.values())

    def all_graphs(self) -> list[str]:
        return [g for n in sorted(self.graphs) for g in self.graphs[n]]

    def to_dict(self) -> dict:
        out = {
            "spec": self.spec.to_dict(),
            "counts_by_n": {str(n): c for n, c in sorted(self.counts_by_n.items())},
            "scanned_by_n": {str(n): c for n, c in sorted(self.scanned_by_n.items())},
            "total": self.total,
            "pruned_branches": self.stats.get("noncanonical", 0) + self.stats.get("lambda_pruned", 0),
            "stats": dict(sorted(self.stats.items())),
            "effective_girth": {str(n): g for n, g in sorted(self.effective_girth.items())},
            "warnings": list(self.warnings),
            "wall_time": round(self.wall_time, 3),
        }
        if self.spec.mode == "extremal":
            out["max_order"] = self.max_order
            out["witnesses"] = list(self.witnesses)
        return out


def effective_girth(spec: SearchSpec, n: int) -> int | None:
    """Smallest admissible girth for order n after the girth and subgraph hooks, or None if infeasible."""
    g = max(spec.girth_min, spec.girth_exact or 3)
    lam = spec.lambda2_max
    k = spec.k
    if "subgraph" in spec.hooks and lam is not None and k >= 3 and compare(lam, 2) <= 0:
        # a shortest cycle is an induced subgraph of average degree 2 >= lambda
        while g <= n and compare(subgraph_order_bound(k, lam, g, g), n) < 0:
            g += 1
    if spec.girth_exact is not None and g > spec.girth_exact:
        return None
    if g > n:
        return None
    if "moore" in spec.hooks and k >= 3 and moore_lower(k, g) > n:
        return None
    return g


def _float_bound(x: Scalar | None, default: float) -> float:
    return default if x is None else float(x)


def _kernel_call(args):
    n, k, g, ge, hi, lo, lam_prune, collect, init, m0, split_at = args
    out_adj, out_flag, nout, leaves, passes, stats = kernel.run(
        n, k, g, ge, hi, lo, lam_prune, collect, np.asarray(init, dtype=np.int64), m0, split_at
    )
    return out_adj[:nout].copy(), out_flag[:nout].copy(), int(leaves), int(passes), stats.copy()


def _to_graph(rows: np.ndarray, n: int) -> Graph:
    mask = (1 << n) - 1
    return Graph(n, tuple(int(r) & mask for r in rows[:n]))


def _passes_exact(g: Graph, spec: SearchSpec) -> bool:
    if spec.lambda2_max is not None and count_eigs_greater(g, spec.lambda2_max) > 1:
        return False
    if spec.lambda2_min is not None and count_eigs_greater(g, spec.lambda2_min) < 2:
        return False
    return True


def enumerate_graphs(spec: SearchSpec, jobs: int | None = None, sink: Callable[[str], None] | None = None) -> SearchResult:
    """One representative per isomorphism class of graphs satisfying ``spec``.

    ``sink`` receives graph6 lines in collect mode as each order finishes.
    """
    jobs = default_jobs() if jobs is None else max(1, jobs)
    start = time.perf_counter()
    res = SearchResult(spec)
    totals = {"nodes": 0, "noncanonical": 0, "lambda_pruned": 0, "leaves": 0, "exact_rechecks": 0, "tasks": 0}
    collect = spec.mode in ("collect", "extremal")
    hi = _float_bound(spec.lambda2_max, math.inf)
    lo = _float_bound(spec.lambda2_min, -math.inf)
    lam_prune = "interlacing" in spec.hooks and spec.lambda2_max is not None
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for n in range(spec.n_min, spec.n_max + 1):
            res.counts_by_n[n] = 0
            res.scanned_by_n[n] = 0
            if (n * spec.k) % 2 or n < spec.k + 1:
                if (n * spec.k) % 2:
                    res.warnings.append(f"n={n}: n*k is odd, no {spec.k}-regular graph exists")
                continue
            g = effective_girth(spec, n)
            if g is None:
                continue
            res.effective_girth[n] = g
            ge = spec.girth_exact or 0
            base = (n, spec.k, g, ge, hi, lo, lam_prune, collect)
            first = np.zeros(1, dtype=np.int64)
            if 1 < spec.split_depth < n:
                out_adj, out_flag, leaves, passes, stats = _kernel_call(base + (first, 1, spec.split_depth))
                is_task = out_flag == kernel.FLAG_TASK
                tasks = list(out_adj[is_task])
                parts = [(out_adj[~is_task], out_flag[~is_task], leaves, passes, stats)]
                totals["tasks"] += len(tasks)
                calls = [base + (t, spec.split_depth, 0) for t in tasks]
                results = pool.map(_kernel_call, calls, chunksize=max(1, len(calls) // (8 * jobs))) if pool else map(_kernel_call, calls)
                parts.extend(results)
            else:
                parts = [_kernel_call(base + (first, 1, 0))]
            found: list[str] = []
            for out_adj, out_flag, leaves, passes, stats in parts:
                res.scanned_by_n[n] += leaves
                res.counts_by_n[n] += passes
                totals["nodes"] += int(stats[kernel.STAT_NODES])
                totals["noncanonical"] += int(stats[kernel.STAT_NONCANON])
                totals["lambda_pruned"] += int(stats[kernel.STAT_LAMBDA_PRUNED])
                totals["leaves"] += int(stats[kernel.STAT_LEAVES])
                for rows, flag in zip(out_adj, out_flag):
                    graph = _to_graph(rows, n)
                    if flag == kernel.FLAG_UNSURE:
                        totals["exact_rechecks"] += 1
                        if not _passes_exact(graph, spec):
                            continue
                        res.counts_by_n[n] += 1
                    if collect:
                        found.append(to_graph6(graph))
            if collect:
                found.sort()
                res.graphs[n] = found
                if sink is not None:
                    for line in found:
                        sink(line)
    finally:
        if pool is not None:
            pool.shutdown()
    res.stats = totals
    res.wall_time = time.perf_counter() - start
    return res


def find_extremal(k: int, lam, jobs: int | None = None) -> SearchResult:
    """Largest order of a connected k-regular graph with lambda_2 <= lam, and all graphs attaining it."""
    lam = as_scalar(lam)
    cert = bound_for_lambda(k, lam)
    if cert.v_ub > N_MAX_POLICY:
        raise DomainError(f"LP bound v_ub = {cert.v_ub} exceeds the search policy n_max = {N_MAX_POLICY}")
    start = time.perf_counter()
    spec = SearchSpec(k, k + 1, cert.v_ub, lambda2_max=lam, mode="extremal")
    merged = SearchResult(spec)
    for n in range(cert.v_ub, k, -1):
        if (n * k) % 2:
            continue
        sub = enumerate_graphs(SearchSpec(k, n, n, lambda2_max=lam, mode="collect"), jobs=jobs)
        merged.counts_by_n[n] = sub.counts_by_n[n]
        merged.scanned_by_n[n] = sub.scanned_by_n[n]
        merged.effective_girth.update(sub.effective_girth)
        for key, v in sub.stats.items():
            merged.stats[key] = merged.stats.get(key, 0) + v
        if sub.counts_by_n[n]:
            merged.max_order = n
            merged.graphs[n] = sub.graphs[n]
            for g6 in sub.graphs[n]:
                merged.witnesses.append({"graph6": g6, "n": n, "lambda2": format_scalar(second_eig(from_graph6(g6)))})
            break
    merged.wall_time = time.perf_counter() - start
    return merged
