"""Benchmark harness: runs (dataset, method, gamma) cells, renders CSV and
Markdown reports, and annotates them against previously reported results."""

from __future__ import annotations

import csv
import io
import time
try:
    import tomllib
except ModuleNotFoundError:        # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import reference
from .bigraph import BipartiteGraph, load_edge_list, load_pajek_two_mode
from .bounds import SizeBounds
from .errors import QbcError
from .exact import (SIZE, SearchParams, SolutionPool, branch_and_bound,
                    sweep_oracle)
from .greedy import greedy_quasi_biclique
from .mip import build_model1, run_external_solver, verify_assignment
from .quasidef import as_fraction

CSV_HEADER = ["dataset", "method", "gamma", "time_ms", "count",
              "size_u", "size_v", "total", "objective", "certified"]

METHODS = ("bb", "oracle", "greedy", "external-mip")


@dataclass(frozen=True)
class DatasetSpec:
    name: str
    path: str
    format: str = "edgelist"           # "edgelist" or "pajek"
    size_bounds: Optional[tuple[int, int, int, int]] = None


@dataclass
class BenchConfig:
    datasets: list[DatasetSpec]
    gammas: list[Fraction]
    methods: list[str] = field(default_factory=lambda: ["bb", "greedy"])
    objective: str = SIZE
    pool_limit: int = 10
    time_limit: Optional[float] = None
    tau: Optional[int] = None
    solver_cmd: Optional[str] = None
    oracle_cap: int = 20

    def __post_init__(self):
        self.gammas = [as_fraction(g) for g in self.gammas]
        for g in self.gammas:
            if not 0 < g <= 1:
                raise ValueError(f"gamma must be in (0, 1], got {g}")
        for m in self.methods:
            if m not in METHODS:
                raise ValueError(f"unknown method {m!r}; choose from {METHODS}")

    @classmethod
    def from_toml(cls, path: str | Path) -> "BenchConfig":
        raw = tomllib.loads(Path(path).read_text())
        datasets = []
        for d in raw.get("datasets", []):
            bounds = tuple(d["size_bounds"]) if "size_bounds" in d else None
            datasets.append(DatasetSpec(
                name=d["name"], path=d["path"],
                format=d.get("format", "edgelist"), size_bounds=bounds))
        return cls(
            datasets=datasets,
            gammas=[str(g) for g in raw.get("gammas", [])],
            methods=list(raw.get("methods", ["bb", "greedy"])),
            objective=raw.get("objective", SIZE),
            pool_limit=int(raw.get("pool_limit", 10)),
            time_limit=raw.get("time_limit"),
            tau=raw.get("tau"),
            solver_cmd=raw.get("solver_cmd"),
            oracle_cap=int(raw.get("oracle_cap", 20)))


@dataclass(frozen=True)
class BenchRow:
    dataset: str
    method: str
    gamma: Fraction
    time_ms: float
    count: Optional[int]
    size_u: Optional[int]
    size_v: Optional[int]
    total: Optional[int]
    objective: Optional[str]
    certified: str                  # "true", "false", "error", "skipped"
    bounds_used: Optional[tuple[int, int, int, int]] = None
    error: Optional[str] = None

    def csv_values(self) -> list[str]:
        def s(x):
            return "" if x is None else str(x)
        return [self.dataset, self.method, str(self.gamma), f"{self.time_ms:.1f}",
                s(self.count), s(self.size_u), s(self.size_v), s(self.total),
                s(self.objective), self.certified]


def load_dataset(spec: DatasetSpec) -> BipartiteGraph:
    text = Path(spec.path).read_text()
    if spec.format == "pajek":
        return load_pajek_two_mode(text)
    return load_edge_list(text)


def _pool_row(spec: DatasetSpec, method: str, gamma: Fraction,
              pool: SolutionPool, elapsed_ms: float,
              bounds: Optional[tuple]) -> BenchRow:
    best = pool.best
    if best is None:
        return BenchRow(spec.name, method, gamma, elapsed_ms, 0, None, None,
                        None, None, "true" if pool.exhausted else "false",
                        bounds_used=bounds)
    sel = best.selection
    return BenchRow(
        spec.name, method, gamma, elapsed_ms,
        count=len(pool.solutions),
        size_u=len(sel.u_set), size_v=len(sel.v_set), total=sel.total_size,
        objective=str(best.objective_value),
        certified="true" if best.certified_optimal else "false",
        bounds_used=bounds)


def run_cell(spec: DatasetSpec, g: BipartiteGraph, method: str,
             gamma: Fraction, config: BenchConfig) -> BenchRow:
    bounds = spec.size_bounds
    sb = SizeBounds(*bounds) if bounds else None
    t0 = time.perf_counter()
    try:
        if method in ("bb", "oracle"):
            params = SearchParams(
                gamma=gamma, objective=config.objective, size_bounds=sb,
                pool_limit=config.pool_limit, time_limit=config.time_limit)
            if method == "bb":
                pool = branch_and_bound(g, params)
            else:
                pool = sweep_oracle(g, params, cap=config.oracle_cap)
            ms = (time.perf_counter() - t0) * 1000
            return _pool_row(spec, method, gamma, pool, ms, bounds)
        if method == "greedy":
            delta = 1 - gamma
            if delta > Fraction(1, 2):
                raise QbcError(
                    f"greedy needs gamma >= 0.5 (delta = 1 - gamma), got {gamma}")
            res = greedy_quasi_biclique(g, delta, tau=config.tau, both_sides=True)
            ms = (time.perf_counter() - t0) * 1000
            sel = res.selection
            return BenchRow(
                spec.name, method, gamma, ms, count=1,
                size_u=len(sel.u_set), size_v=len(sel.v_set),
                total=sel.total_size, objective=str(sel.total_size),
                certified="false", bounds_used=bounds)
        if method == "external-mip":
            if not config.solver_cmd:
                return BenchRow(spec.name, method, gamma, 0.0, None, None, None,
                                None, None, "skipped", bounds_used=bounds,
                                error="no solver_cmd configured")
            instance = build_model1(g, gamma, sb or SizeBounds.default(g))
            assignment = run_external_solver(instance, config.solver_cmd,
                                             timeout=config.time_limit)
            sel = verify_assignment(g, instance, assignment, gamma)
            ms = (time.perf_counter() - t0) * 1000
            return BenchRow(
                spec.name, method, gamma, ms, count=1,
                size_u=len(sel.u_set), size_v=len(sel.v_set),
                total=sel.total_size, objective=str(sel.total_size),
                certified="true", bounds_used=bounds)
        raise ValueError(f"unknown method {method!r}")
    except QbcError as exc:
        ms = (time.perf_counter() - t0) * 1000
        return BenchRow(spec.name, method, gamma, ms, None, None, None, None,
                        None, "error", bounds_used=bounds, error=str(exc))


def run_suite(config: BenchConfig) -> list[BenchRow]:
    rows: list[BenchRow] = []
    for spec in config.datasets:
        try:
            g = load_dataset(spec)
        except (OSError, QbcError) as exc:
            for gamma in config.gammas:
                for method in config.methods:
                    rows.append(BenchRow(
                        spec.name, method, gamma, 0.0, None, None, None, None,
                        None, "error", error=f"load failure: {exc}"))
            continue
        for gamma in config.gammas:
            for method in config.methods:
                rows.append(run_cell(spec, g, method, gamma, config))
    return rows


def render_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_values())
    return buf.getvalue()


def read_csv(text: str) -> list[dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text)))


def render_markdown(rows: list[BenchRow]) -> str:
    lines = ["| " + " | ".join(CSV_HEADER) + " |",
             "|" + "---|" * len(CSV_HEADER)]
    for row in rows:
        cells = row.csv_values()
        if row.certified == "error":
            cells[4:9] = ["-"] * 5
        lines.append("| " + " | ".join(c or "-" for c in cells) + " |")
    return "\n".join(lines) + "\n"


_METHOD_KIND = {
    "bb": reference.SIZE_MODEL,
    "oracle": reference.SIZE_MODEL,
    "external-mip": reference.SIZE_MODEL,
    "greedy": reference.GREEDY,
}


@dataclass(frozen=True)
class ComparisonRow:
    row: BenchRow
    reference_total: Optional[int]
    reference_count: Optional[int]
    status: str        # matches / artifact-better / artifact-worse / not-comparable


def reference_comparison(rows: list[BenchRow]) -> list[ComparisonRow]:
    """Annotate each row with previously reported results where available.

    Reported sizes are feasibility witnesses: a certified exact run may
    legitimately beat them, but must never fall below them.
    """
    out = []
    for row in rows:
        kind = _METHOD_KIND.get(row.method)
        entry = reference.lookup(row.dataset, row.gamma, kind) if kind else None
        if entry is None or row.total is None:
            out.append(ComparisonRow(row, None, None, "not-comparable"))
            continue
        if row.total == entry.total:
            status = "matches"
        elif row.total > entry.total:
            status = "artifact-better"
        else:
            status = "artifact-worse"
        out.append(ComparisonRow(row, entry.total, entry.count, status))
    return out


def render_comparison_markdown(comps: list[ComparisonRow]) -> str:
    header = CSV_HEADER + ["reported_total", "reported_count", "status"]
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    for comp in comps:
        cells = comp.row.csv_values()
        cells += ["" if comp.reference_total is None else str(comp.reference_total),
                  "" if comp.reference_count is None else str(comp.reference_count),
                  comp.status]
        lines.append("| " + " | ".join(c or "-" for c in cells) + " |")
    return "\n".join(lines) + "\n"
