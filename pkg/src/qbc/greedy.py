"""Two-phase greedy heuristic for delta-quasi-bicliques.

Phase one grows the U side to ``tau`` vertices, pruning the V side so the
per-vertex delta criterion stays intact; phase two augments both sides with
any vertex that can be added without breaking it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .bigraph import (BipartiteGraph, Selection, U_SIDE, V_SIDE, degree,
                      induced_stats, restricted_degree)
from .errors import HeuristicFailureError
from .quasidef import RationalLike, as_fraction, delta_to_gamma, \
    is_delta_quasi_biclique, is_gamma_quasi_biclique


@dataclass(frozen=True)
class TraceStep:
    phase: str            # "build" or "augment"
    side: str             # side of the added vertex
    vertex: int
    pruned: tuple[int, ...] = ()  # V-side vertices dropped right after the add


@dataclass
class GreedyTrace:
    delta: Fraction
    tau: int
    restricted_degree: bool
    steps: list[TraceStep] = field(default_factory=list)
    final: Optional[Selection] = None


@dataclass(frozen=True)
class GreedyResult:
    selection: Selection
    total_size: int
    density: Optional[Fraction]
    delta_valid: bool
    gamma_valid: bool   # against gamma = 1 - delta
    trace: GreedyTrace


def default_tau(g: BipartiteGraph) -> int:
    """Smallest U-side vertex degree, clamped to at least 1."""
    if g.u_count == 0:
        return 1
    low = max(1, min(g.adj[i].bit_count() for i in range(g.u_count)))
    return min(low, g.u_count)


def _build_pick(g: BipartiteGraph, candidates: list[int], v_mask: int,
                restricted: bool) -> int:
    def key(u):
        glob = g.adj[u].bit_count()
        restr = (g.adj[u] & v_mask).bit_count()
        if restricted:
            return (-restr, -glob, u)
        return (-glob, -restr, u)
    return min(candidates, key=key)


def greedy_build(g: BipartiteGraph, delta: RationalLike, tau: int,
                 restricted_degree: bool = False,
                 trace: Optional[GreedyTrace] = None) -> Selection:
    """Grow U' to tau vertices by repeated max-degree picks, pruning V'."""
    delta = as_fraction(delta)
    if not 0 <= delta <= Fraction(1, 2):
        raise ValueError(f"delta must be in [0, 0.5], got {delta}")
    if not 1 <= tau <= max(g.u_count, 1):
        raise ValueError(f"tau must be in [1, |U|], got {tau}")
    if g.u_count == 0 or g.v_count == 0:
        raise HeuristicFailureError("graph has an empty side", last_selection=None)

    u_sel: list[int] = []
    v_mask = g.full_v_mask()
    last_good: Optional[Selection] = None
    while len(u_sel) < tau:
        candidates = [u for u in range(g.u_count) if u not in u_sel]
        if not candidates:
            break
        u = _build_pick(g, candidates, v_mask, restricted_degree)
        u_sel.append(u)
        need = (1 - delta) * len(u_sel)
        pruned = []
        m, new_mask = v_mask, v_mask
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            d = sum(1 for i in u_sel if g.adj[i] >> j & 1)
            if d < need:   # strict: the boundary d == (1-delta)|U'| is kept
                new_mask &= ~(1 << j)
                pruned.append(j)
        v_mask = new_mask
        if trace is not None:
            trace.steps.append(TraceStep("build", U_SIDE, u, tuple(pruned)))
        if v_mask == 0:
            raise HeuristicFailureError(
                f"V side emptied with |U'| = {len(u_sel)} < tau = {tau}",
                last_selection=last_good)
        last_good = induced_stats(
            g, u_sel, [j for j in range(g.v_count) if v_mask >> j & 1])
    assert last_good is not None
    return last_good


def greedy_augment(g: BipartiteGraph, selection: Selection, delta: RationalLike,
                   trace: Optional[GreedyTrace] = None) -> Selection:
    """Add vertices (max whole-graph degree first) while the delta criterion
    survives; alternates sides until a fixpoint."""
    delta = as_fraction(delta)
    if not is_delta_quasi_biclique(g, selection, delta):
        raise ValueError("input selection is not a delta-quasi-biclique")
    u_sel = list(selection.u_set)
    v_sel = list(selection.v_set)

    def try_side(side: str) -> bool:
        pool = range(g.u_count) if side == U_SIDE else range(g.v_count)
        chosen = u_sel if side == U_SIDE else v_sel
        candidates = [x for x in pool if x not in chosen]
        if not candidates:
            return False
        dmax = max(degree(g, side, x) for x in candidates)
        for x in sorted(c for c in candidates if degree(g, side, c) == dmax):
            trial = induced_stats(
                g,
                u_sel + [x] if side == U_SIDE else u_sel,
                v_sel + [x] if side == V_SIDE else v_sel)
            if is_delta_quasi_biclique(g, trial, delta):
                chosen.append(x)
                if trace is not None:
                    trace.steps.append(TraceStep("augment", side, x))
                return True
        return False

    progress = True
    while progress:
        progress = False
        while try_side(U_SIDE):
            progress = True
        while try_side(V_SIDE):
            progress = True
    return induced_stats(g, u_sel, v_sel)


def repair_selection(g: BipartiteGraph, selection: Selection,
                     delta: RationalLike,
                     trace: Optional[GreedyTrace] = None) -> Selection:
    """Drop vertices until the delta criterion holds on both sides.

    The build phase enforces the criterion only for V' (it prunes V after
    every U pick), so a U vertex can end up below its own threshold.  This
    repeatedly removes the vertex with the largest deficit (U side first on
    ties, then lowest index) until the selection is a delta-quasi-biclique.
    """
    delta = as_fraction(delta)
    u_sel = list(selection.u_set)
    v_sel = list(selection.v_set)
    while True:
        if not u_sel or not v_sel:
            raise HeuristicFailureError(
                "repair emptied a side", last_selection=selection)
        cur = induced_stats(g, u_sel, v_sel)
        if is_delta_quasi_biclique(g, cur, delta):
            return cur
        need_u = (1 - delta) * len(v_sel)
        need_v = (1 - delta) * len(u_sel)
        worst = None  # (deficit, side_rank, index)
        for i in u_sel:
            deficit = need_u - restricted_degree(g, U_SIDE, i, v_sel)
            if deficit > 0 and (worst is None or (deficit, 0, -i) > worst[0]):
                worst = ((deficit, 0, -i), U_SIDE, i)
        for j in v_sel:
            deficit = need_v - restricted_degree(g, V_SIDE, j, u_sel)
            if deficit > 0 and (worst is None or (deficit, -1, -j) > worst[0]):
                worst = ((deficit, -1, -j), V_SIDE, j)
        assert worst is not None
        if worst[1] == U_SIDE:
            u_sel.remove(worst[2])
        else:
            v_sel.remove(worst[2])
        if trace is not None:
            trace.steps.append(TraceStep("repair", worst[1], worst[2]))


def greedy_quasi_biclique(g: BipartiteGraph, delta: RationalLike,
                          tau: Optional[int] = None,
                          restricted_degree: bool = False,
                          both_sides: bool = False) -> GreedyResult:
    """Build then augment; optionally also run on the transposed graph and
    keep the larger result."""
    delta = as_fraction(delta)
    if tau is None:
        tau = default_tau(g)
    result = _run_one(g, delta, tau, restricted_degree)
    if both_sides:
        gt = g.transpose()
        tau_t = min(tau, max(gt.u_count, 1))
        try:
            other = _run_one(gt, delta, tau_t, restricted_degree)
        except HeuristicFailureError:
            other = None
        if other is not None and other.total_size > result.total_size:
            sel = other.selection
            flipped = induced_stats(g, sel.v_set, sel.u_set)
            result = GreedyResult(
                selection=flipped, total_size=flipped.total_size,
                density=flipped.density, delta_valid=other.delta_valid,
                gamma_valid=other.gamma_valid, trace=other.trace)
    return result


def _run_one(g: BipartiteGraph, delta: Fraction, tau: int,
             restricted_degree: bool) -> GreedyResult:
    trace = GreedyTrace(delta=delta, tau=tau, restricted_degree=restricted_degree)
    built = greedy_build(g, delta, tau, restricted_degree, trace=trace)
    built = repair_selection(g, built, delta, trace=trace)
    final = greedy_augment(g, built, delta, trace=trace)
    trace.final = final
    delta_ok = is_delta_quasi_biclique(g, final, delta)
    gamma_ok = is_gamma_quasi_biclique(g, final, delta_to_gamma(delta))
    assert delta_ok, "greedy produced a selection violating its own criterion"
    return GreedyResult(
        selection=final, total_size=final.total_size, density=final.density,
        delta_valid=delta_ok, gamma_valid=gamma_ok, trace=trace)


def replay_trace(g: BipartiteGraph, trace: GreedyTrace) -> Selection:
    """Re-apply a trace step by step; used to audit greedy runs."""
    u_sel: list[int] = []
    v_mask = g.full_v_mask()
    v_extra: list[int] = []
    for step in trace.steps:
        if step.phase == "build":
            u_sel.append(step.vertex)
            for j in step.pruned:
                v_mask &= ~(1 << j)
        elif step.phase == "repair":
            if step.side == U_SIDE:
                u_sel.remove(step.vertex)
            else:
                v_mask &= ~(1 << step.vertex)
        elif step.side == U_SIDE:
            u_sel.append(step.vertex)
        else:
            v_extra.append(step.vertex)
    v_sel = [j for j in range(g.v_count) if v_mask >> j & 1] + v_extra
    return induced_stats(g, u_sel, v_sel)
