"""Exact maximum quasi-biclique search.

Two independent routes:

* ``sweep_oracle`` enumerates every subset of the smaller side and completes
  it with a top-k-by-restricted-degree prefix of the other side.  For a fixed
  subset and a fixed opposite-side cardinality the prefix maximizes the edge
  count, and both objectives are nondecreasing in the edge count at fixed
  sizes, so the sweep is exact.
* ``branch_and_bound`` branches include/exclude over U-side vertices with
  admissible pruning and evaluates the V side exactly at each leaf.

Density feasibility is always an integer comparison (gamma = p/q, feasible
iff q*edges >= p*|U'|*|V'|), never floating point.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .bigraph import BipartiteGraph, Selection, induced_stats
from .bounds import SizeBounds, edge_count_bounds, near_balanced_upper_bound
from .errors import InfeasibleBoundsError
from .quasidef import RationalLike, as_fraction, is_gamma_quasi_biclique

SIZE = "size"
QUALITY = "quality"

DEFAULT_SWEEP_CAP = 20
DEFAULT_POOL_LIMIT = 10


@dataclass(frozen=True)
class SearchParams:
    gamma: Fraction
    objective: str = SIZE
    size_bounds: Optional[SizeBounds] = None
    theta: Optional[Fraction] = None
    pool_limit: int = DEFAULT_POOL_LIMIT
    time_limit: Optional[float] = None  # seconds

    def __post_init__(self):
        object.__setattr__(self, "gamma", as_fraction(self.gamma))
        if self.theta is not None:
            object.__setattr__(self, "theta", as_fraction(self.theta))
        if not 0 < self.gamma <= 1:
            raise ValueError(f"gamma must be in (0, 1], got {self.gamma}")
        if self.objective not in (SIZE, QUALITY):
            raise ValueError(f"objective must be {SIZE!r} or {QUALITY!r}")
        if self.theta is not None and not 0 <= self.theta < 1:
            raise ValueError(f"theta must be in [0, 1), got {self.theta}")
        if self.pool_limit < 1:
            raise ValueError("pool_limit must be at least 1")


@dataclass(frozen=True)
class Solution:
    selection: Selection
    objective_value: Union[int, Fraction]
    certified_optimal: bool
    bound_at_termination: float


@dataclass(frozen=True)
class SolutionPool:
    solutions: tuple[Solution, ...]
    truncated: bool = False
    exhausted: bool = True  # search ran to completion (no time limit hit)

    @property
    def infeasible(self) -> bool:
        return self.exhausted and not self.solutions

    @property
    def best(self) -> Optional[Solution]:
        return self.solutions[0] if self.solutions else None


def quality_objective(edges: int, nu: int, nv: int) -> float:
    """Squared-density-times-size criterion edges^2 / (nu * nv)."""
    if nu < 1 or nv < 1:
        raise ValueError("both sides must be nonempty")
    if edges < 0:
        raise ValueError("edge count must be nonnegative")
    return edges * edges / (nu * nv)


def f_log(edges: int, nu: int, nv: int) -> float:
    """Log-linearized form of the quality criterion; exp of it recovers it."""
    if nu < 1 or nv < 1:
        raise ValueError("both sides must be nonempty")
    if edges < 1:
        raise ValueError("f_log requires at least one edge")
    return 2 * math.log(edges) - math.log(nu) - math.log(nv)


def quality_fraction(edges: int, nu: int, nv: int) -> Fraction:
    return Fraction(edges * edges, nu * nv)


def _objective_value(objective: str, edges: int, nu: int, nv: int):
    if objective == SIZE:
        return nu + nv
    return quality_fraction(edges, nu, nv)


def _balance_ok(theta: Optional[Fraction], nu: int, nv: int) -> bool:
    if theta is None:
        return True
    # (1 - theta) * nv <= nu <= (1 + theta) * nv, cross-multiplied
    tn, td = theta.numerator, theta.denominator
    return (td - tn) * nv <= td * nu <= (td + tn) * nv


def _sorted_pool(found: list[tuple[Selection, object]], objective: str,
                 truncated: bool, exhausted: bool, bound: float) -> SolutionPool:
    found.sort(key=lambda it: (-len(it[0].u_set), it[0].u_set, it[0].v_set))
    sols = tuple(
        Solution(selection=sel, objective_value=val,
                 certified_optimal=exhausted, bound_at_termination=bound)
        for sel, val in found)
    return SolutionPool(solutions=sols, truncated=truncated, exhausted=exhausted)


# ---------------------------------------------------------------------------
# sweep oracle
# ---------------------------------------------------------------------------

class SweepCapExceeded(InfeasibleBoundsError):
    """The smaller side is too large for full subset enumeration."""


_CHUNK_BITS = 15  # masks are processed in chunks of 2^15 to bound memory


def sweep_oracle(g: BipartiteGraph, params: SearchParams,
                 cap: int = DEFAULT_SWEEP_CAP) -> SolutionPool:
    """Exact optimum (and all optimal selections, up to the pool limit) by
    full enumeration over the smaller side."""
    if min(g.u_count, g.v_count) > cap:
        raise SweepCapExceeded(
            f"smaller side has {min(g.u_count, g.v_count)} vertices, above the "
            f"enumeration cap {cap}; use branch_and_bound instead")
    if g.u_count == 0 or g.v_count == 0:
        return SolutionPool(solutions=())

    swap = g.v_count < g.u_count
    work = g.transpose() if swap else g
    sb = params.size_bounds or SizeBounds.default(g)
    try:
        sb = sb.clipped(g)
    except InfeasibleBoundsError:
        return SolutionPool(solutions=())
    wsb = sb.swapped() if swap else sb

    s, t = work.u_count, work.v_count
    p, q = params.gamma.numerator, params.gamma.denominator
    biadj = np.array(
        [[(row >> j) & 1 for j in range(t)] for row in work.adj], dtype=np.int64)
    k_range = range(wsb.omega_l_v, min(wsb.omega_u_v, t) + 1)
    theta = params.theta

    def chunk_tables(start: int, stop: int):
        masks = np.arange(start, stop, dtype=np.int64)
        bits = ((masks[:, None] >> np.arange(s)) & 1).astype(np.int64)
        n_s = bits.sum(axis=1)
        restr = bits @ biadj
        cum = np.cumsum(np.sort(restr, axis=1)[:, ::-1], axis=1)
        size_ok = (n_s >= max(wsb.omega_l_u, 1)) & (n_s <= wsb.omega_u_u)
        return n_s, restr, cum, size_ok

    def feasible(n_s, edges, k, size_ok):
        feas = size_ok & (q * edges >= p * n_s * k)
        if theta is not None:
            tn, td = theta.numerator, theta.denominator
            nu = np.full_like(n_s, k) if swap else n_s
            nv = n_s if swap else np.full_like(n_s, k)
            feas &= ((td - tn) * nv <= td * nu) & (td * nu <= (td + tn) * nv)
        return feas

    # pass 1: optimal objective value
    best = None  # int for SIZE, (num, den) for QUALITY
    total_masks = 1 << s
    step = 1 << _CHUNK_BITS
    for start in range(0, total_masks, step):
        n_s, _restr, cum, size_ok = chunk_tables(start, min(start + step, total_masks))
        for k in k_range:
            edges = cum[:, k - 1]
            feas = feasible(n_s, edges, k, size_ok)
            if not feas.any():
                continue
            if params.objective == SIZE:
                cand = int((n_s[feas] + k).max())
                if best is None or cand > best:
                    best = cand
            else:
                e2 = edges[feas] ** 2
                den = n_s[feas] * k
                bn, bd = best if best is not None else (0, 1)
                while True:
                    better = e2 * bd > bn * den
                    if not better.any():
                        break
                    i = int(np.argmax(np.where(better, e2 / den, -1.0)))
                    bn, bd = int(e2[i]), int(den[i])
                if bn:
                    best = (bn, bd)

    if best is None:
        return SolutionPool(solutions=())

    # pass 2: reconstruct the optimal selections
    limit = params.pool_limit
    found: list[tuple[Selection, object]] = []
    overflow = False
    for start in range(0, total_masks, step):
        if overflow:
            break
        n_s, restr, cum, size_ok = chunk_tables(start, min(start + step, total_masks))
        for k in k_range:
            if overflow:
                break
            edges = cum[:, k - 1]
            feas = feasible(n_s, edges, k, size_ok)
            if params.objective == SIZE:
                hits = feas & (n_s + k == best)
            else:
                bn, bd = best
                hits = feas & (edges ** 2 * bd == bn * n_s * k)
            for local in np.flatnonzero(hits).tolist():
                mask = start + local
                ns = int(n_s[local])
                s_set = [i for i in range(s) if mask >> i & 1]
                degs = [int(restr[local, j]) for j in range(t)]
                if params.objective == SIZE:
                    mode, want = "atleast", -(-p * ns * k // q)
                else:
                    mode, want = "exact", int(edges[local])
                for t_set in _subsets_with_sum(degs, k, mode, want):
                    u_set, v_set = (t_set, s_set) if swap else (s_set, t_set)
                    sel = induced_stats(g, u_set, v_set)
                    val = _objective_value(params.objective, sel.edges,
                                           len(sel.u_set), len(sel.v_set))
                    found.append((sel, val))
                    if len(found) > limit:
                        found = found[:limit]
                        overflow = True
                        break
                if overflow:
                    break

    bound = float(best if params.objective == SIZE else Fraction(*best))
    return _sorted_pool(found, params.objective, overflow, True, bound)


def _subsets_with_sum(degs: list[int], k: int, mode: str, want: int):
    """Yield k-subsets of range(len(degs)) whose degree sum is == want
    ("exact") or >= want ("atleast"), in deterministic order."""
    t = len(degs)
    order = sorted(range(t), key=lambda j: (-degs[j], j))
    sdegs = [degs[j] for j in order]
    prefix = [0]
    for d in sdegs:
        prefix.append(prefix[-1] + d)
    choice: list[int] = []

    def rec(i: int, picked: int, total: int):
        if picked == k:
            if (mode == "exact" and total == want) or \
                    (mode == "atleast" and total >= want):
                yield sorted(order[c] for c in choice)
            return
        if i >= t or t - i < k - picked:
            return
        rem = k - picked
        hi = total + prefix[i + rem] - prefix[i]          # rem largest left
        lo = total + prefix[t] - prefix[t - rem]          # rem smallest left
        if hi < want:
            return
        if mode == "exact" and lo > want:
            return
        choice.append(i)
        yield from rec(i + 1, picked + 1, total + sdegs[i])
        choice.pop()
        yield from rec(i + 1, picked, total)

    yield from rec(0, 0, 0)


# ---------------------------------------------------------------------------
# branch and bound
# ---------------------------------------------------------------------------

class _Timeout(Exception):
    pass


class _BnB:
    def __init__(self, g: BipartiteGraph, params: SearchParams):
        self.g = g
        self.params = params
        self.p = params.gamma.numerator
        self.q = params.gamma.denominator
        sb = (params.size_bounds or SizeBounds.default(g)).clipped(g)
        self.sb = sb
        self.order = sorted(
            range(g.u_count), key=lambda i: (-g.adj[i].bit_count(), i))
        self.deadline = (time.monotonic() + params.time_limit
                         if params.time_limit is not None else None)
        self.ticks = 0
        # incumbent
        self.best_val = None        # int or (num, den)
        self.best_sel: Optional[Selection] = None
        self.k_min, self.k_max = edge_count_bounds(g, params.gamma, sb)
        self.theta_cap = None
        if params.theta is not None:
            self.theta_cap = math.floor(near_balanced_upper_bound(
                g.edge_count, params.gamma, params.theta) + 1e-9)

    # -- helpers ----------------------------------------------------------

    def _check_time(self):
        self.ticks += 1
        if self.deadline is not None and self.ticks % 512 == 0:
            if time.monotonic() > self.deadline:
                raise _Timeout

    def _beats(self, val) -> bool:
        if self.best_val is None:
            return True
        if self.params.objective == SIZE:
            return val > self.best_val
        return val[0] * self.best_val[1] > self.best_val[0] * val[1]

    def _matches_best(self, val) -> bool:
        if self.best_val is None:
            return False
        if self.params.objective == SIZE:
            return val == self.best_val
        return val[0] * self.best_val[1] == self.best_val[0] * val[1]

    def _prune(self, n_in: int, rem: int, e_avail: int, for_pool: bool) -> bool:
        """True when no completion of this node can beat (or, in the pool
        pass, match) the incumbent or be feasible at all."""
        sb = self.sb
        if n_in > sb.omega_u_u:
            return True
        max_u = min(n_in + rem, sb.omega_u_u)
        if max_u < sb.omega_l_u:
            return True
        min_u = max(n_in, sb.omega_l_u)
        # density slack: even the loosest completion needs this many edges
        need = -(-self.p * min_u * sb.omega_l_v // self.q)
        if e_avail < need or e_avail < self.k_min:
            return True
        # optimistic V-side count limited by the available edge budget
        k_cap = min(self.g.v_count, sb.omega_u_v,
                    (self.q * e_avail) // (self.p * min_u))
        if k_cap < sb.omega_l_v:
            return True
        if self.best_val is None:
            return False
        if self.params.objective == SIZE:
            optimistic = max_u + k_cap
            if self.theta_cap is not None:
                optimistic = min(optimistic, self.theta_cap)
            target = self.best_val
            return optimistic < target if for_pool else optimistic <= target
        # quality: f = e^2/(nu*nv) <= e <= e_avail
        bn, bd = self.best_val
        if for_pool:
            return e_avail * bd < bn
        return e_avail * bd <= bn

    def _leaf_candidates(self, included: list[int], cnt: list[int]):
        """Feasible (k, top_edges) pairs at a fully-decided-U leaf."""
        n_in = len(included)
        if not (self.sb.omega_l_u <= n_in <= self.sb.omega_u_u) or n_in == 0:
            return []
        top = sorted(cnt, reverse=True)
        out = []
        total = 0
        for k in range(1, min(self.g.v_count, self.sb.omega_u_v) + 1):
            total += top[k - 1]
            if k < self.sb.omega_l_v:
                continue
            if not _balance_ok(self.params.theta, n_in, k):
                continue
            if self.q * total < self.p * n_in * k:
                continue
            out.append((k, total))
        return out

    # -- first pass: find the optimum ------------------------------------

    def solve(self) -> tuple[bool, float]:
        cnt = [0] * self.g.v_count
        try:
            self._dfs(0, [], cnt, self.g.edge_count)
            return True, self._root_bound()
        except _Timeout:
            return False, self._root_bound()

    def _root_bound(self) -> float:
        if self.params.objective == SIZE:
            b = min(self.g.u_count, self.sb.omega_u_u) + \
                min(self.g.v_count, self.sb.omega_u_v)
            if self.theta_cap is not None:
                b = min(b, self.theta_cap)
            return float(b)
        return float(min(self.g.edge_count, self.k_max))

    def _dfs(self, pos: int, included: list[int], cnt: list[int], e_avail: int):
        self._check_time()
        if self._prune(len(included), self.g.u_count - pos, e_avail, False):
            return
        if pos == self.g.u_count:
            for k, edges in self._leaf_candidates(included, cnt):
                val = (len(included) + k if self.params.objective == SIZE
                       else (edges * edges, len(included) * k))
                if self._beats(val):
                    self.best_val = val
                    top_idx = sorted(range(self.g.v_count),
                                     key=lambda j: (-cnt[j], j))[:k]
                    self.best_sel = induced_stats(self.g, included, top_idx)
            return
        u = self.order[pos]
        row = self.g.adj[u]
        # include u
        included.append(u)
        j = 0
        r = row
        while r:
            b = (r & -r).bit_length() - 1
            cnt[b] += 1
            r &= r - 1
        self._dfs(pos + 1, included, cnt, e_avail)
        included.pop()
        r = row
        while r:
            b = (r & -r).bit_length() - 1
            cnt[b] -= 1
            r &= r - 1
        # exclude u: its edges leave the budget
        self._dfs(pos + 1, included, cnt, e_avail - row.bit_count())

    # -- second pass: enumerate the pool ----------------------------------

    def collect_pool(self) -> tuple[list[tuple[Selection, object]], bool]:
        self.found: list[tuple[Selection, object]] = []
        self.overflow = False
        cnt = [0] * self.g.v_count
        try:
            self._dfs_pool(0, [], cnt, self.g.edge_count)
        except (_Timeout, _PoolFull):
            pass
        return self.found, self.overflow

    def _dfs_pool(self, pos: int, included: list[int], cnt: list[int], e_avail: int):
        self._check_time()
        if self._prune(len(included), self.g.u_count - pos, e_avail, True):
            return
        if pos == self.g.u_count:
            self._leaf_pool(included, cnt)
            return
        u = self.order[pos]
        row = self.g.adj[u]
        included.append(u)
        r = row
        while r:
            b = (r & -r).bit_length() - 1
            cnt[b] += 1
            r &= r - 1
        self._dfs_pool(pos + 1, included, cnt, e_avail)
        included.pop()
        r = row
        while r:
            b = (r & -r).bit_length() - 1
            cnt[b] -= 1
            r &= r - 1
        self._dfs_pool(pos + 1, included, cnt, e_avail - row.bit_count())

    def _leaf_pool(self, included: list[int], cnt: list[int]):
        n_in = len(included)
        for k, e_top in self._leaf_candidates(included, cnt):
            if self.params.objective == SIZE:
                if n_in + k != self.best_val:
                    continue
                mode, want = "atleast", -(-self.p * n_in * k // self.q)
            else:
                bn, bd = self.best_val
                if e_top * e_top * bd != bn * n_in * k:
                    continue
                mode, want = "exact", e_top
            for v_idx in self._k_subsets(cnt, k, mode, want):
                sel = induced_stats(self.g, included, v_idx)
                val = _objective_value(self.params.objective, sel.edges,
                                       len(sel.u_set), len(sel.v_set))
                self.found.append((sel, val))
                if len(self.found) > self.params.pool_limit:
                    self.found = self.found[: self.params.pool_limit]
                    self.overflow = True
                    raise _PoolFull

    def _k_subsets(self, cnt: list[int], k: int, mode: str, want: int):
        """Iterative k-subset enumeration over V, bound-pruned on degree sums."""
        t = len(cnt)
        order = sorted(range(t), key=lambda j: (-cnt[j], j))
        vals = [cnt[j] for j in order]
        prefix = [0]
        for d in vals:
            prefix.append(prefix[-1] + d)
        # stack entries: (position, picked indices, running sum)
        stack = [(0, (), 0)]
        while stack:
            i, picked, total = stack.pop()
            if len(picked) == k:
                if (mode == "exact" and total == want) or \
                        (mode == "atleast" and total >= want):
                    yield sorted(order[c] for c in picked)
                continue
            if i >= t or t - i < k - len(picked):
                continue
            rem = k - len(picked)
            if total + prefix[i + rem] - prefix[i] < want:
                continue
            if mode == "exact" and total + prefix[t] - prefix[t - rem] > want:
                continue
            # push skip first so take is explored first (deterministic order)
            stack.append((i + 1, picked, total))
            stack.append((i + 1, picked + (i,), total + vals[i]))


class _PoolFull(Exception):
    pass


def branch_and_bound(g: BipartiteGraph, params: SearchParams) -> SolutionPool:
    """Exact search with an optimality certificate; on a time limit the best
    incumbent is returned uncertified."""
    if g.u_count == 0 or g.v_count == 0:
        return SolutionPool(solutions=())
    try:
        engine = _BnB(g, params)
    except InfeasibleBoundsError:
        return SolutionPool(solutions=())
    finished, bound = engine.solve()
    if engine.best_val is None:
        return SolutionPool(solutions=(), exhausted=finished)
    if not finished:
        sel = engine.best_sel
        val = _objective_value(params.objective, sel.edges,
                               len(sel.u_set), len(sel.v_set))
        sol = Solution(selection=sel, objective_value=val,
                       certified_optimal=False, bound_at_termination=bound)
        return SolutionPool(solutions=(sol,), exhausted=False)
    found, truncated = engine.collect_pool()
    opt = (engine.best_val if params.objective == SIZE
           else Fraction(*engine.best_val))
    pool = _sorted_pool(found, params.objective, truncated, True, float(opt))
    for sol in pool.solutions:
        assert is_gamma_quasi_biclique(g, sol.selection, params.gamma)
    return pool


def enumerate_balanced(g: BipartiteGraph, params: SearchParams) -> SolutionPool:
    """Optimum restricted to theta-near-balanced selections."""
    if params.theta is None:
        raise ValueError("enumerate_balanced requires theta to be set")
    return branch_and_bound(g, params)
