"""Shared helpers for the test suite: small-graph generators and independent
brute-force oracles for the combinatorial optima and the MIP encodings."""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from pathlib import Path
from typing import Optional

import qbc
from qbc.bigraph import BipartiteGraph, induced_stats
from qbc.bounds import SizeBounds
from qbc.exact import QUALITY, SIZE
from qbc.mip import MipInstance, constraint_satisfied

DATA_DIR = Path(qbc.__file__).parent / "data"


def graph_from_mask(nu: int, nv: int, mask: int) -> BipartiteGraph:
    """Graph on nu x nv vertices whose edge (i, j) is bit i*nv+j of mask."""
    edges = [(i, j) for i in range(nu) for j in range(nv)
             if mask >> (i * nv + j) & 1]
    return BipartiteGraph.from_edges(nu, nv, edges)


def iter_graphs(nu: int, nv: int):
    for mask in range(1 << (nu * nv)):
        yield graph_from_mask(nu, nv, mask)


def random_graph(rng: random.Random, max_side: int = 8,
                 density_lo: float = 0.2, density_hi: float = 0.9) -> BipartiteGraph:
    nu = rng.randint(1, max_side)
    nv = rng.randint(1, max_side)
    p = rng.uniform(density_lo, density_hi)
    edges = [(i, j) for i in range(nu) for j in range(nv) if rng.random() < p]
    return BipartiteGraph.from_edges(nu, nv, edges)


def brute_force(g: BipartiteGraph, gamma, objective: str = SIZE,
                theta=None, size_bounds: Optional[SizeBounds] = None):
    """Exhaustive optimum over all selections.

    Returns (best_value, sorted list of optimal (u_set, v_set) pairs);
    (None, []) when no selection is feasible.  best_value is an int for the
    size objective and an exact Fraction for the quality objective.
    """
    gamma = Fraction(str(gamma)) if not isinstance(gamma, Fraction) else gamma
    theta = Fraction(str(theta)) if theta is not None and not isinstance(theta, Fraction) else theta
    sb = size_bounds
    best = None
    winners: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for r_u in range(1, g.u_count + 1):
        for u_set in itertools.combinations(range(g.u_count), r_u):
            for r_v in range(1, g.v_count + 1):
                if sb is not None and not (
                        sb.omega_l_u <= r_u <= sb.omega_u_u
                        and sb.omega_l_v <= r_v <= sb.omega_u_v):
                    continue
                if theta is not None and not (
                        (1 - theta) * r_v <= r_u <= (1 + theta) * r_v):
                    continue
                for v_set in itertools.combinations(range(g.v_count), r_v):
                    sel = induced_stats(g, u_set, v_set)
                    if sel.edges < gamma * r_u * r_v:
                        continue
                    val = (r_u + r_v if objective == SIZE
                           else Fraction(sel.edges * sel.edges, r_u * r_v))
                    if best is None or val > best:
                        best = val
                        winners = [(sel.u_set, sel.v_set)]
                    elif val == best:
                        winners.append((sel.u_set, sel.v_set))
    return best, sorted(winners)


# ---------------------------------------------------------------------------
# brute force over 0/1 assignments of the emitted MIP instances
# ---------------------------------------------------------------------------

def _feasible_assignments(instance: MipInstance, g: BipartiteGraph):
    """All feasible 0/1 assignments of a size- or quality-model instance.

    Enumerates vertex picks directly; every other variable family is forced
    by an equality constraint once the vertex picks are fixed (y by the
    linking constraints, w by the edge-count channel, the one-hot families
    by their sum-to-one constraints), so enumerating the forced candidates
    and then checking *every* constraint generically loses no assignments.
    """
    z_names = [v.name for v in instance.variables if v.name.startswith("z_")]
    w_names = [v.name for v in instance.variables if v.name.startswith("w_")]
    for u_bits in range(1 << g.u_count):
        n = u_bits.bit_count()
        for v_bits in range(1 << g.v_count):
            m = v_bits.bit_count()
            values = {f"u_{i}": float(u_bits >> i & 1) for i in range(g.u_count)}
            values.update({f"v_{j}": float(v_bits >> j & 1)
                           for j in range(g.v_count)})
            edges = 0
            for i, j in g.edges():
                y = float((u_bits >> i & 1) and (v_bits >> j & 1))
                values[f"y_{i}_{j}"] = y
                edges += int(y)
            # the sum-to-one plus channeling equalities force the one-hot
            # picks; an assignment with any other pick violates an equality
            z_pick = f"z_{n}_{m}"
            if z_names and z_pick not in z_names:
                continue
            w_pick = f"w_{edges}"
            if w_names and w_pick not in w_names:
                continue
            for name in z_names:
                values[name] = float(name == z_pick)
            for name in w_names:
                values[name] = float(name == w_pick)
            if all(constraint_satisfied(c, values)
                   for c in instance.constraints):
                yield values


def brute_force_mip(instance: MipInstance, g: BipartiteGraph):
    """(best objective, best assignment) over all feasible 0/1 assignments."""
    best = None
    best_values = None
    for values in _feasible_assignments(instance, g):
        obj = sum(float(c) * values[v] for c, v in instance.objective_terms)
        if best is None or obj > best + 1e-12:
            best, best_values = obj, values
    return best, best_values
