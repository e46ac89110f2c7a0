"""Closed-form upper bounds on maximum quasi-(bi)clique size and the
edge-count range usable to tighten the quality model.

Bounds are returned as reals; callers floor them when they need integer
size caps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bigraph import BipartiteGraph, U_SIDE, V_SIDE, degree
from .errors import InfeasibleBoundsError
from .quasidef import RationalLike, as_fraction


@dataclass(frozen=True)
class SizeBounds:
    omega_l_u: int
    omega_u_u: int
    omega_l_v: int
    omega_u_v: int

    def __post_init__(self):
        if not 1 <= self.omega_l_u <= self.omega_u_u:
            raise ValueError(f"bad U-side bounds [{self.omega_l_u}, {self.omega_u_u}]")
        if not 1 <= self.omega_l_v <= self.omega_u_v:
            raise ValueError(f"bad V-side bounds [{self.omega_l_v}, {self.omega_u_v}]")

    @classmethod
    def default(cls, g: BipartiteGraph) -> "SizeBounds":
        return cls(1, max(g.u_count, 1), 1, max(g.v_count, 1))

    def check_against(self, g: BipartiteGraph):
        if self.omega_l_u > g.u_count:
            raise InfeasibleBoundsError(
                f"U-side lower bound {self.omega_l_u} exceeds |U| = {g.u_count}")
        if self.omega_l_v > g.v_count:
            raise InfeasibleBoundsError(
                f"V-side lower bound {self.omega_l_v} exceeds |V| = {g.v_count}")

    def clipped(self, g: BipartiteGraph) -> "SizeBounds":
        self.check_against(g)
        return SizeBounds(
            self.omega_l_u, min(self.omega_u_u, g.u_count),
            self.omega_l_v, min(self.omega_u_v, g.v_count))

    def swapped(self) -> "SizeBounds":
        return SizeBounds(self.omega_l_v, self.omega_u_v, self.omega_l_u, self.omega_u_u)


def quasi_clique_upper_bound(m: int, gamma: RationalLike) -> float:
    """Size cap for a gamma-quasi-clique in a general graph with m edges."""
    g = float(as_fraction(gamma))
    if g <= 0:
        raise ValueError("gamma must be positive")
    if m < 0:
        raise ValueError("edge count must be nonnegative")
    return (g + math.sqrt(g + 8 * g * m)) / (2 * g)


def balanced_biclique_upper_bound(m: int, gamma: RationalLike) -> float:
    """Size cap for a gamma-quasi-biclique with equal side sizes."""
    g = float(as_fraction(gamma))
    if g <= 0:
        raise ValueError("gamma must be positive")
    if m < 0:
        raise ValueError("edge count must be nonnegative")
    return math.sqrt(4 * m / g)


def near_balanced_upper_bound(m: int, gamma: RationalLike, theta: RationalLike) -> float:
    """Size cap when the side sizes differ by at most a relative slack theta."""
    g = float(as_fraction(gamma))
    t = float(as_fraction(theta))
    if g <= 0:
        raise ValueError("gamma must be positive")
    if not 0 <= t < 1:
        raise ValueError(f"theta must be in [0, 1), got {t}")
    a = (2 + t) * math.sqrt(m / (g * (1 - t)))
    b = (1 + 1 / (1 - t)) * math.sqrt(m * (1 + t) / g)
    return min(a, b)


def edge_count_bounds(g: BipartiteGraph, gamma: RationalLike, size_bounds: SizeBounds,
                      use_degree_bounds: bool = False) -> tuple[int, int]:
    """(k_min, k_max) range for the edge count of any quasi-biclique within
    the given size bounds.

    The degree-sum tightening of k_min is off by default: it is stated in
    terms of whole-graph degrees and its validity is not established, so the
    default solver path must not depend on it.
    """
    gamma = as_fraction(gamma)
    sb = size_bounds.clipped(g)
    k_max = min(g.edge_count, sb.omega_u_u * sb.omega_u_v)
    # any in-bounds selection needs at least gamma * lower-bound-product edges,
    # so when that exceeds |E| the range below comes out empty
    k_min = math.ceil(gamma * sb.omega_l_u * sb.omega_l_v)
    if use_degree_bounds:
        u_degs = sorted(degree(g, U_SIDE, i) for i in range(g.u_count))
        v_degs = sorted(degree(g, V_SIDE, j) for j in range(g.v_count))
        k_min = max(k_min, math.ceil(gamma * sum(u_degs[: sb.omega_l_u])))
        k_min = max(k_min, math.ceil(gamma * sum(v_degs[: sb.omega_l_v])))
    if k_min > k_max:
        raise InfeasibleBoundsError(
            f"edge-count range is empty: k_min {k_min} > k_max {k_max}")
    return k_min, k_max
