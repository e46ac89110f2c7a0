"""Validators for the three quasi-biclique definitions and the parameter
conversions between them.

All threshold comparisons are exact rational comparisons: gamma/delta/theta
given as decimal strings (or floats) are converted to exact fractions first,
so boundary densities like 4/5 vs 0.8 never flip on rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .bigraph import BipartiteGraph, Selection, mask_of
from .errors import EmptySideError

RationalLike = Union[Fraction, int, str, float]


def as_fraction(value: RationalLike) -> Fraction:
    """Exact rational from a decimal string, int, float or Fraction.

    Floats go through their shortest decimal repr, so 0.6 means 3/5.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(str(value))


@dataclass(frozen=True)
class QuasiParams:
    """Parameter bundle for the quasi-biclique criteria."""

    gamma: Fraction
    delta: Optional[Fraction] = None
    epsilon: Optional[int] = None
    tau: Optional[int] = None
    theta: Optional[Fraction] = None

    def __post_init__(self):
        if not 0 < self.gamma <= 1:
            raise ValueError(f"gamma must be in (0, 1], got {self.gamma}")
        if self.delta is not None and not 0 <= self.delta <= Fraction(1, 2):
            raise ValueError(f"delta must be in [0, 0.5], got {self.delta}")
        if self.epsilon is not None and self.epsilon < 0:
            raise ValueError(f"epsilon must be nonnegative, got {self.epsilon}")
        if self.tau is not None and self.tau < 1:
            raise ValueError(f"tau must be a positive integer, got {self.tau}")
        if self.theta is not None and not 0 <= self.theta < 1:
            raise ValueError(f"theta must be in [0, 1), got {self.theta}")
        if self.delta is not None and self.epsilon is not None:
            raise ValueError("set at most one of delta and epsilon")


def _require_nonempty(selection: Selection):
    if not selection.u_set or not selection.v_set:
        raise EmptySideError("quasi-biclique criteria are undefined on an empty side")


def is_gamma_quasi_biclique(g: BipartiteGraph, selection: Selection,
                            gamma: RationalLike) -> bool:
    """Aggregate criterion: induced density at least gamma (inclusive)."""
    _require_nonempty(selection)
    gamma = as_fraction(gamma)
    return selection.edges >= gamma * len(selection.u_set) * len(selection.v_set)


def is_delta_quasi_biclique(g: BipartiteGraph, selection: Selection,
                            delta: RationalLike) -> bool:
    """Per-vertex criterion: every vertex reaches a (1-delta) fraction of the
    opposite side."""
    _require_nonempty(selection)
    delta = as_fraction(delta)
    if not 0 <= delta <= Fraction(1, 2):
        raise ValueError(f"delta must be in [0, 0.5], got {delta}")
    u_mask = mask_of(selection.u_set)
    v_mask = mask_of(selection.v_set)
    nu, nv = len(selection.u_set), len(selection.v_set)
    need_u = (1 - delta) * nv  # exact rational right-hand side, no rounding
    need_v = (1 - delta) * nu
    for i in selection.u_set:
        if (g.adj[i] & v_mask).bit_count() < need_u:
            return False
    for j in selection.v_set:
        if (g.v_adj[j] & u_mask).bit_count() < need_v:
            return False
    return True


def is_epsilon_quasi_biclique(g: BipartiteGraph, selection: Selection,
                              epsilon: int) -> bool:
    """Per-vertex criterion: every vertex misses at most epsilon neighbors."""
    _require_nonempty(selection)
    if epsilon < 0:
        raise ValueError(f"epsilon must be nonnegative, got {epsilon}")
    u_mask = mask_of(selection.u_set)
    v_mask = mask_of(selection.v_set)
    nu, nv = len(selection.u_set), len(selection.v_set)
    for i in selection.u_set:
        if nv - (g.adj[i] & v_mask).bit_count() > epsilon:
            return False
    for j in selection.v_set:
        if nu - (g.v_adj[j] & u_mask).bit_count() > epsilon:
            return False
    return True


def delta_to_gamma(delta: RationalLike) -> Fraction:
    """Density threshold implied by the per-vertex delta criterion."""
    delta = as_fraction(delta)
    if not 0 <= delta <= Fraction(1, 2):
        raise ValueError(f"delta must be in [0, 0.5], got {delta}")
    return 1 - delta


def epsilon_to_gamma(epsilon: int, omega_l_u: int, omega_l_v: int) -> Fraction:
    """Density threshold implied by the epsilon criterion under lower size
    bounds on both sides."""
    low = min(omega_l_u, omega_l_v)
    if not 0 <= epsilon < low:
        raise ValueError(
            f"epsilon must satisfy 0 <= epsilon < min(lower bounds) = {low}, got {epsilon}")
    return 1 - Fraction(epsilon, low)
