"""Immutable bipartite graph with bit-vector adjacency, plus loaders and
density/degree primitives.

Vertices on each side are dense 0-based indices; adjacency rows are Python
ints used as bit vectors over the opposite side (bit j of ``adj[i]`` set
iff (i, j) is an edge).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import EmptySideError, GraphParseError

U_SIDE = "U"
V_SIDE = "V"


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def bits_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class BipartiteGraph:
    u_count: int
    v_count: int
    adj: tuple[int, ...]  # one bit vector over V per U vertex
    edge_count: int
    u_labels: Optional[tuple[str, ...]] = None
    v_labels: Optional[tuple[str, ...]] = None
    # column masks (one bit vector over U per V vertex), filled in __post_init__
    v_adj: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if len(self.adj) != self.u_count:
            raise ValueError("adjacency row count does not match u_count")
        full_v = (1 << self.v_count) - 1
        total = 0
        for row in self.adj:
            if row & ~full_v:
                raise ValueError("edge references a V index out of range")
            total += row.bit_count()
        if total != self.edge_count:
            raise ValueError("edge_count does not match adjacency bits")
        cols = [0] * self.v_count
        for i, row in enumerate(self.adj):
            for j in bits_of(row):
                cols[j] |= 1 << i
        object.__setattr__(self, "v_adj", tuple(cols))

    @classmethod
    def from_edges(
        cls,
        u_count: int,
        v_count: int,
        edges: Iterable[tuple[int, int]],
        u_labels: Optional[Sequence[str]] = None,
        v_labels: Optional[Sequence[str]] = None,
    ) -> "BipartiteGraph":
        rows = [0] * u_count
        for i, j in edges:
            if not (0 <= i < u_count and 0 <= j < v_count):
                raise ValueError(f"edge ({i}, {j}) out of range for {u_count}x{v_count}")
            rows[i] |= 1 << j  # duplicates collapse: simple-graph semantics
        return cls(
            u_count=u_count,
            v_count=v_count,
            adj=tuple(rows),
            edge_count=sum(r.bit_count() for r in rows),
            u_labels=tuple(u_labels) if u_labels is not None else None,
            v_labels=tuple(v_labels) if v_labels is not None else None,
        )

    def transpose(self) -> "BipartiteGraph":
        """Swap the two sides (U becomes V and vice versa)."""
        return BipartiteGraph(
            u_count=self.v_count,
            v_count=self.u_count,
            adj=self.v_adj,
            edge_count=self.edge_count,
            u_labels=self.v_labels,
            v_labels=self.u_labels,
        )

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.u_count) for j in bits_of(self.adj[i])]

    def full_u_mask(self) -> int:
        return (1 << self.u_count) - 1

    def full_v_mask(self) -> int:
        return (1 << self.v_count) - 1


@dataclass(frozen=True)
class Selection:
    """A pair of vertex subsets with its induced edge count and density.

    ``density`` is None when either side is empty (undefined, not 0 or 1).
    """

    u_set: tuple[int, ...]
    v_set: tuple[int, ...]
    edges: int
    density: Optional[Fraction]

    @property
    def total_size(self) -> int:
        return len(self.u_set) + len(self.v_set)

    def key(self) -> tuple:
        return (self.u_set, self.v_set)


def density(g: BipartiteGraph) -> Fraction:
    """Edge count over the maximum possible edge count."""
    if g.u_count == 0 or g.v_count == 0:
        raise EmptySideError("density is undefined for a graph with an empty side")
    return Fraction(g.edge_count, g.u_count * g.v_count)


def induced_edge_count(g: BipartiteGraph, u_mask: int, v_mask: int) -> int:
    total = 0
    m = u_mask
    while m:
        i = (m & -m).bit_length() - 1
        total += (g.adj[i] & v_mask).bit_count()
        m &= m - 1
    return total


def induced_stats(g: BipartiteGraph, u_set: Iterable[int], v_set: Iterable[int]) -> Selection:
    """Selection statistics for the subgraph induced by the two index sets."""
    u_sorted = tuple(sorted(set(u_set)))
    v_sorted = tuple(sorted(set(v_set)))
    if u_sorted and not (0 <= u_sorted[0] and u_sorted[-1] < g.u_count):
        raise ValueError("U index out of range")
    if v_sorted and not (0 <= v_sorted[0] and v_sorted[-1] < g.v_count):
        raise ValueError("V index out of range")
    edges = induced_edge_count(g, mask_of(u_sorted), mask_of(v_sorted))
    if u_sorted and v_sorted:
        dens = Fraction(edges, len(u_sorted) * len(v_sorted))
    else:
        dens = None
    return Selection(u_set=u_sorted, v_set=v_sorted, edges=edges, density=dens)


def degree(g: BipartiteGraph, side: str, index: int) -> int:
    """Degree of one vertex in the whole graph."""
    if side == U_SIDE:
        if not 0 <= index < g.u_count:
            raise ValueError(f"U index {index} out of range")
        return g.adj[index].bit_count()
    if side == V_SIDE:
        if not 0 <= index < g.v_count:
            raise ValueError(f"V index {index} out of range")
        return g.v_adj[index].bit_count()
    raise ValueError(f"side must be {U_SIDE!r} or {V_SIDE!r}")


def restricted_degree(g: BipartiteGraph, side: str, index: int, opposite: Iterable[int]) -> int:
    """d(x, S): neighbors of vertex x within subset S of the opposite side."""
    mask = mask_of(opposite)
    if side == U_SIDE:
        if not 0 <= index < g.u_count:
            raise ValueError(f"U index {index} out of range")
        return (g.adj[index] & mask).bit_count()
    if side == V_SIDE:
        if not 0 <= index < g.v_count:
            raise ValueError(f"V index {index} out of range")
        return (g.v_adj[index] & mask).bit_count()
    raise ValueError(f"side must be {U_SIDE!r} or {V_SIDE!r}")


_SEP_RE = re.compile(r"[,\t ]+")


def load_edge_list(text: str) -> BipartiteGraph:
    """Parse a two-column edge list (tab/space/comma separated, # comments).

    Vertex ids that are all numeric are taken as 0-based indices; any other
    id is mapped to a dense index in first-appearance order.  A file mixing
    both styles is treated as string-labelled.
    """
    pairs: list[tuple[str, str]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = _SEP_RE.split(line)
        if len(parts) != 2:
            raise GraphParseError(f"expected two fields, got {len(parts)}: {raw!r}", line_no)
        pairs.append((parts[0], parts[1]))

    all_numeric = all(a.lstrip("-").isdigit() and b.lstrip("-").isdigit() for a, b in pairs)
    if all_numeric and pairs:
        edges = []
        for line_no_offset, (a, b) in enumerate(pairs):
            i, j = int(a), int(b)
            if i < 0 or j < 0:
                raise GraphParseError(f"negative vertex id in edge ({a}, {b})")
            edges.append((i, j))
        u_count = max(i for i, _ in edges) + 1
        v_count = max(j for _, j in edges) + 1
        return BipartiteGraph.from_edges(u_count, v_count, edges)

    u_index: dict[str, int] = {}
    v_index: dict[str, int] = {}
    edges = []
    for a, b in pairs:
        if a not in u_index:
            u_index[a] = len(u_index)
        if b not in v_index:
            v_index[b] = len(v_index)
        edges.append((u_index[a], v_index[b]))
    return BipartiteGraph.from_edges(
        len(u_index), len(v_index), edges,
        u_labels=list(u_index), v_labels=list(v_index),
    )


def load_pajek_two_mode(text: str) -> BipartiteGraph:
    """Parse a Pajek two-mode network.

    Header ``*Vertices N M``: vertices 1..M are the first mode (U), M+1..N
    the second (V).  Edges are 1-based pairs in an ``*Edges`` or ``*Arcs``
    section and must connect the two modes.
    """
    lines = text.splitlines()
    n_total = n_first = None
    labels: dict[int, str] = {}
    edges: list[tuple[int, int]] = []
    section = None
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        low = line.lower()
        if low.startswith("*vertices"):
            parts = line.split()
            if len(parts) < 3:
                raise GraphParseError("two-mode *Vertices header needs N and M", line_no)
            try:
                n_total, n_first = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError(f"bad *Vertices header: {line!r}", line_no) from None
            if not 0 <= n_first <= n_total:
                raise GraphParseError("first-mode size exceeds vertex count", line_no)
            section = "vertices"
            continue
        if low.startswith("*edges") or low.startswith("*arcs"):
            if n_total is None:
                raise GraphParseError("edge section before *Vertices header", line_no)
            section = "edges"
            continue
        if line.startswith("*"):
            section = "other"
            continue
        if section == "vertices":
            m = re.match(r"(\d+)\s+\"([^\"]*)\"", line) or re.match(r"(\d+)\s+(\S+)", line)
            if m:
                labels[int(m.group(1))] = m.group(2)
            continue
        if section == "edges":
            parts = line.split()
            if len(parts) < 2:
                raise GraphParseError(f"expected an endpoint pair: {line!r}", line_no)
            try:
                a, b = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphParseError(f"non-integer endpoint: {line!r}", line_no) from None
            if not (1 <= a <= n_total and 1 <= b <= n_total):
                raise GraphParseError(f"endpoint out of range: {line!r}", line_no)
            a_first = a <= n_first
            b_first = b <= n_first
            if a_first == b_first:
                raise GraphParseError(
                    f"edge {a}-{b} joins two vertices of the same mode", line_no)
            if not a_first:
                a, b = b, a
            edges.append((a - 1, b - n_first - 1))
    if n_total is None:
        raise GraphParseError("missing *Vertices header")
    u_labels = [labels.get(i + 1, str(i + 1)) for i in range(n_first)]
    v_labels = [labels.get(n_first + j + 1, str(n_first + j + 1)) for j in range(n_total - n_first)]
    return BipartiteGraph.from_edges(
        n_first, n_total - n_first, edges, u_labels=u_labels, v_labels=v_labels)
