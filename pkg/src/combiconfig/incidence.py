"""Biregular incidence structures and their verification.

A configuration with parameters (v, b, r, k) is a connected bipartite
incidence structure: v points, each on exactly r lines, and b lines, each
through exactly k points, such that two distinct points share at most one
line.  The last condition is equivalent to the incidence graph having no
cycle of length 4, so a nonempty configuration has bipartite girth at
least 6.  The empty structure (v = b = 0) counts as a configuration and
is connected by convention.

Counting incidences two ways gives v*r = b*k, so v = d*k/gcd(r, k) and
b = d*r/gcd(r, k) for a nonnegative integer d, the scale factor of the
configuration.  Counting the points seen from one point gives the second
necessary condition v >= r*(k - 1) + 1 for nonempty configurations.

Points and lines are dense 0-based indices internally; serialization
(see serialize.py) uses 1-based labels.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import AnchorNotFound, InfeasibleParameters


@dataclass(frozen=True)
class Configuration:
    """An immutable incidence structure candidate.

    The constructor performs no validation; verify() reports on every
    invariant, including malformed incidences that point outside the
    declared index ranges.
    """

    v: int
    b: int
    r: int
    k: int
    incidences: frozenset[tuple[int, int]]

    @classmethod
    def empty(cls, r: int, k: int) -> "Configuration":
        return cls(0, 0, r, k, frozenset())

    @classmethod
    def from_lines(cls, lines: Sequence[Sequence[int]], r: int, k: int,
                   v: int | None = None) -> "Configuration":
        """Build a configuration from lines given as point index sets."""
        if v is None:
            v = max((p for line in lines for p in line), default=-1) + 1
        inc = frozenset((p, j) for j, line in enumerate(lines) for p in line)
        return cls(v, len(lines), r, k, inc)

    @property
    def is_empty(self) -> bool:
        return self.v == 0 and self.b == 0

    @cached_property
    def point_rows(self) -> tuple[tuple[int, ...], ...]:
        """For each point, the sorted tuple of lines through it."""
        rows: list[list[int]] = [[] for _ in range(self.v)]
        for p, j in self.incidences:
            if 0 <= p < self.v:
                rows[p].append(j)
        return tuple(tuple(sorted(row)) for row in rows)

    @cached_property
    def line_rows(self) -> tuple[tuple[int, ...], ...]:
        """For each line, the sorted tuple of points on it."""
        rows: list[list[int]] = [[] for _ in range(self.b)]
        for p, j in self.incidences:
            if 0 <= j < self.b:
                rows[j].append(p)
        return tuple(tuple(sorted(row)) for row in rows)

    def sorted_incidences(self) -> list[tuple[int, int]]:
        return sorted(self.incidences)

    def __repr__(self) -> str:  # keep large incidence sets out of reprs
        return (f"Configuration(v={self.v}, b={self.b}, r={self.r}, "
                f"k={self.k}, |I|={len(self.incidences)})")


@dataclass(frozen=True)
class ConfigTuple:
    """Parameter tuple (v, b, r, k) together with its scale factor d."""

    v: int
    b: int
    r: int
    k: int
    d: int


@dataclass(frozen=True)
class Violation:
    """A single violated invariant with a concrete witness."""

    invariant: str
    witness: tuple
    detail: str

    def __str__(self) -> str:
        return f"{self.invariant}: {self.detail} (witness {self.witness})"


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return "pass"
        return "\n".join(str(viol) for viol in self.violations)


def verify(config: Configuration) -> VerificationReport:
    """Check every configuration invariant and report all violations.

    Checked, in order: structural integrity of the incidence set, point
    and line degrees, the at-most-one-shared-line condition (with a pair
    of points and the two offending lines as witness), connectivity, and
    the two arithmetic conditions v*r = b*k and v >= r*(k - 1) + 1.
    The report collects all violations, not only the first.
    """
    out: list[Violation] = []
    v, b, r, k = config.v, config.b, config.r, config.k

    dangling = sorted((p, j) for p, j in config.incidences
                      if not (0 <= p < v and 0 <= j < b))
    for p, j in dangling:
        out.append(Violation("structural", (p, j),
                             f"incidence ({p},{j}) outside index ranges "
                             f"0..{v - 1} x 0..{b - 1}"))

    for p, row in enumerate(config.point_rows):
        if len(row) != r:
            out.append(Violation("point-degree", (p,),
                                 f"point {p} lies on {len(row)} lines, "
                                 f"expected {r}"))
    for j, row in enumerate(config.line_rows):
        if len(row) != k:
            out.append(Violation("line-degree", (j,),
                                 f"line {j} contains {len(row)} points, "
                                 f"expected {k}"))

    seen_pairs: dict[tuple[int, int], int] = {}
    for j, row in enumerate(config.line_rows):
        for a_idx in range(len(row)):
            for b_idx in range(a_idx + 1, len(row)):
                pair = (row[a_idx], row[b_idx])
                if pair in seen_pairs:
                    out.append(Violation(
                        "pair-intersection", (*pair, seen_pairs[pair], j),
                        f"points {pair[0]} and {pair[1]} share lines "
                        f"{seen_pairs[pair]} and {j}"))
                else:
                    seen_pairs[pair] = j

    if not _is_connected(config):
        out.append(Violation("connectivity", (),
                             "incidence graph is not connected"))

    if v * r != b * k:
        out.append(Violation("count-identity", (v, r, b, k),
                             f"v*r = {v * r} differs from b*k = {b * k}"))
    if v > 0 and v < r * (k - 1) + 1:
        out.append(Violation("point-count", (v,),
                             f"v = {v} is below the minimum "
                             f"r*(k-1)+1 = {r * (k - 1) + 1}"))

    return VerificationReport(tuple(out))


def _is_connected(config: Configuration) -> bool:
    # BFS over the bipartite incidence graph; empty structure passes.
    v, b = config.v, config.b
    if v + b == 0:
        return True
    seen_p = [False] * v
    seen_l = [False] * b
    if v > 0:
        queue: deque[tuple[bool, int]] = deque([(True, 0)])
        seen_p[0] = True
    else:
        queue = deque([(False, 0)])
        seen_l[0] = True
    reached = 1
    while queue:
        is_point, x = queue.popleft()
        row = config.point_rows[x] if is_point else config.line_rows[x]
        for y in row:
            seen = seen_l if is_point else seen_p
            if 0 <= y < len(seen) and not seen[y]:
                seen[y] = True
                reached += 1
                queue.append((not is_point, y))
    return reached == v + b


def girth(obj) -> int | float:
    """Length of a shortest cycle, or math.inf for an acyclic graph.

    Accepts a Configuration (girth of its incidence graph) or any object
    with an adjacency() method returning per-vertex neighbor tuples, such
    as graphs.RegularGraph.
    """
    adjacency = _adjacency_of(obj)
    n = len(adjacency)
    best: int | float = math.inf
    dist = [0] * n
    parent = [0] * n
    stamp = [0] * n
    tick = 0
    for start in range(n):
        tick += 1
        dist[start] = 0
        parent[start] = -1
        stamp[start] = tick
        frontier = [start]
        depth = 0
        while frontier:
            # A cycle shorter than best must close within this radius.
            if best is not math.inf and depth > (best - 1) // 2:
                break
            nxt = []
            for x in frontier:
                for y in adjacency[x]:
                    if stamp[y] != tick:
                        stamp[y] = tick
                        dist[y] = depth + 1
                        parent[y] = x
                        nxt.append(y)
                    elif y != parent[x]:
                        length = dist[x] + dist[y] + 1
                        if length < best:
                            best = length
            frontier = nxt
            depth += 1
        if best == 3:
            break
    return best


def _adjacency_of(obj) -> tuple[tuple[int, ...], ...]:
    if isinstance(obj, Configuration):
        v = obj.v
        adj: list[tuple[int, ...]] = []
        for row in obj.point_rows:
            adj.append(tuple(v + j for j in row))
        for row in obj.line_rows:
            adj.append(row)
        return tuple(adj)
    return tuple(tuple(row) for row in obj.adjacency())


def tuple_of(config: Configuration) -> ConfigTuple:
    """Read off (v, b, r, k) and the scale factor d of a verified input."""
    if config.is_empty:
        return ConfigTuple(0, 0, config.r, config.k, 0)
    g = math.gcd(config.r, config.k)
    if (config.k <= 0 or config.r <= 0 or (config.v * g) % config.k
            or (config.b * g) % config.r
            or config.v * g // config.k != config.b * g // config.r):
        raise InfeasibleParameters(
            f"(v={config.v}, b={config.b}, r={config.r}, k={config.k}) "
            f"admits no integer scale factor")
    return ConfigTuple(config.v, config.b, config.r, config.k,
                       config.v * g // config.k)


def outer_lower_bound(r: int, k: int) -> int:
    """Least d not excluded by the two counting conditions.

    v >= r*(k - 1) + 1 bounds d from below, and because the roles of
    points and lines can be exchanged the mirrored condition
    b >= k*(r - 1) + 1 does too; the bound is the larger of the two.
    """
    g = math.gcd(r, k)
    from_points = -((-(r * (k - 1) + 1) * g) // k)
    from_lines = -((-(k * (r - 1) + 1) * g) // r)
    return max(from_points, from_lines)


@dataclass(frozen=True)
class AnchoredConfiguration:
    """A configuration relabeled so three disjoint incidences are pinned.

    The anchors are the incidences (0, 0), (1, 1) and (v - 1, b - 1); their
    six endpoints are pairwise distinct, which is what the composition
    surgeries in constructions.py rely on.  point_map and line_map record
    the relabeling (old index -> new index) applied to the input of
    find_anchors, so callers can check isomorphism.
    """

    config: Configuration
    point_map: tuple[int, ...]
    line_map: tuple[int, ...]

    def __post_init__(self) -> None:
        c = self.config
        for pair in self.anchors:
            if pair not in c.incidences:
                raise AnchorNotFound(f"anchor {pair} is not an incidence")

    @property
    def anchors(self) -> tuple[tuple[int, int], ...]:
        c = self.config
        return ((0, 0), (1, 1), (c.v - 1, c.b - 1))


def find_anchors(config: Configuration) -> AnchoredConfiguration:
    """Select three pairwise disjoint incidences and relabel onto them.

    A path with five edges has six distinct vertices; its first, third and
    fifth edges are incidences with six pairwise distinct endpoints.  Such
    a path always exists in a verified configuration with r, k >= 2: no
    shared pair of points means a four edge path cannot close into a
    4-cycle, and minimum degree 2 extends it by one more edge.  The search
    is a lowest-index-first depth first search, so the result is
    deterministic.  Raises AnchorNotFound when the preconditions fail.
    """
    v, b = config.v, config.b
    if v < 3 or b < 3 or config.r < 2 or config.k < 2:
        raise AnchorNotFound(
            f"anchoring needs v, b >= 3 and r, k >= 2, got "
            f"(v={v}, b={b}, r={config.r}, k={config.k})")
    path = _five_edge_path(config)
    if path is None:
        raise AnchorNotFound("no path with five edges and six distinct "
                             "vertices exists")
    # path alternates point, line, point, line, point, line
    anchor_points = (path[0], path[2], path[4])
    anchor_lines = (path[1], path[3], path[5])
    point_map = _pin_map(v, anchor_points)
    line_map = _pin_map(b, anchor_lines)
    relabeled = Configuration(
        v, b, config.r, config.k,
        frozenset((point_map[p], line_map[j]) for p, j in config.incidences))
    return AnchoredConfiguration(relabeled, point_map, line_map)


def _pin_map(n: int, picked: tuple[int, int, int]) -> tuple[int, ...]:
    # picked[0] -> 0, picked[1] -> 1, picked[2] -> n-1, rest keep order
    mapping = [0] * n
    mapping[picked[0]] = 0
    mapping[picked[1]] = 1
    mapping[picked[2]] = n - 1
    nxt = 2
    for old in range(n):
        if old not in picked:
            mapping[old] = nxt
            nxt += 1
    return tuple(mapping)


def _five_edge_path(config: Configuration) -> tuple[int, ...] | None:
    """First alternating simple path with 6 vertices, points first.

    Returns (p0, l0, p1, l1, p2, l2) meaning p0-l0-p1-l1-p2-l2, or None.
    Every five edge path in a bipartite graph has a point end, so starting
    at points loses nothing.
    """
    for start in range(config.v):
        found = _extend_path(config, [start], on_point=True)
        if found is not None:
            return tuple(found)
    return None


def _extend_path(config: Configuration, path: list[int],
                 on_point: bool) -> list[int] | None:
    if len(path) == 6:
        return path
    current = path[-1]
    row = config.point_rows[current] if on_point else config.line_rows[current]
    # the side we are stepping onto occupies the odd or even path positions
    used = set(path[1::2]) if on_point else set(path[0::2])
    for nxt in row:
        if nxt in used:
            continue
        path.append(nxt)
        found = _extend_path(config, path, not on_point)
        if found is not None:
            return found
        path.pop()
    return None
