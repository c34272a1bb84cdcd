"""Regular graphs used as raw material for configuration building.

Two suppliers live here.  circulant_regular gives the canonical connected
k-regular graph on b vertices used by the degree two pipeline.  The
scaffold generator regular_graph_with_girth produces an n-regular graph
with no cycle shorter than a requested girth; the composition surgery for
minimal configurations consumes these with girth 5.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExhausted, InfeasibleParameters, NotConnected, NotRegular


@dataclass(frozen=True)
class RegularGraph:
    """Simple undirected graph with every vertex of the same degree."""

    n: int
    degree: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        counts = [0] * self.n
        for x, y in self.edges:
            if not (0 <= x < y < self.n):
                raise NotRegular(f"edge ({x},{y}) is not normalized to "
                                 f"0 <= x < y < {self.n}")
            counts[x] += 1
            counts[y] += 1
        bad = [x for x, c in enumerate(counts) if c != self.degree]
        if bad:
            raise NotRegular(f"vertex {bad[0]} has degree "
                             f"{counts[bad[0]]}, expected {self.degree}")

    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for x, y in self.edges:
            adj[x].append(y)
            adj[y].append(x)
        return tuple(tuple(sorted(row)) for row in adj)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        adjacency = self.adjacency()
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        reached = 1
        while queue:
            x = queue.popleft()
            for y in adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    reached += 1
                    queue.append(y)
        return reached == self.n

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def circulant_regular(k: int, b: int) -> RegularGraph:
    """Connected k-regular circulant graph on vertices 0..b-1.

    Even k joins i to i +- 1, ..., i +- k/2 modulo b.  Odd k needs even b
    and adds the diameter i to i + b/2 on top of the even part.  Feasible
    exactly when 2 <= k, k + 1 <= b and (k even or b even); degenerate
    demands raise InfeasibleParameters.
    """
    if k < 2:
        raise InfeasibleParameters(f"degree {k} < 2 cannot be connected "
                                   f"on {b} >= 4 vertices")
    if b < k + 1:
        raise InfeasibleParameters(f"{b} vertices admit degree at most "
                                   f"{b - 1}, wanted {k}")
    if k % 2 and b % 2:
        raise InfeasibleParameters(f"odd degree {k} needs an even vertex "
                                   f"count, got {b}")
    edges = set()
    for dist in range(1, k // 2 + 1):
        for i in range(b):
            edges.add(_norm(i, (i + dist) % b))
    if k % 2:
        for i in range(b // 2):
            edges.add(_norm(i, i + b // 2))
    return RegularGraph(b, k, frozenset(edges))


def _norm(x: int, y: int) -> tuple[int, int]:
    return (x, y) if x < y else (y, x)


@dataclass(frozen=True)
class ScaffoldOptions:
    """Tuning knobs for regular_graph_with_girth.

    multiplier scales the starting vertex count, seed drives the repair
    path's random pairing choices, restart_limit caps how many times the
    repair path restarts before doubling the vertex count and eventually
    giving up.  The difference family path ignores seed: it is closed
    form and deterministic.
    """

    girth: int = 5
    multiplier: int = 1
    seed: int = 0
    restart_limit: int = 6


def regular_graph_with_girth(n: int, options: ScaffoldOptions = ScaffoldOptions()) -> RegularGraph:
    """An n-regular graph with girth at least options.girth, certified.

    For girth up to 6 the graph is built in closed form from a perfect
    difference family: greedily pick an n element set B with pairwise
    distinct differences (a Sidon set), set m = 2*max(B) + 1, and join
    left vertex i to right vertex m + ((i - s) mod m) for each s in B.
    Distinct differences kill 4-cycles, bipartiteness kills odd cycles,
    so the girth is at least 6, and difference max(B) - second(B) ... 1
    being realized keeps it connected.  This is instant for any practical
    n.  Larger girths start from a scaled up difference family graph and
    repair it with girth-safe edge swaps (degree-preserving two-swaps
    admitted only when distance checks rule out any new short cycle),
    retrying and growing until a budget runs out.  Either way the result
    is re-checked before being returned.
    """
    if n < 3:
        raise InfeasibleParameters(f"scaffold degree must be at least 3, got {n}")
    if options.girth < 3:
        raise InfeasibleParameters(f"girth below 3 is meaningless, got {options.girth}")
    if options.girth <= 6:
        graph = _difference_family_graph(n, options.multiplier)
    else:
        graph = _repair_scaffold(n, options)
    _certify(graph, n, options.girth)
    return graph


def _certify(graph: RegularGraph, n: int, target_girth: int) -> None:
    # RegularGraph.__post_init__ has already enforced n-regularity.
    from .incidence import girth as measure_girth
    if graph.degree != n:
        raise NotRegular(f"scaffold degree {graph.degree}, wanted {n}")
    if not graph.is_connected():
        raise NotConnected("scaffold is not connected")
    got = measure_girth(graph)
    if got < target_girth:
        raise NotRegular(f"scaffold girth {got} below target {target_girth}")


@lru_cache(maxsize=None)
def _sidon_prefix(size: int) -> tuple[int, ...]:
    """First `size` terms of the greedy sequence with distinct pairwise sums.

    Distinct pairwise sums and distinct pairwise differences coincide for
    integer sets, so this greedy prefix (1, 2, 3, 5, 8, 13, 21, 31, ...)
    serves as a difference family base.
    """
    picked: list[int] = []
    sums: set[int] = set()
    candidate = 1
    while len(picked) < size:
        new_sums = {candidate + x for x in picked} | {2 * candidate}
        if not (new_sums & sums):
            picked.append(candidate)
            sums |= new_sums
        candidate += 1
    return tuple(picked)


def _difference_family_graph(n: int, multiplier: int) -> RegularGraph:
    base = _sidon_prefix(n)
    m = (2 * base[-1] + 1) * max(1, multiplier)
    edges = set()
    for i in range(m):
        for s in base:
            edges.add(_norm(i, m + ((i - s) % m)))
    return RegularGraph(2 * m, n, frozenset(edges))


def _ball_volume(n: int, radius: int) -> int:
    """Vertices an n-regular graph can reach within `radius` steps."""
    return 1 + n * sum((n - 1) ** i for i in range(radius))


def _repair_scaffold(n: int, options: ScaffoldOptions) -> RegularGraph:
    """Randomized swap-repair search for higher girth scaffolds.

    The seed graph is the girth 6 difference family graph scaled up to
    the working size, so only cycles of length 6 to girth-1 ever need
    removal.
    """
    rng = random.Random(options.seed)
    girth_target = options.girth
    # the swap move needs vertex pairs at distance girth-1 to exist at
    # all, so start at twice the volume of a radius girth-2 ball
    floor = max(2 * n + 2, 2 * _ball_volume(n, girth_target - 2))
    vertices = floor * max(1, options.multiplier)
    if vertices > 200_000:
        raise BudgetExhausted(
            f"girth {girth_target} at degree {n} needs roughly {vertices} "
            f"vertices, beyond what this generator will attempt")
    for _round in range(4):
        for _restart in range(options.restart_limit):
            graph = _try_repair(n, vertices, girth_target, rng)
            if graph is not None:
                return graph
        vertices *= 2
    raise BudgetExhausted(
        f"no {n}-regular graph of girth {girth_target} found within the "
        f"restart budget; raise ScaffoldOptions.multiplier or restart_limit")


def _try_repair(n: int, vertices: int, girth_target: int,
                rng: random.Random) -> RegularGraph | None:
    base_span = 2 * (2 * _sidon_prefix(n)[-1] + 1)
    seed_graph = _difference_family_graph(n, -(-vertices // base_span))
    adj: dict[int, set[int]] = {x: set() for x in range(seed_graph.n)}
    for x, y in seed_graph.edges:
        adj[x].add(y)
        adj[y].add(x)
    vertices = seed_graph.n

    # each successful swap removes a short cycle and, by the distance
    # checks, introduces none, so sweeps make monotone progress
    for _sweep in range(50):
        candidates = _short_cycle_edges(adj, girth_target)
        if not candidates:
            edges = frozenset(_norm(x, y) for x in adj for y in adj[x])
            graph = RegularGraph(vertices, n, edges)
            return graph if graph.is_connected() else None
        rng.shuffle(candidates)
        progress = False
        for x, y in candidates:
            if y not in adj[x] or not _on_short_cycle(adj, x, y, girth_target):
                continue
            if _swap_away(adj, (x, y), girth_target, rng):
                progress = True
        if not progress:
            return None
    return None


def _swap_away(adj: dict[int, set[int]], bad: tuple[int, int],
               girth_target: int, rng: random.Random) -> bool:
    """Replace edge `bad` and some partner edge by a girth-safe 2-swap.

    Removing (x, y) and (u, w) and adding (x, u) and (y, w) keeps every
    degree intact.  The new edges are admitted one at a time, each only
    after a distance check that proves no cycle shorter than the target
    can pass through it.
    """
    x, y = bad
    vertices = len(adj)
    for _attempt in range(60):
        u = rng.randrange(vertices)
        if not adj[u] or u in (x, y):
            continue
        w = rng.choice(sorted(adj[u]))
        if w in (x, y):
            continue
        adj[x].discard(y)
        adj[y].discard(x)
        adj[u].discard(w)
        adj[w].discard(u)
        pairings = [((x, u), (y, w)), ((x, w), (y, u))]
        rng.shuffle(pairings)
        for (p, q), (s, t) in pairings:
            if q in adj[p] or t in adj[s]:
                continue
            if not _distance_at_least(adj, p, q, girth_target - 1):
                continue
            adj[p].add(q)
            adj[q].add(p)
            if _distance_at_least(adj, s, t, girth_target - 1):
                adj[s].add(t)
                adj[t].add(s)
                return True
            adj[p].discard(q)
            adj[q].discard(p)
        adj[x].add(y)
        adj[y].add(x)
        adj[u].add(w)
        adj[w].add(u)
    return False


def _short_cycle_edges(adj: dict[int, set[int]],
                       girth_target: int) -> list[tuple[int, int]]:
    """Edges lying on some cycle shorter than girth_target.

    One depth-capped BFS per root; a non-tree edge discovered at depths
    dx, dy closes a cycle of length at most dx + dy + 1 through itself.
    Scanning every root sees every short cycle, so an empty result
    certifies girth at least girth_target.
    """
    cap = (girth_target - 1) // 2 + 1
    found: set[tuple[int, int]] = set()
    for root in adj:
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if dist[x] >= cap:
                continue
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x] and parent[y] != x:
                    if dist[x] + dist[y] + 1 < girth_target:
                        found.add(_norm(x, y))
    return sorted(found)


def _on_short_cycle(adj: dict[int, set[int]], x: int, y: int,
                    girth_target: int) -> bool:
    # the edge (x, y) lies on a cycle shorter than girth_target exactly
    # when deleting it keeps dist(x, y) <= girth_target - 2
    adj[x].discard(y)
    adj[y].discard(x)
    close = not _distance_at_least(adj, x, y, girth_target - 1)
    adj[x].add(y)
    adj[y].add(x)
    return close


def _distance_at_least(adj: dict[int, set[int]], src: int, dst: int,
                       bound: int) -> bool:
    """True when every path from src to dst has at least `bound` edges.

    Meet in the middle: a path of at most bound-1 edges exists exactly
    when the radius (bound-1)//2 ball around src touches the ball of the
    complementary radius around dst.
    """
    if src == dst:
        return bound <= 0
    near = _ball(adj, src, (bound - 1) // 2)
    if dst in near:
        return False
    far = bound - 1 - (bound - 1) // 2
    dist = {dst: 0}
    queue = deque([dst])
    while queue:
        x = queue.popleft()
        if dist[x] >= far:
            continue
        for y in adj[x]:
            if y in near:
                return False
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return True


def _ball(adj: dict[int, set[int]], src: int, radius: int) -> set[int]:
    dist = {src: 0}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if dist[x] >= radius:
            continue
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return set(dist)
