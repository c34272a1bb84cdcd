"""Constructions realizing configurable parameter tuples.

The r = 2 family is read off k-regular graphs through the natural
bijection between such graphs and (v, b, 2, k)-configurations.  For
r, k >= 3 a first nonzero scale factor comes from surgery on complete
bipartite blocks glued along a girth 5 scaffold, and every sufficiently
large scale factor is then reached by composing verified pieces with
edge swaps: amalgamation adds scale factors, and the fan construction
in sm_plus_one produces a scale factor coprime to the base's.
"""

from __future__ import annotations

import math
from typing import Sequence

from .errors import (
    InfeasibleParameters,
    NotConnected,
    NotExpressible,
    ParameterMismatch,
)
from .graphs import (
    RegularGraph,
    ScaffoldOptions,
    circulant_regular,
    regular_graph_with_girth,
)
from .incidence import (
    AnchoredConfiguration,
    Configuration,
    find_anchors,
    tuple_of,
)


def subdivision_configuration(graph: RegularGraph) -> Configuration:
    """The configuration whose points are the edges of a regular graph.

    Points are the edges of the graph in sorted order, lines are its
    vertices, and a point lies on a line when the edge meets the vertex.
    Every point is on exactly 2 lines and every line carries degree many
    points; simplicity of the graph is exactly the no-shared-pair
    condition, so the output is a (|E|, |V|, 2, degree)-configuration.
    """
    if not graph.is_connected():
        raise NotConnected(f"{graph.n}-vertex input graph is not connected")
    edges = graph.sorted_edges()
    incidences = set()
    for idx, (x, y) in enumerate(edges):
        incidences.add((idx, x))
        incidences.add((idx, y))
    return Configuration(len(edges), graph.n, 2, graph.degree,
                         frozenset(incidences))


def degree_two_configuration(k: int, d: int) -> Configuration:
    """A configuration with point degree 2, line degree k, scale factor d.

    Positive d maps to the circulant k-regular graph on 2d/gcd(2, k)
    vertices, whose edge-vertex incidences form the configuration.
    InfeasibleParameters propagates exactly when that graph does not
    exist, which is what makes the closed form in semigroup.d2k sharp.
    """
    if k < 2:
        raise InfeasibleParameters(f"line degree must be at least 2, got {k}")
    if d < 0:
        raise InfeasibleParameters(f"scale factor must be nonnegative, got {d}")
    if d == 0:
        return Configuration.empty(2, k)
    b = 2 * d // math.gcd(2, k)
    return subdivision_configuration(circulant_regular(k, b))


def dual(config: Configuration) -> Configuration:
    """Exchange the roles of points and lines.

    Sharing at most one neighbor is symmetric between the two sides, so
    the dual of a configuration is again a configuration, with r and k
    exchanged and the same scale factor.
    """
    return Configuration(config.b, config.v, config.k, config.r,
                         frozenset((j, p) for p, j in config.incidences))


def minimal_nontrivial(r: int, k: int,
                       options: ScaffoldOptions = ScaffoldOptions()) -> Configuration:
    """A first nonzero-scale configuration for point degree r, line degree k.

    Each vertex of an n-regular scaffold of girth at least 5, where
    n = (r - 1)(k - 1), carries a copy of the complete bipartite graph
    on k points and r lines.  Inside a copy only a spanning double star
    is kept: point 0 on every line plus every other point on line 0.
    The n remaining edges of each copy are matched one-to-one with the
    n scaffold edges at its vertex, and each scaffold edge swaps the two
    matched edges of its endpoint copies into a pair of cross edges.
    Degrees are untouched by the swaps, shared pairs inside a copy die
    with the removed edges, and a shared pair across copies would force
    a cycle of length at most 4 in the scaffold.  Requires r, k >= 3.
    """
    if r < 3 or k < 3:
        raise InfeasibleParameters(
            f"this construction needs degrees at least 3, got r={r}, k={k}; "
            f"use the degree two pipeline instead")
    n = (r - 1) * (k - 1)
    scaffold = regular_graph_with_girth(n, options)
    adjacency = scaffold.adjacency()

    incidences: set[tuple[int, int]] = set()
    copies = scaffold.n
    for u in range(copies):
        for j in range(r):
            incidences.add((u * k + 0, u * r + j))
        for i in range(1, k):
            incidences.add((u * k + i, u * r + 0))

    # assignment[u][w]: the unused copy-u edge consumed by scaffold edge {u,w};
    # unused edges (i, j), i >= 1, j >= 1 are consumed in lexicographic order
    # along u's neighbors in increasing order, one each since deg(u) = n
    assignment: list[dict[int, tuple[int, int]]] = []
    for u in range(copies):
        assert len(adjacency[u]) == n
        assignment.append({
            w: (1 + t // (r - 1), 1 + t % (r - 1))
            for t, w in enumerate(adjacency[u])
        })
    for u, w in scaffold.sorted_edges():
        i, j = assignment[u][w]
        p, q = assignment[w][u]
        incidences.add((u * k + i, w * r + q))
        incidences.add((w * k + p, u * r + j))

    return Configuration(copies * k, copies * r, r, k, frozenset(incidences))


def _as_anchored(config: Configuration | AnchoredConfiguration) -> AnchoredConfiguration:
    if isinstance(config, AnchoredConfiguration):
        return config
    return find_anchors(config)


def _plain(config: Configuration | AnchoredConfiguration) -> Configuration:
    if isinstance(config, AnchoredConfiguration):
        return config.config
    return config


def amalgamate(first: Configuration | AnchoredConfiguration,
               second: Configuration | AnchoredConfiguration) -> Configuration:
    """Compose two configurations into one with added scale factors.

    With both inputs anchored, the incidence (v-1, b-1) of the first and
    (0, 0) of the second are swapped for the two cross incidences
    (v-1, b) and (v, b-1) on the disjoint union.  The empty
    configuration acts as the identity.  Inputs given as plain
    configurations are anchored here first.
    """
    c1, c2 = _plain(first), _plain(second)
    if (c1.r, c1.k) != (c2.r, c2.k):
        raise ParameterMismatch(
            f"cannot compose ({c1.r},{c1.k}) with ({c2.r},{c2.k}) degrees")
    if c1.is_empty:
        return c2
    if c2.is_empty:
        return c1
    a1 = _as_anchored(first).config
    a2 = _as_anchored(second).config
    v1, b1 = a1.v, a1.b
    incidences = set(a1.incidences)
    incidences.discard((v1 - 1, b1 - 1))
    for p, j in a2.incidences:
        incidences.add((v1 + p, b1 + j))
    incidences.discard((v1 + 0, b1 + 0))
    incidences.add((v1 - 1, b1 + 0))
    incidences.add((v1 + 0, b1 - 1))
    return Configuration(v1 + a2.v, b1 + a2.b, c1.r, c1.k,
                         frozenset(incidences))


def sm_plus_one(base: Configuration | AnchoredConfiguration) -> Configuration:
    """Chain s = rk/gcd(r,k) copies of a base and graft fan vertices.

    Consecutive copies are joined by the amalgamation swap.  On top of
    that, the anchor incidence (1, 1) of every copy is removed, and its
    freed endpoints are rewired to k/gcd(r,k) new points and r/gcd(r,k)
    new lines: new point j picks up line 1 of copies jr..(j+1)r - 1, and
    new line j picks up point 1 of copies jk..(j+1)k - 1.  If the base
    has scale factor m the result has scale factor s*m + 1, which is
    coprime to m.  Requires r, k >= 3.
    """
    plain = _plain(base)
    r, k = plain.r, plain.k
    if r < 3 or k < 3:
        raise InfeasibleParameters(
            f"the fan construction needs degrees at least 3, got r={r}, k={k}")
    anchored = _as_anchored(base).config
    v, b = anchored.v, anchored.b
    g = math.gcd(r, k)
    s = r * k // g

    incidences: set[tuple[int, int]] = set()
    for i in range(s):
        skip = {(1, 1)}
        if i > 0:
            skip.add((0, 0))
        if i < s - 1:
            skip.add((v - 1, b - 1))
        for p, j in anchored.incidences:
            if (p, j) not in skip:
                incidences.add((i * v + p, i * b + j))
    for i in range(s - 1):
        incidences.add((i * v + v - 1, (i + 1) * b + 0))
        incidences.add(((i + 1) * v + 0, i * b + b - 1))
    for j in range(k // g):
        for i in range(j * r, (j + 1) * r):
            incidences.add((s * v + j, i * b + 1))
    for j in range(r // g):
        for i in range(j * k, (j + 1) * k):
            incidences.add((i * v + 1, s * b + j))

    return Configuration(s * v + k // g, s * b + r // g, r, k,
                         frozenset(incidences))


def construct_for_d(d: int, r: int, k: int,
                    known: Sequence[tuple[int, Configuration | AnchoredConfiguration]]) -> Configuration:
    """Reach scale factor d by repeatedly amalgamating known pieces.

    known holds (scale factor, configuration) pairs, all with degrees
    (r, k).  When d is a nonnegative integer combination of the known
    scale factors, the combination found by dynamic programming is
    folded left to right through amalgamate; otherwise NotExpressible.
    """
    if d < 0:
        raise NotExpressible(f"scale factor must be nonnegative, got {d}")
    pieces: list[tuple[int, Configuration | AnchoredConfiguration]] = []
    for declared, config in known:
        plain = _plain(config)
        if (plain.r, plain.k) != (r, k):
            raise ParameterMismatch(
                f"known piece has degrees ({plain.r},{plain.k}), "
                f"expected ({r},{k})")
        actual = tuple_of(plain).d
        if actual != declared:
            raise ParameterMismatch(
                f"known piece declared scale {declared} but has {actual}")
        if declared > 0:
            pieces.append((declared, config))

    if d == 0:
        return Configuration.empty(r, k)

    # unbounded-knapsack reachability; predecessor index reconstructs counts
    last: list[int | None] = [None] * (d + 1)
    reachable = [False] * (d + 1)
    reachable[0] = True
    for total in range(1, d + 1):
        for idx, (scale, _config) in enumerate(pieces):
            if scale <= total and reachable[total - scale]:
                reachable[total] = True
                last[total] = idx
                break
    if not reachable[d]:
        raise NotExpressible(
            f"{d} is not a nonnegative combination of scale factors "
            f"{sorted({scale for scale, _ in pieces})}")

    counts = [0] * len(pieces)
    total = d
    while total > 0:
        idx = last[total]
        assert idx is not None
        counts[idx] += 1
        total -= pieces[idx][0]

    result: Configuration | None = None
    for idx, (scale, config) in enumerate(pieces):
        for _ in range(counts[idx]):
            result = _plain(config) if result is None else amalgamate(result, config)
    assert result is not None
    return result
