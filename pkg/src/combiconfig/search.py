"""Exhaustive backtracking decider for configuration existence.

This module is deliberately independent of the constructive machinery in
constructions.py: it enumerates line sets directly and serves as the
ground truth oracle in tests, for minimal scale factors, and for
validating closed-form descriptions.

The search space is the set of lines written as sorted k-tuples of
points, listed in lexicographically nondecreasing order.  Sortedness
forces the next line to start with the smallest point of unmet degree,
which, together with degree caps, a used-pair set, a capacity cut and a
saturated-component cut, keeps desk-scale instances fast.  Budgets turn
into the verdict "unknown", never into a wrong answer.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .incidence import Configuration, outer_lower_bound, verify

EXISTS = "exists"
NOT_EXISTS = "not_exists"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class SearchProblem:
    """Does a (v, b, r, k)-configuration exist?

    node_budget bounds the number of line placements tried and
    time_budget the wall-clock seconds; either may be None for no limit.
    The search is fully deterministic and consumes no randomness; seed is
    accepted for interface uniformity and recorded in traces.  symmetry
    toggles the forced first and second lines (the rest of the pruning is
    order-forced and always on).
    """

    v: int
    b: int
    r: int
    k: int
    node_budget: int | None = None
    time_budget: float | None = None
    seed: int = 0
    symmetry: bool = True


@dataclass(frozen=True)
class SearchVerdict:
    kind: str
    witness: Configuration | None
    nodes: int
    elapsed: float
    reason: str = ""


def decide(problem: SearchProblem) -> SearchVerdict:
    """Decide existence for the problem's parameter tuple.

    exists comes with a witness that passes verify; not_exists means the
    parameters failed a counting condition or the pruned search tree was
    exhausted; unknown means a budget ran out first.
    """
    started = time.monotonic()
    v, b, r, k = problem.v, problem.b, problem.r, problem.k
    if min(v, b, r, k) < 0:
        raise ValueError(f"negative parameters (v={v}, b={b}, r={r}, k={k})")
    if v == 0 and b == 0:
        return SearchVerdict(EXISTS, Configuration.empty(r, k), 0,
                             time.monotonic() - started)
    if r < 1 or k < 1:
        raise ValueError(f"degree zero with nonempty vertex sets "
                         f"(v={v}, b={b}, r={r}, k={k})")
    if v * r != b * k:
        return SearchVerdict(NOT_EXISTS, None, 0, time.monotonic() - started,
                             f"v*r = {v * r} differs from b*k = {b * k}")
    if v < r * (k - 1) + 1:
        return SearchVerdict(NOT_EXISTS, None, 0, time.monotonic() - started,
                             f"v = {v} below r(k-1)+1 = {r * (k - 1) + 1}")
    if b < k * (r - 1) + 1:
        # the same counting bound applied to the dual configuration
        return SearchVerdict(NOT_EXISTS, None, 0, time.monotonic() - started,
                             f"b = {b} below k(r-1)+1 = {k * (r - 1) + 1}")
    searcher = _Searcher(problem, started)
    found = searcher.search()
    elapsed = time.monotonic() - started
    if found:
        witness = Configuration.from_lines(searcher.lines, r, k, v=v)
        report = verify(witness)
        assert report.ok, f"internal error, witness fails verification: {report}"
        return SearchVerdict(EXISTS, witness, searcher.nodes, elapsed)
    if searcher.out_of_budget:
        return SearchVerdict(UNKNOWN, None, searcher.nodes, elapsed,
                             searcher.budget_reason)
    return SearchVerdict(NOT_EXISTS, None, searcher.nodes, elapsed,
                         "search space exhausted")


class _Searcher:
    """Backtracking state: degrees, used pairs, and a rollback union-find.

    The union-find tracks point components of the partial incidence
    graph together with the number of not-yet-saturated points in each
    component.  A component with no unsaturated point can never receive
    another incidence, so if lines remain to be placed the completion
    would be disconnected and the branch is cut.  Unions are by size
    without path compression so they can be undone exactly from a trail.
    """

    def __init__(self, problem: SearchProblem, started: float) -> None:
        self.v, self.b = problem.v, problem.b
        self.r, self.k = problem.r, problem.k
        self.symmetry = problem.symmetry
        self.node_budget = problem.node_budget
        self.deadline = (started + problem.time_budget
                         if problem.time_budget is not None else None)
        self.deg = [0] * self.v
        self.pair_used: set[tuple[int, int]] = set()
        self.lines: list[tuple[int, ...]] = []
        self.nodes = 0
        self.out_of_budget = False
        self.budget_reason = ""
        self.parent = list(range(self.v))
        self.size = [1] * self.v
        self.unsat = [1] * self.v
        self.trail: list[tuple] = []

    # union-find with rollback

    def _find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def _union(self, a: int, c: int) -> None:
        ra, rc = self._find(a), self._find(c)
        if ra == rc:
            return
        if self.size[ra] < self.size[rc]:
            ra, rc = rc, ra
        self.trail.append(("u", rc, ra, self.unsat[ra]))
        self.parent[rc] = ra
        self.size[ra] += self.size[rc]
        self.unsat[ra] += self.unsat[rc]

    def _mark_saturated(self, p: int) -> None:
        root = self._find(p)
        self.trail.append(("s", root, self.unsat[root]))
        self.unsat[root] -= 1

    def _rollback(self, mark: int) -> None:
        while len(self.trail) > mark:
            entry = self.trail.pop()
            if entry[0] == "u":
                _, child, into, old_unsat = entry
                self.size[into] -= self.size[child]
                self.unsat[into] = old_unsat
                self.parent[child] = child
            else:
                _, root, old_unsat = entry
                self.unsat[root] = old_unsat

    # line placement

    def _place(self, pts: tuple[int, ...]) -> int:
        mark = len(self.trail)
        self.lines.append(pts)
        for p in pts:
            self.deg[p] += 1
        for pair in combinations(pts, 2):
            self.pair_used.add(pair)
        for p in pts[1:]:
            self._union(pts[0], p)
        for p in pts:
            if self.deg[p] == self.r:
                self._mark_saturated(p)
        return mark

    def _unplace(self, pts: tuple[int, ...], mark: int) -> None:
        self._rollback(mark)
        for pair in combinations(pts, 2):
            self.pair_used.discard(pair)
        for p in pts:
            self.deg[p] -= 1
        self.lines.pop()

    def _over_budget(self) -> bool:
        if self.out_of_budget:
            return True
        if self.node_budget is not None and self.nodes >= self.node_budget:
            self.out_of_budget = True
            self.budget_reason = f"node budget {self.node_budget} exhausted"
            return True
        if (self.deadline is not None and self.nodes % 64 == 0
                and time.monotonic() > self.deadline):
            self.out_of_budget = True
            self.budget_reason = "time budget exhausted"
            return True
        return False

    # search proper

    def search(self) -> bool:
        placed = len(self.lines)
        if placed == self.b:
            # degrees are exact here; connectivity is one component
            return self.size[self._find(0)] == self.v
        p_star = self._smallest_unmet()
        if p_star is None:
            return False
        if self.r - self.deg[p_star] > self.b - placed:
            return False
        for cand in self._candidates(placed, p_star):
            self.nodes += 1
            if self._over_budget():
                return False
            mark = self._place(cand)
            root = self._find(cand[0])
            closed = self.unsat[root] == 0 and len(self.lines) < self.b
            if not closed and self.search():
                return True
            self._unplace(cand, mark)
            if self.out_of_budget:
                return False
        return False

    def _smallest_unmet(self) -> int | None:
        for p in range(self.v):
            if self.deg[p] < self.r:
                return p
        return None

    def _candidates(self, placed: int, p_star: int) -> Iterator[tuple[int, ...]]:
        if self.symmetry and placed == 0:
            yield tuple(range(self.k))
            return
        if self.symmetry and placed == 1 and self.r >= 2:
            # some line besides the first passes through point 0 and avoids
            # points 1..k-1; its points relabel to 0, k, ..., 2k-2, and that
            # is also the lexicographically least admissible second line
            yield (0, *range(self.k, 2 * self.k - 1))
            return
        prev = self.lines[-1] if self.lines else None
        lower = prev if prev is not None and prev[0] == p_star else None
        yield from self._extend((p_star,), lower, lower is not None)

    def _extend(self, chosen: tuple[int, ...], lower: tuple[int, ...] | None,
                tight: bool) -> Iterator[tuple[int, ...]]:
        if len(chosen) == self.k:
            yield chosen
            return
        idx = len(chosen)
        lo = chosen[-1] + 1 if self.k > 1 else chosen[-1]
        if tight:
            assert lower is not None
            lo = max(lo, lower[idx])
        hi = self.v - (self.k - idx) + 1
        for p in range(lo, hi):
            if self.deg[p] >= self.r:
                continue
            if any((c, p) in self.pair_used for c in chosen):
                continue
            yield from self._extend(chosen + (p,), lower,
                                    tight and p == lower[idx])


@dataclass(frozen=True)
class MinimalScan:
    """Outcome of scanning scale factors upward for the first witness.

    found is the first d whose search said exists (with its witness);
    undecided lists the smaller d values whose searches ran out of
    budget, so found is only proven minimal when undecided is empty.
    """

    found: int | None
    witness: Configuration | None
    undecided: tuple[int, ...]
    nodes: int


def minimal_element(r: int, k: int, d_max: int,
                    node_budget: int | None = None,
                    time_budget: float | None = None) -> MinimalScan:
    """Scan d from the counting lower bound up to d_max, deciding each.

    Budgets apply to each scale factor's search separately.  Degrees
    below 2 are out of contract for the scan (the covered closed forms
    make it pointless there).
    """
    if r < 2 or k < 2:
        raise ValueError(f"minimal element scan needs r, k >= 2, "
                         f"got r={r}, k={k}")
    g = math.gcd(r, k)
    undecided: list[int] = []
    total_nodes = 0
    for d in range(outer_lower_bound(r, k), d_max + 1):
        problem = SearchProblem(d * k // g, d * r // g, r, k,
                                node_budget=node_budget,
                                time_budget=time_budget)
        verdict = decide(problem)
        total_nodes += verdict.nodes
        if verdict.kind == EXISTS:
            return MinimalScan(d, verdict.witness, tuple(undecided),
                               total_nodes)
        if verdict.kind == UNKNOWN:
            undecided.append(d)
    return MinimalScan(None, None, tuple(undecided), total_nodes)
