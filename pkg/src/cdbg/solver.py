"""Exact minimum dominating sets by branch and bound over bitsets.

Every vertex ``v`` owns a closed neighborhood ``cover[v]`` (itself plus its
out-neighbors, or plus its neighbors when undirected) stored as a Python int.
The search picks an uncovered vertex, branches over the vertices able to cover
it, and discards every sibling already tried from later branches, so no
dominating set is visited twice.
"""

from __future__ import annotations

import heapq
import multiprocessing
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import lcm

from cdbg import words
from cdbg.constructions import VertexSet
from cdbg.graph import Graph
from cdbg.words import ParameterError


@dataclass(frozen=True)
class Budget:
    seconds: float = 60.0
    nodes: int = 10**8

    def __post_init__(self) -> None:
        if self.seconds <= 0 or self.nodes <= 0:
            raise ParameterError("budget must be positive")


@dataclass(frozen=True)
class SolveResult:
    status: str
    gamma_low: int
    gamma_high: int
    witness: VertexSet
    nodes_explored: int
    elapsed: float = field(compare=False)

    @property
    def exact(self) -> bool:
        return self.status == "exact"

    def to_dict(self, g: Graph) -> dict:
        return {
            "status": self.status,
            "gamma_low": self.gamma_low,
            "gamma_high": self.gamma_high,
            "witness": [words.serialize(g.vertices[v]) for v in self.witness.members],
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }


def closed_neighborhoods(g: Graph) -> list[int]:
    cover = []
    for v, adj in enumerate(g.adjacency):
        mask = 1 << v
        for u in adj:
            mask |= 1 << u
        cover.append(mask)
    return cover


def _check_spec(g: Graph, s: VertexSet) -> None:
    if s.spec != g.spec:
        raise ParameterError(f"vertex set belongs to {s.spec}, not {g.spec}")


def is_dominating(g: Graph, s: VertexSet) -> bool:
    _check_spec(g, s)
    covered = 0
    for v in s.members:
        covered |= 1 << v
        for u in g.adjacency[v]:
            covered |= 1 << u
    return covered == (1 << g.vertex_count) - 1


def undominated(g: Graph, s: VertexSet) -> list[int]:
    """Vertices left uncovered by ``s``; empty iff ``s`` dominates."""
    _check_spec(g, s)
    covered = [False] * g.vertex_count
    for v in s.members:
        covered[v] = True
        for u in g.adjacency[v]:
            covered[u] = True
    return [v for v, ok in enumerate(covered) if not ok]


def _greedy(cover: list[int], full: int) -> list[int]:
    # Lazy evaluation: gains only shrink, so a popped entry whose refreshed
    # gain is unchanged is the true (max gain, min index) choice.
    uncovered = full
    heap = [(-c.bit_count(), v) for v, c in enumerate(cover)]
    heapq.heapify(heap)
    chosen = []
    while uncovered:
        neg_gain, v = heapq.heappop(heap)
        gain = (cover[v] & uncovered).bit_count()
        if gain == -neg_gain:
            chosen.append(v)
            uncovered &= ~cover[v]
        elif gain:
            heapq.heappush(heap, (-gain, v))
    return sorted(chosen)


def greedy_dominating(g: Graph) -> VertexSet:
    cover = closed_neighborhoods(g)
    chosen = _greedy(cover, (1 << g.vertex_count) - 1)
    return VertexSet(g.spec, tuple(chosen), formula_id="greedy")


# Best size found by any worker process; set by the pool initializer.
_SHARED_LIMIT = None


def _init_worker(shared) -> None:
    global _SHARED_LIMIT
    _SHARED_LIMIT = shared


class _BudgetExhausted(Exception):
    pass


class _Search:
    def __init__(self, cover: list[int], best: list[int], budget: Budget, deadline: float):
        self.cover = cover
        self.coverers: list[list[int]] = [[] for _ in cover]
        for v, mask in enumerate(cover):
            m = mask
            while m:
                low = m & -m
                self.coverers[low.bit_length() - 1].append(v)
                m ^= low
        self.scale = lcm(*range(1, max(c.bit_count() for c in cover) + 1))
        self.best = list(best)
        self.limit = len(best)
        self.shared = _SHARED_LIMIT
        self.budget = budget
        self.deadline = deadline
        self.nodes = 0

    def lower_bound(self, uncovered: int, excluded: int) -> tuple[int, int, dict[int, int]] | None:
        """Fractional covering bound over the vertices still allowed.

        Charging each uncovered vertex 1/m, where m is the largest fresh
        coverage among its allowed coverers, gives every candidate a total
        charge of at most 1. Returns (bound, branching vertex, fresh counts),
        or None when some vertex can no longer be covered.
        """
        fresh: dict[int, int] = {}
        cover, coverers, scale = self.cover, self.coverers, self.scale
        total = 0
        branch_at = -1
        m = uncovered
        while m:
            low = m & -m
            m ^= low
            u = low.bit_length() - 1
            top = 0
            for v in coverers[u]:
                if excluded >> v & 1:
                    continue
                f = fresh.get(v)
                if f is None:
                    f = fresh[v] = (cover[v] & uncovered).bit_count()
                if f > top:
                    top = f
            if not top:
                return None
            if branch_at < 0:
                branch_at = u
            total += scale // top
        return -(-total // scale), branch_at, fresh

    def run(self, uncovered: int, excluded: int, chosen: list[int]) -> None:
        self.nodes += 1
        if self.nodes >= self.budget.nodes:
            raise _BudgetExhausted
        if not self.nodes & 255:
            if time.perf_counter() > self.deadline:
                raise _BudgetExhausted
            if self.shared is not None:
                self.limit = min(self.limit, self.shared.value)
        if not uncovered:
            if len(chosen) < self.limit:
                self.best = sorted(chosen)
                self.limit = len(chosen)
                if self.shared is not None:
                    with self.shared.get_lock():
                        self.shared.value = min(self.shared.value, self.limit)
            return
        if len(chosen) + 1 >= self.limit:
            return
        bounded = self.lower_bound(uncovered, excluded)
        if bounded is None:
            return
        bound, u, fresh = bounded
        if len(chosen) + bound >= self.limit:
            return
        candidates = [v for v in self.coverers[u] if not excluded >> v & 1]
        candidates.sort(key=lambda v: (-fresh[v], v))
        for v in candidates:
            chosen.append(v)
            self.run(uncovered & ~self.cover[v], excluded, chosen)
            chosen.pop()
            excluded |= 1 << v
            if len(chosen) + 1 >= self.limit:
                return

    def root_branches(self, full: int) -> list[tuple[int, int, list[int]]]:
        bounded = self.lower_bound(full, 0)
        assert bounded is not None
        _, u, fresh = bounded
        candidates = sorted(self.coverers[u], key=lambda v: (-fresh[v], v))
        branches = []
        excluded = 0
        for v in candidates:
            branches.append((full & ~self.cover[v], excluded, [v]))
            excluded |= 1 << v
        return branches


def _solve_branch(cover, best, budget, deadline, uncovered, excluded, chosen):
    search = _Search(cover, best, budget, deadline)
    try:
        search.run(uncovered, excluded, list(chosen))
        done = True
    except _BudgetExhausted:
        done = False
    return search.best, search.nodes, done


def components(g: Graph) -> list[list[int]]:
    """Weakly connected components, each sorted, ordered by smallest vertex."""
    undirected: list[set[int]] = [set(adj) for adj in g.adjacency]
    if g.spec.directed:
        for u, adj in enumerate(g.adjacency):
            for v in adj:
                undirected[v].add(u)
    seen = [False] * g.vertex_count
    out = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        stack, comp = [start], []
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in undirected[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        out.append(sorted(comp))
    return out


def _local_cover(cover: list[int], comp: list[int]) -> list[int]:
    local = {v: i for i, v in enumerate(comp)}
    out = []
    for v in comp:
        mask, m = 0, cover[v]
        while m:
            low = m & -m
            m ^= low
            mask |= 1 << local[low.bit_length() - 1]
        out.append(mask)
    return out


def _solve_component(cover: list[int], budget: Budget, deadline: float, workers: int):
    """Returns (best set, nodes, finished, root lower bound) in local indices."""
    full = (1 << len(cover)) - 1
    incumbent = _greedy(cover, full)
    search = _Search(cover, incumbent, budget, deadline)
    bounded = search.lower_bound(full, 0)
    root_bound = bounded[0] if bounded else 1
    if time.perf_counter() > deadline:
        return incumbent, 0, False, root_bound
    if workers > 1 and len(cover) >= PARALLEL_MIN_VERTICES:
        best, nodes, done = _parallel(search, full, incumbent, budget, deadline, workers)
        return best, nodes, done, root_bound
    try:
        search.run(full, 0, [])
        done = True
    except _BudgetExhausted:
        done = False
    return search.best, search.nodes, done, root_bound


PARALLEL_MIN_VERTICES = 32


def exact_gamma(
    g: Graph,
    budget: Budget | None = None,
    workers: int = 1,
    deterministic: bool = False,
) -> SolveResult:
    """Minimum dominating set of ``g`` within ``budget``.

    Connected components are solved independently and their optima added.
    Returns status ``exact`` when every search finished; otherwise ``bounded``
    with the summed root lower bounds and the best set found so far.
    With ``workers > 1`` the root branches of larger components are explored
    in separate processes; the reported interval is unchanged whenever every
    branch finishes. ``deterministic=True`` forces a single worker.
    """
    budget = budget or Budget()
    if deterministic:
        workers = 1
    start = time.perf_counter()
    deadline = start + budget.seconds
    cover = closed_neighborhoods(g)
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 2 * g.vertex_count + 1000))
    witness: list[int] = []
    low = nodes = 0
    done = True
    try:
        for comp in components(g):
            remaining = max(1, budget.nodes - nodes)
            local_budget = Budget(budget.seconds, remaining)
            best, used, finished, root_bound = _solve_component(
                _local_cover(cover, comp), local_budget, deadline, workers
            )
            nodes += used
            done = done and finished
            witness.extend(comp[v] for v in best)
            low += len(best) if finished else min(root_bound, len(best))
    finally:
        sys.setrecursionlimit(limit)
    return SolveResult(
        status="exact" if done else "bounded",
        gamma_low=low,
        gamma_high=len(witness),
        witness=VertexSet(g.spec, tuple(sorted(witness)), formula_id="solver"),
        nodes_explored=nodes,
        elapsed=time.perf_counter() - start,
    )


def _parallel(search: _Search, full: int, incumbent: list[int], budget: Budget, deadline: float, workers: int):
    branches = search.root_branches(full)
    best, nodes, done = list(incumbent), 1, True
    shared = multiprocessing.Value("q", len(incumbent))
    with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(shared,)) as pool:
        futures = [
            pool.submit(_solve_branch, search.cover, incumbent, budget, deadline, *branch)
            for branch in branches
        ]
        for future in futures:
            branch_best, branch_nodes, branch_done = future.result()
            nodes += branch_nodes
            done = done and branch_done
            if (len(branch_best), branch_best) < (len(best), best):
                best = branch_best
    return best, nodes, done
