"""Explicit dominating sets for the families with constructive upper bounds.

Generators build words, then rank them into the dense indexing of the graph
they belong to. Every result is a ``VertexSet`` bound to its ``GraphSpec`` and
carries the closed-form size it is expected to have.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

from cdbg import bounds, words
from cdbg.graph import GraphSpec, build, cycle_decomposition
from cdbg.words import ParameterError, Word


@dataclass(frozen=True)
class VertexSet:
    spec: GraphSpec
    members: tuple[int, ...]
    claimed_size: int | None = None
    formula_id: str | None = None

    def __post_init__(self) -> None:
        members = self.members
        if any(b <= a for a, b in zip(members, members[1:])):
            raise ParameterError("members must be strictly increasing")
        if members and not (0 <= members[0] and members[-1] < self.spec.vertex_count):
            raise ParameterError("member index out of range")

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: object) -> bool:
        return v in set(self.members)

    def words(self) -> list[Word]:
        s = self.spec
        return [words.unrank(i, s.d, s.t, s.n) for i in self.members]

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "members": [words.serialize(w) for w in self.words()],
            "claimed_size": self.claimed_size,
            "formula_id": self.formula_id,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> VertexSet:
        spec = GraphSpec.from_dict(data["spec"])
        idx = sorted(words.rank(words.parse(m), spec.d, spec.t) for m in data["members"])
        return cls(spec, tuple(idx), data.get("claimed_size"), data.get("formula_id"))


def vertex_set(
    spec: GraphSpec, ws: Iterable[Word], claimed_size: int | None = None, formula_id: str | None = None
) -> VertexSet:
    """Rank words into ``spec``; raises on duplicates or non-vertices."""
    idx = [words.rank(w, spec.d, spec.t) for w in ws]
    unique = sorted(set(idx))
    if len(unique) != len(idx):
        raise ParameterError("duplicate words in vertex set")
    return VertexSet(spec, tuple(unique), claimed_size, formula_id)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterError(msg)


# de Bruijn (t = 1), undirected

def db_undirected_n2(d: int) -> VertexSet:
    _require(d >= 2, "need d >= 2")
    spec = GraphSpec(d, 1, 2, "undirected")
    return vertex_set(spec, [(1, x) for x in range(2, d + 1)], bounds.thm2_exact(d), "thm2")


def db_undirected_n3(d: int) -> VertexSet:
    _require(d >= 2, "need d >= 2")
    spec = GraphSpec(d, 1, 3, "undirected")
    ws = [(2 * i, x, 2 * i - 1) for i in range(1, d // 2 + 1) for x in range(1, d + 1)]
    if d % 2:
        ws += [(d, x, d) for x in range(1, d + 1)]
    return vertex_set(spec, ws, bounds.thm3_exact(d), "thm3")


def db_undirected_general(d: int, n: int) -> VertexSet:
    _require(d >= 2 and n >= 4, "need d >= 2 and n >= 4")
    spec = GraphSpec(d, 1, n, "undirected")
    ws = (w for w in words.iter_words(d, 1, n) if w[n - 2] != w[0] and w[n - 1] == w[1])
    return vertex_set(spec, ws, bounds.thm4_upper(d, n), "thm4")


# Kautz (t = 2), undirected

def kautz_undirected_n3(d: int) -> VertexSet:
    _require(d >= 2, "need d >= 2")
    spec = GraphSpec(d, 2, 3, "undirected")
    evens = range(2, d + 1, 2)
    ws = [(b, x, b - 1) for b in evens for x in range(1, d + 1) if x not in (b, b - 1)]
    if d % 2 == 0:
        ws += [(b, b - 1, 2) for b in evens]
        ws += [(1, b + 1, b) for b in range(1, d + 1, 2)]
    else:
        ws += [(b, b - 1, d) for b in evens]
        ws += [(d, b + 1, b) for b in range(1, d - 1, 2)]
        # (d, b+1, b) for even b would hit (d, d, d-1); covering the odd
        # middle symbols is what the domination argument needs.
        ws += [(d, b - 1, b) for b in evens]
    return vertex_set(spec, ws, bounds.thm7_upper(d), "thm7")


def kautz_undirected_general(d: int, n: int) -> VertexSet:
    _require(d >= 2 and n >= 4, "need d >= 2 and n >= 4")
    spec = GraphSpec(d, 2, n, "undirected")

    def member(w: Word) -> bool:
        if w[0] == 1:
            return w[1] != d or w[2] != 1
        return w[:4] == (d, 1, d, 1)

    ws = (w for w in words.iter_words(d, 2, n) if member(w))
    return vertex_set(spec, ws, bounds.thm8_upper(d, n), "thm8")


# t = 3

def directed_t3(d: int, n: int) -> VertexSet:
    _require(d >= 3 and n >= 4, "need d >= 3 and n >= 4")
    spec = GraphSpec(d, 3, n, "directed")

    def paired(a: int) -> int:
        return a + 1 if a % 2 else a - 1

    def member(w: Word) -> bool:
        if w[0] == d and d % 2:
            return False
        return w[1] == paired(w[0])

    ws = [w for w in words.iter_words(d, 3, n) if member(w)]
    if d % 2:
        # Predecessors of the words starting with d: (x, d, w3, ...) with the
        # smallest first symbol compatible with w3.
        ws += [
            w
            for w in words.iter_words(d, 3, n)
            if w[1] == d and w[0] == min(set(range(1, d + 1)) - {d, w[2]})
        ]
    return vertex_set(spec, ws, bounds.thm9_upper(d, n), "thm9")


def undirected_t3(d: int, n: int) -> VertexSet:
    _require(d >= 3 and n >= 4, "need d >= 3 and n >= 4")
    spec = GraphSpec(d, 3, n, "undirected")
    ws = (w for w in words.iter_words(d, 3, n) if w[0] == 1)
    return vertex_set(spec, ws, bounds.thm10_upper(d, n), "thm10")


# general t < n

def directed_general_t(d: int, t: int, n: int, orientation: str = "directed") -> VertexSet:
    """Union of S_1 (words starting with 1) and S_i for 3 <= i <= t (symbol 1 at
    position i, first symbol the smallest one absent from positions 2..t).

    Also dominates the undirected graph; pass ``orientation="undirected"``.
    """
    _require(2 <= t <= d and t < n, "need 2 <= t <= d and t < n")
    spec = GraphSpec(d, t, n, orientation)
    alphabet = set(range(1, d + 1))

    def member(w: Word) -> bool:
        if w[0] == 1:
            return True
        return 1 in w[2:t] and w[0] == min(alphabet - set(w[1:t]))

    ws = (w for w in words.iter_words(d, t, n) if member(w))
    formula = "thm11" if orientation == "directed" else "cor"
    return vertex_set(spec, ws, bounds.thm11_upper(d, t, n), formula)


# permutations (t = n = d)

def _perm_cycles(n: int, orientation: str) -> tuple[GraphSpec, list[list[int]]]:
    spec = GraphSpec(n, n, n, orientation)
    return spec, cycle_decomposition(build(spec))


def perm_directed(n: int) -> VertexSet:
    _require(n >= 2, "need n >= 2")
    spec, cycles = _perm_cycles(n, "directed")
    members = sorted(v for cycle in cycles for v in cycle[::2])
    return VertexSet(spec, tuple(members), bounds.thm13_exact(n), "thm13")


def perm_undirected(n: int) -> VertexSet:
    _require(n >= 2, "need n >= 2")
    spec, cycles = _perm_cycles(n, "undirected")
    members = sorted(v for cycle in cycles for v in cycle[::3])
    return VertexSet(spec, tuple(members), bounds.thm14_exact(n), "thm14")


# partial permutations (t = n, d = n + c)

@dataclass(frozen=True)
class APartition:
    n: int
    c: int
    spec: GraphSpec
    parts: tuple[VertexSet, ...]

    def part_words(self, i: int) -> list[Word]:
        return self.parts[i].words()


@dataclass(frozen=True)
class Block:
    part: int
    members: VertexSet


@dataclass(frozen=True)
class UBlock:
    part: int
    core: Word
    members: VertexSet


def _a_parts(n: int, c: int) -> list[list[Word]]:
    d = n + c
    parts: list[list[Word]] = [[] for _ in range(n + 1)]
    for w in words.iter_words(d, n, n):
        parts[w.index(d) + 1 if d in w else 0].append(w)
    return parts


def a_partition(n: int, c: int, orientation: str = "directed") -> APartition:
    _require(n >= 2 and c >= 0, "need n >= 2 and c >= 0")
    spec = GraphSpec(n + c, n, n, orientation)
    parts = tuple(vertex_set(spec, ws) for ws in _a_parts(n, c))
    return APartition(n, c, spec, parts)


def _blocks(part: list[Word]) -> list[list[Word]]:
    groups: dict[Word, list[Word]] = defaultdict(list)
    for w in part:
        groups[w[1:]].append(w)
    return list(groups.values())


def _ublock_cycle(core: Word, d: int) -> list[Word]:
    ys = sorted(set(range(1, d + 1)) - set(core))
    chosen = [(ys[k + 1],) + core + (ys[k],) for k in range(len(ys) - 1)]
    chosen.append((ys[0],) + core + (ys[-1],))
    return chosen


def _block_selection(part: list[Word]) -> list[Word]:
    # words arrive in lexicographic order, so each block's first entry is its minimum
    return [block[0] for block in _blocks(part)]


def _ublock_selection(part: list[Word], d: int) -> list[Word]:
    cores = dict.fromkeys(w[1:-1] for w in part)
    return [w for core in cores for w in _ublock_cycle(core, d)]


def select_blocks_directed(p: APartition, i: int) -> tuple[list[Block], VertexSet]:
    """Blocks of A_i (shared suffix of length n-1) and one representative each."""
    _require(2 <= i <= p.n, f"need 2 <= i <= {p.n}, got {i}")
    part = p.part_words(i)
    blocks = [Block(i, vertex_set(p.spec, b)) for b in _blocks(part)]
    rep = vertex_set(p.spec, _block_selection(part), bounds.block_selection_size(p.n, p.c), f"block-{i}")
    return blocks, rep


def select_ublocks(p: APartition, i: int) -> tuple[list[UBlock], VertexSet]:
    """u-blocks of A_i (shared core of positions 2..n-1) and the cyclic choice
    y2.z.y1, y3.z.y2, ..., y1.z.ys inside each."""
    _require(2 <= i <= p.n - 1, f"need 2 <= i <= {p.n - 1}, got {i}")
    _require(p.c >= 1, "u-blocks need c >= 1")
    part = p.part_words(i)
    groups: dict[Word, list[Word]] = defaultdict(list)
    for w in part:
        groups[w[1:-1]].append(w)
    ublocks = [UBlock(i, core, vertex_set(p.spec, ws)) for core, ws in groups.items()]
    chosen = _ublock_selection(part, p.spec.d)
    return ublocks, vertex_set(p.spec, chosen, bounds.block_selection_size(p.n, p.c), f"ublock-{i}")


def partial_perm_directed(n: int, c: int) -> VertexSet:
    _require(n >= 2, "need n >= 2")
    _require(c >= 1, "need c >= 1; use perm_directed for c = 0")
    parts = _a_parts(n, c)
    ws = list(parts[1])
    for i in range(3, n + 1):
        ws += _block_selection(parts[i])
    spec = GraphSpec(n + c, n, n, "directed")
    return vertex_set(spec, ws, bounds.thm15_upper(n, c), "thm15")


def _partial_perm_undirected_words(n: int, c: int) -> list[Word]:
    if c == 0:
        base = perm_undirected(n)
        return base.words()
    d = n + c
    parts = _a_parts(n, c)
    chosen: list[Word] = []
    i = 1
    while i + 3 <= n:
        chosen += _ublock_selection(parts[i + 1], d)
        chosen += _ublock_selection(parts[i + 2], d)
        i += 4
    rest = n - i + 1
    if rest == 1:
        chosen += _ublock_selection(parts[n - 1], d)
    elif rest in (2, 3):
        chosen += _ublock_selection(parts[n - 1], d)
        chosen += _block_selection(parts[n])
    # A_0 induces a copy of the graph with one symbol fewer.
    chosen += _partial_perm_undirected_words(n, c - 1)
    return chosen


def partial_perm_undirected(n: int, c: int) -> VertexSet:
    _require(n >= 3, "need n >= 3")
    _require(c >= 1, "need c >= 1; use perm_undirected for c = 0")
    spec = GraphSpec(n + c, n, n, "undirected")
    ws = dict.fromkeys(_partial_perm_undirected_words(n, c))
    return vertex_set(spec, ws, int(bounds.thm16_recurrence(n, c)), "thm16")


# Theorem id -> (generator, parameter names)
THEOREMS = {
    "thm2": (db_undirected_n2, ("d",)),
    "thm3": (db_undirected_n3, ("d",)),
    "thm4": (db_undirected_general, ("d", "n")),
    "thm7": (kautz_undirected_n3, ("d",)),
    "thm8": (kautz_undirected_general, ("d", "n")),
    "thm9": (directed_t3, ("d", "n")),
    "thm10": (undirected_t3, ("d", "n")),
    "thm11": (directed_general_t, ("d", "t", "n")),
    "thm13": (perm_directed, ("n",)),
    "thm14": (perm_undirected, ("n",)),
    "thm15": (partial_perm_directed, ("n", "c")),
    "thm16": (partial_perm_undirected, ("n", "c")),
}


def construct(theorem: str, **params: int) -> VertexSet:
    try:
        fn, names = THEOREMS[theorem]
    except KeyError:
        raise ParameterError(f"unknown theorem id {theorem!r}; expected one of {sorted(THEOREMS)}") from None
    missing = [p for p in names if params.get(p) is None]
    if missing:
        raise ParameterError(f"{theorem} needs parameters {', '.join(names)}; missing {', '.join(missing)}")
    return fn(*(params[p] for p in names))
