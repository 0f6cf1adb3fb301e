"""Directed and undirected t-constrained de Bruijn graphs.

Vertices are indexed densely by their lexicographic rank among the
t-constrained words, so index ``i`` labels ``words.unrank(i, d, t, n)``.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass
from math import factorial
from typing import Sequence

from cdbg import words
from cdbg.words import ParameterError, ResourceLimitError, Word

DEFAULT_MAX_VERTICES = 5_000_000
ORIENTATIONS = ("directed", "undirected")
EXPORT_FORMATS = ("dot", "csv-edges", "json")


def max_vertices() -> int:
    """Build budget, overridable through ``CDBG_MAX_VERTICES``."""
    value = os.environ.get("CDBG_MAX_VERTICES")
    return int(value) if value else DEFAULT_MAX_VERTICES


@dataclass(frozen=True)
class GraphSpec:
    d: int
    t: int
    n: int
    orientation: str = "directed"

    def __post_init__(self) -> None:
        if self.orientation not in ORIENTATIONS:
            raise ParameterError(f"unknown orientation {self.orientation!r}")
        if self.d < 2 or self.n < 2:
            raise ParameterError(f"graphs need d >= 2 and n >= 2, got d={self.d}, n={self.n}")
        if not 1 <= self.t <= min(self.d, self.n):
            raise ParameterError(
                f"need 1 <= t <= min(d, n) = {min(self.d, self.n)}, got t={self.t}"
            )

    @property
    def directed(self) -> bool:
        return self.orientation == "directed"

    @property
    def vertex_count(self) -> int:
        return words.count_words(self.d, self.t, self.n)

    def with_orientation(self, orientation: str) -> GraphSpec:
        return GraphSpec(self.d, self.t, self.n, orientation)

    def to_dict(self) -> dict:
        return {"d": self.d, "t": self.t, "n": self.n, "orientation": self.orientation}

    @classmethod
    def from_dict(cls, data: dict) -> GraphSpec:
        return cls(int(data["d"]), int(data["t"]), int(data["n"]), data["orientation"])

    def __str__(self) -> str:
        name = "cDB+" if self.directed else "cDB"
        return f"{name}({self.d},{self.t},{self.n})"


def _check_word(w: Sequence[int], spec: GraphSpec) -> Word:
    w = tuple(w)
    if (
        len(w) != spec.n
        or any(not 1 <= s <= spec.d for s in w)
        or not words.is_t_constrained(w, spec.t)
    ):
        raise ParameterError(f"{words.serialize(w)} is not a vertex of {spec}")
    return w


def _successor_words(w: Word, spec: GraphSpec) -> list[Word]:
    tail = w[1:]
    window = set(w[spec.n - spec.t + 1:]) if spec.t > 1 else set()
    return [tail + (y,) for y in range(1, spec.d + 1) if y not in window]


def _predecessor_words(w: Word, spec: GraphSpec) -> list[Word]:
    head = w[:-1]
    window = set(w[:spec.t - 1])
    return [(y,) + head for y in range(1, spec.d + 1) if y not in window]


def successors(w: Sequence[int], spec: GraphSpec) -> set[Word]:
    return set(_successor_words(_check_word(w, spec), spec))


def predecessors(w: Sequence[int], spec: GraphSpec) -> set[Word]:
    return set(_predecessor_words(_check_word(w, spec), spec))


def neighbors(w: Sequence[int], spec: GraphSpec) -> set[Word]:
    if spec.directed:
        raise ParameterError("neighbors() is defined on undirected graphs only")
    w = _check_word(w, spec)
    return (set(_successor_words(w, spec)) | set(_predecessor_words(w, spec))) - {w}


@dataclass(frozen=True, eq=False)
class Graph:
    """Materialized graph; ``adjacency[v]`` is the sorted out-list (directed)
    or neighbor list (undirected) of vertex ``v``."""

    spec: GraphSpec
    vertices: tuple[Word, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        """Arcs for directed graphs, edges for undirected ones."""
        total = sum(len(adj) for adj in self.adjacency)
        return total if self.spec.directed else total // 2

    @property
    def max_degree(self) -> int:
        return max(len(adj) for adj in self.adjacency)

    def index(self, w: Sequence[int]) -> int:
        return words.rank(w, self.spec.d, self.spec.t)

    def edges(self) -> list[tuple[int, int]]:
        """Arcs (u, v) in index order; undirected edges are listed once with u < v."""
        out = []
        for u, adj in enumerate(self.adjacency):
            for v in adj:
                if self.spec.directed or u < v:
                    out.append((u, v))
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.spec == other.spec
            and self.vertices == other.vertices
            and self.adjacency == other.adjacency
        )

    __hash__ = None  # type: ignore[assignment]


def build(spec: GraphSpec, limit: int | None = None) -> Graph:
    limit = max_vertices() if limit is None else limit
    total = spec.vertex_count
    if total > limit:
        raise ResourceLimitError(f"{spec} has {total} vertices, over the budget of {limit}")
    vertices = tuple(words.iter_words(spec.d, spec.t, spec.n))
    index = {w: i for i, w in enumerate(vertices)}
    out = [tuple(sorted(index[s] for s in _successor_words(w, spec))) for w in vertices]
    if spec.directed:
        adjacency = tuple(out)
    else:
        sym: list[set[int]] = [set() for _ in vertices]
        for u, adj in enumerate(out):
            for v in adj:
                if u != v:
                    sym[u].add(v)
                    sym[v].add(u)
        adjacency = tuple(tuple(sorted(s)) for s in sym)
    return Graph(spec, vertices, adjacency)


def cycle_decomposition(g: Graph) -> list[list[int]]:
    """Split a permutation graph (t = n = d) into its rotation cycles.

    Each cycle starts at its smallest vertex and follows arcs, so consecutive
    entries (cyclically) are adjacent in either orientation.
    """
    spec = g.spec
    if not spec.t == spec.n == spec.d:
        raise ParameterError(f"cycle decomposition needs t = n = d, got {spec}")
    directed = g if spec.directed else build(spec.with_orientation("directed"))
    seen = [False] * g.vertex_count
    cycles = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        cycle = []
        v = start
        while not seen[v]:
            seen[v] = True
            cycle.append(v)
            (v,) = directed.adjacency[v]
        cycles.append(cycle)
    assert len(cycles) == factorial(spec.n - 1)
    return cycles


def export(g: Graph, fmt: str) -> bytes:
    if fmt == "csv":
        fmt = "csv-edges"
    labels = [words.serialize(w) for w in g.vertices]
    buf = io.StringIO()
    if fmt == "dot":
        kind, arrow = ("digraph", "->") if g.spec.directed else ("graph", "--")
        name = str(g.spec).replace("+", "plus").replace("(", "_").replace(")", "").replace(",", "_")
        buf.write(f"{kind} {name} {{\n")
        for label in labels:
            buf.write(f'  "{label}";\n')
        for u, v in g.edges():
            buf.write(f'  "{labels[u]}" {arrow} "{labels[v]}";\n')
        buf.write("}\n")
    elif fmt == "csv-edges":
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["src", "dst"])
        writer.writerows((labels[u], labels[v]) for u, v in g.edges())
    elif fmt == "json":
        doc = {"spec": g.spec.to_dict(), "vertices": labels, "edges": [list(e) for e in g.edges()]}
        buf.write(json.dumps(doc))
        buf.write("\n")
    else:
        raise ParameterError(f"unknown export format {fmt!r}; expected one of {EXPORT_FORMATS}")
    return buf.getvalue().encode()


def from_json(data: bytes | str) -> Graph:
    """Inverse of ``export(g, "json")``."""
    doc = json.loads(data)
    spec = GraphSpec.from_dict(doc["spec"])
    vertices = tuple(words.parse(s) for s in doc["vertices"])
    adj: list[set[int]] = [set() for _ in vertices]
    for u, v in doc["edges"]:
        adj[u].add(v)
        if not spec.directed:
            adj[v].add(u)
    return Graph(spec, vertices, tuple(tuple(sorted(a)) for a in adj))
