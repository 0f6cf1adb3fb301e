"""Reproduce the summary tables at desk scale.

For every family and every parameter choice under a vertex budget, compute the
closed-form bounds, build the construction (when there is one), run the exact
solver and check that all the numbers are mutually consistent.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Callable, Iterator

from cdbg import bounds, constructions, solver
from cdbg.constructions import VertexSet
from cdbg.graph import GraphSpec, build
from cdbg.words import count_words

HEADER = ["family", "d", "t", "n", "lower", "upper", "exact", "gamma_lo", "gamma_hi", "construction", "verdict"]


@dataclass(frozen=True)
class Family:
    id: str
    table: str
    orientation: str
    admits: Callable[[int, int, int], bool]
    construct: Callable[[int, int, int], VertexSet] | None = None


def _thm6_set(d: int, t: int, n: int) -> VertexSet:
    # The n = 2 de Bruijn set uses only 2-constrained words.
    base = constructions.db_undirected_n2(d)
    spec = GraphSpec(d, 2, 2, "undirected")
    return constructions.vertex_set(spec, base.words(), bounds.thm6_exact(d), "thm6")


FAMILIES = [
    Family("thm1", "table1", "directed", lambda d, t, n: t == 1),
    Family("thm5", "table1", "directed", lambda d, t, n: t == 2,
           lambda d, t, n: constructions.directed_general_t(d, 2, n) if n > 2 else None),
    Family("thm9", "table1", "directed", lambda d, t, n: t == 3 and n >= 4,
           lambda d, t, n: constructions.directed_t3(d, n)),
    Family("thm11", "table1", "directed", lambda d, t, n: 3 <= t < n,
           lambda d, t, n: constructions.directed_general_t(d, t, n)),
    Family("thm13", "table1", "directed", lambda d, t, n: d == t == n,
           lambda d, t, n: constructions.perm_directed(n)),
    Family("thm15", "table1", "directed", lambda d, t, n: t == n and d > n,
           lambda d, t, n: constructions.partial_perm_directed(n, d - n)),
    Family("thm2", "table2", "undirected", lambda d, t, n: t == 1 and n == 2,
           lambda d, t, n: constructions.db_undirected_n2(d)),
    Family("thm3", "table2", "undirected", lambda d, t, n: t == 1 and n == 3,
           lambda d, t, n: constructions.db_undirected_n3(d)),
    Family("thm4", "table2", "undirected", lambda d, t, n: t == 1 and n >= 4,
           lambda d, t, n: constructions.db_undirected_general(d, n)),
    Family("thm6", "table2", "undirected", lambda d, t, n: t == 2 and n == 2, _thm6_set),
    Family("thm7", "table2", "undirected", lambda d, t, n: t == 2 and n == 3,
           lambda d, t, n: constructions.kautz_undirected_n3(d)),
    Family("thm8", "table2", "undirected", lambda d, t, n: t == 2 and n >= 4,
           lambda d, t, n: constructions.kautz_undirected_general(d, n)),
    Family("thm10", "table2", "undirected", lambda d, t, n: t == 3 and n >= 4,
           lambda d, t, n: constructions.undirected_t3(d, n)),
    Family("cor", "table2", "undirected", lambda d, t, n: 3 <= t < n,
           lambda d, t, n: constructions.directed_general_t(d, t, n, "undirected")),
    Family("thm14", "table2", "undirected", lambda d, t, n: d == t == n,
           lambda d, t, n: constructions.perm_undirected(n)),
    Family("thm16", "table2", "undirected", lambda d, t, n: t == n >= 3 and d > n,
           lambda d, t, n: constructions.partial_perm_undirected(n, d - n)),
]


@dataclass(frozen=True)
class TableRow:
    family: str
    spec: GraphSpec
    lower: int
    upper: int | None
    exact: int | None
    gamma_lo: int
    gamma_hi: int
    construction: int | None
    verdict: str

    def as_list(self) -> list:
        s = self.spec
        return [self.family, s.d, s.t, s.n, self.lower, _blank(self.upper), _blank(self.exact),
                self.gamma_lo, self.gamma_hi, _blank(self.construction), self.verdict]


def _blank(x: int | None) -> int | str:
    return "" if x is None else x


def instances(max_vertices: int, max_param: int = 16) -> Iterator[tuple[int, int, int]]:
    for d in range(2, max_param + 1):
        for n in range(2, max_param + 1):
            for t in range(1, min(d, n) + 1):
                if count_words(d, t, n) <= max_vertices:
                    yield d, t, n


def consistent(
    report: bounds.BoundReport,
    result: solver.SolveResult,
    construction: VertexSet | None,
    construction_ok: bool,
    family: str,
) -> bool:
    """Sandwich check: bounds, solver interval and construction must agree."""
    lo, hi = result.gamma_low, result.gamma_high
    if report.lower > hi:
        return False
    ceiling = report.exact if report.exact is not None else report.upper
    if ceiling is not None and lo > ceiling:
        return False
    if report.exact is not None and not lo <= report.exact <= hi:
        return False
    if construction is not None:
        size = len(construction)
        if not construction_ok or size < report.lower or size < lo:
            return False
        if family == "thm16":
            if size > construction.claimed_size:
                return False
        elif size != construction.claimed_size:
            return False
    return True


def evaluate(family: Family, d: int, t: int, n: int, budget: solver.Budget, workers: int = 1) -> TableRow:
    spec = GraphSpec(d, t, n, family.orientation)
    g = build(spec)
    report = bounds.exact_or_upper(spec)
    result = solver.exact_gamma(g, budget, workers=workers)
    s = family.construct(d, t, n) if family.construct else None
    ok = s is not None and solver.is_dominating(g, s)
    verdict = "consistent" if consistent(report, result, s, ok, family.id) else "violation"
    return TableRow(family.id, spec, report.lower, report.upper, report.exact,
                    result.gamma_low, result.gamma_high, len(s) if s is not None else None, verdict)


def table_rows(
    which: str, max_vertices: int, budget: solver.Budget, workers: int = 1
) -> Iterator[TableRow]:
    fams = [f for f in FAMILIES if f.table == which]
    if not fams:
        raise ValueError(f"unknown table {which!r}")
    for fam in fams:
        for d, t, n in instances(max_vertices):
            if fam.admits(d, t, n):
                yield evaluate(fam, d, t, n, budget, workers)


def render_csv(rows: list[TableRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(HEADER)
    writer.writerows(r.as_list() for r in rows)
    return buf.getvalue()
