"""Closed-form counts and domination bounds for t-constrained de Bruijn graphs.

All arithmetic is exact: integers throughout, ``Fraction`` for the few
relaxed expressions with a non-integer coefficient.

Formula identifiers (``thm2`` ... ``thm16``, ``cor``) follow the numbering of
the published results; ``deg+`` and ``deg`` are the degree-counting bounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from cdbg.graph import GraphSpec
from cdbg.words import ParameterError, count_words


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def generic_lower(vertex_count: int, max_degree: int) -> int:
    """ceil(|V| / (max_degree + 1)): one vertex dominates at most max_degree + 1."""
    if max_degree < 0:
        raise ParameterError("max_degree must be non-negative")
    return _ceil_div(vertex_count, max_degree + 1)


def directed_degree_lower(d: int, t: int, n: int) -> int:
    return generic_lower(count_words(d, t, n), d - t + 1)


def undirected_degree_lower(d: int, t: int, n: int) -> int:
    return generic_lower(count_words(d, t, n), 2 * (d - t + 1))


# Closed forms, one per result. Each returns an int.

def thm1_exact(d: int, n: int) -> int:
    return _ceil_div(d**n, d + 1)


def thm2_exact(d: int) -> int:
    return d - 1


def thm3_exact(d: int) -> int:
    return d * _ceil_div(d, 2)


def thm4_upper(d: int, n: int) -> int:
    return (d - 1) * d ** (n - 2)


def thm5_exact(d: int, n: int) -> int:
    return (d - 1) ** (n - 1)


def thm6_exact(d: int) -> int:
    return d - 1


def thm7_lower(d: int) -> int:
    return d * (d - 1) // 2


def thm7_upper(d: int) -> int:
    return d * d // 2


def thm8_upper(d: int, n: int) -> int:
    return (d - 1) ** (n - 1) - (d - 2) * (d - 1) ** (n - 4)


def thm9_upper(d: int, n: int) -> int:
    if d % 2 == 0:
        return d * (d - 2) ** (n - 2)
    return (d - 1) ** 2 * (d - 2) ** (n - 3)


def thm9_lower(d: int, n: int) -> int:
    return d * (d - 2) ** (n - 2)


def thm10_upper(d: int, n: int) -> int:
    return (d - 1) * (d - 2) ** (n - 2)


def thm11_upper(d: int, t: int, n: int) -> int:
    return (d - 1) * factorial(d - 1) // factorial(d - t) * (d - t + 1) ** (n - t - 1)


def thm13_exact(n: int) -> int:
    return _ceil_div(n, 2) * factorial(n - 1)


def thm14_exact(n: int) -> int:
    return _ceil_div(n, 3) * factorial(n - 1)


def thm15_lower(n: int, c: int) -> int:
    return factorial(n + c) // factorial(c) // (c + 2)


def thm15_upper(n: int, c: int) -> int:
    return (n + c - 1) * factorial(n + c - 1) // factorial(c + 1)


def thm16_lower(n: int, c: int) -> int:
    return _ceil_div(factorial(n + c) // factorial(c), 2 * c + 3)


def block_selection_size(n: int, c: int) -> int:
    """Size of one per-part selection: (n+c-1)!/(c+1)!."""
    return factorial(n + c - 1) // factorial(c + 1)


def thm16_recurrence(n: int, c: int, relaxed: bool = False) -> int | Fraction:
    """Size bound T(n+c, n, n) of the recursive undirected construction.

    Each level adds ceil(n/4) * 2 selections of (n+c-1)!/(c+1)! vertices.
    ``relaxed=True`` replaces ceil(n/4) * 2 by (n+4)/2 and returns a Fraction.
    """
    if n < 3 or c < 0:
        raise ParameterError(f"need n >= 3 and c >= 0, got n={n}, c={c}")
    total: int | Fraction = thm14_exact(n)
    per_level = Fraction(n + 4, 2) if relaxed else 2 * _ceil_div(n, 4)
    for k in range(1, c + 1):
        total += per_level * block_selection_size(n, k)
    return total


def thm16_closed_form(n: int, c: int) -> Fraction:
    """Published solution of the relaxed recurrence.

    (n+4)/2 (n+c)!/(n (c+1)!) - (n+4)/2 (n-1)! + (n+3)/3 (n-1)!. It was derived
    with ``factorial_sum_closed`` and undershoots the relaxed recurrence.
    """
    f = factorial
    return (
        Fraction(n + 4, 2) * Fraction(f(n + c), n * f(c + 1))
        - Fraction(n + 4, 2) * f(n - 1)
        + Fraction(n + 3, 3) * f(n - 1)
    )


def thm16_corrected_closed_form(n: int, c: int) -> Fraction:
    """Exact solution of the relaxed recurrence, via ``factorial_sum_corrected``."""
    f = factorial
    tail = factorial_sum_corrected(n, c) - f(n - 1)
    return thm14_exact(n) + Fraction(n + 4, 2) * tail


def thm16_normalized_form(n: int, c: int) -> Fraction:
    """Published bound written as a multiple of (n+c)!/((2c+3) c!).

    Its (n+c)! terms match ``thm16_closed_form``; the constant term is
    -(n+6)(n-1)!/2 instead of -(n+6)(n-1)!/6.
    """
    f = factorial
    factor = (
        1
        + Fraction(1, 2 * c + 2)
        + Fraction(4, n)
        + Fraction(2, n * (c + 1))
        - Fraction((2 * c + 3) * (n + 6) * f(n - 1) * f(c), 2 * f(n + c))
    )
    return factor * Fraction(f(n + c), (2 * c + 3) * f(c))


def factorial_sum(n: int, h: int) -> Fraction:
    """sum_{i=0}^{h} (n+i-1)!/(i+1)!"""
    return sum((Fraction(factorial(n + i - 1), factorial(i + 1)) for i in range(h + 1)), Fraction(0))


def factorial_sum_closed(n: int, h: int) -> Fraction:
    """(h+n)!/(n (h+1)!), the closed form the published argument relies on.

    Only agrees with ``factorial_sum`` at h = 0; see ``factorial_sum_corrected``.
    """
    return Fraction(factorial(h + n), n * factorial(h + 1))


def factorial_sum_corrected(n: int, h: int) -> Fraction:
    """(n+h)!/((n-1)(h+1)!) - (n-2)!, which equals ``factorial_sum`` for n >= 2.

    Follows from the hockey-stick identity on C(n-2+j, j), j = 1..h+1.
    """
    if n < 2:
        raise ParameterError(f"need n >= 2, got {n}")
    return Fraction(factorial(n + h), (n - 1) * factorial(h + 1)) - factorial(n - 2)


@dataclass(frozen=True)
class Source:
    id: str
    citation: str


@dataclass
class BoundReport:
    spec: GraphSpec
    lower: int
    upper: int | None = None
    exact: int | None = None
    sources: list[Source] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "sources": [{"id": s.id, "citation": s.citation} for s in self.sources],
        }


CITATIONS = {
    "deg+": "degree counting, out-degree d-t+1",
    "deg": "degree counting, degree at most 2(d-t+1)",
    "thm1": "directed de Bruijn, exact ceil(d^n/(d+1))",
    "thm2": "undirected de Bruijn n=2, exact d-1",
    "thm3": "undirected de Bruijn n=3, exact d*ceil(d/2)",
    "thm4": "undirected de Bruijn n>=4, upper (d-1)d^(n-2)",
    "thm5": "directed Kautz, exact (d-1)^(n-1)",
    "thm6": "undirected Kautz n=2, exact d-1",
    "thm7": "undirected Kautz n=3, d(d-1)/2 <= gamma <= floor(d^2/2)",
    "thm8": "undirected Kautz n>=4, upper (d-1)^(n-1)-(d-2)(d-1)^(n-4)",
    "thm9": "directed t=3, lower d(d-2)^(n-2), tight for even d",
    "thm10": "undirected t=3, upper (d-1)(d-2)^(n-2)",
    "thm11": "directed general t<n, upper (d-1)(d-1)!/(d-t)! (d-t+1)^(n-t-1)",
    "cor": "undirected general t, upper inherited from the directed construction",
    "thm13": "directed permutations, exact ceil(n/2)(n-1)!",
    "thm14": "undirected permutations, exact ceil(n/3)(n-1)!",
    "thm15": "directed partial permutations, upper (n+c-1)(n+c-1)!/(c+1)!",
    "thm16": "undirected partial permutations, recursive A-partition bound",
    "directed": "an out-dominating set also dominates the underlying undirected graph",
}


def _facts(spec: GraphSpec) -> tuple[list[tuple[str, int]], list[tuple[str, int]], list[tuple[str, int]]]:
    """Applicable (id, value) triples split into lower, upper and exact facts."""
    d, t, n = spec.d, spec.t, spec.n
    lower: list[tuple[str, int]] = []
    upper: list[tuple[str, int]] = []
    exact: list[tuple[str, int]] = []

    if spec.directed:
        lower.append(("deg+", directed_degree_lower(d, t, n)))
        if t == 1:
            exact.append(("thm1", thm1_exact(d, n)))
        if t == 2:
            exact.append(("thm5", thm5_exact(d, n)))
        if t == 3 and n >= 4:
            lower.append(("thm9", thm9_lower(d, n)))
            (exact if d % 2 == 0 else upper).append(("thm9", thm9_upper(d, n)))
        if 2 <= t < n:
            upper.append(("thm11", thm11_upper(d, t, n)))
        if t == n:
            c = d - n
            if c == 0:
                exact.append(("thm13", thm13_exact(n)))
            else:
                lower.append(("thm15", thm15_lower(n, c)))
                upper.append(("thm15", thm15_upper(n, c)))
        return lower, upper, exact

    lower.append(("deg", undirected_degree_lower(d, t, n)))
    # Every directed upper bound carries over.
    d_lower, d_upper, d_exact = _facts(spec.with_orientation("directed"))
    upper.extend(("directed", v) for _, v in d_upper + d_exact)
    if t == 1:
        if n == 2:
            exact.append(("thm2", thm2_exact(d)))
        elif n == 3:
            exact.append(("thm3", thm3_exact(d)))
        else:
            upper.append(("thm4", thm4_upper(d, n)))
    if t == 2:
        if n == 2:
            exact.append(("thm6", thm6_exact(d)))
        elif n == 3:
            lower.append(("thm7", thm7_lower(d)))
            upper.append(("thm7", thm7_upper(d)))
        else:
            upper.append(("thm8", thm8_upper(d, n)))
    if t == 3 and n >= 4:
        upper.append(("thm10", thm10_upper(d, n)))
    if t >= 3 and n > t and d >= 3:
        upper.append(("cor", thm11_upper(d, t, n)))
    if t == n:
        c = d - n
        if c == 0:
            exact.append(("thm14", thm14_exact(n)))
        elif n >= 3:
            lower.append(("thm16", thm16_lower(n, c)))
            upper.append(("thm16", int(thm16_recurrence(n, c))))
    return lower, upper, exact


def lower_bound(spec: GraphSpec) -> int:
    """Strongest stated lower bound; exact values count as lower bounds."""
    lower, _, exact = _facts(spec)
    return max(v for _, v in lower + exact)


def exact_or_upper(spec: GraphSpec) -> BoundReport:
    lower, upper, exact = _facts(spec)
    exact_values = {v for _, v in exact}
    if len(exact_values) > 1:
        raise AssertionError(f"conflicting exact values for {spec}: {exact}")
    lo = max(v for _, v in lower + exact)
    up = min((v for _, v in upper + exact), default=None)
    ex = exact_values.pop() if exact_values else None
    if ex is None and up is not None and lo == up:
        ex = lo
    if up is not None and lo > up:
        raise AssertionError(f"lower bound {lo} exceeds upper bound {up} for {spec}")
    used = []
    for sid, v in lower + upper + exact:
        if v in (lo, up, ex) and all(s.id != sid for s in used):
            used.append(Source(sid, CITATIONS[sid]))
    return BoundReport(spec, lo, up, ex, used)
