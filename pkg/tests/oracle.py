"""Brute-force reference implementations, independent of cdbg.solver."""

from itertools import combinations

from cdbg.graph import GraphSpec, neighbors, successors
from cdbg.words import iter_words


def closed_sets(spec: GraphSpec) -> tuple[list, list[frozenset]]:
    verts = list(iter_words(spec.d, spec.t, spec.n))
    step = successors if spec.directed else neighbors
    return verts, [frozenset(step(w, spec)) | {w} for w in verts]


def naive_gamma(spec: GraphSpec) -> int:
    """Smallest k such that some k-subset dominates; tries subsets in increasing size."""
    verts, cover = closed_sets(spec)
    everything = frozenset(verts)
    for k in range(1, len(verts) + 1):
        for combo in combinations(range(len(verts)), k):
            if frozenset().union(*(cover[i] for i in combo)) == everything:
                return k
    raise AssertionError("unreachable: the full vertex set dominates")


def dominates(spec: GraphSpec, members: list[tuple[int, ...]]) -> bool:
    """Every vertex lies in the closed out-neighborhood of some member."""
    verts, cover = closed_sets(spec)
    index = {w: i for i, w in enumerate(verts)}
    covered = frozenset().union(*(cover[index[w]] for w in members))
    return covered == frozenset(verts)
