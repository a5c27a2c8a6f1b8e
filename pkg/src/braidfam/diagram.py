"""Checkerboard (Tait) graphs of closed braid diagrams.

Regions of the closed braid are numbered by gap: gap ``g`` lies between
strands ``g`` and ``g+1``.  Gap 0 is the outer region and the last gap the
region around the braid axis; every other gap is cut into segments by the
crossings of generator ``g``.  Colouring regions by gap parity gives two
graphs whose edges are the crossings.

Two crossings are *twist-equivalent* when they form a 2-edge cut in either
graph.  For a reduced alternating diagram a flype moves crossings only within
such a class, so the multiset of class sizes is an invariant of the link.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .words import BraidWord, as_word

Edge = tuple[object, object, int]


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def count(self) -> int:
        return len({self.find(x) for x in self.parent})


def _indices(word: BraidWord | str | Sequence[int]) -> tuple[int, ...]:
    if isinstance(word, (str, BraidWord)):
        return tuple(x.index for x in as_word(word).expanded())
    return tuple(word)


def tait_graphs(word: BraidWord | str | Sequence[int]) -> tuple[list[Edge], list[Edge]]:
    """Edge lists ``(face, face, crossing)`` of the even-gap and odd-gap graphs.

    Accepts a word or a bare sequence of generator indices, one per crossing.
    """
    seq = _indices(word)
    top = max(seq)
    cuts = {g: [i for i, k in enumerate(seq) if k == g] for g in range(1, top + 1)}

    def face(gap: int, t: int):
        occ = cuts.get(gap)
        if not occ:
            return (gap, 0)
        before = [c for c in occ if c < t]
        return (gap, before[-1] if before else occ[-1])

    graphs: tuple[list[Edge], list[Edge]] = ([], [])
    for t, k in enumerate(seq):
        graphs[k % 2].append((face(k, t), (k, t), t))
        graphs[(k + 1) % 2].append((face(k - 1, t), face(k + 1, t), t))
    return graphs


def _connected(edges: Sequence[Edge], vertices) -> bool:
    uf = _UnionFind(vertices)
    for a, b, _ in edges:
        uf.union(a, b)
    return uf.count() <= 1


def _vertices(edges: Sequence[Edge]) -> set:
    return {v for a, b, _ in edges for v in (a, b)}


def twist_pairs(word) -> list[tuple[int, int]]:
    """Crossing pairs forming a 2-edge cut in one of the two graphs."""
    out = set()
    for edges in tait_graphs(word):
        verts = _vertices(edges)
        for i, j in itertools.combinations(range(len(edges)), 2):
            rest = [e for k, e in enumerate(edges) if k not in (i, j)]
            if not _connected(rest, verts):
                out.add(tuple(sorted((edges[i][2], edges[j][2]))))
    return sorted(out)


def twist_classes(word) -> list[tuple[int, ...]]:
    """Crossings grouped by the transitive closure of twist equivalence."""
    seq = _indices(word)
    uf = _UnionFind(range(len(seq)))
    for a, b in twist_pairs(seq):
        uf.union(a, b)
    groups: dict[int, list[int]] = {}
    for c in range(len(seq)):
        groups.setdefault(uf.find(c), []).append(c)
    return sorted(tuple(g) for g in groups.values())


def twist_profile(word) -> tuple[int, ...]:
    """Sorted sizes of the twist classes."""
    return tuple(sorted(len(c) for c in twist_classes(word)))


def is_prime_diagram(word) -> bool:
    """No cut vertex in either checkerboard graph (loops ignored)."""
    for edges in tait_graphs(word):
        proper = [e for e in edges if e[0] != e[1]]
        verts = _vertices(proper)
        if len(verts) <= 2:
            continue
        for v in verts:
            rest = [e for e in proper if v not in (e[0], e[1])]
            if not _connected(rest, verts - {v}):
                return False
    return True


def rank_polynomial(word) -> tuple[tuple[int, int, int], ...]:
    """Whitney rank-generating function of the odd-gap checkerboard graph.

    Returned as sorted ``(corank, nullity, count)`` triples over all edge
    subsets; this carries the same information as the Tutte polynomial, so it
    is unchanged by flypes and Whitney twists.  For reduced alternating
    closures the odd-gap regions are consistently of one smoothing type, so
    equal links give equal values.
    """
    edges = [(a, b) for a, b, _ in tait_graphs(word)[1]]
    verts = sorted(_vertices([(a, b, 0) for a, b in edges]), key=repr)
    index = {v: i for i, v in enumerate(verts)}
    pairs = [(index[a], index[b]) for a, b in edges]
    m = len(pairs)

    def rank(mask: int) -> int:
        parent = list(range(len(verts)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        r = 0
        for k in range(m):
            if mask >> k & 1:
                a, b = find(pairs[k][0]), find(pairs[k][1])
                if a != b:
                    parent[a] = b
                    r += 1
        return r

    full = rank((1 << m) - 1)
    counts: dict[tuple[int, int], int] = {}
    for mask in range(1 << m):
        r = rank(mask)
        key = (full - r, bin(mask).count("1") - r)
        counts[key] = counts.get(key, 0) + 1
    return tuple((i, j, c) for (i, j), c in sorted(counts.items()))
