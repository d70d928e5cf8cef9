"""Partition refinement and individualize-refine backtracking.

Partitions are ordered: cells are contiguous slices of ``lab`` and a cell is
named by the index of its first position. Because positions are invariant
under isomorphism, refinement traces built from positions and counts can be
compared between different branches of the search tree.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .perm import Perm, UnionFind

Trace = tuple


class Partition:
    __slots__ = ("lab", "cell_of", "length")

    def __init__(self, lab: list[int], cell_of: list[int], length: dict[int, int]) -> None:
        self.lab = lab
        self.cell_of = cell_of
        self.length = length

    @classmethod
    def from_cells(cls, n: int, cells: Sequence[Sequence[int]]) -> "Partition":
        lab: list[int] = []
        cell_of = [0] * n
        length = {}
        for cell in cells:
            if not cell:
                continue
            start = len(lab)
            length[start] = len(cell)
            for v in cell:
                cell_of[v] = start
                lab.append(v)
        if sorted(lab) != list(range(n)):
            raise ValueError("cells must partition the vertex set")
        return cls(lab, cell_of, length)

    def copy(self) -> "Partition":
        return Partition(self.lab[:], self.cell_of[:], dict(self.length))

    def starts(self) -> list[int]:
        return sorted(self.length)

    def cell(self, start: int) -> list[int]:
        return self.lab[start:start + self.length[start]]

    def cells(self) -> list[list[int]]:
        return [self.cell(s) for s in self.starts()]

    def is_discrete(self) -> bool:
        return len(self.length) == len(self.lab)

    def target(self) -> int | None:
        """Start of the smallest non-singleton cell (lowest start on ties)."""
        best = None
        for s, size in self.length.items():
            if size > 1 and (best is None or (size, s) < best):
                best = (size, s)
        return None if best is None else best[1]

    def individualize(self, v: int) -> int:
        s = self.cell_of[v]
        size = self.length[s]
        if size == 1:
            return s
        seg = self.lab[s:s + size]
        seg.remove(v)
        self.lab[s:s + size] = [v] + seg
        self.length[s] = 1
        self.length[s + 1] = size - 1
        for x in seg:
            self.cell_of[x] = s + 1
        return s


def refine(rows: Sequence[int], p: Partition, active: Iterable[int]) -> Trace:
    """Refine ``p`` in place to the coarsest equitable partition below it.

    ``active`` lists the cells that may still split others. Returns a trace
    recording every split, which is invariant under relabelling.
    """
    heap = sorted(set(active))
    queued = set(heap)
    trace = []
    n = len(p.lab)
    while heap:
        w = heapq.heappop(heap)
        queued.discard(w)
        mask = 0
        for x in p.lab[w:w + p.length[w]]:
            mask |= 1 << x
        s = 0
        while s < n:
            size = p.length[s]
            if size > 1:
                cell = p.lab[s:s + size]
                counts = [(rows[v] & mask).bit_count() for v in cell]
                if min(counts) != max(counts):
                    groups: dict[int, list[int]] = {}
                    for v, c in zip(cell, counts):
                        groups.setdefault(c, []).append(v)
                    keys = sorted(groups)
                    frags = []
                    pos = s
                    for c in keys:
                        frag = groups[c]
                        p.lab[pos:pos + len(frag)] = frag
                        p.length[pos] = len(frag)
                        for v in frag:
                            p.cell_of[v] = pos
                        frags.append((pos, len(frag)))
                        pos += len(frag)
                    trace.append((w, s, tuple((c, len(groups[c])) for c in keys)))
                    if s in queued:
                        skip = None
                    else:
                        skip = max(frags, key=lambda f: (f[1], -f[0]))[0]
                    for start, _ in frags:
                        if start != skip and start not in queued:
                            queued.add(start)
                            heapq.heappush(heap, start)
            s += size
    return tuple(trace)


def initial_partition(rows: Sequence[int], colouring: Sequence[Sequence[int]] | None = None) -> Partition:
    n = len(rows)
    if colouring is None:
        colouring = [list(range(n))]
    return Partition.from_cells(n, colouring)


def _is_automorphism(rows: Sequence[int], gamma: Sequence[int]) -> bool:
    for u, r in enumerate(rows):
        img = 0
        while r:
            low = r & -r
            img |= 1 << gamma[low.bit_length() - 1]
            r ^= low
        if rows[gamma[u]] != img:
            return False
    return True


def _leaf_map(first: Sequence[int], other: Sequence[int]) -> Perm:
    gamma = [0] * len(first)
    for a, b in zip(first, other):
        gamma[a] = b
    return tuple(gamma)


def _child(rows: Sequence[int], p: Partition, v: int) -> tuple[Partition, Trace]:
    q = p.copy()
    size = q.length[q.cell_of[v]]
    s = q.individualize(v)
    return q, ((s, size),) + refine(rows, q, [s])


@dataclass
class _FirstPath:
    nodes: list[Partition]
    traces: list[Trace]
    choices: list[int]

    @property
    def leaf(self) -> list[int]:
        return self.nodes[-1].lab


def _first_path(rows: Sequence[int], root: Partition, root_trace: Trace) -> _FirstPath:
    nodes, traces, choices = [root], [root_trace], []
    p = root
    while not p.is_discrete():
        s = p.target()
        v = min(p.cell(s))
        p, t = _child(rows, p, v)
        nodes.append(p)
        traces.append(t)
        choices.append(v)
    return _FirstPath(nodes, traces, choices)


def _match_below(rows: Sequence[int], path: _FirstPath, p: Partition, depth: int) -> Perm | None:
    """Search the subtree at ``p`` (already trace-equal at ``depth``) for a leaf
    whose induced map from the first leaf is an automorphism."""
    if p.is_discrete():
        gamma = _leaf_map(path.leaf, p.lab)
        return gamma if _is_automorphism(rows, gamma) else None
    s = p.target()
    for x in sorted(p.cell(s)):
        q, t = _child(rows, p, x)
        if t != path.traces[depth + 1]:
            continue
        found = _match_below(rows, path, q, depth + 1)
        if found is not None:
            return found
    return None


@dataclass(frozen=True)
class SearchResult:
    generators: list[Perm]
    orbit_sizes: list[int]  # one per first-path level, root first
    base: list[int]

    @property
    def order(self) -> int:
        out = 1
        for k in self.orbit_sizes:
            out *= k
        return out


def automorphism_search(rows: Sequence[int], colouring: Sequence[Sequence[int]] | None = None) -> SearchResult:
    """Generators of the colour-preserving automorphism group.

    Levels of the first path are processed deepest first. At each level, a
    child of the first-path node is explored only if it is not already in
    the orbit of the first child (or of a child shown inequivalent) under
    the automorphisms found so far. The product of the first-child orbit
    sizes is the group order.
    """
    n = len(rows)
    root = initial_partition(rows, colouring)
    root_trace = refine(rows, root, root.starts())
    path = _first_path(rows, root, root_trace)
    gens: list[Perm] = []
    uf = UnionFind(n)
    sizes = []
    for level in reversed(range(len(path.choices))):
        node = path.nodes[level]
        cell = sorted(node.cell(node.target()))
        v1 = path.choices[level]
        tried = [v1]
        for w in cell:
            if any(uf.same(w, t) for t in tried):
                continue
            q, t = _child(rows, node, w)
            gamma = None
            if t == path.traces[level + 1]:
                gamma = _match_below(rows, path, q, level + 1)
            if gamma is not None:
                gens.append(gamma)
                for x, y in enumerate(gamma):
                    uf.union(x, y)
            else:
                tried.append(w)
        sizes.append(sum(1 for x in cell if uf.same(x, v1)))
    sizes.reverse()
    return SearchResult(gens, sizes, list(path.choices))


def find_isomorphism(rows: Sequence[int],
                     cells_a: Sequence[Sequence[int]],
                     cells_b: Sequence[Sequence[int]]) -> Perm | None:
    """An automorphism carrying ordered partition ``cells_a`` onto ``cells_b``.

    Both partitions are of the same graph. Returns ``None`` if none exists.
    """
    n = len(rows)
    pa = Partition.from_cells(n, cells_a)
    pb = Partition.from_cells(n, cells_b)
    if [len(c) for c in pa.cells()] != [len(c) for c in pb.cells()]:
        return None
    ta = refine(rows, pa, pa.starts())
    tb = refine(rows, pb, pb.starts())
    if ta != tb:
        return None
    path = _first_path(rows, pa, ta)
    return _match_below(rows, path, pb, 0)
