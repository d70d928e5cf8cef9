"""Canonical forms and isomorph-free generation of small connected graphs.

The canonical form of a graph is the lexicographically smallest graph6
string among the leaves of its individualize-refine search tree, so it is
stable but not meant to agree with any external tool.

Generation is canonical augmentation by edges: every graph with ``m + 1``
edges is produced from exactly one parent with ``m`` edges, namely the
graph obtained by deleting its canonically chosen edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import OrderTooLarge
from .graph import Graph, write_graph6
from .nut import NullityReport, is_nut, nullity
from .perm import Perm, UnionFind
from .search import Partition, refine
from .search import automorphism_search
from .symmetry import OrbitSignature, automorphism_group, orbits

MAX_ENUMERATION_ORDER = 8


def _relabelled_key(rows: Sequence[int], lab: Sequence[int]) -> int:
    """Upper-triangle bits of the graph with vertex ``lab[i]`` renamed ``i``,
    read in graph6 order, as one integer (same order as the graph6 bytes)."""
    key = 0
    n = len(lab)
    for j in range(1, n):
        rj = rows[lab[j]]
        for i in range(j):
            key = (key << 1) | (rj >> lab[i] & 1)
    return key


@dataclass(frozen=True)
class CanonicalLabelling:
    form: bytes
    lab: tuple[int, ...]  # lab[i] is the vertex placed at canonical position i
    automorphisms: tuple[Perm, ...]

    def position(self) -> list[int]:
        pos = [0] * len(self.lab)
        for i, v in enumerate(self.lab):
            pos[v] = i
        return pos


def _degree_cells(rows: Sequence[int]) -> list[list[int]]:
    cells: dict[int, list[int]] = {}
    for v, r in enumerate(rows):
        cells.setdefault(r.bit_count(), []).append(v)
    return [cells[d] for d in sorted(cells)]


def canonical_labelling_rows(rows: Sequence[int]) -> CanonicalLabelling:
    n = len(rows)
    root = Partition.from_cells(n, _degree_cells(rows))
    refine(rows, root, root.starts())
    best_key: int | None = None
    best_lab: list[int] = []
    autos: list[Perm] = []

    def visit(p: Partition, prefix: list[int]) -> None:
        nonlocal best_key, best_lab
        if p.is_discrete():
            key = _relabelled_key(rows, p.lab)
            if best_key is None or key < best_key:
                best_key, best_lab = key, p.lab[:]
            elif key == best_key:
                gamma = [0] * n
                for a, b in zip(best_lab, p.lab):
                    gamma[a] = b
                autos.append(tuple(gamma))
            return
        s = p.target()
        done: list[int] = []
        for w in sorted(p.cell(s)):
            if done:
                uf = UnionFind(n)
                for g in autos:
                    if all(g[x] == x for x in prefix):
                        for x, y in enumerate(g):
                            uf.union(x, y)
                if any(uf.same(w, d) for d in done):
                    continue
            q = p.copy()
            t = q.individualize(w)
            refine(rows, q, [t])
            visit(q, prefix + [w])
            done.append(w)

    visit(root, [])
    lab = tuple(best_lab)
    return CanonicalLabelling(write_graph6(_relabel_rows(rows, lab)), lab, tuple(autos))


def _relabel_rows(rows: Sequence[int], lab: Sequence[int]) -> Graph:
    pos = [0] * len(lab)
    for i, v in enumerate(lab):
        pos[v] = i
    es = []
    for u, r in enumerate(rows):
        x = r >> (u + 1)
        v = u + 1
        while x:
            if x & 1:
                es.append((pos[u], pos[v]))
            x >>= 1
            v += 1
    return Graph(len(rows), es)


def canonical_labelling(g: Graph) -> CanonicalLabelling:
    return canonical_labelling_rows(g.rows)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-class identifier: equal iff the graphs are isomorphic."""
    return canonical_labelling_rows(g.rows).form


def canonical_graph(g: Graph) -> Graph:
    """The representative of ``g``'s class whose graph6 is its canonical form."""
    return _relabel_rows(g.rows, canonical_labelling_rows(g.rows).lab)


# generation -------------------------------------------------------------------

def _edge_invariant(rows: Sequence[int], u: int, v: int) -> tuple[int, int, int]:
    du, dv = rows[u].bit_count(), rows[v].bit_count()
    return (du + dv, min(du, dv), (rows[u] & rows[v]).bit_count())


def _edges_of(rows: Sequence[int]) -> list[tuple[int, int]]:
    out = []
    for u, r in enumerate(rows):
        x = r >> (u + 1)
        v = u + 1
        while x:
            if x & 1:
                out.append((u, v))
            x >>= 1
            v += 1
    return out


def _accept(rows: list[int], e: tuple[int, int]) -> bool:
    """Is ``e`` equivalent under Aut(child) to the child's canonical edge?"""
    inv = _edge_invariant(rows, *e)
    cands = []
    for f in _edges_of(rows):
        fi = _edge_invariant(rows, *f)
        if fi > inv:
            return False
        if fi == inv:
            cands.append(f)
    if len(cands) == 1:
        return True
    pos = canonical_labelling_rows(rows).position()
    chosen = max(cands, key=lambda f: sorted((pos[f[0]], pos[f[1]]), reverse=True))
    if chosen == e:
        return True
    gens = automorphism_search(rows).generators
    return _same_edge_orbit(len(rows), gens, e, chosen)


def _same_edge_orbit(n: int, gens: Sequence[Perm], a: tuple[int, int], b: tuple[int, int]) -> bool:
    seen = {a}
    queue = [a]
    for u, v in queue:
        for g in gens:
            x, y = g[u], g[v]
            img = (x, y) if x < y else (y, x)
            if img == b:
                return True
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return a == b


def _non_edge_orbit_reps(rows: Sequence[int]) -> list[tuple[int, int]]:
    n = len(rows)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if not rows[u] >> v & 1]
    if not pairs:
        return []
    gens = automorphism_search(rows).generators
    if not gens:
        return pairs
    index = {p: i for i, p in enumerate(pairs)}
    uf = UnionFind(len(pairs))
    for g in gens:
        for i, (u, v) in enumerate(pairs):
            x, y = g[u], g[v]
            uf.union(i, index[(x, y) if x < y else (y, x)])
    return [pairs[c[0]] for c in uf.classes()]


def _all_graphs_by_size(n: int) -> Iterator[list[int]]:
    level = [[0] * n]
    while level:
        yield from level
        nxt = []
        for rows in level:
            for u, v in _non_edge_orbit_reps(rows):
                child = list(rows)
                child[u] |= 1 << v
                child[v] |= 1 << u
                if _accept(child, (u, v)):
                    nxt.append(child)
        level = nxt


def _check_order(n: int) -> None:
    if n > MAX_ENUMERATION_ORDER:
        raise OrderTooLarge(f"enumeration is capped at n = {MAX_ENUMERATION_ORDER}")
    if n < 1:
        raise ValueError("order must be positive")


def enumerate_graphs(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices."""
    _check_order(n)
    out = [canonical_graph(Graph.from_rows(rows)) for rows in _all_graphs_by_size(n)]
    return sorted(out, key=write_graph6)


def enumerate_connected(n: int) -> list[Graph]:
    """Connected graphs on ``n`` vertices up to isomorphism, in canonical form
    and sorted by it."""
    _check_order(n)
    out = []
    for rows in _all_graphs_by_size(n):
        g = Graph.from_rows(rows)
        if g.is_connected():
            out.append(canonical_graph(g))
    return sorted(out, key=write_graph6)


@dataclass(frozen=True)
class NutRecord:
    graph: Graph
    nullity: NullityReport
    signature: OrbitSignature

    @property
    def kernel_vector(self) -> tuple[int, ...]:
        return self.nullity.basis[0]


def enumerate_nut(n: int) -> list[NutRecord]:
    """All nut graphs on ``n`` vertices with kernel and orbit data attached."""
    out = []
    for g in enumerate_connected(n):
        rep = nullity(g)
        if is_nut(g, rep):
            sig = orbits(g, automorphism_group(g))[1]
            out.append(NutRecord(g, rep, sig))
    return out
