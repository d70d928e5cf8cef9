"""Automorphism groups, orbits and the vertex-orbit quotient graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    InconsistentOrbitDegrees,
    IndexOutOfRange,
    MismatchedGroup,
    NotNutGraph,
)
from .graph import Edge, Graph, edge
from .nut import is_nut
from .perm import Perm, StabilizerChain, UnionFind, orbit_partition
from .search import automorphism_search, find_isomorphism


@dataclass(frozen=True)
class AutGroup:
    degree: int
    generators: tuple[Perm, ...]
    chain: StabilizerChain = field(repr=False, compare=False)

    @property
    def order(self) -> int:
        return self.chain.order()

    def contains(self, p: Sequence[int]) -> bool:
        return len(p) == self.degree and self.chain.contains(p)


def _degree_colouring(g: Graph) -> list[list[int]]:
    by_degree: dict[int, list[int]] = {}
    for v, d in enumerate(g.degrees()):
        by_degree.setdefault(d, []).append(v)
    return [by_degree[d] for d in sorted(by_degree)]


def _preserves_edges(g: Graph, p: Perm) -> bool:
    return all(g.has_edge(p[u], p[v]) for u, v in g.edges)


def automorphism_group(g: Graph) -> AutGroup:
    """Generators and a stabilizer chain for Aut(g).

    The order from the chain is cross-checked against the order implied by
    the search tree; a disagreement means a bug and raises RuntimeError.
    """
    result = automorphism_search(g.rows, _degree_colouring(g))
    gens = tuple(result.generators)
    for p in gens:
        if not _preserves_edges(g, p):
            raise RuntimeError("search produced a non-automorphism")
    chain = StabilizerChain(g.order, gens)
    if chain.order() != result.order:
        raise RuntimeError(f"group order mismatch: chain {chain.order()} vs search {result.order}")
    return AutGroup(g.order, gens, chain)


@dataclass(frozen=True)
class OrbitPartition:
    vertex_orbits: tuple[tuple[int, ...], ...]
    edge_orbits: tuple[tuple[Edge, ...], ...]

    def orbit_index(self) -> list[int]:
        idx = [0] * sum(len(o) for o in self.vertex_orbits)
        for i, orb in enumerate(self.vertex_orbits):
            for v in orb:
                idx[v] = i
        return idx


@dataclass(frozen=True)
class OrbitSignature:
    o_v: int
    o_e: int
    aut_order: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.o_v, self.o_e, self.aut_order)


def orbits(g: Graph, a: AutGroup) -> tuple[OrbitPartition, OrbitSignature]:
    if a.degree != g.order:
        raise MismatchedGroup(f"group acts on {a.degree} points, graph has {g.order} vertices")
    vclasses = orbit_partition(g.order, a.generators)
    index = {e: i for i, e in enumerate(g.edges)}
    uf = UnionFind(len(g.edges))
    for p in a.generators:
        for i, (u, v) in enumerate(g.edges):
            uf.union(i, index[edge(p[u], p[v])])
    eclasses = [tuple(g.edges[i] for i in cls) for cls in uf.classes()]
    part = OrbitPartition(tuple(tuple(c) for c in vclasses), tuple(eclasses))
    return part, OrbitSignature(len(vclasses), len(eclasses), a.order)


def omega(g: Graph) -> OrbitSignature:
    return orbits(g, automorphism_group(g))[1]


def is_vertex_transitive(g: Graph, a: AutGroup | None = None) -> bool:
    if g.order == 0:
        return True
    a = a or automorphism_group(g)
    return len(orbit_partition(g.order, a.generators)) == 1


@dataclass(frozen=True)
class VertexOrbitGraph:
    orbits: tuple[tuple[int, ...], ...]
    adjacent: frozenset[tuple[int, int]]  # pairs i < j of adjacent orbits
    intra: tuple[bool, ...]
    d: tuple[tuple[int, ...], ...]  # d[i][j]: neighbours in orbit j of a vertex in orbit i

    @property
    def size(self) -> int:
        return len(self.orbits)

    def neighbours(self, i: int) -> list[int]:
        return [j for j in range(self.size) if (min(i, j), max(i, j)) in self.adjacent]


def vertex_orbit_graph(g: Graph, p: OrbitPartition) -> VertexOrbitGraph:
    idx = p.orbit_index()
    k = len(p.vertex_orbits)
    d = [[None] * k for _ in range(k)]
    for i, orb in enumerate(p.vertex_orbits):
        for v in orb:
            counts = [0] * k
            for u in g.neighbors(v):
                counts[idx[u]] += 1
            for j in range(k):
                if d[i][j] is None:
                    d[i][j] = counts[j]
                elif d[i][j] != counts[j]:
                    raise InconsistentOrbitDegrees(
                        f"vertex {v} has {counts[j]} neighbours in orbit {j}, expected {d[i][j]}")
    adjacent = frozenset((i, j) for i in range(k) for j in range(i + 1, k) if d[i][j])
    intra = tuple(bool(d[i][i]) for i in range(k))
    return VertexOrbitGraph(p.vertex_orbits, adjacent, intra, tuple(tuple(r) for r in d))


def has_sign_reversing_automorphism(g: Graph, x: Sequence[int], a: AutGroup) -> bool:
    """True iff some automorphism maps the kernel vector ``x`` to ``-x``.

    For a nut graph every automorphism sends ``x`` to ``+x`` or ``-x`` and
    the sign is multiplicative, so checking the generators suffices.
    """
    verdict = is_nut(g)
    if not verdict:
        raise NotNutGraph("sign-reversal is only defined for nut graphs")
    for p in a.generators:
        if all(x[p[i]] == -x[i] for i in range(g.order)):
            return True
    return False


def stabilizer_orbit_counts(g: Graph, v: int, a: AutGroup) -> tuple[int, list[list[int]]]:
    """Orbits of the stabilizer of ``v`` on the neighbourhood of ``v``."""
    if not 0 <= v < g.order:
        raise IndexOutOfRange(f"vertex {v} outside 0..{g.order - 1}")
    chain = StabilizerChain(g.order, a.generators, base_prefix=[v])
    stab = chain.stabilizer_generators(1)
    uf = UnionFind(g.order)
    for p in stab:
        for y, z in enumerate(p):
            uf.union(y, z)
    nbrs = g.neighbors(v)
    groups: dict[int, list[int]] = {}
    for u in nbrs:
        groups.setdefault(uf.find(u), []).append(u)
    classes = sorted(groups.values())
    return len(classes), classes


def endpoints_swappable(g: Graph, u: int, v: int) -> bool:
    """Whether some automorphism exchanges ``u`` and ``v``."""
    if u == v:
        return True
    rest = [x for x in range(g.order) if x not in (u, v)]
    return find_isomorphism(g.rows, [[u], [v], rest], [[v], [u], rest]) is not None
