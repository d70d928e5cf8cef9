"""Graph constructions that preserve (or create) nut graphs.

All new vertices are appended after the existing labels, in the order
stated by each function. Preconditions on the input (nut-ness, orbit
fullness, bridges) raise; whether the output is actually nut is left to the
caller or to :mod:`nutkit.verify`, so broken hypotheses show up as data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    EvenCycleLength,
    IndexOutOfRange,
    NotBridge,
    NotFullOrbit,
    NotNut,
    NotRegular,
    OddDegree,
    OrderTooSmall,
    ParameterTooSmall,
    PrimeOrder,
)
from .families import circulant, rose_window, triangle_cycle
from .graph import Edge, Graph, edge
from .nut import is_nut
from .symmetry import AutGroup, OrbitSignature, automorphism_group, orbits


@dataclass(frozen=True)
class ConstructionDelta:
    before: OrbitSignature
    after: OrbitSignature
    t: int | None = None
    tau: int | None = None

    @property
    def phi(self) -> int:
        return self.after.o_e - self.before.o_e

    @property
    def group_preserved(self) -> bool:
        return self.before.aut_order == self.after.aut_order


# multiplier -------------------------------------------------------------------

def multiplier(g: Graph, k: int) -> Graph:
    """Hang ``r`` new ``k``-cycles on every vertex of a ``2r``-regular graph.

    For each vertex ``v`` in ascending order and each of its ``r`` cycles in
    turn, the ``k - 1`` new path vertices are appended in path order.
    """
    if k % 2 == 0:
        raise EvenCycleLength(f"cycle length {k} is even")
    if k < 3:
        raise ParameterTooSmall("cycle length must be at least 3")
    degs = set(g.degrees())
    if len(degs) != 1 or g.order == 0:
        raise NotRegular("multiplier needs a regular graph")
    d = degs.pop()
    if d % 2:
        raise OddDegree(f"degree {d} is odd")
    if d == 0:
        raise NotRegular("multiplier needs positive degree")
    r = d // 2
    es = list(g.edges)
    nxt = g.order
    for v in range(g.order):
        for _ in range(r):
            cyc = [v] + list(range(nxt, nxt + k - 1)) + [v]
            es += list(zip(cyc, cyc[1:]))
            nxt += k - 1
    return Graph(nxt, es)


def multiplier_premise(g: Graph, k: int) -> bool:
    """Whether the input meets the sufficient conditions for a nut output."""
    if not g.is_connected():
        return False
    if k % 4 == 3:
        return True
    return k % 4 == 1 and g.is_bipartite()


def multiplier_group_order(g: Graph, k: int, aut_order: int) -> int:
    """|Aut(M_k(g))| predicted from |Aut(g)|: ``(2^t t!)^n * |Aut(g)|``."""
    t = g.degree(0) // 2
    fact = 1
    for i in range(2, t + 1):
        fact *= i
    return (2 ** t * fact) ** g.order * aut_order


# edge-orbit constructions -----------------------------------------------------

def _require_nut(g: Graph) -> None:
    if not is_nut(g):
        raise NotNut("construction needs a nut graph")


def _full_edge_orbit(g: Graph, chosen: Iterable[Sequence[int]], a: AutGroup | None) -> list[Edge]:
    es = sorted({edge(*e) for e in chosen})
    if not es:
        raise NotFullOrbit("empty edge set")
    for e in es:
        if not g.has_edge(*e):
            raise NotFullOrbit(f"{e} is not an edge")
    a = a or automorphism_group(g)
    part, _ = orbits(g, a)
    for orb in part.edge_orbits:
        if es[0] in orb:
            if sorted(orb) != es:
                raise NotFullOrbit("edges do not form a single full edge orbit")
            return es
    raise AssertionError("edge missing from orbit partition")


def _insert_on_edges(g: Graph, es: list[Edge], k: int) -> Graph:
    """Put ``k`` new vertices on each edge, edges in ascending order, running
    from the smaller endpoint to the larger."""
    drop = set(es)
    new = [e for e in g.edges if e not in drop]
    nxt = g.order
    for u, v in es:
        path = [u] + list(range(nxt, nxt + k)) + [v]
        new += list(zip(path, path[1:]))
        nxt += k
    return Graph(nxt, new)


def bridge_construction(g: Graph, orbit: Iterable[Sequence[int]], a: AutGroup | None = None) -> Graph:
    """Insert two vertices on every bridge of a full edge orbit."""
    _require_nut(g)
    es = sorted({edge(*e) for e in orbit})
    for u, v in es:
        if g.has_edge(u, v) and not g.is_bridge(u, v):
            raise NotBridge(f"({u}, {v}) is not a bridge")
    es = _full_edge_orbit(g, es, a)
    return _insert_on_edges(g, es, 2)


def subdivision_construction(g: Graph, orbit: Iterable[Sequence[int]], a: AutGroup | None = None) -> Graph:
    """Insert four vertices on every edge of a full edge orbit."""
    _require_nut(g)
    es = _full_edge_orbit(g, orbit, a)
    return _insert_on_edges(g, es, 4)


# Fowler -----------------------------------------------------------------------

@dataclass(frozen=True)
class FowlerGadget:
    """Labels created for one expanded vertex ``v``."""

    v: int
    u: tuple[int, ...]  # original neighbours, ascending
    w: tuple[int, ...]
    x: tuple[int, ...]


def fowler_gadgets(g: Graph, orbit: Iterable[int]) -> tuple[Graph, list[FowlerGadget]]:
    """Fowler expansion at every vertex of ``orbit``, applied simultaneously.

    For each orbit vertex ``v`` (ascending) with neighbours ``u_1 < ... < u_d``
    the labels ``w_1..w_d`` then ``x_1..x_d`` are appended. ``v`` loses its
    edges and gains ``w_i - v``, ``x_i - w_j`` (``i != j``) and ``x_i - u_i``.
    When ``u_i`` is itself expanded, the old edge ``v u_i`` becomes an edge
    between the two corresponding ``x`` vertices. This is what applying the
    single-vertex expansion one vertex at a time produces.
    """
    vs = sorted(set(orbit))
    for v in vs:
        if not 0 <= v < g.order:
            raise IndexOutOfRange(f"vertex {v} outside 0..{g.order - 1}")
    expanded = set(vs)
    nxt = g.order
    gadgets = []
    for v in vs:
        nb = tuple(g.neighbors(v))
        d = len(nb)
        w = tuple(range(nxt, nxt + d))
        x = tuple(range(nxt + d, nxt + 2 * d))
        nxt += 2 * d
        gadgets.append(FowlerGadget(v, nb, w, x))
    xs = {(gd.v, u): xi for gd in gadgets for u, xi in zip(gd.u, gd.x)}
    es = [e for e in g.edges if e[0] not in expanded and e[1] not in expanded]
    for gd in gadgets:
        d = len(gd.u)
        es += [(gd.v, wi) for wi in gd.w]
        es += [(gd.x[i], gd.w[j]) for i in range(d) for j in range(d) if i != j]
        for u, xi in zip(gd.u, gd.x):
            if u in expanded:
                if gd.v < u:
                    es.append((xi, xs[(u, gd.v)]))
            else:
                es.append((xi, u))
    return Graph(nxt, es), gadgets


def fowler(g: Graph, orbit: Iterable[int], a: AutGroup | None = None) -> Graph:
    """Fowler construction on a full vertex orbit of a nut graph."""
    _require_nut(g)
    vs = sorted(set(orbit))
    if not vs:
        raise NotFullOrbit("empty vertex set")
    a = a or automorphism_group(g)
    part, _ = orbits(g, a)
    full = next(o for o in part.vertex_orbits if vs[0] in o)
    if list(full) != vs:
        raise NotFullOrbit("vertices do not form a single full vertex orbit")
    return fowler_gadgets(g, vs)[0]


# coalescence --------------------------------------------------------------------

def coalesce_triangle_pentagon(g: Graph, v: int) -> Graph:
    """Hang a triangle and a pentagon on ``v``.

    Triangle vertices are ``n, n+1``; the pentagon is
    ``v - n+2 - n+3 - n+4 - n+5 - v``.
    """
    if not 0 <= v < g.order:
        raise IndexOutOfRange(f"vertex {v} outside 0..{g.order - 1}")
    n = g.order
    es = list(g.edges)
    es += [(v, n), (v, n + 1), (n, n + 1)]
    ring = [v, n + 2, n + 3, n + 4, n + 5, v]
    es += list(zip(ring, ring[1:]))
    return Graph(n + 6, es)


# two-orbit nut graphs -------------------------------------------------------------

def smallest_prime_factor(n: int) -> int:
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n


def two_orbit_nut(n: int) -> Graph:
    """A nut graph of composite order ``n >= 9`` with two vertex orbits.

    Even ``n`` not divisible by 3 gives R_{n/2}(1, 2); multiples of 3 give
    T_{n/3}; the remaining odd ``n`` with smallest prime factor ``p`` give
    M_3(Circ(n/p, {1, .., (p-1)/2})).
    """
    if n >= 2 and smallest_prime_factor(n) == n:
        raise PrimeOrder(f"{n} is prime; no two-orbit nut graph exists")
    if n < 9:
        raise OrderTooSmall("two-orbit nut graphs need order at least 9")
    if n % 2 == 0 and n % 3:
        return rose_window(n // 2, 1, 2)
    if n % 3 == 0:
        return triangle_cycle(n // 3)
    p = smallest_prime_factor(n)
    m = n // p
    k = (p - 1) // 2
    assert k >= 1 and m >= 2 * k + 1, (n, p)
    return multiplier(circulant(m, range(1, k + 1)), 3)
