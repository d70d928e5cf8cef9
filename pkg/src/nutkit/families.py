"""Named graph families and fixed sporadic graphs.

Vertex numbering for each family is part of its contract; the docstrings
state it so that graph6 output stays stable across releases.
"""

from __future__ import annotations

from typing import Iterable

from .errors import DegenerateParameters, InvalidConnectionSet, ParameterTooSmall, UnknownName
from .graph import Graph, cartesian_product


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterTooSmall(msg)


def circulant(n: int, connection_set: Iterable[int]) -> Graph:
    """Circ(n, S): ``i ~ j`` iff the cyclic distance of ``i`` and ``j`` is in S."""
    S = sorted(set(int(s) for s in connection_set))
    if n < 3:
        raise InvalidConnectionSet("circulant order must be at least 3")
    for s in S:
        if not 1 <= s <= n // 2:
            raise InvalidConnectionSet(f"connection {s} outside 1..{n // 2}")
    return Graph(n, [(i, (i + s) % n) for i in range(n) for s in S])


def antiprism(ell: int) -> Graph:
    """Antiprism on 2*ell vertices, labelled as Circ(2*ell, {1, 2})."""
    _need(ell >= 3, "antiprism needs ell >= 3")
    return circulant(2 * ell, [1, 2])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path with ``n`` vertices ``0 - 1 - ... - n-1``."""
    _need(n >= 1, "path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def hypercube(d: int) -> Graph:
    """Q_d; vertices are the integers whose bits are the coordinates."""
    _need(d >= 1, "hypercube needs d >= 1")
    n = 1 << d
    return Graph(n, [(i, i ^ (1 << k)) for i in range(n) for k in range(d) if not i >> k & 1])


def complete_bipartite(m: int) -> Graph:
    """K_{m,m} with sides ``0..m-1`` and ``m..2m-1``."""
    _need(m >= 1, "complete bipartite graph needs m >= 1")
    return Graph(2 * m, [(i, m + j) for i in range(m) for j in range(m)])


def c3_cart_cycle(ell: int) -> Graph:
    """C3 x C_ell (cartesian); vertex ``(i, j)`` is ``i * ell + j``."""
    _need(ell >= 3, "c3_cart_cycle needs ell >= 3")
    return cartesian_product(cycle(3), cycle(ell))


def c3_twist_cycle(ell: int) -> Graph:
    """C3 x C_ell with the first two layers joined by a rotation.

    Same labels as :func:`c3_cart_cycle`. Edges ``(i,0)-(i,1)`` are replaced
    by ``(i,0)-(i+1 mod 3, 1)``.
    """
    _need(ell >= 3, "c3_twist_cycle needs ell >= 3")
    base = c3_cart_cycle(ell)
    drop = {(i * ell, i * ell + 1) for i in range(3)}
    es = [e for e in base.edges if e not in drop]
    es += [(i * ell, ((i + 1) % 3) * ell + 1) for i in range(3)]
    return Graph(3 * ell, es)


def triangle_cycle(n: int) -> Graph:
    """T_n: a triangle hung on every vertex of C_n.

    Cycle vertices are ``0..n-1``; the two extra triangle vertices at cycle
    vertex ``i`` are ``n + 2i`` and ``n + 2i + 1``.
    """
    _need(n >= 3, "triangle_cycle needs n >= 3")
    es = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        a, b = n + 2 * i, n + 2 * i + 1
        es += [(i, a), (i, b), (a, b)]
    return Graph(3 * n, es)


def rose_window(n: int, a: int, r: int) -> Graph:
    """R_n(a, r); ``v_i`` is vertex ``i`` and ``u_i`` is vertex ``n + i``.

    Edges: ``v_i v_{i+1}``, ``u_i u_{i+r}``, ``u_i v_i``, ``u_i v_{i+a}``.
    Parameter choices that would merge or drop edges are rejected.
    """
    if n < 3:
        raise DegenerateParameters("rose window needs n >= 3")
    if not (1 <= a < n and 1 <= r < n):
        raise DegenerateParameters("need 1 <= a, r < n")
    if 2 * r % n == 0:
        raise DegenerateParameters("r = n/2 collapses the inner cycle to a matching")
    es = []
    for i in range(n):
        es.append((i, (i + 1) % n))
        es.append((n + i, n + (i + r) % n))
        es.append((n + i, i))
        es.append((n + i, (i + a) % n))
    g = Graph(2 * n, es)
    if g.size != 4 * n:
        raise DegenerateParameters("parameters produce parallel edges")
    return g


def _tetracirculant16() -> Graph:
    u, v, w, z = (lambda i: i % 4), (lambda i: 4 + i % 4), (lambda i: 8 + i % 4), (lambda i: 12 + i % 4)
    es = []
    for i in range(4):
        es += [(u(i), v(i)), (v(i), w(i)), (u(i), z(i)), (u(i), u(i + 1)), (v(i), v(i + 1)),
               (z(i), w(i + 1)), (z(i), w(i + 2)), (z(i), w(i + 3))]
    return Graph(16, es)


def _ncvt30() -> Graph:
    u, v = (lambda i: i % 15), (lambda i: 15 + i % 15)
    es = []
    for i in range(15):
        es += [(u(i), v(i)), (u(i), v(i + 5)), (v(i), v(i + 3)), (u(i), u(i + 6))]
    return Graph(30, es)


def _grr12() -> Graph:
    u, v, w = (lambda i: i), (lambda i: 4 + i), (lambda i: 8 + i)
    es = []
    for f in (u, v, w):
        es += [(f(i), f(j)) for i in range(4) for j in range(i + 1, 4)]
    cross = [(v(0), u(2)), (v(1), u(3)), (v(2), u(0)), (v(2), u(2)), (v(3), u(1)), (v(3), u(3)),
             (u(3), w(2)), (u(2), w(3)), (u(1), w(0)), (u(1), w(2)), (u(0), w(1)), (u(0), w(3)),
             (v(3), w(1)), (v(2), w(0)), (v(1), w(3)), (v(1), w(1)), (v(0), w(2)), (v(0), w(0))]
    return Graph(12, es + cross)


def _phi5_d3() -> Graph:
    pairs = "03 05 06 14 15 17 24 26 27 36 37 45 46 47 67".split()
    return Graph(8, [(int(p[0]), int(p[1])) for p in pairs])


SPORADIC = {
    "tetracirculant16": _tetracirculant16,
    "ncvt30": _ncvt30,
    "grr12": _grr12,
    "phi5_d3": _phi5_d3,
}

# distinguished vertex used with the Fowler construction
PHI5_VERTEX = 2


def sporadic(name: str) -> Graph:
    """Fixed graphs: tetracirculant16, ncvt30, grr12 and phi5_d3.

    tetracirculant16 labels ``u_i, v_i, w_i, z_i`` as ``i, 4+i, 8+i, 12+i``;
    ncvt30 labels ``u_i, v_i`` as ``i, 15+i``; grr12 labels ``u_i, v_i, w_i``
    as ``i, 4+i, 8+i``.
    """
    try:
        return SPORADIC[name]()
    except KeyError:
        raise UnknownName(f"unknown sporadic graph {name!r}; choose from {sorted(SPORADIC)}") from None


STANDARD = {
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "hypercube": hypercube,
    "complete_bipartite": complete_bipartite,
}


def standard(name: str, param: int) -> Graph:
    try:
        maker = STANDARD[name]
    except KeyError:
        raise UnknownName(f"unknown standard family {name!r}; choose from {sorted(STANDARD)}") from None
    return maker(param)
