"""Simple undirected graphs, structural primitives and the graph6 codec.

Vertices are the integers ``0 .. order-1``. Every construction in this
module documents how it numbers the vertices it creates so that outputs are
reproducible byte for byte.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import (
    ByteOutOfRange,
    EdgeNotPresent,
    IndexOutOfRange,
    NonzeroPadding,
    OrderOverflow,
    TrailingBytes,
    TruncatedPayload,
    UnsupportedFormat,
)

Edge = tuple[int, int]

GRAPH6_HEADER = b">>graph6<<"
MAX_ORDER = (1 << 36) - 1


def edge(u: int, v: int) -> Edge:
    """Return the canonical (smaller endpoint first) form of the edge ``uv``."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices ``0 .. order-1``.

    Adjacency is held twice: as a sorted tuple of canonical edges and as one
    integer bitset per vertex. Both are built together in the constructor and
    cannot drift apart.
    """

    __slots__ = ("_order", "_edges", "_rows", "_hash")

    def __init__(self, order: int, edges: Iterable[Sequence[int]] = ()) -> None:
        if order < 0:
            raise ValueError("order must be non-negative")
        rows = [0] * order
        canon = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < order and 0 <= v < order):
                raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{order - 1}")
            canon.add(edge(u, v))
        for u, v in canon:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._order = order
        self._edges = tuple(sorted(canon))
        self._rows = tuple(rows)
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build a graph from symmetric adjacency bitsets."""
        n = len(rows)
        es = []
        for u, r in enumerate(rows):
            r >>= u + 1
            v = u + 1
            while r:
                if r & 1:
                    es.append((u, v))
                r >>= 1
                v += 1
        return cls(n, es)

    # basic accessors

    @property
    def order(self) -> int:
        return self._order

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Canonical edges in lexicographic order."""
        return self._edges

    @property
    def size(self) -> int:
        return len(self._edges)

    @property
    def rows(self) -> tuple[int, ...]:
        """Adjacency bitsets; bit ``j`` of ``rows[i]`` is set iff ``i ~ j``."""
        return self._rows

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return _bits(self._rows[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def vertices(self) -> range:
        return range(self._order)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._order:
            raise IndexOutOfRange(f"vertex {v} outside 0..{self._order - 1}")

    # predicates

    def is_connected(self) -> bool:
        n = self._order
        if n == 0:
            return True
        full = (1 << n) - 1
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self._rows[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == full

    def components(self) -> list[list[int]]:
        seen = [False] * self._order
        out = []
        for s in range(self._order):
            if seen[s]:
                continue
            comp = []
            queue = deque([s])
            seen[s] = True
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in _bits(self._rows[v]):
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
            out.append(sorted(comp))
        return out

    def is_bipartite(self) -> bool:
        color = [-1] * self._order
        for s in range(self._order):
            if color[s] >= 0:
                continue
            color[s] = 0
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for w in _bits(self._rows[v]):
                    if color[w] < 0:
                        color[w] = 1 - color[v]
                        queue.append(w)
                    elif color[w] == color[v]:
                        return False
        return True

    def is_regular(self) -> bool:
        degs = set(self.degrees())
        return len(degs) <= 1

    def is_bridge(self, u: int, v: int) -> bool:
        """True iff ``uv`` is an edge whose removal disconnects its endpoints."""
        if not self.has_edge(u, v):
            raise EdgeNotPresent(f"({u}, {v}) is not an edge")
        rows = list(self._rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        seen = 1 << u
        frontier = seen
        while frontier:
            nxt = 0
            for x in _bits(frontier):
                nxt |= rows[x]
            frontier = nxt & ~seen
            seen |= nxt
            if seen >> v & 1:
                return False
        return True

    # transformations

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``i`` renamed ``perm[i]``."""
        if sorted(perm) != list(range(self._order)):
            raise ValueError("relabelling must be a permutation of the vertices")
        return Graph(self._order, ((perm[u], perm[v]) for u, v in self._edges))

    def add_edges(self, extra: Iterable[Sequence[int]]) -> "Graph":
        return Graph(self._order, list(self._edges) + [tuple(e) for e in extra])

    # dunder

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._order, self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, size={len(self._edges)})"

    def __iter__(self) -> Iterator[int]:
        return iter(range(self._order))

    def __len__(self) -> int:
        return self._order


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


# graph6 ---------------------------------------------------------------------

def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 line.

    The optional ``>>graph6<<`` header and surrounding whitespace are
    accepted. sparse6 and digraph6 inputs are rejected with
    :class:`UnsupportedFormat`.
    """
    data = text.encode("ascii", "replace") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    elif data.startswith(b">>sparse6<<") or data.startswith(b":"):
        raise UnsupportedFormat("sparse6 input detected (header ':' / '>>sparse6<<'); only graph6 is supported")
    elif data.startswith(b">>digraph6<<") or data.startswith(b"&"):
        raise UnsupportedFormat("digraph6 input detected (header '&' / '>>digraph6<<'); only graph6 is supported")
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ByteOutOfRange(f"byte {b} at offset {i} outside 63..126")
    if not data:
        raise TruncatedPayload("empty graph6 string")

    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise TruncatedPayload("incomplete 36-bit order field")
        n, pos = _read_sixbits(data[2:8]), 8
    else:
        if len(data) < 4:
            raise TruncatedPayload("incomplete 18-bit order field")
        n, pos = _read_sixbits(data[1:4]), 4

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = data[pos:]
    if len(payload) < nbytes:
        raise TruncatedPayload(f"need {nbytes} payload bytes for order {n}, got {len(payload)}")
    if len(payload) > nbytes:
        raise TrailingBytes(f"{len(payload) - nbytes} unexpected bytes after the adjacency payload")

    value = 0
    for b in payload:
        value = (value << 6) | (b - 63)
    pad = nbytes * 6 - nbits
    if value & ((1 << pad) - 1):
        raise NonzeroPadding("padding bits must be zero")
    value >>= pad

    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                edges.append((i, j))
            k -= 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> bytes:
    """Encode ``g`` as graph6 (no header, no trailing newline)."""
    n = g.order
    if n > MAX_ORDER:
        raise OrderOverflow(f"order {n} exceeds the 36-bit encoding")
    if n <= 62:
        out = bytearray([n + 63])
    elif n <= 258047:
        out = bytearray([126]) + _write_sixbits(n, 3)
    else:
        out = bytearray([126, 126]) + _write_sixbits(n, 6)

    rows = g.rows
    bits = []
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            bits.append(rj >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        b = bits[k:k + 6]
        out.append(63 + (b[0] << 5 | b[1] << 4 | b[2] << 3 | b[3] << 2 | b[4] << 1 | b[5]))
    return bytes(out)


def _read_sixbits(chunk: bytes) -> int:
    v = 0
    for b in chunk:
        v = (v << 6) | (b - 63)
    return v


def _write_sixbits(value: int, count: int) -> bytearray:
    return bytearray(63 + ((value >> (6 * (count - 1 - i))) & 63) for i in range(count))


# structural primitives ------------------------------------------------------

def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex ``(a, x)`` gets label ``a * h.order + x``."""
    if g.order == 0 or h.order == 0:
        raise ValueError("cartesian product needs two nonempty graphs")
    m = h.order
    es = []
    for a, b in g.edges:
        for x in range(m):
            es.append((a * m + x, b * m + x))
    for a in range(g.order):
        for x, y in h.edges:
            es.append((a * m + x, a * m + y))
    return Graph(g.order * m, es)


def fuse_at(g: Graph, v: int, h: Graph, w: int) -> Graph:
    """One-point coalescence of ``g`` and ``h`` identifying ``v`` with ``w``.

    ``g`` keeps its labels, ``w`` becomes ``v`` and the remaining vertices of
    ``h`` follow ``g``'s in ascending order.
    """
    if not 0 <= v < g.order:
        raise IndexOutOfRange(f"vertex {v} not in first graph")
    if not 0 <= w < h.order:
        raise IndexOutOfRange(f"vertex {w} not in second graph")
    base = g.order
    mapping = {}
    nxt = base
    for x in range(h.order):
        if x == w:
            mapping[x] = v
        else:
            mapping[x] = nxt
            nxt += 1
    es = list(g.edges) + [(mapping[a], mapping[b]) for a, b in h.edges]
    return Graph(g.order + h.order - 1, es)


def subdivide_edge(g: Graph, e: Sequence[int], k: int) -> Graph:
    """Replace edge ``e`` by a path through ``k`` new vertices.

    New vertices get labels ``order .. order+k-1`` running from the smaller
    endpoint towards the larger one.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    u, v = edge(*e)
    if not g.has_edge(u, v):
        raise EdgeNotPresent(f"({u}, {v}) is not an edge")
    n = g.order
    path = [u] + list(range(n, n + k)) + [v]
    es = [x for x in g.edges if x != (u, v)]
    es += list(zip(path, path[1:]))
    return Graph(n + k, es)
