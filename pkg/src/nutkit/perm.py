"""Permutations, union-find orbits and a deterministic Schreier-Sims chain.

A permutation is a tuple ``p`` with ``p[x]`` the image of ``x``. Products
are written left to right: ``compose(p, q)`` applies ``p`` first, then ``q``.
"""

from __future__ import annotations

from math import prod
from typing import Iterable, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(map(q.__getitem__, p))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


_IDENTITIES: dict[int, Perm] = {}


def is_identity(p: Perm) -> bool:
    n = len(p)
    e = _IDENTITIES.get(n)
    if e is None:
        e = _IDENTITIES[n] = identity(n)
    return p == e


class UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        # smaller root wins so class representatives are class minima
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    def classes(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return sorted(groups.values())


def orbit_partition(n: int, gens: Iterable[Perm]) -> list[list[int]]:
    """Orbits of the group generated by ``gens`` on ``0..n-1``, sorted."""
    uf = UnionFind(n)
    for g in gens:
        for x, y in enumerate(g):
            uf.union(x, y)
    return uf.classes()


def _orbit(point: int, gens: Sequence[Perm]) -> list[int]:
    seen = {point}
    out = [point]
    for x in out:
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                out.append(y)
    return out


class StabilizerChain:
    """Base and strong generating set for a permutation group.

    Built by the deterministic Schreier-Sims algorithm. ``base_prefix`` forces
    the first base points, which is how point stabilizers are read off: the
    strong generators fixing ``base[0]`` generate the stabilizer of that
    point. Further base points are chosen greedily as the point, among those
    moved by the new generator, with the largest orbit.
    """

    def __init__(self, degree: int, generators: Iterable[Perm], base_prefix: Sequence[int] = ()) -> None:
        self.degree = degree
        self.base: list[int] = list(base_prefix)
        self.strong: list[Perm] = []
        self._level_gens: list[list[Perm]] = []
        self._transversals: list[dict[int, Perm]] = []
        self._inverses: list[dict[int, Perm]] = []
        gens = [tuple(g) for g in generators]
        for g in gens:
            if len(g) != degree:
                raise ValueError("generator degree mismatch")
        self._build([g for g in gens if not is_identity(g)])

    # construction

    def _extend_base(self, g: Perm) -> None:
        moved = [x for x in range(self.degree) if g[x] != x]
        pool = self.strong + [g]
        fixing = [h for h in pool if all(h[b] == b for b in self.base)]
        best = max(moved, key=lambda x: (len(_orbit(x, fixing)), -x))
        self.base.append(best)

    def _recompute(self, level: int) -> None:
        prefix = self.base[:level]
        gens = [s for s in self.strong if all(s[b] == b for b in prefix)]
        b = self.base[level]
        table = {b: identity(self.degree)}
        queue = [b]
        for x in queue:
            ux = table[x]
            for s in gens:
                y = s[x]
                if y not in table:
                    table[y] = compose(ux, s)
                    queue.append(y)
        while len(self._level_gens) <= level:
            self._level_gens.append([])
            self._transversals.append({})
            self._inverses.append({})
        self._level_gens[level] = gens
        self._transversals[level] = table
        self._inverses[level] = {x: inverse(u) for x, u in table.items()}

    def strip(self, g: Perm) -> tuple[Perm, int]:
        """Sift ``g`` through the chain; return the residue and the level reached."""
        for i, b in enumerate(self.base):
            u_inv = self._inverses[i].get(g[b])
            if u_inv is None:
                return g, i
            g = compose(g, u_inv)
        return g, len(self.base)

    def _build(self, gens: list[Perm]) -> None:
        for g in gens:
            if all(g[b] == b for b in self.base):
                self._extend_base(g)
        self.strong = list(gens)
        for i in range(len(self.base)):
            self._recompute(i)
        i = len(self.base) - 1
        while i >= 0:
            restart = self._scan_level(i)
            i = restart if restart is not None else i - 1

    def _scan_level(self, i: int) -> int | None:
        table = self._transversals[i]
        inverses = self._inverses[i]
        for x, ux in list(table.items()):
            for s in self._level_gens[i]:
                h = compose(compose(ux, s), inverses[s[x]])
                if is_identity(h):
                    continue
                res, j = self.strip(h)
                if j == len(self.base) and is_identity(res):
                    continue
                if j == len(self.base):
                    self._extend_base(res)
                self.strong.append(res)
                for level in range(i + 1, j + 1):
                    self._recompute(level)
                return j
        return None

    # queries

    def order(self) -> int:
        return prod(len(t) for t in self._transversals)

    def contains(self, g: Sequence[int]) -> bool:
        res, j = self.strip(tuple(g))
        return j == len(self.base) and is_identity(res)

    def basic_orbit(self, level: int) -> list[int]:
        return sorted(self._transversals[level])

    def transversal_element(self, level: int, point: int) -> Perm | None:
        """An element of the level's stabilizer sending its base point to ``point``."""
        return self._transversals[level].get(point)

    def stabilizer_generators(self, level: int = 1) -> list[Perm]:
        """Strong generators fixing ``base[:level]`` pointwise."""
        prefix = self.base[:level]
        return [s for s in self.strong if all(s[b] == b for b in prefix)]
