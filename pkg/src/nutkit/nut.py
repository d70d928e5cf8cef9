"""Nullity, nut/core classification and kernel-sign edge signatures.

Policy note: the one-vertex graph K1 has nullity 1 and a full kernel vector,
but it is treated as the trivial case and classified as neither nut nor
core. Other software may differ here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotFullVector
from .graph import Edge, Graph
from .linalg import adjacency_matrix, kernel_basis, primitive

KernelVector = tuple[int, ...]


@dataclass(frozen=True)
class NullityReport:
    eta: int
    basis: tuple[KernelVector, ...]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a classification, truthy iff it holds."""

    holds: bool
    witness: KernelVector | None = None

    def __bool__(self) -> bool:
        return self.holds


def nullity(g: Graph) -> NullityReport:
    basis = kernel_basis(adjacency_matrix(g))
    return NullityReport(len(basis), tuple(basis))


def is_nut(g: Graph, report: NullityReport | None = None) -> Verdict:
    """Nullity one with an everywhere-nonzero kernel vector (K1 excluded)."""
    if g.order <= 1:
        return Verdict(False)
    report = report or nullity(g)
    if report.eta != 1:
        return Verdict(False)
    x = report.basis[0]
    if all(x):
        return Verdict(True, x)
    return Verdict(False)


def is_core(g: Graph, report: NullityReport | None = None) -> Verdict:
    """Some kernel vector has no zero entry (K1 excluded).

    The witness combines the basis as ``w <- lam * w + b`` with the smallest
    positive integer ``lam`` that cancels no coordinate already nonzero.
    """
    if g.order <= 1:
        return Verdict(False)
    report = report or nullity(g)
    if report.eta == 0:
        return Verdict(False)
    w = list(report.basis[0])
    for b in report.basis[1:]:
        forbidden = set()
        for wi, bi in zip(w, b):
            if wi and bi:
                lam = Fraction(-bi, wi)
                if lam.denominator == 1 and lam > 0:
                    forbidden.add(int(lam))
        lam = 1
        while lam in forbidden:
            lam += 1
        w = [lam * wi + bi for wi, bi in zip(w, b)]
    if all(w):
        return Verdict(True, primitive(w))
    return Verdict(False)


def satisfies_local_condition(g: Graph, x: Sequence[int]) -> bool:
    """At every vertex the neighbour entries of ``x`` sum to zero."""
    return all(sum(x[u] for u in g.neighbors(v)) == 0 for v in g.vertices())


@dataclass(frozen=True)
class EdgeSignature:
    signs: tuple[str, str]  # signs at (smaller, larger) endpoint
    like: bool


@dataclass(frozen=True)
class EdgeSignatureTable:
    signatures: dict[Edge, EdgeSignature]

    @property
    def like(self) -> list[Edge]:
        return [e for e, s in self.signatures.items() if s.like]

    @property
    def unlike(self) -> list[Edge]:
        return [e for e, s in self.signatures.items() if not s.like]

    def __getitem__(self, e: Edge) -> EdgeSignature:
        return self.signatures[e]


def edge_signatures(g: Graph, x: Sequence[int]) -> EdgeSignatureTable:
    """Tag each edge by the signs of its endpoint kernel entries."""
    if len(x) != g.order or not all(x):
        raise NotFullVector("edge signatures need a full kernel vector")
    if not satisfies_local_condition(g, x):
        raise NotFullVector("vector is not in the kernel of the adjacency matrix")
    table = {}
    for u, v in g.edges:
        su = "+" if x[u] > 0 else "-"
        sv = "+" if x[v] > 0 else "-"
        table[(u, v)] = EdgeSignature((su, sv), su == sv)
    return EdgeSignatureTable(table)
