"""The signed Bollobás–Riordan polynomial and its specializations.

Everything here is a pure state sum over the 2^e spanning subgraphs: a
spanning subgraph keeps every circle and a subset of the edges, and each
one contributes the monomial

    x^(r(G) - r(F) + s(F)) * y^(n(F) - s(F)) * z^(k(F) - f(F) + n(F))

where s(F) is half the difference between the negative-edge counts of F
and of its complement.  The half-integer bookkeeping lives in the doubled
exponent keys of the polynomial ring.

No deletion-contraction recursion is used to produce values; the various
reduction identities are exercised by the test suite instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import TooManyEdges
from .polynomial import RING_XY, RING_XYZ, Laurent, restrict_duality_surface
from .ribbon import SignedRibbonGraph, stats

__all__ = [
    "SubgraphStats",
    "subgraph_stats",
    "bollobas_riordan",
    "tutte_via_br",
    "duality_invariant",
    "BR_MAX_EDGES",
]

BR_MAX_EDGES = 24


@dataclass(frozen=True)
class SubgraphStats:
    """Profile of one spanning subgraph.

    ``s2`` is twice the sign correction s(F), always an integer:
    the count of negative edges inside F minus the count outside.
    """

    k: int
    r: int
    n: int
    f: int
    s2: int


class _SubsetEngine:
    """Shared precomputation for sweeping all spanning subgraphs.

    Corner ids follow the convention of :mod:`ribbongraphs.ribbon`
    (2i and 2i+1 for the tail and head of global occurrence i), but
    only the corners of subset edges take part in a given sweep.
    """

    def __init__(self, g: SignedRibbonGraph):
        self.v = g.num_vertices
        self.labels = g.edge_labels
        index = {l: i for i, l in enumerate(self.labels)}
        self.neg_mask = 0
        for l, i in index.items():
            if g.signs[l] < 0:
                self.neg_mask |= 1 << i
        self.neg_total = bin(self.neg_mask).count("1")
        # per circle: (global occurrence index, edge index, against)
        self.circle_occs: list[list[tuple[int, int, bool]]] = []
        self.edge_ends: list[list[int]] = [[] for _ in self.labels]
        self.occ_circle: dict[int, int] = {}
        i = 0
        for ci, circle in enumerate(g.circles):
            row = []
            for occ in circle:
                ei = index[occ.label]
                row.append((i, ei, occ.against))
                self.edge_ends[ei].append(i)
                self.occ_circle[i] = ci
                i += 1
            self.circle_occs.append(row)
        self.total_occs = i

    def sweep(self, mask: int) -> SubgraphStats:
        """Stats of the spanning subgraph selected by ``mask`` bits."""
        e_f = bin(mask).count("1")
        s2 = 2 * bin(mask & self.neg_mask).count("1") - self.neg_total

        parent = list(range(self.v))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        link: dict[int, int] = {}
        empty_circles = 0
        for ci, row in enumerate(self.circle_occs):
            sel = [t for t in row if mask >> t[1] & 1]
            if not sel:
                empty_circles += 1
                continue
            m = len(sel)
            for which, (gi, _, against) in enumerate(sel):
                gj, _, against_j = sel[(which + 1) % m]
                src = 2 * gi + (0 if against else 1)
                dst = 2 * gj + (1 if against_j else 0)
                link[src] = dst
                link[dst] = src
        for ei, ends in enumerate(self.edge_ends):
            if mask >> ei & 1:
                ra = find(self.occ_circle[ends[0]])
                rb = find(self.occ_circle[ends[1]])
                if ra != rb:
                    parent[ra] = rb
        k_f = len({find(ci) for ci in range(self.v)})

        # boundary cycles: arcs in `link`, sides from edge ends
        side: dict[int, int] = {}
        for ei, ends in enumerate(self.edge_ends):
            if mask >> ei & 1:
                i1, i2 = ends
                side[2 * i1 + 1] = 2 * i2
                side[2 * i2] = 2 * i1 + 1
                side[2 * i2 + 1] = 2 * i1
                side[2 * i1] = 2 * i2 + 1
        cycles = 0
        seen: set[int] = set()
        for start in link:
            if start in seen:
                continue
            cycles += 1
            at = start
            use_arc = True
            while True:
                seen.add(at)
                at = link[at] if use_arc else side[at]
                use_arc = not use_arc
                if at == start:
                    break
        r_f = self.v - k_f
        return SubgraphStats(
            k=k_f, r=r_f, n=e_f - r_f, f=cycles + empty_circles, s2=s2
        )


def subgraph_stats(g: SignedRibbonGraph, subset: Iterable[str]) -> SubgraphStats:
    """Stats of the spanning subgraph keeping only ``subset`` edges."""
    engine = _SubsetEngine(g)
    index = {l: i for i, l in enumerate(engine.labels)}
    mask = 0
    for l in subset:
        mask |= 1 << index[l]
    return engine.sweep(mask)


def bollobas_riordan(
    g: SignedRibbonGraph, max_edges: int = BR_MAX_EDGES
) -> Laurent:
    """The signed three-variable polynomial of ``g`` by state sum.

    Raises:
        TooManyEdges: more than ``max_edges`` edges.
    """
    if g.num_edges > max_edges:
        raise TooManyEdges(
            f"{g.num_edges} edges exceed the state-sum guard of {max_edges}"
        )
    engine = _SubsetEngine(g)
    g_stats = stats(g)
    terms: dict[tuple[int, int, int], int] = {}
    for mask in range(1 << g.num_edges):
        st = engine.sweep(mask)
        key = (
            2 * (g_stats.r - st.r) + st.s2,
            2 * st.n - st.s2,
            st.k - st.f + st.n,
        )
        terms[key] = terms.get(key, 0) + 1
    return Laurent(RING_XYZ, terms)


def tutte_via_br(g: SignedRibbonGraph, max_edges: int = BR_MAX_EDGES) -> Laurent:
    """Tutte polynomial of the underlying signed graph: R(x-1, y-1, 1).

    Only meaningful when the shifted substitution stays polynomial; for
    graphs whose sign pattern produces half-integer or negative powers
    of x or y the underlying exceptions propagate.
    """
    p = bollobas_riordan(g, max_edges)
    one = Laurent.const(RING_XYZ, 1)
    p = p.substitute("z", one)
    x = Laurent.monomial(RING_XYZ, (2, 0, 0))
    y = Laurent.monomial(RING_XYZ, (0, 2, 0))
    p = p.substitute("x", x - 1)
    p = p.substitute("y", y - 1)
    return p.project(RING_XY, (0, 1))


def duality_invariant(
    g: SignedRibbonGraph, max_edges: int = BR_MAX_EDGES
) -> Laurent:
    """The duality-stable transform: restrict x^k y^v z^(v+1) R to xyz²=1.

    Partial duals of ``g`` with respect to any edge subset share this
    two-variable polynomial.
    """
    st = stats(g)
    prefactor = Laurent.monomial(
        RING_XYZ, (2 * st.k, 2 * st.v, st.v + 1)
    )
    return restrict_duality_surface(prefactor * bollobas_riordan(g, max_edges))
