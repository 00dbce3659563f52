"""Signed ribbon graphs as arrow presentations.

A ribbon graph is stored as a list of circles (the vertex discs), each
carrying a cyclic sequence of labeled arrow occurrences.  Every edge label
occurs exactly twice across all circles; gluing a band between the two
arrows of each label, guided by the arrow directions, rebuilds the surface.
A sign function on edge labels rides along.

An occurrence records its arrow direction relative to the listed traversal
order of its circle: Along means the arrow agrees with the listing, Against
means it opposes it.  Two presentations describe the same ribbon graph when
they differ by relabeling, circle permutation and rotation, reversing a
circle while flipping all its flags (move M1), or flipping both flags of a
single edge (move M2).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import (
    DuplicateLabelCount,
    ParseError,
    PositionOutOfRange,
    UnknownSign,
)

__all__ = [
    "Occurrence",
    "Corner",
    "BoundaryWalk",
    "GraphStats",
    "SignedRibbonGraph",
    "parse_ribbon_graph",
    "serialize_ribbon_graph",
    "components",
    "boundary_components",
    "is_orientable",
    "stats",
    "is_isomorphic",
    "disjoint_union",
    "one_point_join",
]

TAIL = "tail"
HEAD = "head"

_LABEL_BAD = re.compile(r"[\s:'#]")


class Occurrence(NamedTuple):
    """One end of an edge on a circle.

    ``against`` is True when the arrow opposes the circle's listed
    traversal order (the Against flag), False when it agrees (Along).
    """

    label: str
    against: bool = False

    def token(self) -> str:
        return self.label + ("'" if self.against else "")


class Corner(NamedTuple):
    """Tail or head endpoint of one arrow occurrence.

    ``occurrence`` is the global occurrence index in circle-major order.
    """

    occurrence: int
    kind: str  # TAIL or HEAD


@dataclass(frozen=True)
class BoundaryWalk:
    """One boundary component as an alternating corner/element walk.

    ``elements[i]`` is what is traversed after ``corners[i]``: an
    ``("arc", circle_index)`` free arc or a ``("side", label)`` ribbon
    side.  An isolated vertex yields the walk with no corners and the
    single element ``("vertex", circle_index)``.
    """

    corners: tuple[Corner, ...]
    elements: tuple[tuple[str, int | str], ...]


@dataclass(frozen=True)
class GraphStats:
    """Numerical profile of a signed ribbon graph.

    ``chi_closed`` is the Euler characteristic v - e + f of the closed
    surface obtained by capping boundary circles with discs;
    ``genus_or_crosscap`` is its genus (2k - chi)/2 when orientable and
    its crosscap number 2k - chi otherwise.
    """

    v: int
    e: int
    k: int
    r: int
    n: int
    f: int
    orientable: bool
    chi_closed: int
    genus_or_crosscap: int


def _check_label(label: str) -> str:
    if not label or _LABEL_BAD.search(label):
        raise ValueError(f"invalid edge label {label!r}")
    return label


class SignedRibbonGraph:
    """Immutable arrow presentation with a sign on every edge.

    Args:
        circles: iterable of circles, each an iterable of ``Occurrence``
            (or bare ``(label, against)`` pairs).
        signs: map from edge label to +1 or -1.

    Raises:
        DuplicateLabelCount: a label does not occur exactly twice.
        UnknownSign: an occurring label has no sign, or a sign is not +-1.
    """

    __slots__ = ("circles", "signs")

    circles: tuple[tuple[Occurrence, ...], ...]
    signs: dict[str, int]

    def __init__(
        self,
        circles: Iterable[Iterable[Occurrence | tuple[str, bool]]],
        signs: Mapping[str, int],
    ):
        fixed = tuple(
            tuple(Occurrence(_check_label(o[0]), bool(o[1])) for o in circle)
            for circle in circles
        )
        counts: dict[str, int] = {}
        for circle in fixed:
            for occ in circle:
                counts[occ.label] = counts.get(occ.label, 0) + 1
        for label, count in counts.items():
            if count != 2:
                raise DuplicateLabelCount(
                    f"label {label!r} occurs {count} times, expected 2"
                )
            if label not in signs:
                raise UnknownSign(f"no sign given for edge {label!r}")
        for label, sign in signs.items():
            if counts.get(label, 0) != 2:
                raise DuplicateLabelCount(
                    f"label {label!r} occurs 0 times, expected 2"
                )
            if sign not in (1, -1):
                raise UnknownSign(f"sign of edge {label!r} must be +1 or -1")
        object.__setattr__(self, "circles", fixed)
        object.__setattr__(self, "signs", {l: signs[l] for l in sorted(counts)})

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("SignedRibbonGraph instances are immutable")

    # ------------------------------------------------------------------
    # basic accessors
    # ------------------------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.circles)

    @property
    def num_edges(self) -> int:
        return len(self.signs)

    @property
    def edge_labels(self) -> tuple[str, ...]:
        """All edge labels in lexicographic order."""
        return tuple(sorted(self.signs))

    def sign(self, label: str) -> int:
        return self.signs[label]

    def occurrences(self) -> Iterator[tuple[int, int, int, Occurrence]]:
        """Yield (global index, circle index, position, occurrence)."""
        i = 0
        for ci, circle in enumerate(self.circles):
            for pos, occ in enumerate(circle):
                yield i, ci, pos, occ
                i += 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SignedRibbonGraph)
            and self.circles == other.circles
            and self.signs == other.signs
        )

    def __hash__(self) -> int:
        return hash((self.circles, tuple(sorted(self.signs.items()))))

    def __repr__(self) -> str:
        body = " / ".join(
            " ".join(o.token() for o in circle) or "(empty)"
            for circle in self.circles
        )
        return f"SignedRibbonGraph({body!r}, signs={self.signs!r})"

    # ------------------------------------------------------------------
    # moves
    # ------------------------------------------------------------------

    def _replace_circle(
        self, index: int, circle: tuple[Occurrence, ...]
    ) -> "SignedRibbonGraph":
        circles = list(self.circles)
        circles[index] = circle
        return SignedRibbonGraph(circles, self.signs)

    def m1(self, index: int) -> "SignedRibbonGraph":
        """Reverse circle ``index`` and flip every flag on it."""
        flipped = tuple(
            Occurrence(o.label, not o.against) for o in reversed(self.circles[index])
        )
        return self._replace_circle(index, flipped)

    def m2(self, label: str) -> "SignedRibbonGraph":
        """Flip both flags of edge ``label``."""
        if label not in self.signs:
            raise KeyError(label)
        circles = tuple(
            tuple(
                Occurrence(o.label, not o.against) if o.label == label else o
                for o in circle
            )
            for circle in self.circles
        )
        return SignedRibbonGraph(circles, self.signs)

    def rotate(self, index: int, shift: int) -> "SignedRibbonGraph":
        """Move the listing start of circle ``index`` forward by ``shift``."""
        circle = self.circles[index]
        if not circle:
            return self
        shift %= len(circle)
        return self._replace_circle(index, circle[shift:] + circle[:shift])

    def permute_circles(self, order: Sequence[int]) -> "SignedRibbonGraph":
        """Reorder circles; ``order[i]`` is the old index placed at i."""
        if sorted(order) != list(range(len(self.circles))):
            raise ValueError("not a permutation of circle indices")
        return SignedRibbonGraph(
            tuple(self.circles[i] for i in order), self.signs
        )

    def relabel(self, mapping: Mapping[str, str]) -> "SignedRibbonGraph":
        """Rename edges; labels absent from ``mapping`` keep their names."""
        full = {l: mapping.get(l, l) for l in self.signs}
        if len(set(full.values())) != len(full):
            raise ValueError("relabeling is not injective")
        circles = tuple(
            tuple(Occurrence(full[o.label], o.against) for o in circle)
            for circle in self.circles
        )
        return SignedRibbonGraph(
            circles, {full[l]: s for l, s in self.signs.items()}
        )


# ----------------------------------------------------------------------
# connectivity, boundary, orientability
# ----------------------------------------------------------------------


def components(g: SignedRibbonGraph) -> tuple[tuple[int, ...], ...]:
    """Partition circle indices into connected components.

    Circles are connected when a chain of shared edge labels joins them;
    the component count k is the length of the returned partition.
    """
    parent = list(range(len(g.circles)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    where: dict[str, int] = {}
    for _, ci, _, occ in g.occurrences():
        if occ.label in where:
            ra, rb = find(where[occ.label]), find(ci)
            if ra != rb:
                parent[ra] = rb
        else:
            where[occ.label] = ci
    groups: dict[int, list[int]] = {}
    for ci in range(len(g.circles)):
        groups.setdefault(find(ci), []).append(ci)
    return tuple(tuple(v) for _, v in sorted(groups.items()))


def _corner_links(
    g: SignedRibbonGraph,
) -> tuple[dict[int, tuple[int, tuple[str, int | str]]], ...]:
    """Arc and side adjacency on corner ids (2i tail, 2i+1 head).

    Returns (arc, side) dicts mapping each corner id to its partner and
    the traversed element.  Each corner appears in exactly one arc and
    one side, so the union is 2-regular.
    """
    arc: dict[int, tuple[int, tuple[str, int | str]]] = {}
    side: dict[int, tuple[int, tuple[str, int | str]]] = {}
    base = 0
    for ci, circle in enumerate(g.circles):
        m = len(circle)
        for pos, occ in enumerate(circle):
            nxt = circle[(pos + 1) % m]
            i = base + pos
            j = base + (pos + 1) % m
            # after-corner of occ -> before-corner of the next occurrence
            a = 2 * i + (0 if occ.against else 1)
            b = 2 * j + (1 if nxt.against else 0)
            elem = ("arc", ci)
            arc[a] = (b, elem)
            arc[b] = (a, elem)
        base += m
    ends: dict[str, list[int]] = {}
    for i, _, _, occ in g.occurrences():
        ends.setdefault(occ.label, []).append(i)
    for label, (i1, i2) in ends.items():
        elem = ("side", label)
        for a, b in ((2 * i1 + 1, 2 * i2), (2 * i2 + 1, 2 * i1)):
            side[a] = (b, elem)
            side[b] = (a, elem)
    return arc, side


def _corner_of(corner_id: int) -> Corner:
    return Corner(corner_id // 2, TAIL if corner_id % 2 == 0 else HEAD)


def boundary_components(g: SignedRibbonGraph) -> tuple[BoundaryWalk, ...]:
    """Trace the boundary of the surface; one walk per component.

    The corner graph alternates free arcs (along circles) with ribbon
    sides (along edge bands); its cycles are the boundary components.
    Walks start at their smallest corner and leave it along the arc.
    Isolated vertices append their own cornerless walks.
    """
    arc, side = _corner_links(g)
    seen: set[int] = set()
    walks: list[BoundaryWalk] = []
    for start in sorted(arc):
        if start in seen:
            continue
        corners: list[Corner] = []
        elements: list[tuple[str, int | str]] = []
        at = start
        use_arc = True
        while True:
            seen.add(at)
            corners.append(_corner_of(at))
            nxt, elem = (arc if use_arc else side)[at]
            elements.append(elem)
            at = nxt
            use_arc = not use_arc
            if at == start:
                break
        walks.append(BoundaryWalk(tuple(corners), tuple(elements)))
    for ci, circle in enumerate(g.circles):
        if not circle:
            walks.append(BoundaryWalk((), (("vertex", ci),)))
    return tuple(walks)


def is_orientable(g: SignedRibbonGraph) -> bool:
    """Whether all circle arrows can be chosen coherently.

    Seeks a reversal assignment o on circles with, for every edge,
    d1 xor d2 xor o(c1) xor o(c2) = 0 where d are the Against flags;
    a parity union-find detects the obstruction.
    """
    parent = list(range(len(g.circles)))
    parity = [0] * len(g.circles)

    def find(a: int) -> tuple[int, int]:
        p = 0
        while parent[a] != a:
            p ^= parity[a]
            a = parent[a]
        return a, p

    first: dict[str, tuple[int, bool]] = {}
    for _, ci, _, occ in g.occurrences():
        if occ.label not in first:
            first[occ.label] = (ci, occ.against)
            continue
        cj, dj = first[occ.label]
        want = dj ^ occ.against
        ra, pa = find(ci)
        rb, pb = find(cj)
        if ra == rb:
            if pa ^ pb != want:
                return False
        else:
            parent[ra] = rb
            parity[ra] = pa ^ pb ^ want
    return True


def stats(g: SignedRibbonGraph) -> GraphStats:
    v = g.num_vertices
    e = g.num_edges
    k = len(components(g))
    f = len(boundary_components(g))
    orientable = is_orientable(g)
    chi = v - e + f
    return GraphStats(
        v=v,
        e=e,
        k=k,
        r=v - k,
        n=e - (v - k),
        f=f,
        orientable=orientable,
        chi_closed=chi,
        genus_or_crosscap=(2 * k - chi) // 2 if orientable else 2 * k - chi,
    )


# ----------------------------------------------------------------------
# isomorphism
# ----------------------------------------------------------------------


def _oriented(circle: tuple[Occurrence, ...], flip: bool, shift: int):
    if flip:
        circle = tuple(Occurrence(o.label, not o.against) for o in reversed(circle))
    return circle[shift:] + circle[:shift]


def is_isomorphic(
    g: SignedRibbonGraph, h: SignedRibbonGraph, ignore_signs: bool = False
) -> bool:
    """Equivalence under relabeling, rotation, permutation, M1 and M2.

    Signs must transport along the label bijection unless ``ignore_signs``.
    Backtracking over circle assignments with per-circle reversal and
    rotation; intended for graphs with at most a dozen edges.
    """
    if g.num_vertices != h.num_vertices or g.num_edges != h.num_edges:
        return False
    if sorted(len(c) for c in g.circles) != sorted(len(c) for c in h.circles):
        return False
    if not ignore_signs and sorted(g.signs.values()) != sorted(h.signs.values()):
        return False
    sg, sh = stats(g), stats(h)
    if (sg.k, sg.f, sg.orientable) != (sh.k, sh.f, sh.orientable):
        return False

    order = sorted(range(len(g.circles)), key=lambda i: -len(g.circles[i]))
    used = [False] * len(h.circles)

    def place(
        rank: int, phi: dict[str, str], tau: dict[str, bool], taken: set[str]
    ) -> bool:
        if rank == len(order):
            return True
        gi = order[rank]
        gcircle = g.circles[gi]
        length = len(gcircle)
        empty_done = False
        for hj, hcircle in enumerate(h.circles):
            if used[hj] or len(hcircle) != length:
                continue
            if length == 0:
                if empty_done:
                    continue
                empty_done = True  # empty circles are interchangeable
            used[hj] = True
            for flip in (False, True):
                for shift in range(max(length, 1)):
                    phi2, tau2, taken2 = dict(phi), dict(tau), set(taken)
                    ok = True
                    for og, oh in zip(_oriented(gcircle, flip, shift), hcircle):
                        mapped = phi2.get(og.label)
                        if mapped is None:
                            if oh.label in taken2:
                                ok = False
                                break
                            if not ignore_signs and g.signs[og.label] != h.signs[oh.label]:
                                ok = False
                                break
                            phi2[og.label] = oh.label
                            taken2.add(oh.label)
                            tau2[og.label] = og.against ^ oh.against
                        elif mapped != oh.label or tau2[og.label] != (
                            og.against ^ oh.against
                        ):
                            ok = False
                            break
                    if ok and place(rank + 1, phi2, tau2, taken2):
                        used[hj] = False
                        return True
                    if length == 0:
                        break  # no rotations or flips to try
                if length == 0:
                    break
            used[hj] = False
        return False

    return place(0, {}, {}, set())


# ----------------------------------------------------------------------
# composition
# ----------------------------------------------------------------------


def _fresh_relabel(
    h: SignedRibbonGraph, occupied: set[str]
) -> SignedRibbonGraph:
    mapping: dict[str, str] = {}
    used = set(occupied)
    for label in h.edge_labels:
        new = label
        i = 2
        while new in used:
            new = f"{label}.{i}"
            i += 1
        mapping[label] = new
        used.add(new)
    return h.relabel(mapping)


def disjoint_union(
    g: SignedRibbonGraph, h: SignedRibbonGraph
) -> SignedRibbonGraph:
    """Place two graphs side by side, renaming clashing edge labels of h."""
    h = _fresh_relabel(h, set(g.signs))
    return SignedRibbonGraph(
        g.circles + h.circles, {**g.signs, **h.signs}
    )


def one_point_join(
    g: SignedRibbonGraph,
    h: SignedRibbonGraph,
    pos_g: tuple[int, int],
    pos_h: tuple[int, int],
) -> SignedRibbonGraph:
    """Merge one vertex of each graph at chosen insertion gaps.

    ``pos_g`` and ``pos_h`` are (circle index, gap index) pairs; gap i
    lies before the occurrence at position i, so a circle of length m
    has gaps 0..m.  Clashing h labels are renamed as in disjoint_union.
    """
    cg, gapg = pos_g
    ch, gaph = pos_h
    if not (0 <= cg < len(g.circles)) or not (0 <= gapg <= len(g.circles[cg])):
        raise PositionOutOfRange(f"no gap {pos_g} in the first graph")
    if not (0 <= ch < len(h.circles)) or not (0 <= gaph <= len(h.circles[ch])):
        raise PositionOutOfRange(f"no gap {pos_h} in the second graph")
    h = _fresh_relabel(h, set(g.signs))
    spliced = h.circles[ch][gaph:] + h.circles[ch][:gaph]
    joined = g.circles[cg][:gapg] + spliced + g.circles[cg][gapg:]
    circles = (
        g.circles[:cg]
        + (joined,)
        + g.circles[cg + 1 :]
        + h.circles[:ch]
        + h.circles[ch + 1 :]
    )
    return SignedRibbonGraph(circles, {**g.signs, **h.signs})


# ----------------------------------------------------------------------
# text format
# ----------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\S+")


def parse_ribbon_graph(text: str) -> SignedRibbonGraph:
    """Parse the ``.rg`` text format.

    Format: optional header line ``ribbon-graph v1``; one line
    ``edges: <label>:<+|-> ...``; one ``circle:`` line per vertex whose
    tokens are labels, with a trailing ``'`` marking an Against flag.
    ``#`` starts a comment anywhere; blank lines are skipped.

    Raises:
        ParseError: malformed syntax, with line and column.
        DuplicateLabelCount, UnknownSign: label/sign inconsistencies.
    """
    signs: dict[str, int] | None = None
    circles: list[list[Occurrence]] = []
    first_content = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.strip()
        if first_content:
            first_content = False
            if stripped == "ribbon-graph v1":
                continue
        if stripped.startswith("edges:"):
            if signs is not None:
                raise ParseError("second edges: line", lineno, line.index("edges:") + 1)
            signs = {}
            body_start = line.index("edges:") + len("edges:")
            for m in _TOKEN_RE.finditer(line, body_start):
                tok, col = m.group(), m.start() + 1
                label, sep, sign_txt = tok.rpartition(":")
                if not sep or not label:
                    raise ParseError(f"expected label:sign, got {tok!r}", lineno, col)
                if sign_txt == "+":
                    sign = 1
                elif sign_txt == "-":
                    sign = -1
                else:
                    raise ParseError(f"sign must be + or -, got {sign_txt!r}", lineno, col)
                if _LABEL_BAD.search(label):
                    raise ParseError(f"invalid edge label {label!r}", lineno, col)
                if label in signs:
                    raise ParseError(f"edge {label!r} declared twice", lineno, col)
                signs[label] = sign
            continue
        if stripped.startswith("circle:"):
            if signs is None:
                raise ParseError("circle: before edges:", lineno, line.index("circle:") + 1)
            circle: list[Occurrence] = []
            body_start = line.index("circle:") + len("circle:")
            for m in _TOKEN_RE.finditer(line, body_start):
                tok, col = m.group(), m.start() + 1
                against = tok.endswith("'")
                label = tok[:-1] if against else tok
                if not label or _LABEL_BAD.search(label):
                    raise ParseError(f"invalid occurrence {tok!r}", lineno, col)
                if label not in signs:
                    raise ParseError(f"edge {label!r} not declared", lineno, col)
                circle.append(Occurrence(label, against))
            circles.append(circle)
            continue
        col = len(line) - len(line.lstrip()) + 1
        raise ParseError(f"unrecognized line {stripped.split()[0]!r}", lineno, col)
    if signs is None:
        if circles or not first_content:
            raise ParseError("missing edges: line", 1, 1)
        raise ParseError("empty input", 1, 1)
    return SignedRibbonGraph(circles, signs)


def serialize_ribbon_graph(g: SignedRibbonGraph) -> str:
    """Canonical ``.rg`` text; labels sorted, flags as trailing quotes."""
    lines = ["ribbon-graph v1"]
    edge_toks = [
        f"{l}:{'+' if g.signs[l] > 0 else '-'}" for l in g.edge_labels
    ]
    lines.append("edges: " + " ".join(edge_toks) if edge_toks else "edges:")
    for circle in g.circles:
        toks = " ".join(o.token() for o in circle)
        lines.append("circle: " + toks if toks else "circle:")
    return "\n".join(lines) + "\n"
