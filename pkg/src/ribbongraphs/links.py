"""Virtual link diagrams as signed Gauss codes, and their state sums.

A diagram is a set of oriented closed strands, each a cyclic sequence of
passes through classical crossings; every crossing is met exactly twice,
once over and once under, and carries a sign.  Virtual crossings are never
stored: everything computed here (brackets, Jones, state graphs) only
depends on the code, and virtual moves do not change it.

Each classical crossing splits in two ways.  With the crossing drawn so
its four strand ends sit in the plane, the A-splitting joins the two
angles swept counterclockwise from the over-strand; operationally, at a
positive crossing the A-splitting is the one that respects strand
orientation, and at a negative crossing that is the B-splitting.  A state
chooses a splitting per crossing; tracing the resulting closed curves and
placing a band at each crossing turns the state into a signed ribbon
graph whose edges are the crossings (sign +1 for A, -1 for B).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .errors import (
    DanglingCrossing,
    ParseError,
    RoleConflict,
    TooManyCrossings,
    UnknownSign,
)
from .polynomial import RING_ABD, RING_T, Laurent
from .ribbon import Occurrence, SignedRibbonGraph, _LABEL_BAD

__all__ = [
    "Pass",
    "VirtualLinkDiagram",
    "StateExpansion",
    "parse_gauss",
    "serialize_gauss",
    "writhe",
    "resolve_state",
    "kauffman_bracket",
    "jones",
    "seifert_state",
    "all_A_state",
    "all_B_state",
    "state_ribbon_graph",
    "BRACKET_MAX_CROSSINGS",
]

BRACKET_MAX_CROSSINGS = 20


class Pass(NamedTuple):
    """One visit of a strand to a crossing."""

    crossing: str
    over: bool

    def token(self, sign: int) -> str:
        return ("O" if self.over else "U") + self.crossing + ("+" if sign > 0 else "-")


class VirtualLinkDiagram:
    """Oriented virtual link diagram modulo virtual moves.

    Args:
        components: iterable of strands, each an iterable of ``Pass``
            (or bare ``(crossing, over)`` pairs); a strand may be empty.
        signs: map from crossing id to +1 or -1.

    Raises:
        DanglingCrossing: a crossing id is not met exactly twice.
        RoleConflict: a crossing is met twice in the same role.
        UnknownSign: a met crossing has no sign, or a sign is not +-1.
    """

    __slots__ = ("components", "signs")

    components: tuple[tuple[Pass, ...], ...]
    signs: dict[str, int]

    def __init__(
        self,
        components: Iterable[Iterable[Pass | tuple[str, bool]]],
        signs: Mapping[str, int],
    ):
        fixed = tuple(
            tuple(Pass(str(p[0]), bool(p[1])) for p in comp) for comp in components
        )
        roles: dict[str, list[bool]] = {}
        for comp in fixed:
            for p in comp:
                if _LABEL_BAD.search(p.crossing) or not p.crossing:
                    raise ValueError(f"invalid crossing id {p.crossing!r}")
                roles.setdefault(p.crossing, []).append(p.over)
        for cid, seen in roles.items():
            if len(seen) != 2:
                raise DanglingCrossing(
                    f"crossing {cid!r} met {len(seen)} times, expected 2"
                )
            if seen[0] == seen[1]:
                word = "over" if seen[0] else "under"
                raise RoleConflict(f"crossing {cid!r} passed {word} twice")
            if cid not in signs:
                raise UnknownSign(f"no sign given for crossing {cid!r}")
        for cid, sign in signs.items():
            if cid not in roles:
                raise DanglingCrossing(f"crossing {cid!r} met 0 times, expected 2")
            if sign not in (1, -1):
                raise UnknownSign(f"sign of crossing {cid!r} must be +1 or -1")
        object.__setattr__(self, "components", fixed)
        object.__setattr__(self, "signs", {c: signs[c] for c in sorted(roles)})

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("VirtualLinkDiagram instances are immutable")

    @property
    def crossing_ids(self) -> tuple[str, ...]:
        """Crossing ids in lexicographic order."""
        return tuple(sorted(self.signs))

    @property
    def num_crossings(self) -> int:
        return len(self.signs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VirtualLinkDiagram)
            and self.components == other.components
            and self.signs == other.signs
        )

    def __hash__(self) -> int:
        return hash((self.components, tuple(sorted(self.signs.items()))))

    def __repr__(self) -> str:
        body = " / ".join(
            " ".join(p.token(self.signs[p.crossing]) for p in comp) or "(empty)"
            for comp in self.components
        )
        return f"VirtualLinkDiagram({body!r})"


def writhe(d: VirtualLinkDiagram) -> int:
    """Sum of the crossing signs."""
    return sum(d.signs.values())


@dataclass(frozen=True)
class StateExpansion:
    """Outcome of splitting every crossing of a diagram.

    ``circles`` holds the traced state curves: per curve, the cyclic
    sequence of crossings passed, each as an ``Occurrence`` whose flag
    records the band arrow against the curve's traversal (retained so a
    ribbon graph can be assembled without re-tracing).  Components with
    no crossings contribute empty curves.
    """

    alpha: int
    beta: int
    delta: int
    circles: tuple[tuple[Occurrence, ...], ...]


def _strand_edges(d: VirtualLinkDiagram) -> tuple[dict[int, int], int]:
    """Pair strand ends; ends are numbered 4j.. 4j+3 per sorted crossing:
    over-in, over-out, under-in, under-out."""
    index = {cid: j for j, cid in enumerate(d.crossing_ids)}
    strand: dict[int, int] = {}
    empties = 0
    for comp in d.components:
        if not comp:
            empties += 1
            continue
        for i, p in enumerate(comp):
            q = comp[(i + 1) % len(comp)]
            out_end = 4 * index[p.crossing] + (1 if p.over else 3)
            in_end = 4 * index[q.crossing] + (0 if q.over else 2)
            strand[out_end] = in_end
            strand[in_end] = out_end
    return strand, empties


def resolve_state(
    d: VirtualLinkDiagram, state: Mapping[str, str]
) -> StateExpansion:
    """Split every crossing per ``state`` and trace the closed curves.

    ``state`` maps each crossing id to "A" or "B".  The A-splitting at a
    positive crossing (and the B-splitting at a negative one) joins each
    incoming strand end to an outgoing one; the other choice joins the
    two incoming ends together.  Band arrows run from the under-strand
    end to the over-strand end on both arcs of an A-splitting, and from
    over to under for B.
    """
    ids = d.crossing_ids
    for cid in ids:
        if state.get(cid) not in ("A", "B"):
            raise ValueError(f"state does not choose A or B at {cid!r}")
    strand, empties = _strand_edges(d)
    smooth: dict[int, int] = {}
    arrow: dict[tuple[int, int], bool] = {}  # (from, to) -> True if arrow runs so
    alpha = beta = 0
    for j, cid in enumerate(ids):
        choice = state[cid]
        if choice == "A":
            alpha += 1
        else:
            beta += 1
        o_in, o_out, u_in, u_out = 4 * j, 4 * j + 1, 4 * j + 2, 4 * j + 3
        respects = (d.signs[cid] > 0) == (choice == "A")
        if respects:
            arcs = ((o_in, u_out), (u_in, o_out))
        else:
            arcs = ((o_in, u_in), (o_out, u_out))
        for p, q in arcs:
            smooth[p] = q
            smooth[q] = p
            over_end = p if p in (o_in, o_out) else q
            under_end = q if over_end == p else p
            if choice == "A":
                arrow[(under_end, over_end)] = True
                arrow[(over_end, under_end)] = False
            else:
                arrow[(over_end, under_end)] = True
                arrow[(under_end, over_end)] = False
    circles: list[tuple[Occurrence, ...]] = []
    seen: set[int] = set()
    for start in sorted(strand):
        if start in seen:
            continue
        curve: list[Occurrence] = []
        at = start
        use_strand = True
        while True:
            seen.add(at)
            if use_strand:
                at = strand[at]
            else:
                nxt = smooth[at]
                curve.append(Occurrence(ids[at // 4], not arrow[(at, nxt)]))
                at = nxt
            use_strand = not use_strand
            if at == start and use_strand:
                break
        circles.append(tuple(curve))
    circles.extend(() for _ in range(empties))
    return StateExpansion(
        alpha=alpha, beta=beta, delta=len(circles), circles=tuple(circles)
    )


def _all_states(ids: tuple[str, ...]):
    for mask in range(1 << len(ids)):
        yield {cid: ("B" if mask >> i & 1 else "A") for i, cid in enumerate(ids)}


def kauffman_bracket(
    d: VirtualLinkDiagram, max_crossings: int = BRACKET_MAX_CROSSINGS
) -> Laurent:
    """State sum of A^alpha B^beta d^(delta-1) over all splittings.

    Raises:
        TooManyCrossings: more than ``max_crossings`` crossings.
    """
    if d.num_crossings > max_crossings:
        raise TooManyCrossings(
            f"{d.num_crossings} crossings exceed the guard of {max_crossings}"
        )
    terms: dict[tuple[int, int, int], int] = {}
    for state in _all_states(d.crossing_ids):
        ex = resolve_state(d, state)
        key = (ex.alpha, ex.beta, ex.delta - 1)
        terms[key] = terms.get(key, 0) + 1
    return Laurent(RING_ABD, terms)


def jones(
    d: VirtualLinkDiagram, max_crossings: int = BRACKET_MAX_CROSSINGS
) -> Laurent:
    """Jones polynomial in t: the bracket at A=t^(-1/4), B=t^(1/4),
    d=-t^(1/2)-t^(-1/2), times the writhe factor (-1)^w t^(3w/4)."""
    bracket = kauffman_bracket(d, max_crossings)
    loop = Laurent(RING_T, {(2,): -1, (-2,): -1})
    total = Laurent.zero(RING_T)
    for (a, b, dd), coeff in bracket.terms.items():
        total = total + Laurent(RING_T, {(b - a,): coeff}) * loop**dd
    w = writhe(d)
    return total * Laurent(RING_T, {(3 * w,): (-1) ** (w & 1)})


def seifert_state(d: VirtualLinkDiagram) -> dict[str, str]:
    """The orientation-respecting state: A at positive crossings, B at
    negative ones."""
    return {cid: ("A" if s > 0 else "B") for cid, s in d.signs.items()}


def all_A_state(d: VirtualLinkDiagram) -> dict[str, str]:
    return {cid: "A" for cid in d.signs}


def all_B_state(d: VirtualLinkDiagram) -> dict[str, str]:
    return {cid: "B" for cid in d.signs}


def state_ribbon_graph(
    d: VirtualLinkDiagram, state: Mapping[str, str]
) -> SignedRibbonGraph:
    """Ribbon graph of a state: state curves become vertices, crossings
    become edges signed +1 for an A-splitting and -1 for B."""
    ex = resolve_state(d, state)
    signs = {cid: (1 if state[cid] == "A" else -1) for cid in d.crossing_ids}
    return SignedRibbonGraph(ex.circles, signs)


# ----------------------------------------------------------------------
# text format
# ----------------------------------------------------------------------


def parse_gauss(text: str) -> VirtualLinkDiagram:
    """Parse the gauss text format.

    Format: optional header line ``gauss v1``; one ``component:`` line
    per strand with whitespace-separated tokens ``(O|U)<id><+|->``; an
    empty component line is a 0-crossing unknot component.  ``#`` starts
    a comment.  Empty input denotes the single-component unknot.

    Raises:
        ParseError: malformed tokens or clashing signs, with line/column.
        DanglingCrossing, RoleConflict, UnknownSign: invalid diagrams.
    """
    components: list[list[Pass]] = []
    signs: dict[str, int] = {}
    first_content = True
    import re

    token_re = re.compile(r"\S+")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.strip()
        if first_content:
            first_content = False
            if stripped == "gauss v1":
                continue
        if not stripped.startswith("component:"):
            col = len(line) - len(line.lstrip()) + 1
            raise ParseError(f"unrecognized line {stripped.split()[0]!r}", lineno, col)
        comp: list[Pass] = []
        body_start = line.index("component:") + len("component:")
        for m in token_re.finditer(line, body_start):
            tok, col = m.group(), m.start() + 1
            if len(tok) < 3 or tok[0] not in "OU" or tok[-1] not in "+-":
                raise ParseError(
                    f"expected (O|U)<id><+|->, got {tok!r}", lineno, col
                )
            cid = tok[1:-1]
            if _LABEL_BAD.search(cid):
                raise ParseError(f"invalid crossing id {cid!r}", lineno, col)
            sign = 1 if tok[-1] == "+" else -1
            if cid in signs and signs[cid] != sign:
                raise ParseError(
                    f"crossing {cid!r} already declared with the other sign",
                    lineno,
                    col,
                )
            signs[cid] = sign
            comp.append(Pass(cid, tok[0] == "O"))
        components.append(comp)
    if not components:
        components.append([])
    return VirtualLinkDiagram(components, signs)


def serialize_gauss(d: VirtualLinkDiagram) -> str:
    """Canonical gauss text for a diagram."""
    lines = ["gauss v1"]
    for comp in d.components:
        toks = " ".join(p.token(d.signs[p.crossing]) for p in comp)
        lines.append("component: " + toks if toks else "component:")
    return "\n".join(lines) + "\n"
