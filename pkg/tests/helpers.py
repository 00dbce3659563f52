"""Corpus builders and oracles shared across the test modules.

Random objects are drawn from explicitly seeded ``random.Random``
instances so every test run sees the same corpus.  Builders that promise
an edge of a particular class (bridge, trivial loop, ...) assert the
promise via ``classify_edge`` at construction time.
"""

from __future__ import annotations

import random
from pathlib import Path

from ribbongraphs.duality import classify_edge
from ribbongraphs.links import VirtualLinkDiagram, parse_gauss
from ribbongraphs.ribbon import (
    SignedRibbonGraph,
    parse_ribbon_graph,
    stats,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load_graph(name: str) -> SignedRibbonGraph:
    return parse_ribbon_graph((FIXTURES / name).read_text(encoding="utf-8"))


def load_diagram(name: str) -> VirtualLinkDiagram:
    return parse_gauss((FIXTURES / name).read_text(encoding="utf-8"))


def all_subsets(g: SignedRibbonGraph):
    labels = sorted(g.signs)
    for mask in range(1 << len(labels)):
        yield frozenset(l for i, l in enumerate(labels) if mask >> i & 1)


def random_graph(rng: random.Random, max_edges: int = 6) -> SignedRibbonGraph:
    """A uniform-ish signed ribbon graph: labels 1..e scattered over a
    random number of circles (empty circles allowed), random flags and
    signs."""
    e = rng.randint(0, max_edges)
    v = rng.randint(1, e + 1)
    occs = [str(i + 1) for i in range(e)] * 2
    rng.shuffle(occs)
    cuts = sorted(rng.randint(0, len(occs)) for _ in range(v - 1))
    circles, prev = [], 0
    for cut in cuts + [len(occs)]:
        circles.append(tuple((l, rng.random() < 0.5) for l in occs[prev:cut]))
        prev = cut
    signs = {str(i + 1): rng.choice((1, -1)) for i in range(e)}
    return SignedRibbonGraph(circles, signs)


def graph_corpus(seed: int, count: int, max_edges: int = 6):
    rng = random.Random(seed)
    return [random_graph(rng, max_edges) for _ in range(count)]


# ----------------------------------------------------------------------
# guaranteed edge classes
# ----------------------------------------------------------------------


def _fresh_label(g: SignedRibbonGraph) -> str:
    i = len(g.signs) + 1
    while str(i) in g.signs:
        i += 1
    return str(i)


def _insert(circle: tuple, pos: int, piece: list) -> tuple:
    return circle[:pos] + tuple(piece) + circle[pos:]


def _rebuild(g, circles, extra_signs) -> SignedRibbonGraph:
    return SignedRibbonGraph(circles, {**g.signs, **extra_signs})


def with_trivial_loop(
    g: SignedRibbonGraph, rng: random.Random, sign: int, orientable: bool
) -> tuple[SignedRibbonGraph, str]:
    """Insert an adjacent loop pair on a random circle.  Equal flags give
    a trivial orientable loop, opposite flags a trivial non-orientable
    one."""
    label = _fresh_label(g)
    ci = rng.randrange(len(g.circles))
    pos = rng.randint(0, len(g.circles[ci]))
    piece = [(label, False), (label, not orientable)]
    circles = list(g.circles)
    circles[ci] = _insert(circles[ci], pos, piece)
    out = _rebuild(g, circles, {label: sign})
    cls = classify_edge(out, label)
    assert cls.kind == "loop" and cls.trivial and cls.orientable == orientable
    return out, label


def with_nontrivial_loop(
    g: SignedRibbonGraph, rng: random.Random, sign: int, orientable: bool
) -> tuple[SignedRibbonGraph, str]:
    """Append an interleaved two-loop circle; the first loop is a
    nontrivial loop of the requested orientability class."""
    label = _fresh_label(g)
    signs = {label: sign}
    circles = list(g.circles)
    other = label + "c"
    while other in g.signs:
        other += "c"
    signs[other] = rng.choice((1, -1))
    circles.append(
        (
            (label, False),
            (other, False),
            (label, not orientable),
            (other, rng.random() < 0.5),
        )
    )
    out = _rebuild(g, circles, signs)
    cls = classify_edge(out, label)
    assert cls.kind == "loop" and not cls.trivial and cls.orientable == orientable
    return out, label


def with_bridge(
    g: SignedRibbonGraph, rng: random.Random, sign: int
) -> tuple[SignedRibbonGraph, str]:
    """Hang a fresh vertex off a random circle by a new edge."""
    label = _fresh_label(g)
    ci = rng.randrange(len(g.circles))
    pos = rng.randint(0, len(g.circles[ci]))
    circles = list(g.circles)
    circles[ci] = _insert(circles[ci], pos, [(label, False)])
    circles.append(((label, rng.random() < 0.5),))
    out = _rebuild(g, circles, {label: sign})
    assert classify_edge(out, label).kind == "bridge"
    return out, label


def with_ordinary(
    g: SignedRibbonGraph, rng: random.Random, sign: int
) -> tuple[SignedRibbonGraph, str]:
    """Attach a fresh vertex by two parallel edges; each is ordinary."""
    label = _fresh_label(g)
    twin = label + "p"
    while twin in g.signs:
        twin += "p"
    ci = rng.randrange(len(g.circles))
    pos = rng.randint(0, len(g.circles[ci]))
    circles = list(g.circles)
    circles[ci] = _insert(circles[ci], pos, [(label, False), (twin, False)])
    circles.append(((label, rng.random() < 0.5), (twin, rng.random() < 0.5)))
    out = _rebuild(g, circles, {label: sign, twin: rng.choice((1, -1))})
    assert classify_edge(out, label).kind == "ordinary"
    return out, label


# ----------------------------------------------------------------------
# connected all-positive genus-0 family
# ----------------------------------------------------------------------


def plane_graph(rng: random.Random, grows: int = 4) -> SignedRibbonGraph:
    """A connected all-positive ribbon graph of genus 0, grown from a
    single vertex by bridges, trivial loops, and parallel doublings.
    Each growth step is checked to preserve the plane embedding."""
    g = SignedRibbonGraph([()], {})
    for _ in range(grows):
        move = rng.choice(("bridge", "loop", "double"))
        if move == "bridge":
            g, _ = with_bridge(g, rng, 1)
        elif move == "loop":
            g, _ = with_trivial_loop(g, rng, 1, True)
        else:
            g = _double_edge(g, rng) or g
        s = stats(g)
        assert s.k == 1 and s.orientable and s.genus_or_crosscap == 0, g
    return g


def _double_edge(g: SignedRibbonGraph, rng: random.Random):
    """Add an edge parallel to an existing plain edge, keeping genus 0.
    Both relative insertion orders are tried; one of them stays planar."""
    spots: dict[str, list[tuple[int, int]]] = {}
    for ci, circle in enumerate(g.circles):
        for pos, (label, against) in enumerate(circle):
            if not against:
                spots.setdefault(label, []).append((ci, pos))
    plain = [l for l, ps in spots.items() if len(ps) == 2]
    if not plain:
        return None
    label = rng.choice(sorted(plain))
    (c1, p1), (c2, p2) = spots[label]
    twin = _fresh_label(g)
    for flip in (False, True):
        circles = [list(c) for c in g.circles]
        circles[c1].insert(p1 + 1, (twin, False))
        offset = 1 if c1 == c2 and p2 > p1 else 0
        circles[c2].insert(p2 + offset + (0 if flip else 1), (twin, False))
        candidate = SignedRibbonGraph(
            [tuple(c) for c in circles], {**g.signs, twin: 1}
        )
        s = stats(candidate)
        if s.k == 1 and s.orientable and s.genus_or_crosscap == 0:
            return candidate
    return None


def plane_corpus(seed: int, count: int, grows: int = 4):
    rng = random.Random(seed)
    return [plane_graph(rng, grows) for _ in range(count)]


# ----------------------------------------------------------------------
# link diagram corpus
# ----------------------------------------------------------------------


def random_diagram(rng: random.Random, max_crossings: int = 4) -> VirtualLinkDiagram:
    n = rng.randint(0, max_crossings)
    tokens = [(str(i + 1), True) for i in range(n)]
    tokens += [(str(i + 1), False) for i in range(n)]
    rng.shuffle(tokens)
    parts = rng.randint(1, 2)
    cut = rng.randint(0, len(tokens)) if parts == 2 else len(tokens)
    components = [tokens[:cut], tokens[cut:]] if parts == 2 else [tokens]
    signs = {str(i + 1): rng.choice((1, -1)) for i in range(n)}
    return VirtualLinkDiagram(components, signs)


def diagram_corpus(seed: int, count: int, max_crossings: int = 4):
    rng = random.Random(seed)
    return [random_diagram(rng, max_crossings) for _ in range(count)]


# ----------------------------------------------------------------------
# abstract-graph counting oracles
# ----------------------------------------------------------------------


def _edge_ends(g: SignedRibbonGraph) -> dict[str, tuple[int, int]]:
    ends: dict[str, list[int]] = {}
    for ci, circle in enumerate(g.circles):
        for label, _ in circle:
            ends.setdefault(label, []).append(ci)
    return {l: (p[0], p[1]) for l, p in ends.items()}


def _components_count(v: int, edges) -> int:
    parent = list(range(v))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    k = v
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            k -= 1
    return k


def count_subgraphs(g: SignedRibbonGraph) -> dict[str, int]:
    """Brute-force counts over all spanning subgraphs of the underlying
    abstract multigraph: spanning trees, spanning forests (acyclic),
    connected spanning subgraphs, and all subgraphs."""
    ends = _edge_ends(g)
    labels = sorted(ends)
    v = len(g.circles)
    k_g = _components_count(v, ends.values())
    counts = {"trees": 0, "forests": 0, "connected": 0, "all": 0}
    for mask in range(1 << len(labels)):
        chosen = [ends[l] for i, l in enumerate(labels) if mask >> i & 1]
        k = _components_count(v, chosen)
        rank = v - k
        nullity = len(chosen) - rank
        counts["all"] += 1
        if nullity == 0:
            counts["forests"] += 1
            if k == k_g:
                counts["trees"] += 1
        if k == 1:
            counts["connected"] += 1
    return counts
