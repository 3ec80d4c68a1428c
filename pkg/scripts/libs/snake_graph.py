# ============================================================================ #
#
#                             Copyright (c) 2023
#                               Sebastian Thiem
#
#                 Permission is hereby granted, free of charge,
#                to any person obtaining a copy of this software
#              and associated documentation files (the "Software"),
#                 to deal in the Software without restriction,
#                 including without limitation the rights to
#            use, copy, modify, merge, publish, distribute, sublicense,
#                     and/or sell copies of the Software,
#         and to permit persons to whom the Software is furnished to do so,
#                    subject to the following conditions:
#
#     The above copyright notice and this permission notice shall be included
#             in all copies or substantial portions of the Software.
#
#         THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
#               EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO
#                      THE WARRANTIES OF MERCHANTABILITY,
#             FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.
#             IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE
#               LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
#              WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE,
#            ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE
#                 OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
# ============================================================================ #
#
# Description:  Snake graphs of arcs, their sign functions, overlaps and the
#               two ways a crossing resolves: overlap resolution and
#               grafting.
#
#               A tile is stored through the two triangles around its
#               diagonal. `below` is the triangle the arc enters through,
#               `above` the one it leaves through, and each carries the pair
#               (p, q) of its other sides, counterclockwise after the
#               diagonal. Odd tiles put below.p south and below.q west, even
#               tiles the reverse; the north/east edges follow from `above`
#               the same way.
#
# ============================================================================ #
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from libs.errors import ValidationError
from libs.strings import StringWord, validate_string

if TYPE_CHECKING:
    from libs.surface import QuiverWithPotential, Triangulation

logger = logging.getLogger(__name__)

NORTH = "north"
EAST = "east"


@dataclass(frozen=True)
class Tile:
    diagonal: str
    below: int
    below_pq: tuple[str, str]
    above: int
    above_pq: tuple[str, str]

    def flipped(self) -> Tile:
        """The same tile crossed in the opposite direction."""
        return Tile(self.diagonal, self.above, self.above_pq, self.below, self.below_pq)


@dataclass(frozen=True)
class SnakeGraph:
    """A chain of tiles, or the single-edge graph of an edge of T.

    Tile indices in the public methods are 1-based.
    """
    tiles: tuple[Tile, ...] = ()
    edge: str | None = None
    boundary: bool = False

    def __post_init__(self):
        if self.edge is None and not self.tiles:
            raise ValidationError("A snake graph needs a tile or an edge")
        for j, (a, b) in enumerate(zip(self.tiles, self.tiles[1:]), start=1):
            if a.above != b.below or b.diagonal not in a.above_pq \
                    or a.diagonal not in b.below_pq:
                raise ValidationError(f"Tiles {j} and {j + 1} do not glue",
                                      position=j)

    @classmethod
    def single_edge(cls, T: Triangulation, label: str) -> SnakeGraph:
        return cls(edge=label, boundary=T.is_boundary(label))

    @property
    def is_edge(self) -> bool:
        return self.edge is not None

    @property
    def d(self) -> int:
        return len(self.tiles)

    @property
    def diagonals(self) -> tuple[str, ...]:
        return tuple(tile.diagonal for tile in self.tiles)

    def tile(self, j: int) -> Tile:
        return self.tiles[j - 1]

    def rel(self, j: int) -> int:
        return 1 if j % 2 == 1 else -1

    def south(self, j: int) -> str:
        tile = self.tile(j)
        return tile.below_pq[0] if j % 2 else tile.below_pq[1]

    def west(self, j: int) -> str:
        tile = self.tile(j)
        return tile.below_pq[1] if j % 2 else tile.below_pq[0]

    def north(self, j: int) -> str:
        tile = self.tile(j)
        return tile.above_pq[0] if j % 2 else tile.above_pq[1]

    def east(self, j: int) -> str:
        tile = self.tile(j)
        return tile.above_pq[1] if j % 2 else tile.above_pq[0]

    def interior(self, j: int) -> str:
        """Label of the edge σ_j glued between tiles j and j+1."""
        p, q = self.tile(j).above_pq
        return q if p == self.tile(j + 1).diagonal else p

    @property
    def interior_edges(self) -> tuple[str, ...]:
        return tuple(self.interior(j) for j in range(1, self.d))

    @property
    def glue_dirs(self) -> tuple[str, ...]:
        return tuple(NORTH if self.interior(j) == self.north(j) else EAST
                     for j in range(1, self.d))

    def subgraph(self, i: int, j: int) -> SnakeGraph:
        if not 1 <= i <= j <= self.d:
            raise ValidationError(f"Tile range [{i}, {j}] outside 1..{self.d}")
        return SnakeGraph(self.tiles[i - 1:j])

    def reversed(self) -> SnakeGraph:
        if self.is_edge:
            return self
        return SnakeGraph(tuple(tile.flipped() for tile in reversed(self.tiles)))

    def __add__(self, other: SnakeGraph) -> SnakeGraph:
        return SnakeGraph(self.tiles + other.tiles)

    def __str__(self) -> str:
        if self.is_edge:
            return f"[{self.edge}]"
        return ",".join(self.diagonals)


@dataclass(frozen=True)
class SignFunction:
    """One of the two sign functions of a snake graph.

    Polarity +1 is the canonical function: in the entry triangle of a tile
    p is + and q is -, in the exit triangle p is - and q is +. Under it
    σ_j is + exactly when the arc turns through a direct arrow.
    """
    graph: SnakeGraph
    polarity: int = 1

    def below_sign(self, j: int, label: str) -> int:
        p, q = self.graph.tile(j).below_pq
        if label not in (p, q):
            raise ValidationError(f"{label} is not an entry edge of tile {j}")
        return self.polarity if label == p else -self.polarity

    def above_sign(self, j: int, label: str) -> int:
        p, q = self.graph.tile(j).above_pq
        if label not in (p, q):
            raise ValidationError(f"{label} is not an exit edge of tile {j}")
        return -self.polarity if label == p else self.polarity

    def interior(self, j: int) -> int:
        return self.above_sign(j, self.graph.interior(j))

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(self.interior(j) for j in range(1, self.graph.d))

    def southwest_edge(self, sign: int) -> str:
        """The entry edge of tile 1 carrying `sign`."""
        p, q = self.graph.tile(1).below_pq
        return p if self.polarity == sign else q

    def northeast_edge(self, sign: int) -> str:
        """The exit edge of the last tile carrying `sign`."""
        p, q = self.graph.tile(self.graph.d).above_pq
        return q if self.polarity == sign else p

    def negated(self) -> SignFunction:
        return SignFunction(self.graph, -self.polarity)

    def reversed(self) -> SignFunction:
        """The same signs read on the reversed graph."""
        return SignFunction(self.graph.reversed(), -self.polarity)


def sign_functions(G: SnakeGraph) -> tuple[SignFunction, SignFunction]:
    return SignFunction(G, 1), SignFunction(G, -1)


# ---------------------------------------------------------------------------- #
#   Construction
# ---------------------------------------------------------------------------- #

def _assemble(T: Triangulation, diagonals: list[str], links: list[int]) -> SnakeGraph:
    """Tiles for the crossed arcs given the triangle between each pair."""
    if len(diagonals) == 1:
        first, second = T.triangles_of(diagonals[0])
        entries, exits = [first], [second]
    else:
        entries = [T.other_triangle(diagonals[0], links[0])] + links
        exits = links + [T.other_triangle(diagonals[-1], links[-1])]

    tiles = []
    for j, (label, below, above) in enumerate(zip(diagonals, entries, exits)):
        if below == above:
            raise ValidationError(f"Arc enters and leaves {label} through the "
                                  "same triangle", position=j)
        tiles.append(Tile(label, below, T.turn(below, label),
                          above, T.turn(above, label)))
    return SnakeGraph(tuple(tiles))


def build_snake_graph(T: Triangulation, seq: list[str]) -> SnakeGraph:
    """Snake graph of the arc crossing `seq` in order.

    Args:
        T (Triangulation): The triangulation.
        seq (list[str]): Crossed internal edges.

    Returns:
        SnakeGraph: One tile per crossing.
    """
    if not seq:
        raise ValidationError("A crossing sequence needs at least one arc")
    for position, label in enumerate(seq):
        if not T.has_edge(label) or T.is_boundary(label):
            raise ValidationError(f"{label} is not an internal edge", position=position)

    links = []
    for position, (a, b) in enumerate(zip(seq, seq[1:])):
        shared = T.shared_triangles(a, b) if a != b else ()
        if len(shared) != 1:
            raise ValidationError(f"{a} and {b} do not share exactly one triangle",
                                  position=position)
        links.append(shared[0])
    return _assemble(T, list(seq), links)


def snake_graph_of_string(Q: QuiverWithPotential, w: StringWord) -> SnakeGraph:
    """Snake graph of the arc of a string, read off its letters."""
    links = [Q.arrow(letter.arrow).triangle for letter in w.letters]
    return _assemble(Q.triangulation, list(w.vertices), links)


def sign_function_from_string(G: SnakeGraph, w: StringWord) -> SignFunction:
    """The sign function with f(σ_i) = + exactly when letter i is direct."""
    if G.diagonals != w.vertices:
        raise ValidationError("String and snake graph cross different arcs")
    if not w.letters:
        return SignFunction(G, 1)

    polarity = 1 if SignFunction(G, 1).interior(1) == (1 if w.letters[0].direct else -1) \
        else -1
    f = SignFunction(G, polarity)
    for j, letter in enumerate(w.letters, start=1):
        if f.interior(j) != (1 if letter.direct else -1):
            raise ValidationError("String directions disagree with the snake graph",
                                  position=j - 1)
    return f


def string_from_signed_snake_graph(G: SnakeGraph, f: SignFunction,
                                   Q: QuiverWithPotential) -> StringWord:
    """Read the string back: diagonals give the vertices, signs the directions.

    Raises a ValidationError when (G, f) does not come from a string.
    """
    if G.is_edge:
        raise ValidationError(f"Single edge graph [{G.edge}] is an edge of the "
                              "triangulation, not a string")
    raw = []
    for j in range(1, G.d):
        a, b = G.tile(j).diagonal, G.tile(j + 1).diagonal
        triangle = G.tile(j).above
        arrows = [arrow for arrow in Q.arrows if arrow.triangle == triangle
                  and {arrow.source, arrow.target} == {a, b}]
        if len(arrows) != 1:
            raise ValidationError(f"No arrow joins {a} and {b} in triangle {triangle}",
                                  position=j - 1)
        direct = f.interior(j) == 1
        if (arrows[0].source == a) != direct:
            raise ValidationError("Sign function points against the arrow "
                                  f"{arrows[0]}", position=j - 1)
        raw.append((arrows[0].id, direct))
    return validate_string(Q, raw, base_vertex=G.tile(1).diagonal)


# ---------------------------------------------------------------------------- #
#   Overlaps
# ---------------------------------------------------------------------------- #

@dataclass(frozen=True, order=True)
class Overlap:
    """Tiles s..t of G1 agree with tiles s_prime..t_prime of G2, where G2 is
    read backwards when `reversed` is set (indices then refer to the
    reversed graph)."""
    s: int
    s_prime: int
    reversed: bool
    t: int
    t_prime: int

    @property
    def orientation(self) -> str:
        return "reversed" if self.reversed else "same"

    @property
    def size(self) -> int:
        return self.t - self.s + 1


def _orient(G: SnakeGraph, reverse: bool) -> SnakeGraph:
    return G.reversed() if reverse else G


def enumerate_overlaps(G1: SnakeGraph, G2: SnakeGraph,
                       same_arc: bool = False) -> list[Overlap]:
    """All maximal common pieces of two snake graphs.

    Args:
        G1 (SnakeGraph): First graph.
        G2 (SnakeGraph): Second graph, matched in both directions.
        same_arc (bool): G1 and G2 are two copies of one arc. The identity
            match is dropped and each mirror pair is reported once.

    Returns:
        list[Overlap]: Ordered by (s, s', orientation).
    """
    if G1.is_edge or G2.is_edge:
        return []

    d1, d2 = G1.d, G2.d
    found = []
    for reverse in (False, True):
        A, B = G1.tiles, _orient(G2, reverse).tiles
        for i in range(d1):
            for j in range(d2):
                if A[i] != B[j]:
                    continue
                if i > 0 and j > 0 and A[i - 1] == B[j - 1]:
                    continue
                k = 0
                while i + k < d1 and j + k < d2 and A[i + k] == B[j + k]:
                    k += 1
                ov = Overlap(i + 1, j + 1, reverse, i + k, j + k)
                if same_arc:
                    if not reverse and i == j:
                        continue
                    if reverse:
                        mirror = Overlap(d2 + 1 - ov.t_prime, d1 + 1 - ov.t, True,
                                         d2 + 1 - ov.s_prime, d1 + 1 - ov.s)
                    else:
                        mirror = Overlap(ov.s_prime, ov.s, False, ov.t_prime, ov.t)
                    if mirror < ov:
                        continue
                found.append(ov)

    return sorted(found)


def is_crossing_overlap(G1: SnakeGraph, f1: SignFunction | None,
                        G2: SnakeGraph, f2: SignFunction | None,
                        ov: Overlap) -> bool:
    """Whether an overlap witnesses a crossing of the two arcs.

    Condition (1): the overlap is entered and left on one graph with
    opposite signs. Condition (2): the graphs are staggered, one starting
    inside the overlap and the other ending inside it, with matching signs.
    """
    f1 = f1 or SignFunction(G1, 1)
    f2 = f2 or SignFunction(G2, 1)
    if ov.reversed:
        G2, f2 = G2.reversed(), f2.reversed()

    # Agree with f1 on the shared tiles
    p = G1.tile(ov.s).below_pq[0]
    if f1.below_sign(ov.s, p) != f2.below_sign(ov.s_prime, p):
        f2 = f2.negated()

    s, t, s2, t2 = ov.s, ov.t, ov.s_prime, ov.t_prime
    d1, d2 = G1.d, G2.d

    if 1 < s and t < d1 and f1.interior(s - 1) == -f1.interior(t):
        return True
    if 1 < s2 and t2 < d2 and f2.interior(s2 - 1) == -f2.interior(t2):
        return True
    if s == 1 and t < d1 and s2 > 1 and t2 == d2 \
            and f1.interior(t) == f2.interior(s2 - 1):
        return True
    if s > 1 and t == d1 and s2 == 1 and t2 < d2 \
            and f1.interior(s - 1) == f2.interior(t2):
        return True
    return False


def _edge(label: str, T: Triangulation | None) -> SnakeGraph:
    if T is None:
        return SnakeGraph(edge=label)
    return SnakeGraph.single_edge(T, label)


def resolve_overlap(G1: SnakeGraph, G2: SnakeGraph, ov: Overlap,
                    T: Triangulation | None = None
                    ) -> tuple[SnakeGraph, SnakeGraph, SnakeGraph, SnakeGraph]:
    """Resolve a crossing overlap into (G3, G4, G5, G6).

    Args:
        G1 (SnakeGraph): First graph.
        G2 (SnakeGraph): Second graph, unoriented; `ov` says how to read it.
        ov (Overlap): A crossing overlap of the two.
        T (Triangulation | None): Used to flag single-edge outputs that
            are boundary segments.

    Returns:
        tuple: G3 and G4 through the overlap, G5 and G6 around it.
    """
    B_graph = _orient(G2, ov.reversed)
    if not is_crossing_overlap(G1, None, B_graph, None,
                               Overlap(ov.s, ov.s_prime, False, ov.t, ov.t_prime)):
        raise ValidationError("Overlap is not a crossing overlap")

    f1, f2 = SignFunction(G1, 1), SignFunction(B_graph, 1)
    A, B = G1.tiles, B_graph.tiles
    s, t, s2, t2 = ov.s, ov.t, ov.s_prime, ov.t_prime
    d1, d2 = G1.d, B_graph.d

    G3 = SnakeGraph(A[:t] + B[t2:])
    G4 = SnakeGraph(B[:t2] + A[t:])

    if s > 1 and s2 > 1:
        G5 = SnakeGraph(A[:s - 1]) + SnakeGraph(B[:s2 - 1]).reversed()
    elif s > 1:
        target = f1.interior(s - 1)
        G5 = next((G1.subgraph(1, i) for i in range(s - 2, 0, -1)
                   if f1.interior(i) == target), None) \
            or _edge(f1.southwest_edge(target), T)
    elif s2 > 1:
        target = f2.interior(s2 - 1)
        G5 = next((B_graph.subgraph(1, k).reversed() for k in range(s2 - 2, 0, -1)
                   if f2.interior(k) == target), None) \
            or _edge(f2.southwest_edge(target), T)
    else:
        raise ValidationError("Overlap starts both graphs; nothing to resolve")

    if t < d1 and t2 < d2:
        G6 = SnakeGraph(B[t2:]).reversed() + SnakeGraph(A[t:])
    elif t2 < d2:
        target = f2.interior(t2)
        G6 = next((B_graph.subgraph(k + 1, d2).reversed() for k in range(t2 + 1, d2)
                   if f2.interior(k) == target), None) \
            or _edge(f2.northeast_edge(target), T)
    elif t < d1:
        target = f1.interior(t)
        G6 = next((G1.subgraph(k + 1, d1) for k in range(t + 1, d1)
                   if f1.interior(k) == target), None) \
            or _edge(f1.northeast_edge(target), T)
    else:
        raise ValidationError("Overlap ends both graphs; nothing to resolve")

    return G3, G4, G5, G6


# ---------------------------------------------------------------------------- #
#   Grafting
# ---------------------------------------------------------------------------- #

@dataclass(frozen=True)
class Graft:
    """G2 (read backwards if `g2_reversed`) grafted on G1 (read backwards
    if `g1_reversed`) at tile s along the edge `delta`."""
    case: int
    s: int
    delta: str
    g1_reversed: bool
    g2_reversed: bool


def _shared_edge(G1: SnakeGraph, s: int, G2: SnakeGraph) -> str | None:
    top, bottom = G1.tile(s), G2.tile(1)
    if top.above != bottom.below:
        return None
    common = set(top.above_pq) & set(bottom.below_pq)
    return common.pop() if len(common) == 1 else None


def graft(G1: SnakeGraph, f1: SignFunction | None, G2: SnakeGraph,
          f2: SignFunction | None, s: int, delta: str,
          T: Triangulation | None = None
          ) -> tuple[SnakeGraph, SnakeGraph, SnakeGraph, SnakeGraph]:
    """Graft G2 on G1 at tile s along the shared edge delta.

    Case 1 (s = d) glues G2 after the last tile; Case 2 (s < d) glues G2
    on the exit triangle of tile s, where G2 starts at the edge σ_s.

    Returns:
        tuple: (G3, G4, G5, G6).
    """
    f1 = f1 or SignFunction(G1, 1)
    f2 = f2 or SignFunction(G2, 1)
    d1, d2 = G1.d, G2.d
    if not 1 <= s <= d1:
        raise ValidationError(f"Graft position {s} outside 1..{d1}")
    if _shared_edge(G1, s, G2) != delta:
        raise ValidationError(f"{delta} is not the shared edge of the graft")
    target = f1.above_sign(s, delta)
    if f2.below_sign(1, delta) != target:
        raise ValidationError(f"Sign functions disagree on {delta}")

    def before(limit: int) -> SnakeGraph:
        # last interior edge up to `limit` with the sign of delta, else SW
        for i in range(limit, 0, -1):
            if f1.interior(i) == target:
                return G1.subgraph(1, i)
        return _edge(f1.southwest_edge(target), T)

    if s == d1:
        if G2.tile(1).diagonal == G1.tile(d1).diagonal:
            raise ValidationError("Graft would glue a tile to itself")
        G3 = G1 + G2
        G4 = _edge(delta, T)
        G5 = before(d1 - 1)
        G6 = next((G2.subgraph(k + 1, d2) for k in range(1, d2)
                   if f2.interior(k) == target), None) \
            or _edge(f2.northeast_edge(target), T)
        return G3, G4, G5, G6

    if G2.tile(1).diagonal != G1.interior(s):
        raise ValidationError("Inner graft must start at the interior edge σ_s")
    G3 = G1.subgraph(1, s) + G2
    G4 = next((G1.subgraph(k + 1, d1) for k in range(s + 1, d1)
               if f1.interior(k) == target), None) \
        or _edge(f1.northeast_edge(target), T)
    G5 = before(s - 1)
    G6 = G2.reversed() + G1.subgraph(s + 1, d1)
    return G3, G4, G5, G6


def enumerate_grafts(G1: SnakeGraph, G2: SnakeGraph,
                     cases: tuple[int, ...] = (1, 2)) -> list[Graft]:
    """Every grafting configuration of G2 on G1.

    Case 1 pairs an end of G1 with an end of G2 in a common triangle.
    Case 2 takes G1 as read and grafts G2 along each interior edge of G1.
    """
    if G1.is_edge or G2.is_edge:
        return []

    found = []
    if 1 in cases:
        for r1 in (False, True):
            A = _orient(G1, r1)
            for r2 in (False, True):
                B = _orient(G2, r2)
                if B.tile(1).diagonal == A.tile(A.d).diagonal:
                    continue
                delta = _shared_edge(A, A.d, B)
                if delta is not None:
                    found.append(Graft(1, A.d, delta, r1, r2))

    if 2 in cases:
        for s in range(1, G1.d):
            for r2 in (False, True):
                B = _orient(G2, r2)
                if B.tile(1).diagonal != G1.interior(s):
                    continue
                delta = _shared_edge(G1, s, B)
                if delta is not None:
                    found.append(Graft(2, s, delta, False, r2))
    return found


def resolve_graft(G1: SnakeGraph, G2: SnakeGraph, g: Graft,
                  T: Triangulation | None = None
                  ) -> tuple[SnakeGraph, SnakeGraph, SnakeGraph, SnakeGraph]:
    A, B = _orient(G1, g.g1_reversed), _orient(G2, g.g2_reversed)
    return graft(A, None, B, None, g.s, g.delta, T)


def intersection_number(G1: SnakeGraph, G2: SnakeGraph, same_arc: bool = False) -> int:
    """Crossings of the two arcs counted on their snake graphs.

    Each crossing overlap counts once, twice for two copies of one arc.
    Grafts count once per configuration: Case 1 on G1 (which already
    covers every end pairing) and Case 2 on either graph.
    """
    overlaps = [ov for ov in enumerate_overlaps(G1, G2, same_arc)
                if is_crossing_overlap(G1, None, G2, None, ov)]
    grafts = enumerate_grafts(G1, G2) + enumerate_grafts(G2, G1, cases=(2,))
    total = len(overlaps) * (2 if same_arc else 1) + len(grafts)
    logger.debug("Int: %d crossing overlaps, %d grafts", len(overlaps), len(grafts))
    return total


# ---------------------------------------------------------------------------- #
#   Rendering
# ---------------------------------------------------------------------------- #

def to_json(G: SnakeGraph) -> dict:
    if G.is_edge:
        return {"edge": G.edge, "boundary": G.boundary, "tiles": []}
    dirs = G.glue_dirs
    return {"tiles": [{"diagonal": G.tile(j).diagonal,
                       "north": G.north(j), "east": G.east(j),
                       "south": G.south(j), "west": G.west(j),
                       "rel": G.rel(j),
                       "glue": dirs[j - 1] if j < G.d else None}
                      for j in range(1, G.d + 1)]}


def render_text(G: SnakeGraph) -> str:
    """Staircase picture, north up, one bracketed cell per tile."""
    if G.is_edge:
        return f"[{G.edge}] ({'boundary segment' if G.boundary else 'arc of T'})"

    x = y = 0
    cells = {(0, 0): G.tile(1).diagonal}
    for j, direction in enumerate(G.glue_dirs, start=2):
        if direction == NORTH:
            y += 1
        else:
            x += 1
        cells[(x, y)] = G.tile(j).diagonal

    width = max(len(label) for label in cells.values()) + 2
    rows = []
    for row in range(y, -1, -1):
        line = "".join(f"[{cells[(col, row)].center(width - 2)}]"
                       if (col, row) in cells else " " * width
                       for col in range(x + 1))
        rows.append(line.rstrip())
    return "\n".join(rows)
