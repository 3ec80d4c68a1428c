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
# Description:  Crossings of string modules, their smoothings, Ext^1 bases
#               and the cluster category triangles they give. Every count
#               is checked against the snake graph route before it is
#               returned.
#
# ============================================================================ #
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import TYPE_CHECKING

from libs.errors import ConsistencyError, ValidationError
from libs.snake_graph import (Overlap, SignFunction, SnakeGraph, graft,
                              intersection_number, resolve_overlap,
                              sign_function_from_string, snake_graph_of_string,
                              string_from_signed_snake_graph)
from libs.strings import (ZERO, BoundaryArc, Letter, StringModule, StringWord,
                          ZeroModule, breaks_string, canonicalize, concatenate,
                          delete_cohook_end, delete_cohook_start,
                          delete_hook_end, delete_hook_start,
                          dimension_vector, format_string, invert, make_letter,
                          substring, total_dim)

if TYPE_CHECKING:
    from libs.surface import QuiverWithPotential

logger = logging.getLogger(__name__)

MODULE = "module"
ARROW = "arrow"
THREE_CYCLE = "3-cycle"
KIND_ORDER = {MODULE: 0, ARROW: 1, THREE_CYCLE: 2}

Smoothed = StringWord | ZeroModule | BoundaryArc


@dataclass(frozen=True)
class Crossing:
    """A directed crossing: `crosser` crosses `crossee`.

    Both words are stored in the orientation the crossing is read in.
    Module: the overlap is letters m_start..m_start+length-1 of the
    crosser and n_start.. of the crossee. Arrow: `arrow` joins the end of
    the crosser to the start of the crossee. 3-cycle: `arrow` is the
    letter at m_start of the crosser and `cycle` is (γ, α, β) with the
    crossee starting at the target of β.
    """
    kind: str
    direction: tuple[int, int]
    crosser: StringWord
    crossee: StringWord
    m_start: int = 0
    n_start: int = 0
    length: int = 0
    arrow: str | None = None
    cycle: tuple[str, str, str] | None = None

    @property
    def overlap(self) -> StringWord:
        return substring(self.crosser, self.m_start, self.m_start + self.length)

    @property
    def empty_sides(self) -> dict[str, bool]:
        """Which of P1, S1, P2, S2 are empty for a module crossing."""
        return {"P1": self.m_start == 0,
                "S1": self.m_start + self.length == self.crosser.length,
                "P2": self.n_start == 0,
                "S2": self.n_start + self.length == self.crossee.length}

    @property
    def sort_key(self) -> tuple:
        return (KIND_ORDER[self.kind], self.direction, self.m_start, self.n_start,
                self.length, self.arrow or "", format_string(self.crosser),
                format_string(self.crossee))

    def describe(self) -> str:
        if self.kind == MODULE:
            return f"module ({format_string(self.overlap).strip('()')})"
        if self.kind == ARROW:
            return f"arrow {self.arrow}"
        return f"3-cycle ({', '.join(self.cycle)})"

    def to_json(self) -> dict:
        data = {"crosser": format_string(self.crosser),
                "crossee": format_string(self.crossee)}
        if self.kind == MODULE:
            data.update(overlap=format_string(self.overlap), m_start=self.m_start,
                        n_start=self.n_start, empty=self.empty_sides)
        elif self.kind == ARROW:
            data.update(arrow=self.arrow)
        else:
            data.update(cycle=list(self.cycle), position=self.m_start)
        return {"kind": self.kind, "direction": list(self.direction), "data": data}


@dataclass(frozen=True)
class SmoothingResult:
    w3: Smoothed
    w4: Smoothed
    w5: Smoothed
    w6: Smoothed

    def to_json(self) -> dict:
        return {name: format_string(canonical(value))
                for name, value in zip(("w3", "w4", "w5", "w6"),
                                       (self.w3, self.w4, self.w5, self.w6))}


@dataclass(frozen=True)
class ShortExactSequence:
    sub: StringModule
    middle: tuple[StringModule, ...]
    quotient: StringModule
    provenance: Crossing


@dataclass(frozen=True)
class Triangle:
    """source -> middle -> target -> source[1] in the cluster category."""
    source: Smoothed
    middle: tuple[Smoothed, ...]
    target: Smoothed
    provenance: Crossing

    def __str__(self) -> str:
        middle = " + ".join(format_string(m) for m in self.middle) or "0"
        return f"{format_string(self.source)} -> {middle} -> " \
            f"{format_string(self.target)} -> {format_string(self.source)}[1]"


@dataclass(frozen=True)
class ExtReport:
    dim_MN: int
    dim_NM: int
    Int: int
    k: int
    k_prime: int
    self_pair: bool

    def to_json(self) -> dict:
        return {"dim_MN": self.dim_MN, "dim_NM": self.dim_NM, "Int": self.Int,
                "k": self.k, "k_prime": self.k_prime}


def canonical(value: Smoothed) -> Smoothed:
    return canonicalize(value) if isinstance(value, StringWord) else value


def _orientations(w: StringWord) -> list[tuple[StringWord, bool]]:
    return [(w, False), (invert(w), True)] if w.letters else [(w, False)]


# ---------------------------------------------------------------------------- #
#   Classification
# ---------------------------------------------------------------------------- #

def _sides_agree(Q: QuiverWithPotential, v: str,
                 mb: Letter | None, ma: Letter | None,
                 nb: Letter | None, na: Letter | None) -> bool:
    """Whether the two words leave v backwards through the same triangle.

    A word lacking a letter on one side leaves through the triangle its
    other letter does not use.
    """
    arrow = Q.arrow
    if mb and nb:
        return Q.same_side(v, arrow(mb.arrow), arrow(nb.arrow))
    if mb:
        return not Q.same_side(v, arrow(mb.arrow), arrow(na.arrow))
    if nb:
        return not Q.same_side(v, arrow(ma.arrow), arrow(nb.arrow))
    return Q.same_side(v, arrow(ma.arrow), arrow(na.arrow))


def _module_crossings(Q: QuiverWithPotential, M: StringWord, N: StringWord,
                      direction: tuple[int, int], same: bool) -> list[Crossing]:
    found = []
    for No, n_reversed in _orientations(N):
        for i, v in enumerate(M.vertices):
            for j, u in enumerate(No.vertices):
                if u != v:
                    continue
                if i > 0 and j > 0 and M.letters[i - 1] == No.letters[j - 1]:
                    continue
                if same and not n_reversed and i == j:
                    continue
                k = 0
                while i + k < M.length and j + k < No.length \
                        and M.letters[i + k] == No.letters[j + k]:
                    k += 1

                mb = M.letters[i - 1] if i > 0 else None
                ma = M.letters[i + k] if i + k < M.length else None
                nb = No.letters[j - 1] if j > 0 else None
                na = No.letters[j + k] if j + k < No.length else None

                if k == 0:
                    if M.letters and No.letters:
                        if not _sides_agree(Q, v, mb, ma, nb, na):
                            continue
                    elif n_reversed:
                        continue

                into_w = (mb is None or mb.direct) and (ma is None or not ma.direct)
                out_of_w = (nb is None or not nb.direct) and (na is None or na.direct)
                staggered = not (mb is None and nb is None) \
                    and not (ma is None and na is None)
                if into_w and out_of_w and staggered:
                    found.append(Crossing(MODULE, direction, M, No, i, j, k))
    return found


def _arrow_crossings(Q: QuiverWithPotential, M: StringWord, N: StringWord,
                     direction: tuple[int, int]) -> list[Crossing]:
    found = []
    for Mo, _ in _orientations(M):
        for No, _ in _orientations(N):
            for arrow in Q.arrows_from_to(Mo.target, No.source):
                letter = make_letter(Q, arrow.id, True)
                if Mo.letters and breaks_string(Q, Mo.letters[-1], letter):
                    continue
                if No.letters and breaks_string(Q, letter, No.letters[0]):
                    continue
                found.append(Crossing(ARROW, direction, Mo, No,
                                      m_start=Mo.length, arrow=arrow.id))
    return found


def _three_cycle_crossings(Q: QuiverWithPotential, M: StringWord, N: StringWord,
                           direction: tuple[int, int]) -> list[Crossing]:
    found = []
    for Mo, _ in _orientations(M):
        for p, letter in enumerate(Mo.letters):
            if not letter.direct:
                continue
            cycle = Q.cycle_through(letter.arrow)
            if cycle is None:
                continue
            alpha, beta, gamma = cycle
            c = Q.arrow(beta).target
            for No, _ in _orientations(N):
                if No.source != c:
                    continue
                if No.letters and No.letters[0].arrow in (beta, gamma):
                    continue
                found.append(Crossing(THREE_CYCLE, direction, Mo, No, m_start=p,
                                      arrow=alpha, cycle=(gamma, alpha, beta)))
    return found


def _directed_crossings(Q: QuiverWithPotential, M: StringWord, N: StringWord,
                        direction: tuple[int, int], same: bool) -> list[Crossing]:
    return _module_crossings(Q, M, N, direction, same) \
        + _arrow_crossings(Q, M, N, direction) \
        + _three_cycle_crossings(Q, M, N, direction)


def is_same_arc(w1: StringWord, w2: StringWord) -> bool:
    return canonicalize(w1) == canonicalize(w2)


def enumerate_crossings(Q: QuiverWithPotential, w1: StringWord,
                        w2: StringWord) -> list[Crossing]:
    """All crossings of the two strings in both directions.

    For two copies of one string each self-crossing is listed once, with
    direction (1, 1).

    Returns:
        list[Crossing]: Sorted by kind, direction and positions.
    """
    if is_same_arc(w1, w2):
        found = _directed_crossings(Q, w1, w1, (1, 1), same=True)
    else:
        found = _directed_crossings(Q, w1, w2, (1, 2), same=False) \
            + _directed_crossings(Q, w2, w1, (2, 1), same=False)
    found.sort(key=lambda c: c.sort_key)
    logger.debug("%s vs %s: %d crossings", format_string(w1), format_string(w2),
                 len(found))
    return found


# ---------------------------------------------------------------------------- #
#   Smoothing
# ---------------------------------------------------------------------------- #

def find_cycle_completion(Q: QuiverWithPotential, alpha: str, gamma: str) -> str:
    """The arrow σ closing alpha, gamma into a 3-cycle of the potential."""
    first, second = Q.arrow(alpha), Q.arrow(gamma)
    if first.target != second.source:
        raise ValidationError(f"{alpha} and {gamma} do not compose")
    cycle = Q.cycle_through(alpha)
    if cycle is None or cycle[1] != gamma or not Q.is_relation(alpha, gamma):
        raise ValidationError(f"{alpha}, {gamma} lie in no 3-cycle together")
    return cycle[2]


def _inverse_letter(Q: QuiverWithPotential, arrow_id: str) -> Letter:
    return make_letter(Q, arrow_id, False)


def _smooth_module(Q: QuiverWithPotential, c: Crossing) -> SmoothingResult:
    M, N = c.crosser, c.crossee
    i, j, k = c.m_start, c.n_start, c.length
    w = c.overlap
    P1, S1 = M.letters[:i], M.letters[i + k:]
    P2, S2 = N.letters[:j], N.letters[j + k:]

    w3 = StringWord(M.base_vertex, P1 + w.letters + S2)
    w4 = StringWord(N.base_vertex, P2 + w.letters + S1)

    if P1 and P2:
        alpha, gamma = P1[-1], P2[-1]
        sigma = find_cycle_completion(Q, alpha.arrow, gamma.arrow)
        w5 = concatenate(substring(M, 0, i - 1), _inverse_letter(Q, sigma),
                         invert(substring(N, 0, j - 1)))
    elif P1:
        w5 = delete_cohook_end(substring(M, 0, i - 1))
    elif P2:
        w5 = delete_hook_end(substring(N, 0, j - 1))
    else:
        raise ConsistencyError("Module crossing with both predecessors empty")

    if S1 and S2:
        beta, delta = S1[0], S2[0]
        rho = find_cycle_completion(Q, beta.arrow, delta.arrow)
        w6 = concatenate(invert(substring(M, i + k + 1, M.length)),
                         _inverse_letter(Q, rho),
                         substring(N, j + k + 1, N.length))
    elif S1:
        w6 = delete_cohook_start(substring(M, i + k + 1, M.length))
    elif S2:
        w6 = delete_hook_start(substring(N, j + k + 1, N.length))
    else:
        raise ConsistencyError("Module crossing with both successors empty")

    return SmoothingResult(w3, w4, w5, w6)


def _smooth_arrow(Q: QuiverWithPotential, c: Crossing) -> SmoothingResult:
    M, N = c.crosser, c.crossee
    arrow = Q.arrow(c.arrow)
    T = Q.triangulation
    w3 = concatenate(M, make_letter(Q, arrow.id, True), N)
    w4 = BoundaryArc(arrow.third, T.is_boundary(arrow.third))
    return SmoothingResult(w3, w4, delete_cohook_end(M), delete_hook_start(N))


def _smooth_three_cycle(Q: QuiverWithPotential, c: Crossing) -> SmoothingResult:
    M, N = c.crosser, c.crossee
    gamma, alpha, beta = c.cycle
    p = c.m_start
    pred = substring(M, 0, p)
    with_alpha = substring(M, p, M.length)
    w3 = concatenate(pred, _inverse_letter(Q, gamma), N)
    w4 = delete_cohook_start(with_alpha)
    w5 = delete_hook_end(substring(M, 0, p + 1))
    w6 = concatenate(invert(N), _inverse_letter(Q, beta), substring(M, p + 1, M.length))
    return SmoothingResult(w3, w4, w5, w6)


def smooth(Q: QuiverWithPotential, crossing: Crossing) -> SmoothingResult:
    """The four strings a crossing resolves into.

    Args:
        Q (QuiverWithPotential): The quiver.
        crossing (Crossing): A crossing from `enumerate_crossings`.

    Returns:
        SmoothingResult: w3, w4 through the crossing and w5, w6 around it.
    """
    if crossing.kind == MODULE:
        return _smooth_module(Q, crossing)
    if crossing.kind == ARROW:
        return _smooth_arrow(Q, crossing)
    return _smooth_three_cycle(Q, crossing)


# ---------------------------------------------------------------------------- #
#   Snake graph route
# ---------------------------------------------------------------------------- #

def _flip_single(G: SnakeGraph, ok) -> SnakeGraph:
    if ok(G):
        return G
    if G.d == 1 and ok(G.reversed()):
        return G.reversed()
    raise ConsistencyError("Snake graph does not line up with the crossing")


def resolve_crossing_snake(Q: QuiverWithPotential, crossing: Crossing
                           ) -> tuple[SnakeGraph, SnakeGraph, SnakeGraph, SnakeGraph]:
    """Resolve a crossing on the snake graphs of its two strings."""
    T = Q.triangulation
    G1 = snake_graph_of_string(Q, crossing.crosser)
    G2 = snake_graph_of_string(Q, crossing.crossee)

    if crossing.kind == MODULE:
        s, s2 = crossing.m_start + 1, crossing.n_start + 1
        t, t2 = s + crossing.length, s2 + crossing.length
        for A in (G1, G1.reversed()) if G1.d == 1 else (G1,):
            for B in (G2, G2.reversed()) if G2.d == 1 else (G2,):
                if A.tiles[s - 1:t] == B.tiles[s2 - 1:t2]:
                    return resolve_overlap(A, B, Overlap(s, s2, False, t, t2), T)
        raise ConsistencyError("Overlap of the strings is not an overlap of "
                               "their snake graphs")

    if crossing.kind == ARROW:
        triangle = Q.arrow(crossing.arrow).triangle
        G1 = _flip_single(G1, lambda G: G.tile(G.d).above == triangle)
        G2 = _flip_single(G2, lambda G: G.tile(1).below == triangle)
        return graft(G1, None, G2, None, G1.d, Q.arrow(crossing.arrow).third, T)

    s = crossing.m_start + 1
    triangle = G1.tile(s).above
    G2 = _flip_single(G2, lambda G: G.tile(1).below == triangle)
    return graft(G1, None, G2, None, s, G1.tile(s + 1).diagonal, T)


def snake_to_object(Q: QuiverWithPotential, G: SnakeGraph) -> Smoothed:
    """The arc of a snake graph: a string, an arc of T, or zero."""
    if G.is_edge:
        return ZERO if G.boundary else BoundaryArc(G.edge, False)
    return canonicalize(string_from_signed_snake_graph(G, SignFunction(G, 1), Q))


def _split(values) -> tuple[list[str], int, set[str]]:
    words, zeros, labels = [], 0, set()
    for value in values:
        if isinstance(value, StringWord):
            words.append(format_string(canonicalize(value)))
        else:
            zeros += 1
            if isinstance(value, BoundaryArc):
                labels.add(value.label)
    return sorted(words), zeros, labels


def check_dual_route(Q: QuiverWithPotential, crossing: Crossing,
                     smoothing: SmoothingResult | None = None
                     ) -> tuple[SnakeGraph, SnakeGraph, SnakeGraph, SnakeGraph]:
    """Raise unless the string and snake graph smoothings agree as multisets.

    Returns:
        tuple: The snake graph resolution (G3, G4, G5, G6).
    """
    smoothing = smoothing or smooth(Q, crossing)
    graphs = resolve_crossing_snake(Q, crossing)
    objects = [G.edge if G.is_edge else snake_to_object(Q, G) for G in graphs]

    for name, strings, snakes in (("w3/w4", (smoothing.w3, smoothing.w4), objects[:2]),
                                  ("w5/w6", (smoothing.w5, smoothing.w6), objects[2:])):
        words, zeros, labels = _split(strings)
        snake_words = sorted(format_string(o) for o in snakes if isinstance(o, StringWord))
        snake_edges = {o for o in snakes if isinstance(o, str)}
        if words != snake_words or zeros != len(snakes) - len(snake_words) \
                or not labels <= snake_edges:
            raise ConsistencyError(
                f"String and snake graph smoothings of {crossing.describe()} "
                f"disagree on {name}", strings=[format_string(s) for s in strings],
                snakes=[format_string(o) if isinstance(o, StringWord) else f"[{o}]"
                        for o in snakes])
    return graphs


def check_roundtrip(Q: QuiverWithPotential, w: StringWord):
    """Raise unless string -> (snake graph, sign) -> string is the identity."""
    G = snake_graph_of_string(Q, w)
    back = string_from_signed_snake_graph(G, sign_function_from_string(G, w), Q)
    if back != w:
        raise ConsistencyError(f"Roundtrip of {format_string(w)} gave "
                               f"{format_string(back)}")


def check_dimension_identities(Q: QuiverWithPotential, crossing: Crossing,
                               smoothing: SmoothingResult | None = None):
    """Raise if a smoothing breaks the dimension bookkeeping of its kind."""
    smoothing = smoothing or smooth(Q, crossing)
    both = total_dim(crossing.crosser) + total_dim(crossing.crossee)
    through = total_dim(smoothing.w3) + total_dim(smoothing.w4)
    around = total_dim(smoothing.w5) + total_dim(smoothing.w6)

    if crossing.kind == THREE_CYCLE:
        if through >= both:
            raise ConsistencyError(f"3-cycle smoothing keeps dimension {through}")
    elif through != both:
        raise ConsistencyError(f"Smoothing changes dimension {both} -> {through}")
    if around > both - 1:
        raise ConsistencyError(f"Outer smoothing too large: {around} > {both - 1}")


# ---------------------------------------------------------------------------- #
#   Ext and triangles
# ---------------------------------------------------------------------------- #

def _towards(crossing: Crossing, same: bool) -> bool:
    return same or crossing.direction == (1, 2)


def ext_basis(Q: QuiverWithPotential, wM: StringWord,
              wN: StringWord) -> list[ShortExactSequence]:
    """One non-split sequence 0 -> N -> middle -> M -> 0 per crossing of M
    over N in a module or an arrow."""
    same = is_same_arc(wM, wN)
    basis = []
    for crossing in enumerate_crossings(Q, wM, wN):
        if crossing.kind == THREE_CYCLE or not _towards(crossing, same):
            continue
        smoothing = smooth(Q, crossing)
        middle = tuple(dimension_vector(w) for w in (smoothing.w3, smoothing.w4)
                       if isinstance(w, StringWord))
        basis.append(ShortExactSequence(dimension_vector(wN), middle,
                                        dimension_vector(wM), crossing))
    return basis


def ext_dim(Q: QuiverWithPotential, wM: StringWord, wN: StringWord) -> ExtReport:
    """Ext^1 dimensions both ways, checked against Int of the arcs.

    Raises:
        ConsistencyError: The counts break Int = dim + dim + k + k'.
    """
    same = is_same_arc(wM, wN)
    counts = Counter((c.kind == THREE_CYCLE, c.direction)
                     for c in enumerate_crossings(Q, wM, wN))
    G1 = snake_graph_of_string(Q, wM)
    G2 = snake_graph_of_string(Q, wN)

    if same:
        dim = counts[(False, (1, 1))]
        k = counts[(True, (1, 1))]
        Int = intersection_number(G1, G1, same_arc=True)
        report = ExtReport(dim, dim, Int, k, k, True)
        if 2 * dim != Int - 2 * k:
            raise ConsistencyError("Self-crossing count breaks 2 dim = Int - 2k",
                                   **report.to_json())
        return report

    Int = intersection_number(G1, G2)
    report = ExtReport(counts[(False, (1, 2))], counts[(False, (2, 1))], Int,
                       counts[(True, (1, 2))], counts[(True, (2, 1))], False)
    if report.dim_MN + report.dim_NM != Int - report.k - report.k_prime:
        raise ConsistencyError("Crossing count breaks dim + dim' = Int - k - k'",
                               **report.to_json())
    return report


def cluster_triangles(Q: QuiverWithPotential, w1: StringWord,
                      w2: StringWord) -> list[tuple[Triangle, Triangle]]:
    """The two triangles each crossing gives in the cluster category.

    Middle terms come from the snake graph resolution, so single edges are
    kept apart: boundary segments vanish, arcs of T stay.
    """
    pairs = []
    for crossing in enumerate_crossings(Q, w1, w2):
        G3, G4, G5, G6 = check_dual_route(Q, crossing)
        gamma1 = canonicalize(crossing.crosser)
        gamma2 = canonicalize(crossing.crossee)

        def middle(graphs):
            found = [snake_to_object(Q, G) for G in graphs]
            return tuple(sorted((m for m in found if m != ZERO), key=format_string))

        pairs.append((Triangle(gamma2, middle((G3, G4)), gamma1, crossing),
                      Triangle(gamma1, middle((G5, G6)), gamma2, crossing)))
    return pairs


def ext_report(Q: QuiverWithPotential, w1: StringWord, w2: StringWord) -> dict:
    """Everything the `ext` command prints, in the JSON report layout."""
    crossings = enumerate_crossings(Q, w1, w2)
    smoothings = [smooth(Q, c) for c in crossings]
    report = ext_dim(Q, w1, w2)
    triangles = cluster_triangles(Q, w1, w2)

    def sequences(M, N):
        return [{"sub": format_string(ses.sub.word),
                 "middle": [format_string(m.word) for m in ses.middle],
                 "quotient": format_string(ses.quotient.word),
                 "crossing": ses.provenance.describe()}
                for ses in ext_basis(Q, M, N)]

    return {"crossings": [c.to_json() for c in crossings],
            "smoothings": [s.to_json() for s in smoothings],
            "ext": report.to_json(),
            "ses": {"MN": sequences(w1, w2),
                    "NM": [] if report.self_pair else sequences(w2, w1)},
            "triangles": [[str(first), str(second)] for first, second in triangles]}
