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
# Description:  Triangulated unpunctured marked surfaces and the gentle
#               quiver with potential they determine.
#
#               Triangles are given counterclockwise. Inside a triangle an
#               internal side x followed counterclockwise by an internal
#               side y contributes the arrow x -> y.
#
# ============================================================================ #
from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING

import networkx as nx

from libs.errors import ValidationError

if TYPE_CHECKING:
    from libs.strings import StringWord

logger = logging.getLogger(__name__)

# Characters reserved by the string grammar
RESERVED_LABEL = re.compile(r"[<>()\s]")


@dataclass(frozen=True)
class Edge:
    id: str
    boundary: bool


@dataclass(frozen=True)
class Triangulation:
    """Edges and counterclockwise triangles of a marked surface.

    Build through `build_triangulation` or `load_triangulation`, which check
    the incidence invariants. The raw constructor does not.
    """
    edges: tuple[Edge, ...]
    triangles: tuple[tuple[str, str, str], ...]
    name: str = field(default="", compare=False)

    @cached_property
    def _by_id(self) -> dict[str, Edge]:
        return {edge.id: edge for edge in self.edges}

    @cached_property
    def _incidence(self) -> dict[str, tuple[int, ...]]:
        slots: dict[str, list[int]] = {edge.id: [] for edge in self.edges}
        for index, triangle in enumerate(self.triangles):
            for side in triangle:
                slots[side].append(index)
        return {label: tuple(found) for label, found in slots.items()}

    @property
    def internal_edges(self) -> tuple[str, ...]:
        return tuple(edge.id for edge in self.edges if not edge.boundary)

    def has_edge(self, label: str) -> bool:
        return label in self._by_id

    def is_boundary(self, label: str) -> bool:
        return self._by_id[label].boundary

    def triangles_of(self, label: str) -> tuple[int, ...]:
        """Indices of the triangles having `label` as a side, in input order."""
        return self._incidence[label]

    def shared_triangles(self, a: str, b: str) -> tuple[int, ...]:
        return tuple(t for t in self.triangles_of(a) if b in self.triangles[t])

    def other_triangle(self, label: str, triangle: int) -> int:
        """The triangle on the far side of an internal edge."""
        first, second = self.triangles_of(label)
        return second if first == triangle else first

    def turn(self, triangle: int, label: str) -> tuple[str, str]:
        """The two remaining sides of `triangle`, counterclockwise after `label`.

        Args:
            triangle (int): Triangle index.
            label (str): One of its sides.

        Returns:
            tuple[str, str]: (p, q) with label, p, q counterclockwise.
        """
        x, y, z = self.triangles[triangle]
        if label == x:
            return y, z
        if label == y:
            return z, x
        if label == z:
            return x, y
        raise ValidationError(f"Edge {label} is not a side of triangle {triangle}")


@dataclass(frozen=True)
class Arrow:
    """An arrow of the quiver, remembering the triangle it was read from."""
    id: str
    source: str
    target: str
    triangle: int
    third: str

    def __str__(self) -> str:
        return f"{self.source}->{self.target}"


@dataclass(frozen=True)
class QuiverWithPotential:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    relations: frozenset[tuple[str, str]]
    cycles: tuple[tuple[str, str, str], ...]
    triangulation: Triangulation = field(compare=False, hash=False, repr=False)

    @cached_property
    def _arrows_by_id(self) -> dict[str, Arrow]:
        return {arrow.id: arrow for arrow in self.arrows}

    def arrow(self, arrow_id: str) -> Arrow:
        try:
            return self._arrows_by_id[arrow_id]
        except KeyError:
            raise ValidationError(f"Unknown arrow {arrow_id}") from None

    def arrows_from(self, vertex: str) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.source == vertex)

    def arrows_to(self, vertex: str) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.target == vertex)

    def arrows_from_to(self, source: str, target: str) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows
                     if a.source == source and a.target == target)

    def arrow_between(self, a: str, b: str) -> Arrow:
        """The unique arrow joining two vertices, in either direction."""
        found = self.arrows_from_to(a, b) + self.arrows_from_to(b, a)
        if not found:
            raise ValidationError(f"No arrow joins {a} and {b}")
        if len(found) > 1:
            raise ValidationError(f"Vertices {a} and {b} are joined by "
                                  f"{len(found)} arrows; the pair is ambiguous")
        return found[0]

    def is_relation(self, first: str, second: str) -> bool:
        """True when the path `first` then `second` lies in the ideal."""
        return (first, second) in self.relations

    def cycle_through(self, arrow_id: str) -> tuple[str, str, str] | None:
        """The 3-cycle containing the arrow, rotated so it comes first."""
        for cycle in self.cycles:
            if arrow_id in cycle:
                k = cycle.index(arrow_id)
                return cycle[k:] + cycle[:k]
        return None

    def same_side(self, vertex: str, a: Arrow, b: Arrow) -> bool:
        """Whether two arrows at `vertex` leave it through the same triangle.

        Every triangle at a vertex holds at most one arrow into it and one
        out of it, and an in/out pair of the same triangle is a relation.
        """
        if a.id == b.id:
            return True
        a_in, b_in = a.target == vertex, b.target == vertex
        if a_in == b_in:
            return False
        if a_in:
            return self.is_relation(a.id, b.id)
        return self.is_relation(b.id, a.id)


def build_triangulation(edges: list[tuple[str, bool]],
                        triangles: list[list[str]],
                        name: str = "") -> Triangulation:
    """Assemble a triangulation and check its incidence invariants.

    Args:
        edges (list): (label, boundary) pairs.
        triangles (list): Counterclockwise side triples.
        name (str): Display name.

    Returns:
        Triangulation: The validated triangulation.
    """
    seen = set()
    edge_records = []
    for label, boundary in edges:
        if not isinstance(label, str) or not label:
            raise ValidationError("Edge labels must be non-empty strings")
        if RESERVED_LABEL.search(label):
            raise ValidationError(
                f"Edge label {label!r} uses a character reserved by the string grammar")
        if label in seen:
            raise ValidationError(f"Edge {label} is declared twice")
        seen.add(label)
        edge_records.append(Edge(label, bool(boundary)))

    triples = []
    for index, triangle in enumerate(triangles):
        if len(triangle) != 3:
            raise ValidationError(f"Triangle {index} does not have three sides",
                                  position=index)
        for side in triangle:
            if side not in seen:
                raise ValidationError(f"Triangle {index} uses undeclared edge {side}",
                                      position=index)
        if len(set(triangle)) != 3:
            raise ValidationError(f"Triangle {index} repeats a side",
                                  position=index)
        triples.append(tuple(triangle))

    T = Triangulation(tuple(edge_records), tuple(triples), name)

    for edge in T.edges:
        count = len(T.triangles_of(edge.id))
        expected = 1 if edge.boundary else 2
        if count != expected:
            kind = "Boundary" if edge.boundary else "Internal"
            raise ValidationError(f"{kind} edge {edge.id} appears in {count} "
                                  f"triangle slots, expected {expected}")
    if not T.internal_edges:
        raise ValidationError("A triangulation needs at least one internal edge")

    marked_points(T)
    return T


def load_triangulation(document: str | dict, name: str = "") -> Triangulation:
    """Parse the JSON triangulation schema.

    Args:
        document (str | dict): JSON text, or the already decoded object.
        name (str): Display name.

    Returns:
        Triangulation: The validated triangulation.
    """
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as err:
            raise ValidationError(f"Triangulation is not valid JSON: {err}") from err

    if not isinstance(document, dict) or "edges" not in document \
            or "triangles" not in document:
        raise ValidationError("Triangulation needs \"edges\" and \"triangles\"")

    if not isinstance(document["edges"], list):
        raise ValidationError("\"edges\" must be a list of edge records")

    edges = []
    for record in document["edges"]:
        if not isinstance(record, dict) or "id" not in record \
                or not isinstance(record.get("boundary"), bool):
            raise ValidationError(f"Bad edge record {record!r}")
        edges.append((record["id"], record["boundary"]))

    triangles = document["triangles"]
    if not isinstance(triangles, list) or \
            not all(isinstance(t, list) for t in triangles):
        raise ValidationError("\"triangles\" must be a list of edge id lists")
    for index, triangle in enumerate(triangles):
        if not all(isinstance(side, str) for side in triangle):
            raise ValidationError(f"Triangle {index} has a side that is not an edge id",
                                  position=index)

    return build_triangulation(edges, triangles, name or document.get("name", ""))


def read_triangulation(path: str) -> Triangulation:
    """Load a triangulation document from disk."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as err:
        raise ValidationError(f"Could not read triangulation {path}: {err}") from err
    logger.debug("Loaded triangulation document %s", path)
    return load_triangulation(text)


def marked_points(T: Triangulation) -> tuple[int, int]:
    """Count marked points and boundary components by rotating around the
    corners of the triangles.

    A corner (t, k) sits between side k and side k+1 of triangle t. Turning
    around its vertex crosses side k+1 into the neighbouring triangle. A
    rotation that closes up without reaching the boundary is a puncture.

    Returns:
        tuple[int, int]: (marked points, boundary components).
    """
    def next_corner(t: int, k: int) -> tuple[int, int] | None:
        side = T.triangles[t][(k + 1) % 3]
        if T.is_boundary(side):
            return None
        other = T.other_triangle(side, t)
        return other, T.triangles[other].index(side)

    point_of: dict[tuple[int, int], int] = {}
    points = 0
    for t, triangle in enumerate(T.triangles):
        for k in range(3):
            if not T.is_boundary(triangle[k]) or (t, k) in point_of:
                continue
            corner = (t, k)
            while corner is not None:
                point_of[corner] = points
                corner = next_corner(*corner)
            points += 1

    if len(point_of) != 3 * len(T.triangles):
        raise ValidationError("Triangulation has an interior marked point; "
                              "punctured surfaces are not supported")

    # Boundary segments join the points at their two ends
    boundary_graph = nx.Graph()
    boundary_graph.add_nodes_from(range(points))
    for t, triangle in enumerate(T.triangles):
        for k, side in enumerate(triangle):
            if T.is_boundary(side):
                boundary_graph.add_edge(point_of[(t, (k - 1) % 3)], point_of[(t, k)])

    return points, nx.number_connected_components(boundary_graph)


def derive_quiver(T: Triangulation) -> QuiverWithPotential:
    """Read off the gentle quiver with potential of a triangulation.

    Args:
        T (Triangulation): A validated triangulation.

    Returns:
        QuiverWithPotential: Quiver, relations and the 3-cycles of the
            internal triangles.
    """
    arrows: list[Arrow] = []
    relations: set[tuple[str, str]] = set()
    cycles: list[tuple[str, str, str]] = []
    used_ids: dict[str, int] = {}

    for index, (x, y, z) in enumerate(T.triangles):
        made = []
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            if T.is_boundary(a) or T.is_boundary(b):
                continue
            arrow_id = f"{a}->{b}"
            # Parallel arrows from different triangles get a suffix
            if arrow_id in used_ids:
                used_ids[arrow_id] += 1
                arrow_id = f"{arrow_id}#{used_ids[arrow_id]}"
            else:
                used_ids[arrow_id] = 1
            arrow = Arrow(arrow_id, a, b, index, c)
            arrows.append(arrow)
            made.append(arrow.id)

        if len(made) == 3:
            cycles.append(tuple(made))
            for k in range(3):
                relations.add((made[k], made[(k + 1) % 3]))

    Q = QuiverWithPotential(T.internal_edges, tuple(arrows),
                            frozenset(relations), tuple(cycles), T)
    gentle_check(Q)
    logger.debug("Derived quiver: %d vertices, %d arrows, %d 3-cycles",
                 len(Q.vertices), len(Q.arrows), len(Q.cycles))
    return Q


def gentle_check(Q: QuiverWithPotential):
    """Raise a ValidationError if Q is not a gentle bound quiver whose
    relations are exactly the consecutive pairs of its 3-cycles."""
    for v in Q.vertices:
        if len(Q.arrows_from(v)) > 2 or len(Q.arrows_to(v)) > 2:
            raise ValidationError(f"Vertex {v} has more than two arrows on one side")

    for arrow in Q.arrows:
        after = Q.arrows_from(arrow.target)
        before = Q.arrows_to(arrow.source)
        if sum(not Q.is_relation(arrow.id, b.id) for b in after) > 1 or \
                sum(Q.is_relation(arrow.id, b.id) for b in after) > 1:
            raise ValidationError(f"Arrow {arrow} breaks the gentle condition "
                                  "on its successors")
        if sum(not Q.is_relation(b.id, arrow.id) for b in before) > 1 or \
                sum(Q.is_relation(b.id, arrow.id) for b in before) > 1:
            raise ValidationError(f"Arrow {arrow} breaks the gentle condition "
                                  "on its predecessors")

    for first, second in Q.relations:
        if Q.arrow(first).target != Q.arrow(second).source:
            raise ValidationError(f"Relation ({first}, {second}) does not compose")
        holders = [c for c in Q.cycles if any(
            (c[k], c[(k + 1) % 3]) == (first, second) for k in range(3))]
        if len(holders) != 1:
            raise ValidationError(f"Relation ({first}, {second}) lies in "
                                  f"{len(holders)} 3-cycles")

    for cycle in Q.cycles:
        for k in range(3):
            if not Q.is_relation(cycle[k], cycle[(k + 1) % 3]):
                raise ValidationError(f"3-cycle {cycle} is missing a relation")


def crossing_sequence_to_string(Q: QuiverWithPotential,
                                seq: list[str]) -> StringWord:
    """Turn the arcs crossed by a curve, in order, into its string.

    Args:
        Q (QuiverWithPotential): The quiver.
        seq (list[str]): Crossed internal edges.

    Returns:
        StringWord: The validated string.
    """
    from libs.strings import validate_string

    if not seq:
        raise ValidationError("A crossing sequence needs at least one arc")
    for position, label in enumerate(seq):
        if label not in Q.vertices:
            raise ValidationError(f"{label} is not an internal edge", position=position)

    raw = []
    for position, (a, b) in enumerate(zip(seq, seq[1:])):
        if a == b:
            raise ValidationError(f"Consecutive entries repeat {a}", position=position)
        try:
            arrow = Q.arrow_between(a, b)
        except ValidationError as err:
            raise ValidationError(err.message, position=position) from err
        raw.append((arrow.id, arrow.source == a))

    return validate_string(Q, raw, base_vertex=seq[0])
