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
# Description:  Triangulation loading, marked point counting and the
#               derived gentle quiver with potential.
#
# ============================================================================ #
import json
from math import comb

import pytest

from conftest import CORPUS, annulus_triangulation, fan_triangulation, load_quiver
from libs.errors import ValidationError
from libs.strings import format_string
from libs.surface import (build_triangulation, crossing_sequence_to_string, derive_quiver,
                          gentle_check, load_triangulation, marked_points)


def test_pants_quiver(pants):
    assert pants.vertices == ("1", "2", "3", "4", "5", "6", "7", "8")
    assert len(pants.arrows) == 12
    assert len(pants.cycles) == 3
    assert len(pants.relations) == 9


def test_pants_arrow_records(pants):
    arrow = pants.arrow("2->7")
    assert arrow.third == "1"
    assert pants.arrow("1->2").triangle == 2
    assert pants.arrow("4->3").third == "b1"


def test_cycle_through_rotates(pants):
    assert pants.cycle_through("1->2") == ("1->2", "2->7", "7->1")
    assert pants.cycle_through("7->1") == ("7->1", "1->2", "2->7")
    assert pants.cycle_through("4->3") is None


def test_relations_follow_cycles(pants):
    assert pants.is_relation("1->2", "2->7")
    assert not pants.is_relation("2->7", "1->2")
    assert not pants.is_relation("4->5", "5->6")


def test_same_side(pants):
    assert pants.same_side("6", pants.arrow("2->6"), pants.arrow("6->3"))
    assert not pants.same_side("6", pants.arrow("5->6"), pants.arrow("6->3"))


@pytest.mark.parametrize("name,expected", [
    ("quadrilateral", (4, 1)),
    ("pentagon", (5, 1)),
    ("octagon_a5", (8, 1)),
    ("annulus_2_2", (4, 2)),
    ("pants_1_1_3", (5, 3)),
])
def test_marked_points(name, expected):
    assert marked_points(load_quiver(name).triangulation) == expected


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_is_gentle(name):
    gentle_check(load_quiver(name))


def test_fan_gives_linear_quiver(hexagon):
    assert {a.id for a in hexagon.arrows} == {"x2->x1", "x3->x2"}
    assert not hexagon.relations


def test_annulus_has_no_relations(annulus):
    assert len(annulus.arrows) == 4
    assert not annulus.cycles


def test_internal_edge_in_one_triangle():
    with pytest.raises(ValidationError):
        build_triangulation([("a", False), ("b1", True), ("b2", True)],
                            [["a", "b1", "b2"]])


def test_repeated_side():
    with pytest.raises(ValidationError):
        build_triangulation([("a", False), ("b1", True)], [["a", "a", "b1"]])


def test_reserved_label():
    with pytest.raises(ValidationError):
        build_triangulation([("a<b", False)], [])


def test_puncture_rejected():
    edges = [("a", False), ("b", False), ("c", False),
             ("b1", True), ("b2", True), ("b3", True)]
    triangles = [["a", "b", "b1"], ["b", "c", "b2"], ["c", "a", "b3"]]
    with pytest.raises(ValidationError, match="punctured"):
        build_triangulation(edges, triangles)


def test_load_rejects_bad_documents():
    with pytest.raises(ValidationError):
        load_triangulation("{not json")
    with pytest.raises(ValidationError):
        load_triangulation({"edges": []})
    with pytest.raises(ValidationError):
        load_triangulation({"edges": [{"id": "a"}], "triangles": []})
    with pytest.raises(ValidationError, match="edges"):
        load_triangulation('{"edges": 5, "triangles": []}')
    with pytest.raises(ValidationError) as err:
        load_triangulation({"edges": [{"id": "a", "boundary": False}],
                            "triangles": [[["x"], "a", "a"]]})
    assert err.value.position == 0


def test_load_from_dict_matches_text():
    document = {"edges": [{"id": "d", "boundary": False},
                          {"id": "b1", "boundary": True},
                          {"id": "b2", "boundary": True},
                          {"id": "b3", "boundary": True},
                          {"id": "b4", "boundary": True}],
                "triangles": [["b1", "b2", "d"], ["d", "b3", "b4"]]}
    assert load_triangulation(document) == load_triangulation(json.dumps(document))


def test_crossing_sequence(pants):
    w = crossing_sequence_to_string(pants, ["1", "2", "3", "4", "5", "6", "2"])
    assert format_string(w) == "1>2<3<4>5>6<2"


def test_crossing_sequence_errors(pants):
    with pytest.raises(ValidationError) as err:
        crossing_sequence_to_string(pants, ["1", "3"])
    assert err.value.position == 0
    with pytest.raises(ValidationError):
        crossing_sequence_to_string(pants, ["b1"])
    with pytest.raises(ValidationError):
        crossing_sequence_to_string(pants, ["1", "2", "7"])


GENERATED = [(fan_triangulation(m), (m, 1)) for m in range(4, 13)] + \
    [(annulus_triangulation(p, q), (p + q, 2))
     for p in range(1, 12) for q in range(1, 13 - p)]


@pytest.mark.parametrize("T,expected", GENERATED, ids=lambda x: getattr(x, "name", None))
def test_generated_surfaces(T, expected):
    assert marked_points(T) == expected
    Q = derive_quiver(T)
    gentle_check(Q)

    internal = [sum(not T.is_boundary(side) for side in triangle)
                for triangle in T.triangles]
    assert len(Q.arrows) == sum(comb(count, 2) for count in internal)
    assert len(Q.cycles) == internal.count(3)


def test_fan_arrows_run_along_the_fan():
    Q = derive_quiver(fan_triangulation(7))
    assert len(Q.vertices) == 4
    assert {str(a) for a in Q.arrows} == {"d3->d2", "d4->d3", "d5->d4"}


def test_smallest_annulus_is_kronecker():
    Q = derive_quiver(annulus_triangulation(1, 1))
    assert [str(a) for a in Q.arrows] == ["1->2", "1->2"]
    assert [a.id for a in Q.arrows] == ["1->2", "1->2#2"]
