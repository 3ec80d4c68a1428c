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
# Description:  Crossing census, smoothings, Ext^1 bases and triangles on
#               the pair-of-pants worked example, plus disk sanity checks.
#
# ============================================================================ #
import itertools

import pytest

from libs.errors import ValidationError
from libs.extensions import (ARROW, MODULE, THREE_CYCLE, canonical,
                             check_dimension_identities, check_dual_route,
                             check_roundtrip, cluster_triangles,
                             enumerate_crossings, ext_basis, ext_dim,
                             ext_report, find_cycle_completion, smooth)
from libs.strings import (ZERO, BoundaryArc, canonicalize, enumerate_strings,
                          format_string, parse_string)


def expect(Q, text):
    return format_string(canonicalize(parse_string(Q, text)))


def formats(Q, result):
    return [format_string(canonical(value))
            for value in (result.w3, result.w4, result.w5, result.w6)]


def test_crossing_census(pants, w1, w2):
    crossings = enumerate_crossings(pants, w1, w2)
    assert [(c.kind, c.direction) for c in crossings] == [
        (MODULE, (1, 2)), (MODULE, (2, 1)), (ARROW, (1, 2)), (THREE_CYCLE, (1, 2))]
    assert [c.describe() for c in crossings] == [
        "module (6)", "module (3<4)", "arrow 2->7", "3-cycle (7->1, 1->2, 2->7)"]


def test_crossing_order_is_stable(pants, w1, w2):
    first = [c.sort_key for c in enumerate_crossings(pants, w1, w2)]
    again = [c.sort_key for c in enumerate_crossings(pants, w1, w2)]
    assert first == again == sorted(first)


def test_self_crossing(pants, w1, w2):
    crossings = enumerate_crossings(pants, w1, w1)
    assert len(crossings) == 1
    assert crossings[0].kind == MODULE
    assert crossings[0].direction == (1, 1)
    assert crossings[0].describe() == "module (2)"
    assert enumerate_crossings(pants, w2, w2) == []


def test_self_crossing_ignores_orientation(pants, w1):
    from libs.strings import invert
    assert len(enumerate_crossings(pants, w1, invert(w1))) == 1


def test_module_smoothing_at_6(pants, w1, w2):
    result = smooth(pants, enumerate_crossings(pants, w1, w2)[0])
    assert formats(pants, result) == [
        expect(pants, "1>2<3<4>5>6>3<4<8>7"), expect(pants, "6<2"),
        expect(pants, "1>2<3<4"), expect(pants, "2<3<4<8>7")]


def test_module_smoothing_at_3_4(pants, w1, w2):
    result = smooth(pants, enumerate_crossings(pants, w1, w2)[1])
    assert formats(pants, result) == [
        expect(pants, "6>3<4>5>6<2"), expect(pants, "1>2<3<4<8>7"),
        expect(pants, "6<2<1"), expect(pants, "7<8<5>6<2")]


def test_arrow_smoothing(pants, w1, w2):
    result = smooth(pants, enumerate_crossings(pants, w1, w2)[2])
    assert result.w4 == BoundaryArc("1", False)
    assert format_string(canonical(result.w3)) == \
        expect(pants, "1>2<3<4>5>6<2>7<8>4>3<6")
    assert format_string(canonical(result.w5)) == expect(pants, "1>2<3<4>5")
    assert format_string(canonical(result.w6)) == expect(pants, "4>3<6")


def test_three_cycle_smoothing(pants, w1, w2):
    result = smooth(pants, enumerate_crossings(pants, w1, w2)[3])
    assert result.w5 is ZERO
    assert format_string(canonical(result.w3)) == expect(pants, "1<7<8>4>3<6")
    assert format_string(canonical(result.w4)) == expect(pants, "3<4>5>6<2")
    assert format_string(canonical(result.w6)) == expect(pants, "6>3<4<8>7<2<3<4>5>6<2")


def test_self_smoothing(pants, w1):
    result = smooth(pants, enumerate_crossings(pants, w1, w1)[0])
    assert result.w5 is ZERO
    assert format_string(canonical(result.w3)) == expect(pants, "1>2>6<5<4>3>2<1")
    assert format_string(canonical(result.w4)) == expect(pants, "2<3<4>5>6<2")
    assert format_string(canonical(result.w6)) == expect(pants, "2>6<5<4>3<6<5<4>3>2<1")


def test_smoothings_are_strings(pants, w1, w2):
    for a, b in ((w1, w2), (w1, w1)):
        for crossing in enumerate_crossings(pants, a, b):
            result = smooth(pants, crossing)
            for value in (result.w3, result.w4, result.w5, result.w6):
                if value is not ZERO and not isinstance(value, BoundaryArc):
                    assert parse_string(pants, format_string(value)) == value


def test_find_cycle_completion(pants):
    assert find_cycle_completion(pants, "1->2", "2->7") == "7->1"
    assert find_cycle_completion(pants, "8->4", "4->5") == "5->8"
    with pytest.raises(ValidationError):
        find_cycle_completion(pants, "1->2", "2->6")
    with pytest.raises(ValidationError):
        find_cycle_completion(pants, "1->2", "6->3")


def test_dual_route(pants, w1, w2):
    for a, b in ((w1, w2), (w1, w1)):
        for crossing in enumerate_crossings(pants, a, b):
            graphs = check_dual_route(pants, crossing)
            assert len(graphs) == 4


def test_snake_route_outer_edges(pants, w1, w2):
    three_cycle = enumerate_crossings(pants, w1, w2)[3]
    assert check_dual_route(pants, three_cycle)[2].edge == "b5"
    self_crossing = enumerate_crossings(pants, w1, w1)[0]
    assert check_dual_route(pants, self_crossing)[2].edge == "b4"


def test_dimension_identities(pants, w1, w2):
    for a, b in ((w1, w2), (w1, w1)):
        for crossing in enumerate_crossings(pants, a, b):
            check_dimension_identities(pants, crossing)


def test_ext_dims(pants, w1, w2):
    report = ext_dim(pants, w1, w2)
    assert (report.dim_MN, report.dim_NM, report.Int, report.k, report.k_prime) == \
        (2, 1, 4, 1, 0)
    assert report.dim_MN + report.dim_NM == report.Int - report.k - report.k_prime

    swapped = ext_dim(pants, w2, w1)
    assert (swapped.dim_MN, swapped.dim_NM, swapped.k, swapped.k_prime) == (1, 2, 0, 1)


def test_self_ext_dims(pants, w1, w2):
    report = ext_dim(pants, w1, w1)
    assert (report.dim_MN, report.Int, report.k) == (1, 2, 0)
    assert ext_dim(pants, w2, w2).dim_MN == 0


def test_ext_basis(pants, w1, w2):
    assert len(ext_basis(pants, w1, w2)) == 2
    sequences = ext_basis(pants, w2, w1)
    assert len(sequences) == 1
    ses = sequences[0]
    assert ses.sub.word == canonicalize(w1)
    assert ses.quotient.word == canonicalize(w2)
    assert sum(m.total_dim for m in ses.middle) == \
        ses.sub.total_dim + ses.quotient.total_dim


def test_arrow_sequence_has_one_middle_term(pants, w1, w2):
    arrow = [ses for ses in ext_basis(pants, w1, w2) if ses.provenance.kind == ARROW]
    assert len(arrow) == 1
    assert len(arrow[0].middle) == 1


def test_cluster_triangles(pants, w1, w2):
    pairs = cluster_triangles(pants, w1, w2)
    assert len(pairs) == 4
    first, second = pairs[2]
    assert BoundaryArc("1", False) in first.middle
    assert sorted(format_string(m) for m in second.middle) == \
        sorted([expect(pants, "1>2<3<4>5"), expect(pants, "4>3<6")])


def test_self_triangles(pants, w1):
    [(first, second)] = cluster_triangles(pants, w1, w1)
    assert len(first.middle) == 2
    assert [format_string(m) for m in second.middle] == \
        [expect(pants, "2>6<5<4>3<6<5<4>3>2<1")]
    assert str(second).endswith("[1]")


def test_roundtrip_on_worked_example(pants, w1, w2):
    check_roundtrip(pants, w1)
    check_roundtrip(pants, w2)


def test_ext_report_layout(pants, w1, w2):
    report = ext_report(pants, w1, w2)
    assert set(report) == {"crossings", "smoothings", "ext", "ses", "triangles"}
    assert report["ext"] == {"dim_MN": 2, "dim_NM": 1, "Int": 4, "k": 1, "k_prime": 0}
    assert len(report["crossings"]) == len(report["smoothings"]) == 4
    assert report["crossings"][0]["data"]["overlap"] == "(6)"
    assert len(report["ses"]["MN"]) == 2 and len(report["ses"]["NM"]) == 1


@pytest.mark.parametrize("name", ["pentagon", "hexagon_a3"])
def test_disk_algebras_have_simple_crossings(name):
    from conftest import load_quiver
    Q = load_quiver(name)
    strings = enumerate_strings(Q, 4)
    for a, b in itertools.combinations_with_replacement(strings, 2):
        report = ext_dim(Q, a, b)
        if a == b:
            assert report.dim_MN == 0 and report.Int == 0
        else:
            assert report.Int <= 1
            assert report.dim_MN + report.dim_NM in (0, 1)
