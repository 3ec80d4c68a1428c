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
# Description:  String grammar, validity, inversion and hook deletions.
#
# ============================================================================ #
import pytest

from conftest import W1, W2
from libs.errors import ValidationError
from libs.strings import (ZERO, BoundaryArc, canonicalize, delete_cohook_end,
                          delete_cohook_start, delete_hook_end,
                          delete_hook_start, dimension_vector,
                          enumerate_strings, format_string, invert, is_direct,
                          is_inverse, parse_string, total_dim, vertex_sequence)


def test_parse_and_format(pants):
    for text in (W1, W2, "7<8>4>3<6", "(6)"):
        assert format_string(parse_string(pants, text)) == text


def test_zero_length_string(pants):
    w = parse_string(pants, "(6)")
    assert w.length == 0
    assert w.source == w.target == "6"
    assert format_string(parse_string(pants, "6")) == "(6)"


def test_letters_of_w1(w1):
    assert [letter.direct for letter in w1.letters] == \
        [True, False, False, True, True, False]
    assert w1.letters[1].arrow == "3->2"
    assert vertex_sequence(w1) == ["1", "2", "3", "4", "5", "6", "2"]


@pytest.mark.parametrize("text,position", [
    ("1>3", 0),
    ("1>2>7", 1),
    ("2>6<2", 1),
    ("4<8<5", 1),
])
def test_invalid_strings(pants, text, position):
    with pytest.raises(ValidationError) as err:
        parse_string(pants, text)
    assert err.value.position == position


def test_unknown_vertex(pants):
    with pytest.raises(ValidationError):
        parse_string(pants, "(9)")
    with pytest.raises(ValidationError):
        parse_string(pants, "1>>2")


def test_invert(w2):
    assert format_string(invert(w2)) == "7<8>4>3<6"
    assert invert(invert(w2)) == w2


def test_canonicalize(w2):
    assert canonicalize(invert(w2)) == w2
    assert canonicalize(w2) == w2


def test_direct_and_inverse(pants):
    assert is_direct(parse_string(pants, "1>2"))
    assert is_inverse(parse_string(pants, "2<1"))
    assert is_direct(parse_string(pants, "(3)")) and is_inverse(parse_string(pants, "(3)"))
    assert not is_direct(parse_string(pants, W1))


def test_hook_deletions(pants):
    assert format_string(delete_cohook_end(parse_string(pants, "1>2<3<4>5"))) == "1>2<3<4"
    assert format_string(delete_hook_start(parse_string(pants, "4>3<6"))) == "3<6"
    assert format_string(delete_cohook_start(parse_string(pants, W1))) == "3<4>5>6<2"
    assert format_string(delete_hook_end(parse_string(pants, W1))) == "1>2<3<4>5>6"


def test_deletions_to_zero(pants):
    direct = parse_string(pants, "1>2")
    assert delete_hook_end(direct) is ZERO
    assert delete_cohook_start(direct) is ZERO
    assert delete_cohook_end(parse_string(pants, "2<1")) is ZERO
    assert delete_hook_start(parse_string(pants, "(2)")) is ZERO


def test_dimension_vector(w1):
    module = dimension_vector(w1)
    assert module.total_dim == 7
    assert module.multiplicity("2") == 2
    assert module.multiplicity("8") == 0


def test_total_dim(w1):
    assert total_dim(w1) == 7
    assert total_dim(ZERO) == 0
    assert total_dim(BoundaryArc("1", False)) == 0


def test_enumerate_strings_small(pentagon, hexagon):
    assert [format_string(w) for w in enumerate_strings(pentagon, 4)] == \
        ["(x)", "(y)", "x<y"]
    assert len(enumerate_strings(hexagon, 4)) == 6


def test_enumerate_strings_canonical(pants):
    strings = enumerate_strings(pants, 3)
    assert all(canonicalize(w) == w for w in strings)
    assert len(set(strings)) == len(strings)
    assert [w.length for w in strings] == sorted(w.length for w in strings)
