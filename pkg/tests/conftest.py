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
# Description:  Shared fixtures: the corpus triangulations and the two
#               strings of the pair-of-pants worked example.
#
# ============================================================================ #
from pathlib import Path

import pytest

from libs.strings import parse_string
from libs.surface import build_triangulation, derive_quiver, read_triangulation

DATA = Path(__file__).resolve().parents[1] / "data" / "triangulations"

W1 = "1>2<3<4>5>6<2"
W2 = "6>3<4<8>7"

CORPUS = ("quadrilateral", "pentagon", "hexagon_a3", "heptagon_a4",
          "octagon_a5", "annulus_2_2", "pants_1_1_3")


def load_quiver(name: str):
    return derive_quiver(read_triangulation(str(DATA / f"{name}.json")))


def fan_triangulation(points: int):
    """Fan of a disk with `points` marked points, all diagonals from point 0.

    Boundary segment b{i} joins points i and i+1; diagonal d{i} joins 0 and i.
    """
    def side(i: int) -> str:
        if i == 1:
            return "b0"
        if i == points - 1:
            return f"b{points - 1}"
        return f"d{i}"

    edges = [(f"d{i}", False) for i in range(2, points - 1)]
    edges += [(f"b{i}", True) for i in range(points)]
    triangles = [[side(i), f"b{i}", side(i + 1)] for i in range(1, points - 1)]
    return build_triangulation(edges, triangles, f"fan {points}")


def annulus_triangulation(outer: int, inner: int):
    """Annulus with `outer` and `inner` marked points on its two boundaries.

    Arcs 1..outer+inner run between the boundaries: first one outer segment
    is added per triangle, then one inner segment.
    """
    n = outer + inner

    def arc(k: int) -> str:
        return str(k % n + 1)

    edges = [(arc(k), False) for k in range(n)]
    edges += [(f"o{k + 1}", True) for k in range(outer)]
    edges += [(f"i{k + 1}", True) for k in range(inner)]
    triangles = [[arc(k + 1), f"o{k + 1}", arc(k)] for k in range(outer)]
    triangles += [[f"i{j + 1}", arc(outer + j + 1), arc(outer + j)] for j in range(inner)]
    return build_triangulation(edges, triangles, f"annulus {outer}+{inner}")


@pytest.fixture(scope="session")
def pants():
    return load_quiver("pants_1_1_3")


@pytest.fixture(scope="session")
def pentagon():
    return load_quiver("pentagon")


@pytest.fixture(scope="session")
def hexagon():
    return load_quiver("hexagon_a3")


@pytest.fixture(scope="session")
def annulus():
    return load_quiver("annulus_2_2")


@pytest.fixture
def w1(pants):
    return parse_string(pants, W1)


@pytest.fixture
def w2(pants):
    return parse_string(pants, W2)
