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
# Description:  Independent Ext^1 computation by exact linear algebra on
#               quiver representations. Every combinatorial dimension the
#               engine reports can be certified here.
#
#               Ext^1(M, N) is read off the start of a projective
#               presentation  0 -> ΩM -> P0 -> M -> 0  as
#               hom(ΩM, N) - hom(P0, N) + hom(M, N).
#
# ============================================================================ #
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import TYPE_CHECKING

import sympy as sp
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from libs.errors import ConsistencyError, ValidationError
from libs.strings import StringWord, enumerate_strings, format_string

if TYPE_CHECKING:
    from libs.surface import QuiverWithPotential

logger = logging.getLogger(__name__)

DEFAULT_PATH_BOUND = 10000


@dataclass(frozen=True)
class Representation:
    """Vector spaces at the vertices and a matrix per arrow.

    maps[a] has shape dims[target(a)] x dims[source(a)].
    """
    dims: dict[str, int]
    maps: dict[str, sp.Matrix] = field(default_factory=dict)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def action(self, Q: QuiverWithPotential, arrow_id: str) -> sp.Matrix:
        arrow = Q.arrow(arrow_id)
        if arrow_id in self.maps:
            return self.maps[arrow_id]
        return sp.zeros(self.dims.get(arrow.target, 0), self.dims.get(arrow.source, 0))


def check_relations(Q: QuiverWithPotential, M: Representation):
    """Raise if some relation does not act as zero."""
    for first, second in Q.relations:
        product = M.action(Q, second) * M.action(Q, first)
        if any(entry != 0 for entry in product):
            raise ConsistencyError(f"Relation ({first}, {second}) acts non-trivially")


def string_to_representation(Q: QuiverWithPotential, w: StringWord) -> Representation:
    """The string module of w with its standard basis z_0..z_n."""
    vertices = w.vertices
    index, dims = [], {v: 0 for v in Q.vertices}
    for v in vertices:
        index.append(dims[v])
        dims[v] += 1

    maps = {arrow.id: sp.zeros(dims[arrow.target], dims[arrow.source])
            for arrow in Q.arrows}
    for i, letter in enumerate(w.letters):
        if letter.direct:
            maps[letter.arrow][index[i + 1], index[i]] = 1
        else:
            maps[letter.arrow][index[i], index[i + 1]] = 1
    return Representation(dims, maps)


@lru_cache(maxsize=256)
def _relation_free_paths(Q: QuiverWithPotential, v: str,
                         bound: int) -> tuple[tuple[str, ...], ...]:
    paths = [()]
    frontier = [()]
    while frontier:
        grown = []
        for path in frontier:
            end = Q.arrow(path[-1]).target if path else v
            for arrow in Q.arrows_from(end):
                if path and Q.is_relation(path[-1], arrow.id):
                    continue
                grown.append(path + (arrow.id,))
        paths.extend(grown)
        if len(paths) > bound:
            raise ValidationError(f"More than {bound} relation-free paths start at "
                                  f"{v}; the algebra is not finite dimensional")
        frontier = grown
    return tuple(paths)


def _path_end(Q: QuiverWithPotential, v: str, path: tuple[str, ...]) -> str:
    return Q.arrow(path[-1]).target if path else v


def projective(Q: QuiverWithPotential, v: str,
               bound: int = DEFAULT_PATH_BOUND) -> Representation:
    """The indecomposable projective at v, with the paths from v as basis.

    Args:
        Q (QuiverWithPotential): The quiver.
        v (str): A vertex.
        bound (int): Safety bound on the number of paths.

    Returns:
        Representation: P_v.
    """
    if v not in Q.vertices:
        raise ValidationError(f"{v} is not a vertex")
    paths = _relation_free_paths(Q, v, bound)
    basis: dict[str, list[tuple[str, ...]]] = {u: [] for u in Q.vertices}
    for path in paths:
        basis[_path_end(Q, v, path)].append(path)
    position = {path: basis[_path_end(Q, v, path)].index(path) for path in paths}

    dims = {u: len(found) for u, found in basis.items()}
    maps = {}
    for arrow in Q.arrows:
        matrix = sp.zeros(dims[arrow.target], dims[arrow.source])
        for path in basis[arrow.source]:
            if path and Q.is_relation(path[-1], arrow.id):
                continue
            matrix[position[path + (arrow.id,)], position[path]] = 1
        maps[arrow.id] = matrix
    return Representation(dims, maps)


def hom_dim(Q: QuiverWithPotential, M: Representation, N: Representation) -> int:
    """Dimension of Hom(M, N), solved exactly over the rationals."""
    offsets, unknowns = {}, 0
    for v in Q.vertices:
        offsets[v] = unknowns
        unknowns += N.dims.get(v, 0) * M.dims.get(v, 0)
    if unknowns == 0:
        return 0

    def var(v: str, row: int, col: int) -> int:
        return offsets[v] + row * M.dims[v] + col

    rows = []
    for arrow in Q.arrows:
        s, t = arrow.source, arrow.target
        m_s, m_t = M.dims.get(s, 0), M.dims.get(t, 0)
        n_s, n_t = N.dims.get(s, 0), N.dims.get(t, 0)
        if n_t == 0 or m_s == 0:
            continue
        Ma, Na = M.action(Q, arrow.id), N.action(Q, arrow.id)
        # (f_t Ma - Na f_s)[r, c] = 0
        for r in range(n_t):
            for c in range(m_s):
                row = [0] * unknowns
                for k in range(m_t):
                    if Ma[k, c] != 0:
                        row[var(t, r, k)] += Ma[k, c]
                for k in range(n_s):
                    if Na[r, k] != 0:
                        row[var(s, k, c)] -= Na[r, k]
                if any(row):
                    rows.append(row)

    if not rows:
        return unknowns
    return unknowns - _rank(rows, unknowns)


def _rank(rows: list[list], width: int) -> int:
    """Exact rank over QQ of a dense list of rational rows."""
    entries = [[QQ.from_sympy(sp.Rational(x)) for x in row] for row in rows]
    _, pivots = DomainMatrix(entries, (len(rows), width), QQ).rref()
    return len(pivots)


def _direct_sum(Q: QuiverWithPotential,
                parts: list[Representation]) -> Representation:
    dims = {v: sum(P.dims.get(v, 0) for P in parts) for v in Q.vertices}
    maps = {}
    for arrow in Q.arrows:
        matrix = sp.zeros(dims[arrow.target], dims[arrow.source])
        row = col = 0
        for P in parts:
            block = P.action(Q, arrow.id)
            if block.rows and block.cols:
                matrix[row:row + block.rows, col:col + block.cols] = block
            row, col = row + block.rows, col + block.cols
        maps[arrow.id] = matrix
    return Representation(dims, maps)


def _hstack(height: int, columns: list[sp.Matrix]) -> sp.Matrix:
    if not columns:
        return sp.zeros(height, 0)
    return sp.Matrix.hstack(*columns)


def top_vectors(Q: QuiverWithPotential, M: Representation) -> dict[str, list[sp.Matrix]]:
    """Vectors at each vertex spanning a complement of the radical."""
    chosen = {}
    for v in Q.vertices:
        dim = M.dims.get(v, 0)
        images = [M.action(Q, a.id) for a in Q.arrows_to(v)]
        span = _hstack(dim, [image for image in images if image.cols])
        rank = span.rank() if span.cols else 0
        picked = []
        for i in range(dim):
            e = sp.zeros(dim, 1)
            e[i] = 1
            trial = sp.Matrix.hstack(span, e) if span.cols else e
            if trial.rank() > rank:
                span, rank = trial, rank + 1
                picked.append(e)
        chosen[v] = picked
    return chosen


def projective_cover(Q: QuiverWithPotential, M: Representation,
                     bound: int = DEFAULT_PATH_BOUND
                     ) -> tuple[Representation, dict[str, sp.Matrix]]:
    """P0 and the surjection P0 -> M given vertex by vertex.

    Returns:
        tuple: (P0, {vertex: matrix of P0_v -> M_v}).
    """
    parts, images = [], []
    for v, vectors in top_vectors(Q, M).items():
        for vector in vectors:
            parts.append(projective(Q, v, bound))
            images.append((v, vector))

    P0 = _direct_sum(Q, parts)
    cover = {}
    for u in Q.vertices:
        columns = []
        for (v, vector) in images:
            for path in _relation_free_paths(Q, v, bound):
                if _path_end(Q, v, path) != u:
                    continue
                image = vector
                for arrow_id in path:
                    image = M.action(Q, arrow_id) * image
                columns.append(image)
        cover[u] = _hstack(M.dims.get(u, 0), columns)
        if cover[u].cols != P0.dims[u]:
            raise ConsistencyError(f"Projective cover basis mismatch at {u}")
        if M.dims.get(u, 0) and cover[u].rank() != M.dims[u]:
            raise ConsistencyError(f"Projective cover is not onto at vertex {u}")
    return P0, cover


def syzygy(Q: QuiverWithPotential, P0: Representation,
           cover: dict[str, sp.Matrix]) -> Representation:
    """The kernel of the cover as a representation."""
    kernels = {}
    for v in Q.vertices:
        if not P0.dims[v]:
            basis = []
        elif cover[v].rows == 0:
            basis = [sp.eye(P0.dims[v])[:, i] for i in range(P0.dims[v])]
        else:
            basis = cover[v].nullspace()
        kernels[v] = _hstack(P0.dims[v], basis)

    maps = {}
    for arrow in Q.arrows:
        K_s, K_t = kernels[arrow.source], kernels[arrow.target]
        if K_s.cols == 0 or K_t.cols == 0:
            maps[arrow.id] = sp.zeros(K_t.cols, K_s.cols)
            continue
        image = P0.action(Q, arrow.id) * K_s
        coords = (K_t.T * K_t).inv() * K_t.T * image
        if K_t * coords != image:
            raise ConsistencyError(f"Kernel is not closed under {arrow.id}")
        maps[arrow.id] = coords
    return Representation({v: kernels[v].cols for v in Q.vertices}, maps)


def ext1_dim_oracle(Q: QuiverWithPotential, M: Representation, N: Representation,
                    bound: int = DEFAULT_PATH_BOUND) -> int:
    """dim Ext^1(M, N) from a projective presentation of M.

    Args:
        Q (QuiverWithPotential): The quiver.
        M (Representation): First argument.
        N (Representation): Second argument.
        bound (int): Path safety bound for the projectives.

    Returns:
        int: The dimension.
    """
    P0, cover = projective_cover(Q, M, bound)
    omega = syzygy(Q, P0, cover)
    result = hom_dim(Q, omega, N) - hom_dim(Q, P0, N) + hom_dim(Q, M, N)
    if result < 0:
        raise ConsistencyError("Negative Ext dimension from the presentation")
    return result


def ext1_of_strings(Q: QuiverWithPotential, wM: StringWord, wN: StringWord,
                    bound: int = DEFAULT_PATH_BOUND) -> int:
    return ext1_dim_oracle(Q, string_to_representation(Q, wM),
                           string_to_representation(Q, wN), bound)



@dataclass(frozen=True)
class Presentation:
    """A string module together with the start of its projective resolution.

    `tops[v]` counts the copies of P_v in P0, so Hom(P0, N) has dimension
    sum(tops[v] * dim N_v).
    """
    module: Representation
    P0: Representation
    omega: Representation
    tops: dict[str, int]

    def ext1(self, Q: QuiverWithPotential, N: Representation) -> int:
        hom_P0 = sum(count * N.dims.get(v, 0) for v, count in self.tops.items())
        result = hom_dim(Q, self.omega, N) - hom_P0 + hom_dim(Q, self.module, N)
        if result < 0:
            raise ConsistencyError("Negative Ext dimension from the presentation")
        return result


def present(Q: QuiverWithPotential, w: StringWord,
            bound: int = DEFAULT_PATH_BOUND) -> Presentation:
    M = string_to_representation(Q, w)
    P0, cover = projective_cover(Q, M, bound)
    tops = {v: len(vectors) for v, vectors in top_vectors(Q, M).items() if vectors}
    return Presentation(M, P0, syzygy(Q, P0, cover), tops)


# ---------------------------------------------------------------------------- #
#   Sweeps
# ---------------------------------------------------------------------------- #

def check_pair(Q: QuiverWithPotential, w1: StringWord, w2: StringWord,
               bound: int = DEFAULT_PATH_BOUND,
               presented: dict[StringWord, Presentation] | None = None) -> list[dict]:
    """Run every cross-check on one pair and collect what fails.

    Combinatorial Ext dimensions are compared with the oracle in both
    directions; each crossing is smoothed both ways and its dimension
    bookkeeping checked; every crossing must give two triangles.

    Args:
        Q (QuiverWithPotential): The quiver.
        w1 (StringWord): First string.
        w2 (StringWord): Second string.
        bound (int): Path safety bound for the projectives.
        presented (dict | None): Presentations already built, filled in as
            new strings come up. Sweeps share one per process.

    Returns:
        list[dict]: One record per failed check, empty when all pass.
    """
    from libs import extensions

    if presented is None:
        presented = {}

    def presentation(w: StringWord) -> Presentation:
        if w not in presented:
            presented[w] = present(Q, w, bound)
        return presented[w]

    pair = [format_string(w1), format_string(w2)]
    problems = []

    def failed(check: str, **details):
        problems.append({"pair": pair, "check": check, **details})

    try:
        report = extensions.ext_dim(Q, w1, w2)
    except ConsistencyError as err:
        failed("int-identity", message=err.message, **err.details)
        return problems

    first, second = presentation(w1), presentation(w2)
    expected = {"dim_MN": first.ext1(Q, second.module)}
    if not report.self_pair:
        expected["dim_NM"] = second.ext1(Q, first.module)
    for key, value in expected.items():
        combinatorial = getattr(report, key)
        if combinatorial != value:
            failed("oracle", field=key, combinatorial=combinatorial, oracle=value)

    crossings = extensions.enumerate_crossings(Q, w1, w2)
    for crossing in crossings:
        try:
            smoothing = extensions.smooth(Q, crossing)
            extensions.check_dimension_identities(Q, crossing, smoothing)
            extensions.check_dual_route(Q, crossing, smoothing)
        except (ConsistencyError, ValidationError) as err:
            failed("smoothing", crossing=crossing.describe(), message=err.message)

    if not problems:
        triangles = extensions.cluster_triangles(Q, w1, w2)
        if len(triangles) != len(crossings):
            failed("triangles", crossings=len(crossings), triangles=len(triangles))
    return problems


# Set once per worker process by _start_worker
_worker: dict = {}


def _start_worker(Q: QuiverWithPotential, strings: list[StringWord], bound: int):
    _worker.clear()
    _worker.update(Q=Q, strings=strings, bound=bound, presented={})


def _check_pair_job(job: tuple[int, int]) -> list[dict]:
    i, j = job
    strings = _worker["strings"]
    return check_pair(_worker["Q"], strings[i], strings[j], _worker["bound"],
                      _worker["presented"])


def sweep(Q: QuiverWithPotential, max_len: int, parallel: int = 1,
          bound: int = DEFAULT_PATH_BOUND) -> tuple[int, list[dict]]:
    """Cross-check every unordered pair of strings up to `max_len` letters.

    Args:
        Q (QuiverWithPotential): The quiver.
        max_len (int): Letter bound for the enumerated strings.
        parallel (int): Worker processes; 1 runs in this process.
        bound (int): Path safety bound for the projectives.

    Returns:
        tuple[int, list[dict]]: Number of pairs checked and the mismatches.
    """
    from libs.extensions import check_roundtrip

    strings = enumerate_strings(Q, max_len)
    mismatches = []
    for w in strings:
        try:
            check_roundtrip(Q, w)
        except (ConsistencyError, ValidationError) as err:
            mismatches.append({"pair": [format_string(w)], "check": "roundtrip",
                               "message": err.message})

    jobs = [(i, j) for i in range(len(strings)) for j in range(i, len(strings))]
    logger.info("Sweeping %d pairs from %d strings up to length %d",
                len(jobs), len(strings), max_len)

    if parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel, initializer=_start_worker,
                                 initargs=(Q, strings, bound)) as pool:
            results = list(pool.map(_check_pair_job, jobs, chunksize=64))
    else:
        _start_worker(Q, strings, bound)
        try:
            results = [_check_pair_job(job) for job in jobs]
        finally:
            _worker.clear()

    for found in results:
        mismatches.extend(found)
    if mismatches:
        logger.warning("Sweep found %d mismatches", len(mismatches))
    return len(jobs), mismatches
