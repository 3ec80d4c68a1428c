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
# Description:  Strings over a gentle quiver: validation, the ASCII grammar,
#               canonical representatives, hook and cohook deletions, and
#               the dimension data of string modules.
#
# ============================================================================ #
from __future__ import annotations

import logging
import re
from collections import Counter
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from libs.errors import ValidationError

if TYPE_CHECKING:
    from libs.surface import QuiverWithPotential

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Letter:
    """An arrow read forwards (direct) or backwards (inverse).

    `start` and `end` are the vertices the letter walks from and to.
    """
    arrow: str
    direct: bool
    start: str
    end: str

    def inverse(self) -> Letter:
        return Letter(self.arrow, not self.direct, self.end, self.start)

    @property
    def symbol(self) -> str:
        return ">" if self.direct else "<"


@dataclass(frozen=True)
class StringWord:
    base_vertex: str
    letters: tuple[Letter, ...] = ()

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def vertices(self) -> tuple[str, ...]:
        return (self.base_vertex,) + tuple(letter.end for letter in self.letters)

    @property
    def source(self) -> str:
        return self.base_vertex

    @property
    def target(self) -> str:
        return self.letters[-1].end if self.letters else self.base_vertex

    def __str__(self) -> str:
        return format_string(self)


@dataclass(frozen=True)
class ZeroModule:
    """The zero module. Hook deletions of direct/inverse strings land here."""

    def __str__(self) -> str:
        return "0"


ZERO = ZeroModule()


@dataclass(frozen=True)
class BoundaryArc:
    """A single edge of the triangulation arising as a smoothing.

    Zero as a module either way; a boundary segment is also zero in the
    cluster category while an arc of the triangulation is not.
    """
    label: str
    boundary: bool

    def __str__(self) -> str:
        return f"[{self.label}]"


@dataclass(frozen=True)
class StringModule:
    word: StringWord
    dim_vector: tuple[tuple[str, int], ...]
    total_dim: int

    def multiplicity(self, vertex: str) -> int:
        return dict(self.dim_vector).get(vertex, 0)


def total_dim(value: StringWord | ZeroModule | BoundaryArc) -> int:
    """Dimension of the module a smoothing output stands for."""
    if isinstance(value, StringWord):
        return value.length + 1
    return 0


def make_letter(Q: QuiverWithPotential, arrow_id: str, direct: bool) -> Letter:
    arrow = Q.arrow(arrow_id)
    if direct:
        return Letter(arrow.id, True, arrow.source, arrow.target)
    return Letter(arrow.id, False, arrow.target, arrow.source)


def breaks_string(Q: QuiverWithPotential, first: Letter, second: Letter) -> str | None:
    """Why two consecutive letters cannot appear in a string, if they can't.

    Returns:
        str | None: A reason, or None when the pair is fine.
    """
    if first.end != second.start:
        return "letters do not compose"
    if first.arrow == second.arrow and first.direct != second.direct:
        return "letter cancels its predecessor"
    if first.direct and second.direct and Q.is_relation(first.arrow, second.arrow):
        return f"({first.arrow}, {second.arrow}) is a relation subpath"
    if not first.direct and not second.direct \
            and Q.is_relation(second.arrow, first.arrow):
        return f"({second.arrow}, {first.arrow}) is an inverse relation subpath"
    return None


def validate_string(Q: QuiverWithPotential,
                    letters: Iterable[tuple[str, bool] | Letter],
                    base_vertex: str | None = None) -> StringWord:
    """Check a raw letter list and return it as a StringWord.

    Args:
        Q (QuiverWithPotential): The quiver.
        letters (Iterable): (arrow id, direct) pairs or Letter values.
        base_vertex (str | None): Start vertex, required for the empty word.

    Returns:
        StringWord: The validated string.
    """
    built = []
    for position, raw in enumerate(letters):
        if isinstance(raw, Letter):
            raw = (raw.arrow, raw.direct)
        arrow_id, direct = raw
        try:
            built.append(make_letter(Q, arrow_id, direct))
        except ValidationError as err:
            raise ValidationError(err.message, position=position) from err

    if not built:
        if base_vertex is None or base_vertex not in Q.vertices:
            raise ValidationError(f"{base_vertex} is not a vertex of the quiver")
        return StringWord(base_vertex)

    if base_vertex is not None and base_vertex != built[0].start:
        raise ValidationError(f"Word does not start at {base_vertex}", position=0)

    for position, (first, second) in enumerate(zip(built, built[1:])):
        reason = breaks_string(Q, first, second)
        if reason:
            raise ValidationError(f"Not a string: {reason}", position=position + 1)

    return StringWord(built[0].start, tuple(built))


def parse_string(Q: QuiverWithPotential, text: str) -> StringWord:
    """Parse `vertex (('>'|'<') vertex)*`, or `(v)` for a zero-length string."""
    text = text.strip()
    match = re.fullmatch(r"\((.+)\)", text)
    if match:
        text = match.group(1).strip()

    tokens = [token.strip() for token in re.split(r"([<>])", text)]
    vertices, symbols = tokens[0::2], tokens[1::2]
    if any(not v for v in vertices):
        raise ValidationError(f"Cannot parse string {text!r}")

    raw = []
    for position, (a, symbol, b) in enumerate(zip(vertices, symbols, vertices[1:])):
        source, target = (a, b) if symbol == ">" else (b, a)
        found = Q.arrows_from_to(source, target)
        if not found:
            raise ValidationError(f"No arrow {source}->{target}", position=position)
        if len(found) > 1:
            raise ValidationError(f"Arrow {source}->{target} is ambiguous",
                                  position=position)
        raw.append((found[0].id, symbol == ">"))

    return validate_string(Q, raw, base_vertex=vertices[0])


def format_string(w: StringWord | ZeroModule | BoundaryArc) -> str:
    if not isinstance(w, StringWord):
        return str(w)
    if not w.letters:
        return f"({w.base_vertex})"
    parts = [w.base_vertex]
    for letter in w.letters:
        parts.append(letter.symbol)
        parts.append(letter.end)
    return "".join(parts)


def invert(w: StringWord) -> StringWord:
    return StringWord(w.target, tuple(letter.inverse() for letter in reversed(w.letters)))


def vertex_sequence(w: StringWord) -> list[str]:
    return list(w.vertices)


def is_direct(w: StringWord) -> bool:
    """True for strings made of direct letters only (including length 0)."""
    return all(letter.direct for letter in w.letters)


def is_inverse(w: StringWord) -> bool:
    return not any(letter.direct for letter in w.letters)


def encoding(w: StringWord) -> tuple:
    """Sort key: vertex ids interleaved with directions, direct before inverse."""
    key: list = [w.base_vertex]
    for letter in w.letters:
        key.append(0 if letter.direct else 1)
        key.append(letter.end)
    return tuple(key)


def canonicalize(w: StringWord) -> StringWord:
    other = invert(w)
    return w if encoding(w) <= encoding(other) else other


def concatenate(*pieces: StringWord | Letter) -> StringWord:
    """Join strings and letters end to end. Validity is not checked here."""
    base = None
    letters: list[Letter] = []
    for piece in pieces:
        if isinstance(piece, Letter):
            if base is None:
                base = piece.start
            letters.append(piece)
        else:
            if base is None:
                base = piece.base_vertex
            letters.extend(piece.letters)
    return StringWord(base, tuple(letters))


def substring(w: StringWord, start: int, stop: int) -> StringWord:
    """Letters start..stop-1 of w, as a string from vertex `start`."""
    return StringWord(w.vertices[start], w.letters[start:stop])


# ---------------------------------------------------------------------------- #
#   Hook and cohook deletions
# ---------------------------------------------------------------------------- #

def delete_hook_start(w: StringWord) -> StringWord | ZeroModule:
    """Drop the first direct letter and the inverse string before it."""
    if is_inverse(w):
        return ZERO
    i = next(k for k, letter in enumerate(w.letters) if letter.direct)
    return substring(w, i + 1, w.length)


def delete_cohook_start(w: StringWord) -> StringWord | ZeroModule:
    """Drop the first inverse letter and the direct string before it."""
    if is_direct(w):
        return ZERO
    i = next(k for k, letter in enumerate(w.letters) if not letter.direct)
    return substring(w, i + 1, w.length)


def delete_hook_end(w: StringWord) -> StringWord | ZeroModule:
    """Drop the last inverse letter and the direct string after it."""
    if is_direct(w):
        return ZERO
    i = max(k for k, letter in enumerate(w.letters) if not letter.direct)
    return substring(w, 0, i)


def delete_cohook_end(w: StringWord) -> StringWord | ZeroModule:
    """Drop the last direct letter and the inverse string after it."""
    if is_inverse(w):
        return ZERO
    i = max(k for k, letter in enumerate(w.letters) if letter.direct)
    return substring(w, 0, i)


def dimension_vector(w: StringWord) -> StringModule:
    counts = Counter(w.vertices)
    return StringModule(canonicalize(w), tuple(sorted(counts.items())), w.length + 1)


def enumerate_strings(Q: QuiverWithPotential, max_len: int) -> list[StringWord]:
    """Every string with at most `max_len` letters, one per inversion class.

    Args:
        Q (QuiverWithPotential): The quiver.
        max_len (int): Letter bound.

    Returns:
        list[StringWord]: Canonical representatives ordered by length,
            then encoding.
    """
    steps: dict[str, list[Letter]] = {v: [] for v in Q.vertices}
    for arrow in Q.arrows:
        steps[arrow.source].append(make_letter(Q, arrow.id, True))
        steps[arrow.target].append(make_letter(Q, arrow.id, False))

    found: set[StringWord] = set()

    def extend(word: StringWord):
        found.add(canonicalize(word))
        if word.length == max_len:
            return
        for letter in steps[word.target]:
            if word.letters and breaks_string(Q, word.letters[-1], letter):
                continue
            extend(StringWord(word.base_vertex, word.letters + (letter,)))

    for v in Q.vertices:
        extend(StringWord(v))

    result = sorted(found, key=lambda w: (w.length, encoding(w)))
    logger.debug("Enumerated %d strings up to length %d", len(result), max_len)
    return result
