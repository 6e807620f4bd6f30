"""Free noncommutative Z2 algebra on graded generators, with a differential.

Words are tuples of generator ids; the empty tuple is the unit.  Elements are
mod-2 reduced finite sets of words.  Everything is immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Word = tuple[int, ...]

UNIT_WORD: Word = ()


class StructureError(ValueError):
    """Data refers to generators or heights that do not exist."""


@dataclass(frozen=True)
class Generator:
    gid: int
    name: str
    grading: int


class Element:
    """A Z2-linear combination of words.  The empty combination is zero."""

    __slots__ = ("words",)

    words: frozenset[Word]

    def __init__(self, words: Iterable[Word] = ()):
        acc: set[Word] = set()
        for w in words:
            w = tuple(w)
            if w in acc:
                acc.discard(w)
            else:
                acc.add(w)
        object.__setattr__(self, "words", frozenset(acc))

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    @classmethod
    def one(cls) -> "Element":
        return cls((UNIT_WORD,))

    @classmethod
    def from_word(cls, word: Sequence[int]) -> "Element":
        return cls((tuple(word),))

    def __bool__(self) -> bool:
        return bool(self.words)

    def __add__(self, other: "Element") -> "Element":
        return Element(self.words.symmetric_difference(other.words))

    def __mul__(self, other: "Element") -> "Element":
        return Element(a + b for a in self.words for b in other.words)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Element) and self.words == other.words

    def __hash__(self) -> int:
        return hash(self.words)

    def __repr__(self) -> str:
        if not self.words:
            return "Element(0)"
        return "Element(%s)" % " + ".join(
            "1" if not w else "*".join(map(str, w)) for w in sorted(self.words)
        )


@dataclass(frozen=True)
class DGA:
    """Generators with gradings plus a differential, one Element per generator."""

    generators: tuple[Generator, ...]
    differential: tuple[Element, ...]

    def __post_init__(self):
        ids = [g.gid for g in self.generators]
        if ids != list(range(len(ids))):
            raise StructureError("generator ids must be 0..n-1 in order")
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise StructureError("generator names must be distinct")
        if len(self.differential) != len(self.generators):
            raise StructureError("differential must be defined for every generator")
        n = len(self.generators)
        for gid, elem in enumerate(self.differential):
            for word in elem.words:
                for letter in word:
                    if not (0 <= letter < n):
                        raise StructureError(
                            f"differential of {names[gid]} uses unknown generator id {letter}"
                        )

    @classmethod
    def from_data(
        cls,
        generators: Sequence[tuple[str, int]],
        differential: Mapping[str, Sequence[Sequence[str]]],
    ) -> "DGA":
        """Build from (name, grading) pairs and name-level differential words."""
        gens = tuple(
            Generator(i, name, grading) for i, (name, grading) in enumerate(generators)
        )
        index = {g.name: g.gid for g in gens}
        if len(index) != len(gens):
            raise StructureError("generator names must be distinct")
        unknown = set(differential) - set(index)
        if unknown:
            raise StructureError(f"differential given for unknown generator {min(unknown)!r}")
        cols = []
        for g in gens:
            if g.name not in differential:
                raise StructureError(f"no differential given for generator {g.name!r}")
            words = []
            for word in differential[g.name]:
                try:
                    words.append(tuple(index[letter] for letter in word))
                except KeyError as exc:
                    raise StructureError(
                        f"differential of {g.name!r} uses unknown generator {exc.args[0]!r}"
                    ) from None
            cols.append(Element(words))
        return cls(gens, tuple(cols))

    def __len__(self) -> int:
        return len(self.generators)

    def generator(self, gid: int) -> Generator:
        try:
            return self.generators[gid]
        except IndexError:
            raise StructureError(f"unknown generator id {gid}") from None

    def gid_of(self, name: str) -> int:
        for g in self.generators:
            if g.name == name:
                return g.gid
        raise StructureError(f"unknown generator {name!r}")

    def grading_of(self, gid: int) -> int:
        return self.generator(gid).grading

    def d(self, gid: int) -> Element:
        self.generator(gid)
        return self.differential[gid]


def _as_height(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError(
            "heights must be exact (int, Fraction or decimal string), not float"
        )
    return Fraction(value)


@dataclass(frozen=True)
class HeightAssignment:
    """Strictly positive height per generator id; the filtration datum."""

    heights: Mapping[int, Fraction]

    def __post_init__(self):
        fixed = {gid: _as_height(h) for gid, h in self.heights.items()}
        for gid, h in fixed.items():
            if h <= 0:
                raise ValueError(f"height of generator {gid} must be > 0, got {h}")
        object.__setattr__(self, "heights", fixed)

    def of(self, gid: int) -> Fraction:
        try:
            return self.heights[gid]
        except KeyError:
            raise StructureError(f"no height assigned to generator id {gid}") from None

    def with_entries(self, extra: Mapping[int, Fraction]) -> "HeightAssignment":
        merged = dict(self.heights)
        merged.update(extra)
        return HeightAssignment(merged)


def word_grading(word: Sequence[int], dga: DGA) -> int:
    """Sum of letter gradings; the unit word has grading 0."""
    return sum(dga.generator(g).grading for g in word)


def height_of_word(word: Sequence[int], h: HeightAssignment) -> Fraction:
    return sum((h.of(g) for g in word), Fraction(0))


def height_of_element(elem: Element, h: HeightAssignment):
    """Max over word heights; -inf for the zero element, 0 for the unit word."""
    if not elem.words:
        return -math.inf
    return max(height_of_word(w, h) for w in elem.words)


def apply_differential(elem: Element, dga: DGA) -> Element:
    """Extend the generator-level differential by linearity and the Leibniz rule."""
    out = Element.zero()
    for word in elem.words:
        for i, letter in enumerate(word):
            prefix, suffix = word[:i], word[i + 1 :]
            out = out + Element(prefix + dw + suffix for dw in dga.d(letter).words)
    return out


def format_word(word: Sequence[int], dga: DGA) -> str:
    if not word:
        return "1"
    return "".join(dga.generator(g).name for g in word)


def format_element(elem: Element, dga: DGA, sep: str = " + ") -> str:
    if not elem.words:
        return "0"
    ordered = sorted(elem.words, key=lambda w: (len(w), w))
    return sep.join(format_word(w, dga) for w in ordered)


@dataclass(frozen=True)
class Violation:
    kind: str  # "grading" or "d_squared"
    generator: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_dga(dga: DGA) -> ValidationReport:
    """Check that every differential word drops the grading by exactly 1 and that
    the differential squares to zero on every generator."""
    found: list[Violation] = []
    for g in dga.generators:
        for word in dga.d(g.gid).words:
            wg = word_grading(word, dga)
            if wg != g.grading - 1:
                found.append(
                    Violation(
                        "grading",
                        g.name,
                        f"word {format_word(word, dga)} in d({g.name}) has grading "
                        f"{wg}, expected {g.grading - 1}",
                    )
                )
    for g in dga.generators:
        dd = apply_differential(dga.d(g.gid), dga)
        if dd:
            found.append(
                Violation(
                    "d_squared",
                    g.name,
                    f"d(d({g.name})) = {format_element(dd, dga)} is nonzero",
                )
            )
    return ValidationReport(tuple(found))
