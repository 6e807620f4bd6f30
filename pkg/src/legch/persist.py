"""Height-filtered Z2 chain complexes and barcode computation per degree."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Generator, HeightAssignment, StructureError
from .augment import LinearizedComplex


class HeightOrderError(StructureError):
    """The differential is not strictly height-decreasing for the given heights."""

    def __init__(self, source: str, entry: str):
        self.pair = (entry, source)
        super().__init__(
            f"generator {entry} appears in d({source}) but does not sit strictly "
            f"below it; these heights are invalid for this differential"
        )


@dataclass(frozen=True)
class FilteredComplex:
    generators: tuple[Generator, ...]
    heights: HeightAssignment
    columns: tuple[frozenset[int], ...]

    @classmethod
    def from_columns(
        cls,
        generators: Sequence[Generator],
        heights: HeightAssignment,
        columns: Sequence[frozenset[int]],
    ) -> "FilteredComplex":
        generators = tuple(generators)
        columns = tuple(frozenset(c) for c in columns)
        if len(columns) != len(generators):
            raise StructureError("one column per generator required")
        grading = {g.gid: g.grading for g in generators}
        name = {g.gid: g.name for g in generators}
        for g in generators:
            heights.of(g.gid)
        for gid, col in enumerate(columns):
            for p in col:
                if grading[p] != grading[gid] - 1:
                    raise StructureError(
                        f"entry ({name[p]}, {name[gid]}) violates the degree -1 rule"
                    )
                if not heights.of(p) < heights.of(gid):
                    raise HeightOrderError(name[gid], name[p])
        for gid in range(len(columns)):
            square: set[int] = set()
            for p in columns[gid]:
                square ^= columns[p]
            if square:
                raise StructureError(f"differential does not square to zero at {name[gid]}")
        return cls(generators, heights, columns)

    def name_of(self, gid: int) -> str:
        return self.generators[gid].name

    def grading_of(self, gid: int) -> int:
        return self.generators[gid].grading


def build_filtered_complex(
    lin: LinearizedComplex, h: HeightAssignment
) -> FilteredComplex:
    return FilteredComplex.from_columns(lin.dga.generators, h, lin.columns)


@dataclass(frozen=True)
class Bar:
    degree: int
    birth: Fraction
    death: Fraction | float  # math.inf for an infinite bar
    birth_label: str | None = None
    death_label: str | None = None

    def __post_init__(self):
        if not self.birth < self.death:
            raise ValueError(f"bar must have birth < death, got [{self.birth}, {self.death})")

    @property
    def finite(self) -> bool:
        return self.death != math.inf

    @property
    def length(self) -> Fraction | float:
        return self.death - self.birth


def _bar_key(bar: Bar):
    return (bar.degree, bar.birth, bar.death, bar.birth_label or "", bar.death_label or "")


@dataclass(frozen=True)
class Barcode:
    bars: tuple[Bar, ...]

    def __post_init__(self):
        object.__setattr__(self, "bars", tuple(sorted(self.bars, key=_bar_key)))

    def in_degree(self, degree: int) -> tuple[Bar, ...]:
        return tuple(b for b in self.bars if b.degree == degree)

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({b.degree for b in self.bars}))

    def triples(self) -> tuple[tuple[int, Fraction, Fraction | float], ...]:
        """The bar multiset without labels, for comparisons."""
        return tuple((b.degree, b.birth, b.death) for b in self.bars)


def compute_barcode(fc: FilteredComplex) -> Barcode:
    """Standard column reduction over Z2, columns ordered by (height, id).

    A surviving pivot pairs a killer with the cycle it caps, giving a finite
    bar; unpaired cycle positions give infinite bars.  Ties in height are
    harmless because the differential strictly decreases height, so equal-height
    generators never pair with each other; the id tie-break fixes reproducible
    representative labels.
    """
    n = len(fc.generators)
    order = sorted(range(n), key=lambda g: (fc.heights.of(g), g))
    pos = {g: i for i, g in enumerate(order)}

    reduced: list[int] = []  # column bitmasks over sorted positions
    combo: list[int] = []  # which original columns were summed (over sorted positions)
    pivot_owner: dict[int, int] = {}
    for j, g in enumerate(order):
        col = 0
        for p in fc.columns[g]:
            col |= 1 << pos[p]
        rep = 1 << j
        while col:
            low = col.bit_length() - 1
            k = pivot_owner.get(low)
            if k is None:
                break
            col ^= reduced[k]
            rep ^= combo[k]
        reduced.append(col)
        combo.append(rep)
        if col:
            pivot_owner[col.bit_length() - 1] = j

    def label(mask: int) -> str:
        gids = sorted(order[i] for i in range(mask.bit_length()) if mask >> i & 1)
        return "+".join(fc.name_of(g) for g in gids)

    bars = []
    killed = set()
    for j, g in enumerate(order):
        if reduced[j]:
            i = order[reduced[j].bit_length() - 1]
            killed.add(i)
            bars.append(
                Bar(
                    degree=fc.grading_of(i),
                    birth=fc.heights.of(i),
                    death=fc.heights.of(g),
                    birth_label=label(reduced[j]),
                    death_label=fc.name_of(g),
                )
            )
    for j, g in enumerate(order):
        if not reduced[j] and g not in killed:
            bars.append(
                Bar(
                    degree=fc.grading_of(g),
                    birth=fc.heights.of(g),
                    death=math.inf,
                    birth_label=label(combo[j]),
                )
            )
    return Barcode(tuple(bars))


def _gf2_rank(vectors: Sequence[int]) -> int:
    basis: dict[int, int] = {}
    rank = 0
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                rank += 1
                break
    return rank


def homology_rank_oracle(fc: FilteredComplex, degree: int, t) -> int:
    """Rank of the homology of the sub-complex of generators with height <= t,
    by plain Gaussian elimination.  Cross-checks compute_barcode."""
    inside = [g.gid for g in fc.generators if fc.heights.of(g.gid) <= t]
    at = [g for g in inside if fc.grading_of(g) == degree]
    above = [g for g in inside if fc.grading_of(g) == degree + 1]

    def mask(gid: int) -> int:
        m = 0
        for p in fc.columns[gid]:
            m |= 1 << p
        return m

    rank_at = _gf2_rank([mask(g) for g in at])
    rank_above = _gf2_rank([mask(g) for g in above])
    return len(at) - rank_at - rank_above
