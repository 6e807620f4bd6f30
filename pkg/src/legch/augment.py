"""Augmentations of a DGA and the induced linearized differential."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .algebra import DGA, Element, StructureError

# Brute-force enumeration is exponential in the number of grading-0 generators;
# desk-scale knots stay far below this.
MAX_ZERO_GRADING_GENERATORS = 24


@dataclass(frozen=True)
class Augmentation:
    """A {0,1} value per generator id, zero outside grading 0."""

    values: tuple[int, ...]

    def of(self, gid: int) -> int:
        return self.values[gid]

    @classmethod
    def from_zero_grading_values(cls, dga: DGA, bits: Sequence[int]) -> "Augmentation":
        zero_gens = [g.gid for g in dga.generators if g.grading == 0]
        if len(bits) != len(zero_gens):
            raise ValueError(
                f"expected {len(zero_gens)} values for the grading-0 generators, got {len(bits)}"
            )
        values = [0] * len(dga)
        for gid, bit in zip(zero_gens, bits):
            values[gid] = int(bit)
        return cls(tuple(values))

    def zero_grading_values(self, dga: DGA) -> tuple[int, ...]:
        return tuple(self.values[g.gid] for g in dga.generators if g.grading == 0)


def evaluate(eps: Augmentation, elem: Element) -> int:
    """Algebra-map evaluation: unit word -> 1, word -> product of values, sums mod 2."""
    total = 0
    for word in elem.words:
        term = 1
        for g in word:
            term &= eps.values[g]
            if not term:
                break
        total ^= term
    return total


def augmentation_violations(dga: DGA, eps: Augmentation) -> list[str]:
    out = []
    if len(eps.values) != len(dga):
        return [f"value vector has length {len(eps.values)}, expected {len(dga)}"]
    for g in dga.generators:
        if g.grading != 0 and eps.values[g.gid] != 0:
            out.append(f"nonzero value on {g.name}, which has grading {g.grading}")
    for g in dga.generators:
        if evaluate(eps, dga.d(g.gid)) != 0:
            out.append(f"d({g.name}) does not evaluate to 0")
    return out


def is_valid_augmentation(dga: DGA, eps: Augmentation) -> bool:
    return not augmentation_violations(dga, eps)


def enumerate_augmentations(dga: DGA) -> list[Augmentation]:
    """All augmentations, by brute force over the grading-0 generators.

    The result is ordered lexicographically by the value vector, so augmentation
    indices are stable across runs.
    """
    zero_gens = [g.gid for g in dga.generators if g.grading == 0]
    if len(zero_gens) > MAX_ZERO_GRADING_GENERATORS:
        raise ValueError(
            f"{len(zero_gens)} grading-0 generators exceeds the enumeration bound "
            f"of {MAX_ZERO_GRADING_GENERATORS}"
        )
    found = []
    for bits in product((0, 1), repeat=len(zero_gens)):
        eps = Augmentation.from_zero_grading_values(dga, bits)
        if all(evaluate(eps, col) == 0 for col in dga.differential):
            found.append(eps)
    return found


def linear_part(elem: Element, eps: Augmentation) -> frozenset[int]:
    """Length-1 part of the image of ``elem`` under q -> q + eps(q), as a generator set.

    Per word q_{i1}..q_{ik}, position l contributes q_{il} with coefficient
    prod_{m != l} eps(q_{im}); only words with at most one eps-zero letter survive.
    """
    acc: set[int] = set()

    def toggle(g: int) -> None:
        if g in acc:
            acc.discard(g)
        else:
            acc.add(g)

    for word in elem.words:
        zero_positions = [i for i, g in enumerate(word) if eps.values[g] == 0]
        if len(zero_positions) > 1:
            continue
        if len(zero_positions) == 1:
            toggle(word[zero_positions[0]])
        else:
            for g in word:
                toggle(g)
    return frozenset(acc)


@dataclass(frozen=True)
class LinearizedComplex:
    """Z2 chain complex on the generator span; columns[q] is the support of d1(q)."""

    dga: DGA
    columns: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.columns) != len(self.dga):
            raise StructureError("one column per generator required")
        for gid, col in enumerate(self.columns):
            gq = self.dga.grading_of(gid)
            for p in col:
                if self.dga.grading_of(p) != gq - 1:
                    raise StructureError(
                        f"entry ({self.dga.generator(p).name}, "
                        f"{self.dga.generator(gid).name}) violates the degree -1 rule"
                    )
        for gid, col in enumerate(self.columns):
            square: set[int] = set()
            for p in col:
                square ^= self.columns[p]
            if square:
                raise StructureError(
                    f"linearized differential does not square to zero on "
                    f"{self.dga.generator(gid).name}"
                )


def linearized_differential(dga: DGA, eps: Augmentation) -> LinearizedComplex:
    """Linearize the differential with respect to ``eps``.

    Uses the per-word product formula above; the full symbolic conjugation is
    kept as a test oracle.
    """
    problems = augmentation_violations(dga, eps)
    if problems:
        raise ValueError("invalid augmentation: " + "; ".join(problems))
    columns = tuple(linear_part(dga.d(g.gid), eps) for g in dga.generators)
    return LinearizedComplex(dga, columns)
