"""Shared test helpers: independent oracles and random-instance generators.

Everything here deliberately recomputes results by a different route than the
library (symbolic conjugation, exhaustive matching, planted normal forms) so
the main code paths are cross-checked rather than self-checked.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from random import Random

from legch import corpus
from legch.algebra import DGA, Element, Generator, HeightAssignment, apply_differential
from legch.augment import Augmentation
from legch.diagram import InequalitySystem
from legch.persist import Bar, Barcode, FilteredComplex


@lru_cache(maxsize=None)
def load_corpus(name: str):
    return corpus.load(name)


# ---------------------------------------------------------------------------
# symbolic conjugation oracle for the linearized differential

def substitute_units(elem: Element, eps: Augmentation) -> Element:
    """Image of ``elem`` under the algebra map q -> q + eps(q), fully expanded."""
    out = Element.zero()
    for word in elem.words:
        prod = Element.one()
        for g in word:
            term = Element.from_word((g,))
            if eps.values[g]:
                term = term + Element.one()
            prod = prod * term
        out = out + prod
    return out


def linearize_by_conjugation(dga: DGA, eps: Augmentation) -> tuple[frozenset[int], ...]:
    """Conjugate the full differential symbolically, then keep length-1 words."""
    cols = []
    for g in dga.generators:
        pre = substitute_units(Element.from_word((g.gid,)), eps)
        image = substitute_units(apply_differential(pre, dga), eps)
        cols.append(frozenset(w[0] for w in image.words if len(w) == 1))
    return tuple(cols)


# ---------------------------------------------------------------------------
# exhaustive bottleneck matching for small barcodes

def _bf_match_cost(a: Bar, b: Bar):
    if a.finite != b.finite:
        return math.inf
    if not a.finite:
        return abs(a.birth - b.birth)
    return max(abs(a.birth - b.birth), abs(a.death - b.death))


def _bf_delete_cost(a: Bar):
    return (a.death - a.birth) / 2 if a.finite else math.inf


def _bf_degree(bars1, bars2):
    best = [math.inf]

    def rec(i, used, cur):
        if cur >= best[0] and best[0] != math.inf:
            return
        if i == len(bars1):
            total = cur
            for j, b in enumerate(bars2):
                if j not in used:
                    total = max(total, _bf_delete_cost(b))
            if total < best[0]:
                best[0] = total
            return
        a = bars1[i]
        rec(i + 1, used, max(cur, _bf_delete_cost(a)))
        for j, b in enumerate(bars2):
            if j not in used:
                rec(i + 1, used | {j}, max(cur, _bf_match_cost(a, b)))

    rec(0, frozenset(), Fraction(0))
    return best[0]


def brute_force_distance(b1: Barcode, b2: Barcode):
    """Enumerate every matching-with-deletions; only viable for a few bars."""
    degrees = set(b1.degrees()) | set(b2.degrees())
    worst = Fraction(0)
    for k in sorted(degrees):
        d = _bf_degree(b1.in_degree(k), b2.in_degree(k))
        if d == math.inf:
            return math.inf
        worst = max(worst, d)
    return worst


# ---------------------------------------------------------------------------
# planted filtered complexes with a known barcode

def planted_complex(rng: Random, max_n: int = 12):
    """A random valid filtered complex together with its exact barcode.

    Generators are created in canceling pairs (one finite bar each) and
    singletons (one infinite bar each), then the matrix is scrambled by random
    filtration-preserving changes of basis, which leave the barcode unchanged.
    """
    n = rng.randint(1, max_n)
    n_pairs = rng.randint(0, n // 2)

    slots = list(range(n))
    rng.shuffle(slots)
    gradings = [0] * n
    heights: dict[int, Fraction] = {}
    columns: list[set[int]] = [set() for _ in range(n)]
    bars = []

    idx = 0
    for _ in range(n_pairs):
        cycle, killer = slots[idx], slots[idx + 1]
        idx += 2
        g = rng.randint(-2, 2)
        birth = Fraction(rng.randint(1, 60), 4)
        death = birth + Fraction(rng.randint(1, 24), 4)
        gradings[cycle], gradings[killer] = g, g + 1
        heights[cycle], heights[killer] = birth, death
        columns[killer].add(cycle)
        bars.append((g, birth, death))
    for slot in slots[idx:]:
        gradings[slot] = rng.randint(-2, 3)
        heights[slot] = Fraction(rng.randint(1, 80), 4)
        bars.append((gradings[slot], heights[slot], math.inf))

    for _ in range(3 * n):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v or gradings[u] != gradings[v]:
            continue
        if heights[u] >= heights[v]:
            u, v = v, u
        if heights[u] >= heights[v]:
            continue
        # row u += row v, column v += column u: conjugation by (v -> v + u)
        for col in columns:
            if v in col:
                col.symmetric_difference_update({u})
        columns[v].symmetric_difference_update(columns[u])

    generators = tuple(Generator(i, f"g{i}", gradings[i]) for i in range(n))
    fc = FilteredComplex.from_columns(
        generators,
        HeightAssignment(heights),
        tuple(frozenset(c) for c in columns),
    )
    planted = tuple(sorted(bars))
    return fc, planted


def dga_from_complex(fc: FilteredComplex) -> DGA:
    """Wrap a linear differential as a DGA whose words all have length 1."""
    cols = tuple(
        Element((p,) for p in sorted(fc.columns[g.gid])) for g in fc.generators
    )
    return DGA(fc.generators, cols)


# ---------------------------------------------------------------------------
# random barcodes and inequality systems

def random_barcode(rng: Random, max_bars: int = 8) -> Barcode:
    bars = []
    for _ in range(rng.randint(0, max_bars)):
        degree = rng.randint(-1, 2)
        birth = Fraction(rng.randint(1, 40), 4)
        if rng.random() < 0.3:
            bars.append(Bar(degree, birth, math.inf))
        else:
            bars.append(Bar(degree, birth, birth + Fraction(rng.randint(1, 20), 4)))
    return Barcode(tuple(bars))


def random_inequality_system(rng: Random, max_vars: int = 8, max_forms: int = 10):
    n = rng.randint(1, max_vars)
    forms = []
    for _ in range(rng.randint(1, max_forms)):
        k = rng.randint(1, min(n, 4))
        variables = rng.sample(range(n), k)
        form = tuple(
            sorted((v, rng.choice((-2, -1, 1, 1, 2, 2))) for v in variables)
        )
        forms.append(form)
    return InequalitySystem(tuple(forms)), frozenset(range(n))
