import math
from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from legch.algebra import Generator, HeightAssignment
from legch.augment import enumerate_augmentations, linearized_differential
from legch.persist import (
    Bar,
    FilteredComplex,
    HeightOrderError,
    build_filtered_complex,
    compute_barcode,
    homology_rank_oracle,
)

from support import load_corpus, planted_complex

UNKNOT = load_corpus("unknot")
TREFOIL = load_corpus("trefoil")
RII = load_corpus("trefoil_rii")


def pinned_trefoil_complex():
    eps = enumerate_augmentations(TREFOIL.dga)[2]  # values (1,0,0) on q3,q4,q5
    assert eps.zero_grading_values(TREFOIL.dga) == (1, 0, 0)
    lin = linearized_differential(TREFOIL.dga, eps)
    return build_filtered_complex(lin, TREFOIL.heights)


# --- construction ---------------------------------------------------------

def test_trefoil_complex_builds():
    fc = pinned_trefoil_complex()
    assert len(fc.generators) == 5


def test_unknot_complex_builds():
    lin = linearized_differential(UNKNOT.dga, enumerate_augmentations(UNKNOT.dga)[0])
    fc = build_filtered_complex(lin, UNKNOT.heights)
    assert fc.columns == (frozenset(),)


def test_equal_heights_rejected_naming_the_pair():
    eps = enumerate_augmentations(TREFOIL.dga)[2]
    lin = linearized_differential(TREFOIL.dga, eps)
    flat = HeightAssignment({g.gid: 1 for g in TREFOIL.dga.generators})
    with pytest.raises(HeightOrderError) as exc:
        build_filtered_complex(lin, flat)
    entry, source = exc.value.pair
    assert source in ("q1", "q2")
    assert entry in ("q3", "q5")


def test_degree_rule_enforced():
    from legch.algebra import StructureError

    gens = (Generator(0, "a", 0), Generator(1, "b", 0))
    with pytest.raises(StructureError):
        FilteredComplex.from_columns(
            gens, HeightAssignment({0: 1, 1: 2}), (frozenset(), frozenset({0}))
        )


# --- barcodes ----------------------------------------------------------------

def test_trefoil_barcode_matches_the_worked_example():
    barcode = compute_barcode(pinned_trefoil_complex())
    assert barcode.triples() == (
        (0, Fraction(1), Fraction(4)),
        (0, Fraction(1), math.inf),
        (0, Fraction(1), math.inf),
        (1, Fraction(4), math.inf),
    )
    finite = [b for b in barcode.bars if b.finite][0]
    assert finite.birth_label == "q3+q5"
    assert finite.death_label in ("q1", "q2")
    h1 = barcode.in_degree(1)[0]
    assert h1.birth_label == "q1+q2"


def test_unknot_barcode_is_one_infinite_bar():
    lin = linearized_differential(UNKNOT.dga, enumerate_augmentations(UNKNOT.dga)[0])
    barcode = compute_barcode(build_filtered_complex(lin, UNKNOT.heights))
    assert barcode.triples() == ((1, Fraction(1), math.inf),)
    assert barcode.bars[0].birth_label == "q"


def test_rii_barcode_adds_one_short_bar():
    eps = enumerate_augmentations(RII.dga)[2]
    lin = linearized_differential(RII.dga, eps)
    barcode = compute_barcode(build_filtered_complex(lin, RII.heights))
    assert barcode.triples() == (
        (0, Fraction(1), Fraction(4)),
        (0, Fraction(1), math.inf),
        (0, Fraction(1), math.inf),
        (0, Fraction(2), Fraction(23, 10)),
        (1, Fraction(4), math.inf),
    )


def test_rii_barcode_same_for_every_augmentation():
    expected = None
    for eps in enumerate_augmentations(RII.dga):
        lin = linearized_differential(RII.dga, eps)
        triples = compute_barcode(build_filtered_complex(lin, RII.heights)).triples()
        if expected is None:
            expected = triples
        assert triples == expected


def test_bar_requires_birth_before_death():
    with pytest.raises(ValueError):
        Bar(degree=0, birth=Fraction(2), death=Fraction(2))


def test_empty_complex_has_empty_barcode():
    fc = FilteredComplex.from_columns((), HeightAssignment({}), ())
    assert compute_barcode(fc).bars == ()


# --- oracle -----------------------------------------------------------------

def test_trefoil_rank_oracle():
    fc = pinned_trefoil_complex()
    assert homology_rank_oracle(fc, 0, 2) == 3
    assert homology_rank_oracle(fc, 0, 5) == 2
    assert homology_rank_oracle(fc, 1, 5) == 1
    assert homology_rank_oracle(fc, 0, Fraction(1, 2)) == 0
    assert homology_rank_oracle(fc, 1, Fraction(1, 2)) == 0


def bars_at(barcode, degree, t):
    return sum(
        1 for b in barcode.bars if b.degree == degree and b.birth <= t < b.death
    )


def sample_levels(fc):
    heights = sorted({fc.heights.of(g.gid) for g in fc.generators})
    levels = {Fraction(0), heights[0] - 1, heights[-1] + 1}
    for h in heights:
        levels.add(h)
        levels.add(h + Fraction(1, 8))
        levels.add(h - Fraction(1, 8))
    return sorted(levels)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_barcode_counts_match_rank_oracle(seed):
    fc, _ = planted_complex(Random(seed))
    barcode = compute_barcode(fc)
    degrees = sorted({g.grading for g in fc.generators})
    for degree in degrees:
        for t in sample_levels(fc):
            assert bars_at(barcode, degree, t) == homology_rank_oracle(fc, degree, t)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_barcode_recovers_planted_bars(seed):
    fc, planted = planted_complex(Random(seed))
    assert tuple(sorted(compute_barcode(fc).triples())) == planted


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_no_bar_is_born_dead(seed):
    fc, _ = planted_complex(Random(seed))
    for bar in compute_barcode(fc).bars:
        assert bar.birth < bar.death


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10**9), st.integers(min_value=0, max_value=10**9))
def test_barcode_invariant_under_generator_permutation(seed, perm_seed):
    fc, _ = planted_complex(Random(seed))
    n = len(fc.generators)
    perm = list(range(n))
    Random(perm_seed).shuffle(perm)
    gens = tuple(
        Generator(perm[g.gid], g.name, g.grading) for g in fc.generators
    )
    gens = tuple(sorted(gens, key=lambda g: g.gid))
    heights = HeightAssignment(
        {perm[gid]: h for gid, h in fc.heights.heights.items()}
    )
    columns = [frozenset()] * n
    for gid, col in enumerate(fc.columns):
        columns[perm[gid]] = frozenset(perm[p] for p in col)
    permuted = FilteredComplex.from_columns(gens, heights, tuple(columns))
    assert compute_barcode(permuted).triples() == compute_barcode(fc).triples()


def test_rank_of_boundary_equals_finite_bars_one_degree_down():
    fc = pinned_trefoil_complex()
    barcode = compute_barcode(fc)
    # rank of the degree-1 block is the number of finite bars in degree 0
    killers = [g.gid for g in fc.generators if g.grading == 1]
    rank = sum(1 for b in barcode.bars if b.finite and b.degree == 0)
    from legch.persist import _gf2_rank

    masks = []
    for g in killers:
        m = 0
        for p in fc.columns[g]:
            m |= 1 << p
        masks.append(m)
    assert _gf2_rank(masks) == rank
