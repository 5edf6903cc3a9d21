"""Exhaustive streams, facet composition, count tables, canonical orbits."""

import itertools
import random

import pytest

from uso_kit import (
    CountRow,
    Outmap,
    ResourceLimitError,
    Verdict,
    canonical_form,
    classify,
    connect_facets,
    count_odd_successor,
    count_orbits,
    count_table,
    count_uso_successor,
    enumerate_class,
    enumerate_odd,
    enumerate_orientations,
    enumerate_outmap_functions,
    enumerate_pusos,
    enumerate_usos,
    flip,
    is_border,
    is_odd,
    is_puso,
    is_uso_naive,
    klee_minty,
    orbit_representatives,
    parse_uso,
    random_odd,
    random_outmap,
    random_puso,
    random_uso,
)

from conftest import BOW, KM_3


# ---------------------------------------------------------------------------
# streams


def test_function_space_sizes():
    assert sum(1 for _ in enumerate_outmap_functions(0)) == 1
    assert sum(1 for _ in enumerate_outmap_functions(1)) == 4
    assert sum(1 for _ in enumerate_outmap_functions(2)) == 256
    with pytest.raises(ResourceLimitError):
        next(enumerate_outmap_functions(3))


def test_orientation_space_sizes():
    for n in range(4):
        edges = n * 2 ** (n - 1) if n else 0
        assert sum(1 for _ in enumerate_orientations(n)) == 2**edges
    with pytest.raises(ResourceLimitError):
        next(enumerate_orientations(4))


def test_orientations_are_orientations():
    for phi in enumerate_orientations(2):
        assert classify(phi).verdict is not Verdict.NOT_ORIENTATION


def test_uso_stream_counts_and_validity():
    for n, expected in enumerate((1, 2, 12, 744)):
        seen = set()
        for phi in enumerate_usos(n):
            assert is_uso_naive(phi).verdict is Verdict.USO
            seen.add(phi.values)
        assert len(seen) == expected
    with pytest.raises(ResourceLimitError):
        next(enumerate_usos(4))


def test_puso_stream_counts_and_validity():
    for n, expected in enumerate((0, 0, 4, 16)):
        count = 0
        for phi in enumerate_pusos(n):
            assert is_puso(phi)
            count += 1
        assert count == expected


def test_odd_stream_counts_and_validity():
    for n, expected in enumerate((1, 2, 8, 112)):
        seen = set()
        for phi in enumerate_odd(n):
            assert is_odd(phi)[0]
            seen.add(phi.values)
        assert len(seen) == expected
    # dimension 4: distinctness and spot validity, full count
    values_seen = set()
    rng = random.Random(99)
    sample_at = {rng.randrange(12928) for _ in range(60)}
    for idx, phi in enumerate(enumerate_odd(4)):
        values_seen.add(phi.values)
        if idx in sample_at:
            assert is_odd(phi)[0]
    assert len(values_seen) == 12928
    with pytest.raises(ResourceLimitError):
        next(enumerate_odd(5))


def test_border_stream_is_dual_of_odd():
    for n in range(4):
        border = [phi.values for phi in enumerate_class("border", n)]
        assert len(border) == len(set(border)) == (1, 2, 8, 112)[n]
        for values in border[:20]:
            assert is_border(Outmap(n, values))[0]


def test_enumerate_class_rejects_unknown():
    with pytest.raises(ValueError):
        next(enumerate_class("nope", 2))


def test_stream_order_is_stable():
    first = [phi.values for phi in itertools.islice(enumerate_usos(3), 5)]
    second = [phi.values for phi in itertools.islice(enumerate_usos(3), 5)]
    assert first == second


# ---------------------------------------------------------------------------
# facet composition


def test_connect_facets_fixed_case():
    bow = Outmap(2, BOW)
    composed = connect_facets(bow, bow, 0)
    assert composed is not None
    assert composed.values == (0, 5, 7, 2, 4, 1, 3, 6)
    assert is_odd(composed)[0]
    assert canonical_form(composed) == canonical_form(klee_minty(3))


def test_connect_facets_seed_flip():
    bow = Outmap(2, BOW)
    a = connect_facets(bow, bow, 0)
    b = connect_facets(bow, bow, 1)
    # same facet values, all connecting edges reversed
    top = 0b100
    for v in range(8):
        assert (a[v] & ~top) == (b[v] & ~top)
        assert (a[v] & top) != (b[v] & top)


def test_connect_facets_validates_arguments(bow, km_3):
    with pytest.raises(ValueError):
        connect_facets(bow, km_3, 0)
    with pytest.raises(ValueError):
        connect_facets(bow, bow, 2)


def test_composition_filter_matches_generic_odd_test():
    """Every candidate gluing of two odd 2-cubes, filtered two equivalent ways."""
    facets = list(enumerate_odd(2))
    composed_valid = set()
    for lower in facets:
        for upper in facets:
            for seed in (0, 1):
                candidate = connect_facets(lower, upper, seed)
                assert candidate is not None   # odd facets always propagate
                if classify(candidate).verdict is Verdict.USO and is_odd(candidate)[0]:
                    composed_valid.add(candidate.values)
    assert composed_valid == {phi.values for phi in enumerate_odd(3)}


# ---------------------------------------------------------------------------
# counting


def test_successor_counts_match_direct_enumeration():
    assert count_uso_successor(0) == 2
    assert count_uso_successor(1) == 12
    assert count_uso_successor(2) == 744
    assert count_odd_successor(0) == 2
    assert count_odd_successor(1) == 8
    assert count_odd_successor(2) == 112
    assert count_odd_successor(3) == 12928


def test_uso_four_dimensional_count():
    """The first value beyond direct enumeration, from facet-pair composition."""
    assert count_uso_successor(3) == 5_541_744


def test_sharded_counts_are_deterministic():
    assert count_uso_successor(2, jobs=3) == 744
    assert count_odd_successor(3, jobs=2) == 12928


def test_successor_limits():
    with pytest.raises(ResourceLimitError):
        count_uso_successor(4)
    with pytest.raises(ResourceLimitError):
        count_odd_successor(5)


def test_count_table_default_scope():
    table = count_table(4)
    assert table.max_n == 4
    assert table.rows[0] == CountRow(uso=1, puso=0, border=1, odd=1)
    assert table.rows[1] == CountRow(uso=2, puso=0, border=2, odd=2)
    assert table.rows[2] == CountRow(uso=12, puso=4, border=8, odd=8)
    assert table.rows[3] == CountRow(uso=744, puso=16, border=112, odd=112)
    assert table.rows[4] == CountRow(uso=None, puso=224, border=12928, odd=12928)


def test_count_table_extends_to_dimension_five():
    table = count_table(5)
    assert table.rows[5] == CountRow(uso=None, puso=25_856, border=None, odd=None)


def test_count_table_opt_in_uso4():
    table = count_table(4, opt_in=("uso4",))
    assert table.rows[4].uso == 5_541_744


def test_count_table_validates_arguments():
    with pytest.raises(ValueError):
        count_table(3, opt_in=("cake",))
    with pytest.raises(ResourceLimitError):
        count_table(6)


# ---------------------------------------------------------------------------
# canonical forms and orbits


def test_canonical_form_fixed_point():
    form = canonical_form(klee_minty(3))
    again = canonical_form(form.to_outmap())
    assert form == again


def test_canonical_form_invariant_under_relabelings():
    rng = random.Random(5)
    base = klee_minty(3)
    target = canonical_form(base)
    for _ in range(25):
        relabeled = _random_relabeling(base, rng)
        assert canonical_form(relabeled) == target


def _random_relabeling(phi: Outmap, rng) -> Outmap:
    n = phi.n
    perm = list(range(n))
    rng.shuffle(perm)
    shift = rng.randrange(1 << n)

    def on_mask(mask: int) -> int:
        out = 0
        for src in range(n):
            if mask >> src & 1:
                out |= 1 << perm[src]
        return out

    values = [0] * (1 << n)
    for v in range(1 << n):
        values[on_mask(v) ^ shift] = on_mask(phi[v])
    return Outmap(n, tuple(values))


def test_flip_stays_in_orbit_only_sometimes(km_3):
    # flips realize vertex translations composed with value changes; a flip
    # by the full mask equals relabeling by translation with R = full mask
    translated = flip(km_3, 0b111)
    bodies = {canonical_form(km_3).body, canonical_form(translated).body}
    assert len(bodies) in (1, 2)


def test_orbit_counts_for_small_classes():
    assert count_orbits(enumerate_orientations(2)) == 4
    assert count_orbits(enumerate_usos(2)) == 2
    assert count_orbits(enumerate_usos(3)) == 19
    assert count_orbits(enumerate_pusos(3)) == 2


def test_orbit_sizes_of_two_dimensional_usos():
    sizes = {}
    for phi in enumerate_usos(2):
        sizes.setdefault(canonical_form(phi).body, 0)
        sizes[canonical_form(phi).body] += 1
    assert sorted(sizes.values()) == [4, 8]


def test_orbit_representatives_sorted_and_canonical():
    reps = orbit_representatives(enumerate_usos(2))
    assert len(reps) == 2
    assert [r.body for r in reps] == sorted(r.body for r in reps)
    for rep in reps:
        phi = rep.to_outmap()
        assert canonical_form(phi) == rep
        assert parse_uso(f"{rep.n}\n" + rep.body.decode()) == phi


def test_orbit_validation():
    with pytest.raises(ValueError):
        count_orbits([Outmap(1, (1, 0)), Outmap(2, (0, 1, 3, 2))])
    with pytest.raises(ResourceLimitError):
        count_orbits([klee_minty(5)])
    with pytest.raises(ResourceLimitError):
        canonical_form(klee_minty(6))


# ---------------------------------------------------------------------------
# random generators


def test_random_uso_is_uso(rng):
    for n in range(5):
        for _ in range(8):
            phi = random_uso(n, rng)
            assert phi.n == n
            assert is_uso_naive(phi).verdict is Verdict.USO


def test_random_odd_and_puso(rng):
    for n in range(5):
        assert is_odd(random_odd(n, rng))[0]
    for n in range(2, 6):
        assert is_puso(random_puso(n, rng))


def test_random_outmap_matches_seed():
    a = random_outmap(3, random.Random(11))
    b = random_outmap(3, random.Random(11))
    assert a == b
