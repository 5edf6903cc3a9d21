"""Pair evaluations, USO/PUSO recognizers, and the four-way classifier."""

import random

import pytest

from uso_kit import (
    FaceSpec,
    Outmap,
    PairEvalCounter,
    Verdict,
    antipodal_failures,
    classify,
    enumerate_outmap_functions,
    is_orientation,
    is_puso,
    is_uso_fast,
    is_uso_naive,
    pair_eval,
)

from conftest import BOW, CYCLE, EMBEDDED_TWIN_PEAK, EYE, KM_3, TWIN_PEAK


def test_pair_eval_counts():
    phi = Outmap(2, EYE)
    counter = PairEvalCounter()
    assert pair_eval(phi, 0, 3, counter)
    assert pair_eval(phi, 0, 1, counter)
    assert counter.count == 2


def test_pair_eval_failure_on_tie():
    # antipodal vertices of the twin peak carry equal values
    phi = Outmap(2, TWIN_PEAK)
    assert not pair_eval(phi, 0, 3)
    assert not pair_eval(phi, 1, 2)


@pytest.mark.parametrize(
    "values, verdict",
    [
        (EYE, Verdict.USO),
        (BOW, Verdict.USO),
        (TWIN_PEAK, Verdict.PUSO),
        (CYCLE, Verdict.PUSO),
        ((0, 0, 2, 3), Verdict.NOT_ORIENTATION),
        (KM_3, Verdict.USO),
        (EMBEDDED_TWIN_PEAK, Verdict.OTHER),
    ],
)
def test_classify_fixed_cases(values, verdict):
    n = (len(values) - 1).bit_length()
    assert classify(Outmap(n, values)).verdict is verdict


def test_classifier_reports_smallest_failing_face():
    report = classify(Outmap(3, EMBEDDED_TWIN_PEAK))
    assert report.verdict is Verdict.OTHER
    assert report.puso_face == FaceSpec(0b000, 0b011)
    assert report.witness == (0b000, 0b011)


def test_puso_report_carries_whole_cube_face():
    report = classify(Outmap(2, TWIN_PEAK))
    assert report.puso_face == FaceSpec(0, 3)


def test_not_orientation_witness_is_bad_edge():
    phi = Outmap(2, (0, 0, 2, 3))     # edge 00-10 directed both ways
    ok, witness = is_orientation(phi)
    assert not ok
    assert witness == (0, 1)
    report = classify(phi)
    assert report.verdict is Verdict.NOT_ORIENTATION
    assert (report.witness[0] ^ report.witness[1]).bit_count() == 1


def test_zero_and_one_dimensional():
    assert classify(Outmap(0, (0,))).verdict is Verdict.USO
    assert classify(Outmap(1, (1, 0))).verdict is Verdict.USO
    assert classify(Outmap(1, (0, 0))).verdict is Verdict.NOT_ORIENTATION
    assert classify(Outmap(1, (1, 1))).verdict is Verdict.NOT_ORIENTATION


def test_fast_check_uses_exact_budget():
    """One antipodal pair per face of dimension >= 1: 3**n - 2**n evaluations."""
    for n, values in [(0, (0,)), (1, (1, 0)), (2, EYE), (3, KM_3)]:
        counter = PairEvalCounter()
        assert is_uso_fast(Outmap(n, values), counter)
        assert counter.count == 3**n - 2**n


def test_fast_budget_holds_on_failures_too():
    # the fast check never short-circuits, by design
    for values in (TWIN_PEAK, CYCLE, (0, 0, 2, 3)):
        counter = PairEvalCounter()
        assert not is_uso_fast(Outmap(2, values), counter)
        assert counter.count == 3**2 - 2**2


def test_naive_scans_all_pairs_on_usos():
    counter = PairEvalCounter()
    report = is_uso_naive(Outmap(3, KM_3), counter)
    assert report.verdict is Verdict.USO
    assert counter.count == 8 * 7 // 2


def test_exhaustive_two_dimensional_function_space():
    """All 256 outmap functions of the 2-cube, fast vs naive, known class sizes."""
    verdict_counts = {v: 0 for v in Verdict}
    total = 0
    for phi in enumerate_outmap_functions(2):
        total += 1
        fast = is_uso_fast(phi)
        report = is_uso_naive(phi)
        assert fast == (report.verdict is Verdict.USO)
        assert report.verdict is classify(phi).verdict
        assert is_puso(phi) == (report.verdict is Verdict.PUSO)
        verdict_counts[report.verdict] += 1
    assert total == 4 ** (2**2)
    assert verdict_counts[Verdict.USO] == 12
    assert verdict_counts[Verdict.PUSO] == 4
    assert verdict_counts[Verdict.OTHER] == 0    # every 2-face is the whole cube
    assert verdict_counts[Verdict.NOT_ORIENTATION] == 256 - 16


def test_puso_needs_at_least_two_dimensions():
    assert not is_puso(Outmap(0, (0,)))
    assert not is_puso(Outmap(1, (1, 0)))
    assert not is_puso(Outmap(1, (0, 0)))


def test_antipodal_failures_on_pusos():
    """A PUSO fails every one of its 2**(n-1) whole-cube antipodal pairs."""
    assert antipodal_failures(Outmap(2, TWIN_PEAK)) == 2
    assert antipodal_failures(Outmap(2, CYCLE)) == 2
    assert antipodal_failures(Outmap(2, EYE)) == 0
    assert antipodal_failures(Outmap(3, EMBEDDED_TWIN_PEAK)) == 0


def test_random_outmaps_fast_equals_naive():
    rng = random.Random(2024)
    for _ in range(3000):
        n = rng.choice((3, 4))
        phi = Outmap(n, tuple(rng.getrandbits(n) for _ in range(1 << n)))
        assert is_uso_fast(phi) == (is_uso_naive(phi).verdict is Verdict.USO)
