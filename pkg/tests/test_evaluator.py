import random
from fractions import Fraction as F

import pytest

from oracles import opm_by_definition, moments_by_definition
from orderedpmf import DomainError
from orderedpmf.evaluator import compare, evaluate_sequence
from orderedpmf.numeric import geometric_normalize

ALICE = [90, 95, 85, 90]
BOB = [85, 95, 90, 90]


def test_alice_and_bob_rows():
    a = evaluate_sequence("Alice", ALICE)
    b = evaluate_sequence("Bob", BOB)
    assert a.variance == pytest.approx(0.00156616, abs=5e-9)
    assert b.variance == pytest.approx(0.00152324, abs=5e-9)
    assert a.expectation == pytest.approx(1.00157, abs=5e-6)
    assert b.expectation == pytest.approx(1.00152, abs=5e-6)
    assert list(a.distribution.support) == list(a.normalization.normalized)


def test_order_is_kept():
    ev = evaluate_sequence("x", [3, 1, 2])
    assert [x * ev.normalization.scale for x in ev.distribution.support] == pytest.approx([3, 1, 2])


def test_constant_scores():
    ev = evaluate_sequence("c", [90, 90, 90])
    assert ev.variance == 0
    assert ev.distribution.probs == (F(1, 3),) * 3


def test_nonpositive_score_names_index():
    with pytest.raises(DomainError) as info:
        evaluate_sequence("Carol", [90, 0, 80])
    assert info.value.index == 1
    assert "Carol" in str(info.value)


def test_compare_bob_wins():
    report = compare([("Alice", ALICE), ("Bob", BOB)])
    assert report.winner == "Bob"
    assert not report.tie
    assert report.ranking == ["Bob", "Alice"]
    assert report.warnings == []


def test_compare_identical_sequences_tie():
    report = compare([("a", ALICE), ("b", list(ALICE))])
    assert report.tie
    assert report.winner == ("a", "b")


def test_compare_exact_tie_uses_zero_tolerance():
    report = compare([("a", [4, 1]), ("b", [1, 4]), ("c", [9, 1])])
    assert report.evaluations[0].distribution.support.is_exact
    # (4,1) and (1,4) are rotations of each other
    assert report.winner == ("a", "b")


def test_compare_single_entry():
    report = compare([("solo", [1, 2, 3])])
    assert report.winner == "solo"
    assert report.ranking == ["solo"]


def test_compare_errors():
    with pytest.raises(DomainError):
        compare([])
    with pytest.raises(DomainError):
        compare([("a", [1]), ("a", [2])])


def test_compare_permutations_against_oracle():
    rng = random.Random(17)
    base = [rng.randint(50, 100) for _ in range(6)]
    entries = []
    for k in range(3):
        perm = list(base)
        rng.shuffle(perm)
        entries.append((f"p{k}", perm))
    report = compare(entries)
    expected = {}
    for name, perm in entries:
        norm = geometric_normalize(perm).normalized
        xs = list(norm)
        expected[name] = moments_by_definition(xs, opm_by_definition(xs))[1]
    assert report.ranking == sorted(expected, key=lambda n: (expected[n], n))
    for ev in report.evaluations:
        assert ev.variance == pytest.approx(expected[ev.name], rel=1e-12)


def test_shared_multiset_shares_scale():
    report = compare([("Alice", ALICE), ("Bob", BOB)])
    a, b = report.evaluations
    assert a.normalization.scale == b.normalization.scale


def test_different_multisets_warn():
    report = compare([("a", [1, 2, 3]), ("b", [1, 2, 4])])
    assert report.warnings


def test_extras_rows():
    report = compare([("a", [F(6, 5), 1, 1, F(5, 6)])], extras=True)
    extra = report.table_extras["a"]
    assert extra["GPM"][0].probs == (F(36, 121), F(30, 121), F(30, 121), F(25, 121))
    assert extra["APM"][1].variance == F(27, 1600)


def test_scale_changes_nothing():
    base = compare([("Alice", ALICE), ("Bob", BOB)])
    for c in (10, F(1, 7), F(7, 2)):
        scaled = compare([("Alice", [c * x for x in ALICE]), ("Bob", BOB)])
        assert scaled.ranking == base.ranking
        assert abs(scaled.evaluations[0].variance - base.evaluations[0].variance) < 1e-10


def test_evaluator_variance_never_equal_for_alice_bob():
    assert evaluate_sequence("a", ALICE).variance != evaluate_sequence("b", BOB).variance
