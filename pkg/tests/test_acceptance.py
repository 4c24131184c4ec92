"""One test per acceptance criterion, each naming the behavior it pins.

Budgets are wall-clock seconds measured around the verifier calls; the
long exhaustive sweep at n = 14 only runs when DELSUB_ACCEPT_N14=1.
"""

import math
import os
import time

import pytest

from delsub import cli, codes, verify


def _elapsed(fn, *args, **kwargs):
    start = time.monotonic()
    result = fn(*args, **kwargs)
    return result, time.monotonic() - start


def test_single_ball_sizes_exact_through_twelve():
    start = time.monotonic()
    for n in range(1, 13):
        report = verify.verify_ball_sizes(n)
        assert report.status == "PASS", report.to_json()
    assert time.monotonic() - start < 10.0


def test_shared_ball_structure_all_pairs_through_eleven():
    for n in range(2, 11):
        report = verify.verify_intersection_bounds(n)
        assert report.status == "PASS", report.to_json()
    report, took = _elapsed(verify.verify_intersection_bounds, 11)
    assert report.status == "PASS", report.to_json()
    assert took < 60.0


def test_run_deletion_distances_through_twelve():
    start = time.monotonic()
    for n in range(1, 13):
        report = verify.verify_del_positions(n)
        assert report.status == "PASS", report.to_json()
    assert time.monotonic() - start < 10.0


def test_constrained_deletion_matches_through_eight():
    start = time.monotonic()
    for n in range(1, 9):
        report = verify.verify_constrained_deletion(n)
        assert report.status == "PASS", report.to_json()
    assert time.monotonic() - start < 10.0


def test_case_ceilings_and_global_extremum_six_through_twelve():
    for n in range(6, 12):
        report = verify.verify_intersection_bounds(n)
        assert report.status == "PASS", report.to_json()
        assert report.extremal_observed == 4 * n - 9
    report, took = _elapsed(verify.verify_intersection_bounds, 12)
    assert report.status == "PASS", report.to_json()
    assert report.extremal_observed == 39
    assert took < 300.0


@pytest.mark.slow
@pytest.mark.skipif(os.environ.get("DELSUB_ACCEPT_N14") != "1",
                    reason="set DELSUB_ACCEPT_N14=1 to sweep n = 14")
def test_case_ceilings_extended_to_fourteen():
    report, took = _elapsed(verify.verify_intersection_bounds, 14)
    assert report.status == "PASS", report.to_json()
    assert report.extremal_observed == 4 * 14 - 9
    assert took < 600.0


def test_size_accounting_identity_and_tables_to_sixteen():
    report = verify.verify_claim_tables(16)
    assert report.status == "PASS", report.to_json()
    assert report.detail["identity_max_n"] == 10


def test_inversion_parity_code_ceiling_eight_through_twelve():
    # The pairwise ceiling 3n - 5 first dominates every structural case at
    # n = 13 (the alternating-window case reaches 2n + 8, and parity does
    # not separate those pairs), so this criterion cannot hold on [8, 12];
    # the verifier proves that with explicit counterexamples, and the same
    # sweep passes at n = 13.
    for n in range(8, 13):
        report = verify.verify_code_theorem("inv", n)
        assert report.detail["redundancy"] <= 1.0
        assert report.status == "PASS", (
            f"n={n}: extremal {report.extremal_observed} exceeds "
            f"{report.bound}; first counterexample "
            f"{report.counterexamples[0] if report.counterexamples else None}"
        )


def test_run_restricted_parity_code_eight_through_twelve():
    for n in range(8, 13):
        report = verify.verify_code_theorem("c2n9", n)
        assert report.status == "PASS", report.to_json()
        assert report.extremal_observed <= 2 * n + 8
        assert report.detail["redundancy"] <= 2.0


def test_window_constrained_code_ten_through_twelve():
    for n in range(10, 13):
        report = verify.verify_code_theorem("cn21", n)
        assert report.status == "PASS", report.to_json()
        assert report.extremal_observed <= n + 20
        assert report.detail["redundancy"] <= math.log2(math.log2(n)) + 3
        assert report.detail["period"] == codes.default_period(n)


def test_vt_cosets_eight_through_twelve():
    for n in range(8, 13):
        report = verify.verify_code_theorem("vt", n)
        assert report.status == "PASS", report.to_json()
        assert report.extremal_observed <= 30
        assert report.detail["cosets"] == 2 * n
        assert report.detail["redundancy"] <= math.log2(n) + 1


def test_parity_vt_code_eight_through_twelve():
    for n in range(8, 13):
        report = verify.verify_code_theorem("cl", n)
        assert report.status == "PASS", report.to_json()
        assert report.extremal_observed <= 6
        assert report.detail["redundancy"] <= 3 * math.log2(n) + 4
        # the other reading of the same target is reported, not asserted
        assert report.detail["alt_redundancy_bound"] == round(math.log2(3 * n) + 4, 6)
        assert isinstance(report.detail["alt_bound_satisfied"], bool)


def test_generic_pair_bad_counts_through_ten():
    for n in range(3, 11):
        report = verify.verify_bad_count(n)
        assert report.status == "PASS", report.to_json()
        assert report.extremal_observed <= 6
    declared = verify.verify_bad_count(10)
    alternate = verify.verify_bad_count(10, convention="post")
    assert alternate.detail["convention"] == "post"
    assert alternate.detail["max_bad"] == declared.detail["max_bad"]


def test_reconstruction_round_trip_parity_vt_best_coset():
    cs = codes.best_coset(codes.CL, 10)
    words = codes.size(cs)
    report, took = _elapsed(
        verify.verify_reconstruction, cs, 7,
        trials=1000, subset_words=20, subset_trials=100,
    )
    assert report.status == "PASS", report.to_json()
    assert report.pairs_checked == 1000 + min(20, words) * 100
    assert took < 60.0


def test_window_rule_and_code_size_formulas():
    for n in range(1, 15):
        period = codes.default_period(n) if n >= 2 else 2
        report = verify.verify_rll(n, period)
        assert report.status == "PASS", report.to_json()
    for n in range(2, 17):
        cap = (n + 1) // 2
        formula = sum(2 * math.comb(n - 1, i) for i in range(cap))
        actual = codes.size(codes.spec(codes.RUN_BOUNDED, n))
        assert actual == formula
        assert actual >= 2 ** (n - 1)


def test_parallel_reports_are_byte_identical(capsys):
    for call in (
        lambda jobs: verify.verify_intersection_bounds(8, jobs=jobs),
        lambda jobs: verify.verify_bad_count(8, jobs=jobs),
        lambda jobs: verify.verify_claim_tables(9, jobs=jobs),
    ):
        assert call(1).to_json() == call(8).to_json()
    outputs = []
    for jobs in ("1", "8"):
        code = cli.main(["verify", "intersection-bounds", "--n", "6", "--jobs", jobs])
        assert code == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
