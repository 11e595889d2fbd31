"""Claim checkers and the full verification sweep."""

import pytest

import cubres.verify as verify
from cubres import (
    CLAIMS,
    Counterexample,
    DiffPlusC,
    Prime,
    TheoremReport,
    build_matrix,
    check_propositions,
    check_remark_n1,
    check_row_period_np,
    check_t3_1,
    check_t3_2,
    check_t3_3,
    check_t3_4,
    check_t3_5,
    check_t3_6,
    check_t3_7,
    check_table_period,
    determinant,
    report_lines,
    report_text,
    verify_all,
)


def test_report_passed_tracks_counterexamples():
    r = TheoremReport("T3_1", Prime(5), 5)
    assert r.passed
    r.counterexamples.append(Counterexample(1, 0, 0, 1))
    assert not r.passed


def test_checkers_reject_wrong_prime_class():
    for checker in (check_t3_1, check_t3_2, check_t3_3, check_t3_4,
                    check_t3_5, check_t3_6, check_row_period_np,
                    check_table_period, check_remark_n1):
        with pytest.raises(ValueError):
            checker(7)  # 3k+1
        with pytest.raises(ValueError):
            checker(3)
    with pytest.raises(ValueError):
        check_t3_7(7)


def test_t3_1_alternating_formula():
    for p in (5, 11, 17):
        r = check_t3_1(p)
        assert r.passed and r.cases_checked == p
    # the formula anchors the shared corner with the full-order claim
    assert determinant(build_matrix(DiffPlusC(0), 11, 11)) == 10


def test_t3_2_unit_determinants():
    for p in (5, 11):
        r = check_t3_2(p)
        assert r.passed
        assert r.cases_checked == 2 * (p - 2)


def test_t3_3_full_order():
    for p in (5, 11):
        r = check_t3_3(p)
        assert r.passed
        assert r.cases_checked == p - 1


def test_t3_4_interior_zeros_and_mechanism():
    r5 = check_t3_4(5)
    assert r5.passed and r5.cases_checked == 4
    r11 = check_t3_4(11)
    assert r11.passed and r11.cases_checked == 64
    # every in-range case exhibits at least two all-ones columns
    assert any("64/64" in note for note in r11.notes)


def test_t3_5_penultimate_order():
    for p in (5, 11):
        r = check_t3_5(p)
        assert r.passed
        assert r.cases_checked == p - 1


def test_t3_2_and_t3_5_agree_at_shared_cell():
    for p in (5, 11, 17):
        assert determinant(build_matrix(DiffPlusC(1), p, p - 1)) == 1


def test_t3_6_entrywise_equality():
    r = check_t3_6(5)
    assert r.passed and r.cases_checked == 2
    r = check_t3_6(11)
    assert r.passed and r.cases_checked == 8


def test_t3_7_even_power_collapse():
    r = check_t3_7(11, t_max=1, n_max=4)
    assert r.passed
    # 5 even exponents, 1 t, 3 orders, plus 5 spot-check cases
    assert r.cases_checked == 5 * 1 * 3 + 5
    assert any("primitive roots used: 2" in n for n in r.notes)
    r17 = check_t3_7(17, t_max=2, n_max=5)
    assert r17.passed
    assert r17.cases_checked == 8 * 2 * 4 + 8


def test_t3_7_rejects_bad_sweep_bounds():
    with pytest.raises(ValueError):
        check_t3_7(11, t_max=0)
    with pytest.raises(ValueError):
        check_t3_7(11, n_max=1)


def test_row_period_np():
    r = check_row_period_np(5)
    assert r.passed
    assert r.cases_checked == 50


def test_table_period():
    r = check_table_period(11)
    assert r.passed
    assert r.cases_checked == 121


def test_remark_n1():
    r = check_remark_n1(11)
    assert r.passed
    assert r.cases_checked == 22


def test_propositions_on_each_class():
    p23, p24, p25 = check_propositions(13)
    assert p23.claim == "P2_3" and p23.passed
    assert p24.claim == "P2_4" and p24.passed and p24.cases_checked == 2 + 12
    assert p25.claim == "P2_5" and p25.cases_checked == 0
    assert any("not applicable" in n for n in p25.notes)

    p23, p24, p25 = check_propositions(11)
    assert p23.passed and p25.passed
    assert p24.cases_checked == 0
    assert p25.cases_checked == 1 + 10


def test_propositions_handle_p3():
    p23, p24, p25 = check_propositions(3)
    assert p23.passed
    assert p24.cases_checked == 0 and p25.cases_checked == 0


def test_propositions_custom_bound():
    p23, _, _ = check_propositions(7, a_bound=7)
    assert p23.passed
    assert p23.cases_checked == 2 * 15 + 6


def test_verify_all_small():
    reports = verify_all(11)
    assert all(r.passed for r in reports)
    by_claim = {}
    for r in reports:
        by_claim.setdefault(r.claim, []).append(r.prime.value)
    assert by_claim["P2_3"] == [5, 7, 11]
    assert by_claim["T3_1"] == [5, 11]
    assert by_claim["T3_7"] == [5, 11]
    assert by_claim["REMARK_N1"] == [5, 11]
    # sorted by catalog order, then prime
    order = [(CLAIMS.index(r.claim), r.prime.value) for r in reports]
    assert order == sorted(order)


def test_verify_all_rejects_small_bound():
    with pytest.raises(ValueError):
        verify_all(4)


def test_report_lines_format():
    reports = verify_all(7)
    lines = report_lines(reports)
    assert len(lines) == len(reports)
    for line, r in zip(lines, reports):
        claim, p, cases, verdict, ces = line.split()
        assert claim == r.claim
        assert int(p) == r.prime.value
        assert int(cases) == r.cases_checked
        assert verdict == "pass"
        assert int(ces) == 0


def test_report_text_includes_notes_and_failures():
    good = TheoremReport("T3_1", Prime(5), 5, [], ["a note"])
    bad = TheoremReport("T3_3", Prime(5), 4,
                        [Counterexample(5, 2, 4, -1, "made up")])
    text = report_text([good, bad])
    assert "PASS" in text and "FAIL" in text
    assert "note: a note" in text
    assert "at (n=5, c=2): expected 4, got -1  [made up]" in text


def test_report_text_truncates_counterexamples():
    ces = [Counterexample(n, 0, 0, 1) for n in range(10)]
    text = report_text([TheoremReport("T3_4", Prime(5), 10, ces)], max_counterexamples=3)
    assert "... 7 more" in text


def test_corrupted_engine_is_caught(monkeypatch):
    # sabotage the determinant seen by the checkers: the sweep must
    # collect the mismatches rather than raise or stop early
    real = verify.determinant

    def crooked(matrix):
        v = real(matrix)
        return v + 1 if getattr(matrix, "order", 0) == 3 else v

    monkeypatch.setattr(verify, "determinant", crooked)
    r = check_t3_1(11)
    assert not r.passed
    assert r.cases_checked == 11
    assert [ce.n for ce in r.counterexamples] == [3]
    ce = r.counterexamples[0]
    assert ce.expected == 2 and ce.actual == 3

    r2 = check_t3_2(11)
    assert [(-1) in [ce.c for ce in r2.counterexamples],
            1 in [ce.c for ce in r2.counterexamples]] == [True, True]
    assert len(r2.counterexamples) == 2  # one per shift, all collected
