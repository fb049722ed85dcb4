"""Acceptance criteria, one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines and timings.  Every check is exact (integer or symbolic equality);
the only tolerances are the wall-clock budgets stated alongside each
criterion.
"""

import time
from fractions import Fraction

from sobranch import (
    DiscreteSeries,
    GroupTag,
    Signature,
    TemperedPS,
    Weight,
    classify,
    enhanced_from_langlands,
    gp_tempered_check,
    multiplicity,
    period_value,
    bilinear_nonzero_trivial_rho,
    run_suite,
)
from sobranch.oracle import grid_weights

P, M, B = Signature.PLUS, Signature.MINUS, Signature.BOTH


def _report(number: int, label: str, started: float, budget: float | None) -> None:
    elapsed = time.perf_counter() - started
    suffix = f" [{elapsed:.2f}s < {budget:.0f}s]" if budget is not None else f" [{elapsed:.2f}s]"
    print(f"criterion {number:2d} PASS {label}{suffix}")
    if budget is not None:
        assert elapsed < budget, f"criterion {number} exceeded its {budget}s budget"


def test_criterion_01_classification_counts():
    started = time.perf_counter()
    for N in range(2, 13):
        group = GroupTag(N)
        reps = classify(group, Weight((0,) * group.rank))
        assert len(reps) == group.n + 2
        census = sorted(
            (enhanced_from_langlands(d).height, enhanced_from_langlands(d).sig.value)
            for d in reps
        )
        top = group.top_height
        expected = sorted(
            [(i, "+") for i in range(top)]
            + [(i, "-") for i in range(top)]
            + ([(top, "pm")] if group.is_even else [(top, "+"), (top, "-")])
        )
        assert census == expected
    _report(1, "trivial-character classification counts and census, N <= 12", started, 1.0)


def test_criterion_02_diagram_reproduction():
    # The subgroup ladder needs SO(n,1) with n >= 2, so the sweep starts at n = 2.
    started = time.perf_counter()
    report = run_suite("trivial-rho-diagrams", {"max_n": 10})
    assert report.passed, report.failures
    _report(2, f"zero-weight diagrams match the full arrow pattern ({report.cases_run} diagrams)", started, 1.0)


def test_criterion_03_dimension_conservation():
    started = time.perf_counter()
    report = run_suite("dim-conservation", {"max_so": 8, "max_entry": 3})
    assert report.passed, report.failures
    _report(3, f"exact dimension conservation for SO(N), N <= 8 ({report.cases_run} weights)", started, 10.0)


def test_criterion_04_roundtrip_identity():
    started = time.perf_counter()
    report = run_suite("roundtrip", {"max_group": 11, "max_entry": 4})
    assert report.passed, report.failures
    _report(4, f"Langlands <-> enhanced round trip on the full grid ({report.cases_run} descriptors)", started, 30.0)


def test_criterion_05_height_agreement():
    started = time.perf_counter()
    report = run_suite("height-consistency", {"max_group": 11, "max_entry": 4})
    assert report.passed, report.failures
    _report(5, f"interval and insertion heights agree on the full grid ({report.cases_run} descriptors)", started, 30.0)


def test_criterion_06_period_values():
    started = time.perf_counter()
    for n in range(1, 41):
        v = period_value(n, 0)
        assert (v.sign, v.rational, v.pi_quarters) == (1, Fraction(1), 0)
    v = period_value(2, 1)
    assert (v.sign, v.rational, v.pi_quarters) == (1, Fraction(1), 2)
    assert v.pretty() == "π^{1/2}"
    v = period_value(3, 3)
    assert (v.sign, v.rational, v.pi_quarters) == (1, Fraction(2), 6)
    assert v.pretty() == "2·π^{3/2}"
    for n in range(1, 21):
        for i in range(n + 1):
            v = period_value(n, i)
            assert v.sign == ((-1) ** (n + 1) if 2 * i >= n + 1 else 1)
    _report(6, "exact period values and sign rule", started, 1.0)


def test_criterion_07_cohomology_table():
    started = time.perf_counter()
    for n in range(2, 11):
        nonzero = {
            (i, delta.value, j)
            for i in range(n // 2 + 1)
            for delta in (P, M)
            for j in range(n + 1)
            if bilinear_nonzero_trivial_rho(n, i, delta, j)
        }
        expected = {
            (i, "+" if i % 2 == 0 else "-", i) for i in range(n // 2 + 1)
        }
        assert nonzero == expected
    _report(7, "cohomology pairing nonzero exactly on {(i, (-1)^i, i)}, n <= 10", started, 1.0)


def test_criterion_08_twist_invariance():
    started = time.perf_counter()
    report = run_suite("chi-twist", {"max_group": 11, "max_entry": 4})
    assert report.passed, report.failures
    _report(8, f"sign-twist invariance of multiplicity ({report.cases_run} pairs)", started, 60.0)


def test_criterion_09_height_zero_equivalence():
    started = time.perf_counter()
    report = run_suite("height0-vs-finite", {"max_group": 9, "max_entry": 3})
    assert report.passed, report.failures
    _report(9, f"height-0 decisions equal finite-dimensional branching ({report.cases_run} pairs)", started, None)


def test_criterion_10_tempered_pairs():
    # Every tempered top-height pair in the grid: the dedicated check, the
    # generic decision, and a direct re-statement of the interlacing chain
    # must all agree.
    started = time.perf_counter()
    checked = 0
    for N in (3, 5, 7, 9, 11):
        group, sub = GroupTag(N), GroupTag(N - 1)
        big_tempered = [
            d
            for s in grid_weights(group, 4)
            for d in classify(group, s)
            if isinstance(d, TemperedPS)
        ]
        small_tempered = [
            d
            for s in grid_weights(sub, 4)
            for d in classify(sub, s)
            if isinstance(d, DiscreteSeries)
        ]
        for big in big_tempered:
            e_big = enhanced_from_langlands(big)
            for small in small_tempered:
                e_small = enhanced_from_langlands(small)
                got = gp_tempered_check(big, small)
                assert got is (multiplicity(e_big, e_small) == 1)
                mu, nu = e_big.s.entries, e_small.s.entries
                chain = all(
                    mu[k] >= nu[k] and nu[k] >= mu[k + 1] for k in range(len(nu))
                )
                assert got is chain
                checked += 1
    _report(10, f"tempered pairing check matches the generic decision ({checked} pairs)", started, None)
