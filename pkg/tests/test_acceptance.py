"""Acceptance suite: one test per criterion, one printed line per criterion.

Run with plain ``pytest``; the PASS/FAIL lines are printed outside capture
so they are visible in any run.  The heaviest case (delta=8, d=5) uses a
small process pool and dominates the runtime (a couple of minutes).
"""

import random

import pytest
from helpers import ORDERED_REFERENCE, TABLE_COUNTS

from severi.calibrate import run_calibration
from severi.crosscheck import reducible_count
from severi.integrand import IntegrandSpec, P2_FIXED, build_integrand
from severi.localization import (
    _compile_terms,
    _sum_over_points,
    count_nodal,
    default_jobs,
)
from severi.node_polys import node_polynomial
from severi.oracles import bps_series_check, hilb_weights_match_oracle
from severi.partitions import enumerate_fixed_points, partitions, plane_points
from severi.unipoly import UniPoly
from severi.weights import NonGenericSpecialization, Specialization, chart_weights


def report(capsys, number, name, failures):
    status = "PASS" if not failures else f"FAIL ({len(failures)} problems)"
    with capsys.disabled():
        print(f"\nACCEPTANCE {number} [{name}]: {status}")
        for f in failures[:10]:
            print(f"    {f}")
    assert not failures, failures


@pytest.fixture(scope="module")
def table_counts():
    """Localized counts for the eight table cases, shared across criteria."""
    jobs = default_jobs()
    values = {}
    for (delta, d) in TABLE_COUNTS:
        values[(delta, d)] = count_nodal(delta, d, jobs=jobs if delta >= 5 else 1)
    return values


def test_acceptance_1_table_reproduction(capsys, table_counts):
    failures = []
    for (delta, d), expected in TABLE_COUNTS.items():
        got = table_counts[(delta, d)]
        if got != expected:
            failures.append(f"count({delta},{d}) = {got}, expected {expected}")
    report(capsys, 1, "table reproduction", failures)


def test_acceptance_2_node_polynomials(capsys):
    failures = []
    for delta in range(0, 5):
        rec = node_polynomial(delta)
        ordered = rec.ordered_polynomial()
        if ordered != ORDERED_REFERENCE[delta]:
            failures.append(
                f"delta={delta}: got degree {ordered.degree()}, "
                f"coefficients differ from reference"
            )
    report(capsys, 2, "node polynomials delta <= 4", failures)


def test_acceptance_3_dual_path_agreement(capsys, table_counts):
    failures = []
    for (delta, d), localized in table_counts.items():
        combinatorial = reducible_count(delta, d)
        if combinatorial != localized:
            failures.append(
                f"({delta},{d}): combinatorial {combinatorial} != localized {localized}"
            )
    report(capsys, 3, "dual-path agreement", failures)


def test_acceptance_4_nu_calibration(capsys):
    failures = [
        f"{c.name}: expected {c.expected}, got {c.got}"
        for c in run_calibration()
        if not c.ok
    ]
    report(capsys, 4, "nu calibration gate", failures)


def test_acceptance_5_bps_oracle(capsys):
    failures = []
    for delta in range(0, 13):
        for g in range(0, 41):
            if not bps_series_check(delta, g):
                failures.append(f"delta={delta}, g={g}")
    report(capsys, 5, "BPS series oracle (delta <= 12, g <= 40)", failures)


def test_acceptance_6_tangent_weight_oracle(capsys):
    spec = Specialization.from_seed(1729)
    failures = []
    combos = 0
    for size in range(1, 6):
        for mu in partitions(size):
            for plane in range(4):
                for point in plane_points(plane):
                    combos += 1
                    t1, t2 = chart_weights(plane, point)
                    if not hilb_weights_match_oracle(mu, t1, t2, spec):
                        failures.append(f"mu={mu}, chart=({plane},{point})")
    assert combos >= 144
    report(capsys, 6, f"tangent-weight oracle ({combos} partition-chart combos)", failures)


def test_acceptance_7_robustness(capsys):
    failures = []
    grid = [
        (delta, d)
        for delta in range(0, 4)
        for d in range(1, 7)
        if d * (d + 3) // 2 + 3 - delta >= 3
    ]
    alt = Specialization.from_seed(777)
    for delta, d in grid:
        base = count_nodal(delta, d)
        if count_nodal(delta, d, specialization=alt) != base:
            failures.append(f"dual-specialization mismatch at ({delta},{d})")
        if count_nodal(delta, d, h4_rule=False) != base:
            failures.append(f"H^4 on/off mismatch at ({delta},{d})")
        if base < 0:
            failures.append(f"negative count at ({delta},{d}): {base}")
        # integer-valuedness is asserted inside count_nodal; reaching here
        # means the combination had denominator 1

    # fixed-point shuffle invariance on a midsize integrand; pick a generic
    # specialization the same way the production path does
    s = IntegrandSpec(i=3, delta=3, d=4)
    names, terms = _compile_terms(build_integrand(s))
    points = enumerate_fixed_points(3)
    base_sum = None
    for attempt in range(8):
        sp = Specialization.from_seed(555 + attempt)
        try:
            base_sum = _sum_over_points(terms, names, points, s.d, sp)
            break
        except NonGenericSpecialization:
            continue
    if base_sum is None:
        failures.append("no generic specialization found for the shuffle test")
    else:
        rng = random.Random(2024)
        for _ in range(3):
            shuffled = points[:]
            rng.shuffle(shuffled)
            if _sum_over_points(terms, names, shuffled, s.d, sp) != base_sum:
                failures.append("fixed-point shuffle changed an integral")
    report(capsys, 7, "robustness (dual spec, H^4 toggle, shuffle, integrality)", failures)


def _planar_one_node_degree(d: int) -> int:
    """Independent discriminant-degree oracle in a fixed plane.

    Push the top Chern class of (Omega + O) (x) O(d) (x) O(1) down the
    plane (eta^3 = 0) and read off the linear coefficient in the linear
    system class: c3 = M^3 - 3 eta M^2 + 3 eta^2 M with M = d eta + xi.
    """
    # coefficient of eta^2 xi^1 in the expansion
    m3 = 3 * d * d  # from (d eta + xi)^3
    m2 = -3 * 2 * d  # from -3 eta (d eta + xi)^2
    m1 = 3  # from 3 eta^2 (d eta + xi)
    return m3 + m2 + m1


def test_acceptance_8_p2fixed(capsys):
    failures = []
    rec1 = node_polynomial(1, P2_FIXED)
    expected = UniPoly([3, -6, 3])
    if rec1.polynomial != expected:
        failures.append(f"p2 delta=1 polynomial is {rec1.polynomial}")
    for d in range(2, 9):
        if rec1.polynomial(d) != _planar_one_node_degree(d):
            failures.append(f"p2 delta=1 oracle mismatch at d={d}")
    for delta in (2, 3):
        try:
            rec = node_polynomial(delta, P2_FIXED)  # in-op extra-sample stability
        except ArithmeticError as exc:
            failures.append(f"p2 delta={delta} stability: {exc}")
            continue
        if rec.polynomial.degree() != 2 * delta:
            failures.append(
                f"p2 delta={delta}: observed degree {rec.polynomial.degree()}, expected {2*delta}"
            )
        if rec.polynomial(delta + 1) != count_nodal(delta, delta + 1, P2_FIXED):
            failures.append(f"p2 delta={delta}: polynomial disagrees with a fresh count")
    report(capsys, 8, "fixed-plane mode (delta=1 oracle; delta=2,3 stability)", failures)
