"""Residue-formula evaluation of the localized integrals and the node count.

The integral of the symbolic integrand over the length-i relative Hilbert
scheme equals the sum, over the torus-fixed points, of the integrand
restricted to the point divided by the product of its tangent weights.  The
restriction substitutes the specialized hyperplane weight for H, the
elementary symmetric functions of the tautological weights for L1..Li, and
those of the Hilbert tangent weights for T1..T2i.

The full count for (delta, d) is the linear combination of the integrals
for i = 0..delta with the unitriangular-inverse weights; the combination is
always an integer and that is asserted, never rounded.

All arithmetic is exact; with integer torus values all per-point numerators
are integers, which the evaluation exploits (plain Python bignums in the
hot loop, one Fraction division per fixed point).  Fixed points are
independent work units: sums are exact, so any order and any partition of
the work gives the identical result, and the optional process pool changes
nothing but wall time.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .graded import GradedPoly, TruncationRules
from .integrand import P3, IntegrandSpec, bps_coefficients, build_integrand, genus
from .partitions import FixedPoint, enumerate_fixed_points, plane_points
from .weights import (
    NonGenericSpecialization,
    Specialization,
    chart_weights,
    gr_tangent_weights,
    h_weight,
    hilb_tangent_weights,
    taut_weights,
)

DEFAULT_RETRIES = 8


@dataclass(frozen=True)
class IntegralResult:
    value: Fraction
    spec_used: Specialization
    fixed_point_count: int
    i: int
    delta: int
    d: int
    mode: str


def _compile_terms(integrand: GradedPoly):
    """Flatten to (sparse exponent list, coefficient) pairs for fast evaluation.

    Coefficients with denominator 1 are downgraded to plain ints so the hot
    loop runs on Python bignums.
    """
    names = integrand.table.names
    terms = []
    for exps, coeff in integrand.terms.items():
        sparse = tuple((idx, e) for idx, e in enumerate(exps) if e)
        c = coeff.numerator if coeff.denominator == 1 else coeff
        terms.append((sparse, c))
    return names, terms


def _point_values(fp: FixedPoint, d: int, spec: Specialization, names):
    """Symbol values at a fixed point, plus the euler factor.

    Returns (values aligned with ``names``, euler) or raises on a vanishing
    tangent weight.
    """
    k = fp.plane
    gr_vals = [spec.value(w) for w in gr_tangent_weights(k)]
    hilb_vals = []
    for m, mu in zip(plane_points(k), fp.tri):
        if not mu:
            continue
        t1, t2 = chart_weights(k, m)
        hilb_vals.extend(spec.value(w) for w in hilb_tangent_weights(mu, t1, t2))
    euler = Fraction(1)
    for v in gr_vals + hilb_vals:
        if v == 0:
            raise NonGenericSpecialization("non-generic specialization")
        euler *= v

    taut_vals = [spec.value(w) for w in taut_weights(fp, d)] if fp.length() else []

    by_name = {"H": spec.value(h_weight(k))}
    cl = _elementary_symmetric(taut_vals)
    for j, v in enumerate(cl, start=1):
        by_name[f"L{j}"] = v
    ct = _elementary_symmetric(hilb_vals)
    for j, v in enumerate(ct, start=1):
        by_name[f"T{j}"] = v

    values = []
    for name in names:
        v = by_name[name]
        values.append(v.numerator if v.denominator == 1 else v)
    return values, euler


def _elementary_symmetric(values):
    es = [Fraction(1)] + [Fraction(0)] * len(values)
    for k, v in enumerate(values, start=1):
        for j in range(k, 0, -1):
            es[j] += v * es[j - 1]
    return es[1:]


def _eval_terms(terms, values):
    """Evaluate compiled terms at symbol values, with cached power tables."""
    powers = [[1, v] for v in values]
    total = 0
    for sparse, coeff in terms:
        acc = coeff
        for idx, e in sparse:
            table = powers[idx]
            while len(table) <= e:
                table.append(table[-1] * table[1])
            acc *= table[e]
        total += acc
    return total


def _sum_over_points(terms, names, points, d, spec):
    total = Fraction(0)
    for fp in points:
        values, euler = _point_values(fp, d, spec, names)
        num = _eval_terms(terms, values)
        if num:
            total += Fraction(num) / euler
    return total


def _worker(args):
    terms, names, points, d, values = args
    spec = Specialization(values)
    return _sum_over_points(terms, names, [FixedPoint(p, tri) for p, tri in points], d, spec)


def integrate(
    spec: IntegrandSpec,
    specialization: Specialization,
    *,
    rules: TruncationRules | None = None,
    integrand: GradedPoly | None = None,
    jobs: int = 1,
) -> IntegralResult:
    """Evaluate one localized integral at a fixed generic specialization.

    Raises NonGenericSpecialization if a tangent weight vanishes; the caller
    is responsible for resampling (see ``count_nodal``).
    """
    if integrand is None:
        integrand = build_integrand(spec, rules)
    points = enumerate_fixed_points(spec.i)
    names, terms = _compile_terms(integrand)
    if not terms:
        total = Fraction(0)
    elif jobs <= 1 or len(points) < 64:
        total = _sum_over_points(terms, names, points, spec.d, specialization)
    else:
        chunk = max(16, len(points) // (4 * jobs))
        batches = [points[i : i + chunk] for i in range(0, len(points), chunk)]
        payloads = [
            (terms, names, [(fp.plane, fp.tri) for fp in b], spec.d, specialization.values)
            for b in batches
        ]
        total = Fraction(0)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_worker, payloads):
                total += part
    return IntegralResult(
        value=total,
        spec_used=specialization,
        fixed_point_count=len(points),
        i=spec.i,
        delta=spec.delta,
        d=spec.d,
        mode=spec.mode,
    )


def _run_all_integrals(delta, d, mode, specialization, h4_rule, jobs, retries, seed):
    """All integrals i = 0..delta under one specialization, resampling on
    a non-generic draw (the whole run moves to the fresh specialization).

    The degree cap is pinned to the dimension 3+2i of each Hilbert scheme:
    equivariant representatives above the dimension would push forward to
    nonconstant polynomials in the torus parameters.  Only the H^4 rule is
    a free toggle.
    """
    attempt = 0
    spec_used = specialization
    while True:
        try:
            results = []
            for i in range(delta + 1):
                ispec = IntegrandSpec(i=i, delta=delta, d=d, mode=mode)
                rules = TruncationRules(degree_cap=ispec.dimension, nilpotent=h4_rule)
                results.append(integrate(ispec, spec_used, rules=rules, jobs=jobs))
            return results, spec_used
        except NonGenericSpecialization:
            attempt += 1
            if attempt > retries:
                raise
            spec_used = Specialization.from_seed(seed * 1000003 + attempt)


def count_nodal(
    delta: int,
    d: int,
    mode: str = P3,
    *,
    specialization: Specialization | None = None,
    seed: int = 0,
    verify: bool = False,
    jobs: int = 1,
    h4_rule: bool = True,
    retries: int = DEFAULT_RETRIES,
) -> int:
    """Number of delta-nodal plane curves of degree d meeting the incidence
    conditions (general lines in p3 mode; general points in a fixed plane in
    p2 mode).

    With ``verify`` on, every integral is recomputed under a second generic
    specialization and the two runs must agree exactly.  ``h4_rule`` toggles
    the H^4 = 0 pruning of the symbolic representative; the count must not
    depend on it.
    """
    if delta < 0:
        raise ValueError("delta must be >= 0")
    spec0 = specialization if specialization is not None else Specialization.default()
    results, _ = _run_all_integrals(delta, d, mode, spec0, h4_rule, jobs, retries, seed)
    if verify:
        spec1 = Specialization.from_seed(seed * 7919 + 1)
        if spec1.values == spec0.values:
            spec1 = Specialization.from_seed(seed * 7919 + 2)
        results1, _ = _run_all_integrals(delta, d, mode, spec1, h4_rule, jobs, retries, seed + 1)
        for r0, r1 in zip(results, results1):
            if r0.value != r1.value:
                raise ArithmeticError(
                    f"specialization disagreement at i={r0.i}: {r0.value} vs {r1.value}"
                )
    g = genus(d)
    coeffs = bps_coefficients(delta, g).a
    total = sum((a * r.value for a, r in zip(coeffs, results)), Fraction(0))
    if total.denominator != 1:
        raise ArithmeticError(f"convention or arithmetic fault: non-integer count {total}")
    return total.numerator


def default_jobs() -> int:
    return max(1, min(4, os.cpu_count() or 1))
