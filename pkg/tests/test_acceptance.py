"""Acceptance suite: one test per criterion, exact tolerances, one
pass/fail line each (run with `pytest -s` to see the lines live)."""

import itertools
import json
import random
import time
from fractions import Fraction

import pytest

from haltonbound import cli
from haltonbound.discrepancy import (
    AnchoredBox,
    PointSet,
    star_discrepancy_exact,
)
from haltonbound.sequence import (
    BaseVector,
    Point,
    fractional_digits,
    halton_stream,
)
from haltonbound.witness import (
    WitnessConfig,
    alpha_closed,
    alpha_direct,
    beta_check,
    build_instance,
    combined_residue,
    crt_multiplier,
    decompose_corner,
    hat_index,
    modulus_P,
    shift_A,
    start_index,
    tau_vector,
    verify_theorem,
    witness_corner,
)

B23 = BaseVector.of(2, 3)
B235 = BaseVector.of(2, 3, 5)


def report(criterion, ok, detail=""):
    line = f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f"  ({detail})"
    print(line)
    assert ok, line


def test_criterion_1_alpha_equality_small_m():
    t0 = time.perf_counter()
    tau = tau_vector(B23)
    values = {}
    ok = True
    for m in (1, 2, 3, 4):
        closed = alpha_closed(B23, tau, m)
        direct = alpha_direct(B23, tau, m)
        values[m] = closed
        ok = ok and closed == direct
    ok = ok and values[1] == Fraction(7, 24) and values[2] == Fraction(91, 72)
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 10
    report(1, ok, f"alpha_1={values[1]}, alpha_2={values[2]}, {elapsed:.2f}s")


def test_criterion_2_alpha_bound_at_m6():
    t0 = time.perf_counter()
    tau = tau_vector(B23)
    closed = alpha_closed(B23, tau, 6)
    period = modulus_P(B23, (12, 6))
    assert period == 2_985_984
    direct = alpha_direct(B23, tau, 6)
    elapsed = time.perf_counter() - t0
    ok = abs(closed) >= Fraction(36, 24) and direct == closed and elapsed < 300
    report(2, ok, f"|alpha_6|={float(abs(closed)):.4f} over {period} points, {elapsed:.2f}s")


def test_criterion_3_theorem_witness_m2(capsys):
    t0 = time.perf_counter()
    rep = verify_theorem(WitnessConfig(B23, 2))
    ok = rep.n_star <= 144
    ok = ok and abs(rep.delta_at_n_star) >= Fraction(91, 72)
    ok = ok and max(rep.d1, rep.d2) >= Fraction(91, 144) > Fraction(4, 48)
    ok = ok and "fail" not in rep.verdicts.values()
    exit_code = cli.main(["verify", "--bases", "2,3", "--m", "2"])
    capsys.readouterr()
    ok = ok and exit_code == 0
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 10
    with capsys.disabled():
        report(
            3,
            ok,
            f"N*={rep.n_star}, |delta|={abs(rep.delta_at_n_star)}, "
            f"max(d1,d2)={max(rep.d1, rep.d2)}, exit={exit_code}, {elapsed:.2f}s",
        )


def test_criterion_4_membership_congruence_equivalences():
    # Interval-selection equivalence: membership of H(n) in the product of
    # per-base digit-prefix intervals iff the CRT congruence holds, checked
    # exhaustively over every prefix for small exponent vectors.
    exceptions = 0
    checks = 0
    for r in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        big_p = modulus_P(B23, r)
        for prefix_vals in itertools.product(*(range(p ** e) for p, e in zip(B23.bases, r))):
            prefixes = [
                fractional_digits(Fraction(v, p**e), p, e)
                for v, (p, e) in zip(prefix_vals, zip(B23.bases, r))
            ]
            from haltonbound.sequence import digit_reversal

            reversals = [digit_reversal(x, e) for x, e in zip(prefixes, r)]
            combined = combined_residue(B23, r, reversals)
            lows = [x.as_fraction() for x in prefixes]
            widths = [Fraction(1, p**e) for p, e in zip(B23.bases, r)]
            for n, point in enumerate(halton_stream(B23, 0, 2 * big_p)):
                member = all(
                    lo <= c < lo + w
                    for c, lo, w in zip(point.coords, lows, widths)
                )
                congruent = n % big_p == combined.residue
                checks += 1
                if member != congruent:
                    exceptions += 1

    # Cell-membership equivalence: one full period from the aligned start
    # for every cell with period at most 10^4.
    tau = tau_vector(B23)
    m = 7
    corner = witness_corner(B23, tau, m)
    y_tilde = start_index(B23, tau, m)
    cells = dict(
        zip(itertools.product(range(1, m + 1), repeat=2), decompose_corner(corner))
    )
    tested_cells = 0
    for k, cell in cells.items():
        hat = hat_index(B23, tau, k)
        if hat.modulus > 10**4:
            continue
        tested_cells += 1
        for off, point in enumerate(halton_stream(B23, y_tilde, hat.modulus)):
            n = y_tilde + off
            member = cell.contains(point)
            congruent = n % hat.modulus == hat.residue
            checks += 1
            if member != congruent:
                exceptions += 1
    ok = exceptions == 0 and tested_cells >= 10
    report(4, ok, f"{checks} checks, {tested_cells} cells, {exceptions} exceptions")


def test_criterion_5_full_period_cancellation():
    tau = tau_vector(B23)
    m = 3
    corner = witness_corner(B23, tau, m)
    y_tilde = start_index(B23, tau, m)
    cells = dict(
        zip(itertools.product(range(1, m + 1), repeat=2), decompose_corner(corner))
    )
    ok = True
    for k, cell in cells.items():
        big_p = modulus_P(B23, tuple(t * ki for t, ki in zip(tau.tau, k)))
        ps = PointSet.of(halton_stream(B23, y_tilde, big_p))
        deviation = sum(
            (1 if cell.contains(p) else 0) - Fraction(1, big_p) for p in ps.points
        )
        ok = ok and deviation == 0
    report(5, ok, f"{len(cells)} cells over bases (2,3), m=3")


def test_criterion_6_shift_identity():
    ok = True
    for bases in (B23, B235):
        tau = tau_vector(bases)
        beta = sum(Fraction(1, p) for p in bases.bases)
        frac_neg_beta = (-beta) % 1
        for k in itertools.product(range(1, 5), repeat=bases.s):
            r = tuple(t * ki for t, ki in zip(tau.tau, k))
            big_p = modulus_P(bases, r)
            crt_sum = sum(
                crt_multiplier(bases, r, i) * (big_p // p)
                for i, p in enumerate(bases.bases)
            )
            a_by_crt = (-crt_sum) % big_p
            a_by_beta = big_p * frac_neg_beta
            ok = ok and a_by_beta.denominator == 1
            ok = ok and a_by_crt == a_by_beta.numerator == shift_A(bases, tau, k)
    tau = tau_vector(B23)
    ok = ok and shift_A(B23, tau, (1, 1)) == 2 and modulus_P(B23, (2, 1)) == 12
    report(6, ok, "k in [1,4]^s over bases (2,3) and (2,3,5)")


def test_criterion_7_beta_gap_scan():
    scanned = 0
    ok = True
    for s in (2, 3):
        for bases in itertools.permutations(range(2, 14), s):
            try:
                bv = BaseVector(tuple(bases))
            except Exception:
                continue
            _, gap = beta_check(bv)
            scanned += 1
            ok = ok and gap >= Fraction(1, 2 * bv.p0)
    _, gap35 = beta_check(BaseVector.of(3, 5))
    ok = ok and gap35 == Fraction(1, 30)
    report(7, ok, f"{scanned} base vectors, equality at (3,5) with gap 1/30")


def star_1d_closed_formula(values):
    xs = sorted(values)
    n = len(xs)
    best = Fraction(0)
    for i, x in enumerate(xs, start=1):
        best = max(best, Fraction(i, n) - x, x - Fraction(i - 1, n))
    return best


def star_2d_by_enumeration(points):
    n = len(points)
    cols = [sorted({p.coords[i] for p in points} | {Fraction(1)}) for i in range(2)]
    best = Fraction(0)
    for y1 in cols[0]:
        for y2 in cols[1]:
            weak = sum(1 for p in points if p.coords[0] <= y1 and p.coords[1] <= y2)
            strict = sum(1 for p in points if p.coords[0] < y1 and p.coords[1] < y2)
            vol = y1 * y2
            best = max(best, Fraction(weak, n) - vol, vol - Fraction(strict, n))
    return best


def test_criterion_8_star_discrepancy_oracles():
    rng = random.Random(20260809)
    ok = True

    def rand_frac(den_max=97):
        den = rng.randint(1, den_max)
        return Fraction(rng.randrange(den), den)

    for _ in range(200):
        xs = [rand_frac() for _ in range(rng.randint(1, 100))]
        ps = PointSet.of([Point((x,)) for x in xs])
        ok = ok and star_discrepancy_exact(ps) == star_1d_closed_formula(xs)

    for _ in range(12):
        pts = [
            Point((rand_frac(31), rand_frac(31)))
            for _ in range(rng.randint(1, 50))
        ]
        ps = PointSet.of(pts)
        ok = ok and star_discrepancy_exact(ps) == star_2d_by_enumeration(pts)

    ok = ok and star_discrepancy_exact(PointSet.of([Point((Fraction(0),))])) == 1
    ok = ok and star_discrepancy_exact(
        PointSet.of([Point((Fraction(1, 2),))])
    ) == Fraction(1, 2)
    report(8, ok, "200 1D sets vs closed formula, 12 2D sets vs enumeration")


def test_criterion_9_determinism_and_exit_codes(capsys):
    runs = [
        ["generate", "--bases", "2,3", "--start", "0", "--count", "32"],
        ["generate", "--bases", "2,3", "--count", "8", "--format", "json"],
        ["discrepancy", "--bases", "2,3", "--count", "30", "--format", "json"],
        ["witness", "--bases", "2,3,5", "--m", "1"],
        ["verify", "--bases", "2,3", "--m", "2"],
        ["verify", "--bases", "2,3", "--m", "2", "--format", "csv"],
    ]
    ok = True
    for args in runs:
        code1 = cli.main(args)
        out1 = capsys.readouterr().out
        code2 = cli.main(args)
        out2 = capsys.readouterr().out
        ok = ok and code1 == code2 and out1 == out2 and out1

    verify_json = cli.main(["verify", "--bases", "2,3", "--m", "2"])
    out = capsys.readouterr().out
    ok = ok and verify_json == 0
    ok = ok and json.dumps(json.loads(out), indent=2) + "\n" == out

    matrix = {
        0: ["verify", "--bases", "2,3", "--m", "2"],
        1: ["verify", "--bases", "2,3,5", "--m", "1"],
        2: ["verify", "--bases", "2,4", "--m", "2"],
        3: ["verify", "--bases", "2,3", "--m", "6", "--budget", "100"],
    }
    seen = {}
    for expected, args in matrix.items():
        seen[expected] = cli.main(args)
        capsys.readouterr()
    ok = ok and all(seen[c] == c for c in (0, 1, 2, 3))
    with capsys.disabled():
        report(9, ok, f"exit codes observed: {sorted(seen.values())}")
