"""Acceptance suite: one criterion per test, one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.  Every
check is exact; the stated wall-clock budgets are asserted where given.
"""

import itertools
import random
from contextlib import contextmanager
from time import perf_counter

from ech_prequant import (
    CurveEndData,
    OrbitSet,
    PrequantizationBundle,
    ball_capacities,
    capacity_sphere,
    capacity_sphere_via_u,
    capacity_torus_bounds,
    capacity_torus_closed_form,
    ech_index,
    enumerate_by_grading,
    fredholm_index,
    grading,
    gromov_width_report,
    index_ambiguity,
    relative_index,
    sphere_pair_for_k,
    sphere_u_step,
    torus_closed_form_exclusion,
    torus_d_bounds,
    two_i_minus_ind,
)


@contextmanager
def criterion(num, label):
    try:
        yield
    except Exception:
        print(f"FAIL criterion {num}: {label}")
        raise
    print(f"PASS criterion {num}: {label}")


def check_torus_witness(abs_e, k, d, witness):
    wd, m_plus, m1, m2, m_minus = witness
    assert wd == d
    assert m_plus >= 0 and m_minus >= 0 and m1 in (0, 1) and m2 in (0, 1)
    assert d * d * abs_e + m_plus - m_minus == 2 * k
    assert m_plus + m1 + m2 + m_minus == d * abs_e


def test_criterion_01_sphere_spectrum_matches_ball():
    with criterion(1, "sphere spectrum |e|=1 equals the size-2 ball sequence"):
        t0 = perf_counter()
        assert [capacity_sphere(1, k) for k in range(10)] == [0, 2, 2, 4, 4, 4, 6, 6, 6, 6]
        ball = ball_capacities(2, 10_000)
        for k in range(10_001):
            assert capacity_sphere(1, k) == ball[k]
        assert perf_counter() - t0 < 1.0


def test_criterion_02_u_orbit_oracle_agreement():
    with criterion(2, "U-orbit oracle agrees with the closed form, |e|<=5, k<=2000"):
        t0 = perf_counter()
        for abs_e in range(1, 6):
            bundle = PrequantizationBundle(0, -abs_e)

            def gr(pair):
                if pair is None:
                    return 0
                return grading(bundle, OrbitSet(pair[1], (), pair[0]))

            # Walk the deepest orbit once.  Each step must drop the grading by
            # exactly 2 and land on the generator of the next grading, so the
            # orbit of every shallower generator is a suffix of this walk and
            # inherits both properties.
            state = sphere_pair_for_k(abs_e, 2000)[:2]
            for j in range(2000, 0, -1):
                assert state == sphere_pair_for_k(abs_e, j)[:2]
                assert gr(state) == 2 * j
                nxt = sphere_u_step(abs_e, state)
                assert gr(state) - gr(nxt) == 2
                assert (nxt is None) == (j == 1)
                state = nxt
            # The via-U oracle re-runs each orbit and raises unless it reaches
            # the empty set in exactly k steps.
            for k in range(0, 2001):
                assert capacity_sphere(abs_e, k) == capacity_sphere_via_u(abs_e, k)
        assert perf_counter() - t0 < 10.0


def test_criterion_03_first_torus_capacity():
    with criterion(3, "first torus capacity is 2|e| for |e| = 2..10"):
        for abs_e in range(2, 11):
            res = capacity_torus_bounds(abs_e, 1)
            assert res.exact
            assert res.lower == res.upper == 2 * abs_e


def test_criterion_04_torus_closed_form():
    with criterion(4, "torus closed form matches exact bounds for |e|=1, k<=10^4"):
        t0 = perf_counter()
        for k in range(1, 10_001):
            n = torus_closed_form_exclusion(k)
            if n is None:
                res = capacity_torus_bounds(1, k)
                assert res.exact
                assert capacity_torus_closed_form(k) == res.lower
            else:
                bounds = torus_d_bounds(1, k)
                assert bounds.d_plus == bounds.d_minus + 1
        assert perf_counter() - t0 < 5.0


def test_criterion_05_torus_bound_gap_with_witnesses():
    with criterion(5, "torus degree gap is 0 or 1 with certified witnesses, |e|<=10, k<=10^5"):
        t0 = perf_counter()
        for abs_e in range(1, 11):
            for k in range(1, 100_001):
                b = torus_d_bounds(abs_e, k)
                assert b.d_plus - b.d_minus in (0, 1)
                check_torus_witness(abs_e, k, b.d_minus, b.witness_minus)
                check_torus_witness(abs_e, k, b.d_plus, b.witness_plus)
        assert perf_counter() - t0 < 30.0


def brute_degree_feasible(abs_e, k, d):
    m_total = d * abs_e
    for m1 in (0, 1):
        for m2 in (0, 1):
            rest = m_total - m1 - m2
            for m_plus in range(rest + 1):
                m_minus = rest - m_plus
                if d * d * abs_e + m_plus - m_minus == 2 * k:
                    return True
    return False


def test_criterion_06_feasibility_window_equivalence():
    with criterion(6, "degree window inequality matches brute force, |e|<=4, k<=500"):
        for abs_e in range(1, 5):
            for k in range(1, 501):
                d_stop = 1
                while d_stop * (d_stop - 1) * abs_e <= 2 * k:
                    d_stop += 1
                for d in range(0, d_stop + 2):
                    window = d * (d - 1) * abs_e <= 2 * k <= d * (d + 1) * abs_e
                    assert window == brute_degree_feasible(abs_e, k, d)


def test_criterion_07_index_identities():
    with criterion(7, "index shift and 2I-ind identities, exhaustive grid plus 10^5 samples"):
        for genus in range(3):
            slots = 2 * genus
            for abs_e in range(1, 5):
                bundle = PrequantizationBundle(genus, -abs_e)
                for m_plus in range(21):
                    for n_h in range(21 - m_plus) if genus else (0,):
                        pattern = (n_h,) + (0,) * (slots - 1) if slots else ()
                        for m_minus in range(21 - m_plus - n_h):
                            alpha = OrbitSet(m_plus, pattern, m_minus)
                            base = ech_index(bundle, alpha, 0)
                            total = alpha.total_multiplicity
                            for d in range(-6, 7):
                                shifted = ech_index(bundle, alpha, d)
                                assert index_ambiguity(bundle, alpha, base, d) == shifted
                                for genus_c in range(3):
                                    for eplus in {0, m_plus}:
                                        curve = CurveEndData(genus_c, n_h, eplus, total, d)
                                        assert two_i_minus_ind(bundle, alpha, d, curve) == (
                                            2 * shifted - fredholm_index(bundle, curve)
                                        )

        rng = random.Random(987654321)
        for _ in range(100_000):
            genus = rng.randrange(0, 6)
            abs_e = rng.randrange(1, 40)
            bundle = PrequantizationBundle(genus, -abs_e)
            pattern = tuple(rng.randrange(0, 50) for _ in range(2 * genus))
            alpha = OrbitSet(rng.randrange(0, 10**6), pattern, rng.randrange(0, 10**6))
            d = rng.randrange(-50, 51)
            base = ech_index(bundle, alpha, 0)
            shifted = ech_index(bundle, alpha, d)
            assert index_ambiguity(bundle, alpha, base, d) == shifted
            curve = CurveEndData(
                rng.randrange(0, 4),
                sum(pattern),
                rng.randrange(0, alpha.m_plus + 1),
                alpha.total_multiplicity,
                d,
            )
            assert two_i_minus_ind(bundle, alpha, d, curve) == (
                2 * shifted - fredholm_index(bundle, curve)
            )


def test_criterion_08_sphere_bijection():
    with criterion(8, "genus-0 bijection: injective initial segment, one generator per even grading"):
        for abs_e in range(1, 7):
            bundle = PrequantizationBundle(0, -abs_e)
            seen = {}
            for d in range(41):
                total = d * abs_e
                for m_minus in range(total + 1):
                    m_plus = total - m_minus
                    value = grading(bundle, OrbitSet(m_plus, (), m_minus))
                    assert value % 2 == 0
                    k = value // 2
                    assert k not in seen
                    seen[k] = (m_minus, m_plus, d)
            ks = sorted(seen)
            assert ks == list(range(len(ks)))
            for k in ks:
                gens = enumerate_by_grading(bundle, 2 * k)
                assert len(gens) == 1
                only = gens[0]
                assert (only.orbit_set.m_minus, only.orbit_set.m_plus, only.d) == seen[k]
                assert sphere_pair_for_k(abs_e, k) == seen[k]


def test_criterion_09_torus_generator_pairs():
    with criterion(9, "torus gradings d(d+1)|e| carry exactly the two expected generators"):
        for abs_e in range(1, 6):
            bundle = PrequantizationBundle(1, -abs_e)
            for d in range(0, 31):
                gens = enumerate_by_grading(bundle, d * (d + 1) * abs_e)
                got = {str(g.orbit_set) for g in gens}
                expected = {
                    str(OrbitSet(d * abs_e, (0, 0), 0)),
                    str(OrbitSet(0, (0, 0), (d + 1) * abs_e)),
                }
                assert got == expected


def test_criterion_10_relative_index_of_extremal_pairs():
    with criterion(10, "relative index of (e+^k, e-^k) equals 2k for k<=100, |e|<=5"):
        for abs_e in range(1, 6):
            bundle = PrequantizationBundle(1, -abs_e)
            for k in range(0, 101):
                alpha = OrbitSet(k, (0, 0), 0)
                beta = OrbitSet(0, (0, 0), k)
                assert relative_index(bundle, alpha, beta) == 2 * k


def test_criterion_11_gromov_width_report():
    with criterion(11, "width report: best bound 1 and first capacity 2|e| whenever defined"):
        for genus in (0, 1):
            for abs_e in range(1, 21):
                report = gromov_width_report(PrequantizationBundle(genus, -abs_e))
                assert report.best_bound == 1
                assert report.disk_width_bound == 1
                assert report.genus_supported
                if genus == 0 or abs_e >= 2:
                    assert report.capacity_c1 == 2 * abs_e
                else:
                    assert report.capacity_c1 is None
