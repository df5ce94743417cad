"""Capacity spectrum: frozen examples, U-map rules, bound certification."""

import pytest

from ech_prequant import (
    InvariantViolation,
    OrbitSet,
    PrequantizationBundle,
    capacity_sphere,
    capacity_sphere_via_u,
    capacity_torus_bounds,
    capacity_torus_closed_form,
    grading,
    sphere_u_step,
    torus_closed_form_exclusion,
    torus_d_bounds,
)


def test_capacity_sphere_examples():
    assert capacity_sphere(1, 0) == 0
    assert capacity_sphere(1, 3) == 4
    assert capacity_sphere(2, 1) == 4


def test_capacity_sphere_rejects_bad_input():
    with pytest.raises(ValueError):
        capacity_sphere(0, 1)
    with pytest.raises(ValueError):
        capacity_sphere(1, -1)


def test_sphere_u_step_examples():
    assert sphere_u_step(2, (1, 1)) == (2, 0)
    assert sphere_u_step(2, (2, 0)) is None
    assert sphere_u_step(1, (3, 0)) == (0, 2)


def test_sphere_u_step_rejects_bad_input():
    with pytest.raises(ValueError):
        sphere_u_step(2, (0, 0))
    with pytest.raises(ValueError):
        sphere_u_step(2, (1, 0))  # residue 1 mod 2
    with pytest.raises(ValueError):
        sphere_u_step(2, (-1, 1))


def test_u_step_drops_grading_by_two():
    for abs_e in range(1, 5):
        bundle = PrequantizationBundle(0, -abs_e)

        def gr(pair):
            if pair is None:
                return 0
            return grading(bundle, OrbitSet(pair[1], (), pair[0]))

        for total in range(abs_e, 6 * abs_e + 1, abs_e):
            for m_minus in range(total + 1):
                state = (m_minus, total - m_minus)
                assert gr(state) - gr(sphere_u_step(abs_e, state)) == 2


def test_capacity_sphere_via_u_examples():
    assert capacity_sphere_via_u(2, 2) == 4
    assert capacity_sphere_via_u(1, 0) == 0
    assert capacity_sphere_via_u(1, 3) == capacity_sphere(1, 3) == 4


def test_torus_d_bounds_examples():
    b = torus_d_bounds(1, 3)
    assert (b.d_minus, b.d_plus) == (2, 3)
    b = torus_d_bounds(1, 4)
    assert (b.d_minus, b.d_plus) == (3, 3)
    for abs_e in range(2, 11):
        b = torus_d_bounds(abs_e, 1)
        assert (b.d_minus, b.d_plus) == (1, 1)


def test_torus_d_bounds_rejects_k_zero():
    with pytest.raises(ValueError):
        torus_d_bounds(2, 0)


def verify_torus_witness(abs_e, k, witness):
    d, m_plus, m1, m2, m_minus = witness
    assert min(m_plus, m1, m2, m_minus) >= 0 and m1 <= 1 and m2 <= 1
    assert d * d * abs_e + m_plus - m_minus == 2 * k
    assert m_plus + m1 + m2 + m_minus == d * abs_e


def test_torus_witnesses_solve_the_constraints():
    for abs_e in range(1, 6):
        for k in range(1, 400):
            b = torus_d_bounds(abs_e, k)
            verify_torus_witness(abs_e, k, b.witness_minus)
            verify_torus_witness(abs_e, k, b.witness_plus)
            assert b.witness_minus[0] == b.d_minus
            assert b.witness_plus[0] == b.d_plus
            assert b.d_plus - b.d_minus in (0, 1)


def test_capacity_torus_bounds_examples():
    res = capacity_torus_bounds(2, 1)
    assert res.exact and res.lower == res.upper == 4
    res = capacity_torus_bounds(1, 3)
    assert not res.exact and (res.lower, res.upper) == (4, 6)
    res = capacity_torus_bounds(1, 4)
    assert res.exact and res.lower == 6


def test_capacity_torus_closed_form_examples():
    assert capacity_torus_closed_form(2) == 4
    assert capacity_torus_closed_form(5) == 6
    with pytest.raises(ValueError, match="n=3"):
        capacity_torus_closed_form(3)


def test_torus_closed_form_exclusion():
    triangular = {n * (n - 1) // 2 for n in range(2, 200)}
    for k in range(1, 2000):
        n = torus_closed_form_exclusion(k)
        assert (n is not None) == (k in triangular)
        if n is not None:
            assert n * (n - 1) == 2 * k


def test_capacities_nondecreasing():
    for abs_e in range(1, 5):
        previous = 0
        for k in range(0, 600):
            value = capacity_sphere(abs_e, k)
            assert value >= previous
            previous = value
    for abs_e in range(1, 5):
        prev_low = prev_high = 0
        for k in range(1, 600):
            res = capacity_torus_bounds(abs_e, k)
            assert res.lower >= prev_low and res.upper >= prev_high
            prev_low, prev_high = res.lower, res.upper


def test_closed_form_sandwich():
    for k in range(1, 2000):
        if torus_closed_form_exclusion(k) is not None:
            continue
        res = capacity_torus_bounds(1, k)
        assert res.exact
        assert res.lower == capacity_torus_closed_form(k)


def test_capacity_result_validation():
    from ech_prequant import CapacityResult

    with pytest.raises(ValueError):
        CapacityResult(lower=4, upper=2, exact=False)
    with pytest.raises(ValueError):
        CapacityResult(lower=2, upper=2, exact=False)


def test_invariant_violation_is_not_a_value_error():
    # guaranteed-search failures surface on a separate channel from input errors
    assert not issubclass(InvariantViolation, ValueError)
