"""Capacity spectrum: genus-0 closed form with a U-orbit oracle, genus-1 bounds.

The genus-0 value and the U-map recursion are computed independently and can
be cross-checked against each other; the genus-1 routines return certified
lower/upper pairs whose witnesses solve the defining constraints exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .bundles import InvariantViolation
from .generators import sphere_pair_for_k

# (d, m_plus, m1, m2, m_minus) solving the degree-d constraint system
Witness = tuple[int, int, int, int, int]


@dataclass(frozen=True)
class CapacityResult:
    """Exact capacity value or a certified lower/upper pair."""

    lower: int
    upper: int
    exact: bool
    witness_lower: Witness | None = None
    witness_upper: Witness | None = None

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")
        if self.exact != (self.lower == self.upper):
            raise ValueError("exactness flag must mean lower == upper")


@dataclass(frozen=True)
class TorusBounds:
    """Extremal degrees admitting a solution at index k, with witnesses."""

    d_minus: int
    d_plus: int
    witness_minus: Witness
    witness_plus: Witness


def _check_abs_e(abs_e: int) -> None:
    if abs_e < 1:
        raise ValueError("|e| must be at least 1")


def capacity_sphere(abs_e: int, k: int) -> int:
    """k-th capacity over the sphere: 2d|e| for the unique degree d with
    2d + d|e|(d-1) <= 2k <= 2d + d|e|(d+1).

    Scans the full degree range and raises if the matching d is not unique,
    which would contradict the closed-form theorem.
    """
    _check_abs_e(abs_e)
    if k < 0:
        raise ValueError("capacity index must be nonnegative")
    target = 2 * k
    matches = []
    d = 0
    while True:
        low = 2 * d + d * abs_e * (d - 1)
        if low > target:
            break
        if target <= low + 2 * d * abs_e:
            matches.append(d)
        d += 1
    if len(matches) != 1:
        raise InvariantViolation(
            f"capacity degree for |e|={abs_e}, k={k} is not unique: candidates {matches}"
        )
    return 2 * matches[0] * abs_e


def sphere_u_step(abs_e: int, gen: tuple[int, int]) -> tuple[int, int] | None:
    """One U-map step on a genus-0 generator (m_minus, m_plus).

    With m_plus >= 1 the step trades one maximum orbit for one minimum orbit;
    otherwise the pure stack of j minimum orbits drops to j - |e| maximum
    orbits.  Returns None when the image is the empty orbit set.
    """
    _check_abs_e(abs_e)
    m_minus, m_plus = gen
    if m_minus < 0 or m_plus < 0:
        raise ValueError("multiplicities must be nonnegative")
    if (m_minus + m_plus) % abs_e:
        raise ValueError("generator is not in the trivial class")
    if m_minus == 0 and m_plus == 0:
        raise ValueError("the U map is not applied to the empty orbit set")
    if m_plus >= 1:
        return (m_minus + 1, m_plus - 1)
    if m_minus == abs_e:
        return None
    return (0, m_minus - abs_e)


def capacity_sphere_via_u(abs_e: int, k: int) -> int:
    """Independent genus-0 capacity: walk the grading-2k generator down the U map.

    Applies the U step exactly k times, requires the orbit to land on the
    empty set exactly then, and returns the starting generator's leading
    action 2M.
    """
    _check_abs_e(abs_e)
    if k < 0:
        raise ValueError("capacity index must be nonnegative")
    m_minus, m_plus, d = sphere_pair_for_k(abs_e, k)
    state = None if m_minus == 0 and m_plus == 0 else (m_minus, m_plus)
    for _ in range(k):
        if state is None:
            raise InvariantViolation(
                f"U-orbit for |e|={abs_e}, k={k} reached the empty set too early"
            )
        state = sphere_u_step(abs_e, state)
    if state is not None:
        raise InvariantViolation(
            f"U-orbit for |e|={abs_e}, k={k} did not reach the empty set in {k} steps"
        )
    return 2 * d * abs_e


def _torus_witness(abs_e: int, k: int, d: int) -> Witness:
    """Multiplicities certifying that degree d is feasible at index k.

    Splits the required difference s = 2k - d^2|e| between the elliptic
    multiplicities and absorbs the leftover parity in one saddle orbit.  The
    construction is re-checked against both defining equations before being
    returned, so every emitted witness is self-certifying.
    """
    s = 2 * k - d * d * abs_e
    m_total = d * abs_e
    slack = m_total - abs(s)
    if slack < 0:
        raise InvariantViolation(f"degree {d} admits no solution at k={k} for |e|={abs_e}")
    n_h = slack % 2
    t = (slack - n_h) // 2
    m_plus = max(s, 0) + t
    m_minus = max(-s, 0) + t
    m1, m2 = (1, 0) if n_h else (0, 0)
    if d * d * abs_e + m_plus - m_minus != 2 * k or m_plus + m1 + m2 + m_minus != m_total:
        raise InvariantViolation(f"witness construction failed for |e|={abs_e}, k={k}, d={d}")
    return (d, m_plus, m1, m2, m_minus)


def torus_d_bounds(abs_e: int, k: int) -> TorusBounds:
    """Minimal and maximal feasible degree at index k over the torus.

    Feasibility of degree d is equivalent to d(d-1)|e| <= 2k <= d(d+1)|e|;
    both window edges are monotone, so the feasible degrees form the interval
    located here by exact integer square roots with local fix-up.  The gap
    between the extremes must be 0 or 1.
    """
    _check_abs_e(abs_e)
    if k < 1:
        raise ValueError("torus capacities are defined for k >= 1")
    twok = 2 * k

    # largest d with d(d-1)|e| <= 2k, i.e. d(d-1) <= floor(2k/|e|)
    q = twok // abs_e
    d_hi = (1 + isqrt(1 + 4 * q)) // 2
    while d_hi * (d_hi - 1) > q:
        d_hi -= 1
    while (d_hi + 1) * d_hi <= q:
        d_hi += 1

    # smallest d with d(d+1)|e| >= 2k
    d_lo = isqrt(q) if q else 0
    while d_lo > 0 and (d_lo - 1) * d_lo * abs_e >= twok:
        d_lo -= 1
    while d_lo * (d_lo + 1) * abs_e < twok:
        d_lo += 1

    if d_lo > d_hi:
        raise InvariantViolation(f"no feasible degree for |e|={abs_e}, k={k}")
    if d_hi - d_lo > 1:
        raise InvariantViolation(
            f"feasible degrees for |e|={abs_e}, k={k} span more than two values: "
            f"[{d_lo}, {d_hi}]"
        )
    return TorusBounds(d_lo, d_hi, _torus_witness(abs_e, k, d_lo), _torus_witness(abs_e, k, d_hi))


def capacity_torus_bounds(abs_e: int, k: int) -> CapacityResult:
    """Certified bounds 2 d_minus |e| <= c_k <= 2 d_plus |e| over the torus."""
    bounds = torus_d_bounds(abs_e, k)
    return CapacityResult(
        lower=2 * bounds.d_minus * abs_e,
        upper=2 * bounds.d_plus * abs_e,
        exact=bounds.d_minus == bounds.d_plus,
        witness_lower=bounds.witness_minus,
        witness_upper=bounds.witness_plus,
    )


def torus_closed_form_exclusion(k: int) -> int | None:
    """The n with k = n(n-1)/2 when the closed form does not apply, else None."""
    if k < 0:
        raise ValueError("capacity index must be nonnegative")
    r = isqrt(8 * k + 1)
    if r * r == 8 * k + 1:
        return (1 + r) // 2
    return None


def capacity_torus_closed_form(k: int) -> int:
    """Exact k-th capacity over the torus with |e| = 1, away from excluded k.

    Evaluates twice the floor of sqrt(2k + 1/4) + 1/2 purely with integers:
    that floor is the largest d with d(d-1) <= 2k, found by monotone search.
    Indices of the form n(n-1)/2 are rejected (only bounds hold there).
    """
    if k < 1:
        raise ValueError("the closed form is stated for k >= 1")
    n = torus_closed_form_exclusion(k)
    if n is not None:
        raise ValueError(f"k={k} is excluded from the closed form: k = n(n-1)/2 with n={n}")
    twok = 2 * k
    d = 1
    while (d + 1) * d <= twok:
        d += 1
    return 2 * d
