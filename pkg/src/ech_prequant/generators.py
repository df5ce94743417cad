"""Enumeration of generators in the trivial homology class, by grading or action."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bundles import (
    ExactAction,
    InvariantViolation,
    MorseProfile,
    OrbitSet,
    PrequantizationBundle,
    action_of,
)
from .indices import grading


@dataclass(frozen=True)
class GradedGenerator:
    """A generator together with its grading, exact action, and degree d = M/|e|."""

    orbit_set: OrbitSet
    grading: int
    action: ExactAction
    d: int


def _sort_key(gen: GradedGenerator):
    # canonical output order: action, then m- descending, m+ ascending, hyperbolic pattern
    return (
        gen.action.leading,
        gen.action.correction,
        -gen.orbit_set.m_minus,
        gen.orbit_set.m_plus,
        gen.orbit_set.m_hyp,
    )


def _resolve_profile(bundle: PrequantizationBundle, profile: MorseProfile | None) -> MorseProfile:
    if profile is None:
        return MorseProfile.default(bundle.genus)
    if len(profile.h_saddle) != bundle.hyperbolic_count:
        raise ValueError("profile saddle count does not match the bundle genus")
    return profile


def _make(bundle: PrequantizationBundle, alpha: OrbitSet, profile: MorseProfile, d: int) -> GradedGenerator:
    return GradedGenerator(alpha, grading(bundle, alpha), action_of(alpha, profile), d)


def _past_search_window(bundle: PrequantizationBundle, d: int, target: int) -> bool:
    """True once no degree >= d can carry a solution of the given grading.

    A solution at degree d forces |target - d^2 |e| - d chi| <= d |e|, so the
    least grading reachable at degree d is d^2 |e| - d(|e| - chi).  That
    parabola is increasing past its vertex; once it exceeds the target there,
    every larger degree is infeasible as well.
    """
    abs_e, chi = bundle.abs_e, bundle.chi
    floor_grading = d * d * abs_e - d * (abs_e - chi)
    return floor_grading > target and 2 * d * abs_e >= abs_e - chi


def enumerate_by_grading(
    bundle: PrequantizationBundle,
    target_grading: int,
    profile: MorseProfile | None = None,
) -> list[GradedGenerator]:
    """All generators in the trivial class with the given grading.

    Searches every degree d in the provable feasibility window; hyperbolic
    multiplicities range over {0, 1} and the elliptic pair is solved from the
    grading and total-multiplicity constraints.  Output is sorted by action
    with a deterministic tie-break.

    Any integer target is a valid query: odd gradings are carried by odd
    saddle counts, and negative gradings occur for genus >= 2.  The result is
    simply empty when nothing realizes the target.
    """
    profile = _resolve_profile(bundle, profile)
    abs_e, chi, slots = bundle.abs_e, bundle.chi, bundle.hyperbolic_count

    found: list[GradedGenerator] = []
    d = 0
    while True:
        m_total = d * abs_e
        s = target_grading - d * d * abs_e - d * chi
        if abs(s) <= m_total:
            for pattern in itertools.product((0, 1), repeat=slots):
                rest = m_total - sum(pattern)
                if rest < abs(s) or (rest - s) % 2:
                    continue
                alpha = OrbitSet((rest + s) // 2, pattern, (rest - s) // 2)
                found.append(_make(bundle, alpha, profile, d))
        d += 1
        if _past_search_window(bundle, d, target_grading):
            break
    found.sort(key=_sort_key)
    return found


def enumerate_by_action(
    bundle: PrequantizationBundle,
    profile: MorseProfile | None,
    limit: ExactAction,
) -> list[GradedGenerator]:
    """All generators in the trivial class with action strictly below ``limit``.

    Total multiplicities run over multiples of |e|; the scan stops once even
    the cheapest orbit set at a multiplicity level (all weight on the
    minimum) reaches the limit, since the leading term only grows from there.
    """
    profile = _resolve_profile(bundle, profile)
    abs_e, slots = bundle.abs_e, bundle.hyperbolic_count

    found: list[GradedGenerator] = []
    d = 0
    while True:
        m_total = d * abs_e
        cheapest = ExactAction(2 * m_total, m_total * profile.h_min)
        if not cheapest < limit:
            break
        for pattern in itertools.product((0, 1), repeat=slots):
            rest = m_total - sum(pattern)
            if rest < 0:
                continue
            for m_plus in range(rest + 1):
                alpha = OrbitSet(m_plus, pattern, rest - m_plus)
                act = action_of(alpha, profile)
                if act < limit:
                    found.append(GradedGenerator(alpha, grading(bundle, alpha), act, d))
        d += 1
    found.sort(key=_sort_key)
    return found


def sphere_pair_for_k(abs_e: int, k: int) -> tuple[int, int, int]:
    """Multiplicities (m_minus, m_plus) and degree d of the grading-2k generator, genus 0.

    The pair is unique; the search covers the full degree window and fails
    loudly if zero or several solutions appear.
    """
    if abs_e < 1:
        raise ValueError("|e| must be at least 1")
    if k < 0:
        raise ValueError("k must be nonnegative")
    target = 2 * k
    solutions: list[tuple[int, int, int]] = []
    d = 0
    while True:
        if 2 * d + d * abs_e * (d - 1) > target:
            break
        s = target - 2 * d - d * d * abs_e
        m_total = d * abs_e
        if abs(s) <= m_total and (m_total - s) % 2 == 0:
            solutions.append(((m_total - s) // 2, (m_total + s) // 2, d))
        d += 1
    if len(solutions) != 1:
        raise InvariantViolation(
            f"expected exactly one genus-0 generator at grading {target} for |e|={abs_e}, "
            f"found {len(solutions)}"
        )
    return solutions[0]
