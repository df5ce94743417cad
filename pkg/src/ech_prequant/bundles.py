"""Core value types: bundles, orbit sets, Morse profiles, and exact actions.

All arithmetic is exact (arbitrary-precision integers and rationals).  The
perturbation scale of the contact form is never given a numeric value:
actions are ordered pairs (leading, correction) compared lexicographically,
which is the true order for every sufficiently small positive scale.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction


class InvariantViolation(RuntimeError):
    """A computation contradicted a structural guarantee.

    Raised when a search that must succeed (unique capacity degree, bounded
    gap between capacity bounds, U-orbit termination) fails.  This signals
    an internal inconsistency, not bad input.
    """


@dataclass(frozen=True)
class PrequantizationBundle:
    """Circle bundle over a closed genus-g surface with Euler number e <= -1."""

    genus: int
    euler: int

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValueError(f"genus must be nonnegative, got {self.genus}")
        if self.euler >= 0:
            raise ValueError(f"Euler number must be negative, got {self.euler}")

    @property
    def abs_e(self) -> int:
        return -self.euler

    @property
    def chi(self) -> int:
        """Euler characteristic of the base surface."""
        return 2 - 2 * self.genus

    @property
    def hyperbolic_count(self) -> int:
        """Number of hyperbolic orbits over the saddle points (2g)."""
        return 2 * self.genus


@dataclass(frozen=True)
class OrbitSet:
    """Multiplicity vector over the orbit alphabet (e+, h_1 .. h_2g, e-).

    ``m_hyp`` must have one entry per hyperbolic orbit of the owning bundle;
    the empty orbit set has every entry zero.
    """

    m_plus: int
    m_hyp: tuple[int, ...]
    m_minus: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "m_hyp", tuple(self.m_hyp))
        if self.m_plus < 0 or self.m_minus < 0 or any(m < 0 for m in self.m_hyp):
            raise ValueError("orbit multiplicities must be nonnegative")

    @classmethod
    def empty(cls, genus: int) -> "OrbitSet":
        return cls(0, (0,) * (2 * genus), 0)

    @property
    def total_multiplicity(self) -> int:
        """Total multiplicity M; the leading action term is 2M."""
        return self.m_plus + sum(self.m_hyp) + self.m_minus

    @property
    def is_empty(self) -> bool:
        return self.m_plus == 0 and self.m_minus == 0 and not any(self.m_hyp)

    def __add__(self, other: "OrbitSet") -> "OrbitSet":
        if len(self.m_hyp) != len(other.m_hyp):
            raise ValueError("cannot combine orbit sets over different alphabets")
        return OrbitSet(
            self.m_plus + other.m_plus,
            tuple(a + b for a, b in zip(self.m_hyp, other.m_hyp)),
            self.m_minus + other.m_minus,
        )


@dataclass(frozen=True)
class MorseProfile:
    """Critical values of the perturbing Morse function.

    Only the strict ordering h_min < saddles < h_max carries meaning; the
    default profile (0, 1/2, ..., 1/2, 1) is as good as any other.
    """

    h_min: Fraction
    h_saddle: tuple[Fraction, ...]
    h_max: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "h_min", Fraction(self.h_min))
        object.__setattr__(self, "h_saddle", tuple(Fraction(s) for s in self.h_saddle))
        object.__setattr__(self, "h_max", Fraction(self.h_max))
        if self.h_min >= self.h_max:
            raise ValueError("h_min must be strictly below h_max")
        for s in self.h_saddle:
            if not self.h_min < s < self.h_max:
                raise ValueError("saddle values must lie strictly between h_min and h_max")

    @classmethod
    def default(cls, genus: int) -> "MorseProfile":
        return cls(Fraction(0), (Fraction(1, 2),) * (2 * genus), Fraction(1))


@functools.total_ordering
@dataclass(frozen=True)
class ExactAction:
    """Action in the small-perturbation limit.

    ``leading`` is twice the total multiplicity; ``correction`` collects the
    critical-value contributions.  Lexicographic comparison of the pair
    agrees with the numeric order for all sufficiently small scales, so two
    actions with distinct leading terms compare by leading term alone.
    """

    leading: int
    correction: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "correction", Fraction(self.correction))
        if self.leading < 0:
            raise ValueError("leading action term must be nonnegative")

    def __lt__(self, other: "ExactAction") -> bool:
        return (self.leading, self.correction) < (other.leading, other.correction)

    def __add__(self, other: "ExactAction") -> "ExactAction":
        return ExactAction(self.leading + other.leading, self.correction + other.correction)


def check_orbit_shape(bundle: PrequantizationBundle, alpha: OrbitSet) -> None:
    """Reject orbit sets whose hyperbolic slot count does not match the bundle."""
    if len(alpha.m_hyp) != bundle.hyperbolic_count:
        raise ValueError(
            f"orbit set has {len(alpha.m_hyp)} hyperbolic slots, but a genus-"
            f"{bundle.genus} bundle has {bundle.hyperbolic_count}"
        )


def gamma_class(bundle: PrequantizationBundle, alpha: OrbitSet) -> int:
    """Residue of the orbit set in the torsion summand of first homology.

    Each fiber contributes 1 mod |e|, so the class is M mod |e|.
    """
    check_orbit_shape(bundle, alpha)
    return alpha.total_multiplicity % bundle.abs_e


def is_ech_generator(alpha: OrbitSet) -> bool:
    """True iff every hyperbolic multiplicity is 0 or 1."""
    return all(m <= 1 for m in alpha.m_hyp)


def action_of(alpha: OrbitSet, profile: MorseProfile) -> ExactAction:
    """Exact action of an orbit set for the given critical values.

    The leading term is 2M; the correction weights each orbit by the Morse
    value over its critical point.
    """
    if len(alpha.m_hyp) != len(profile.h_saddle):
        raise ValueError(
            f"orbit set has {len(alpha.m_hyp)} hyperbolic slots, profile has "
            f"{len(profile.h_saddle)} saddle values"
        )
    correction = alpha.m_plus * profile.h_max + alpha.m_minus * profile.h_min
    for m, s in zip(alpha.m_hyp, profile.h_saddle):
        if m:
            correction += m * s
    return ExactAction(2 * alpha.total_multiplicity, correction)
