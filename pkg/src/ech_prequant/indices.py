"""Index formulas: ECH index, Fredholm index, relative index, grading, partitions.

Every formula here is a closed form in the multiplicities and the degree of
the relative class, evaluated exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bundles import OrbitSet, PrequantizationBundle, check_orbit_shape, gamma_class

L_POSITIVE_ELLIPTIC = "L-positive-elliptic"
L_NEGATIVE_ELLIPTIC = "L-negative-elliptic"
POSITIVE_HYPERBOLIC = "positive-hyperbolic"

ORBIT_KINDS = frozenset({L_POSITIVE_ELLIPTIC, L_NEGATIVE_ELLIPTIC, POSITIVE_HYPERBOLIC})


@dataclass(frozen=True)
class CurveEndData:
    """Topological data of a curve: genus, end counts, total multiplicity, degree.

    ``h_ends`` counts ends at hyperbolic orbits and ``eplus_ends`` ends at
    covers of the elliptic orbit over the maximum.  ``M`` is the total
    multiplicity of the asymptotic orbit set and ``d`` the degree of the
    relative class.  Degenerate data with M = 0 is accepted: the index
    formula is total even though such input lies outside the geometric
    hypotheses.
    """

    genus_c: int
    h_ends: int
    eplus_ends: int
    M: int
    d: int

    def __post_init__(self) -> None:
        if min(self.genus_c, self.h_ends, self.eplus_ends, self.M) < 0:
            raise ValueError("curve data must be nonnegative (the degree may be any integer)")
        if self.eplus_ends + self.h_ends > self.M:
            raise ValueError("each end carries multiplicity >= 1, so end counts cannot exceed M")


def ech_index(bundle: PrequantizationBundle, alpha: OrbitSet, d: int) -> int:
    """ECH index of the relative class shifted by d copies of the zero section.

    Closed form M + m+ - m- + 2dM + d^2 e + d e + d chi with e the (negative)
    Euler number.  Negative d is legal input.
    """
    check_orbit_shape(bundle, alpha)
    m = alpha.total_multiplicity
    e = bundle.euler
    return m + alpha.m_plus - alpha.m_minus + 2 * d * m + d * d * e + d * e + d * bundle.chi


def index_ambiguity(bundle: PrequantizationBundle, alpha: OrbitSet, z_alpha_index: int, d: int) -> int:
    """Shift a base index by the ambiguity of adding d zero-section classes.

    With ``z_alpha_index = ech_index(bundle, alpha, 0)`` this reproduces
    ``ech_index(bundle, alpha, d)`` exactly.
    """
    check_orbit_shape(bundle, alpha)
    e = bundle.euler
    shift = 2 * d * alpha.total_multiplicity + d * bundle.chi + d * e + d * d * e
    return z_alpha_index + shift


def fredholm_index(bundle: PrequantizationBundle, curve: CurveEndData) -> int:
    """Expected dimension of the moduli space for the given curve data."""
    e = bundle.euler
    return (
        2 * curve.genus_c
        - 2
        + curve.h_ends
        + 2 * curve.eplus_ends
        + 2 * curve.M
        + 2 * curve.d * bundle.chi
        + 2 * curve.d * e
    )


def two_i_minus_ind(bundle: PrequantizationBundle, alpha: OrbitSet, d: int, curve: CurveEndData) -> int:
    """Evaluate 2*(ECH index) - (Fredholm index) from the end data alone.

    Preconditions: the curve carries the full multiplicity of ``alpha``
    (curve.M == M), its degree matches ``d``, and every hyperbolic end is
    simple (curve.h_ends equals the summed hyperbolic multiplicity).
    """
    check_orbit_shape(bundle, alpha)
    if curve.M != alpha.total_multiplicity:
        raise ValueError("curve multiplicity must equal the orbit set multiplicity")
    if curve.d != d:
        raise ValueError("curve degree must match the relative-class degree")
    if curve.h_ends != sum(alpha.m_hyp):
        raise ValueError("hyperbolic ends must be simple: h_ends must equal the hyperbolic multiplicity")
    abs_e = bundle.abs_e
    return (
        2 * alpha.m_plus
        - 2 * alpha.m_minus
        + 4 * d * curve.M
        - 2 * d * d * abs_e
        + 2
        - 2 * curve.genus_c
        - curve.h_ends
        - 2 * curve.eplus_ends
    )


def relative_index(bundle: PrequantizationBundle, alpha: OrbitSet, beta: OrbitSet) -> int:
    """Index difference between two orbit sets in the same homology class.

    The second orbit set is anchored at its fiber class; the difference is
    invariant under a common shift, so this anchor is a free normalization.
    """
    check_orbit_shape(bundle, alpha)
    check_orbit_shape(bundle, beta)
    diff = alpha.total_multiplicity - beta.total_multiplicity
    if diff % bundle.abs_e:
        raise ValueError(
            "orbit sets lie in different homology classes: multiplicities "
            f"{alpha.total_multiplicity} and {beta.total_multiplicity} differ mod {bundle.abs_e}"
        )
    d_alpha = diff // bundle.abs_e
    return ech_index(bundle, alpha, d_alpha) - ech_index(bundle, beta, 0)


def grading(bundle: PrequantizationBundle, alpha: OrbitSet) -> int:
    """Absolute grading of an orbit set in the trivial homology class.

    Requires M divisible by |e|.  With d = M/|e| the closed form is
    d^2 |e| + m+ - m- + d chi, which equals the index relative to the empty
    orbit set.
    """
    residue = gamma_class(bundle, alpha)
    if residue:
        raise ValueError(
            f"grading is defined only in the trivial class; this orbit set has residue {residue}"
        )
    d = alpha.total_multiplicity // bundle.abs_e
    return d * d * bundle.abs_e + alpha.m_plus - alpha.m_minus + d * bundle.chi


def partition_of(kind: str, m: int) -> list[int]:
    """End-multiplicity partition imposed on an index-minimal curve.

    A stack of multiplicity m over one orbit breaks into simple ends, except
    at an L-negative elliptic orbit where it stays a single end of
    multiplicity m.
    """
    if kind not in ORBIT_KINDS:
        raise ValueError(f"unknown orbit kind {kind!r}; expected one of {sorted(ORBIT_KINDS)}")
    if m <= 0:
        raise ValueError("multiplicity must be positive")
    if kind == L_NEGATIVE_ELLIPTIC:
        return [m]
    return [1] * m
