"""Capacity sequences of model domains and embedding-obstruction checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bundles import InvariantViolation, PrequantizationBundle
from .spectrum import capacity_sphere, capacity_torus_bounds


@dataclass(frozen=True)
class CapacitySequence:
    """Nondecreasing sequence of exact capacities, indexed from k = 0."""

    values: tuple[Fraction, ...]
    label: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if not self.values or self.values[0] != 0:
            raise ValueError("a capacity sequence starts with value 0 at k = 0")
        for a, b in zip(self.values, self.values[1:]):
            if b < a:
                raise ValueError("capacity sequences are nondecreasing")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]


def ball_capacities(a, k_max: int) -> CapacitySequence:
    """Ball of size a: the value d*a occupies the d+1 indices of the d-th block."""
    a = Fraction(a)
    if a <= 0:
        raise ValueError("ball size must be positive")
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    values: list[Fraction] = []
    d = 0
    while len(values) <= k_max:
        values.extend([d * a] * (d + 1))
        d += 1
    return CapacitySequence(tuple(values[: k_max + 1]), f"ball:{a}")


def ellipsoid_capacities(a, b, k_max: int) -> CapacitySequence:
    """Ellipsoid with parameters (a, b): sorted values m*a + n*b with m, n >= 0.

    Generates every combination up to a cutoff, growing the cutoff until the
    prefix of length k_max + 1 is provably complete; no heap heuristics.
    """
    a = Fraction(a)
    b = Fraction(b)
    if a <= 0 or b <= 0:
        raise ValueError("ellipsoid parameters must be positive")
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    count = k_max + 1
    # the multiples of min(a, b) alone supply `count` values <= this target
    target = min(a, b) * k_max
    while True:
        vals: list[Fraction] = []
        for m in range(int(target / a) + 1):
            base = m * a
            for n in range(int((target - base) / b) + 1):
                vals.append(base + n * b)
        if len(vals) >= count:
            vals.sort()
            return CapacitySequence(tuple(vals[:count]), f"ellipsoid:{a},{b}")
        target = target * 2 if target > 0 else Fraction(1)


@dataclass(frozen=True)
class ObstructionResult:
    """Outcome of an elementwise capacity comparison."""

    obstructs: bool
    first_k: int | None
    source_value: Fraction | None
    target_value: Fraction | None


def obstructs_embedding(source: CapacitySequence, target: CapacitySequence) -> ObstructionResult:
    """True iff some source capacity exceeds the target capacity at the same index.

    Monotonicity of capacities under embeddings makes any such index an
    obstruction; the minimal one is reported with both values.
    """
    if len(source) != len(target):
        raise ValueError("capacity sequences must have equal length")
    for k, (s, t) in enumerate(zip(source.values, target.values)):
        if s > t:
            return ObstructionResult(True, k, s, t)
    return ObstructionResult(False, None, None, None)


@dataclass(frozen=True)
class GromovWidthReport:
    """Upper bounds for the Gromov width of the unit disk subbundle.

    ``disk_width_bound`` is the uniform bound 1.  It is asserted only for
    genus 0 and 1 (``genus_supported``); for higher genus the report carries
    the value but neither certifies it nor offers a best bound.
    """

    genus: int
    euler: int
    disk_width_bound: int
    genus_supported: bool
    capacity_c1: int | None
    best_bound: int | None


def gromov_width_report(bundle: PrequantizationBundle) -> GromovWidthReport:
    """Collect the available width bounds for the unit disk subbundle.

    The first capacity 2|e| is included for genus 0, and for genus 1 when
    |e| >= 2 (where the first torus capacity is exact).
    """
    capacity_c1: int | None = None
    if bundle.genus == 0:
        capacity_c1 = capacity_sphere(bundle.abs_e, 1)
    elif bundle.genus == 1 and bundle.abs_e >= 2:
        first = capacity_torus_bounds(bundle.abs_e, 1)
        if not first.exact:
            raise InvariantViolation(
                f"first torus capacity must be exact for |e|={bundle.abs_e} >= 2"
            )
        capacity_c1 = first.lower
    supported = bundle.genus <= 1
    best: int | None = None
    if supported:
        best = 1 if capacity_c1 is None else min(1, capacity_c1)
    return GromovWidthReport(
        genus=bundle.genus,
        euler=bundle.euler,
        disk_width_bound=1,
        genus_supported=supported,
        capacity_c1=capacity_c1,
        best_bound=best,
    )
