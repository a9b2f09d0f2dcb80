"""Delta invariants of projectivized line-bundle compactifications over Fano bases.

The geometry: V is a Fano base of dimension n polarized by an ample line
bundle L with -K_V = r*L for a rational slope r > 0. Y is the P^1-bundle
obtained by projectivizing O + L^(-1) over V, carrying a zero section V0 and
an infinity section Vinf. The pair (Y, a*V0 + b*Vinf) is log Fano exactly on
the boundary domain validated here, and its delta invariant is the minimum
of three branch values: one for divisors pulled back from the base (the only
branch that needs the delta invariant of V itself), one for the zero
section, one for the infinity section.

All formulas reduce to the centroid of t on the fiber support interval
[A, B] = [r - (1 - a), r + (1 - b)] against the weight t^n, so everything is
an exact rational computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import DomainError
from .exactarith import Rational, RationalLike, format_rational, parse_rational, rational

MINIMIZER_BASE = "BaseDivisor"
MINIMIZER_V0 = "V0"
MINIMIZER_VINF = "Vinf"


@dataclass(frozen=True)
class DeltaKnowledge:
    """What is known about the delta invariant of the base.

    Either an exact rational value, or only the fact that it is at least 1
    (a K-semistable base). The latter is enough information whenever a
    section branch attains the minimum, which for cones is always the case.
    """

    value: Optional[Rational]

    @classmethod
    def exact(cls, value: RationalLike) -> "DeltaKnowledge":
        v = rational(value)
        if v < 0:
            raise DomainError(f"delta(V) must be >= 0, got {v}")
        return cls(v)

    @classmethod
    def at_least_one(cls) -> "DeltaKnowledge":
        return cls(None)

    @classmethod
    def parse(cls, text: str) -> "DeltaKnowledge":
        """Parse "ge1" (K-semistable, delta >= 1) or an exact rational."""
        if text.strip().lower() == "ge1":
            return cls.at_least_one()
        return cls.exact(parse_rational(text))

    @property
    def is_exact(self) -> bool:
        return self.value is not None

    def serialize(self) -> str:
        return "ge1" if self.value is None else format_rational(self.value)

    def __str__(self) -> str:
        return ">=1" if self.value is None else format_rational(self.value)


@dataclass(frozen=True)
class FanoBase:
    """Base data: dimension n >= 1, slope r > 0 with -K_V = r*L, and what is
    known about delta(V). The polarization volume L^n is normalized to 1 and
    never enters any formula."""

    n: int
    r: Rational
    delta_v: DeltaKnowledge

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"n must be an integer >= 1, got {self.n}")
        object.__setattr__(self, "r", rational(self.r))
        if self.r <= 0:
            raise DomainError(f"r must satisfy r > 0, got {self.r}")
        if not isinstance(self.delta_v, DeltaKnowledge):
            raise TypeError("delta_v must be a DeltaKnowledge")


@dataclass(frozen=True)
class BundleBoundary:
    """Boundary coefficients (a, b) of a*V0 + b*Vinf.

    Range validation depends on the slope r of the base, so it happens in
    boundary_interval rather than here.
    """

    a: Rational = field(default=Fraction(0))
    b: Rational = field(default=Fraction(0))

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", rational(self.a))
        object.__setattr__(self, "b", rational(self.b))


def boundary_interval(base: FanoBase, bdry: BundleBoundary) -> tuple[Rational, Rational]:
    """Validate the log Fano boundary domain and return the fiber support
    interval endpoints (A, B) = (r - (1 - a), r + (1 - b)).

    For r > 1 the valid domain is 0 <= a < 1; for 0 < r <= 1 positivity of
    the pair additionally forces a > 1 - r. In both regimes 0 <= b < 1.
    On this domain A > 0 and B > A automatically.
    """
    r, a, b = base.r, bdry.a, bdry.b
    if r > 1:
        if not (0 <= a < 1):
            raise DomainError(f"a must satisfy 0 <= a < 1 when r > 1, got a={a}")
    else:
        if not (1 - r < a < 1):
            raise DomainError(
                f"a must satisfy 1-r < a < 1 when r <= 1, got a={a} with r={r}"
            )
    if not (0 <= b < 1):
        raise DomainError(f"b must satisfy 0 <= b < 1, got b={b}")
    return r - (1 - a), r + (1 - b)


def centroid_phi(A: RationalLike, B: RationalLike, n: int) -> Rational:
    """Centroid of t on [A, B] against the weight t^n.

    Equals ((n+1)/(n+2)) * (B^(n+2) - A^(n+2)) / (B^(n+1) - A^(n+1)), i.e.
    the ratio of the exact integrals of t^(n+1) and t^n over [A, B], and
    always lies strictly between A and B.
    """
    a, b = rational(A), rational(B)
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be an integer >= 0, got {n}")
    if a < 0:
        raise DomainError(f"A must satisfy A >= 0, got {a}")
    if a >= b:
        raise DomainError(f"interval requires A < B, got A={a}, B={b}")
    return Fraction(n + 1, n + 2) * (b ** (n + 2) - a ** (n + 2)) / (b ** (n + 1) - a ** (n + 1))


def beta_zero(n: int, r: RationalLike) -> Rational:
    """Stability threshold of the zero section for the boundary-free bundle.

    The reciprocal of the expected vanishing order of the zero section,
    1 / (centroid_phi(r-1, r+1, n) - (r-1)). Strictly between 1/2 and 1 for
    every n >= 1 and r > 1.
    """
    rr = rational(r)
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be an integer >= 1, got {n}")
    if rr <= 1:
        raise DomainError(f"r must satisfy r > 1, got {rr}")
    return 1 / (centroid_phi(rr - 1, rr + 1, n) - (rr - 1))


def s_v0(base: FanoBase, bdry: BundleBoundary) -> Rational:
    """Expected vanishing order of the zero section: centroid - A. Always > 0."""
    A, B = boundary_interval(base, bdry)
    return centroid_phi(A, B, base.n) - A


def s_vinf(base: FanoBase, bdry: BundleBoundary) -> Rational:
    """Expected vanishing order of the infinity section: B - centroid. Always > 0."""
    A, B = boundary_interval(base, bdry)
    return B - centroid_phi(A, B, base.n)


@dataclass(frozen=True)
class DeltaBreakdown:
    """The three branch values of a delta formula, their minimum, and the
    divisor tags attaining it.

    base_branch is None when only delta(V) >= 1 is known (the branch value
    is then not a single rational). In that situation the result is still
    exact whenever min(v0, vinf) <= the base branch evaluated at delta = 1,
    since the actual base branch can only be larger; otherwise value holds
    the delta = 1 lower bound and lower_bound_only is True.

    The optional metadata fields are populated by the cone operations:
    r_effective echoes the slope the formula actually used (derived, for
    branched constructions), proof_coverage records whether the closed form
    is an identity or only an upper bound for the given slope, and
    side_conditions lists the arithmetic conditions checked for branched
    constructions.
    """

    base_branch: Optional[Rational]
    v0_branch: Rational
    vinf_branch: Rational
    value: Rational
    lower_bound_only: bool
    minimizers: tuple[str, ...]
    note: Optional[str] = None
    r_effective: Optional[Rational] = None
    proof_coverage: Optional[str] = None
    side_conditions: Optional[tuple[str, ...]] = None

    def to_json_dict(self) -> dict:
        payload: dict = {
            "branches": {
                "base": None if self.base_branch is None else format_rational(self.base_branch),
                "v0": format_rational(self.v0_branch),
                "vinf": format_rational(self.vinf_branch),
            },
            "value": format_rational(self.value),
            "lower_bound_only": self.lower_bound_only,
            "minimizers": list(self.minimizers),
        }
        if self.r_effective is not None:
            payload["r_effective"] = format_rational(self.r_effective)
        if self.proof_coverage is not None:
            payload["proof_coverage"] = self.proof_coverage
        if self.side_conditions is not None:
            payload["side_conditions"] = list(self.side_conditions)
        return payload


def assemble_breakdown(
    base_coefficient: Rational,
    v0_branch: Rational,
    vinf_branch: Rational,
    delta: DeltaKnowledge,
) -> DeltaBreakdown:
    """Combine branch values given what is known about delta(V).

    The base branch is base_coefficient * delta(V). With exact knowledge all
    three branches are rationals and the minimum is taken outright. With
    only delta(V) >= 1, the base branch is bounded below by
    base_coefficient, so when min(v0, vinf) <= base_coefficient that minimum
    is the exact value and the base divisor is excluded from the minimizer
    set (its branch can only be larger or equal, and equality would require
    the unknown delta(V) to be exactly 1).
    """
    if delta.is_exact:
        base_branch = base_coefficient * delta.value
        value = min(base_branch, v0_branch, vinf_branch)
        tags = tuple(
            tag
            for tag, branch in (
                (MINIMIZER_BASE, base_branch),
                (MINIMIZER_V0, v0_branch),
                (MINIMIZER_VINF, vinf_branch),
            )
            if branch == value
        )
        return DeltaBreakdown(base_branch, v0_branch, vinf_branch, value, False, tags)

    section_min = min(v0_branch, vinf_branch)
    if section_min <= base_coefficient:
        tags = tuple(
            tag
            for tag, branch in ((MINIMIZER_V0, v0_branch), (MINIMIZER_VINF, vinf_branch))
            if branch == section_min
        )
        return DeltaBreakdown(None, v0_branch, vinf_branch, section_min, False, tags)

    # Reachable only if the base branch at delta = 1 undercuts both section
    # branches, which cannot happen on the valid boundary domain; kept so the
    # contract is total.
    return DeltaBreakdown(
        None,
        v0_branch,
        vinf_branch,
        base_coefficient,
        True,
        (MINIMIZER_BASE,),
        note="indeterminate without an exact delta(V)",
    )


def bundle_delta(base: FanoBase, bdry: BundleBoundary = BundleBoundary()) -> DeltaBreakdown:
    """Delta invariant of (Y, a*V0 + b*Vinf) as a three-branch minimum.

    Branches: r * delta(V) / Phi for divisors pulled back from the base,
    (1 - a) / (Phi - A) for the zero section, (1 - b) / (B - Phi) for the
    infinity section, where Phi = centroid_phi(A, B, n).
    """
    A, B = boundary_interval(base, bdry)
    phi = centroid_phi(A, B, base.n)
    base_coefficient = base.r / phi
    v0_branch = (1 - bdry.a) / (phi - A)
    vinf_branch = (1 - bdry.b) / (B - phi)
    return assemble_breakdown(base_coefficient, v0_branch, vinf_branch, base.delta_v)


def smooth_threshold_relation(n: int, r: RationalLike, delta_v: RationalLike) -> Rational:
    """Boundary-free delta invariant in its two-branch threshold form.

    Returns min{ delta(V) * r * beta0 / (1 + beta0*(r - 1)), beta0 } with
    beta0 = beta_zero(n, r). Requires r > 1 and an exact delta(V). Agrees
    with bundle_delta at a = b = 0; the crossover between the two branches
    happens at delta(V) = 1/r + beta0*(1 - 1/r).
    """
    rr = rational(r)
    dv = rational(delta_v)
    if rr <= 1:
        raise DomainError(f"r must satisfy r > 1, got {rr}")
    if dv < 0:
        raise DomainError(f"delta(V) must be >= 0, got {dv}")
    b0 = beta_zero(n, rr)
    return min(dv * rr * b0 / (1 + b0 * (rr - 1)), b0)
