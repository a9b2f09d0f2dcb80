"""Delta invariants of projective cones over Fano bases.

The geometry: V is a Fano base of dimension n with -K_V = r*L, and Y is the
projective cone over V with respect to L, with vertex blowup divisor V0 and
section at infinity Vinf. The pair (Y, c*Vinf) is the object of study. A
cone is the degenerate case of the projectivized bundle in which the zero
section contracts to the vertex: the fiber support interval becomes [0, B]
with B = r + 1 - c, the vertex blowup divisor has log discrepancy r, and
the infinity section has log discrepancy 1 - c. That substitution is
checked exactly by cone_bundle_consistency.

Two derived constructions are included: iterated cones over smooth
hypersurfaces, and cones over branched covers attached to hypersurfaces of
the shape x_{n+1}^k * x_{n+2}^{d-k} = g_d, where the slope r is derived
from the arithmetic data (n, k, d, l) rather than given.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from .bundle import (
    DeltaBreakdown,
    DeltaKnowledge,
    FanoBase,
    assemble_breakdown,
    centroid_phi,
)
from .errors import DomainError, InternalCheckError
from .exactarith import Rational, RationalLike, format_rational, rational

PROOF_FULL = "full"
PROOF_UPPER_BOUND = "upper-bound-only"


@dataclass(frozen=True)
class ConeBoundary:
    """Boundary coefficient c of c*Vinf, with 0 <= c < 1."""

    c: Rational = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "c", rational(self.c))
        if not (0 <= self.c < 1):
            raise DomainError(f"c must satisfy 0 <= c < 1, got {self.c}")


def cone_delta(base: FanoBase, bdry: ConeBoundary = ConeBoundary()) -> DeltaBreakdown:
    """Delta invariant of the cone pair (Y, c*Vinf) as a three-branch minimum.

    Branches, with B = r + 1 - c: base divisors give
    (n+2)*r*delta(V) / ((n+1)*B), the vertex blowup divisor V0 gives
    (n+2)*r / ((n+1)*B) (its log discrepancy is r), and the infinity section
    gives (n+2)*(1-c) / B.

    The value is flagged proof_coverage="upper-bound-only" when r > n + 1:
    there the closed form is only known to bound the delta invariant from
    above. For r <= n + 1 it is an equality and the flag says "full".
    """
    n, r, c = base.n, base.r, bdry.c
    B = r + 1 - c
    v0_branch = Fraction(n + 2, n + 1) * r / B
    vinf_branch = (n + 2) * (1 - c) / B
    breakdown = assemble_breakdown(v0_branch, v0_branch, vinf_branch, base.delta_v)
    return replace(
        breakdown,
        r_effective=r,
        proof_coverage=PROOF_FULL if r <= n + 1 else PROOF_UPPER_BOUND,
    )


@dataclass(frozen=True)
class ConsistencyReport:
    """Branch coefficients of the cone formula computed two ways.

    bundle_route holds (base coefficient, v0, vinf) obtained from the bundle
    centroid formulas under the degeneration substitution a = 1 - r,
    b = c (so the support interval is [0, r + 1 - c]) with the cone log
    discrepancies r for V0 and 1 - c for Vinf. cone_route holds the same
    triple straight from cone_delta's closed forms. The coefficients are
    delta-independent, so the comparison is meaningful for any knowledge of
    delta(V).
    """

    bundle_route: tuple[Rational, Rational, Rational]
    cone_route: tuple[Rational, Rational, Rational]

    @property
    def matches(self) -> bool:
        return self.bundle_route == self.cone_route

    def to_json_dict(self) -> dict:
        return {
            "bundle_route": [format_rational(x) for x in self.bundle_route],
            "cone_route": [format_rational(x) for x in self.cone_route],
            "matches": self.matches,
        }


def cone_bundle_consistency(base: FanoBase, c: RationalLike = 0) -> ConsistencyReport:
    """Check that the cone branch formulas are the bundle formulas under the
    degeneration substitution, as exact rationals.

    Substituting a = 1 - r and b = c into the bundle support interval gives
    A = 0 and B = r + 1 - c; the base coefficient becomes r / Phi(0, B, n),
    the vertex branch r / (Phi - 0), and the infinity branch
    (1 - c) / (B - Phi). Since Phi(0, B, n) = (n+1)*B/(n+2), these must
    reproduce the cone closed forms exactly.
    """
    cc = rational(c)
    if not (0 <= cc < 1):
        raise DomainError(f"c must satisfy 0 <= c < 1, got {cc}")
    n, r = base.n, base.r
    B = r + 1 - cc
    phi = centroid_phi(0, B, n)
    bundle_route = (r / phi, r / phi, (1 - cc) / (B - phi))

    cone_breakdown = cone_delta(
        FanoBase(n, r, DeltaKnowledge.exact(1)), ConeBoundary(cc)
    )
    cone_route = (
        cone_breakdown.base_branch,
        cone_breakdown.v0_branch,
        cone_breakdown.vinf_branch,
    )
    return ConsistencyReport(bundle_route, cone_route)


@dataclass(frozen=True)
class HypersurfaceConeSpec:
    """Iterated-cone input: a smooth degree-d hypersurface of dimension n in
    projective space (slope r0 = n + 2 - d), coned i times.

    delta_v0 is what is known about the delta invariant of the original
    hypersurface.
    """

    n: int
    d: int
    i: int
    delta_v0: DeltaKnowledge

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"n must be an integer >= 1, got {self.n}")
        if not isinstance(self.d, int) or not (2 <= self.d <= self.n + 1):
            raise DomainError(
                f"d must satisfy 2 <= d <= n+1, got d={self.d} with n={self.n}"
            )
        if not isinstance(self.i, int) or self.i < 0:
            raise DomainError(f"i must be an integer >= 0, got {self.i}")
        if not isinstance(self.delta_v0, DeltaKnowledge):
            raise TypeError("delta_v0 must be a DeltaKnowledge")

    @property
    def r0(self) -> int:
        return self.n + 2 - self.d


def iterated_hypersurface_chain(spec: HypersurfaceConeSpec) -> list[DeltaBreakdown]:
    """Step-wise composition: cone once per iteration, feeding each exact
    delta value into the next step's base.

    Step s goes from dimension n + s - 1 with slope r0 + s - 1 to dimension
    n + s with slope r0 + s. Every step yields an exact value (the section
    branches always undercut the base branch's lower bound), so knowledge
    never degrades along the chain.
    """
    if spec.i < 1:
        raise DomainError(f"iteration count must satisfy i >= 1, got {spec.i}")
    chain: list[DeltaBreakdown] = []
    knowledge = spec.delta_v0
    for step in range(spec.i):
        dim = spec.n + step
        slope = rational(spec.r0 + step)
        breakdown = cone_delta(FanoBase(dim, slope, knowledge))
        if breakdown.lower_bound_only:
            raise InternalCheckError(
                "cone step unexpectedly produced only a lower bound"
            )
        chain.append(breakdown)
        knowledge = DeltaKnowledge.exact(breakdown.value)
    return chain


def iterated_hypersurface_delta(spec: HypersurfaceConeSpec) -> Rational:
    """Delta invariant of the i-fold iterated cone over a degree-d
    hypersurface, computed by two independent routes that must agree.

    Route one telescopes the per-step factors into the closed form
    (n + 2 - d)(n + 1 + i) / ((n + 1)(n + 2 + i - d)) * min(delta0, 1).
    Route two composes cone_delta step by step. A mismatch raises
    InternalCheckError rather than trusting either route. The result is
    always < 1: coning strictly destabilizes.
    """
    if spec.i < 1:
        raise DomainError(f"iteration count must satisfy i >= 1, got {spec.i}")
    if spec.delta_v0.is_exact:
        capped = min(spec.delta_v0.value, Fraction(1))
    else:
        capped = Fraction(1)
    closed_form = (
        Fraction((spec.n + 2 - spec.d) * (spec.n + 1 + spec.i))
        / Fraction((spec.n + 1) * (spec.n + 2 + spec.i - spec.d))
        * capped
    )
    composed = iterated_hypersurface_chain(spec)[-1].value
    if closed_form != composed:
        raise InternalCheckError(
            f"iterated cone routes disagree: closed form {closed_form}, "
            f"composition {composed}"
        )
    return composed


@dataclass(frozen=True)
class BranchedConeSpec:
    """Branched-cover cone input (n, k, d, l) for hypersurfaces of the shape
    x_{n+1}^k * x_{n+2}^{d-k} = g_d in weighted coordinates.

    The slope of the associated pair is derived: r = (n+1)*k - (k-1)*d.
    Side conditions l < k, gcd(k, l) = 1, k | d*l - 1, and r > 0 are all
    checked at construction, each violation reported individually.
    """

    n: int
    k: int
    d: int
    l: int

    def __post_init__(self) -> None:
        for name, value in (("n", self.n), ("k", self.k), ("d", self.d), ("l", self.l)):
            if not isinstance(value, int) or value < 1:
                raise DomainError(f"{name} must be an integer >= 1, got {value}")
        if self.k < 2:
            raise DomainError(f"k must satisfy k >= 2, got {self.k}")
        failures = branched_side_condition_failures(self.n, self.k, self.d, self.l)
        if failures:
            raise DomainError("; ".join(failures))

    @property
    def r(self) -> int:
        return branched_slope(self.n, self.k, self.d)

    def side_conditions(self) -> tuple[str, ...]:
        """Human-readable record of the checked conditions (all hold)."""
        return (
            f"l < k: {self.l} < {self.k}",
            f"gcd(k, l) = 1: gcd({self.k}, {self.l}) = 1",
            f"k divides d*l - 1: {self.k} | {self.d * self.l - 1}",
            f"r = (n+1)k - (k-1)d > 0: r = {self.r}",
        )


def branched_slope(n: int, k: int, d: int) -> int:
    """Derived slope r = (n+1)*k - (k-1)*d of the branched construction."""
    return (n + 1) * k - (k - 1) * d


def branched_side_condition_failures(n: int, k: int, d: int, l: int) -> list[str]:
    """Every violated side condition of the branched construction, as
    constraint-naming messages; empty when (n, k, d, l) is valid."""
    failures: list[str] = []
    if not l < k:
        failures.append(f"side condition violated: l < k required, got l={l}, k={k}")
    if math.gcd(k, l) != 1:
        failures.append(
            f"side condition violated: gcd(k, l) = 1 required, got gcd({k}, {l}) = {math.gcd(k, l)}"
        )
    if (d * l - 1) % k != 0:
        failures.append(
            f"side condition violated: k must divide d*l - 1, got {k} does not divide {d * l - 1}"
        )
    r = branched_slope(n, k, d)
    if r <= 0:
        failures.append(
            f"side condition violated: r = (n+1)k - (k-1)d > 0 required, got r={r}"
        )
    return failures


def branched_cone_delta(
    spec: BranchedConeSpec, delta_pair: Optional[DeltaKnowledge] = None
) -> DeltaBreakdown:
    """Delta invariant of the cone attached to a branched hypersurface.

    The underlying pair has slope r = (n+1)*k - (k-1)*d and boundary-free
    cone shape (c = 0). delta_pair is what is known about the delta
    invariant of that pair; when omitted, it defaults to >= 1 in the large-
    degree window n + 1 <= d <= n + 2 (where the pair is K-semistable),
    and is required otherwise.
    """
    if delta_pair is None:
        if spec.n + 1 <= spec.d <= spec.n + 2:
            delta_pair = DeltaKnowledge.at_least_one()
        else:
            raise DomainError(
                "delta_pair is required when d <= n: no automatic semistability "
                f"guarantee for d={spec.d}, n={spec.n}"
            )
    breakdown = cone_delta(FanoBase(spec.n, rational(spec.r), delta_pair))
    return replace(breakdown, side_conditions=spec.side_conditions())
