"""K-semistability angle ranges for pairs (V, a*S).

V is a K-semistable Fano of dimension n and S a smooth divisor proportional
to -lambda * K_V. The question answered here: for which cone angles a is the
pair (V, a*S) K-semistable?

For 0 < lambda < 1 the answer is the closed interval [0, 1 - r/n] with
r = 1/lambda - 1; instability strictly past the endpoint is certified by the
delta invariant of the projective cone over S, which drops below 1 there.
For lambda >= 1 the answer contains [0, 1/lambda) with K-stability on the
open interval. Polystability and stability refinements carry extra
hypotheses, so they are reported as hypothesis strings, never as bare
claims.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bundle import DeltaBreakdown, DeltaKnowledge, FanoBase
from .cone import ConeBoundary, cone_delta
from .errors import DomainError
from .exactarith import Rational, RationalLike, format_rational, rational


@dataclass(frozen=True)
class DivisorPairSpec:
    """Input data: dimension n of V, proportionality lambda of S against
    -K_V, and the stability hypotheses the caller asserts about V and S."""

    n: int
    lam: Rational
    base_semistable: bool = True
    divisor_semistable: bool = True

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"n must be an integer >= 1, got {self.n}")
        object.__setattr__(self, "lam", rational(self.lam))
        if self.lam <= 0:
            raise DomainError(f"lambda must satisfy lambda > 0, got {self.lam}")


@dataclass(frozen=True)
class AngleInterval:
    """A semistable angle range [0, endpoint] or [0, endpoint).

    closed says whether the endpoint itself is included in the K-semistable
    set. Stability refinements on the open interval are carried in
    hypotheses as explicit conditional statements.
    """

    endpoint: Rational
    closed: bool
    hypotheses: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "endpoint": format_rational(self.endpoint),
            "semistable_closed": self.closed,
            "polystable_open_interval": True,
            "hypotheses": list(self.hypotheses),
        }


def optimal_angle_interval(spec: DivisorPairSpec) -> AngleInterval:
    """Optimal K-semistability angle range for 0 < lambda < 1.

    The range is exactly [0, 1 - r/n] with r = 1/lambda - 1; it is closed,
    and past the endpoint the pair is K-unstable (certified by
    cone_over_divisor_delta dropping below 1). K-polystability holds on the
    half-open interval [0, endpoint) under the stronger hypothesis that V
    and S are both K-polystable.
    """
    if spec.lam >= 1:
        raise DomainError(
            f"lambda must satisfy lambda < 1 here (use the lambda >= 1 range "
            f"operation otherwise), got {spec.lam}"
        )
    if not (spec.base_semistable and spec.divisor_semistable):
        raise DomainError(
            "hypotheses not met: V and S must both be asserted K-semistable"
        )
    r = 1 / spec.lam - 1
    endpoint = 1 - r / spec.n
    if endpoint < 0:
        raise DomainError(
            f"lambda must satisfy lambda >= 1/(n+1) for a K-semistable base, "
            f"got lambda={spec.lam} with n={spec.n}"
        )
    return AngleInterval(
        endpoint=endpoint,
        closed=True,
        hypotheses=(
            "V and S are K-semistable (asserted by the caller)",
            "K-semistability of (V, a*S) holds exactly for a in the closed "
            "interval [0, endpoint]",
            "K-polystability on [0, endpoint) additionally requires V and S "
            "K-polystable",
        ),
    )


def semistable_range_lambda_ge_1(n: int, lam: RationalLike) -> AngleInterval:
    """K-semistable angle range for lambda >= 1: the half-open [0, 1/lambda).

    The pair is K-stable on the open interval (0, 1/lambda); at lambda = 1
    the stability statement comes from a small-angle alpha-invariant bound
    interpolated toward the Calabi-Yau endpoint, with no claim about which
    uniform variant survives the interpolation.
    """
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be an integer >= 1, got {n}")
    ll = rational(lam)
    if ll < 1:
        raise DomainError(
            f"lambda must satisfy lambda >= 1 here (use the optimal-interval "
            f"operation otherwise), got {ll}"
        )
    hypotheses = [
        "V is K-semistable (asserted by the caller)",
        "K-semistability of (V, a*S) holds for a in the half-open interval "
        "[0, endpoint)",
    ]
    if ll > 1:
        hypotheses.append("K-stable on the open interval (0, endpoint)")
    else:
        hypotheses.append(
            "K-stable on the open interval (0, endpoint) per the interpolation "
            "argument from a small-angle alpha-invariant bound; no uniform "
            "variant is claimed"
        )
    return AngleInterval(endpoint=1 / ll, closed=False, hypotheses=tuple(hypotheses))


def cone_over_divisor_delta(
    n: int, r: RationalLike, a: RationalLike, delta_s: DeltaKnowledge
) -> DeltaBreakdown:
    """Delta invariant of the cone over the divisor S with angle boundary a.

    S has dimension n - 1, so this is cone_delta with the dimension shifted
    down by one and boundary c = a. Past the optimal endpoint a = 1 - r/n
    the infinity branch (n+1)(1-a)/(r+1-a) drops below 1, certifying
    K-instability; at the endpoint itself it equals 1 exactly, by the
    identity (n+1)(1-a) = r + 1 - a at a = 1 - r/n.
    """
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"n must be an integer >= 2 (S has dimension n-1), got {n}")
    return cone_delta(FanoBase(n - 1, rational(r), delta_s), ConeBoundary(rational(a)))
