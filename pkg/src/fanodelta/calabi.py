"""Momentum-profile calculus for the Calabi ansatz on the projectivized
bundle, reduced to exact one-variable polynomial identities.

A rotationally symmetric Kaehler metric on the bundle is encoded by a
momentum profile phi(tau) on the fiber support interval [r-1, r+1]. Writing
N(tau) = tau^n * phi(tau), the twisted constant-scalar-curvature equation
with parameter beta linearizes to an ODE whose solution is the explicit
polynomial

    N(tau) = -(beta/(n+2)) tau^(n+2) + c1 tau^(n+1) + c2

with constants c1, c2 fixed by vanishing at both endpoints. Everything
downstream (edge cone angles, the twisted Ricci lower bound, the Futaki
invariant) becomes an exact statement about N and its derivatives, which is
what this module verifies and evaluates.

Normalization: the polarization volume is 1 and all 2*pi factors are
dropped, so every identity is an identity of rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .bundle import beta_zero
from .errors import DomainError, InternalCheckError
from .exactarith import Polynomial, Rational, RationalLike, rational


@dataclass(frozen=True)
class CalabiProfile:
    """Solved momentum profile: dimension n, slope r, twist beta, the two
    integration constants, and the numerator polynomial N = tau^n * phi.

    Invariants established by solve_profile and re-checkable exactly:
    N vanishes at both endpoints r-1 and r+1, the ODE residual is the zero
    polynomial, and phi > 0 on the open interval.
    """

    n: int
    r: Rational
    beta: Rational
    c1: Rational
    c2: Rational
    numerator: Polynomial

    def __post_init__(self) -> None:
        for field in ("r", "beta", "c1", "c2"):
            object.__setattr__(self, field, rational(getattr(self, field)))

    def phi(self, tau: RationalLike) -> Rational:
        """Exact profile value phi(tau) = N(tau) / tau^n."""
        t = rational(tau)
        if t <= 0:
            raise DomainError(f"phi is defined for tau > 0, got {t}")
        return self.numerator(t) / t**self.n

    def phi_prime(self, tau: RationalLike) -> Rational:
        """Exact derivative phi'(tau) = (tau*N'(tau) - n*N(tau)) / tau^(n+1)."""
        t = rational(tau)
        if t <= 0:
            raise DomainError(f"phi' is defined for tau > 0, got {t}")
        return (t * self.numerator.derivative()(t) - self.n * self.numerator(t)) / t ** (
            self.n + 1
        )


def solve_profile(n: int, r: RationalLike, beta: RationalLike) -> CalabiProfile:
    """Solve the twisted momentum ODE in closed form.

    The constants are forced by N(r-1) = N(r+1) = 0:

        c1 = (beta/(n+2)) * ((r+1)^(n+2) - (r-1)^(n+2)) / P
        c2 = -(2*beta/(n+2)) * (r^2 - 1)^(n+1) / P

    with P = (r+1)^(n+1) - (r-1)^(n+1). Both endpoint values and the ODE
    residual are then verified exactly before the profile is returned.
    """
    rr, bb = rational(r), rational(beta)
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be an integer >= 1, got {n}")
    if rr <= 1:
        raise DomainError(f"r must satisfy r > 1, got {rr}")
    if bb <= 0:
        raise DomainError(f"beta must satisfy beta > 0, got {bb}")

    p_const = (rr + 1) ** (n + 1) - (rr - 1) ** (n + 1)
    c1 = bb / (n + 2) * ((rr + 1) ** (n + 2) - (rr - 1) ** (n + 2)) / p_const
    c2 = -2 * bb / (n + 2) * (rr * rr - 1) ** (n + 1) / p_const

    numerator = (
        Polynomial.monomial(n + 2, -bb / (n + 2))
        + Polynomial.monomial(n + 1, c1)
        + Polynomial.constant(c2)
    )
    profile = CalabiProfile(n=n, r=rr, beta=bb, c1=c1, c2=c2, numerator=numerator)

    if numerator(rr - 1) != 0 or numerator(rr + 1) != 0:
        raise InternalCheckError("profile numerator fails to vanish at an endpoint")
    if not ode_residual(profile).is_zero:
        raise InternalCheckError("profile fails the momentum ODE identically")
    return profile


def ode_residual(profile: CalabiProfile) -> Polynomial:
    """Numerator polynomial of -(n*phi/tau + phi')' - beta.

    Clearing the tau^(n+1) denominator, the residual is
    -(tau*N''(tau) - n*N'(tau)) - beta*tau^(n+1); the profile solves the
    ODE exactly when this polynomial is identically zero.
    """
    N = profile.numerator
    t = Polynomial.monomial(1)
    return -(t * N.derivative().derivative() - profile.n * N.derivative()) - Polynomial.monomial(
        profile.n + 1, profile.beta
    )


def edge_angles(profile: CalabiProfile) -> tuple[Rational, Rational]:
    """Cone angles (beta1, beta2) of the metric along the two sections.

    beta1 = phi'(r-1) and beta2 = -phi'(r+1), computed by exact
    differentiation of the profile and cross-checked against the closed
    forms beta/beta0 and beta*(2*beta0 - 1)/beta0. The two routes must
    agree exactly; a mismatch is an internal error, not bad input.
    """
    b0 = beta_zero(profile.n, profile.r)
    beta1_direct = profile.phi_prime(profile.r - 1)
    beta2_direct = -profile.phi_prime(profile.r + 1)
    beta1_closed = profile.beta / b0
    beta2_closed = profile.beta * (2 * b0 - 1) / b0
    if (beta1_direct, beta2_direct) != (beta1_closed, beta2_closed):
        raise InternalCheckError(
            f"edge angle routes disagree: differentiation gives "
            f"({beta1_direct}, {beta2_direct}), closed forms give "
            f"({beta1_closed}, {beta2_closed})"
        )
    return beta1_closed, beta2_closed


def ricci_bound_margin(profile: CalabiProfile, mu: RationalLike) -> Rational:
    """Constant margin of the twisted Ricci lower bound.

    Returns mu - beta/(r*beta0) - beta*(1 - 1/r). The pointwise bound
    mu - n*phi/(r*tau) - phi'/r - (beta/r)*tau >= 0 on [r-1, r+1] holds with
    equality of the left side to this constant (see
    ricci_pointwise_residual), so the bound holds exactly when the margin is
    nonnegative, i.e. when beta <= mu*beta0 / (1/r + beta0*(1 - 1/r)).
    """
    m = rational(mu)
    if m <= 0:
        raise DomainError(f"mu must satisfy mu > 0, got {m}")
    b0 = beta_zero(profile.n, profile.r)
    return m - profile.beta / (profile.r * b0) - profile.beta * (1 - 1 / profile.r)


def ricci_pointwise_residual(profile: CalabiProfile, mu: RationalLike) -> Polynomial:
    """Polynomial certificate that the Ricci bound's left side is constant.

    The claim: mu - n*phi/(r*tau) - phi'/r - (beta/r)*tau equals
    ricci_bound_margin identically in tau. Since n*phi/tau + phi' =
    N'(tau)/tau^n, clearing r*tau^n turns the claim into the polynomial
    identity

        r*mu*tau^n - N'(tau) - beta*tau^(n+1) - r*margin*tau^n == 0,

    and this function returns that left side. The zero polynomial certifies
    the bound pointwise on the whole interval with margin as the exact gap.
    """
    m = rational(mu)
    margin = ricci_bound_margin(profile, m)
    r, n = profile.r, profile.n
    return (
        Polynomial.monomial(n, r * m)
        - profile.numerator.derivative()
        - Polynomial.monomial(n + 1, profile.beta)
        - Polynomial.monomial(n, r * margin)
    )


def verify_positive_interior(profile: CalabiProfile) -> bool:
    """Exact proof that phi > 0 on the open interval (r-1, r+1).

    Method (unimodality certificate, no floating point): N'(tau) factors
    exactly as tau^n * ((n+1)*c1 - beta*tau), a polynomial identity checked
    here. The linear factor is strictly decreasing, and the sign checks
    N'(r-1) > 0 > N'(r+1) place its unique root strictly inside the
    interval. Hence N strictly increases then strictly decreases on
    [r-1, r+1]; since it vanishes at both endpoints it is positive between
    them, and phi = N/tau^n > 0 there as well.
    """
    n, r = profile.n, profile.r
    factored = Polynomial.monomial(n) * Polynomial(
        [(n + 1) * profile.c1, -profile.beta]
    )
    if factored != profile.numerator.derivative():
        raise InternalCheckError("numerator derivative fails its factored form")
    n_prime = profile.numerator.derivative()
    if not (n_prime(r - 1) > 0 and n_prime(r + 1) < 0):
        raise InternalCheckError(
            "profile is not unimodal on the interval; positivity unproven"
        )
    if profile.numerator(r - 1) != 0 or profile.numerator(r + 1) != 0:
        raise InternalCheckError("numerator fails endpoint vanishing")
    return True


@dataclass(frozen=True)
class AdmissibleProfile:
    """Profile numerator satisfying the smooth-metric boundary conditions:
    phi vanishes at both endpoints with phi'(r-1) = 1 and phi'(r+1) = -1,
    equivalently N(r-1) = N(r+1) = 0, N'(r-1) = (r-1)^n,
    N'(r+1) = -(r+1)^n. Construction validates all four exactly."""

    n: int
    r: Rational
    numerator: Polynomial

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"n must be an integer >= 1, got {self.n}")
        object.__setattr__(self, "r", rational(self.r))
        if self.r <= 1:
            raise DomainError(f"r must satisfy r > 1, got {self.r}")
        failures = admissibility_failures(self.n, self.r, self.numerator)
        if failures:
            raise DomainError("; ".join(failures))


def admissibility_failures(n: int, r: RationalLike, numerator: Polynomial) -> list[str]:
    """Every violated admissibility condition, as constraint-naming
    messages; empty when the numerator is admissible for (n, r)."""
    rr = rational(r)
    lo, hi = rr - 1, rr + 1
    n_prime = numerator.derivative()
    checks = (
        ("N(r-1) = 0 (phi vanishes at the inner edge)", numerator(lo), Fraction(0)),
        ("N(r+1) = 0 (phi vanishes at the outer edge)", numerator(hi), Fraction(0)),
        ("N'(r-1) = (r-1)^n (edge slope phi'(r-1) = 1)", n_prime(lo), lo**n),
        ("N'(r+1) = -(r+1)^n (edge slope phi'(r+1) = -1)", n_prime(hi), -(hi**n)),
    )
    return [
        f"admissibility violated: {label} requires {expected}, got {actual}"
        for label, actual, expected in checks
        if actual != expected
    ]


def hermite_admissible_profile(n: int, r: RationalLike) -> AdmissibleProfile:
    """The minimal-degree admissible numerator: the cubic-type Hermite
    interpolant matching zero values and the required slopes at both
    endpoints,

        N(tau) = (r-1)^n (tau-(r-1)) (tau-(r+1))^2 / 4
               - (r+1)^n (tau-(r-1))^2 (tau-(r+1)) / 4.
    """
    rr = rational(r)
    lo, hi = rr - 1, rr + 1
    left = Polynomial([-lo, 1])
    right = Polynomial([-hi, 1])
    numerator = (lo**n * left * right * right - hi**n * left * left * right) * Fraction(
        1, 4
    )
    return AdmissibleProfile(n=n, r=rr, numerator=numerator)


def perturbed_admissible_profile(
    base: AdmissibleProfile, scale: RationalLike, weight: Union[Polynomial, None] = None
) -> AdmissibleProfile:
    """A distinct admissible profile: add scale * weight(tau) * bump(tau)
    where bump = (tau-(r-1))^2 (tau-(r+1))^2 vanishes to second order at
    both endpoints, preserving all four admissibility conditions."""
    lo, hi = base.r - 1, base.r + 1
    bump = Polynomial([-lo, 1]) ** 2 * Polynomial([-hi, 1]) ** 2
    if weight is None:
        weight = Polynomial.constant(1)
    return AdmissibleProfile(
        n=base.n, r=base.r, numerator=base.numerator + rational(scale) * weight * bump
    )


def futaki_integrand(n: int, r: RationalLike, numerator: Polynomial) -> Polynomial:
    """Fiber-reduced integrand of the Futaki invariant.

    After integrating out the base (scalar curvature integral n * r^n,
    volume r^n, both exact under the normalization), the invariant is the
    integral over [r-1, r+1] of

        (n+1) * (n*r*tau^n - tau*N''(tau) - (n+1)*tau^(n+1)).
    """
    rr = rational(r)
    t = Polynomial.monomial(1)
    return (n + 1) * (
        Polynomial.monomial(n, n * rr)
        - t * numerator.derivative().derivative()
        - Polynomial.monomial(n + 1, n + 1)
    )


def futaki_invariant(
    n: int, r: RationalLike, profile: Union[AdmissibleProfile, Polynomial]
) -> Rational:
    """Futaki invariant of the fiberwise scaling field, as an exact integral.

    The profile must be admissible; violations raise a DomainError listing
    each failed condition. The value depends only on the boundary data (an
    integration by parts moves every profile term to the endpoints), so it
    is the same rational for every admissible profile; that independence is
    a tested property, not an assumption used here.
    """
    rr = rational(r)
    numerator = profile.numerator if isinstance(profile, AdmissibleProfile) else profile
    failures = admissibility_failures(n, rr, numerator)
    if failures:
        raise DomainError("; ".join(failures))
    return futaki_integrand(n, rr, numerator).integrate(rr - 1, rr + 1)


def futaki_closed_form(n: int, r: RationalLike) -> Rational:
    """Boundary-data evaluation of the same invariant:
    (1/beta0 - 1) * ((r+1)^(n+1) - (r-1)^(n+1)). Always positive, since
    beta0 < 1."""
    rr = rational(r)
    return (1 / beta_zero(n, rr) - 1) * ((rr + 1) ** (n + 1) - (rr - 1) ** (n + 1))
