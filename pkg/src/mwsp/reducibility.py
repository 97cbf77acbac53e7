"""Merino-Welsh predicates and the replaceability test, in exact arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import ParamVec


@dataclass(frozen=True)
class MWStatus:
    tau: int
    alpha: int
    alphastar: int
    holds_multiplicative: bool
    holds_additive: bool
    holds_max: bool


def mw_status(tau: int, alpha: int, alphastar: int) -> MWStatus:
    if min(tau, alpha, alphastar) < 0:
        raise ValueError("counts must be nonnegative")
    return MWStatus(
        tau,
        alpha,
        alphastar,
        holds_multiplicative=alpha * alphastar >= tau * tau,
        holds_additive=alpha + alphastar >= 2 * tau,
        holds_max=max(alpha, alphastar) >= tau,
    )


def discriminant_nonpositive(tau: int, alpha: int, alphastar: int) -> bool:
    """Whether alpha*l^2 - 2*tau*l + alphastar >= 0 for every real l."""
    if min(tau, alpha, alphastar) < 0:
        raise ValueError("counts must be nonnegative")
    return 4 * tau * tau - 4 * alpha * alphastar <= 0


def replace_ratios(g: ParamVec, h: ParamVec) -> tuple[Fraction, Fraction, Fraction]:
    """The three ratios (t1, t2, t3) comparing g against a candidate h.

    A ratio whose denominator alpha2(h) or alphastar(h) is zero is dropped from
    its min, even if the numerator is positive.
    """
    if h.tau < 1 or h.tau2 < 1 or h.alpha < 1 or h.alpha2star < 1:
        raise ValueError(f"replacement candidate {tuple(h)} has a zero denominator")
    t1 = max(Fraction(g.tau, h.tau), Fraction(g.tau2, h.tau2))
    t2 = Fraction(g.alpha, h.alpha)
    if h.alpha2:
        t2 = min(t2, Fraction(g.alpha2, h.alpha2))
    t3 = Fraction(g.alpha2star, h.alpha2star)
    if h.alphastar:
        t3 = min(t3, Fraction(g.alphastar, h.alphastar))
    return t1, t2, t3


def replaces(g: ParamVec, h: ParamVec) -> bool:
    """True when g is shown replaceable by h: t1^2 <= t2 * t3."""
    t1, t2, t3 = replace_ratios(g, h)
    return t1 * t1 <= t2 * t3
