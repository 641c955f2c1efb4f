"""Traveling-wave model (ubar, F) for the moderate-amplitude equation.

A model is the singular-line value ubar together with the potential
polynomial F; the wave ODE is  u''(u - ubar) + (u')^2/2 + F'(u) = 0.
For the moderate-amplitude equation,

    F(u) = K u + (1-c)/28 u^2 + 1/14 u^3 - 1/28 u^4 + 3/70 u^5,
    ubar = -(1 + c)/14,

with wave speed c and integration constant K.  The parameter map
phi eliminates K in favor of the undisturbed water level s at infinity,
K = phi(c, s) = s(-3 s^3 + 2 s^2 - 3 s + c - 1)/14, which forces
F'(s) = 0 exactly.  Whether (s, 0) is the saddle or the center of the
phase plane is decided by the sign of F''(s) relative to the side of the
singular line; only the saddle choice keeps the meaning of s.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .ratpoly import BiPoly, Rational, RationalLike, UniPoly, rat


class SaddleRole(enum.Enum):
    SADDLE = "saddle"
    CENTER = "center"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class ParamPoint:
    c: Fraction
    s: Fraction

    @staticmethod
    def of(c: RationalLike, s: RationalLike) -> "ParamPoint":
        return ParamPoint(rat(c), rat(s))


@dataclass(frozen=True)
class WaveModel:
    """Pair (ubar, F); generic in deg F so the Camassa-Holm cubic fits too."""

    c: Fraction
    K: Fraction
    ubar: Fraction
    F: UniPoly

    @property
    def F1(self) -> UniPoly:
        return self.F.derivative()

    @property
    def F2(self) -> UniPoly:
        return self.F.derivative().derivative()

    def hamiltonian(self, u: RationalLike, v: RationalLike) -> Fraction:
        """H(u, v) = F(u) + v^2 (u - ubar) / 2, exactly."""
        u, v = rat(u), rat(v)
        return self.F(u) + v * v * (u - self.ubar) / 2

    def radicand(self, h: RationalLike, u: RationalLike) -> Fraction:
        """Exact v^2 on the level set h: 2 (h - F(u)) / (u - ubar)."""
        u = rat(u)
        if u == self.ubar:
            raise ZeroDivisionError("on the singular line")
        return 2 * (rat(h) - self.F(u)) / (u - self.ubar)


def build_from_cK(c: RationalLike, K: RationalLike) -> WaveModel:
    """Model with the exact quintic coefficients for speed c and constant K."""
    c, K = rat(c), rat(K)
    F = UniPoly(
        [0, K, (1 - c) / 28, Fraction(1, 14), Fraction(-1, 28), Fraction(3, 70)],
        "u",
    )
    return WaveModel(c=c, K=K, ubar=-(1 + c) / 14, F=F)


def phi(c: RationalLike, s: RationalLike) -> Fraction:
    """K = s(-3 s^3 + 2 s^2 - 3 s + c - 1)/14; makes F'(s) vanish."""
    c, s = rat(c), rat(s)
    return s * (-3 * s**3 + 2 * s**2 - 3 * s + c - 1) / 14


def saddle_role(model: WaveModel, s: RationalLike) -> SaddleRole:
    """Classify the critical point (s, 0): saddle iff F''(s) and s - ubar
    have opposite signs; degenerate on either boundary curve."""
    s = rat(s)
    f2 = model.F2(s)
    side = s - model.ubar
    if f2 == 0 or side == 0:
        return SaddleRole.DEGENERATE
    return SaddleRole.SADDLE if f2 * side < 0 else SaddleRole.CENTER


def build_from_cs(p: ParamPoint):
    """Model via K = phi(c, s), plus the role of (s, 0) in the phase plane."""
    model = build_from_cK(p.c, phi(p.c, p.s))
    return model, saddle_role(model, p.s)


def a1_value(c: RationalLike, s: RationalLike) -> Fraction:
    """c - 1 - 6s + 6s^2 - 12s^3; equals -14 F''(s)."""
    c, s = rat(c), rat(s)
    return c - 1 - 6 * s + 6 * s**2 - 12 * s**3


def a2_value(c: RationalLike, s: RationalLike) -> Fraction:
    """s + (1 + c)/14; equals s - ubar."""
    c, s = rat(c), rat(s)
    return s + (1 + c) / 14


# ---------------------------------------------------------------------------
# symbolic builders in (c, s): the classifier's identity suite works on these
# ---------------------------------------------------------------------------

CS = ("c", "s")


def cs_gens():
    return BiPoly.gens(CS)


def phi_sym() -> BiPoly:
    c, s = cs_gens()
    return (s * (-3 * s**3 + 2 * s**2 - 3 * s + c - 1)) * Fraction(1, 14)


def ubar_sym() -> BiPoly:
    c, _ = cs_gens()
    return (c + 1) * Fraction(-1, 14)


def f_coeffs_sym() -> list:
    """Coefficients of F(u) in u (low first) over Q[c, s], with K = phi."""
    c, _ = cs_gens()
    one = BiPoly.const(1, CS)
    return [
        BiPoly.const(0, CS),
        phi_sym(),
        (one - c) * Fraction(1, 28),
        one * Fraction(1, 14),
        one * Fraction(-1, 28),
        one * Fraction(3, 70),
    ]


def f1_coeffs_sym() -> list:
    return [e * k for k, e in enumerate(f_coeffs_sym())][1:]


def f2s_sym() -> BiPoly:
    """F''(s) as an element of Q[c, s] (u substituted by s)."""
    c, s = cs_gens()
    f2 = [e * k for k, e in enumerate(f1_coeffs_sym())][1:]
    out = BiPoly.const(0, CS)
    for k, e in enumerate(f2):
        out = out + e * s**k
    return out


def a1_sym() -> BiPoly:
    c, s = cs_gens()
    return c - 1 - 6 * s + 6 * s**2 - 12 * s**3


def a2_sym() -> BiPoly:
    c, s = cs_gens()
    return s + (c + 1) * Fraction(1, 14)
